#include "blanc/series.hpp"

#include <algorithm>
#include <string>

namespace blanc {

BlancmangeSpec BlancmangeSpec::make(Generator gen, std::int64_t c) {
  if (c < 1) {
    throw Error(Errc::invalid_argument,
                "dilation multiplier c must be >= 1, got " + std::to_string(c));
  }
  return BlancmangeSpec(std::move(gen), c);
}

BAdicPoint BAdicPoint::make(const BlancmangeSpec& spec, BigInt j, int m) {
  if (m < 0) throw Error(Errc::invalid_argument, "lattice level must be >= 0");
  const BigInt b(static_cast<long>(spec.b()));
  while (m > 0 && mpz_divisible_p(j.get_mpz_t(), b.get_mpz_t())) {
    j /= b;
    --m;
  }
  return BAdicPoint(std::move(j), m);
}

std::optional<BAdicPoint> BAdicPoint::from_rational(const BlancmangeSpec& spec,
                                                    const Rational& t, int max_level) {
  const BigInt den = t.denominator();
  BigInt scale(static_cast<long>(spec.p()));
  const BigInt b(static_cast<long>(spec.b()));
  for (int m = 0; m <= max_level; ++m) {
    if (mpz_divisible_p(scale.get_mpz_t(), den.get_mpz_t())) {
      BigInt j = t.numerator() * (scale / den);
      return BAdicPoint(std::move(j), m);
    }
    scale *= b;
  }
  return std::nullopt;
}

Rational BAdicPoint::value(const BlancmangeSpec& spec) const {
  return Rational(j_, BigInt(static_cast<long>(spec.p())) *
                          ipow(spec.b(), static_cast<unsigned>(m_)));
}

std::string BAdicPoint::lattice_str(const BlancmangeSpec& spec) const {
  return j_.get_str() + "/(" + std::to_string(spec.p()) + "*" + std::to_string(spec.b()) +
         "^" + std::to_string(m_) + ")";
}

Rational partial_sum(const BlancmangeSpec& spec, int n, const Rational& t) {
  if (n < 0) throw Error(Errc::invalid_argument, "partial sum order must be >= 0");
  const Rational b(spec.b());
  Rational sum(0);
  Rational x = frac_mod1(t);  // b^k t mod 1
  Rational weight(1);         // b^-k
  for (int k = 0; k < n; ++k) {
    sum += eval_s(spec.gen(), x) * weight;
    x = frac_mod1(x * b);
    weight /= b;
  }
  return sum;
}

Rational tail_bound(const BlancmangeSpec& spec, int n) {
  if (n < 0) throw Error(Errc::invalid_argument, "tail index must be >= 0");
  const std::int64_t b = spec.b();
  const Rational head = sup_norm(spec.gen()).value * Rational(b) / Rational(b - 1);
  return head / Rational(ipow(b, static_cast<unsigned>(n)));
}

namespace {

// Walks s_k(j/(p b^m)) for k = 0, 1, ... using only integer residues:
// b^k t mod 1 = x_k / (p b^m) with x_{k+1} = b x_k mod (p b^m).
class LatticeWalk {
 public:
  LatticeWalk(const BlancmangeSpec& spec, const BAdicPoint& pt)
      : gen_(spec.gen()),
        b_(static_cast<long>(spec.b())),
        level_scale_(ipow(spec.b(), static_cast<unsigned>(pt.m()))),
        modulus_(BigInt(static_cast<long>(spec.p())) * level_scale_),
        last_(pt.m()) {
    mpz_fdiv_r(x_.get_mpz_t(), pt.j().get_mpz_t(), modulus_.get_mpz_t());
  }

  /// Summands with index beyond this vanish identically.
  int last_nonzero_index() const { return last_; }

  /// s(b^k t) for the current k, then advances k.
  Rational next_s() {
    BigInt piece;
    BigInt offset;
    mpz_fdiv_qr(piece.get_mpz_t(), offset.get_mpz_t(), x_.get_mpz_t(),
                level_scale_.get_mpz_t());
    const std::int64_t i = piece.get_si();
    const Rational& left = gen_.vertex(i);
    const Rational& right = gen_.vertices()[static_cast<std::size_t>(i) + 1];
    Rational value = left;
    if (offset != 0) value += Rational(offset, level_scale_) * (right - left);
    x_ *= b_;
    mpz_fdiv_r(x_.get_mpz_t(), x_.get_mpz_t(), modulus_.get_mpz_t());
    return value;
  }

 private:
  const Generator& gen_;
  BigInt b_;
  BigInt level_scale_;
  BigInt modulus_;
  BigInt x_;
  int last_;
};

}  // namespace

Rational eval_exact_badic(const BlancmangeSpec& spec, const BAdicPoint& pt) {
  LatticeWalk walk(spec, pt);
  const Rational b(spec.b());
  Rational sum(0);
  Rational weight(1);
  for (int k = 0; k <= walk.last_nonzero_index(); ++k) {
    sum += walk.next_s() * weight;
    weight /= b;
  }
  return sum;
}

std::vector<Rational> partial_sums_badic(const BlancmangeSpec& spec, const BAdicPoint& pt,
                                         std::span<const int> orders) {
  int max_order = 0;
  for (int n : orders) {
    if (n < 0) throw Error(Errc::invalid_argument, "partial sum order must be >= 0");
    max_order = std::max(max_order, n);
  }
  LatticeWalk walk(spec, pt);
  const int terms = std::min(max_order, walk.last_nonzero_index() + 1);
  // prefix[n] = B_n(t) for n <= terms; beyond that B_n = B_terms.
  std::vector<Rational> prefix(static_cast<std::size_t>(terms) + 1);
  const Rational b(spec.b());
  Rational weight(1);
  for (int k = 0; k < terms; ++k) {
    prefix[static_cast<std::size_t>(k) + 1] = prefix[static_cast<std::size_t>(k)] + walk.next_s() * weight;
    weight /= b;
  }
  std::vector<Rational> out;
  out.reserve(orders.size());
  for (int n : orders) out.push_back(prefix[static_cast<std::size_t>(std::min(n, terms))]);
  return out;
}

SeriesValue eval_enclosure(const BlancmangeSpec& spec, const Rational& t, const Rational& eps,
                           int term_cap) {
  if (eps.sign() <= 0) {
    throw Error(Errc::invalid_argument, "tolerance must be > 0, got " + eps.str());
  }
  const Rational b(spec.b());
  int n = 0;
  Rational tail = tail_bound(spec, 0);
  while (tail >= eps) {
    ++n;
    tail /= b;
    if (n > term_cap) {
      throw Error(Errc::term_cap_exceeded,
                  "tolerance " + eps.str() + " needs more than " + std::to_string(term_cap) +
                      " terms");
    }
  }
  const Rational center = partial_sum(spec, n, t);
  return {t, n, Enclosure{center - tail, center + tail}};
}

Rational functional_eq_residual(const BlancmangeSpec& spec, int n, const BAdicPoint& pt) {
  if (n < 0) throw Error(Errc::invalid_argument, "order must be >= 0");
  const Rational t = pt.value(spec);
  const BigInt scale = ipow(spec.b(), static_cast<unsigned>(n));
  const BAdicPoint dilated = BAdicPoint::make(spec, pt.j() * scale, pt.m());
  const Rational lhs = partial_sum(spec, n, t) +
                       eval_exact_badic(spec, dilated) / Rational(scale);
  return lhs - eval_exact_badic(spec, pt);
}

}  // namespace blanc
