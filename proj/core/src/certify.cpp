#include "blanc/certify.hpp"

#include <string>

namespace blanc {

Interval Interval::make(Rational lo, Rational hi) {
  if (!(lo < hi)) {
    throw Error(Errc::empty_interval, "empty interval (" + lo.str() + ", " + hi.str() + ")");
  }
  return {std::move(lo), std::move(hi)};
}

namespace {

BigInt level_denominator(const BlancmangeSpec& spec, int m) {
  return BigInt(static_cast<long>(spec.p())) * ipow(spec.b(), static_cast<unsigned>(m));
}

// Smallest r in [1, b) maximizing |v_{r mod p}|.
std::int64_t best_middle_offset(const BlancmangeSpec& spec) {
  std::int64_t best = 1;
  Rational best_mag = abs(spec.gen().vertex(1));
  for (std::int64_t r = 2; r < spec.b(); ++r) {
    Rational mag = abs(spec.gen().vertex(r));
    if (mag > best_mag) {
      best_mag = std::move(mag);
      best = r;
    }
  }
  return best;
}

}  // namespace

Rational GridInterval::lo(const BlancmangeSpec& spec) const {
  return Rational(j, level_denominator(spec, m));
}

Rational GridInterval::hi(const BlancmangeSpec& spec) const {
  return Rational(j + 1, level_denominator(spec, m));
}

Rational GridInterval::width(const BlancmangeSpec& spec) const {
  return Rational(BigInt(1), level_denominator(spec, m));
}

Rational collinearity_det(const std::array<Rational, 3>& t, const std::array<Rational, 3>& v) {
  return (t[1] - t[0]) * (v[2] - v[0]) - (t[2] - t[0]) * (v[1] - v[0]);
}

std::vector<AffinePiece> affine_pieces(const BlancmangeSpec& spec, int n, const BigInt& first,
                                       const BigInt& last) {
  if (n < 0) throw Error(Errc::invalid_argument, "partial sum order must be >= 0");
  if (n == 0) return {AffinePiece{std::nullopt, Rational(0), Rational(0)}};
  if (last < first) throw Error(Errc::invalid_argument, "piece range with last < first");
  if (last - first > 1'000'000) {
    throw Error(Errc::invalid_argument, "piece range larger than 10^6 pieces");
  }

  // Slope of s on (q/p, (q+1)/p) for each residue q.
  std::vector<Rational> slopes;
  slopes.reserve(static_cast<std::size_t>(spec.p()));
  for (std::int64_t q = 0; q < spec.p(); ++q) slopes.push_back(slope_on_piece(spec.gen(), q));

  const BigInt p(static_cast<long>(spec.p()));
  std::vector<BigInt> scales;  // b^(n-1-k) for k = 0..n-1
  for (int k = 0; k < n; ++k) scales.push_back(ipow(spec.b(), static_cast<unsigned>(n - 1 - k)));

  std::vector<AffinePiece> pieces;
  for (BigInt i = first; i < last; ++i) {
    Rational slope(0);
    // On I_{n-1,i}, b^k t sits inside the generator piece floor(i / b^(n-1-k)).
    for (const BigInt& scale : scales) {
      BigInt q;
      mpz_fdiv_q(q.get_mpz_t(), i.get_mpz_t(), scale.get_mpz_t());
      BigInt residue;
      mpz_fdiv_r(residue.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
      slope += slopes[residue.get_ui()];
    }
    GridInterval gi{n - 1, i};
    const Rational lo = gi.lo(spec);
    Rational intercept = partial_sum(spec, n, lo) - slope * lo;
    pieces.push_back({std::move(gi), std::move(slope), std::move(intercept)});
  }
  return pieces;
}

GridInterval locate_grid_interval(const BlancmangeSpec& spec, const Interval& interval,
                                  int level_cap) {
  if (!(interval.lo < interval.hi)) {
    throw Error(Errc::empty_interval, "empty interval (" + interval.lo.str() + ", " +
                                          interval.hi.str() + ")");
  }
  const BigInt shift = floor(interval.lo);
  const Rational a = interval.lo - Rational(shift);
  const Rational c = interval.hi - Rational(shift);
  if (c > Rational(1)) {
    throw Error(Errc::interval_out_of_range,
                "interval (" + interval.lo.str() + ", " + interval.hi.str() +
                    ") does not fit in one period after reduction");
  }
  for (int m = 0; m <= level_cap; ++m) {
    const BigInt den = level_denominator(spec, m);
    const BigInt j = ceil(a * Rational(den));
    if (Rational(j + 1, den) <= c) return GridInterval{m, j + shift * den};
  }
  throw Error(Errc::level_cap_exceeded,
              "no lattice interval of level <= " + std::to_string(level_cap) + " fits in (" +
                  interval.lo.str() + ", " + interval.hi.str() + ")");
}

BigInt select_middle_index(const BlancmangeSpec& spec, const GridInterval& gi) {
  return gi.j * BigInt(static_cast<long>(spec.b())) +
         BigInt(static_cast<long>(best_middle_offset(spec)));
}

NonAffineWitness nonaffine_certificate(const BlancmangeSpec& spec, const GridInterval& gi) {
  BAdicPoint left = BAdicPoint::make(spec, gi.j, gi.m);
  BAdicPoint right = BAdicPoint::make(spec, gi.j + 1, gi.m);
  BAdicPoint middle = BAdicPoint::make(spec, select_middle_index(spec, gi), gi.m + 1);

  std::array<Rational, 3> t{left.value(spec), right.value(spec), middle.value(spec)};
  std::array<Rational, 3> v{eval_exact_badic(spec, left), eval_exact_badic(spec, right),
                            eval_exact_badic(spec, middle)};
  Rational det = collinearity_det(t, v);
  if (det.is_zero()) {
    throw InconsistencyError("collinear witness on I_{" + std::to_string(gi.m) + "," +
                             gi.j.get_str() + "}: non-affineness certificate failed");
  }
  // det = width * (chord deviation at the middle point).
  if (abs(det) != gi.width(spec) * roughness_lower_bound(spec, gi)) {
    throw InconsistencyError("witness determinant " + det.str() +
                             " disagrees with the predicted chord deviation");
  }
  return NonAffineWitness{gi,           std::move(left), std::move(right), std::move(middle),
                          std::move(t), std::move(v),    std::move(det)};
}

NonAffineWitness nonaffine_certificate(const BlancmangeSpec& spec, const Interval& interval,
                                       int level_cap) {
  return nonaffine_certificate(spec, locate_grid_interval(spec, interval, level_cap));
}

Rational roughness_lower_bound(const BlancmangeSpec& spec, const GridInterval& gi) {
  const Rational& v = spec.gen().vertex(best_middle_offset(spec));
  return abs(v) / Rational(ipow(spec.b(), static_cast<unsigned>(gi.m + 1)));
}

}  // namespace blanc
