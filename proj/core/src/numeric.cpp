#include "blanc/numeric.hpp"

#include <algorithm>
#include <cctype>

namespace blanc {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::malformed_rational: return "malformed rational";
    case Errc::zero_denominator: return "zero denominator";
    case Errc::invalid_argument: return "invalid argument";
    case Errc::wrong_vertex_count: return "wrong vertex count";
    case Errc::nonzero_endpoint: return "nonzero endpoint vertex";
    case Errc::zero_generator: return "all interior vertices zero";
    case Errc::base_not_multiple: return "base is not a multiple of p";
    case Errc::index_out_of_range: return "index out of range";
    case Errc::not_on_lattice: return "point not on the b-adic lattice";
    case Errc::empty_interval: return "empty interval";
    case Errc::interval_out_of_range: return "interval out of range";
    case Errc::level_cap_exceeded: return "level cap exceeded";
    case Errc::term_cap_exceeded: return "term cap exceeded";
    case Errc::empty_sample_set: return "empty sample set";
    case Errc::invalid_samples: return "invalid samples";
    case Errc::unachievable_tolerance: return "unachievable tolerance";
    case Errc::io_error: return "i/o error";
  }
  return "unknown error";
}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(Errc::zero_denominator, "rational with zero denominator");
  q_.get_num() = num;
  q_.get_den() = den;
  q_.canonicalize();
}

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char ch) { return std::isdigit(ch); });
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const std::string original(text);
  auto fail = [&] {
    return Error(Errc::malformed_rational, "malformed rational '" + original + "'");
  };
  bool negative = false;
  if (!text.empty() && text.front() == '-') {
    negative = true;
    text.remove_prefix(1);
  }
  std::string_view num_part = text;
  std::string_view den_part = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num_part = text.substr(0, slash);
    den_part = text.substr(slash + 1);
  }
  if (!all_digits(num_part) || !all_digits(den_part)) throw fail();
  BigInt num(std::string(num_part), 10);
  BigInt den(std::string(den_part), 10);
  if (den == 0) {
    throw Error(Errc::zero_denominator, "zero denominator in '" + original + "'");
  }
  if (negative) num = -num;
  return Rational(num, den);
}

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(Errc::zero_denominator, "division by zero");
  q_ /= o.q_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-q_)); }

BigInt floor(const Rational& t) {
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), t.raw().get_num_mpz_t(), t.raw().get_den_mpz_t());
  return out;
}

BigInt ceil(const Rational& t) {
  BigInt out;
  mpz_cdiv_q(out.get_mpz_t(), t.raw().get_num_mpz_t(), t.raw().get_den_mpz_t());
  return out;
}

Rational abs(const Rational& t) { return t.sign() < 0 ? -t : t; }

Rational frac_mod1(const Rational& t) {
  BigInt rem;
  mpz_fdiv_r(rem.get_mpz_t(), t.raw().get_num_mpz_t(), t.raw().get_den_mpz_t());
  return Rational(rem, t.denominator());
}

BigInt ipow(std::int64_t base, unsigned exp) {
  BigInt out;
  BigInt b(static_cast<long>(base));
  mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), exp);
  return out;
}

Rational pow2_neg(unsigned bits) { return Rational(BigInt(1), ipow(2, bits)); }

Enclosure Enclosure::make(Rational lo, Rational hi) {
  if (lo > hi) {
    throw Error(Errc::invalid_argument,
                "enclosure with lo > hi: [" + lo.str() + ", " + hi.str() + "]");
  }
  return {std::move(lo), std::move(hi)};
}

Enclosure operator+(const Enclosure& a, const Enclosure& b) {
  return {a.lo + b.lo, a.hi + b.hi};
}

Enclosure operator-(const Enclosure& a, const Enclosure& b) {
  return {a.lo - b.hi, a.hi - b.lo};
}

Enclosure operator*(const Rational& k, const Enclosure& e) {
  if (k.sign() >= 0) return {k * e.lo, k * e.hi};
  return {k * e.hi, k * e.lo};
}

Enclosure abs(const Enclosure& e) {
  if (e.lo.sign() >= 0) return e;
  if (e.hi.sign() <= 0) return {-e.hi, -e.lo};
  return {Rational(0), std::max(-e.lo, e.hi)};
}

}  // namespace blanc
