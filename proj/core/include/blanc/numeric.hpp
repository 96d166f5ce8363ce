#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "blanc/errors.hpp"

namespace blanc {

using BigInt = mpz_class;

/// Exact rational number, always held in lowest terms with a positive
/// denominator. Equality is therefore structural.
class Rational {
 public:
  Rational() = default;
  Rational(int value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(const BigInt& value) : q_(value) {}
  /// Throws Error(zero_denominator) when den == 0.
  Rational(const BigInt& num, const BigInt& den);

  /// Accepts "[-]digits" or "[-]digits/digits".
  static Rational parse(std::string_view text);

  BigInt numerator() const { return q_.get_num(); }
  BigInt denominator() const { return q_.get_den(); }
  const mpq_class& raw() const noexcept { return q_; }

  int sign() const noexcept { return sgn(q_); }
  bool is_zero() const noexcept { return sign() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  /// Canonical "p/q", or "p" when the denominator is 1.
  std::string str() const;
  /// Nearest-or-adjacent double; relative error below 2^-52.
  double to_double() const { return q_.get_d(); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.q_, b.q_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    return cmp(a.q_, b.q_) <=> 0;
  }

 private:
  explicit Rational(mpq_class q) : q_(std::move(q)) {}
  mpq_class q_;
};

/// Throws Error(malformed_rational | zero_denominator).
inline Rational rat_parse(std::string_view text) { return Rational::parse(text); }

BigInt floor(const Rational& t);
BigInt ceil(const Rational& t);
Rational abs(const Rational& t);
/// t - floor(t), always in [0, 1).
Rational frac_mod1(const Rational& t);

/// base^exp for exp >= 0.
BigInt ipow(std::int64_t base, unsigned exp);
/// Exactly 2^-bits.
Rational pow2_neg(unsigned bits);

/// Closed rational interval [lo, hi] asserted to contain some real value.
struct Enclosure {
  Rational lo;
  Rational hi;

  /// Throws Error(invalid_argument) when lo > hi.
  static Enclosure make(Rational lo, Rational hi);
  static Enclosure point(const Rational& x) { return {x, x}; }

  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / Rational(2); }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

inline bool enclosure_contains(const Enclosure& e, const Rational& x) {
  return e.contains(x);
}

Enclosure operator+(const Enclosure& a, const Enclosure& b);
Enclosure operator-(const Enclosure& a, const Enclosure& b);
Enclosure operator*(const Rational& k, const Enclosure& e);
/// Enclosure of |x| for x in e.
Enclosure abs(const Enclosure& e);

}  // namespace blanc
