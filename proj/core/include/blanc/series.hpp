#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "blanc/generator.hpp"
#include "blanc/numeric.hpp"

namespace blanc {

/// Generalized blancmange function B(s, c) = sum_k s(b^k t) / b^k with
/// base b = c * p.
class BlancmangeSpec {
 public:
  /// Throws Error(invalid_argument) when c < 1.
  static BlancmangeSpec make(Generator gen, std::int64_t c);

  const Generator& gen() const noexcept { return gen_; }
  std::int64_t p() const noexcept { return gen_.p(); }
  std::int64_t c() const noexcept { return c_; }
  std::int64_t b() const noexcept { return b_; }

 private:
  BlancmangeSpec(Generator g, std::int64_t c) : gen_(std::move(g)), c_(c), b_(c * gen_.p()) {}

  Generator gen_;
  std::int64_t c_;
  std::int64_t b_;
};

/// The rational j / (p * b^m), stored at the least level m representing it.
class BAdicPoint {
 public:
  static BAdicPoint make(const BlancmangeSpec& spec, BigInt j, int m);

  /// Lattice representation of t, or nullopt when p * b^m * t is not an
  /// integer for any m <= max_level.
  static std::optional<BAdicPoint> from_rational(const BlancmangeSpec& spec,
                                                 const Rational& t,
                                                 int max_level = 64);

  const BigInt& j() const noexcept { return j_; }
  int m() const noexcept { return m_; }
  Rational value(const BlancmangeSpec& spec) const;
  /// "j/(p*b^m)" with the numbers spelled out.
  std::string lattice_str(const BlancmangeSpec& spec) const;

  friend bool operator==(const BAdicPoint&, const BAdicPoint&) = default;

 private:
  BAdicPoint(BigInt j, int m) : j_(std::move(j)), m_(m) {}

  BigInt j_;
  int m_;
};

struct SeriesValue {
  Rational point;
  int n_used;
  Enclosure enclosure;
};

/// B_n(t) = sum_{k<n} s_k(t), exact. B_0 = 0.
Rational partial_sum(const BlancmangeSpec& spec, int n, const Rational& t);

/// sum_{k>=n} M / b^k = M * b^(1-n) / (b - 1), a bound on sup |B - B_n|.
Rational tail_bound(const BlancmangeSpec& spec, int n);

/// Exact B at a lattice point; all summands past index m vanish there.
Rational eval_exact_badic(const BlancmangeSpec& spec, const BAdicPoint& pt);

/// B_N(pt) for every N in orders, computed in one pass with integer
/// arithmetic on the lattice.
std::vector<Rational> partial_sums_badic(const BlancmangeSpec& spec,
                                         const BAdicPoint& pt,
                                         std::span<const int> orders);

inline constexpr int kDefaultTermCap = 64;

/// [B_n(t) - tail(n), B_n(t) + tail(n)] for the least n with tail(n) < eps.
/// Throws Error(invalid_argument) for eps <= 0 and Error(term_cap_exceeded)
/// when that n would exceed term_cap.
SeriesValue eval_enclosure(const BlancmangeSpec& spec, const Rational& t,
                           const Rational& eps, int term_cap = kDefaultTermCap);

/// B_n(t) + B(b^n t) / b^n - B(t) at a lattice point. Always 0.
Rational functional_eq_residual(const BlancmangeSpec& spec, int n, const BAdicPoint& pt);

}  // namespace blanc
