#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "blanc/series.hpp"

namespace blanc {

/// A continuous f on [0, 1] with f(0) = f(1) = 0, known through rational
/// samples. Between samples f is read as its linear interpolant.
class SampledFunction {
 public:
  using Sample = std::pair<Rational, Rational>;  // (t, f(t))

  /// Throws Error(invalid_samples) unless abscissae strictly increase from
  /// 0 to 1, and Error(nonzero_endpoint) unless f(0) = f(1) = 0.
  static SampledFunction make(std::vector<Sample> samples);

  std::span<const Sample> samples() const noexcept { return samples_; }
  /// Linear interpolant at t in [0, 1].
  Rational operator()(const Rational& t) const;

 private:
  explicit SampledFunction(std::vector<Sample> s) : samples_(std::move(s)) {}
  std::vector<Sample> samples_;
};

struct ApproximationResult {
  BlancmangeSpec spec;
  Enclosure interp_error;  // sup |f - s| against the sampled representative
  Enclosure series_error;  // sup |s - B(s, c)|
  Enclosure total;         // interp_error + series_error
};

struct ApproximationOptions {
  std::optional<std::int64_t> p_hint;
  std::int64_t p_cap = std::int64_t{1} << 14;
  /// Fraction of eps given to the interpolation error; the rest goes to
  /// the series error.
  Rational interp_share = Rational(BigInt(1), BigInt(2));
  /// Caller-declared bound on |f - (its sample interpolant)|, added to the
  /// interpolation enclosure.
  Rational modulus_slack = Rational(0);
};

/// Generator with v_i = f(i/p).
Generator interpolate(const SampledFunction& f, std::int64_t p);

/// Exact sup over [0, 1] of |f - s| for the sampled representative of f.
Rational interpolation_error(const SampledFunction& f, const Generator& s);

/// max |s - B_n| over the lattice V_level = {i / (p b^level)}.
Rational max_deviation_on_lattice(const BlancmangeSpec& spec, int n, int level);

/// Enclosure of sup |s - B(s, c)|: hi = M / (b - 1); lo is the exact
/// maximum over a vertex lattice, where B agrees with a partial sum.
Enclosure series_distance(const BlancmangeSpec& spec);

/// Least c >= 1 with M / (c p - 1) < eps.
std::int64_t choose_c(const Generator& g, const Rational& eps);

/// Doubles p until the interpolation error fits its share of eps, then
/// picks c for the series share. Result satisfies total.hi < eps.
ApproximationResult approximate_function(const SampledFunction& f, const Rational& eps,
                                         const ApproximationOptions& options = {});

}  // namespace blanc
