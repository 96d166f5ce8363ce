#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "blanc/numeric.hpp"

namespace blanc {

/// Periodic piecewise-linear generator s of period 1, affine on every
/// (i/p, (i+1)/p) and determined by its vertex values v_i = s(i/p).
///
/// Invariants: p >= 2, v_0 = v_p = 0, some interior v_i != 0.
class Generator {
 public:
  /// Throws Error with code wrong_vertex_count, nonzero_endpoint,
  /// zero_generator or invalid_argument (p < 2).
  static Generator make(std::int64_t p, std::vector<Rational> vertices);

  std::int64_t p() const noexcept { return p_; }
  std::span<const Rational> vertices() const noexcept { return vertices_; }
  /// v_{i mod p}, so vertex(p) == vertex(0) == 0.
  const Rational& vertex(std::int64_t i) const;

  friend bool operator==(const Generator&, const Generator&) = default;

 private:
  Generator(std::int64_t p, std::vector<Rational> v) : p_(p), vertices_(std::move(v)) {}

  std::int64_t p_;
  std::vector<Rational> vertices_;
};

struct SupNorm {
  Rational value;
};

inline Generator make_generator(std::int64_t p, std::vector<Rational> vertices) {
  return Generator::make(p, std::move(vertices));
}

/// The tent generator of the Takagi function: p = 2, vertices [0, 1/2, 0].
Generator classic_generator();

/// s(t), exact; t is reduced modulo 1 first.
Rational eval_s(const Generator& g, const Rational& t);

/// s(b^k t) / b^k. Throws Error(base_not_multiple) unless p divides b.
Rational eval_s_k(const Generator& g, std::int64_t b, int k, const Rational& t);

/// max_i |v_i|, which is the sup of |s|.
SupNorm sup_norm(const Generator& g);

/// Slope of s on (i/p, (i+1)/p): p * (v_{i+1} - v_i).
/// Throws Error(index_out_of_range) unless 0 <= i < p.
Rational slope_on_piece(const Generator& g, std::int64_t i);

}  // namespace blanc
