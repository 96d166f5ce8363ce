#include "blanc/generator.hpp"

#include <string>

namespace blanc {

Generator Generator::make(std::int64_t p, std::vector<Rational> vertices) {
  if (p < 2) {
    throw Error(Errc::invalid_argument,
                "subdivision count p must be >= 2, got " + std::to_string(p));
  }
  if (vertices.size() != static_cast<std::size_t>(p) + 1) {
    throw Error(Errc::wrong_vertex_count,
                "expected " + std::to_string(p + 1) + " vertices for p = " +
                    std::to_string(p) + ", got " + std::to_string(vertices.size()));
  }
  if (!vertices.front().is_zero() || !vertices.back().is_zero()) {
    throw Error(Errc::nonzero_endpoint,
                "generator endpoints must be 0, got " + vertices.front().str() +
                    " and " + vertices.back().str());
  }
  bool any_nonzero = false;
  for (std::size_t i = 1; i + 1 < vertices.size(); ++i) {
    any_nonzero = any_nonzero || !vertices[i].is_zero();
  }
  if (!any_nonzero) {
    throw Error(Errc::zero_generator, "generator has no nonzero interior vertex");
  }
  return Generator(p, std::move(vertices));
}

const Rational& Generator::vertex(std::int64_t i) const {
  std::int64_t r = i % p_;
  if (r < 0) r += p_;
  return vertices_[static_cast<std::size_t>(r)];
}

Generator classic_generator() {
  return Generator::make(2, {Rational(0), Rational(BigInt(1), BigInt(2)), Rational(0)});
}

Rational eval_s(const Generator& g, const Rational& t) {
  const Rational u = frac_mod1(t) * Rational(g.p());
  const BigInt piece = floor(u);  // in [0, p)
  const std::int64_t i = piece.get_si();
  const Rational offset = u - Rational(piece);
  const Rational& left = g.vertex(i);
  const Rational& right = g.vertices()[static_cast<std::size_t>(i) + 1];
  return left + offset * (right - left);
}

Rational eval_s_k(const Generator& g, std::int64_t b, int k, const Rational& t) {
  if (b < 2 || b % g.p() != 0) {
    throw Error(Errc::base_not_multiple,
                "base " + std::to_string(b) + " is not a multiple of p = " +
                    std::to_string(g.p()));
  }
  if (k < 0) throw Error(Errc::invalid_argument, "summand index k must be >= 0");
  const Rational scale(ipow(b, static_cast<unsigned>(k)));
  return eval_s(g, scale * t) / scale;
}

SupNorm sup_norm(const Generator& g) {
  Rational best(0);
  for (const auto& v : g.vertices()) best = std::max(best, abs(v));
  return {best};
}

Rational slope_on_piece(const Generator& g, std::int64_t i) {
  if (i < 0 || i >= g.p()) {
    throw Error(Errc::index_out_of_range,
                "piece index " + std::to_string(i) + " outside [0, " +
                    std::to_string(g.p()) + ")");
  }
  const auto v = g.vertices();
  return Rational(g.p()) * (v[static_cast<std::size_t>(i) + 1] - v[static_cast<std::size_t>(i)]);
}

}  // namespace blanc
