#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "blanc/approximate.hpp"
#include "oracle.hpp"

using namespace blanc;

namespace {

Rational q(long n, long d = 1) { return Rational(BigInt(n), BigInt(d)); }

SampledFunction sampled_sine(int steps) {
  std::vector<SampledFunction::Sample> samples;
  for (int i = 0; i <= steps; ++i) {
    const double x = static_cast<double>(i) / steps;
    const Rational value =
        (i == 0 || i == steps) ? q(0) : oracle::from_mpq(mpq_class(std::sin(std::numbers::pi * x)));
    samples.emplace_back(q(i, steps), value);
  }
  return SampledFunction::make(std::move(samples));
}

SampledFunction from_generator(const Generator& g) {
  std::vector<SampledFunction::Sample> samples;
  for (std::int64_t i = 0; i <= g.p(); ++i) {
    samples.emplace_back(Rational(BigInt(i), BigInt(g.p())), g.vertices()[static_cast<std::size_t>(i)]);
  }
  return SampledFunction::make(std::move(samples));
}

// Brute force: both functions are piecewise linear, so compare them on a
// grid that contains every breakpoint of either.
Rational brute_interpolation_error(const SampledFunction& f, const Generator& g, long grid) {
  Rational worst(0);
  for (long i = 0; i <= grid; ++i) {
    const Rational t = q(i, grid);
    worst = std::max(worst, abs(f(t) - oracle::from_mpq(oracle::s(g.p(), oracle::vertices_of(g),
                                                                  oracle::to_mpq(t)))));
  }
  return worst;
}

Errc error_code(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected blanc::Error");
  return Errc::invalid_argument;
}

}  // namespace

TEST_CASE("sampled function validation") {
  using S = SampledFunction::Sample;
  CHECK(error_code([] { SampledFunction::make({S{q(0), q(0)}}); }) == Errc::invalid_samples);
  CHECK(error_code([] { SampledFunction::make({S{q(0), q(0)}, S{q(1, 2), q(1)}}); }) ==
        Errc::invalid_samples);
  CHECK(error_code([] {
          SampledFunction::make({S{q(0), q(0)}, S{q(1, 2), q(1)}, S{q(1, 2), q(1)}, S{q(1), q(0)}});
        }) == Errc::invalid_samples);
  CHECK(error_code([] { SampledFunction::make({S{q(0), q(1)}, S{q(1), q(0)}}); }) ==
        Errc::nonzero_endpoint);

  const auto f = SampledFunction::make({S{q(0), q(0)}, S{q(1, 4), q(1)}, S{q(1), q(0)}});
  CHECK(f(q(1, 8)) == q(1, 2));
  CHECK(f(q(5, 8)) == q(1, 2));
  CHECK_THROWS_AS(f(q(2)), Error);
}

TEST_CASE("interpolation round trip") {
  std::mt19937_64 rng(3);
  for (const auto& spec : oracle::random_corpus(5, 20)) {
    const Generator& g = spec.gen();
    const SampledFunction f = from_generator(g);
    CHECK(interpolate(f, g.p()) == g);
    CHECK(interpolation_error(f, g).is_zero());
    const std::int64_t refined = g.p() * std::uniform_int_distribution<std::int64_t>(2, 4)(rng);
    CHECK(interpolation_error(f, interpolate(f, refined)).is_zero());
  }
}

TEST_CASE("interpolation error matches a brute-force sup") {
  const SampledFunction f = sampled_sine(24);
  for (std::int64_t p : {2, 3, 5, 8, 16}) {
    const Generator g = interpolate(f, p);
    CHECK(interpolation_error(f, g) == brute_interpolation_error(f, g, 24 * p));
  }
  CHECK_THROWS_AS(interpolate(f, 1), Error);
}

TEST_CASE("choose_c is the least admissible multiplier") {
  std::mt19937_64 rng(17);
  for (const auto& spec : oracle::random_corpus(9, 30)) {
    const Generator& g = spec.gen();
    const Rational m = sup_norm(g).value;
    const Rational eps = oracle::random_rational(rng, 0, 1, 500) + q(1, 1000);
    const std::int64_t c = choose_c(g, eps);
    REQUIRE(c >= 1);
    CHECK(m / Rational(c * g.p() - 1) < eps);
    if (c > 1) CHECK_FALSE(m / Rational((c - 1) * g.p() - 1) < eps);
  }
  CHECK(choose_c(classic_generator(), q(1, 10)) == 4);
  CHECK_THROWS_AS(choose_c(classic_generator(), q(0)), Error);
}

TEST_CASE("series distance") {
  const auto classic = BlancmangeSpec::make(classic_generator(), 1);
  const Enclosure d = series_distance(classic);
  CHECK(d.hi == q(1, 2));
  CHECK(d.lo == q(1365, 4096));

  for (const auto& spec : oracle::random_corpus(13, 15)) {
    const Enclosure e = series_distance(spec);
    CHECK(e.hi == sup_norm(spec.gen()).value / Rational(spec.b() - 1));
    CHECK(e.lo <= e.hi);
    // lo is attained at some level-1 lattice point, checked by brute force.
    Rational witness(0);
    const long count = spec.p() * spec.b();
    for (long i = 0; i < count; ++i) {
      const Rational t = q(i, count);
      witness = std::max(witness, abs(eval_s(spec.gen(), t) - oracle::partial_sum(spec, 3, t)));
    }
    CHECK(witness <= e.lo);
  }
}

TEST_CASE("max_deviation_on_lattice") {
  const auto classic = BlancmangeSpec::make(classic_generator(), 1);
  CHECK(max_deviation_on_lattice(classic, 2, 1) == q(1, 4));
  CHECK(max_deviation_on_lattice(classic, 0, 0) == q(1, 2));
  CHECK_THROWS_AS(max_deviation_on_lattice(classic, 1, -1), Error);
}

TEST_CASE("approximating a sampled sine") {
  const SampledFunction f = sampled_sine(256);
  const ApproximationResult r = approximate_function(f, q(1, 20));
  CHECK(r.total.hi < q(1, 20));
  CHECK(r.total.lo == r.interp_error.lo + r.series_error.lo);
  CHECK(r.total.hi == r.interp_error.hi + r.series_error.hi);
  CHECK(r.interp_error.hi == interpolation_error(f, r.spec.gen()));
  CHECK(r.spec.gen() == interpolate(f, r.spec.p()));
  CHECK(r.series_error.hi == series_distance(r.spec).hi);

  // End to end: |f - B| at sample points stays below the certified total.
  for (std::size_t i = 0; i < f.samples().size(); i += 16) {
    const auto& [t, value] = f.samples()[i];
    if (auto pt = BAdicPoint::from_rational(r.spec, t, 12)) {
      CHECK(abs(value - eval_exact_badic(r.spec, *pt)) <= r.total.hi);
    }
  }
}

TEST_CASE("approximation failure modes") {
  const SampledFunction f = sampled_sine(256);
  ApproximationOptions tight;
  tight.p_cap = 4;
  CHECK(error_code([&] { approximate_function(f, q(1, 1000), tight); }) ==
        Errc::unachievable_tolerance);
  CHECK(error_code([&] { approximate_function(f, q(0)); }) == Errc::invalid_argument);

  using S = SampledFunction::Sample;
  // Vanishes at 1/2, so the only admissible p gives the zero generator.
  const auto flat = SampledFunction::make({S{q(0), q(0)}, S{q(1, 3), q(1)}, S{q(1, 2), q(0)},
                                           S{q(2, 3), q(1)}, S{q(1), q(0)}});
  CHECK(interpolate(flat, 3).vertices()[1] == q(1));
  ApproximationOptions dyadic;
  dyadic.p_cap = 2;
  CHECK(error_code([&] { approximate_function(flat, q(1, 10), dyadic); }) == Errc::zero_generator);
}
