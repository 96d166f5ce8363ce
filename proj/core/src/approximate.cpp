#include "blanc/approximate.hpp"

#include <algorithm>
#include <string>

namespace blanc {

SampledFunction SampledFunction::make(std::vector<Sample> samples) {
  if (samples.size() < 2) {
    throw Error(Errc::invalid_samples, "need at least the samples at t = 0 and t = 1");
  }
  if (samples.front().first != Rational(0) || samples.back().first != Rational(1)) {
    throw Error(Errc::invalid_samples, "samples must start at t = 0 and end at t = 1");
  }
  for (std::size_t i = 1; i < samples.size(); ++i) {
    if (!(samples[i - 1].first < samples[i].first)) {
      throw Error(Errc::invalid_samples,
                  "sample abscissae must strictly increase (at t = " + samples[i].first.str() + ")");
    }
  }
  if (!samples.front().second.is_zero() || !samples.back().second.is_zero()) {
    throw Error(Errc::nonzero_endpoint, "f(0) and f(1) must be 0, got " +
                                            samples.front().second.str() + " and " +
                                            samples.back().second.str());
  }
  return SampledFunction(std::move(samples));
}

Rational SampledFunction::operator()(const Rational& t) const {
  if (t < Rational(0) || t > Rational(1)) {
    throw Error(Errc::invalid_argument, "sampled function read outside [0, 1] at " + t.str());
  }
  auto it = std::lower_bound(samples_.begin(), samples_.end(), t,
                             [](const Sample& s, const Rational& x) { return s.first < x; });
  if (it->first == t) return it->second;
  const auto& [t1, f1] = *it;
  const auto& [t0, f0] = *std::prev(it);
  return f0 + (t - t0) / (t1 - t0) * (f1 - f0);
}

Generator interpolate(const SampledFunction& f, std::int64_t p) {
  if (p < 2) throw Error(Errc::invalid_argument, "p must be >= 2");
  std::vector<Rational> vertices;
  vertices.reserve(static_cast<std::size_t>(p) + 1);
  for (std::int64_t i = 0; i <= p; ++i) vertices.push_back(f(Rational(BigInt(i), BigInt(p))));
  return Generator::make(p, std::move(vertices));
}

Rational interpolation_error(const SampledFunction& f, const Generator& s) {
  // f - s is affine between consecutive points of {samples} U {i/p}, and
  // vanishes at every i/p, so its sup is attained at a sample abscissa.
  Rational worst(0);
  for (const auto& [t, value] : f.samples()) worst = std::max(worst, abs(value - eval_s(s, t)));
  return worst;
}

Rational max_deviation_on_lattice(const BlancmangeSpec& spec, int n, int level) {
  if (level < 0) throw Error(Errc::invalid_argument, "lattice level must be >= 0");
  const BigInt count = BigInt(static_cast<long>(spec.p())) *
                       ipow(spec.b(), static_cast<unsigned>(level));
  const int orders[] = {n};
  Rational worst(0);
  for (BigInt i = 0; i < count; ++i) {
    const BAdicPoint pt = BAdicPoint::make(spec, i, level);
    const Rational bn = partial_sums_badic(spec, pt, orders).front();
    worst = std::max(worst, abs(eval_s(spec.gen(), pt.value(spec)) - bn));
  }
  return worst;
}

namespace {

constexpr long kSeriesLatticePoints = 4096;
constexpr long kMaxLevelOnePoints = 1L << 18;

}  // namespace

Enclosure series_distance(const BlancmangeSpec& spec) {
  // Finest level with at most kSeriesLatticePoints vertices. Level 1 is
  // kept up to kMaxLevelOnePoints; level 0 only gives the trivial bound 0.
  int level = 1;
  BigInt count = BigInt(static_cast<long>(spec.p())) * BigInt(static_cast<long>(spec.b()));
  if (count > kMaxLevelOnePoints) {
    level = 0;
    count = spec.p();
  }
  while (count * spec.b() <= kSeriesLatticePoints) {
    count *= spec.b();
    ++level;
  }
  // On V_level every summand past index `level` vanishes, so B = B_{level+1}
  // there and the lattice maximum is attained by s - B itself.
  Rational lo = max_deviation_on_lattice(spec, level + 1, level);
  Rational hi = sup_norm(spec.gen()).value / Rational(spec.b() - 1);
  if (lo > hi) {
    throw InconsistencyError("series distance lower bound " + lo.str() +
                             " exceeds the geometric bound " + hi.str());
  }
  return {std::move(lo), std::move(hi)};
}

std::int64_t choose_c(const Generator& g, const Rational& eps) {
  if (eps.sign() <= 0) throw Error(Errc::invalid_argument, "eps must be > 0");
  const Rational m = sup_norm(g).value;
  const BigInt c = floor((m / eps + Rational(1)) / Rational(g.p())) + 1;
  const BigInt b = c * g.p();
  if (!b.fits_slong_p()) {
    throw Error(Errc::unachievable_tolerance, "eps " + eps.str() + " needs base beyond 64 bits");
  }
  return c.get_si();
}

ApproximationResult approximate_function(const SampledFunction& f, const Rational& eps,
                                         const ApproximationOptions& options) {
  if (eps.sign() <= 0) throw Error(Errc::invalid_argument, "eps must be > 0");
  if (!(Rational(0) < options.interp_share && options.interp_share < Rational(1))) {
    throw Error(Errc::invalid_argument, "interp_share must lie in (0, 1)");
  }
  if (options.modulus_slack.sign() < 0) {
    throw Error(Errc::invalid_argument, "modulus slack must be >= 0");
  }
  std::int64_t p = options.p_hint.value_or(2);
  if (p < 2) throw Error(Errc::invalid_argument, "p hint must be >= 2");

  const Rational interp_budget = eps * options.interp_share;
  std::optional<Generator> chosen;
  std::optional<std::pair<std::int64_t, Rational>> best;  // (p, bound)
  for (; p <= options.p_cap; p *= 2) {
    std::optional<Generator> g;
    try {
      g = interpolate(f, p);
    } catch (const Error& e) {
      if (e.code() != Errc::zero_generator) throw;
      continue;
    }
    const Rational bound = interpolation_error(f, *g) + options.modulus_slack;
    if (!best || bound < best->second) best = {p, bound};
    if (bound <= interp_budget) {
      chosen = std::move(g);
      break;
    }
  }
  if (!chosen) {
    if (!best) {
      throw Error(Errc::zero_generator,
                  "sampled function vanishes at every i/p for p <= " +
                      std::to_string(options.p_cap) + "; no valid generator");
    }
    throw Error(Errc::unachievable_tolerance,
                "interpolation error budget " + interp_budget.str() +
                    " not reachable; best achievable bound " + best->second.str() + " at p = " +
                    std::to_string(best->first));
  }

  const Rational interp = interpolation_error(f, *chosen);
  Enclosure interp_error{interp, interp + options.modulus_slack};
  const std::int64_t c = choose_c(*chosen, eps - interp_budget);
  BlancmangeSpec spec = BlancmangeSpec::make(std::move(*chosen), c);
  Enclosure series_error = series_distance(spec);
  Enclosure total = interp_error + series_error;
  if (!(total.hi < eps)) {
    throw InconsistencyError("approximation total " + total.hi.str() + " not below eps " +
                             eps.str());
  }
  return {std::move(spec), std::move(interp_error), std::move(series_error), std::move(total)};
}

}  // namespace blanc
