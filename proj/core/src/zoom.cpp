#include "blanc/zoom.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace blanc {

Rational renormalize(const BlancmangeSpec& spec, int n, const BAdicPoint& anchor,
                     const Rational& u) {
  if (n < 0) throw Error(Errc::invalid_argument, "zoom order must be >= 0");
  if (anchor.m() > n) {
    throw Error(Errc::invalid_argument, "anchor level " + std::to_string(anchor.m()) +
                                            " exceeds zoom order " + std::to_string(n));
  }
  const Rational scale(ipow(spec.b(), static_cast<unsigned>(n)));
  const Rational t = anchor.value(spec) + u / scale;
  const auto pt = BAdicPoint::from_rational(spec, t);
  if (!pt) {
    throw Error(Errc::not_on_lattice,
                "t0 + u/b^n = " + t.str() + " is not on the b-adic lattice");
  }
  return scale * (eval_exact_badic(spec, *pt) - partial_sum(spec, n, t));
}

namespace {

constexpr long kMaxDefectSamples = 1L << 20;

using PointEval = std::function<Enclosure(const Rational&)>;

DefectReport measure_defect(const BlancmangeSpec& spec, const Interval& interval,
                            int grid_level, const PointEval& eval_at) {
  if (!(interval.lo < interval.hi)) throw Error(Errc::empty_interval, "empty interval");
  if (grid_level < 0) throw Error(Errc::invalid_argument, "grid level must be >= 0");
  const BigInt den = BigInt(static_cast<long>(spec.p())) *
                     ipow(spec.b(), static_cast<unsigned>(grid_level));
  const BigInt first = ceil(interval.lo * Rational(den));
  const BigInt last = floor(interval.hi * Rational(den));
  if (last < first) {
    throw Error(Errc::empty_sample_set, "no level-" + std::to_string(grid_level) +
                                            " lattice point in the interval");
  }
  if (last - first >= kMaxDefectSamples) {
    throw Error(Errc::invalid_argument, "chord defect would need more than 2^20 samples");
  }

  const Rational width = interval.width();
  const Enclosure f_lo = eval_at(interval.lo);
  const Enclosure f_hi = eval_at(interval.hi);
  Rational best_lo(0);
  Rational best_hi(0);
  for (BigInt i = first; i <= last; ++i) {
    const Rational t(i, den);
    const Rational alpha = (interval.hi - t) / width;
    const Rational beta = (t - interval.lo) / width;
    const Enclosure chord = alpha * f_lo + beta * f_hi;
    const Enclosure dev = abs(eval_at(t) - chord);
    best_lo = std::max(best_lo, dev.lo);
    best_hi = std::max(best_hi, dev.hi);
  }
  Enclosure defect{best_lo, best_hi};
  Enclosure normalized = (Rational(1) / width) * defect;
  return {grid_level, std::move(defect), std::move(normalized)};
}

}  // namespace

DefectReport chord_defect(const BlancmangeSpec& spec, const Interval& interval, int grid_level) {
  const Rational eps = pow2_neg(50);
  return measure_defect(spec, interval, grid_level, [&](const Rational& t) {
    if (auto pt = BAdicPoint::from_rational(spec, t)) {
      return Enclosure::point(eval_exact_badic(spec, *pt));
    }
    return eval_enclosure(spec, t, eps, 256).enclosure;
  });
}

DefectReport chord_defect_partial(const BlancmangeSpec& spec, int order,
                                  const Interval& interval, int grid_level) {
  return measure_defect(spec, interval, grid_level, [&](const Rational& t) {
    return Enclosure::point(partial_sum(spec, order, t));
  });
}

std::vector<ScanRow> divergence_scan(const BlancmangeSpec& spec, const BAdicPoint& t0, int depth,
                                     ScanDirection direction) {
  if (depth < 1) throw Error(Errc::invalid_argument, "scan depth must be >= 1");
  const Rational base = eval_exact_badic(spec, t0);
  std::vector<ScanRow> rows;
  rows.reserve(static_cast<std::size_t>(depth));
  const Rational sign(direction == ScanDirection::right ? 1 : -1);
  for (int n = 1; n <= depth; ++n) {
    Rational h(BigInt(1), BigInt(static_cast<long>(spec.p())) *
                              ipow(spec.b(), static_cast<unsigned>(n)));
    const auto other =
        BAdicPoint::from_rational(spec, t0.value(spec) + sign * h, std::max(t0.m(), n));
    Rational slope = sign * (eval_exact_badic(spec, *other) - base) / h;
    rows.push_back({n, std::move(h), std::move(slope)});
  }
  return rows;
}

}  // namespace blanc
