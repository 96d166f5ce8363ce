// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "blanc/approximate.hpp"
#include "blanc/certify.hpp"
#include "blanc/render.hpp"
#include "blanc/series.hpp"
#include "blanc/zoom.hpp"
#include "oracle.hpp"

using namespace blanc;

namespace {

Rational q(long n, long d = 1) { return Rational(BigInt(n), BigInt(d)); }

constexpr std::uint64_t kCorpusSeed = 20240517;

const std::vector<BlancmangeSpec>& corpus() {
  static const std::vector<BlancmangeSpec> specs = oracle::random_corpus(kCorpusSeed, 20);
  return specs;
}

BlancmangeSpec classic() { return BlancmangeSpec::make(classic_generator(), 1); }

// Collects the first few mismatches for the report line.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) notes_ += (notes_.empty() ? "" : "; ") + what;
  }
  bool ok() const { return failures_ == 0; }
  std::string summary() const {
    std::ostringstream s;
    s << checks_ << " checks";
    if (failures_ > 0) s << ", " << failures_ << " failed: " << notes_;
    return s.str();
  }

 private:
  long checks_ = 0;
  long failures_ = 0;
  std::string notes_;
};

Rational scale(const BlancmangeSpec& spec, int level) {
  return Rational(BigInt(BigInt(spec.p()) * ipow(spec.b(), static_cast<unsigned>(level))));
}

void ac1_functional_equation(Tally& t) {
  std::mt19937_64 rng(1);
  for (const auto& spec : corpus()) {
    for (int i = 0; i < 100; ++i) {
      const BAdicPoint pt = oracle::random_lattice_point(rng, spec, 4);
      for (int n = 0; n <= 12; ++n) {
        const Rational r = functional_eq_residual(spec, n, pt);
        t.expect(r.is_zero(), "residual " + r.str() + " at " + pt.lattice_str(spec));
      }
    }
  }
}

void ac2_classic_values(Tally& t) {
  const auto spec = classic();
  auto exact = [&](const Rational& x) {
    return eval_exact_badic(spec, *BAdicPoint::from_rational(spec, x));
  };
  t.expect(exact(q(1, 4)) == q(1, 2), "B(1/4)");
  t.expect(exact(q(1, 2)) == q(1, 2), "B(1/2)");
  t.expect(exact(q(1, 8)) == q(3, 8), "B(1/8)");
  t.expect(exact(q(1, 8)) == partial_sum(spec, 3, q(1, 8)), "B(1/8) = B_3(1/8)");
  for (long den = 1; den <= 256; den *= 2) {
    for (long j = 0; j <= den; ++j) {
      const Rational x = q(j, den);
      t.expect(exact(x) == oracle::partial_sum(spec, 40, x), "oracle at " + x.str());
    }
  }
  const SeriesValue v = eval_enclosure(spec, q(1, 3), q(1, 1000000000));
  t.expect(v.enclosure.contains(q(2, 3)), "enclosure of B(1/3)");
  t.expect(v.enclosure.width() < q(2, 1000000000), "enclosure width");
}

void ac3_certificates(Tally& t) {
  std::mt19937_64 rng(3);
  for (const auto& spec : corpus()) {
    for (int i = 0; i < 200; ++i) {
      const Rational a = oracle::random_rational(rng, -1, 1, 1000);
      Rational b = a + (Rational(BigInt(floor(a) + 1)) - a) * oracle::random_rational(rng, 0, 1, 1000);
      if (!(a < b)) b = Rational(BigInt(floor(a) + 1));
      const NonAffineWitness w = nonaffine_certificate(spec, Interval::make(a, b));
      const Rational det = oracle::det3(w.abscissae[0], oracle::partial_sum(spec, w.interval.m + 3, w.abscissae[0]),
                                        w.abscissae[1], oracle::partial_sum(spec, w.interval.m + 3, w.abscissae[1]),
                                        w.abscissae[2], oracle::partial_sum(spec, w.interval.m + 3, w.abscissae[2]));
      t.expect(!det.is_zero() && det == w.det, "det on (" + a.str() + ", " + b.str() + ")");
      t.expect(w.abscissae[0] >= a && w.abscissae[1] <= b, "witness outside interval");
    }
  }
  const NonAffineWitness w = nonaffine_certificate(classic(), Interval::make(q(0), q(1, 2)));
  t.expect(w.abscissae == std::array<Rational, 3>{q(0), q(1, 2), q(1, 4)} &&
               w.values == std::array<Rational, 3>{q(0), q(1, 2), q(1, 2)},
           "classic witness points");
  t.expect(w.det == q(1, 8), "classic det " + w.det.str());
}

void ac4_roughness(Tally& t) {
  const auto spec = classic();
  const Rational scale_free = abs(spec.gen().vertex(1)) * q(spec.p()) / q(spec.b());
  for (int m = 0; m <= 8; ++m) {
    for (long j = 0; j < 2 * (1L << m); ++j) {
      const GridInterval gi{m, BigInt(j)};
      const Interval iv = Interval::make(gi.lo(spec), gi.hi(spec));
      const DefectReport at_witness = chord_defect(spec, iv, m + 1);
      const std::string where = "I_{" + std::to_string(m) + "," + std::to_string(j) + "}";
      t.expect(at_witness.normalized.lo == scale_free && at_witness.normalized.hi == scale_free,
               where + " normalized " + at_witness.normalized.lo.str());
      t.expect(roughness_lower_bound(spec, gi) / gi.width(spec) == scale_free, where + " bound");
      const DefectReport finer = chord_defect(spec, iv, m + 4);
      t.expect(finer.normalized.lo >= q(1, 2), where + " finer grid");
    }
  }
}

void ac5_renormalization(Tally& t) {
  std::mt19937_64 rng(5);
  for (const auto& spec : corpus()) {
    for (int n = 0; n <= 12; ++n) {
      for (int i = 0; i < 5; ++i) {
        const int level = std::uniform_int_distribution<int>(0, std::min(n, 3))(rng);
        BAdicPoint anchor = oracle::random_lattice_point(rng, spec, level);
        const long k = std::uniform_int_distribution<long>(-500, 500)(rng);
        const Rational u = q(k) / scale(spec, 2);
        const Rational bn(ipow(spec.b(), static_cast<unsigned>(n)));
        const Rational direct =
            eval_exact_badic(spec, *BAdicPoint::from_rational(spec, bn * anchor.value(spec) + u));
        const Rational x = anchor.value(spec) + u / bn;
        const Rational zoomed =
            bn * (eval_exact_badic(spec, *BAdicPoint::from_rational(spec, x, n + 2)) - partial_sum(spec, n, x));
        const Rational r = renormalize(spec, n, anchor, u);
        t.expect(r == direct && r == zoomed, "n=" + std::to_string(n) + " at " + anchor.lattice_str(spec));
      }
    }
  }
}

void ac6_divergence(Tally& t) {
  const auto spec = classic();
  const auto origin = BAdicPoint::make(spec, BigInt(0), 0);
  auto b_at = [&](const Rational& x) {
    return eval_exact_badic(spec, *BAdicPoint::from_rational(spec, x));
  };
  // h = 2^-1 is not on the scan grid h_n = 1/(p b^n), n >= 1.
  t.expect((b_at(q(1, 2)) - b_at(q(0))) / q(1, 2) == q(1), "slope at h = 1/2");
  const auto rows = divergence_scan(spec, origin, 19);
  t.expect(rows.size() == 19, "row count");
  for (const auto& row : rows) {
    const int m = row.n + 1;
    t.expect(row.h == pow2_neg(static_cast<unsigned>(m)), "h at n=" + std::to_string(row.n));
    t.expect(row.slope == q(m), "slope " + row.slope.str() + " at h = 2^-" + std::to_string(m));
    t.expect(oracle::partial_sum(spec, m + 1, row.h) == q(m) * row.h, "oracle at m=" + std::to_string(m));
  }
}

void ac7_density(Tally& t) {
  std::vector<SampledFunction::Sample> samples;
  for (int i = 0; i <= 256; ++i) {
    const Rational value = (i == 0 || i == 256)
                               ? q(0)
                               : oracle::from_mpq(mpq_class(std::sin(std::numbers::pi * i / 256.0)));
    samples.emplace_back(q(i, 256), value);
  }
  const SampledFunction f = SampledFunction::make(std::move(samples));
  const ApproximationResult r = approximate_function(f, q(1, 20));
  t.expect(r.total.hi < q(1, 20), "total.hi " + r.total.hi.str());
  t.expect(r.total.hi == r.interp_error.hi + r.series_error.hi, "total is the sum");

  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    const BlancmangeSpec spec = oracle::random_spec(rng);
    mpq_class m = 0;
    for (const auto& v : oracle::vertices_of(spec.gen())) m = std::max<mpq_class>(m, abs(v));
    const mpq_class bound = m / mpq_class(spec.c() * spec.p() - 1);
    const Enclosure d = series_distance(spec);
    t.expect(d.hi == oracle::from_mpq(bound), "series bound " + d.hi.str());
    t.expect(d.lo <= d.hi, "series enclosure order");
  }
}

void ac8_tail(Tally& t) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 1000; ++i) {
    const BlancmangeSpec& spec = corpus()[static_cast<std::size_t>(i) % corpus().size()];
    const Rational x = oracle::random_rational(rng, -1, 2, 1000);
    const int n = std::uniform_int_distribution<int>(0, 16)(rng);
    const Rational reference = oracle::partial_sum(spec, 64, x);
    t.expect(abs(reference - partial_sum(spec, n, x)) <= tail_bound(spec, n),
             "tail at n=" + std::to_string(n) + ", t=" + x.str());
  }
}

void ac9_render(Tally& t) {
  const RenderJob job{classic(), {2, 4, 6, 8, 10, 12}, q(1, 3), q(4), 6, 401, {}};
  const auto frames = compute_frames(job);
  t.expect(frames.size() == 6, "frame count");
  const SpotCheck check = spot_check(job, frames, 100, 9);
  t.expect(check.ok && check.cells == 100, "library spot check");

  const double budget = float_budget(job);
  std::mt19937_64 rng(9);
  for (int i = 0; i < 100; ++i) {
    const auto& frame = frames[static_cast<std::size_t>(i) % frames.size()];
    const auto row = std::uniform_int_distribution<std::size_t>(0, frame.abscissae.size() - 1)(rng);
    const auto col = std::uniform_int_distribution<std::size_t>(0, job.sums.size() - 1)(rng);
    const Rational exact = oracle::partial_sum(job.spec, job.sums[col], frame.abscissae[row]);
    const Rational cell = oracle::from_mpq(mpq_class(frame.values[row][col]));
    t.expect(abs(cell - exact) <= oracle::from_mpq(mpq_class(budget)), "cell error");
  }
  for (const auto& frame : frames) {
    const Rational expected = Rational(1) / Rational(ipow(4, static_cast<unsigned>(frame.index)));
    t.expect(frame.window.width() == expected, "width of frame " + std::to_string(frame.index));
  }
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<void(Tally&)> body;
  };
  const std::vector<Criterion> criteria = {
      {"AC1 functional-equation identity", ac1_functional_equation},
      {"AC2 classic values oracle", ac2_classic_values},
      {"AC3 non-affineness certificates", ac3_certificates},
      {"AC4 multiscale roughness invariance", ac4_roughness},
      {"AC5 renormalization identity", ac5_renormalization},
      {"AC6 divergence scan closed form", ac6_divergence},
      {"AC7 density pipeline", ac7_density},
      {"AC8 tail soundness", ac8_tail},
      {"AC9 render integrity", ac9_render},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Tally tally;
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    try {
      c.body(tally);
      detail = tally.summary();
    } catch (const std::exception& e) {
      tally.expect(false, std::string("exception: ") + e.what());
      detail = tally.summary();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %s (%s, %.2fs)\n", tally.ok() ? "PASS" : "FAIL", c.name, detail.c_str(), secs);
    failed += tally.ok() ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
