#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "blanc/approximate.hpp"
#include "blanc/certify.hpp"
#include "blanc/render.hpp"
#include "blanc/series.hpp"
#include "blanc/zoom.hpp"
#include "cli/commands.hpp"

namespace blanc::cli {

namespace {

Rational q(long n, long d = 1) { return Rational(BigInt(n), BigInt(d)); }

std::vector<BlancmangeSpec> fixture_specs() {
  std::vector<BlancmangeSpec> specs;
  specs.push_back(BlancmangeSpec::make(classic_generator(), 1));
  specs.push_back(BlancmangeSpec::make(Generator::make(3, {q(0), q(1), q(1, 2), q(0)}), 1));
  specs.push_back(BlancmangeSpec::make(Generator::make(3, {q(0), q(1), q(1, 2), q(0)}), 2));
  specs.push_back(
      BlancmangeSpec::make(Generator::make(4, {q(0), q(-1, 3), q(1, 4), q(-1, 3), q(0)}), 3));
  specs.push_back(
      BlancmangeSpec::make(Generator::make(5, {q(0), q(0), q(1, 7), q(0), q(0), q(0)}), 3));
  return specs;
}

}  // namespace

int selftest(std::ostream& out) {
  const auto classic = BlancmangeSpec::make(classic_generator(), 1);
  struct Check {
    std::string name;
    std::function<bool()> body;
  };
  const std::vector<Check> checks = {
      {"classic lattice values",
       [&] {
         auto at = [&](long n, long d) {
           return eval_exact_badic(classic, *BAdicPoint::from_rational(classic, q(n, d)));
         };
         return at(1, 4) == q(1, 2) && at(1, 2) == q(1, 2) && at(1, 8) == q(3, 8) &&
                at(0, 1) == q(0);
       }},
      {"enclosure of B(1/3) contains 2/3",
       [&] { return eval_enclosure(classic, q(1, 3), q(1, 1000000000)).enclosure.contains(q(2, 3)); }},
      {"functional equation on fixtures",
       [&] {
         for (const auto& spec : fixture_specs()) {
           for (int n = 0; n <= 6; ++n) {
             for (long j = -3; j <= 40; j += 7) {
               if (!functional_eq_residual(spec, n, BAdicPoint::make(spec, BigInt(j), 2)).is_zero()) {
                 return false;
               }
             }
           }
         }
         return true;
       }},
      {"non-affineness certificates",
       [&] {
         const auto w = nonaffine_certificate(classic, Interval::make(q(0), q(1, 2)));
         if (w.det != q(1, 8)) return false;
         for (const auto& spec : fixture_specs()) {
           if (nonaffine_certificate(spec, Interval::make(q(1, 5), q(2, 7))).det.is_zero()) return false;
         }
         return true;
       }},
      {"renormalization identity",
       [&] {
         for (const auto& spec : fixture_specs()) {
           const auto anchor = BAdicPoint::make(spec, BigInt(1), 1);
           for (int n = 1; n <= 4; ++n) {
             const Rational u = q(3, spec.p() * spec.b());
             const Rational target = Rational(ipow(spec.b(), static_cast<unsigned>(n))) *
                                         anchor.value(spec) + u;
             if (renormalize(spec, n, anchor, u) !=
                 eval_exact_badic(spec, *BAdicPoint::from_rational(spec, target))) {
               return false;
             }
           }
         }
         return true;
       }},
      {"divergence scan closed form",
       [&] {
         const auto rows = divergence_scan(classic, BAdicPoint::make(classic, BigInt(0), 0), 12);
         for (const auto& r : rows) {
           if (r.slope != Rational(r.n + 1)) return false;
         }
         return true;
       }},
      {"series distance bound",
       [&] {
         for (const auto& spec : fixture_specs()) {
           const Enclosure d = series_distance(spec);
           if (d.hi != sup_norm(spec.gen()).value / Rational(spec.b() - 1) || d.lo > d.hi) return false;
         }
         return true;
       }},
      {"render spot check",
       [&] {
         RenderJob job{classic, {2, 4, 8}, q(1, 3), q(4), 3, 33, {}};
         const auto frames = compute_frames(job);
         return spot_check(job, frames, 50, 7).ok;
       }},
  };

  int failures = 0;
  for (const auto& check : checks) {
    bool ok = false;
    try {
      ok = check.body();
    } catch (const std::exception& e) {
      out << "  exception: " << e.what() << '\n';
    }
    out << (ok ? "[PASS] " : "[FAIL] ") << check.name << '\n';
    failures += ok ? 0 : 1;
  }
  out << (failures == 0 ? "selftest passed" : "selftest FAILED") << '\n';
  return failures == 0 ? kSuccess : kInternalInconsistency;
}

}  // namespace blanc::cli
