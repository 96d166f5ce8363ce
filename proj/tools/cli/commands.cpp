#include "cli/commands.hpp"

#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "blanc/approximate.hpp"
#include "blanc/certify.hpp"
#include "blanc/io.hpp"
#include "blanc/render.hpp"
#include "blanc/series.hpp"
#include "blanc/zoom.hpp"

namespace blanc::cli {

namespace {

namespace fs = std::filesystem;

struct SpecSource {
  std::string spec_path;
  std::string gen_path;
  std::optional<std::int64_t> c;

  void attach(CLI::App* cmd) {
    auto* spec = cmd->add_option("--spec", spec_path, "Spec JSON file");
    auto* gen = cmd->add_option("--gen", gen_path, "Generator JSON file");
    cmd->add_option("--c", c, "Dilation multiplier c (with --gen; default 1)");
    spec->excludes(gen);
  }

  bool given() const { return !spec_path.empty() || !gen_path.empty(); }

  BlancmangeSpec load() const {
    if (!spec_path.empty()) {
      BlancmangeSpec spec = io::load_spec(spec_path);
      return c ? BlancmangeSpec::make(spec.gen(), *c) : spec;
    }
    if (!gen_path.empty()) return BlancmangeSpec::make(io::load_generator(gen_path), c.value_or(1));
    throw Error(Errc::invalid_argument, "one of --spec or --gen is required");
  }
};

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw Error(Errc::invalid_argument, "bad integer list '" + text + "'");
    }
  }
  return out;
}

Interval parse_interval(const std::string& text) {
  std::istringstream in(text);
  std::string a, b, extra;
  if (!(in >> a >> b) || (in >> extra)) {
    throw Error(Errc::invalid_argument, "--interval expects \"RAT RAT\", got '" + text + "'");
  }
  return Interval::make(Rational::parse(a), Rational::parse(b));
}

int cmd_eval(const SpecSource& src, const std::string& at, const std::string& tol, bool json,
             std::ostream& out) {
  const BlancmangeSpec spec = src.load();
  const Rational t = Rational::parse(at);
  const Rational eps = Rational::parse(tol);
  const SeriesValue value = eval_enclosure(spec, t, eps);
  std::optional<Rational> exact;
  std::optional<BAdicPoint> pt = BAdicPoint::from_rational(spec, t);
  if (pt) exact = eval_exact_badic(spec, *pt);
  if (json) {
    out << io::series_value_json(spec, value, exact) << '\n';
    return kSuccess;
  }
  if (exact) out << exact->str() << '\n';
  out << "t " << (pt ? pt->lattice_str(spec) : t.str()) << '\n'
      << "enclosure [" << value.enclosure.lo.str() << ", " << value.enclosure.hi.str() << "]\n"
      << "n_used " << value.n_used << '\n';
  if (!exact) out << "approx " << value.enclosure.midpoint().to_double() << '\n';
  return kSuccess;
}

int cmd_certify(const SpecSource& src, const std::string& interval, std::ostream& out) {
  const BlancmangeSpec spec = src.load();
  const NonAffineWitness w = nonaffine_certificate(spec, parse_interval(interval));
  out << io::witness_json(w) << '\n';
  return kSuccess;
}

struct RenderFlags {
  std::string job_path;
  std::string center, factor, sums, out_dir;
  std::optional<int> frames, res;
};

// Flags override the job file, which overrides the defaults.
RenderJob build_render_job(const SpecSource& src, const RenderFlags& f) {
  std::optional<BlancmangeSpec> spec;
  std::string center = "1/3", factor = "4", sums = "2,4,6,8,10,12", out_dir = "frames";
  int frames = 6, res = 401;

  if (!f.job_path.empty()) {
    const fs::path job_file(f.job_path);
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(io::read_file(job_file));
    } catch (const nlohmann::json::exception& e) {
      throw Error(Errc::invalid_argument, std::string("job JSON: ") + e.what());
    }
    const fs::path base = job_file.parent_path();
    try {
      if (j.contains("spec")) {
        spec = j["spec"].is_string() ? io::load_spec(base / j["spec"].get<std::string>())
                                     : io::parse_spec_json(j["spec"].dump(), base);
      }
      if (j.contains("center")) center = j["center"].get<std::string>();
      if (j.contains("factor")) factor = j["factor"].get<std::string>();
      if (j.contains("frames")) frames = j["frames"].get<int>();
      if (j.contains("resolution")) res = j["resolution"].get<int>();
      if (j.contains("out")) out_dir = (base / j["out"].get<std::string>()).string();
      if (j.contains("sums")) {
        sums.clear();
        for (const auto& n : j["sums"]) sums += (sums.empty() ? "" : ",") + std::to_string(n.get<int>());
      }
    } catch (const nlohmann::json::exception& e) {
      throw Error(Errc::invalid_argument, std::string("job JSON: ") + e.what());
    }
  }
  if (src.given()) spec = src.load();
  if (!spec) throw Error(Errc::invalid_argument, "render needs --spec, --gen or a job file spec");
  if (!f.center.empty()) center = f.center;
  if (!f.factor.empty()) factor = f.factor;
  if (!f.sums.empty()) sums = f.sums;
  if (!f.out_dir.empty()) out_dir = f.out_dir;
  if (f.frames) frames = *f.frames;
  if (f.res) res = *f.res;

  RenderJob job{*spec, parse_int_list(sums), Rational::parse(center), Rational::parse(factor),
                frames, res, out_dir};
  validate(job);
  return job;
}

int cmd_render(const SpecSource& src, const RenderFlags& flags, std::ostream& out) {
  const RenderJob job = build_render_job(src, flags);
  const auto frames = render(job);
  out << "wrote " << frames.size() << " frames to " << job.out_dir.string()
      << " (float budget " << float_budget(job) << ")\n";
  return kSuccess;
}

int cmd_approx(const std::string& samples, const std::string& eps_text,
               std::optional<std::int64_t> p_hint, const std::string& out_path,
               std::ostream& out) {
  const SampledFunction f = io::load_samples(samples);
  const Rational eps = Rational::parse(eps_text);
  ApproximationOptions options;
  options.p_hint = p_hint;
  const ApproximationResult result = approximate_function(f, eps, options);
  const std::string text = io::approximation_json(result, eps);
  if (out_path.empty()) {
    out << text << '\n';
  } else {
    io::write_file(out_path, text + "\n");
  }
  return result.total.hi < eps ? kSuccess : kDomainError;
}

int cmd_scan(const SpecSource& src, const std::string& t0_text, int depth, bool left, bool json,
             std::ostream& out) {
  const BlancmangeSpec spec = src.load();
  const Rational t0 = Rational::parse(t0_text);
  const auto pt = BAdicPoint::from_rational(spec, t0);
  if (!pt) throw Error(Errc::not_on_lattice, "--t0 " + t0.str() + " is not on the b-adic lattice");
  const auto rows =
      divergence_scan(spec, *pt, depth, left ? ScanDirection::left : ScanDirection::right);
  if (json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) arr.push_back({{"n", r.n}, {"h", r.h.str()}, {"slope", r.slope.str()}});
    out << arr.dump() << '\n';
  } else {
    out << io::scan_csv(rows);
  }
  return kSuccess;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized blancmange functions: exact evaluation, certificates, rendering"};
  app.require_subcommand(1);

  SpecSource src;
  std::string at, tol = "1/1000000000", interval, samples, eps, t0, out_file;
  bool json = false, left = false;
  int depth = 0;
  std::optional<std::int64_t> p_hint;
  RenderFlags rflags;

  auto* eval = app.add_subcommand("eval", "Evaluate B at a rational point");
  src.attach(eval);
  eval->add_option("--at", at, "Point t")->required();
  eval->add_option("--tol", tol, "Enclosure tolerance (rational)");
  eval->add_flag("--json", json, "JSON output");

  auto* certify = app.add_subcommand("certify", "Certify B is not affine on an interval");
  src.attach(certify);
  certify->add_option("--interval", interval, "\"RAT RAT\"")->required();
  certify->add_flag("--json", json, "JSON output (always on)");

  auto* rend = app.add_subcommand("render", "Render multiscale snapshots of partial sums");
  src.attach(rend);
  rend->add_option("--job", rflags.job_path, "Render job JSON file");
  rend->add_option("--center", rflags.center, "Magnification center");
  rend->add_option("--factor", rflags.factor, "Magnification factor (> 1)");
  rend->add_option("--frames", rflags.frames, "Number of frames");
  rend->add_option("--sums", rflags.sums, "Comma-separated partial-sum orders (at most 6)");
  rend->add_option("--res", rflags.res, "Samples per frame");
  rend->add_option("--out", rflags.out_dir, "Output directory");

  auto* approx = app.add_subcommand("approx", "Approximate sampled f by an element of B");
  approx->add_option("samples", samples, "CSV with columns t,f")->required();
  approx->add_option("--eps", eps, "Target uniform error")->required();
  approx->add_option("--p-hint", p_hint, "Starting subdivision count");
  approx->add_option("--out", out_file, "Write result JSON here instead of stdout");
  approx->add_flag("--json", json, "JSON output (always on)");

  auto* scan = app.add_subcommand("scan", "Difference quotients of B at a lattice point");
  src.attach(scan);
  scan->add_option("--t0", t0, "Lattice point")->required();
  scan->add_option("--depth", depth, "Number of scales N")->required()->check(CLI::PositiveNumber);
  scan->add_flag("--left", left, "Use left increments");
  scan->add_flag("--json", json, "JSON output");

  auto* self = app.add_subcommand("selftest", "Run built-in consistency checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    if (*eval) return cmd_eval(src, at, tol, json, out);
    if (*certify) return cmd_certify(src, interval, out);
    if (*rend) return cmd_render(src, rflags, out);
    if (*approx) return cmd_approx(samples, eps, p_hint, out_file, out);
    if (*scan) return cmd_scan(src, t0, depth, left, json, out);
    if (*self) return selftest(out);
  } catch (const InconsistencyError& e) {
    err << "internal inconsistency: " << e.what() << '\n';
    return kInternalInconsistency;
  } catch (const Error& e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
    return kDomainError;
  }
  return kUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("blanc");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace blanc::cli
