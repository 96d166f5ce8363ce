#include "blanc/render.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <future>
#include <random>
#include <sstream>

#include "blanc/io.hpp"

namespace blanc {

namespace {

constexpr int kMaxRenderLevel = 64;
constexpr std::array<const char*, kMaxRenderSums> kPalette = {
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#17becf"};

std::string fmt_double(double x, const char* spec = "%.17g") {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, x);
  return buf;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += ch;
    }
  }
  return out;
}

}  // namespace

void validate(const RenderJob& job) {
  if (job.sums.empty() || job.sums.size() > kMaxRenderSums) {
    throw Error(Errc::invalid_argument, "render needs between 1 and 6 partial-sum orders, got " +
                                            std::to_string(job.sums.size()));
  }
  for (int n : job.sums) {
    if (n < 0) throw Error(Errc::invalid_argument, "partial-sum orders must be >= 0");
  }
  if (!(job.factor > Rational(1))) {
    throw Error(Errc::invalid_argument, "magnification factor must be > 1, got " + job.factor.str());
  }
  if (job.resolution < 2) throw Error(Errc::invalid_argument, "resolution must be >= 2");
  if (job.frames < 1) throw Error(Errc::invalid_argument, "frames must be >= 1");
}

Interval frame_window(const RenderJob& job, int index) {
  Rational shrink(1);
  for (int i = 0; i < index; ++i) shrink /= job.factor;
  return {job.center - job.center * shrink, job.center + (Rational(1) - job.center) * shrink};
}

double float_budget(const RenderJob& job) {
  const int max_n = *std::max_element(job.sums.begin(), job.sums.end());
  return tail_bound(job.spec, max_n).to_double() + std::ldexp(1.0, -40);
}

Frame compute_frame(const RenderJob& job, int index) {
  validate(job);
  Frame frame;
  frame.index = index;
  frame.window = frame_window(job, index);
  const Rational width = frame.window.width();

  // Lattice spacing at most a quarter of the nominal sample step, so the
  // snapped abscissae stay distinct.
  const Rational needed(4L * (job.resolution - 1));
  BigInt den(static_cast<long>(job.spec.p()));
  int level = 0;
  while (Rational(den) * width < needed) {
    if (++level > kMaxRenderLevel) {
      throw Error(Errc::level_cap_exceeded, "frame " + std::to_string(index) +
                                                " needs lattice level beyond 64");
    }
    den *= job.spec.b();
  }
  frame.level = level;

  const BigInt first = ceil(frame.window.lo * Rational(den));
  const BigInt last = floor(frame.window.hi * Rational(den));
  const Rational step = width / Rational(job.resolution - 1);
  frame.abscissae.reserve(static_cast<std::size_t>(job.resolution));
  frame.values.reserve(static_cast<std::size_t>(job.resolution));
  for (int k = 0; k < job.resolution; ++k) {
    const Rational nominal = frame.window.lo + Rational(k) * step;
    BigInt idx = floor(nominal * Rational(den));
    idx = std::clamp(idx, first, last);
    const BAdicPoint pt = BAdicPoint::make(job.spec, idx, level);
    const auto exact = partial_sums_badic(job.spec, pt, job.sums);
    std::vector<double> row;
    row.reserve(exact.size());
    for (const auto& v : exact) row.push_back(v.to_double());
    frame.abscissae.push_back(Rational(idx, den));
    frame.values.push_back(std::move(row));
  }
  return frame;
}

std::vector<Frame> compute_frames(const RenderJob& job, std::atomic<int>* progress) {
  validate(job);
  std::vector<std::future<Frame>> pending;
  pending.reserve(static_cast<std::size_t>(job.frames));
  for (int i = 0; i < job.frames; ++i) {
    pending.push_back(std::async(std::launch::async, [&job, i, progress] {
      Frame f = compute_frame(job, i);
      if (progress) progress->fetch_add(1, std::memory_order_relaxed);
      return f;
    }));
  }
  std::vector<Frame> frames;
  frames.reserve(pending.size());
  for (auto& f : pending) frames.push_back(f.get());
  return frames;
}

std::string frame_stem(int index) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "frame_%02d", index);
  return buf;
}

std::string frame_csv(const RenderJob& job, const Frame& frame) {
  std::string out = "t";
  for (int n : job.sums) out += ",B_" + std::to_string(n);
  out += '\n';
  for (std::size_t r = 0; r < frame.abscissae.size(); ++r) {
    out += frame.abscissae[r].str();
    for (double v : frame.values[r]) out += "," + fmt_double(v);
    out += '\n';
  }
  return out;
}

std::string frame_svg(const RenderJob& job, const Frame& frame) {
  constexpr double kWidth = 760, kHeight = 460;
  constexpr double kLeft = 80, kRight = 150, kTop = 46, kBottom = 50;
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;

  double y_min = INFINITY, y_max = -INFINITY;
  for (const auto& row : frame.values) {
    for (double v : row) {
      y_min = std::min(y_min, v);
      y_max = std::max(y_max, v);
    }
  }
  double pad = (y_max - y_min) * 0.05;
  if (pad == 0) pad = std::max(std::abs(y_max) * 1e-9, 1e-300);
  y_min -= pad;
  y_max += pad;

  const Rational width = frame.window.width();
  auto px = [&](const Rational& t) { return kLeft + ((t - frame.window.lo) / width).to_double() * plot_w; };
  auto py = [&](double v) { return kTop + (y_max - v) / (y_max - y_min) * plot_h; };

  std::ostringstream svg;
  svg << R"(<svg xmlns="http://www.w3.org/2000/svg" width=")" << kWidth << R"(" height=")"
      << kHeight << R"(" viewBox="0 0 )" << kWidth << ' ' << kHeight << R"(">)" << '\n';
  svg << R"(<rect width="100%" height="100%" fill="white"/>)" << '\n';
  svg << "<text x=\"" << kLeft << "\" y=\"24\" font-family=\"sans-serif\" font-size=\"14\">"
      << xml_escape("frame " + std::to_string(frame.index) + ": magnification " +
                    job.factor.str() + "^" + std::to_string(frame.index) + " about " +
                    job.center.str())
      << "</text>\n";
  svg << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << plot_w << "\" height=\""
      << plot_h << R"(" fill="none" stroke="black"/>)" << '\n';

  const auto label = [&](double x, double y, const std::string& text, const char* anchor) {
    svg << "<text x=\"" << fmt_double(x, "%.2f") << "\" y=\"" << fmt_double(y, "%.2f")
        << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"" << anchor << "\">"
        << xml_escape(text) << "</text>\n";
  };
  label(kLeft, kTop + plot_h + 18, fmt_double(frame.window.lo.to_double(), "%.12g"), "start");
  label(kLeft + plot_w, kTop + plot_h + 18, fmt_double(frame.window.hi.to_double(), "%.12g"), "end");
  label(kLeft - 6, kTop + plot_h, fmt_double(y_min, "%.8g"), "end");
  label(kLeft - 6, kTop + 10, fmt_double(y_max, "%.8g"), "end");

  for (std::size_t s = 0; s < job.sums.size(); ++s) {
    svg << "<polyline fill=\"none\" stroke-width=\"1.2\" stroke=\"" << kPalette[s] << "\" points=\"";
    for (std::size_t r = 0; r < frame.abscissae.size(); ++r) {
      if (r) svg << ' ';
      svg << fmt_double(px(frame.abscissae[r]), "%.3f") << ','
          << fmt_double(py(frame.values[r][s]), "%.3f");
    }
    svg << "\"/>\n";
  }

  // Legend sits in the right margin so it never overlaps the plot.
  const double lx = kLeft + plot_w + 16;
  const double ly = kTop;
  svg << "<rect x=\"" << lx << "\" y=\"" << ly << "\" width=\"" << (kRight - 28) << "\" height=\""
      << (12 + 18 * job.sums.size()) << R"(" fill="white" stroke="#888"/>)" << '\n';
  for (std::size_t s = 0; s < job.sums.size(); ++s) {
    const double y = ly + 16 + 18 * static_cast<double>(s);
    svg << "<line x1=\"" << lx + 8 << "\" y1=\"" << y - 4 << "\" x2=\"" << lx + 32 << "\" y2=\""
        << y - 4 << "\" stroke=\"" << kPalette[s] << R"(" stroke-width="2"/>)" << '\n';
    label(lx + 38, y, "B_" + std::to_string(job.sums[s]), "start");
  }
  svg << "</svg>\n";
  return svg.str();
}

std::string render_manifest_json(const RenderJob& job, const std::vector<Frame>& frames) {
  std::ostringstream out;
  out << "{\n  \"spec\": " << io::spec_json(job.spec) << ",\n  \"center\": \"" << job.center.str()
      << "\",\n  \"factor\": \"" << job.factor.str() << "\",\n  \"sums\": [";
  for (std::size_t i = 0; i < job.sums.size(); ++i) out << (i ? ", " : "") << job.sums[i];
  out << "],\n  \"float_budget\": " << fmt_double(float_budget(job)) << ",\n  \"frames\": [\n";
  for (std::size_t i = 0; i < frames.size(); ++i) {
    const Frame& f = frames[i];
    out << "    {\"index\": " << f.index << ", \"lo\": \"" << f.window.lo.str() << "\", \"hi\": \""
        << f.window.hi.str() << "\", \"width\": \"" << f.window.width().str()
        << "\", \"level\": " << f.level << ", \"csv\": \"" << frame_stem(f.index)
        << ".csv\", \"svg\": \"" << frame_stem(f.index) << ".svg\"}"
        << (i + 1 < frames.size() ? "," : "") << '\n';
  }
  out << "  ]\n}\n";
  return out.str();
}

std::vector<Frame> render(const RenderJob& job) {
  validate(job);
  std::error_code ec;
  std::filesystem::create_directories(job.out_dir, ec);
  if (ec || !std::filesystem::is_directory(job.out_dir)) {
    throw Error(Errc::io_error, "cannot create output directory '" + job.out_dir.string() + "'");
  }
  std::vector<Frame> frames = compute_frames(job);
  for (const Frame& f : frames) {
    io::write_file(job.out_dir / (frame_stem(f.index) + ".csv"), frame_csv(job, f));
    io::write_file(job.out_dir / (frame_stem(f.index) + ".svg"), frame_svg(job, f));
  }
  io::write_file(job.out_dir / "manifest.json", render_manifest_json(job, frames));
  return frames;
}

SpotCheck spot_check(const RenderJob& job, const std::vector<Frame>& frames, int cells,
                     std::uint64_t seed) {
  SpotCheck result;
  if (frames.empty()) return result;
  std::mt19937_64 rng(seed);
  const Rational budget(mpq_class(float_budget(job)).get_num(), mpq_class(float_budget(job)).get_den());
  for (int c = 0; c < cells; ++c) {
    const Frame& f = frames[rng() % frames.size()];
    const std::size_t row = rng() % f.abscissae.size();
    const std::size_t col = rng() % job.sums.size();
    const Rational exact = partial_sum(job.spec, job.sums[col], f.abscissae[row]);
    const mpq_class cell(f.values[row][col]);  // exact binary value of the double
    const Rational err = abs(Rational(cell.get_num(), cell.get_den()) - exact);
    result.max_error = std::max(result.max_error, err.to_double());
    result.ok = result.ok && err <= budget;
    ++result.cells;
  }
  return result;
}

}  // namespace blanc
