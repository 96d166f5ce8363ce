#pragma once

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "blanc/certify.hpp"
#include "blanc/series.hpp"

namespace blanc {

/// A sequence of magnified snapshots of partial sums B_{N_1}..B_{N_k}.
/// Frame 0 shows [0, 1]; each later frame shrinks the previous window by
/// `factor` about `center`.
struct RenderJob {
  BlancmangeSpec spec;
  std::vector<int> sums;
  Rational center;
  Rational factor;
  int frames = 6;
  int resolution = 401;
  std::filesystem::path out_dir;
};

inline constexpr std::size_t kMaxRenderSums = 6;

/// Throws Error(invalid_argument) for an empty or oversized sums list,
/// factor <= 1, resolution < 2 or frames < 1.
void validate(const RenderJob& job);

struct Frame {
  int index = 0;
  Interval window;
  int level = 0;  // lattice level of the abscissae
  std::vector<Rational> abscissae;
  std::vector<std::vector<double>> values;  // values[row][sum]
};

Interval frame_window(const RenderJob& job, int index);

/// Declared absolute error of every floating-point cell against the exact
/// partial sum: tail_bound(max N) + 2^-40.
double float_budget(const RenderJob& job);

Frame compute_frame(const RenderJob& job, int index);
/// All frames, computed concurrently. `progress` counts finished frames.
std::vector<Frame> compute_frames(const RenderJob& job, std::atomic<int>* progress = nullptr);

std::string frame_csv(const RenderJob& job, const Frame& frame);
std::string frame_svg(const RenderJob& job, const Frame& frame);
std::string render_manifest_json(const RenderJob& job, const std::vector<Frame>& frames);

/// Frame file stem, e.g. "frame_03".
std::string frame_stem(int index);

/// Writes frame_XX.csv, frame_XX.svg and manifest.json into out_dir.
std::vector<Frame> render(const RenderJob& job);

struct SpotCheck {
  int cells = 0;
  double max_error = 0.0;
  bool ok = true;
};

/// Compares `cells` random cells against exact rational partial sums.
SpotCheck spot_check(const RenderJob& job, const std::vector<Frame>& frames, int cells,
                     std::uint64_t seed);

}  // namespace blanc
