#pragma once

#include <array>
#include <optional>
#include <vector>

#include "blanc/series.hpp"

namespace blanc {

/// Open rational interval (lo, hi).
struct Interval {
  Rational lo;
  Rational hi;

  /// Throws Error(empty_interval) unless lo < hi.
  static Interval make(Rational lo, Rational hi);
  Rational width() const { return hi - lo; }
};

/// I_{m,j} = (j/(p b^m), (j+1)/(p b^m)). B_{m+1} is affine on its closure.
struct GridInterval {
  int m = 0;
  BigInt j;

  Rational lo(const BlancmangeSpec& spec) const;
  Rational hi(const BlancmangeSpec& spec) const;
  Rational width(const BlancmangeSpec& spec) const;

  friend bool operator==(const GridInterval&, const GridInterval&) = default;
};

/// B_n(t) = slope * t + intercept on the closed interval. An empty
/// interval means the whole real line (only for n = 0).
struct AffinePiece {
  std::optional<GridInterval> interval;
  Rational slope;
  Rational intercept;
};

/// Three lattice points on the graph of B that are not collinear.
struct NonAffineWitness {
  GridInterval interval;
  BAdicPoint left;
  BAdicPoint right;
  BAdicPoint middle;
  std::array<Rational, 3> abscissae;  // left, right, middle
  std::array<Rational, 3> values;     // B at the same points
  Rational det;
};

inline constexpr int kDefaultLevelCap = 64;

/// (t_r - t_l)(v_m - v_l) - (t_m - t_l)(v_r - v_l).
Rational collinearity_det(const std::array<Rational, 3>& t, const std::array<Rational, 3>& v);

/// Pieces of B_n on level n-1 grid intervals with index in [first, last).
/// For n = 0 returns the single piece 0 over the whole line.
std::vector<AffinePiece> affine_pieces(const BlancmangeSpec& spec, int n, const BigInt& first,
                                       const BigInt& last);

/// Grid interval of least level (then least j) whose closure lies in the
/// closure of I. I is first shifted by an integer so that its left end
/// lies in [0, 1); the result is shifted back. Throws
/// Error(interval_out_of_range) when the shifted interval leaves [0, 1] and
/// Error(level_cap_exceeded) past level_cap.
GridInterval locate_grid_interval(const BlancmangeSpec& spec, const Interval& interval,
                                  int level_cap = kDefaultLevelCap);

/// Middle-point index j0 in (j b, (j+1) b) used by the certificate: the
/// one maximizing |v_{j0 mod p}|, smallest on ties.
BigInt select_middle_index(const BlancmangeSpec& spec, const GridInterval& gi);

/// Witness that B is not affine on I. Throws InconsistencyError if the
/// determinant comes out zero.
NonAffineWitness nonaffine_certificate(const BlancmangeSpec& spec, const Interval& interval,
                                       int level_cap = kDefaultLevelCap);
NonAffineWitness nonaffine_certificate(const BlancmangeSpec& spec, const GridInterval& gi);

/// |v_{i0}| / b^(m+1): the deviation of B from its chord over I_{m,j} at
/// the selected middle point.
Rational roughness_lower_bound(const BlancmangeSpec& spec, const GridInterval& gi);

}  // namespace blanc
