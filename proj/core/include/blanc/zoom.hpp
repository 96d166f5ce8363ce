#pragma once

#include <vector>

#include "blanc/certify.hpp"
#include "blanc/series.hpp"

namespace blanc {

// Finite-scale dilation: zooming into B by b^n about a lattice anchor and
// subtracting the partial sum B_n reproduces B itself.

/// b^n * (B(t0 + u / b^n) - B_n(t0 + u / b^n)), evaluated exactly. Equals
/// B(b^n t0 + u). Throws Error(invalid_argument) when the anchor level
/// exceeds n and Error(not_on_lattice) when t0 + u / b^n is not a lattice
/// point.
Rational renormalize(const BlancmangeSpec& spec, int n, const BAdicPoint& anchor,
                     const Rational& u);

/// Sampled sup of |f - chord| over an interval, f being B or a partial sum.
struct DefectReport {
  int n = 0;  // sampling lattice level
  Enclosure defect;
  Enclosure normalized;  // defect / width
};

/// Sup of |B - chord through the endpoint values| over the level-grid_level
/// lattice points in the closed interval. defect.lo is a certified lower
/// bound on the sup over the whole interval; defect.hi only widens the
/// sampled maximum by the endpoint enclosure slack.
DefectReport chord_defect(const BlancmangeSpec& spec, const Interval& interval, int grid_level);

/// Same measurement applied to the partial sum B_order; exact everywhere.
DefectReport chord_defect_partial(const BlancmangeSpec& spec, int order,
                                  const Interval& interval, int grid_level);

enum class ScanDirection { right, left };

struct ScanRow {
  int n;
  Rational h;
  Rational slope;
};

/// Difference quotients of B at a lattice point t0 for h_n = 1/(p b^n),
/// n = 1..depth: (B(t0 + h) - B(t0)) / h, or (B(t0) - B(t0 - h)) / h for
/// the left direction.
std::vector<ScanRow> divergence_scan(const BlancmangeSpec& spec, const BAdicPoint& t0, int depth,
                                     ScanDirection direction = ScanDirection::right);

}  // namespace blanc
