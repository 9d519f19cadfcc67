#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "cyclerange/weights.hpp"

namespace cyclerange {

/// Sampled boundary of W(S(a)), ordered by supporting angle.  When some
/// weight vanishes the range is a disk and only the radius matters;
/// otherwise the curve inherits the n-fold rotation symmetry.
struct BoundaryCurve {
    std::vector<double> theta;                 // supporting direction per point, in [0, 2 pi)
    std::vector<std::complex<double>> points;
    int symmetry_order = 0;                    // n for positive weights, 0 for the disk
    std::optional<double> radius;              // set iff disk

    bool is_disk() const { return radius.has_value(); }
};

/// m supporting directions; positive-weight case samples [0, 2 pi/n) at
/// midpoints and replicates by the n-fold rotation.  Boundary points come
/// from the top eigenvector's Rayleigh image u* A u; a degenerate top
/// eigenvalue yields both endpoints of the flat edge.  Requires m >= 8.
BoundaryCurve sample_boundary(const WeightVector& a, int m, int threads = 1);

enum class CurveFormat { Csv, Json };

/// CSV: optional "# disk,<radius>" line, then theta,re,im rows.
/// JSON mirrors BoundaryCurve; both carry 17 significant digits.
std::string export_curve(const BoundaryCurve& curve, CurveFormat format);

/// Inverse of the JSON export.
BoundaryCurve parse_curve_json(const std::string& text);

}  // namespace cyclerange
