#pragma once

#include <optional>

#include "cyclerange/charpoly.hpp"
#include "cyclerange/weights.hpp"

namespace cyclerange {

enum class VerdictKind { Included, NotIncluded, Indeterminate };

/// Outcome of a numerical-range inclusion test W(B) <= W(A).
/// margin is the minimum over tested directions of
/// lambda_1(Re(e^{i theta} A)) - lambda_1(Re(e^{i theta} B)).
struct InclusionVerdict {
    VerdictKind kind = VerdictKind::Indeterminate;
    double margin = 0.0;
    std::optional<double> witness_t;      // t = cos(n theta) where B pokes out
    std::optional<double> witness_theta;  // set instead of witness_t on angle grids
    double tolerance = 0.0;
};

/// Elementary symmetric values (e1, e2, e3) of a positive triple; the
/// degree-6 family becomes such a cubic in x = z^2.
struct CubicTriple {
    double e1 = 0.0, e2 = 0.0, e3 = 0.0;
};

enum class CubicComparison { FirstRootSmallerIsD, Inconclusive };

/// Support-function dominance on a Chebyshev t-grid (equal sizes) or a
/// theta grid (different sizes), with adaptive refinement near the minimum
/// margin.  Default tolerance 1e-9 * (1 + max support).
InclusionVerdict includes_general(const WeightVector& A, const WeightVector& B,
                                  int grid_size = 257, std::optional<double> tol = {});

/// Phase-reduced variant for complex-weight inputs: compares the rotated
/// support functions on a theta grid of n * grid_size points.
InclusionVerdict includes_general(const PhaseReduction& A, const PhaseReduction& B,
                                  int grid_size = 257, std::optional<double> tol = {});

/// Closed-form criteria for n = 2..6: ellipse axes (n = 2), endpoint root
/// comparison (n = 3), explicit top-root formulas (n = 4), and the
/// matching-invariant cyclic-sum criteria (n = 5, 6).  Indeterminate when
/// the preconditions of the n = 5 / n = 6 criteria fail.
InclusionVerdict includes_closed_form(const WeightVector& A, const WeightVector& B,
                                      std::optional<double> tol = {});

enum class IncludeMethod { Auto, Grid, Closed };

/// Auto = closed form, then polynomial ratio criterion (only when the
/// z_{-1} ordering hypothesis holds), then grid.
InclusionVerdict includes(const WeightVector& A, const WeightVector& B,
                          IncludeMethod method = IncludeMethod::Auto, int grid_size = 257,
                          std::optional<double> tol = {});

/// Largest-root comparison of two monic cubics sharing e1, with
/// c.e2 < d.e2: decides d1 < c1 via the crossing point
/// x0 = (d.e3 - c.e3)/(d.e2 - c.e2) against the critical-point bound of
/// the c-cubic (equal e3 needs no crossing point at all).
CubicComparison compare_cubic(const CubicTriple& c, const CubicTriple& d);

/// Cubic in x = z^2 of a degree-6 family at cos(6 theta) = t.
CubicTriple cubic_from_family(const CharPolyFamily& family, double t);

}  // namespace cyclerange
