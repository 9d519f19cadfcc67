#pragma once

#include <complex>
#include <vector>

#include "cyclerange/charpoly.hpp"
#include "cyclerange/dense_eig.hpp"
#include "cyclerange/weights.hpp"

namespace cyclerange {

/// Greatest real root of a monic real polynomial to ~1e-12 absolute.
double largest_root(const poly::Poly& monic);

/// lambda_1(2 Re(e^{i theta} S(a))) expressed through t = cos(n theta):
/// the largest root of f(z) - 2 alpha t.  Requires t in [-1, 1].
double support_max(const WeightVector& a, double t);
double support_max(const CharPolyFamily& family, double t);

/// r(A) = support_max(a, 1) / 2; the maximum over t sits at t = 1 because
/// alpha >= 0 makes the top root nondecreasing in t.
double numerical_radius(const WeightVector& a);

/// Largest roots of f(z) - 2 alpha t over a t-grid.  Evaluation runs from
/// the largest t downward so each solve warm-starts from the previous
/// root, which bounds the current one from above.
struct SupportProfile {
    std::vector<double> t;  // descending
    std::vector<double> z;  // z[i] = top root at t[i]
};
SupportProfile support_profile(const CharPolyFamily& family, std::vector<double> t_values);

/// Chebyshev-Lobatto nodes cos(pi k/(m-1)), k = 0..m-1: descending from 1
/// to -1, endpoints included.
std::vector<double> chebyshev_nodes(int m);

/// Full spectrum of 2 Re(e^{i theta} S(a)) in descending order, computed
/// with cyclic Jacobi rotations on the real symmetric embedding of the
/// Hermitian matrix.  Test oracle and eigenvector source; O(n^3) and
/// deliberately independent of the polynomial route.
std::vector<double> dense_oracle(const WeightVector& a, double theta);

/// The Hermitian matrix 2 Re(e^{i theta} S(a)) itself.
dense::HermMatrix two_re_matrix(const WeightVector& a, double theta);

/// Eigensystem of 2 Re(e^{i theta} S(a)) with complex eigenvectors.
dense::HermEigenSystem dense_eigensystem(const WeightVector& a, double theta);

}  // namespace cyclerange
