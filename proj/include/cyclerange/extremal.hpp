#pragma once

#include <optional>
#include <vector>

#include "cyclerange/inclusion.hpp"
#include "cyclerange/weights.hpp"

namespace cyclerange {

struct ExtremalReport {
    WeightVector weights;
    double objective = 0.0;                     // lambda_1 or numerical radius
    std::optional<std::vector<double>> eigvec;  // Perron eigenvector when known
};

/// Checks that every vertex e^{i 2k pi/n} of the regular n-gon lies inside
/// W(S(a)) for product-one weights; margin ~ 0 exactly when all weights
/// are 1.  Throws on product != 1.
InclusionVerdict regular_ngon_check(const WeightVector& a, int grid_per_vertex = 256);

/// Weights minimizing lambda_1(A + A^t) over product-one open paths
/// (a_n = 0): ends 2^{(n-3)/(2n-2)}, middle 2^{-1/(n-1)}, objective
/// 2^{(n-2)/(n-1)}; includes the unit Perron eigenvector.
ExtremalReport min_path_weights(int n);

/// Weights minimizing the numerical radius over unit-Frobenius cyclic
/// shifts with zero weight product.  Even n: sqrt(2/n) (1,0,1,0,...);
/// odd n = 2k+1: sqrt(1/k) (1,0,...,1,0,cos t,sin t,0) — any t in
/// [0, pi/2] gives the same radius.
ExtremalReport min_frobenius_zero_product(int n, double theta = 0.7853981633974483);

struct DoubleEigenResult {
    double hat_a_nm1 = 0.0;  // replacement weight a_{n-1}
    double hat_a_n = 0.0;    // replacement corner weight a_n
    double mu = 0.0;         // the doubled smallest eigenvalue
    double x0 = 0.0;         // bisection parameter scaling the border column
};

/// Given the first n-2 positive weights of an odd-size open path, finds
/// positive a_{n-1}, a_n closing the cycle so that the smallest eigenvalue
/// of S + S^t becomes a double eigenvalue.  The path eigenvector's end
/// components have opposite signs (bipartite structure), which drives the
/// construction.
DoubleEigenResult find_double_eigenvalue(const std::vector<double>& a);

}  // namespace cyclerange
