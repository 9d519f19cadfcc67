#pragma once

#include <complex>
#include <vector>

namespace cyclerange::dense {

/// Dense real symmetric matrix, row-major storage.
struct SymMatrix {
    int n = 0;
    std::vector<double> a;

    explicit SymMatrix(int n_) : n(n_), a(static_cast<std::size_t>(n_) * n_, 0.0) {}
    double& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    double at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
};

/// Dense complex Hermitian matrix, row-major.
struct HermMatrix {
    int n = 0;
    std::vector<std::complex<double>> a;

    explicit HermMatrix(int n_) : n(n_), a(static_cast<std::size_t>(n_) * n_) {}
    std::complex<double>& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    std::complex<double> at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
};

struct EigenSystem {
    std::vector<double> values;   // descending
    std::vector<double> vectors;  // column k (values[k]) at vectors[k*n+i]; empty if not requested
};

/// Cyclic Jacobi rotations; classical, O(n^3) per sweep, accurate to a few
/// ulps of ||A|| per eigenvalue.  Intended for small matrices.
EigenSystem jacobi_eigensystem(SymMatrix m, bool want_vectors);

/// Real symmetric 2n x 2n embedding [[X, -Y], [Y, X]] of H = X + iY.
/// Its spectrum is that of H with every eigenvalue doubled.
SymMatrix embed(const HermMatrix& h);

/// Eigenvalues of a Hermitian matrix via the real embedding, descending.
std::vector<double> herm_eigenvalues(const HermMatrix& h);

struct HermEigenSystem {
    std::vector<double> values;                                  // descending
    std::vector<std::vector<std::complex<double>>> vectors;      // unit eigenvectors
};

/// Full Hermitian eigensystem via the real embedding.  The doubled
/// embedding eigenvectors are folded back to one complex vector per
/// eigenvalue copy (orthonormalized within degenerate clusters).
HermEigenSystem herm_eigensystem(const HermMatrix& h);

}  // namespace cyclerange::dense
