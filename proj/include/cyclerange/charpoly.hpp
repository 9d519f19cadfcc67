#pragma once

#include "cyclerange/poly.hpp"
#include "cyclerange/weights.hpp"

namespace cyclerange {

/// det(zI - 2 Re(e^{i theta} S(a))) = f(z) - 2 alpha cos(n theta):
/// the angle enters only through the constant term, with alpha the product
/// of the weights.  f is monic of degree n with zero z^{n-1} coefficient
/// and z^{n-2} coefficient equal to minus the sum of squared weights.
struct CharPolyFamily {
    int n = 0;
    poly::Poly f;        // n+1 coefficients, descending, f[0] = 1
    double alpha = 0.0;  // product of weights, >= 0

    /// Coefficients of f(z) - 2*alpha*t.
    poly::Poly at_t(double t) const {
        poly::Poly p = f;
        p.back() -= 2.0 * alpha * t;
        return p;
    }
};

/// Builds the family from the weights by the three-term recurrence for the
/// path charpoly plus the corner correction: f = P(a_1..a_{n-1}) -
/// a_n^2 * P(a_2..a_{n-2}).  O(n^2), exact for integer squared weights.
CharPolyFamily build_family(const WeightVector& a);

/// Nonnegative eigenvalues alpha_j of i(A - A^t); the spectrum is
/// {+-alpha_j} plus a zero eigenvalue for odd n.
struct ImagSpectrum {
    std::vector<double> alphas;  // floor(n/2) values, descending
    bool has_zero = false;       // true iff n odd
};

ImagSpectrum imag_part_spectrum(const WeightVector& a);

/// Characteristic polynomial of the path with the given rung weights
/// (k+1 vertices for k weights); exposed for reuse and tests.
poly::Poly path_charpoly(const std::vector<double>& edge_squares);

}  // namespace cyclerange
