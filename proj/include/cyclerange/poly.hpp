#pragma once

#include <vector>

namespace cyclerange::poly {

/// Real polynomial, coefficients in descending degree order:
/// p[0]*x^d + p[1]*x^(d-1) + ... + p[d].
using Poly = std::vector<double>;

double eval(const Poly& p, double x);

/// Evaluates sum |p_i| * |x|^(d-i); used as a rounding-error scale for
/// "is p(x) zero" decisions.
double eval_abs(const Poly& p, double x);

Poly derivative(const Poly& p);

/// 1 + max |p_i/p_0|; every real root lies in [-bound, bound].
double cauchy_bound(const Poly& p);

/// All real roots in ascending order, repeated roots reported once.
/// Roots are isolated by recursing on the derivative: between consecutive
/// critical points the polynomial is monotone, so every root is either a
/// sign change (bisection + Newton) or a critical point where p itself
/// vanishes (even multiplicity).
std::vector<double> real_roots(Poly p);

/// Greatest real root; throws no_real_root_error if there is none.
double largest_real_root(const Poly& p);

/// Greatest real root given a starting point x0 known to satisfy
/// x0 >= root and p(x0) >= 0 (monotone Newton from the right; falls back
/// to the robust path when convergence degrades, e.g. at double roots).
double largest_root_from_above(const Poly& p, double x0);

}  // namespace cyclerange::poly
