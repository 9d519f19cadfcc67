#include "cyclerange/poly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cyclerange/common.hpp"

namespace cyclerange::poly {

namespace {

constexpr int kMaxBisect = 200;

// |p(x)| below this is treated as zero at x.
double zero_tol(const Poly& p, double x) {
    return 64.0 * std::numeric_limits<double>::epsilon() * (eval_abs(p, x) + 1e-300);
}

// Safeguarded Newton inside a bracket [lo, hi] with p(lo)*p(hi) < 0.
double refine_bracket(const Poly& p, const Poly& dp, double lo, double hi, double flo) {
    // Orient so the sign of p at lo is flo.
    double x = 0.5 * (lo + hi);
    for (int it = 0; it < kMaxBisect; ++it) {
        double fx = eval(p, x);
        if (fx == 0.0) return x;
        if ((fx < 0) == (flo < 0))
            lo = x;
        else
            hi = x;
        double d = eval(dp, x);
        double xn = (d != 0.0) ? x - fx / d : x;
        if (!(xn > lo && xn < hi)) xn = 0.5 * (lo + hi);
        if (std::abs(xn - x) <= 1e-16 * (1.0 + std::abs(xn))) return xn;
        x = xn;
        if (hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * (1.0 + std::abs(x)))
            return 0.5 * (lo + hi);
    }
    return x;
}

void push_root(std::vector<double>& roots, double r) {
    for (double s : roots)
        if (std::abs(s - r) <= 1e-11 * (1.0 + std::abs(r))) return;
    roots.push_back(r);
}

}  // namespace

double eval(const Poly& p, double x) {
    double v = 0.0;
    for (double c : p) v = v * x + c;
    return v;
}

double eval_abs(const Poly& p, double x) {
    double ax = std::abs(x);
    double v = 0.0;
    for (double c : p) v = v * ax + std::abs(c);
    return v;
}

Poly derivative(const Poly& p) {
    int d = static_cast<int>(p.size()) - 1;
    if (d <= 0) return Poly{0.0};
    Poly q(d);
    for (int i = 0; i < d; ++i) q[i] = p[i] * (d - i);
    return q;
}

double cauchy_bound(const Poly& p) {
    double m = 0.0;
    for (std::size_t i = 1; i < p.size(); ++i) m = std::max(m, std::abs(p[i] / p[0]));
    return 1.0 + m;
}

std::vector<double> real_roots(Poly p) {
    if (p.empty() || p[0] == 0.0) throw validation_error("real_roots: leading coefficient is zero");
    int d = static_cast<int>(p.size()) - 1;
    if (d == 0) return {};
    if (p[0] != 1.0) {
        const double lead = p[0];
        for (double& c : p) c /= lead;
    }
    if (d == 1) return {-p[1]};

    Poly dp = derivative(p);
    std::vector<double> crit = real_roots(dp);

    double bound = cauchy_bound(p) + 1.0;
    std::vector<double> pts;
    pts.push_back(-bound);
    for (double c : crit)
        if (c > -bound && c < bound) pts.push_back(c);
    pts.push_back(bound);

    std::vector<double> roots;
    std::vector<double> vals(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) vals[i] = eval(p, pts[i]);

    // Critical points where p itself vanishes are (multiple) roots.
    for (std::size_t i = 1; i + 1 < pts.size(); ++i)
        if (std::abs(vals[i]) <= zero_tol(p, pts[i])) push_root(roots, pts[i]);

    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        double fa = vals[i], fb = vals[i + 1];
        if (std::abs(fa) <= zero_tol(p, pts[i]) || std::abs(fb) <= zero_tol(p, pts[i + 1]))
            continue;  // endpoint already claimed as a root
        if ((fa < 0) != (fb < 0))
            push_root(roots, refine_bracket(p, dp, pts[i], pts[i + 1], fa));
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

double largest_real_root(const Poly& p) {
    std::vector<double> roots = real_roots(p);
    if (roots.empty()) throw no_real_root_error("largest_real_root: no real root");
    return roots.back();
}

double largest_root_from_above(const Poly& p, double x0) {
    Poly dp = derivative(p);
    double x = x0;
    double fx = eval(p, x);
    if (fx < -zero_tol(p, x)) return largest_real_root(p);  // start is not above the root
    for (int it = 0; it < 120; ++it) {
        double d = eval(dp, x);
        if (d <= 0.0) return largest_real_root(p);
        double step = fx / d;
        double xn = x - step;
        if (std::abs(step) <= 1e-15 * (1.0 + std::abs(x))) return xn;
        double fn = eval(p, xn);
        if (fn < 0.0) {
            // Overshot past a simple root: a genuine sign change to polish.
            if (std::abs(fn) <= zero_tol(p, xn)) return xn;
            return refine_bracket(p, dp, xn, x, fn);
        }
        // Stalled near an even-multiplicity root; the robust path isolates
        // it through the derivative instead.
        if (it > 80 && std::abs(step) > 1e-9 * (1.0 + std::abs(x)))
            return largest_real_root(p);
        x = xn;
        fx = fn;
    }
    if (std::abs(fx) <= 1e4 * zero_tol(p, x)) return x;
    return largest_real_root(p);
}

}  // namespace cyclerange::poly
