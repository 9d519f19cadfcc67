#include "cyclerange/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cyclerange/common.hpp"
#include "cyclerange/dense_eig.hpp"
#include "cyclerange/spectra.hpp"

namespace cyclerange {

namespace {

dense::SymMatrix path_matrix(const std::vector<double>& edges) {
    const int n = static_cast<int>(edges.size()) + 1;
    dense::SymMatrix m(n);
    for (int i = 0; i + 1 < n; ++i) {
        m.at(i, i + 1) = edges[i];
        m.at(i + 1, i) = edges[i];
    }
    return m;
}

}  // namespace

InclusionVerdict regular_ngon_check(const WeightVector& a, int grid_per_vertex) {
    const int n = a.size();
    double prod = a.product();
    if (std::abs(prod - 1.0) > 1e-10 * (1.0 + prod))
        throw validation_error("regular_ngon_check: weight product must be 1");
    for (int i = 0; i < n; ++i)
        if (!(a[i] > 0.0)) throw validation_error("regular_ngon_check: weights must be positive");

    CharPolyFamily fam = build_family(a);
    const int m = std::max(grid_per_vertex, 8) * n;

    // h(theta) >= max_k cos(theta + 2k pi/n) puts every n-gon vertex
    // inside W(S(a)).  Evaluate h through the sorted-t profile.
    std::vector<double> ts(m);
    for (int j = 0; j < m; ++j) ts[j] = std::cos(n * (2.0 * std::numbers::pi * j / m));
    std::vector<int> order(m);
    for (int j = 0; j < m; ++j) order[j] = j;
    std::sort(order.begin(), order.end(), [&](int i, int j) { return ts[i] > ts[j]; });
    std::vector<double> sorted(m);
    for (int j = 0; j < m; ++j) sorted[j] = std::clamp(ts[order[j]], -1.0, 1.0);
    SupportProfile prof = support_profile(fam, sorted);
    std::vector<double> h(m);
    for (int j = 0; j < m; ++j) h[order[j]] = 0.5 * prof.z[j];

    double margin = 1e300, arg_theta = 0.0;
    for (int j = 0; j < m; ++j) {
        double theta = 2.0 * std::numbers::pi * j / m;
        double vertex_best = -2.0;
        for (int k = 0; k < n; ++k)
            vertex_best = std::max(vertex_best,
                                   std::cos(theta + 2.0 * std::numbers::pi * k / n));
        double gap = h[j] - vertex_best;
        if (gap < margin) {
            margin = gap;
            arg_theta = theta;
        }
    }

    InclusionVerdict v;
    v.tolerance = 1e-9 * (1.0 + 0.5 * prof.z.front());
    v.margin = margin;
    if (margin >= -v.tolerance) {
        v.kind = VerdictKind::Included;
    } else {
        v.kind = VerdictKind::NotIncluded;  // cannot happen for valid input
        v.witness_theta = arg_theta;
    }
    return v;
}

ExtremalReport min_path_weights(int n) {
    if (n < 3) throw validation_error("min_path_weights: needs n >= 3");
    const double end = std::pow(2.0, (n - 3.0) / (2.0 * n - 2.0));
    const double mid = std::pow(2.0, -1.0 / (n - 1.0));
    std::vector<double> w(n, mid);
    w[0] = end;
    w[n - 2] = end;
    w[n - 1] = 0.0;

    std::vector<double> x(n, 1.0 / std::sqrt(n - 1.0));
    x[0] = 1.0 / std::sqrt(2.0 * n - 2.0);
    x[n - 1] = x[0];

    ExtremalReport rep{WeightVector(std::move(w)), std::pow(2.0, (n - 2.0) / (n - 1.0)),
                       std::move(x)};

    // The closed form must agree with the spectrum of the path itself.
    double lam = support_max(rep.weights, 1.0);
    if (std::abs(lam - rep.objective) > 1e-10 * (1.0 + rep.objective))
        throw std::runtime_error("min_path_weights: closed form disagrees with spectrum");
    return rep;
}

ExtremalReport min_frobenius_zero_product(int n, double theta) {
    if (n < 3) throw validation_error("min_frobenius_zero_product: needs n >= 3");
    if (theta < 0.0 || theta > 0.5 * std::numbers::pi)
        throw validation_error("min_frobenius_zero_product: theta must lie in [0, pi/2]");
    std::vector<double> w(n, 0.0);
    double radius;
    if (n % 2 == 0) {
        double g = std::sqrt(2.0 / n);
        for (int i = 0; i < n; i += 2) w[i] = g;
        radius = 0.5 * g;
    } else {
        int k = (n - 1) / 2;
        double g = std::sqrt(2.0 / (n - 1.0));
        for (int i = 0; i + 3 < n; i += 2) w[i] = g;
        w[n - 3] = g * std::cos(theta);
        w[n - 2] = g * std::sin(theta);
        w[n - 1] = 0.0;
        radius = 0.5 / std::sqrt(static_cast<double>(k));
    }
    ExtremalReport rep{WeightVector(std::move(w)), radius, std::nullopt};
    double check = numerical_radius(rep.weights);
    if (std::abs(check - radius) > 1e-10 * (1.0 + radius))
        throw std::runtime_error("min_frobenius_zero_product: radius formula disagrees");
    return rep;
}

DoubleEigenResult find_double_eigenvalue(const std::vector<double>& a) {
    const int n = static_cast<int>(a.size()) + 2;
    if (n % 2 == 0) throw unsupported_parity_error("find_double_eigenvalue: n must be odd");
    if (n < 3) throw validation_error("find_double_eigenvalue: needs n >= 3");
    for (double x : a)
        if (!(x > 0.0)) throw validation_error("find_double_eigenvalue: weights must be positive");

    // Open path on n-1 vertices; its smallest eigenvalue mu stays an
    // eigenvalue of every bordered matrix M(x) below.
    dense::EigenSystem es = dense::jacobi_eigensystem(path_matrix(a), true);
    const int p = n - 1;
    const double mu = es.values.back();
    std::vector<double> v(p);
    for (int i = 0; i < p; ++i) v[i] = es.vectors[static_cast<std::size_t>(p - 1) * p + i];
    if (v[0] * v[p - 1] >= 0.0)
        throw std::runtime_error("find_double_eigenvalue: path eigenvector ends share a sign");

    std::vector<double> b(p, 0.0);
    b[0] = std::abs(v[p - 1]);
    b[p - 1] = std::abs(v[0]);

    auto lambda_min = [&](double x) {
        dense::SymMatrix m(n);
        for (int i = 0; i + 1 < p; ++i) {
            m.at(i, i + 1) = a[i];
            m.at(i + 1, i) = a[i];
        }
        for (int i = 0; i < p; ++i) {
            m.at(i, p) = x * b[i];
            m.at(p, i) = x * b[i];
        }
        return dense::jacobi_eigensystem(std::move(m), false).values.back();
    };

    // The second branch crosses mu as x grows; bracket then bisect.
    const double crossing_eps = 1e-12 * (1.0 + std::abs(mu));
    double hi = 1.0;
    while (lambda_min(hi) >= mu - crossing_eps) {
        hi *= 2.0;
        if (hi > 1e12) throw std::runtime_error("find_double_eigenvalue: no crossing found");
    }
    double lo = 0.0;
    for (int it = 0; it < 200; ++it) {
        double midx = 0.5 * (lo + hi);
        if (lambda_min(midx) < mu - crossing_eps)
            hi = midx;
        else
            lo = midx;
        if (hi - lo <= 1e-13 * (1.0 + hi)) break;
    }
    double x0 = lo;
    if (std::abs(lambda_min(x0) - mu) > 1e-11 * (1.0 + std::abs(mu)))
        throw std::runtime_error("find_double_eigenvalue: bisection failed to pin mu");

    return DoubleEigenResult{x0 * std::abs(v[0]), x0 * std::abs(v[p - 1]), mu, x0};
}

}  // namespace cyclerange
