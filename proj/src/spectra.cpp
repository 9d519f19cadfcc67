#include "cyclerange/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cyclerange/common.hpp"

namespace cyclerange {

double largest_root(const poly::Poly& monic) {
    if (monic.size() < 2) throw validation_error("largest_root: degree must be >= 1");
    return poly::largest_real_root(monic);
}

double support_max(const CharPolyFamily& family, double t) {
    if (!(t >= -1.0 && t <= 1.0)) throw validation_error("support_max: t must lie in [-1, 1]");
    return poly::largest_real_root(family.at_t(t));
}

double support_max(const WeightVector& a, double t) {
    return support_max(build_family(a), t);
}

double numerical_radius(const WeightVector& a) {
    return 0.5 * support_max(a, 1.0);
}

SupportProfile support_profile(const CharPolyFamily& family, std::vector<double> t_values) {
    std::sort(t_values.begin(), t_values.end(), std::greater<>());
    SupportProfile out;
    out.t = std::move(t_values);
    out.z.resize(out.t.size());
    if (out.t.empty()) return out;
    if (!(out.t.front() <= 1.0 && out.t.back() >= -1.0))
        throw validation_error("support_profile: t values must lie in [-1, 1]");

    double prev = poly::largest_real_root(family.at_t(out.t.front()));
    out.z.front() = prev;
    for (std::size_t i = 1; i < out.t.size(); ++i) {
        if (family.alpha == 0.0) {
            out.z[i] = prev;  // t-independent family
            continue;
        }
        // The top root can be a double root only at t = +-1; the robust
        // path resolves it through the derivative, which Newton on the
        // value cannot do to full precision.
        if (out.t[i] == -1.0 || out.t[i] == 1.0) {
            prev = poly::largest_real_root(family.at_t(out.t[i]));
        } else {
            prev = poly::largest_root_from_above(family.at_t(out.t[i]), prev);
        }
        out.z[i] = prev;
    }
    return out;
}

std::vector<double> chebyshev_nodes(int m) {
    if (m < 2) throw validation_error("chebyshev_nodes: need at least 2 nodes");
    std::vector<double> t(m);
    for (int k = 0; k < m; ++k) t[k] = std::cos(std::numbers::pi * k / (m - 1));
    t.front() = 1.0;
    t.back() = -1.0;
    return t;
}

dense::HermMatrix two_re_matrix(const WeightVector& a, double theta) {
    const int n = a.size();
    dense::HermMatrix h(n);
    const std::complex<double> w = std::polar(1.0, theta);
    for (int j = 0; j < n; ++j) {
        int k = (j + 1) % n;
        h.at(j, k) += w * a[j];
        h.at(k, j) += std::conj(w) * a[j];
    }
    return h;
}

std::vector<double> dense_oracle(const WeightVector& a, double theta) {
    return dense::herm_eigenvalues(two_re_matrix(a, theta));
}

dense::HermEigenSystem dense_eigensystem(const WeightVector& a, double theta) {
    return dense::herm_eigensystem(two_re_matrix(a, theta));
}

}  // namespace cyclerange
