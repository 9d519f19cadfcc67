#include "cyclerange/dense_eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace cyclerange::dense {

namespace {

double off_norm(const SymMatrix& m) {
    double s = 0.0;
    for (int i = 0; i < m.n; ++i)
        for (int j = i + 1; j < m.n; ++j) s += m.at(i, j) * m.at(i, j);
    return std::sqrt(2.0 * s);
}

double frob_norm(const SymMatrix& m) {
    double s = 0.0;
    for (double x : m.a) s += x * x;
    return std::sqrt(s);
}

}  // namespace

EigenSystem jacobi_eigensystem(SymMatrix m, bool want_vectors) {
    const int n = m.n;
    std::vector<double> vec;
    if (want_vectors) {
        vec.assign(static_cast<std::size_t>(n) * n, 0.0);
        for (int i = 0; i < n; ++i) vec[static_cast<std::size_t>(i) * n + i] = 1.0;
    }
    const double fnorm = frob_norm(m);
    const double stop = 1e-14 * (fnorm > 0 ? fnorm : 1.0);

    for (int sweep = 0; sweep < 60 && off_norm(m) > stop; ++sweep) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double apq = m.at(p, q);
                if (std::abs(apq) <= 1e-300) continue;
                double tau = (m.at(q, q) - m.at(p, p)) / (2.0 * apq);
                double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                double c = 1.0 / std::sqrt(1.0 + t * t);
                double s = t * c;
                for (int k = 0; k < n; ++k) {
                    double akp = m.at(k, p), akq = m.at(k, q);
                    m.at(k, p) = c * akp - s * akq;
                    m.at(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    double apk = m.at(p, k), aqk = m.at(q, k);
                    m.at(p, k) = c * apk - s * aqk;
                    m.at(q, k) = s * apk + c * aqk;
                }
                if (want_vectors) {
                    for (int k = 0; k < n; ++k) {
                        double vkp = vec[static_cast<std::size_t>(k) * n + p];
                        double vkq = vec[static_cast<std::size_t>(k) * n + q];
                        vec[static_cast<std::size_t>(k) * n + p] = c * vkp - s * vkq;
                        vec[static_cast<std::size_t>(k) * n + q] = s * vkp + c * vkq;
                    }
                }
            }
        }
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return m.at(i, i) > m.at(j, j); });

    EigenSystem out;
    out.values.resize(n);
    for (int k = 0; k < n; ++k) out.values[k] = m.at(order[k], order[k]);
    if (want_vectors) {
        out.vectors.assign(static_cast<std::size_t>(n) * n, 0.0);
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i)
                out.vectors[static_cast<std::size_t>(k) * n + i] =
                    vec[static_cast<std::size_t>(i) * n + order[k]];
    }
    return out;
}

SymMatrix embed(const HermMatrix& h) {
    const int n = h.n;
    SymMatrix m(2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            double x = h.at(i, j).real();
            double y = h.at(i, j).imag();
            m.at(i, j) = x;
            m.at(n + i, n + j) = x;
            m.at(i, n + j) = -y;
            m.at(n + i, j) = y;
        }
    }
    return m;
}

std::vector<double> herm_eigenvalues(const HermMatrix& h) {
    EigenSystem es = jacobi_eigensystem(embed(h), false);
    std::vector<double> out(h.n);
    // The embedding doubles every eigenvalue, so consecutive sorted pairs
    // belong together regardless of clustering in H itself.
    for (int k = 0; k < h.n; ++k) out[k] = 0.5 * (es.values[2 * k] + es.values[2 * k + 1]);
    return out;
}

HermEigenSystem herm_eigensystem(const HermMatrix& h) {
    const int n = h.n;
    EigenSystem es = jacobi_eigensystem(embed(h), true);

    HermEigenSystem out;
    out.values.resize(n);
    for (int k = 0; k < n; ++k) out.values[k] = 0.5 * (es.values[2 * k] + es.values[2 * k + 1]);

    auto complex_col = [&](int k) {
        std::vector<std::complex<double>> u(n);
        for (int i = 0; i < n; ++i)
            u[i] = {es.vectors[static_cast<std::size_t>(k) * 2 * n + i],
                    es.vectors[static_cast<std::size_t>(k) * 2 * n + n + i]};
        return u;
    };

    // Fold embedding pairs back to complex vectors.  Consecutive pairs with
    // (numerically) equal values form one degenerate cluster; complex
    // Gram-Schmidt over the cluster's folded columns recovers an
    // orthonormal eigenbasis of the right dimension.
    double scale = std::abs(out.values.empty() ? 1.0 : out.values.front()) + 1.0;
    int pair = 0;
    while (pair < n) {
        int end = pair + 1;
        while (end < n && std::abs(out.values[end] - out.values[pair]) <= 1e-10 * scale) ++end;
        std::vector<std::vector<std::complex<double>>> basis;
        for (double threshold : {1e-6, 1e-12}) {
            for (int k = 2 * pair; k < 2 * end && static_cast<int>(basis.size()) < end - pair; ++k) {
                std::vector<std::complex<double>> u = complex_col(k);
                for (const auto& b : basis) {
                    std::complex<double> proj = 0.0;
                    for (int i = 0; i < n; ++i) proj += std::conj(b[i]) * u[i];
                    for (int i = 0; i < n; ++i) u[i] -= proj * b[i];
                }
                double nrm = 0.0;
                for (const auto& c : u) nrm += std::norm(c);
                nrm = std::sqrt(nrm);
                if (nrm > threshold) {
                    for (auto& c : u) c /= nrm;
                    basis.push_back(std::move(u));
                }
            }
            if (static_cast<int>(basis.size()) == end - pair) break;
        }
        for (auto& b : basis) out.vectors.push_back(std::move(b));
        pair = end;
    }
    return out;
}

}  // namespace cyclerange::dense
