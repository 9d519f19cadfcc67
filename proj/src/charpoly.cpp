#include "cyclerange/charpoly.hpp"

#include <algorithm>
#include <complex>

#include "cyclerange/dense_eig.hpp"

namespace cyclerange {

poly::Poly path_charpoly(const std::vector<double>& edge_squares) {
    // p_0 = 1, p_1 = z, p_k = z p_{k-1} - e_{k-1} p_{k-2}, descending coeffs.
    poly::Poly prev{1.0};
    poly::Poly cur{1.0, 0.0};
    if (edge_squares.empty()) return cur;
    for (double e : edge_squares) {
        poly::Poly next(cur.size() + 1, 0.0);
        for (std::size_t i = 0; i < cur.size(); ++i) next[i] = cur[i];
        for (std::size_t i = 0; i < prev.size(); ++i)
            next[i + 2] -= e * prev[i];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

CharPolyFamily build_family(const WeightVector& a) {
    const int n = a.size();
    const auto& sq = a.squares();

    std::vector<double> chain(sq.begin(), sq.end() - 1);  // a_1..a_{n-1}
    poly::Poly f = path_charpoly(chain);

    // Interior path on vertices 2..n-1; for n = 2 it is empty (charpoly 1).
    poly::Poly inner{1.0};
    if (n >= 3) {
        std::vector<double> interior;
        if (n >= 4) interior.assign(sq.begin() + 1, sq.end() - 2);
        inner = path_charpoly(interior);  // degree n-2
    }
    const double corner_sq = sq.back();
    for (std::size_t i = 0; i < inner.size(); ++i)
        f[i + 2] -= corner_sq * inner[i];

    return CharPolyFamily{n, std::move(f), a.product()};
}

ImagSpectrum imag_part_spectrum(const WeightVector& a) {
    const int n = a.size();
    // i(A - A^t) = 2 Re(e^{i pi/2} S(a)): purely imaginary Hermitian.
    dense::HermMatrix h(n);
    const std::complex<double> iu{0.0, 1.0};
    for (int j = 0; j < n; ++j) {
        int k = (j + 1) % n;
        h.at(j, k) += iu * a[j];
        h.at(k, j) += -iu * a[j];
    }
    std::vector<double> ev = dense::herm_eigenvalues(h);  // descending, symmetric about 0
    ImagSpectrum out;
    out.has_zero = (n % 2 == 1);
    out.alphas.assign(ev.begin(), ev.begin() + n / 2);
    for (double& v : out.alphas) v = std::max(v, 0.0);
    return out;
}

}  // namespace cyclerange
