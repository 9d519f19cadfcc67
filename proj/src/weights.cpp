#include "cyclerange/weights.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cyclerange/common.hpp"

namespace cyclerange {

WeightVector::WeightVector(std::vector<double> entries) {
    if (entries.size() < 2) throw validation_error("WeightVector: need n >= 2 weights");
    for (double x : entries)
        if (!(x >= 0.0)) throw validation_error("WeightVector: weights must be nonnegative");
    a_ = std::move(entries);
    sq_.resize(a_.size());
    for (std::size_t i = 0; i < a_.size(); ++i) sq_[i] = a_[i] * a_[i];
}

WeightVector WeightVector::from_squares(std::vector<double> squares) {
    if (squares.size() < 2) throw validation_error("WeightVector: need n >= 2 weights");
    for (double x : squares)
        if (!(x >= 0.0)) throw validation_error("WeightVector: squared weights must be nonnegative");
    WeightVector w;
    w.sq_ = std::move(squares);
    w.a_.resize(w.sq_.size());
    for (std::size_t i = 0; i < w.sq_.size(); ++i) w.a_[i] = std::sqrt(w.sq_[i]);
    return w;
}

double WeightVector::product() const {
    double p = 1.0;
    for (double x : a_) p *= x;
    return p;
}

double WeightVector::sum_squares() const { return kahan_sum(sq_); }

bool WeightVector::has_zero() const {
    return std::any_of(a_.begin(), a_.end(), [](double x) { return x == 0.0; });
}

bool WeightVector::strictly_ascending() const {
    for (std::size_t i = 1; i < a_.size(); ++i)
        if (!(a_[i - 1] < a_[i])) return false;
    return true;
}

bool WeightVector::ascending() const {
    for (std::size_t i = 1; i < a_.size(); ++i)
        if (a_[i - 1] > a_[i]) return false;
    return true;
}

WeightVector WeightVector::arranged(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != size())
        throw validation_error("arranged: permutation size mismatch");
    WeightVector out;
    out.a_.resize(a_.size());
    out.sq_.resize(a_.size());
    std::vector<bool> seen(a_.size(), false);
    for (std::size_t i = 0; i < perm.size(); ++i) {
        int j = perm[i];
        if (j < 1 || j > size() || seen[j - 1])
            throw validation_error("arranged: not a permutation of 1..n");
        seen[j - 1] = true;
        out.a_[i] = a_[j - 1];
        out.sq_[i] = sq_[j - 1];
    }
    return out;
}

WeightVector WeightVector::scaled(double c) const {
    if (!(c >= 0.0)) throw validation_error("scaled: factor must be nonnegative");
    WeightVector out;
    out.a_.resize(a_.size());
    out.sq_.resize(a_.size());
    for (std::size_t i = 0; i < a_.size(); ++i) {
        out.a_[i] = c * a_[i];
        out.sq_[i] = c * c * sq_[i];
    }
    return out;
}

PhaseReduction normalize_complex(const std::vector<std::complex<double>>& w) {
    if (w.size() < 2) throw validation_error("normalize_complex: need n >= 2 weights");
    const int n = static_cast<int>(w.size());
    std::vector<double> mags(n);
    std::complex<double> prod{1.0, 0.0};
    bool zero = false;
    for (int i = 0; i < n; ++i) {
        mags[i] = std::abs(w[i]);
        if (mags[i] == 0.0) zero = true;
        prod *= w[i];
    }
    PhaseReduction out{WeightVector(std::move(mags)), 0.0};
    if (!zero) {
        double arg = std::arg(prod);  // (-pi, pi]
        if (arg < 0) arg += 2.0 * std::numbers::pi;
        out.phase = arg / n;  // in [0, 2*pi/n)
    }
    return out;
}

std::vector<std::vector<int>> dihedral_orbit(const std::vector<int>& perm) {
    const int n = static_cast<int>(perm.size());
    std::vector<std::vector<int>> orbit;
    orbit.reserve(2 * n);
    std::vector<int> rev(perm.rbegin(), perm.rend());
    for (int s = 0; s < n; ++s) {
        std::vector<int> rot(n), rrot(n);
        for (int i = 0; i < n; ++i) {
            rot[i] = perm[(i + s) % n];
            rrot[i] = rev[(i + s) % n];
        }
        orbit.push_back(std::move(rot));
        orbit.push_back(std::move(rrot));
    }
    return orbit;
}

DihedralClass canonical_dihedral(const std::vector<int>& perm) {
    const int n = static_cast<int>(perm.size());
    if (n < 1) throw validation_error("canonical_dihedral: empty permutation");
    std::vector<bool> seen(n, false);
    for (int v : perm) {
        if (v < 1 || v > n || seen[v - 1])
            throw validation_error("canonical_dihedral: not a permutation of 1..n");
        seen[v - 1] = true;
    }
    std::vector<int> best = perm;
    for (const auto& cand : dihedral_orbit(perm))
        if (cand < best) best = cand;
    return DihedralClass{std::move(best)};
}

RDecomposition r_decomposition(const WeightVector& a) {
    const auto& sq = a.squares();
    std::vector<double> r(sq.size());
    r[0] = sq[0];
    for (std::size_t j = 1; j < sq.size(); ++j) r[j] = sq[j] - sq[j - 1];
    return RDecomposition{std::move(r)};
}

WeightVector weights_from_r(const std::vector<double>& r) {
    if (r.size() < 2) throw validation_error("weights_from_r: need n >= 2 values");
    std::vector<double> sq(r.size());
    double run = 0.0, comp = 0.0, scale = 0.0;
    for (std::size_t j = 0; j < r.size(); ++j) {
        double y = r[j] - comp;
        double t = run + y;
        comp = (t - run) - y;
        run = t;
        scale = std::max(scale, std::abs(r[j]));
        if (run < -1e-12 * (1.0 + scale))
            throw validation_error("weights_from_r: negative partial sum");
        sq[j] = std::max(run, 0.0);
    }
    return WeightVector::from_squares(std::move(sq));
}

}  // namespace cyclerange
