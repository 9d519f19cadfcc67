#include "cyclerange/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <numeric>

#include <json.hpp>

#include "cyclerange/common.hpp"
#include "cyclerange/parallel.hpp"
#include "cyclerange/spectra.hpp"

namespace cyclerange {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::complex<double> rayleigh_image(const WeightVector& a,
                                    const std::vector<std::complex<double>>& u) {
    // u* A u for A = S(a).
    const int n = a.size();
    std::complex<double> s = 0.0;
    for (int j = 0; j < n; ++j) s += std::conj(u[j]) * a[j] * u[(j + 1) % n];
    return s;
}

double wrap_angle(double t) {
    t = std::fmod(t, kTwoPi);
    return t < 0 ? t + kTwoPi : t;
}

std::string fmt17(double x) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

}  // namespace

BoundaryCurve sample_boundary(const WeightVector& a, int m, int threads) {
    if (m < 8) throw validation_error("sample_boundary: need at least 8 directions");
    const int n = a.size();

    if (a.has_zero()) {
        BoundaryCurve disk;
        disk.radius = numerical_radius(a);
        disk.symmetry_order = 0;
        disk.theta.resize(m);
        disk.points.resize(m);
        for (int k = 0; k < m; ++k) {
            double t = kTwoPi * k / m;
            disk.theta[k] = t;
            disk.points[k] = std::polar(*disk.radius, -t);
        }
        return disk;
    }

    const double scale = std::sqrt(a.sum_squares());
    const double degenerate_gap = 1e-8 * (1.0 + scale);

    struct Sample {
        double theta;
        std::vector<std::complex<double>> points;
    };
    std::vector<Sample> samples(m);

    // Midpoint grid over one symmetry sector [0, 2 pi/n): generic weights
    // then never sample a corner direction exactly.
    parallel_for(m, threads, [&](int k) {
        double theta = (kTwoPi / n) * (k + 0.5) / m;
        dense::HermEigenSystem es = dense_eigensystem(a, theta);  // of 2 Re(e^{i theta} A)
        Sample& s = samples[k];
        s.theta = theta;
        bool degenerate = es.values.size() > 1 && (es.values[0] - es.values[1]) < degenerate_gap;
        if (!degenerate) {
            s.points.push_back(rayleigh_image(a, es.vectors[0]));
            return;
        }
        // Flat edge: extremize Im(e^{i theta} u* A u) over the top
        // eigenspace; the 2x2 reduction of the skew part does it exactly.
        const auto& u1 = es.vectors[0];
        const auto& u2 = es.vectors[1];
        const std::complex<double> w = std::polar(1.0, theta);
        auto k_form = [&](const std::vector<std::complex<double>>& x,
                          const std::vector<std::complex<double>>& y) {
            // x* K y with K = (e^{i theta} A - e^{-i theta} A^t) / (2i).
            std::complex<double> s1 = 0.0, s2 = 0.0;
            for (int j = 0; j < n; ++j) {
                s1 += std::conj(x[j]) * a[j] * y[(j + 1) % n];  // x* A y
                s2 += std::conj(x[(j + 1) % n]) * a[j] * y[j];  // x* A^t y
            }
            return (w * s1 - std::conj(w) * s2) / std::complex<double>(0.0, 2.0);
        };
        double k11 = k_form(u1, u1).real();
        double k22 = k_form(u2, u2).real();
        std::complex<double> k12 = k_form(u1, u2);
        double tr = k11 + k22;
        double det = k11 * k22 - std::norm(k12);
        double disc = std::sqrt(std::max(0.0, 0.25 * tr * tr - det));
        for (double lam : {0.5 * tr + disc, 0.5 * tr - disc}) {
            // Eigenvector of [[k11, k12], [conj(k12), k22]] for lam.
            std::complex<double> c1, c2;
            if (std::abs(k12) > 1e-14 * (1.0 + std::abs(lam))) {
                c1 = k12;
                c2 = lam - k11;
            } else {
                bool first = std::abs(k11 - lam) <= std::abs(k22 - lam);
                c1 = first ? 1.0 : 0.0;
                c2 = first ? 0.0 : 1.0;
            }
            double nrm = std::sqrt(std::norm(c1) + std::norm(c2));
            if (nrm == 0.0) continue;
            c1 /= nrm;
            c2 /= nrm;
            std::vector<std::complex<double>> u(n);
            for (int j = 0; j < n; ++j) u[j] = c1 * u1[j] + c2 * u2[j];
            s.points.push_back(rayleigh_image(a, u));
        }
    });

    BoundaryCurve curve;
    curve.symmetry_order = n;
    for (int rot = 0; rot < n; ++rot) {
        std::complex<double> spin = std::polar(1.0, kTwoPi * rot / n);
        for (const Sample& s : samples) {
            for (const auto& p : s.points) {
                curve.theta.push_back(wrap_angle(s.theta - kTwoPi * rot / n));
                curve.points.push_back(spin * p);
            }
        }
    }
    std::vector<int> order(curve.points.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return curve.theta[i] < curve.theta[j]; });
    BoundaryCurve sorted;
    sorted.symmetry_order = n;
    sorted.theta.reserve(order.size());
    sorted.points.reserve(order.size());
    for (int i : order) {
        sorted.theta.push_back(curve.theta[i]);
        sorted.points.push_back(curve.points[i]);
    }
    return sorted;
}

std::string export_curve(const BoundaryCurve& curve, CurveFormat format) {
    if (curve.points.empty()) throw validation_error("export_curve: empty curve");
    if (format == CurveFormat::Csv) {
        std::string out;
        if (curve.is_disk()) out += "# disk," + fmt17(*curve.radius) + "\n";
        out += "theta,re,im\n";
        for (std::size_t i = 0; i < curve.points.size(); ++i) {
            out += fmt17(curve.theta[i]) + "," + fmt17(curve.points[i].real()) + "," +
                   fmt17(curve.points[i].imag()) + "\n";
        }
        return out;
    }
    nlohmann::json j;
    j["symmetry_order"] = curve.symmetry_order;
    j["disk"] = curve.is_disk();
    if (curve.is_disk()) j["radius"] = *curve.radius;
    nlohmann::json pts = nlohmann::json::array();
    for (std::size_t i = 0; i < curve.points.size(); ++i) {
        pts.push_back({{"theta", curve.theta[i]},
                       {"re", curve.points[i].real()},
                       {"im", curve.points[i].imag()}});
    }
    j["points"] = std::move(pts);
    return j.dump(2);
}

BoundaryCurve parse_curve_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    BoundaryCurve curve;
    curve.symmetry_order = j.at("symmetry_order").get<int>();
    if (j.at("disk").get<bool>()) curve.radius = j.at("radius").get<double>();
    for (const auto& p : j.at("points")) {
        curve.theta.push_back(p.at("theta").get<double>());
        curve.points.emplace_back(p.at("re").get<double>(), p.at("im").get<double>());
    }
    return curve;
}

}  // namespace cyclerange
