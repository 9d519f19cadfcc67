#include "cyclerange/inclusion.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "cyclerange/common.hpp"
#include "cyclerange/spectra.hpp"

namespace cyclerange {

namespace {

constexpr double kMatchRel = 1e-10;  // invariant-matching tolerance for closed forms

double default_tol(double max_support, const std::optional<double>& tol) {
    return tol.value_or(1e-9 * (1.0 + max_support));
}

// Margin sweep over a t-grid shared by both families.
struct Sweep {
    double min_margin;
    double arg_t;
    double max_support;
};

Sweep sweep_t(const CharPolyFamily& fa, const CharPolyFamily& fb, std::vector<double> nodes) {
    SupportProfile pa = support_profile(fa, nodes);
    SupportProfile pb = support_profile(fb, std::move(nodes));
    Sweep s{0.5 * (pa.z.front() - pb.z.front()), pa.t.front(),
            0.5 * std::max(pa.z.front(), pb.z.front())};
    for (std::size_t i = 1; i < pa.t.size(); ++i) {
        double m = 0.5 * (pa.z[i] - pb.z[i]);
        if (m < s.min_margin) {
            s.min_margin = m;
            s.arg_t = pa.t[i];
        }
    }
    return s;
}

std::vector<double> nodes_on(double lo, double hi, int m) {
    std::vector<double> t = chebyshev_nodes(m);
    for (double& x : t) x = lo + 0.5 * (x + 1.0) * (hi - lo);
    return t;
}

InclusionVerdict verdict_from(double min_margin, double arg_t, double tol, bool theta_grid) {
    InclusionVerdict v;
    v.tolerance = tol;
    v.margin = min_margin;
    if (min_margin >= -tol) {
        v.kind = VerdictKind::Included;
    } else {
        v.kind = VerdictKind::NotIncluded;
        if (theta_grid)
            v.witness_theta = arg_t;
        else
            v.witness_t = arg_t;
    }
    return v;
}

double skew_sum_5(const std::vector<double>& q) {
    return q[0] * q[2] + q[0] * q[3] + q[1] * q[3] + q[1] * q[4] + q[2] * q[4];
}

double cyc_sum(const std::vector<double>& q) {
    double s = 0.0;
    const std::size_t n = q.size();
    for (std::size_t i = 0; i < n; ++i) s += q[i] * q[(i + 1) % n];
    return s;
}

double sum_fourth(const std::vector<double>& q) {
    return std::accumulate(q.begin(), q.end(), 0.0,
                           [](double acc, double x) { return acc + x * x; });
}

// Margin over a few sampled t once the verdict itself is certified in
// closed form.  An explicit tolerance overrides the exact decision with a
// margin-based one.
InclusionVerdict sampled_verdict(const CharPolyFamily& fa, const CharPolyFamily& fb,
                                 bool included, double tol_scale_hint,
                                 const std::optional<double>& tol) {
    double min_margin = 0.0, arg_t = 1.0;
    bool first = true;
    for (double t : {1.0, 0.0, -1.0}) {
        double m = 0.5 * (support_max(fa, t) - support_max(fb, t));
        if (first || m < min_margin) {
            min_margin = m;
            arg_t = t;
            first = false;
        }
    }
    InclusionVerdict v;
    v.tolerance = default_tol(tol_scale_hint, tol);
    v.margin = min_margin;
    if (tol) included = min_margin >= -*tol;
    v.kind = included ? VerdictKind::Included : VerdictKind::NotIncluded;
    if (!included) v.witness_t = arg_t;
    return v;
}

}  // namespace

InclusionVerdict includes_general(const WeightVector& A, const WeightVector& B,
                                  int grid_size, std::optional<double> tol) {
    if (grid_size < 3) throw validation_error("includes_general: grid_size must be >= 3");
    CharPolyFamily fa = build_family(A);
    CharPolyFamily fb = build_family(B);

    if (A.size() != B.size()) {
        // Support functions are size-agnostic but the t-parametrizations do
        // not align, so sweep theta directly.
        PhaseReduction pa{A, 0.0}, pb{B, 0.0};
        return includes_general(pa, pb, grid_size, tol);
    }

    Sweep s = sweep_t(fa, fb, chebyshev_nodes(grid_size));
    double tolerance = default_tol(s.max_support, tol);

    // Refine around the running minimum until the verdict stops moving.
    double lo = std::max(-1.0, s.arg_t - 2.0 / grid_size);
    double hi = std::min(1.0, s.arg_t + 2.0 / grid_size);
    for (int round = 0; round < 3; ++round) {
        Sweep fine = sweep_t(fa, fb, nodes_on(lo, hi, grid_size));
        if (fine.min_margin < s.min_margin) {
            s.min_margin = fine.min_margin;
            s.arg_t = fine.arg_t;
        }
        double width = 0.25 * (hi - lo);
        lo = std::max(-1.0, s.arg_t - width);
        hi = std::min(1.0, s.arg_t + width);
        if (s.min_margin < -tolerance) break;  // violation already certain
    }
    return verdict_from(s.min_margin, s.arg_t, tolerance, false);
}

InclusionVerdict includes_general(const PhaseReduction& A, const PhaseReduction& B,
                                  int grid_size, std::optional<double> tol) {
    if (grid_size < 3) throw validation_error("includes_general: grid_size must be >= 3");
    CharPolyFamily fa = build_family(A.magnitudes);
    CharPolyFamily fb = build_family(B.magnitudes);
    const int na = fa.n, nb = fb.n;
    const int count = std::max(na, nb) * grid_size;

    // h_X(theta) = z_X(cos n(theta + phase)) / 2; evaluate both supports on
    // a shared theta grid through per-family sorted t-profiles.
    auto supports = [&](const CharPolyFamily& f, double phase, int n) {
        std::vector<double> ts(count);
        for (int j = 0; j < count; ++j) {
            double theta = 2.0 * std::numbers::pi * j / count;
            ts[j] = std::cos(n * (theta + phase));
        }
        std::vector<int> order(count);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int i, int j) { return ts[i] > ts[j]; });
        std::vector<double> sorted(count);
        for (int j = 0; j < count; ++j) sorted[j] = std::clamp(ts[order[j]], -1.0, 1.0);
        SupportProfile prof = support_profile(f, sorted);
        std::vector<double> h(count);
        for (int j = 0; j < count; ++j) h[order[j]] = 0.5 * prof.z[j];
        return h;
    };
    std::vector<double> ha = supports(fa, A.phase, na);
    std::vector<double> hb = supports(fb, B.phase, nb);

    double min_margin = ha[0] - hb[0], arg_theta = 0.0, max_support = 0.0;
    for (int j = 0; j < count; ++j) {
        double m = ha[j] - hb[j];
        if (m < min_margin) {
            min_margin = m;
            arg_theta = 2.0 * std::numbers::pi * j / count;
        }
        max_support = std::max({max_support, ha[j], hb[j]});
    }
    double tolerance = default_tol(max_support, tol);
    return verdict_from(min_margin, arg_theta, tolerance, true);
}

InclusionVerdict includes_closed_form(const WeightVector& A, const WeightVector& B,
                                      std::optional<double> tol) {
    const int n = A.size();
    if (n != B.size()) throw unsupported_size_error("includes_closed_form: sizes differ");
    if (n < 2 || n > 6) throw unsupported_size_error("includes_closed_form: only n = 2..6");
    const auto& qa = A.squares();
    const auto& qb = B.squares();

    if (n == 2) {
        double sa = A[0] + A[1], sb = B[0] + B[1];
        double da = std::abs(A[0] - A[1]), db = std::abs(B[0] - B[1]);
        double tol_eff = tol.value_or(1e-12 * (1.0 + std::max(sa, sb)));
        InclusionVerdict v;
        v.tolerance = tol_eff;
        double m_sum = 0.5 * (sa - sb), m_diff = 0.5 * (da - db);
        v.margin = std::min(m_sum, m_diff);
        if (sb <= sa + tol_eff && db <= da + tol_eff) {
            v.kind = VerdictKind::Included;
        } else {
            v.kind = VerdictKind::NotIncluded;
            v.witness_t = (m_sum < m_diff) ? 1.0 : -1.0;
        }
        return v;
    }

    if (n == 3 || n == 4) {
        // Endpoint comparison at cos(n theta) = +-1 decides the whole range.
        CharPolyFamily fa = build_family(A);
        CharPolyFamily fb = build_family(B);
        double margin = 0.0, arg_t = 1.0;
        bool first = true;
        for (double t : {1.0, -1.0}) {
            double m = 0.5 * (support_max(fa, t) - support_max(fb, t));
            if (first || m < margin) {
                margin = m;
                arg_t = t;
                first = false;
            }
        }
        double tol_eff =
            default_tol(0.5 * std::max(support_max(fa, 1.0), support_max(fb, 1.0)), tol);
        return verdict_from(margin, arg_t, tol_eff, false);
    }

    double scale = std::max(A.sum_squares(), B.sum_squares()) + 1.0;
    bool same_sumsq = std::abs(A.sum_squares() - B.sum_squares()) <= kMatchRel * scale;
    bool same_prod =
        std::abs(A.product() - B.product()) <= kMatchRel * (1.0 + std::max(A.product(), B.product()));

    InclusionVerdict indet;
    indet.kind = VerdictKind::Indeterminate;

    if (n == 5) {
        if (!same_sumsq || !same_prod) return indet;
        double skew_a = skew_sum_5(qa), skew_b = skew_sum_5(qb);
        double cmp_tol = kMatchRel * (1.0 + std::max(skew_a, skew_b));
        bool included = skew_a <= skew_b + cmp_tol;
        return sampled_verdict(build_family(A), build_family(B), included, std::sqrt(scale), tol);
    }

    // n == 6: all four invariants must match before cyclic sums decide.
    double pt_a = qa[0] * qa[2] * qa[4] + qa[1] * qa[3] * qa[5];
    double pt_b = qb[0] * qb[2] * qb[4] + qb[1] * qb[3] * qb[5];
    bool same_ptem = std::abs(pt_a - pt_b) <= kMatchRel * (1.0 + std::max(pt_a, pt_b));
    double s4a = sum_fourth(qa), s4b = sum_fourth(qb);
    bool same_s4 = std::abs(s4a - s4b) <= kMatchRel * (1.0 + std::max(s4a, s4b));
    if (!same_sumsq || !same_prod || !same_ptem || !same_s4) return indet;

    double cyc_a = cyc_sum(qa), cyc_b = cyc_sum(qb);
    double cmp_tol = kMatchRel * (1.0 + std::max(cyc_a, cyc_b));
    bool included = cyc_b <= cyc_a + cmp_tol;
    return sampled_verdict(build_family(A), build_family(B), included, std::sqrt(scale), tol);
}

CubicComparison compare_cubic(const CubicTriple& c, const CubicTriple& d) {
    double scale = 1.0 + std::max(std::abs(c.e1), std::abs(d.e1));
    if (std::abs(c.e1 - d.e1) > 1e-10 * scale)
        throw validation_error("compare_cubic: e1 values must match");
    if (!(c.e2 < d.e2)) return CubicComparison::Inconclusive;

    double e3_scale = 1.0 + std::max(std::abs(c.e3), std::abs(d.e3));
    if (std::abs(c.e3 - d.e3) <= 1e-12 * e3_scale) {
        // Equal products: the difference (d.e2 - c.e2) x is positive for all
        // x > 0, which already pushes d's top root below c's.
        return CubicComparison::FirstRootSmallerIsD;
    }
    double x0 = (d.e3 - c.e3) / (d.e2 - c.e2);
    double disc = c.e1 * c.e1 - 3.0 * c.e2;
    double crit_hi = (c.e1 + std::sqrt(std::max(disc, 0.0))) / 3.0;  // upper critical point of c
    if (x0 <= c.e1 / 3.0 || x0 <= crit_hi) return CubicComparison::FirstRootSmallerIsD;
    return CubicComparison::Inconclusive;
}

CubicTriple cubic_from_family(const CharPolyFamily& family, double t) {
    if (family.n != 6) throw unsupported_size_error("cubic_from_family: needs a degree-6 family");
    return CubicTriple{-family.f[2], family.f[4], -(family.f[6] - 2.0 * family.alpha * t)};
}

InclusionVerdict includes(const WeightVector& A, const WeightVector& B, IncludeMethod method,
                          int grid_size, std::optional<double> tol) {
    if (method == IncludeMethod::Grid) return includes_general(A, B, grid_size, tol);
    if (method == IncludeMethod::Closed) return includes_closed_form(A, B, tol);

    if (A.size() == B.size() && A.size() >= 2 && A.size() <= 6) {
        InclusionVerdict v = includes_closed_form(A, B, tol);
        if (v.kind != VerdictKind::Indeterminate) return v;
    }

    CharPolyFamily fa = build_family(A);
    CharPolyFamily fb = build_family(B);

    // Degree-6 cross-family certificate: with every invariant matched
    // except the product term, the families differ by (cyc_A - cyc_B) z^2
    // plus a constant, and the crossing-point comparison of the two cubics
    // settles the top roots for every angle at once (exact arithmetic on
    // the squared weights).
    if (A.size() == 6 && B.size() == 6) {
        const auto& qa = A.squares();
        const auto& qb = B.squares();
        double scale = std::max(A.sum_squares(), B.sum_squares()) + 1.0;
        double s4a = sum_fourth(qa), s4b = sum_fourth(qb);
        bool matched =
            std::abs(A.sum_squares() - B.sum_squares()) <= kMatchRel * scale &&
            std::abs(A.product() - B.product()) <=
                kMatchRel * (1.0 + std::max(A.product(), B.product())) &&
            std::abs(s4a - s4b) <= kMatchRel * (1.0 + std::max(s4a, s4b));
        if (matched) {
            double cyc_a = cyc_sum(qa), cyc_b = cyc_sum(qb);
            double pt_a = qa[0] * qa[2] * qa[4] + qa[1] * qa[3] * qa[5];
            double pt_b = qb[0] * qb[2] * qb[4] + qb[1] * qb[3] * qb[5];
            double cyc_tol = kMatchRel * (1.0 + std::max(cyc_a, cyc_b));
            double pt_tol = kMatchRel * (1.0 + std::max(pt_a, pt_b));
            if (std::abs(cyc_a - cyc_b) <= cyc_tol) {
                // Constant-shift families: a larger product term lowers the
                // constant coefficient, so its top root is larger at every
                // angle.
                if (std::abs(pt_a - pt_b) > pt_tol)
                    return sampled_verdict(fa, fb, pt_b < pt_a, std::sqrt(scale), tol);
            } else if (cyc_a > cyc_b) {
                CubicTriple c = cubic_from_family(fa, 0.0);
                CubicTriple d = cubic_from_family(fb, 0.0);
                if (compare_cubic(c, d) == CubicComparison::FirstRootSmallerIsD) {
                    InclusionVerdict v = sampled_verdict(fa, fb, true, std::sqrt(scale), tol);
                    if (v.margin >= -v.tolerance) return v;
                }
            }
        }
    }

    // Polynomial ratio criterion: usable only when both corner products are
    // positive and B's top root at t = -1 does not exceed A's.
    if (fa.alpha > 0.0 && fb.alpha > 0.0) {
        double zm1_a = support_max(fa, -1.0);
        double z1_a = support_max(fa, 1.0);
        double zm1_b = support_max(fb, -1.0);
        double tolerance = default_tol(0.5 * std::max(z1_a, support_max(fb, 1.0)), tol);
        if (zm1_b <= zm1_a + tolerance && z1_a > zm1_a) {
            bool ok = true;
            const int m = std::max(grid_size, 65);
            for (int k = 0; k < m && ok; ++k) {
                double z = zm1_a + (z1_a - zm1_a) * k / (m - 1);
                double lhs = poly::eval(fb.f, z) / fb.alpha;
                double rhs = poly::eval(fa.f, z) / fa.alpha;
                double sc = poly::eval_abs(fa.f, z) / fa.alpha + poly::eval_abs(fb.f, z) / fb.alpha;
                if (lhs < rhs - 1e-12 * sc) ok = false;
            }
            if (ok) {
                InclusionVerdict v = sampled_verdict(fa, fb, true, 0.5 * z1_a, tol);
                if (v.margin >= -v.tolerance) return v;
            }
            // Ratio test failed or was inconsistent: fall through to grid.
        }
    }
    return includes_general(A, B, grid_size, tol);
}

}  // namespace cyclerange
