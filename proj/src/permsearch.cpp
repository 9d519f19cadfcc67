#include "cyclerange/permsearch.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numeric>

#include "cyclerange/common.hpp"
#include "cyclerange/inclusion.hpp"
#include "cyclerange/parallel.hpp"
#include "cyclerange/spectra.hpp"

namespace cyclerange {

namespace {

// Family labels for n = 6, keyed by the sorted odd-position triple of the
// canonical representative (which always contains index 1).
const std::map<std::array<int, 3>, int>& family_key_table() {
    static const std::map<std::array<int, 3>, int> table = {
        {{1, 4, 5}, 0}, {{1, 2, 3}, 1}, {{1, 3, 5}, 2}, {{1, 2, 5}, 3}, {{1, 4, 6}, 4},
        {{1, 3, 6}, 5}, {{1, 2, 6}, 6}, {{1, 3, 4}, 7}, {{1, 2, 4}, 8}, {{1, 5, 6}, 9},
    };
    return table;
}

std::vector<std::vector<double>> class_profiles(const WeightVector& a,
                                                const std::vector<DihedralClass>& classes,
                                                const std::vector<double>& nodes, int threads) {
    std::vector<std::vector<double>> z(classes.size());
    parallel_for(static_cast<int>(classes.size()), threads, [&](int i) {
        CharPolyFamily fam = build_family(a.arranged(classes[i].rep));
        z[i] = support_profile(fam, nodes).z;
    });
    return z;
}

void require_search_input(const WeightVector& a) {
    if (!a.ascending()) throw validation_error("weights must be sorted ascending");
    for (int i = 0; i < a.size(); ++i)
        if (!(a[i] > 0.0)) throw validation_error("weights must be strictly positive");
}

}  // namespace

std::string ClassTable::family_name(int family) {
    static const char* names[] = {"I", "II", "III", "IV", "V", "VI", "VII", "VIII", "IX", "X"};
    return (family >= 0 && family < 10) ? names[family] : "?";
}

ClassTable enumerate_classes(int n) {
    if (n < 3 || n > 10) throw validation_error("enumerate_classes: n must be in 3..10");
    ClassTable table;
    table.n = n;

    // Canonical reps start with 1; walking permutations of 2..n in
    // lexicographic order yields the classes already sorted.
    std::vector<int> tail(n - 1);
    std::iota(tail.begin(), tail.end(), 2);
    std::vector<int> cand(n);
    cand[0] = 1;
    do {
        std::copy(tail.begin(), tail.end(), cand.begin() + 1);
        DihedralClass cls = canonical_dihedral(cand);
        if (cls.rep == cand) table.classes.push_back(std::move(cls));
    } while (std::next_permutation(tail.begin(), tail.end()));

    if (n == 6) {
        table.family_of.resize(table.classes.size());
        for (std::size_t i = 0; i < table.classes.size(); ++i) {
            const auto& rep = table.classes[i].rep;
            std::array<int, 3> key{rep[0], rep[2], rep[4]};
            std::sort(key.begin(), key.end());
            table.family_of[i] = family_key_table().at(key);
        }
    }
    return table;
}

double cyclic_sum(const WeightVector& a, const DihedralClass& cls) {
    const int n = a.size();
    if (static_cast<int>(cls.rep.size()) != n)
        throw validation_error("cyclic_sum: class size mismatch");
    const auto& q = a.squares();
    std::vector<double> terms(n);
    for (int i = 0; i < n; ++i)
        terms[i] = q[cls.rep[i] - 1] * q[cls.rep[(i + 1) % n] - 1];
    return kahan_sum(terms);
}

double product_term_n6(const WeightVector& a, const DihedralClass& cls) {
    if (a.size() != 6 || cls.rep.size() != 6)
        throw validation_error("product_term_n6: needs n = 6");
    const auto& q = a.squares();
    return q[cls.rep[0] - 1] * q[cls.rep[2] - 1] * q[cls.rep[4] - 1] +
           q[cls.rep[1] - 1] * q[cls.rep[3] - 1] * q[cls.rep[5] - 1];
}

std::vector<int> conjecture_pattern(int n) {
    std::vector<int> p;
    p.reserve(n);
    for (int i = 1; i <= n; i += 2) p.push_back(i);
    for (int i = n - (n % 2); i >= 2; i -= 2) p.push_back(i);
    return p;
}

ExtremeResult find_extreme(const WeightVector& a, Direction dir, SearchMethod method,
                           int grid_size, int threads) {
    require_search_input(a);
    const int n = a.size();
    ClassTable table = enumerate_classes(n);
    const int count = static_cast<int>(table.classes.size());

    if (method == SearchMethod::Certified) {
        // Exact-arithmetic routes: total cyclic-sum order for n = 5, the
        // skew-pair order for n = 4, and the family/crossing-point
        // certificates for n = 6 maxima.  Anything else falls back to the
        // grid below.
        auto by_cyclic = [&](bool want_max) {
            int best = 0;
            double best_sum = cyclic_sum(a, table.classes[0]);
            for (int i = 1; i < count; ++i) {
                double s = cyclic_sum(a, table.classes[i]);
                if (want_max ? (s > best_sum) : (s < best_sum)) {
                    best_sum = s;
                    best = i;
                }
            }
            return best;
        };
        std::optional<int> pick;
        if (n == 5) {
            pick = by_cyclic(dir == Direction::Max);
        } else if (n == 4) {
            // Smaller skew pair sum q_{s1}q_{s3} + q_{s2}q_{s4} means a
            // larger range; equal total/product invariants hold for free.
            int best = 0;
            const auto& q = a.squares();
            auto skew = [&](const DihedralClass& c) {
                return q[c.rep[0] - 1] * q[c.rep[2] - 1] + q[c.rep[1] - 1] * q[c.rep[3] - 1];
            };
            double best_v = skew(table.classes[0]);
            for (int i = 1; i < count; ++i) {
                double v = skew(table.classes[i]);
                bool better = (dir == Direction::Max) ? (v < best_v) : (v > best_v);
                if (better) {
                    best_v = v;
                    best = i;
                }
            }
            pick = best;
        } else if (n == 6 && dir == Direction::Max && a.strictly_ascending()) {
            auto [report, bound] = family_analysis_n6(a);
            if (report.family_heads_dominate && bound.x_bounds_hold &&
                bound.min_support_sq_gap > 0.0) {
                int idx = static_cast<int>(
                    std::find(table.classes.begin(), table.classes.end(), bound.top) -
                    table.classes.begin());
                pick = idx;
            }
        }
        if (pick) {
            ExtremeResult res;
            res.total = true;
            res.certified = true;
            res.winner = table.classes[*pick];
            res.classes_checked = count;
            // Margin against the strongest rival at the sampled endpoints.
            double worst = 0.0;
            bool first = true;
            CharPolyFamily fw = build_family(a.arranged(res.winner->rep));
            for (int i = 0; i < count; ++i) {
                if (i == *pick) continue;
                CharPolyFamily fr = build_family(a.arranged(table.classes[i].rep));
                for (double t : {1.0, 0.0, -1.0}) {
                    double gap = 0.5 * (support_max(fw, t) - support_max(fr, t));
                    if (dir == Direction::Min) gap = -gap;
                    if (first || gap < worst) {
                        worst = gap;
                        first = false;
                    }
                }
            }
            res.worst_margin = worst;
            return res;
        }
        // fall through to the grid search
    }

    std::vector<double> nodes = chebyshev_nodes(grid_size);
    std::vector<std::vector<double>> z = class_profiles(a, table.classes, nodes, threads);
    const int m = static_cast<int>(nodes.size());

    double max_support = 0.0;
    for (const auto& prof : z) max_support = std::max(max_support, prof.front());
    const double tol_z = 2.0 * 1e-9 * (1.0 + 0.5 * max_support);

    // Envelope and second-best envelope per node.
    std::vector<double> env1(m), env2(m);
    const double sign = (dir == Direction::Max) ? 1.0 : -1.0;
    for (int k = 0; k < m; ++k) {
        double b1 = -1e300, b2 = -1e300;
        for (int i = 0; i < count; ++i) {
            double v = sign * z[i][k];
            if (v > b1) {
                b2 = b1;
                b1 = v;
            } else if (v > b2) {
                b2 = v;
            }
        }
        env1[k] = b1;
        env2[k] = b2;
    }

    ExtremeResult res;
    res.classes_checked = count;
    int winner = -1;
    double winner_short = -1e300;
    for (int i = 0; i < count; ++i) {
        double shortfall = 0.0;
        for (int k = 0; k < m; ++k)
            shortfall = std::min(shortfall, sign * z[i][k] - env1[k]);
        if (shortfall >= -tol_z) {
            res.ties.push_back(table.classes[i]);
            if (shortfall > winner_short) {
                winner_short = shortfall;
                winner = i;
            }
        }
    }

    if (winner >= 0) {
        res.total = true;
        res.winner = table.classes[winner];
        double margin = 1e300;
        for (int k = 0; k < m; ++k) {
            double rival = (sign * z[winner][k] == env1[k]) ? env2[k] : env1[k];
            margin = std::min(margin, 0.5 * (sign * z[winner][k] - rival));
        }
        res.worst_margin = margin;
        return res;
    }

    // No total optimum: report the maximal (resp. minimal) antichain.
    res.total = false;
    if (count <= 512) {
        for (int i = 0; i < count; ++i) {
            bool beaten = false;
            for (int j = 0; j < count && !beaten; ++j) {
                if (j == i) continue;
                bool ge_all = true, gt_some = false;
                for (int k = 0; k < m; ++k) {
                    double d = sign * (z[j][k] - z[i][k]);
                    if (d < -tol_z) {
                        ge_all = false;
                        break;
                    }
                    if (d > tol_z) gt_some = true;
                }
                beaten = ge_all && gt_some;
            }
            if (!beaten) res.antichain.push_back(table.classes[i]);
        }
    }
    return res;
}

ConjectureReport verify_conjecture1(const WeightVector& a, int grid_size, int threads) {
    if (!a.ascending()) throw validation_error("verify_conjecture1: weights must be ascending");
    const int n = a.size();

    ConjectureReport rep;
    rep.pattern_class = canonical_dihedral(conjecture_pattern(n));

    std::vector<DihedralClass> classes;
    if (n == 2) {
        classes.push_back(canonical_dihedral({1, 2}));
    } else {
        classes = enumerate_classes(n).classes;
    }
    rep.classes_checked = static_cast<int>(classes.size());

    std::vector<double> nodes = chebyshev_nodes(grid_size);
    CharPolyFamily pattern_fam = build_family(a.arranged(rep.pattern_class.rep));
    std::vector<double> zp = support_profile(pattern_fam, nodes).z;

    std::vector<std::vector<double>> z = class_profiles(a, classes, nodes, threads);
    double max_support = 0.5 * zp.front();
    for (const auto& prof : z) max_support = std::max(max_support, 0.5 * prof.front());
    const double tol = 1e-9 * (1.0 + max_support);

    double worst = 1e300;
    int worst_idx = 0;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        double margin = 1e300;
        for (std::size_t k = 0; k < nodes.size(); ++k)
            margin = std::min(margin, 0.5 * (zp[k] - z[i][k]));
        if (margin < worst) {
            worst = margin;
            worst_idx = static_cast<int>(i);
        }
    }
    rep.worst_margin = worst;
    rep.worst_class = classes[worst_idx];
    rep.pass = worst >= -tol;
    return rep;
}

std::pair<CyclicSumReport, IntersectionBound> family_analysis_n6(const WeightVector& a) {
    if (a.size() != 6) throw validation_error("family_analysis_n6: needs n = 6");
    // Ties are allowed: the difference formulas degrade gracefully to
    // non-strict inequalities when increments vanish.
    if (!a.ascending() || !(a[0] > 0.0))
        throw validation_error("family_analysis_n6: needs ascending positive weights");

    ClassTable table = enumerate_classes(6);
    const int count = static_cast<int>(table.classes.size());

    CyclicSumReport report;
    report.entries.resize(count);
    for (int i = 0; i < count; ++i) {
        report.entries[i] = {table.classes[i], cyclic_sum(a, table.classes[i]),
                             product_term_n6(a, table.classes[i])};
    }

    // Family heads: the cyclic-sum maximizer of each family.
    std::array<int, 10> head{};
    head.fill(-1);
    for (int i = 0; i < count; ++i) {
        int f = table.family_of[i];
        if (head[f] < 0 || report.entries[i].cyclic > report.entries[head[f]].cyclic) head[f] = i;
    }

    report.family_heads_dominate = true;
    for (int f = 0; f < 10; ++f) {
        std::vector<int> members;
        for (int i = 0; i < count; ++i)
            if (table.family_of[i] == f) members.push_back(i);
        std::sort(members.begin(), members.end(), [&](int i, int j) {
            return report.entries[i].cyclic < report.entries[j].cyclic;
        });
        for (std::size_t k = 0; k + 1 < members.size(); ++k)
            report.order_edges.emplace_back(members[k], members[k + 1]);
        for (int i : members)
            if (report.entries[i].cyclic > report.entries[head[f]].cyclic)
                report.family_heads_dominate = false;
    }

    int top = head[0];
    for (int f = 1; f < 10; ++f)
        if (report.entries[head[f]].cyclic > report.entries[top].cyclic) top = head[f];
    for (int f = 0; f < 10; ++f)
        if (head[f] != top) report.order_edges.emplace_back(head[f], top);

    IntersectionBound bound;
    bound.top = table.classes[top];
    bound.x0 = a.sum_squares() / 3.0;
    RDecomposition r = r_decomposition(a);
    bound.r5_third = r.r[4] / 3.0;

    bound.x_bounds_hold = true;
    for (int f = 0; f < 10; ++f) {
        if (head[f] == top) continue;
        HeadBound hb;
        hb.family = f;
        hb.head = table.classes[head[f]];
        hb.alpha = report.entries[top].cyclic - report.entries[head[f]].cyclic;
        hb.beta = report.entries[top].product_term - report.entries[head[f]].product_term;
        // A zero gap only happens with tied weights; the bound is vacuous.
        hb.x = (hb.alpha > 0.0) ? -hb.beta / hb.alpha : -1e300;
        if (!(hb.x <= bound.x0 + bound.r5_third + 1e-12 * (1.0 + std::abs(bound.x0))))
            bound.x_bounds_hold = false;
        bound.heads.push_back(std::move(hb));
    }

    CharPolyFamily top_fam = build_family(a.arranged(bound.top.rep));
    double gap = 1e300;
    for (double t : {-1.0, 0.0, 1.0}) {
        double s = support_max(top_fam, t);
        gap = std::min(gap, s * s - (bound.x0 + bound.r5_third));
    }
    bound.min_support_sq_gap = gap;
    return {std::move(report), std::move(bound)};
}

}  // namespace cyclerange
