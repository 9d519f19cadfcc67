#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cyclerange/weights.hpp"

namespace cyclerange {

/// All dihedral classes of weight arrangements for one n.  For n = 6 the
/// classes split into 10 families keyed by the unordered pair of
/// odd/even-position index triples.
struct ClassTable {
    int n = 0;
    std::vector<DihedralClass> classes;  // lexicographically sorted canonical reps
    std::vector<int> family_of;          // n = 6 only: family index 0..9 per class

    static std::string family_name(int family);  // "I".."X"
};

/// n!/(2n) classes, generated by keeping permutations equal to their own
/// canonical form.  3 <= n <= 10 (factorial guard).
ClassTable enumerate_classes(int n);

/// Sum of a^2_{sigma(i)} a^2_{sigma(i+1)} around the cycle; invariant
/// under rotations and reversal of sigma.
double cyclic_sum(const WeightVector& a, const DihedralClass& cls);

/// a^2_{sigma(1)} a^2_{sigma(3)} a^2_{sigma(5)} + (even positions); the
/// theta-independent part of the degree-6 constant term.
double product_term_n6(const WeightVector& a, const DihedralClass& cls);

/// The conjectured maximizing arrangement: odd indices ascending, then
/// even indices descending (1, 3, 5, ..., 6, 4, 2).
std::vector<int> conjecture_pattern(int n);

enum class Direction { Max, Min };
enum class SearchMethod { Grid, Certified };

struct ExtremeResult {
    bool total = false;                   // a class dominating (dominated by) all others exists
    std::optional<DihedralClass> winner;
    std::vector<DihedralClass> ties;      // winners indistinguishable within tolerance
    std::vector<DihedralClass> antichain; // maximal (minimal) classes when no total optimum
    double worst_margin = 0.0;            // winner vs strongest rival, lambda_1 units
    int classes_checked = 0;
    bool certified = false;               // decided by exact arithmetic, not the grid
};

/// Finds an arrangement whose support profile dominates (Max) or is
/// dominated by (Min) every other class on the grid.  Weights must be
/// sorted ascending with strictly positive entries.
ExtremeResult find_extreme(const WeightVector& a, Direction dir,
                           SearchMethod method = SearchMethod::Grid, int grid_size = 257,
                           int threads = 1);

struct ConjectureReport {
    bool pass = false;
    double worst_margin = 0.0;
    DihedralClass worst_class;
    DihedralClass pattern_class;
    int classes_checked = 0;
};

/// Tests W(A_sigma) <= W(pattern) for every dihedral class sigma.
ConjectureReport verify_conjecture1(const WeightVector& ascending, int grid_size = 257,
                                    int threads = 1);

struct ClassSumEntry {
    DihedralClass cls;
    double cyclic = 0.0;
    double product_term = 0.0;
};

struct CyclicSumReport {
    std::vector<ClassSumEntry> entries;             // aligned with ClassTable order
    std::vector<std::pair<int, int>> order_edges;   // (smaller, larger) cyclic-sum edges
    bool family_heads_dominate = false;             // head >= member inside every family
};

struct HeadBound {
    int family = 0;
    DihedralClass head;
    double alpha = 0.0;  // cyclic-sum gap to the top class
    double beta = 0.0;   // product-term gap
    double x = 0.0;      // -beta/alpha
};

struct IntersectionBound {
    DihedralClass top;                  // global cyclic-sum maximizer
    double x0 = 0.0;                    // (sum of squared weights)/3
    double r5_third = 0.0;
    std::vector<HeadBound> heads;       // the nine non-top family heads
    bool x_bounds_hold = false;         // x <= x0 + r5/3 for every head
    double min_support_sq_gap = 0.0;    // min over t of support^2 - (x0 + r5/3)
};

/// Family-by-family cyclic-sum structure for n = 6 with the crossing-point
/// bounds used to compare every family head against the top class.
/// Requires strictly ascending positive weights.
std::pair<CyclicSumReport, IntersectionBound> family_analysis_n6(const WeightVector& a);

}  // namespace cyclerange
