#pragma once

// Reference arrangement tables for n = 5 and n = 6 and the exact
// difference formulas for their cyclic sums in the increment
// parametrization r_1 = a_1^2, r_j = a_j^2 - a_{j-1}^2.

#include <array>
#include <map>
#include <vector>

namespace fixtures {

using Arr6 = std::array<int, 6>;
using R7 = std::array<double, 7>;  // 1-based access, slot 0 unused

// 60 representatives, keyed by their table index, grouped into the ten
// odd/even-position families below.
inline const std::map<int, Arr6>& arrangements_n6() {
    static const std::map<int, Arr6> table = {
        {21, {4, 2, 1, 3, 5, 6}}, {28, {1, 3, 5, 2, 4, 6}}, {2, {1, 2, 4, 3, 5, 6}},
        {4, {1, 3, 4, 2, 5, 6}},  {23, {4, 3, 1, 2, 5, 6}}, {26, {1, 2, 5, 3, 4, 6}},
        {45, {2, 4, 1, 5, 3, 6}}, {53, {1, 5, 3, 4, 2, 6}}, {47, {2, 5, 1, 4, 3, 6}},
        {51, {1, 4, 3, 5, 2, 6}}, {57, {1, 4, 2, 5, 3, 6}}, {59, {1, 5, 2, 4, 3, 6}},
        {15, {3, 2, 1, 4, 5, 6}}, {58, {1, 4, 5, 2, 3, 6}}, {1, {1, 2, 3, 4, 5, 6}},
        {6, {1, 4, 3, 2, 5, 6}},  {17, {3, 4, 1, 2, 5, 6}}, {56, {1, 2, 5, 4, 3, 6}},
        {9, {2, 3, 1, 4, 5, 6}},  {52, {1, 4, 5, 3, 2, 6}}, {3, {1, 3, 2, 4, 5, 6}},
        {5, {1, 4, 2, 3, 5, 6}},  {11, {2, 4, 1, 3, 5, 6}}, {50, {1, 3, 5, 4, 2, 6}},
        {13, {3, 1, 2, 4, 5, 6}}, {46, {2, 4, 5, 1, 3, 6}}, {7, {2, 1, 3, 4, 5, 6}},
        {12, {2, 4, 3, 1, 5, 6}}, {18, {3, 4, 2, 1, 5, 6}}, {44, {2, 1, 5, 4, 3, 6}},
        {19, {4, 1, 2, 3, 5, 6}}, {34, {2, 3, 5, 1, 4, 6}}, {8, {2, 1, 4, 3, 5, 6}},
        {10, {2, 3, 4, 1, 5, 6}}, {24, {4, 3, 2, 1, 5, 6}}, {32, {2, 1, 5, 3, 4, 6}},
        {20, {4, 1, 3, 2, 5, 6}}, {40, {3, 2, 5, 1, 4, 6}}, {14, {3, 1, 4, 2, 5, 6}},
        {16, {3, 2, 4, 1, 5, 6}}, {22, {4, 2, 3, 1, 5, 6}}, {38, {3, 1, 5, 2, 4, 6}},
        {39, {3, 2, 1, 5, 4, 6}}, {60, {1, 5, 4, 2, 3, 6}}, {25, {1, 2, 3, 5, 4, 6}},
        {30, {1, 5, 3, 2, 4, 6}}, {41, {3, 5, 1, 2, 4, 6}}, {55, {1, 2, 4, 5, 3, 6}},
        {33, {2, 3, 1, 5, 4, 6}}, {54, {1, 5, 4, 3, 2, 6}}, {27, {1, 3, 2, 5, 4, 6}},
        {29, {1, 5, 2, 3, 4, 6}}, {35, {2, 5, 1, 3, 4, 6}}, {49, {1, 3, 4, 5, 2, 6}},
        {37, {3, 1, 2, 5, 4, 6}}, {48, {2, 5, 4, 1, 3, 6}}, {31, {2, 1, 3, 5, 4, 6}},
        {36, {2, 5, 3, 1, 4, 6}}, {42, {3, 5, 2, 1, 4, 6}}, {43, {3, 5, 4, 1, 2, 6}},
    };
    return table;
}

// Families with their cyclic-sum head first.
inline const std::vector<std::vector<int>>& families_n6() {
    static const std::vector<std::vector<int>> fams = {
        {21, 28, 2, 4, 23, 26},  {45, 53, 47, 51, 57, 59}, {15, 58, 1, 6, 17, 56},
        {9, 52, 3, 5, 11, 50},   {13, 46, 7, 12, 18, 44},  {19, 34, 8, 10, 24, 32},
        {20, 40, 14, 16, 22, 38}, {39, 60, 25, 30, 41, 55}, {33, 54, 27, 29, 35, 49},
        {37, 48, 31, 36, 42, 43},
    };
    return fams;
}

struct Diff6 {
    int head;
    int member;
    double (*value)(const R7&);
};

// head-minus-member cyclic-sum differences inside each family.
inline const std::vector<Diff6>& family_diffs_n6() {
    static const std::vector<Diff6> diffs = {
        {21, 2, [](const R7& r) { return (r[2] + r[3] + r[4]) * (r[4] + r[5] + r[6]); }},
        {21, 4, [](const R7& r) {
             return r[3] * (r[2] + r[3] + r[4] + r[5]) + (r[2] + r[3] + r[4]) * (r[4] + r[5] + r[6]);
         }},
        {21, 23, [](const R7& r) { return r[3] * r[5]; }},
        {21, 26, [](const R7& r) {
             return r[5] * (r[3] + r[4] + r[5] + r[6]) + (r[2] + r[3] + r[4]) * (r[4] + r[5] + r[6]);
         }},
        {21, 28, [](const R7& r) { return (r[2] + r[3] + r[4] + r[5]) * (r[3] + r[4] + r[5] + r[6]); }},

        {45, 47, [](const R7& r) { return r[3] * r[5]; }},
        {45, 51, [](const R7& r) { return r[3] * r[5] + (r[2] + r[3]) * r[6]; }},
        {45, 53, [](const R7& r) { return (r[2] + r[3]) * (r[5] + r[6]); }},
        {45, 57, [](const R7& r) { return r[2] * r[6]; }},
        {45, 59, [](const R7& r) { return (r[2] + r[3]) * r[5] + r[2] * r[6]; }},

        {15, 1, [](const R7& r) { return (r[2] + r[3]) * (r[5] + r[6]); }},
        {15, 6, [](const R7& r) {
             return (r[2] + r[3]) * (r[5] + r[6]) + (r[3] + r[4]) * (r[2] + r[3] + r[4] + r[5]);
         }},
        {15, 17, [](const R7& r) { return (r[3] + r[4]) * (r[4] + r[5]); }},
        {15, 56, [](const R7& r) {
             return (r[3] + r[4]) * (r[4] + r[5]) + (r[2] + r[3] + r[4] + r[5]) * (r[5] + r[6]);
         }},
        {15, 58, [](const R7& r) { return (r[2] + r[3] + r[4] + r[5]) * (r[3] + r[4] + r[5] + r[6]); }},

        {9, 3, [](const R7& r) { return r[2] * (r[5] + r[6]); }},
        {9, 5, [](const R7& r) {
             return r[2] * (r[5] + r[6]) + r[4] * (r[2] + r[3] + r[4] + r[5]);
         }},
        {9, 11, [](const R7& r) { return r[4] * (r[3] + r[4] + r[5]); }},
        {9, 50, [](const R7& r) {
             return r[4] * (r[3] + r[4] + r[5]) + (r[5] + r[6]) * (r[2] + r[3] + r[4] + r[5]);
         }},
        {9, 52, [](const R7& r) { return (r[4] + r[5] + r[6]) * (r[2] + r[3] + r[4] + r[5]); }},

        {13, 7, [](const R7& r) { return r[3] * (r[5] + r[6]); }},
        {13, 12, [](const R7& r) {
             return r[3] * (r[5] + r[6]) + (r[2] + r[3] + r[4]) * (r[3] + r[4] + r[5]);
         }},
        {13, 18, [](const R7& r) { return (r[4] + r[5]) * (r[2] + r[3] + r[4]); }},
        {13, 44, [](const R7& r) {
             return (r[4] + r[5]) * (r[2] + r[3] + r[4]) + (r[5] + r[6]) * (r[3] + r[4] + r[5]);
         }},
        {13, 46, [](const R7& r) { return (r[3] + r[4] + r[5]) * (r[2] + r[3] + r[4] + r[5] + r[6]); }},

        {19, 8, [](const R7& r) { return (r[3] + r[4]) * (r[4] + r[5] + r[6]); }},
        {19, 10, [](const R7& r) {
             return (r[2] + r[3]) * (r[3] + r[4] + r[5]) + (r[3] + r[4]) * (r[4] + r[5] + r[6]);
         }},
        {19, 24, [](const R7& r) { return r[5] * (r[2] + r[3]); }},
        {19, 32, [](const R7& r) {
             return r[5] * (r[2] + r[3]) + (r[3] + r[4] + r[5]) * (r[4] + r[5] + r[6]);
         }},
        {19, 34, [](const R7& r) { return (r[3] + r[4] + r[5]) * (r[2] + r[3] + r[4] + r[5] + r[6]); }},

        {20, 14, [](const R7& r) { return r[4] * (r[3] + r[4] + r[5] + r[6]); }},
        {20, 16, [](const R7& r) {
             return r[2] * (r[4] + r[5]) + r[4] * (r[3] + r[4] + r[5] + r[6]);
         }},
        {20, 22, [](const R7& r) { return r[2] * r[5]; }},
        {20, 38, [](const R7& r) {
             return r[4] * (r[3] + r[4] + r[5] + r[6]) + r[5] * (r[2] + r[3] + r[4] + r[5] + r[6]);
         }},
        {20, 40, [](const R7& r) { return (r[4] + r[5]) * (r[2] + r[3] + r[4] + r[5] + r[6]); }},

        {39, 25, [](const R7& r) { return r[6] * (r[2] + r[3]); }},
        {39, 30, [](const R7& r) {
             return r[6] * (r[2] + r[3]) + (r[2] + r[3] + r[4]) * (r[3] + r[4] + r[5]);
         }},
        {39, 41, [](const R7& r) { return r[4] * (r[3] + r[4] + r[5]); }},
        {39, 55, [](const R7& r) {
             return r[4] * (r[3] + r[4] + r[5]) + r[6] * (r[2] + r[3] + r[4]);
         }},
        {39, 60, [](const R7& r) { return (r[2] + r[3] + r[4]) * (r[3] + r[4] + r[5] + r[6]); }},

        {33, 27, [](const R7& r) { return r[2] * r[6]; }},
        {33, 29, [](const R7& r) {
             return r[2] * (r[4] + r[5] + r[6]) + (r[3] + r[4]) * (r[4] + r[5]);
         }},
        {33, 35, [](const R7& r) { return (r[3] + r[4]) * (r[4] + r[5]); }},
        {33, 49, [](const R7& r) {
             return (r[3] + r[4]) * (r[4] + r[5]) + r[6] * (r[2] + r[3] + r[4]);
         }},
        {33, 54, [](const R7& r) { return (r[2] + r[3] + r[4]) * (r[4] + r[5] + r[6]); }},

        {37, 31, [](const R7& r) { return r[3] * r[6]; }},
        {37, 36, [](const R7& r) {
             return r[3] * r[6] + (r[3] + r[4]) * (r[2] + r[3] + r[4] + r[5]);
         }},
        {37, 42, [](const R7& r) { return r[4] * (r[2] + r[3] + r[4] + r[5]); }},
        {37, 43, [](const R7& r) {
             return r[3] * r[6] + r[4] * (r[2] + r[3] + r[4] + r[5] + r[6]);
         }},
        {37, 48, [](const R7& r) { return (r[3] + r[4]) * (r[2] + r[3] + r[4] + r[5] + r[6]); }},
    };
    return diffs;
}

// Chains linking the family heads to the global maximum.
inline const std::vector<Diff6>& chain_diffs_n6() {
    static const std::vector<Diff6> diffs = {
        {33, 45, [](const R7& r) {
             return r[4] * (r[2] + 2 * r[3] + 2 * r[4] + 2 * r[5] + r[6]);
         }},
        {37, 33, [](const R7& r) {
             return r[2] * (r[4] + r[5]) + r[3] * (r[2] + r[3] + r[4] + r[5] + r[6]);
         }},
        {13, 37, [](const R7& r) { return r[5] * (r[3] + r[4] + r[5] + r[6]); }},
        {21, 13, [](const R7& r) { return r[4] * r[6]; }},
        {20, 33, [](const R7& r) {
             return r[5] * (r[2] + r[3] + r[4] + r[5]) + r[6] * (r[3] + r[4] + r[5]);
         }},
        {19, 20, [](const R7& r) { return r[3] * (r[2] + r[3] + r[4] + r[5]); }},
        {21, 19, [](const R7& r) { return r[2] * r[4]; }},
        {39, 33, [](const R7& r) { return r[3] * (r[2] + r[3] + r[4] + r[5] + r[6]); }},
        {19, 39, [](const R7& r) {
             return r[4] * r[6] + r[5] * (r[2] + r[3] + r[4] + r[5] + r[6]);
         }},
        {15, 9, [](const R7& r) { return r[3] * (r[2] + r[3] + r[4] + r[5] + r[6]); }},
        {13, 15, [](const R7& r) { return r[2] * r[4]; }},
    };
    return diffs;
}

using Arr5 = std::array<int, 5>;
using R6v = std::array<double, 6>;  // 1-based, slot 0 unused

inline const std::map<int, Arr5>& arrangements_n5() {
    static const std::map<int, Arr5> table = {
        {1, {3, 5, 4, 2, 1}},  {2, {3, 5, 4, 1, 2}},  {3, {2, 5, 4, 1, 3}},
        {4, {2, 5, 4, 3, 1}},  {5, {2, 5, 3, 4, 1}},  {6, {2, 5, 3, 1, 4}},
        {7, {1, 5, 4, 3, 2}},  {8, {1, 5, 4, 2, 3}},  {9, {1, 5, 3, 4, 2}},
        {10, {1, 5, 3, 2, 4}}, {11, {1, 5, 2, 4, 3}}, {12, {1, 5, 2, 3, 4}},
    };
    return table;
}

struct Diff5 {
    int hi;
    int lo;
    double (*value)(const R6v&);
};

inline const std::vector<Diff5>& diffs_n5() {
    static const std::vector<Diff5> diffs = {
        {1, 2, [](const R6v& r) { return r[2] * r[4]; }},
        {2, 3, [](const R6v& r) { return r[3] * (r[2] + r[3] + r[4] + r[5]); }},
        {3, 8, [](const R6v& r) { return r[2] * r[5]; }},
        {8, 10, [](const R6v& r) { return r[4] * (r[2] + r[3] + r[4] + r[5]); }},
        {10, 12, [](const R6v& r) { return r[3] * r[5]; }},
        {5, 6, [](const R6v& r) { return r[3] * (r[2] + r[3] + r[4]); }},
        {1, 4, [](const R6v& r) { return r[3] * r[5]; }},
        {4, 7, [](const R6v& r) { return r[2] * (r[4] + r[5]); }},
        {7, 8, [](const R6v& r) { return r[3] * (r[2] + r[3] + r[4]); }},
        {4, 5, [](const R6v& r) { return r[4] * (r[2] + r[3] + r[4] + r[5]); }},
        {5, 9, [](const R6v& r) { return r[2] * r[5]; }},
        {9, 11, [](const R6v& r) { return r[3] * (r[2] + r[3] + r[4] + r[5]); }},
        {11, 12, [](const R6v& r) { return r[2] * r[4]; }},
        {6, 10, [](const R6v& r) { return r[2] * (r[4] + r[5]); }},
    };
    return diffs;
}

}  // namespace fixtures
