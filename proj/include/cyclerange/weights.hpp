#pragma once

#include <complex>
#include <optional>
#include <vector>

namespace cyclerange {

/// Weights a_1..a_n of a cyclic shift matrix S(a_1,...,a_n): a_j sits at
/// (j, j+1) and a_n at (n, 1).  Entries are nonnegative; n >= 2.
/// Immutable after construction.
class WeightVector {
  public:
    explicit WeightVector(std::vector<double> entries);

    /// Keeps the given squared weights exactly (entries are their square
    /// roots), so integer squared inputs produce exact polynomial
    /// coefficients downstream.
    static WeightVector from_squares(std::vector<double> squares);

    int size() const { return static_cast<int>(a_.size()); }
    double operator[](int i) const { return a_[i]; }  // 0-based
    const std::vector<double>& entries() const { return a_; }
    const std::vector<double>& squares() const { return sq_; }

    double product() const;
    double sum_squares() const;
    bool has_zero() const;
    bool strictly_ascending() const;
    bool ascending() const;

    /// S(a_{perm(1)}, ..., a_{perm(n)}) for a 1-based permutation.
    WeightVector arranged(const std::vector<int>& perm) const;
    WeightVector scaled(double c) const;

  private:
    WeightVector() = default;
    std::vector<double> a_;
    std::vector<double> sq_;
};

/// Reduction of complex weights w to nonnegative magnitudes |w| and the
/// rotation phase t with W(S(w)) = e^{it} W(S(|w|)).
struct PhaseReduction {
    WeightVector magnitudes;
    double phase = 0.0;  // in [0, 2*pi/n); 0 when any weight vanishes
};

/// The r-parametrization a_j^2 = r_1 + ... + r_j.  Strictly ascending
/// positive weights have all r_i > 0, which makes the fixed-n comparison
/// formulas manifestly nonnegative.
struct RDecomposition {
    std::vector<double> r;
};

/// Canonical representative of a weight arrangement modulo the n cyclic
/// rotations and n reversals: the lexicographically least sequence in the
/// orbit (it always starts with index 1).
struct DihedralClass {
    std::vector<int> rep;  // 1-based permutation of 1..n

    bool operator==(const DihedralClass& o) const { return rep == o.rep; }
    bool operator<(const DihedralClass& o) const { return rep < o.rep; }
};

PhaseReduction normalize_complex(const std::vector<std::complex<double>>& w);

/// Throws validation_error for a malformed permutation.
DihedralClass canonical_dihedral(const std::vector<int>& perm);

/// All 2n rotations/reversals of a sequence.
std::vector<std::vector<int>> dihedral_orbit(const std::vector<int>& perm);

RDecomposition r_decomposition(const WeightVector& a);

/// Inverse of r_decomposition; rejects r with a negative partial sum.
WeightVector weights_from_r(const std::vector<double>& r);

}  // namespace cyclerange
