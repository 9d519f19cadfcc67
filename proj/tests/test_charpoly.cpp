#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "cyclerange/charpoly.hpp"
#include "cyclerange/common.hpp"
#include "cyclerange/rng.hpp"
#include "cyclerange/spectra.hpp"
#include "test_support.hpp"

using namespace cyclerange;

namespace {

// Closed-form skew-pair coefficient sums for small n.
double skew2_n4(const std::vector<double>& q) { return q[0] * q[2] + q[1] * q[3]; }
double skew2_n5(const std::vector<double>& q) {
    return q[0] * q[2] + q[0] * q[3] + q[1] * q[3] + q[1] * q[4] + q[2] * q[4];
}
double skew2_n6(const std::vector<double>& q) {
    return q[0] * q[2] + q[0] * q[3] + q[0] * q[4] + q[1] * q[3] + q[1] * q[4] + q[1] * q[5] +
           q[2] * q[4] + q[2] * q[5] + q[3] * q[5];
}

void check_family_against_determinant(const WeightVector& a, Xoshiro256ss& rng) {
    CharPolyFamily fam = build_family(a);
    double theta = rng.uniform(0.0, 2 * std::numbers::pi);
    dense::HermMatrix m = two_re_matrix(a, theta);
    for (int k = 0; k < 4; ++k) {
        double z = rng.uniform(-4.0, 4.0);
        std::complex<double> det = testsup::det_zi_minus(m, z);
        double expected = poly::eval(fam.f, z) - 2 * fam.alpha * std::cos(fam.n * theta);
        double scale = poly::eval_abs(fam.f, z) + 2 * fam.alpha + 1.0;
        CHECK(std::abs(det.imag()) < 1e-10 * scale);
        CHECK(std::abs(det.real() - expected) < 1e-10 * scale);
    }
}

}  // namespace

TEST_CASE("the incomparable-pair arrangements give exact integer coefficients") {
    WeightVector a = WeightVector::from_squares({8, 3, 30, 0, 13, 4});
    CharPolyFamily fa = build_family(a);
    CHECK(fa.f == poly::Poly{1, 0, -58, 0, 905, 0, -3120});
    CHECK(fa.alpha == 0.0);

    WeightVector b = WeightVector::from_squares({4, 3, 30, 0, 13, 8});
    CharPolyFamily fb = build_family(b);
    CHECK(fb.f == poly::Poly{1, 0, -58, 0, 865, 0, -1560});
    CHECK(fb.alpha == 0.0);
}

TEST_CASE("small closed forms") {
    CharPolyFamily f4 = build_family(WeightVector({1, 1, 1, 1}));
    CHECK(f4.f == poly::Poly{1, 0, -4, 0, 2});
    CHECK(f4.alpha == 1.0);

    CharPolyFamily g4 = build_family(WeightVector({1, 2, 3, 4}));
    CHECK(g4.f == poly::Poly{1, 0, -30, 0, 73});
    CHECK(g4.alpha == 24.0);
}

TEST_CASE("family equals the determinant for random weights and angles") {
    Xoshiro256ss rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + static_cast<int>(rng.uniform(0, 8));
        WeightVector a(testsup::random_weights(rng, n, true));
        check_family_against_determinant(a, rng);
    }
}

TEST_CASE("coefficient structure invariants") {
    Xoshiro256ss rng(37);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 2 + static_cast<int>(rng.uniform(0, 8));
        WeightVector a(testsup::random_weights(rng, n, true));
        CharPolyFamily fam = build_family(a);
        REQUIRE(static_cast<int>(fam.f.size()) == n + 1);
        CHECK(fam.f[0] == 1.0);
        CHECK(fam.f[1] == 0.0);
        CHECK(std::abs(fam.f[2] + a.sum_squares()) < 1e-12 * (1.0 + a.sum_squares()));
        if (n % 2 == 1) {
            for (int i = 0; i <= n; i += 2)  // even-power coefficients all vanish
                CHECK(fam.f[n - i] == 0.0);
        }
    }
}

TEST_CASE("degree 4, 5, 6 coefficients match their skew-pair sums") {
    Xoshiro256ss rng(41);
    for (int trial = 0; trial < 400; ++trial) {
        for (int n : {4, 5, 6}) {
            WeightVector a(testsup::random_weights(rng, n, false));
            const auto& q = a.squares();
            CharPolyFamily fam = build_family(a);
            double s1 = a.sum_squares();
            CHECK(std::abs(fam.f[2] + s1) < 1e-10 * (1.0 + s1));
            double s2 = (n == 4) ? skew2_n4(q) : (n == 5 ? skew2_n5(q) : skew2_n6(q));
            CHECK(std::abs(fam.f[4] - s2) < 1e-10 * (1.0 + std::abs(s2)));
            if (n == 5) CHECK(fam.f[5] == 0.0);
            if (n == 6) {
                double c0 = -(q[0] * q[2] * q[4] + q[1] * q[3] * q[5]);
                CHECK(std::abs(fam.f[6] - c0) < 1e-10 * (1.0 + std::abs(c0)));
            }
            double prod = a.product();
            CHECK(std::abs(fam.alpha - prod) < 1e-12 * (1.0 + prod));
        }
    }
}

TEST_CASE("pair-sum identity ties the skew coefficient to the cyclic sum") {
    Xoshiro256ss rng(43);
    for (int trial = 0; trial < 400; ++trial) {
        WeightVector a(testsup::random_weights(rng, 6, false));
        const auto& q = a.squares();
        double cyc = 0.0;
        for (int i = 0; i < 6; ++i) cyc += q[i] * q[(i + 1) % 6];
        double s2 = skew2_n6(q);
        double lhs = 2.0 * (s2 + cyc);
        double sum_sq = a.sum_squares();
        double sum_4 = 0.0;
        for (double x : q) sum_4 += x * x;
        double rhs = sum_sq * sum_sq - sum_4;
        CHECK(std::abs(lhs - rhs) < 1e-10 * (1.0 + std::abs(rhs)));
    }
}

TEST_CASE("the family is invariant on each dihedral orbit") {
    Xoshiro256ss rng(47);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 3 + static_cast<int>(rng.uniform(0, 6));
        WeightVector a(testsup::random_weights(rng, n, false));
        std::vector<int> id(n);
        for (int i = 0; i < n; ++i) id[i] = i + 1;
        CharPolyFamily ref = build_family(a);
        for (const auto& member : dihedral_orbit(id)) {
            CharPolyFamily fam = build_family(a.arranged(member));
            for (int i = 0; i <= n; ++i)
                CHECK(std::abs(fam.f[i] - ref.f[i]) <= 1e-12 * (1.0 + std::abs(ref.f[i])));
            CHECK(std::abs(fam.alpha - ref.alpha) <= 1e-12 * (1.0 + ref.alpha));
        }
    }
}

TEST_CASE("skew-Hermitian part spectrum and the parity reconstructions") {
    // 4-cycle: eigenvalues of i(A - A^t) are 2 sin(2 pi k/4).
    ImagSpectrum s4 = imag_part_spectrum(WeightVector({1, 1, 1, 1}));
    REQUIRE(s4.alphas.size() == 2);
    CHECK(s4.alphas[0] == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(s4.alphas[1] == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
    CHECK_FALSE(s4.has_zero);

    ImagSpectrum s3 = imag_part_spectrum(WeightVector({1, 1, 1}));
    REQUIRE(s3.alphas.size() == 1);
    CHECK(s3.alphas[0] == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
    CHECK(s3.has_zero);

    ImagSpectrum s2 = imag_part_spectrum(WeightVector({1, 0}));
    REQUIRE(s2.alphas.size() == 1);
    CHECK(s2.alphas[0] == doctest::Approx(1.0).epsilon(1e-12));

    // Reconstruction: even n: f = prod(z^2 - a_j^2) + (-1)^{n/2} 2 alpha;
    // odd n: f = z prod(z^2 - a_j^2).  Checked by evaluation.
    Xoshiro256ss rng(53);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + static_cast<int>(rng.uniform(0, 8));
        WeightVector a(testsup::random_weights(rng, n, false));
        CharPolyFamily fam = build_family(a);
        ImagSpectrum is = imag_part_spectrum(a);
        for (int k = 0; k < 5; ++k) {
            double z = rng.uniform(-3.0, 3.0);
            double recon = (n % 2 == 1) ? z : 1.0;
            for (double al : is.alphas) recon *= (z * z - al * al);
            if (n % 2 == 0) recon += ((n / 2) % 2 == 0 ? 2.0 : -2.0) * fam.alpha;
            double lhs = poly::eval(fam.f, z);
            CHECK(std::abs(lhs - recon) < 1e-8 * (1.0 + poly::eval_abs(fam.f, z)));
        }
    }
}

TEST_CASE("build_family rejects tiny inputs") {
    CHECK_THROWS_AS(WeightVector(std::vector<double>{2.0}), validation_error);
}

TEST_CASE("phase reduction shifts the family angle") {
    // det(zI - 2 Re(e^{i theta} S(w))) for complex w equals the magnitude
    // family evaluated at theta + phase.
    Xoshiro256ss rng(59);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 2 + static_cast<int>(rng.uniform(0, 6));
        std::vector<std::complex<double>> w(n);
        for (auto& x : w)
            x = std::polar(rng.uniform(0.1, 2.0), rng.uniform(0.0, 2 * std::numbers::pi));
        PhaseReduction red = normalize_complex(w);
        CharPolyFamily fam = build_family(red.magnitudes);

        double theta = rng.uniform(0.0, 2 * std::numbers::pi);
        dense::HermMatrix m(n);
        const std::complex<double> e = std::polar(1.0, theta);
        for (int j = 0; j < n; ++j) {
            int k = (j + 1) % n;
            m.at(j, k) += e * w[j];
            m.at(k, j) += std::conj(e * w[j]);
        }
        for (int k = 0; k < 4; ++k) {
            double z = rng.uniform(-4.0, 4.0);
            std::complex<double> det = testsup::det_zi_minus(m, z);
            double expected =
                poly::eval(fam.f, z) - 2 * fam.alpha * std::cos(fam.n * (theta + red.phase));
            double scale = poly::eval_abs(fam.f, z) + 2 * fam.alpha + 1.0;
            CHECK(std::abs(det.imag()) < 1e-10 * scale);
            CHECK(std::abs(det.real() - expected) < 1e-10 * scale);
        }
    }
}
