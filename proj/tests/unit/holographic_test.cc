// Copyright 2026 The symdetect Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.h"
#include "symdetect/centre.h"
#include "symdetect/errors.h"
#include "symdetect/holographic.h"

namespace symdetect {
namespace {

using Poly = std::vector<Rational>;

// Legendre monomial coefficients from Bonnet's recurrence, exact.
std::vector<Poly> legendre_polys(int lambda) {
    std::vector<Poly> p = {{Rational(1)}, {Rational(0), Rational(1)}};
    for (int k = 1; k < lambda; ++k) {
        Poly next(k + 2, Rational(0));
        for (int i = 0; i <= k; ++i) next[i + 1] += Rational(2 * k + 1, k + 1) * p[k][i];
        for (int i = 0; i < k; ++i) next[i] -= Rational(k, k + 1) * p[k - 1][i];
        p.push_back(std::move(next));
    }
    p.resize(lambda + 1);
    return p;
}

TEST(Holographic, FermionMap) {
    FermionConfig f = FermionConfig::from_diagram(Partition({2, 1}), 3);
    EXPECT_EQ(f.energies, (std::vector<std::int64_t>{0, 2, 4}));
    FermionConfig g = FermionConfig::from_diagram(Partition(), 4);
    EXPECT_EQ(g.energies, (std::vector<std::int64_t>{0, 1, 2, 3}));
    EXPECT_THROW(FermionConfig::from_diagram(Partition({1, 1, 1}), 2), std::invalid_argument);
    EXPECT_THROW(FermionConfig::from_energies({0, 2, 2}), std::invalid_argument);
}

TEST(Holographic, CasimirPolynomial) {
    for (std::int64_t f = 0; f <= 10; ++f) {
        EXPECT_EQ(a_poly(0, f), 1);
        EXPECT_EQ(a_poly(1, f), 1 + 2 * f);
        for (int l = 0; l <= 8; ++l) EXPECT_EQ(a_poly(l, f), factorial(l) * oracle::delannoy(l, static_cast<int>(f)));
    }
    EXPECT_EQ(a_poly(2, 0), 2);
}

TEST(Holographic, JacobiMonomialCoefficientsMatchRecurrence) {
    const int lambda = 16;
    JacobiCoeffTable t = jacobi_coeffs(lambda);
    auto ref = legendre_polys(lambda);
    for (int l = 0; l <= lambda; ++l) {
        for (int k = 0; k <= l; ++k) {
            Rational expect = k < static_cast<int>(ref[l].size()) ? ref[l][k] : Rational(0);
            EXPECT_EQ(t.p[l][k], expect) << "l=" << l << " k=" << k;
        }
        Rational at_one = 0;
        for (const auto &c : t.p[l]) at_one += c;
        EXPECT_EQ(at_one, 1);
    }
}

TEST(Holographic, FourierCoefficientsDiagonalAndSymmetry) {
    const int lambda = 16;
    JacobiCoeffTable t = jacobi_coeffs(lambda);
    for (int l = 0; l <= lambda; ++l) {
        Rational diag(factorial(2 * l), (BigInt(1) << (2 * l)) * factorial(l) * factorial(l));
        EXPECT_EQ(t.ptilde[l][l], diag) << l;
        for (int m = -l; m <= l; ++m) {
            EXPECT_EQ(t.ptilde_at(l, m), t.ptilde_at(l, -m));
            if ((l - m) % 2 != 0) EXPECT_EQ(t.ptilde_at(l, m), 0);
        }
        EXPECT_EQ(t.ptilde_at(l, l + 1), 0);
    }
    EXPECT_EQ(t.ptilde[2][2], Rational(3, 8));
}

TEST(Holographic, FourierCoefficientsMatchQuadrature) {
    JacobiCoeffTable t = jacobi_coeffs(10);
    for (int l = 0; l <= 10; ++l) {
        for (int m = 0; m <= l; ++m) {
            EXPECT_NEAR(to_double(t.ptilde[l][m]), oracle::legendre_fourier_coefficient(l, m), 1e-12);
        }
    }
}

TEST(Holographic, FourierSeriesReproducesLegendre) {
    JacobiCoeffTable t = jacobi_coeffs(6);
    const double theta = std::numbers::pi / 7;
    for (int l = 0; l <= 6; ++l) {
        std::complex<double> s = 0;
        for (int m = -l; m <= l; ++m) s += to_double(t.ptilde_at(l, m)) * std::polar(1.0, 2.0 * theta * m);
        EXPECT_NEAR(s.real(), legendre(l, std::cos(2 * theta)), 1e-9);
        EXPECT_NEAR(s.imag(), 0.0, 1e-12);
    }
}

TEST(Holographic, LegendreAndHypergeometric) {
    for (int l = 0; l <= 20; ++l) {
        for (double x = -1.0; x <= 1.0; x += 0.125) EXPECT_NEAR(legendre(l, x), oracle::legendre_explicit(l, x), 1e-10);
    }
    // The terminating series alternates with terms near C(2l,l), so by l = 10 a few digits cancel.
    for (int l = 0; l <= 10; ++l) {
        for (int j = 0; j <= 12; ++j) {
            double theta = std::numbers::pi * j / 12;
            double s = std::sin(theta);
            EXPECT_NEAR(hypergeometric_2f1_legendre(l, s * s), legendre(l, std::cos(2 * theta)), 1e-9);
        }
    }
}

TEST(Holographic, ProfileBasics) {
    GeometryProfile ground = u_profile(FermionConfig::from_energies({0}), 1.0, 0);
    ASSERT_EQ(ground.samples.size(), 1u);
    EXPECT_NEAR(ground.samples[0], 1.0, 1e-15);

    std::vector<BigInt> a = {3, 12, 66, 470};
    std::vector<BigInt> a2;
    for (const auto &x : a) a2.push_back(2 * x);
    GeometryProfile p1 = u_profile(a, 1.3, 3), p2 = u_profile(a2, 1.3, 3);
    ASSERT_EQ(p1.samples.size(), 7u);
    for (std::size_t j = 0; j < p1.samples.size(); ++j) EXPECT_NEAR(p2.samples[j], 2 * p1.samples[j], 1e-9);
    EXPECT_EQ(u_profile(a, 1.0, 3, true).samples.size(), 8u);
    EXPECT_THROW(u_profile(a, 1.0, 4), std::invalid_argument);
    EXPECT_THROW(u_profile(a, 0.0, 3), std::invalid_argument);
}

GeometryProfile synthetic(int lambda, int len, const std::function<double(double)> &fn) {
    GeometryProfile p;
    p.lambda = lambda;
    for (int j = 0; j < len; ++j) {
        double theta = std::numbers::pi * j / len;
        p.theta.push_back(theta);
        p.samples.push_back(fn(theta));
    }
    return p;
}

TEST(Holographic, DftOfSimpleProfiles) {
    auto constant = dft_extract(synthetic(3, 7, [](double) { return 2.5; }));
    EXPECT_NEAR(constant.coefficients[0], 2.5, 1e-12);
    for (int m = 1; m <= 3; ++m) EXPECT_NEAR(constant.coefficients[m], 0.0, 1e-12);

    for (int lambda = 1; lambda <= 6; ++lambda) {
        auto cosine = dft_extract(synthetic(lambda, 2 * lambda + 1, [](double th) { return 2 * std::cos(2 * th); }));
        EXPECT_NEAR(cosine.coefficients[1], 1.0, 1e-12);
        EXPECT_NEAR(cosine.coefficients[0], 0.0, 1e-12);
        EXPECT_LT(cosine.max_imaginary, 1e-12);
    }
}

TEST(Holographic, DftRejectsShortOrOffGridProfiles) {
    EXPECT_THROW(dft_extract(synthetic(3, 4, [](double) { return 1.0; })), std::invalid_argument);
    GeometryProfile p = synthetic(2, 5, [](double) { return 1.0; });
    p.theta[2] += 0.01;
    EXPECT_THROW(dft_extract(p), std::invalid_argument);
    EXPECT_THROW(dft_extract(synthetic(2, 5, [](double) { return 1.0; }), TransformPath::kFft), std::invalid_argument);
}

TEST(Holographic, FftAgreesWithDirectDft) {
    std::mt19937_64 rng(8);
    std::normal_distribution<double> nd;
    for (std::size_t len : {8u, 16u, 32u, 64u}) {
        std::vector<std::complex<double>> a(len);
        for (auto &x : a) x = {nd(rng), nd(rng)};
        auto b = a;
        OpCount fo, dop;
        fft_radix2(a, fo);
        direct_dft(b, dop);
        for (std::size_t i = 0; i < len; ++i) EXPECT_LT(std::abs(a[i] - b[i]), 1e-10);
        EXPECT_EQ(dop.complex_mults, static_cast<std::int64_t>(len * len));
        EXPECT_EQ(fo.butterflies, static_cast<std::int64_t>(len / 2 * std::log2(len)));
    }
    std::vector<std::complex<double>> bad(6);
    OpCount ops;
    EXPECT_THROW(fft_radix2(bad, ops), std::invalid_argument);
}

TEST(Holographic, FftOperationCountScalesAsLLogL) {
    for (int len = 8; len <= 1024; len *= 2) {
        std::vector<std::complex<double>> a(len, 1.0);
        OpCount ops;
        fft_radix2(a, ops);
        double ratio = static_cast<double>(ops.butterflies) / (len * std::log2(len));
        EXPECT_LE(ratio, 0.5 + 1e-12);
    }
}

// Rank of the sample matrix S[j][l] = P_l(cos 2 theta_j).
int sample_rank(int lambda, int len) {
    std::vector<std::vector<double>> s(len, std::vector<double>(lambda + 1));
    for (int j = 0; j < len; ++j) {
        double x = std::cos(2 * std::numbers::pi * j / len);
        for (int l = 0; l <= lambda; ++l) s[j][l] = legendre(l, x);
    }
    int rank = 0;
    for (int col = 0; col <= lambda && rank < len; ++col) {
        int piv = rank;
        for (int r = rank; r < len; ++r) {
            if (std::abs(s[r][col]) > std::abs(s[piv][col])) piv = r;
        }
        if (std::abs(s[piv][col]) < 1e-9) continue;
        std::swap(s[piv], s[rank]);
        for (int r = rank + 1; r < len; ++r) {
            double f = s[r][col] / s[rank][col];
            for (int c = col; c <= lambda; ++c) s[r][c] -= f * s[rank][c];
        }
        ++rank;
    }
    return rank;
}

// Lambda + 1 samples on theta_j = pi j/(Lambda+1) see cos 2theta_j twice for
// j and Lambda+1-j, so they cannot determine Lambda+1 coefficients; 2 Lambda + 1
// samples can.
TEST(Holographic, ShortGridIsRankDeficient) {
    for (int lambda = 2; lambda <= 12; ++lambda) {
        EXPECT_LT(sample_rank(lambda, lambda + 1), lambda + 1) << lambda;
        EXPECT_EQ(sample_rank(lambda, 2 * lambda + 1), lambda + 1) << lambda;
    }
}

TEST(Holographic, SolveSingleCoefficient) {
    JacobiCoeffTable t = jacobi_coeffs(0);
    USolve s = solve_U({4.0}, t, 1.0);
    EXPECT_DOUBLE_EQ(s.U[0], 4.0);
    EXPECT_EQ(s.a[0], 4);
    EXPECT_THROW(solve_U({std::nan("")}, t, 1.0), NumericalError);
}

TEST(Holographic, RoundTripAllDiagrams) {
    for (int n = 1; n <= 8; ++n) {
        for (const auto &r : partitions(n)) {
            for (double rho : {1.0, 2.0}) {
                RoundTrip rt = holographic_roundtrip(r, n + 1, -1, rho);
                EXPECT_EQ(rt.recovered, r);
                EXPECT_LT(rt.a_residual, 1e-6);
                EXPECT_LT(rt.fft_dft_gap, 1e-10);
                FermionConfig f = FermionConfig::from_diagram(r, n + 1);
                EXPECT_EQ(rt.a, casimir_sums(f, rt.lambda));
            }
        }
    }
}

TEST(Holographic, MomentsOfSmallConfig) {
    auto m = moments_from_casimirs(casimir_sums(FermionConfig::from_energies({0, 2, 4}), 2));
    EXPECT_EQ(m, (std::vector<BigInt>{3, 6, 20}));
    for (int N = 1; N <= 8; ++N) {
        FermionConfig g = FermionConfig::from_diagram(Partition(), N);
        auto mg = moments_from_casimirs(casimir_sums(g, 1));
        EXPECT_EQ(mg[0], N);
        EXPECT_EQ(mg[1], N * (N - 1) / 2);
    }
}

TEST(Holographic, CasimirMomentBijection) {
    std::mt19937_64 rng(12);
    std::uniform_int_distribution<int> size(1, 8), gap(1, 5);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<std::int64_t> e;
        std::int64_t v = gap(rng) - 1;
        for (int i = size(rng); i > 0; --i) e.push_back(v), v += gap(rng);
        FermionConfig f = FermionConfig::from_energies(e);
        const int lambda = 8;
        auto a = casimir_sums(f, lambda);
        auto m = moments_from_casimirs(a);
        for (int k = 0; k <= lambda; ++k) EXPECT_EQ(m[k], oracle::direct_power_sum(e, k));
        EXPECT_EQ(m, power_sums(f, lambda));
        EXPECT_EQ(casimirs_from_moments(m), a);
    }
}

TEST(Holographic, StirlingSystemIsUnitriangularUpToScale) {
    auto c = stirling_system(6);
    for (int l = 0; l <= 6; ++l) {
        EXPECT_EQ(c[l][l], BigInt(1) << l);
        for (int k = l + 1; k <= 6; ++k) EXPECT_EQ(c[l][k], 0);
    }
}

TEST(Holographic, MomentCutoff) {
    EXPECT_EQ(moment_cutoff(1, 2), 1);
    EXPECT_EQ(moment_cutoff(2, 3), 2);
    EXPECT_EQ(moment_cutoff(6, 7), 3);
    EXPECT_THROW(moment_cutoff(3, 3), std::invalid_argument);
    // The cutoff at N = n+1 next to k*; they are compared, not assumed equal.
    for (int n = 2; n <= 10; ++n) EXPECT_GE(moment_cutoff(n, n + 1), 1);
}

TEST(Holographic, RecoverAllSixBoxDiagrams) {
    const int n = 6, N = 7;
    const int lambda = moment_cutoff(n, N);
    for (const auto &r : partitions(n)) {
        auto m = power_sums(FermionConfig::from_diagram(r, N), lambda);
        EXPECT_EQ(recover_diagram(m, n, N), r);
    }
    auto ground = power_sums(FermionConfig::from_diagram(Partition(), 3), 2);
    EXPECT_EQ(recover_diagram(ground, 0, 3), Partition());
    std::vector<BigInt> junk = {7, 1, 1, 1};
    EXPECT_THROW(recover_diagram(junk, n, N), DetectionError);
}

TEST(Holographic, ComplexityCases) {
    HolographicCost c0 = holographic_complexity_report(64, 0.0);
    EXPECT_EQ(c0.case_number, 1);
    EXPECT_EQ(c0.dominant, "solve");
    EXPECT_DOUBLE_EQ(c0.exponent, 2.0);
    HolographicCost c2 = holographic_complexity_report(64, 2.0);
    EXPECT_EQ(c2.case_number, 2);
    EXPECT_EQ(c2.dominant, "measurement");
    EXPECT_DOUBLE_EQ(c2.exponent, 3.0);
    EXPECT_EQ(c0.solve_ops, 65 * 66 / 2);
}

TEST(Holographic, ProfileCsv) {
    GeometryProfile p = u_profile(std::vector<BigInt>{1}, 1.0, 0);
    EXPECT_EQ(profile_to_csv(p), "theta,u\n0,1\n");
}

}  // namespace
}  // namespace symdetect
