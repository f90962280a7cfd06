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

#include <map>

#include "oracles.h"
#include "symdetect/bruteforce.h"
#include "symdetect/centre.h"

namespace symdetect {
namespace {

TEST(Centre, CycleClassSize) {
    EXPECT_EQ(cycle_class_size(6, 2), 15);
    EXPECT_EQ(cycle_class_size(6, 3), 40);
    EXPECT_EQ(cycle_class_size(6, 6), 120);
}

TEST(Centre, TranspositionEigenvalueIsContentSum) {
    for (int n = 2; n <= 15; ++n) {
        for (const auto &r : partitions(n)) {
            EXPECT_EQ(normalized_character(r, 2), BigInt(content_sum(r))) << r.to_string();
        }
    }
}

TEST(Centre, SixBoxTranspositionValues) {
    const std::map<std::string, int> expect = {
        {"6", 15},     {"5,1", 9},       {"4,2", 5},       {"4,1,1", 3},       {"3,3", 3},          {"3,2,1", 0},
        {"3,1,1,1", -3}, {"2,2,2", -3}, {"2,2,1,1", -5}, {"2,1,1,1,1", -9}, {"1,1,1,1,1,1", -15},
    };
    for (const auto &[label, value] : expect) {
        EXPECT_EQ(normalized_character(Partition::parse(label), 2), value) << label;
    }
}

TEST(Centre, FastCycleEigenvalueMatchesGeneralFormulaAndOracle) {
    for (int n = 2; n <= 10; ++n) {
        for (const auto &r : partitions(n)) {
            for (int k = 2; k <= n; ++k) {
                BigInt fast = normalized_character(r, k);
                EXPECT_EQ(fast, normalized_character(r, cycle_class(n, k)));
                BigInt expect = cycle_class_size(n, k) * oracle::cycle_character(r, k) / oracle::syt_count(r);
                EXPECT_EQ(fast, expect) << r.to_string() << " k=" << k;
            }
        }
    }
}

TEST(Centre, ChiMaxBoundsEveryEigenvalue) {
    for (int n = 2; n <= 12; ++n) {
        for (int k = 2; k <= n; ++k) {
            BigInt m = chi_max(n, k);
            EXPECT_EQ(m, cycle_class_size(n, k));
            for (const auto &r : partitions(n)) EXPECT_LE(abs(normalized_character(r, k)), m);
        }
    }
}

TEST(Centre, KStarMatchesIndependentOracle) {
    for (int n = 2; n <= 20; ++n) EXPECT_EQ(k_star(n), oracle::k_star(n)) << n;
}

TEST(Centre, KStarAtTwentyFourTwentyFiveAndTwentyNine) {
    EXPECT_EQ(k_star(24), 5);
    EXPECT_EQ(oracle::k_star(24), 5);
    EXPECT_EQ(k_star(25), 4);
    EXPECT_EQ(oracle::k_star(25), 4);
    // Both routes agree on 4 here.
    EXPECT_EQ(k_star(29), 4);
    EXPECT_EQ(oracle::k_star(29), 4);
}

TEST(Centre, SixBoxCollisionAtTwo) {
    SignatureTable t(6, 2);
    EXPECT_FALSE(t.collision_free());
    // The pairs sharing a T_2 eigenvalue.
    std::vector<std::vector<Partition>> expect = {
        {Partition({4, 1, 1}), Partition({3, 3})},
        {Partition({3, 1, 1, 1}), Partition({2, 2, 2})},
    };
    EXPECT_EQ(t.collisions(), expect);
    EXPECT_NE(t.collision_report().find("[4,1,1] [3,3]"), std::string::npos);
    EXPECT_TRUE(SignatureTable(6, 3).collision_free());
}

TEST(Centre, SignatureLookupAndCsv) {
    const SignatureTable &t = detection_table(6);
    EXPECT_EQ(t.max_k(), 3);
    auto hit = t.lookup({BigInt(3), BigInt(-8)});
    ASSERT_TRUE(hit.has_value());
    EXPECT_EQ(*hit, Partition({3, 3}));
    EXPECT_FALSE(t.lookup({BigInt(1), BigInt(1)}).has_value());
    EXPECT_TRUE(t.in_column(2, BigInt(-15)));
    EXPECT_FALSE(t.in_column(2, BigInt(1)));
    std::string csv = t.to_csv();
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "partition,T2,T3");
    EXPECT_NE(csv.find("\"3,3\",3,-8"), std::string::npos);
}

TEST(Centre, KStarReportJson) {
    auto rows = k_star_growth_report(8);
    ASSERT_EQ(rows.size(), 7u);
    EXPECT_EQ(rows.front().n, 2);
    std::string j = k_star_report_json(rows);
    EXPECT_NE(j.find("\"schema\": \"1\""), std::string::npos);
    EXPECT_NE(j.find("\"k_star\": 3"), std::string::npos);
}

// Structure constants from character sums against direct convolution of
// class sums.
TEST(Centre, StructureConstantsMatchConvolution) {
    for (int n = 2; n <= 5; ++n) {
        const auto &labels = partitions(n);
        const auto &g = SymmetricGroup::get(n);
        for (const auto &mu : labels) {
            StructureConstants sc = structure_constants(n, mu);
            GroupAlgebraElement tm = GroupAlgebraElement::class_sum(mu);
            for (std::size_t nu = 0; nu < labels.size(); ++nu) {
                GroupAlgebraElement prod = multiply(tm, GroupAlgebraElement::class_sum(labels[nu]));
                for (std::size_t la = 0; la < labels.size(); ++la) {
                    std::size_t rep = g.class_members(la).front();
                    EXPECT_EQ(Rational(sc.entries[nu][la]), prod[rep]);
                }
            }
        }
    }
}

// tr(M^p) of the class-basis multiplication matrix equals the p-th power sum
// of the eigenvalues, for p up to the number of classes. By Newton's
// identities this pins the spectrum as a multiset.
TEST(Centre, PowerTracesPinTheSpectrum) {
    for (int n = 2; n <= 7; ++n) {
        const auto &labels = partitions(n);
        const std::size_t p = labels.size();
        for (int k = 2; k <= n; ++k) {
            StructureConstants sc = structure_constants(n, cycle_class(n, k));
            std::vector<std::vector<BigInt>> m(p, std::vector<BigInt>(p));
            for (std::size_t nu = 0; nu < p; ++nu) {
                for (std::size_t la = 0; la < p; ++la) m[la][nu] = sc.entries[nu][la];
            }
            auto power = m;
            for (std::size_t e = 1; e <= p; ++e) {
                BigInt trace = 0;
                for (std::size_t i = 0; i < p; ++i) trace += power[i][i];
                BigInt sum = 0;
                for (const auto &r : labels) sum += pow(normalized_character(r, k), static_cast<unsigned>(e));
                EXPECT_EQ(trace, sum) << "n=" << n << " k=" << k << " p=" << e;
                std::vector<std::vector<BigInt>> next(p, std::vector<BigInt>(p, BigInt(0)));
                for (std::size_t i = 0; i < p; ++i)
                    for (std::size_t j = 0; j < p; ++j)
                        for (std::size_t l = 0; l < p; ++l) next[i][j] += power[i][l] * m[l][j];
                power = std::move(next);
            }
        }
    }
}

TEST(Centre, BasisConversionRoundTrip) {
    CharacterTable t(6);
    std::vector<Rational> a(t.size());
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = Rational(static_cast<int>(i) - 3, static_cast<int>(i) + 2);
    auto c = projector_to_class_basis(t, a);
    EXPECT_EQ(class_to_projector_basis(t, c), a);
}

TEST(Centre, ProjectorStatesAreGOrthogonal) {
    const int n = 5;
    for (const auto &r : partitions(n)) {
        for (const auto &s : partitions(n)) {
            Rational g = g_inner_exact(CentreState::projector(r), CentreState::projector(s));
            Rational expect = r == s ? Rational(dimension(r) * dimension(r), factorial(n)) : Rational(0);
            EXPECT_EQ(g, expect);
        }
    }
}

TEST(Centre, GInnerAgreesAcrossBases) {
    const int n = 6;
    std::vector<std::complex<double>> a, b;
    for (std::size_t i = 0; i < partitions(n).size(); ++i) {
        a.emplace_back(0.1 * i, 0.3 - 0.05 * i);
        b.emplace_back(1.0 / (i + 1), 0.2 * i);
    }
    auto sa = CentreState::from_projector_coefficients(n, a);
    auto sb = CentreState::from_projector_coefficients(n, b);
    auto x = g_inner(sa, sb), y = g_inner_class_basis(sa, sb);
    EXPECT_NEAR(x.real(), y.real(), 1e-9);
    EXPECT_NEAR(x.imag(), y.imag(), 1e-9);
}

TEST(Centre, ClassCoefficientsOfProjector) {
    // P_[n] = (1/n!) sum_sigma sigma.
    auto c = CentreState::projector(Partition({4})).exact_class_coefficients();
    ASSERT_TRUE(c.has_value());
    for (const auto &x : *c) EXPECT_EQ(x, Rational(1, 24));
}

}  // namespace
}  // namespace symdetect
