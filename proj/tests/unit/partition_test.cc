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

#include <numeric>
#include <set>
#include <stdexcept>

#include "oracles.h"
#include "symdetect/partition.h"
#include "symdetect/permutation.h"

namespace symdetect {
namespace {

TEST(Partition, ParseRoundTrip) {
    Partition p = Partition::parse("3,2,1");
    EXPECT_EQ(p.parts(), (std::vector<int>{3, 2, 1}));
    EXPECT_EQ(p.weight(), 6);
    EXPECT_EQ(p.to_string(), "3,2,1");
    EXPECT_TRUE(Partition::parse("").empty());
}

TEST(Partition, ParseRejectsMalformedAndNamesToken) {
    for (const char *bad : {"3,x,1", "2,3", "3,0", "-1", "3,,1", "3,2,"}) {
        EXPECT_THROW(Partition::parse(bad), std::invalid_argument) << bad;
    }
    try {
        Partition::parse("4,abc");
        FAIL();
    } catch (const std::invalid_argument &e) {
        EXPECT_NE(std::string(e.what()).find("abc"), std::string::npos);
    }
}

TEST(Partition, CountsMatchPentagonalRecurrence) {
    for (int n = 0; n <= 30; ++n) EXPECT_EQ(BigInt(partitions(n).size()), oracle::partition_count(n)) << n;
}

TEST(Partition, CanonicalOrderIsReverseLexicographic) {
    const auto &ps = partitions(6);
    EXPECT_EQ(ps.front(), Partition({6}));
    EXPECT_EQ(ps.back(), Partition({1, 1, 1, 1, 1, 1}));
    for (std::size_t i = 1; i < ps.size(); ++i) EXPECT_GT(ps[i - 1], ps[i]);
    for (std::size_t i = 0; i < ps.size(); ++i) EXPECT_EQ(partition_index(ps[i]), i);
}

TEST(Partition, ConjugateIsInvolution) {
    for (int n = 0; n <= 12; ++n) {
        for (const auto &p : partitions(n)) {
            EXPECT_EQ(p.conjugate().conjugate(), p);
            EXPECT_EQ(p.conjugate().weight(), n);
        }
    }
    EXPECT_EQ(Partition({4, 2, 1}).conjugate(), Partition({3, 2, 1, 1}));
}

TEST(Partition, ClassSizesSumToFactorial) {
    for (int n = 1; n <= 14; ++n) {
        BigInt s = 0;
        for (const auto &mu : partitions(n)) s += class_size(mu);
        EXPECT_EQ(s, factorial(n));
    }
    EXPECT_EQ(centralizer_order(Partition({2, 2, 1})), 8);
    EXPECT_EQ(class_size(cycle_class(6, 2)), 15);
    EXPECT_EQ(sign(cycle_class(5, 3)), 1);
    EXPECT_EQ(sign(cycle_class(5, 2)), -1);
}

TEST(Partition, Concatenate) {
    EXPECT_EQ(concatenate(Partition({2, 1}), Partition({3, 1})), Partition({3, 2, 1, 1}));
}

TEST(Permutation, RankUnrankAndGroupTables) {
    for (int n = 1; n <= 6; ++n) {
        const auto &g = SymmetricGroup::get(n);
        ASSERT_EQ(BigInt(g.order()), factorial(n));
        std::set<std::size_t> classes;
        for (std::size_t r = 0; r < g.order(); ++r) {
            EXPECT_EQ(Permutation::unrank(n, r).rank(), r);
            EXPECT_TRUE((g.element(r) * g.element(g.inverse(r))).is_identity());
            EXPECT_EQ(partitions(n)[g.class_of(r)], g.element(r).cycle_type());
        }
        for (std::size_t c = 0; c < partitions(n).size(); ++c) {
            EXPECT_EQ(BigInt(g.class_members(c).size()), class_size(partitions(n)[c]));
        }
    }
}

TEST(Permutation, MultiplicationIsComposition) {
    const auto &g = SymmetricGroup::get(5);
    for (std::size_t a = 0; a < g.order(); a += 7) {
        for (std::size_t b = 0; b < g.order(); b += 11) {
            Permutation ab = g.element(a) * g.element(b);
            for (int i = 0; i < 5; ++i) EXPECT_EQ(ab(i), g.element(a)(g.element(b)(i)));
            EXPECT_EQ(g.multiply(a, b), ab.rank());
        }
    }
}

TEST(Permutation, CycleAndDirectSum) {
    Permutation c = Permutation::cycle(5, {0, 2, 4});
    EXPECT_EQ(c.cycle_type(), Partition({3, 1, 1}));
    Permutation d = Permutation::direct_sum(Permutation::cycle(2, {0, 1}), Permutation::cycle(3, {0, 1, 2}));
    EXPECT_EQ(d.cycle_type(), Partition({3, 2}));
    EXPECT_THROW(Permutation(std::vector<int>{0, 0}), std::invalid_argument);
}

}  // namespace
}  // namespace symdetect
