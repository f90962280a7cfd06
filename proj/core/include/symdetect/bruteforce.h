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

#ifndef SYMDETECT_BRUTEFORCE_H
#define SYMDETECT_BRUTEFORCE_H

#include <cstddef>
#include <cstdint>
#include <vector>

#include "symdetect/numeric.h"
#include "symdetect/partition.h"
#include "symdetect/permutation.h"

namespace symdetect {

/// Dense exact element of C(S_n), coefficients indexed by permutation rank.
/// Deliberately naive; used as an independent oracle at small n.
class GroupAlgebraElement {
   public:
    static constexpr int kMaxN = 6;

    /// Zero element. Throws CapabilityError for n > kMaxN.
    explicit GroupAlgebraElement(int n);

    static GroupAlgebraElement identity(int n);
    static GroupAlgebraElement basis(const Permutation &sigma);
    /// T_mu, the sum of all permutations of cycle type mu.
    static GroupAlgebraElement class_sum(const Partition &mu);
    /// P_R = (d_R/n!) sum_sigma chi^R(sigma) sigma.
    static GroupAlgebraElement projector(const Partition &r);

    int n() const { return n_; }
    std::size_t dim() const { return coeffs_.size(); }
    const std::vector<Rational> &coefficients() const { return coeffs_; }
    const Rational &operator[](std::size_t rank) const { return coeffs_[rank]; }
    Rational &operator[](std::size_t rank) { return coeffs_[rank]; }
    bool is_zero() const;

    GroupAlgebraElement &operator+=(const GroupAlgebraElement &o);
    GroupAlgebraElement &operator-=(const GroupAlgebraElement &o);
    GroupAlgebraElement &operator*=(const Rational &s);
    friend GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement &b) { return a += b; }
    friend GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement &b) { return a -= b; }
    friend GroupAlgebraElement operator*(const Rational &s, GroupAlgebraElement a) { return a *= s; }
    friend bool operator==(const GroupAlgebraElement &, const GroupAlgebraElement &) = default;

   private:
    int n_;
    std::vector<Rational> coeffs_;
};

/// Convolution product. Throws std::invalid_argument on an n mismatch.
GroupAlgebraElement multiply(const GroupAlgebraElement &a, const GroupAlgebraElement &b);
/// S(sum c_i sigma_i) = sum c_i sigma_i^{-1}.
GroupAlgebraElement antipode(const GroupAlgebraElement &a);
/// Coefficient of the identity.
Rational delta(const GroupAlgebraElement &a);
/// g(a, b) = delta(conj(S(a)) b); coefficients are real here.
Rational g_pair(const GroupAlgebraElement &a, const GroupAlgebraElement &b);

/// Dense exact element of C(S_n) (x) C(S_n); pair (a, b) at index a * n! + b.
class TensorElement {
   public:
    static constexpr int kMaxN = 5;

    explicit TensorElement(int n);

    static TensorElement identity(int n);
    /// a (x) b.
    static TensorElement product(const GroupAlgebraElement &a, const GroupAlgebraElement &b);
    /// Coproduct sigma -> sigma (x) sigma, extended linearly.
    static TensorElement coproduct(const GroupAlgebraElement &a);

    int n() const { return n_; }
    std::size_t group_order() const { return order_; }
    const std::vector<Rational> &coefficients() const { return coeffs_; }
    const Rational &at(std::size_t a, std::size_t b) const { return coeffs_[a * order_ + b]; }
    Rational &at(std::size_t a, std::size_t b) { return coeffs_[a * order_ + b]; }
    bool is_zero() const;

    TensorElement &operator+=(const TensorElement &o);
    TensorElement &operator-=(const TensorElement &o);
    friend TensorElement operator+(TensorElement a, const TensorElement &b) { return a += b; }
    friend TensorElement operator-(TensorElement a, const TensorElement &b) { return a -= b; }
    friend bool operator==(const TensorElement &, const TensorElement &) = default;

   private:
    int n_;
    std::size_t order_;
    std::vector<Rational> coeffs_;
};

TensorElement multiply(const TensorElement &a, const TensorElement &b);
Rational delta(const TensorElement &a);
/// g on the tensor square: pairwise product of the single-factor pairings.
Rational g_pair(const TensorElement &a, const TensorElement &b);

/// Sum over the distinct pairs (g s1 g^-1, g s2 g^-1), g in S_n.
TensorElement diagonal_orbit_sum(const Permutation &s1, const Permutation &s2);
/// Sum over the distinct g sigma g^-1 with g in S_m x S_n inside S_{m+n}.
GroupAlgebraElement subgroup_orbit_sum(const Permutation &sigma, int m, int n);

/// Number of diagonal conjugation orbits on S_n x S_n, by enumeration.
std::int64_t count_diagonal_orbits(int n);
/// Number of S_m x S_n conjugation orbits on S_{m+n}, by enumeration.
std::int64_t count_subgroup_orbits(int m, int n);

}  // namespace symdetect

#endif  // SYMDETECT_BRUTEFORCE_H
