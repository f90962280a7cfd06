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

#ifndef SYMDETECT_CENTRE_H
#define SYMDETECT_CENTRE_H

#include <complex>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "symdetect/characters.h"
#include "symdetect/numeric.h"
#include "symdetect/partition.h"

namespace symdetect {

/// |T_k| = n!/(k (n-k)!).
BigInt cycle_class_size(int n, int k);

/// |C_mu| chi^R(mu) / d_R. Throws ConsistencyError if the division is inexact.
BigInt normalized_character(const Partition &r, const Partition &mu);
/// Same for mu = [k, 1^{n-k}] (fast path through border strips of length k).
BigInt normalized_character(const Partition &r, int k);

/// Sum of (column - row) over the boxes of r.
std::int64_t content_sum(const Partition &r);

/// Maximum of normalized_character(R, k) over R |- n, found by scanning.
/// Throws ConsistencyError if it differs from |T_k|.
BigInt chi_max(int n, int k);

struct Signature {
    Partition label;
    std::vector<BigInt> values;  // entry i is the eigenvalue of T_{i+2}
};

Signature signature(const Partition &r, int max_k);

struct SignatureHash {
    std::size_t operator()(const std::vector<BigInt> &v) const;
};

/// Signatures (T_2, ..., T_K) of every R |- n. Collisions are recorded rather
/// than thrown so that k_star can probe increasing K.
class SignatureTable {
   public:
    SignatureTable(int n, int max_k);

    int n() const { return n_; }
    int max_k() const { return max_k_; }
    const std::vector<Signature> &rows() const { return rows_; }
    bool collision_free() const { return collisions_.empty(); }
    /// Groups of two or more partitions sharing a signature.
    const std::vector<std::vector<Partition>> &collisions() const { return collisions_; }
    std::string collision_report() const;
    /// The unique partition with this signature, if any.
    std::optional<Partition> lookup(const std::vector<BigInt> &values) const;
    /// Whether some R has this value at T_k.
    bool in_column(int k, const BigInt &value) const;

    std::string to_csv() const;

   private:
    int n_;
    int max_k_;
    std::vector<Signature> rows_;
    std::unordered_map<std::vector<BigInt>, std::size_t, SignatureHash> index_;
    std::vector<std::vector<Partition>> collisions_;
};

/// Minimal K with a collision-free signature table (memoized).
int k_star(int n);
/// Collision-free table at K = k_star(n), shared across callers.
const SignatureTable &detection_table(int n);

struct KStarRow {
    int n;
    int k_star;
    double growth;  // n^{1/4} / log n
};
std::vector<KStarRow> k_star_growth_report(int n_max, int n_min = 2);
std::string k_star_report_json(const std::vector<KStarRow> &rows);

/// (C_mu)_nu^lambda with T_mu T_nu = sum_lambda C T_lambda. Rows nu, columns
/// lambda, both in partitions(n) order. Computed from characters.
struct StructureConstants {
    Partition mu;
    std::vector<std::vector<BigInt>> entries;
};
StructureConstants structure_constants(int n, const Partition &mu);

/// Class-sum coefficients c_mu from projector coefficients a_R:
/// c_mu = sum_R a_R d_R chi^R(mu) / n!.
template <typename T>
std::vector<T> projector_to_class_basis(const CharacterTable &table, const std::vector<T> &a);
/// a_R = sum_mu c_mu |C_mu| chi^R(mu) / d_R.
template <typename T>
std::vector<T> class_to_projector_basis(const CharacterTable &table, const std::vector<T> &c);

/// An element of Z(C(S_n)) stored by its coefficients in the projector basis
/// {P_R}. Exact rational coefficients are kept when available.
class CentreState {
   public:
    static CentreState projector(const Partition &r);
    static CentreState from_projector_coefficients(int n, std::vector<Rational> a);
    static CentreState from_projector_coefficients(int n, std::vector<std::complex<double>> a);
    static CentreState from_class_coefficients(int n, const std::vector<Rational> &c);
    static CentreState from_class_coefficients(int n, const std::vector<std::complex<double>> &c);

    int n() const { return n_; }
    const std::vector<Partition> &basis() const { return partitions(n_); }
    bool is_exact() const { return exact_.has_value(); }
    const std::vector<Rational> &exact_projector_coefficients() const;
    const std::vector<std::complex<double>> &projector_coefficients() const { return amps_; }
    std::vector<std::complex<double>> class_coefficients() const;
    std::optional<std::vector<Rational>> exact_class_coefficients() const;
    /// Coefficients in the g-orthonormal basis P_R / |P_R|.
    std::vector<std::complex<double>> orthonormal_coefficients() const;

    CentreState scaled(std::complex<double> s) const;
    double g_norm() const;

   private:
    CentreState(int n, std::optional<std::vector<Rational>> exact, std::vector<std::complex<double>> amps);
    int n_;
    std::optional<std::vector<Rational>> exact_;
    std::vector<std::complex<double>> amps_;
};

/// g(a, b) from projector coefficients: sum_R conj(a_R) b_R d_R^2 / n!.
std::complex<double> g_inner(const CentreState &a, const CentreState &b);
/// g(a, b) from class-sum coefficients: sum_mu |C_mu| conj(c_mu) c'_mu.
std::complex<double> g_inner_class_basis(const CentreState &a, const CentreState &b);
/// Exact g(a, b); both states must be exact.
Rational g_inner_exact(const CentreState &a, const CentreState &b);

}  // namespace symdetect

#endif  // SYMDETECT_CENTRE_H
