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

#ifndef SYMDETECT_PERMUTATION_H
#define SYMDETECT_PERMUTATION_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "symdetect/partition.h"

namespace symdetect {

/// A permutation of {0, ..., n-1} in one-line notation: image()[i] = sigma(i).
class Permutation {
   public:
    Permutation() = default;
    /// Throws std::invalid_argument if image is not a bijection of {0..n-1}.
    explicit Permutation(std::vector<int> image);

    static Permutation identity(int n);
    /// The cycle (c_0 c_1 ... c_{r-1}) inside S_n.
    static Permutation cycle(int n, const std::vector<int> &points);
    /// Permutation with the given lexicographic rank in S_n.
    static Permutation unrank(int n, std::uint64_t rank);

    int size() const { return static_cast<int>(image_.size()); }
    int operator()(int i) const { return image_[i]; }
    const std::vector<int> &image() const { return image_; }

    /// (a * b)(i) = a(b(i)).
    Permutation operator*(const Permutation &b) const;
    Permutation inverse() const;
    Partition cycle_type() const;
    bool is_identity() const;
    /// Lexicographic rank in [0, n!).
    std::uint64_t rank() const;
    /// Places sigma in S_{m+n} acting on the last n points: i -> m + sigma(i).
    Permutation shifted(int offset, int total) const;
    /// Disjoint product a in S_m (first m points) and b in S_n (last n points).
    static Permutation direct_sum(const Permutation &a, const Permutation &b);

    std::string to_string() const;

    friend bool operator==(const Permutation &, const Permutation &) = default;

   private:
    std::vector<int> image_;
};

/// Dense tables for S_n with elements indexed by lexicographic rank.
/// Capped at n <= 8 (40320 elements); the multiplication table is only built
/// for n <= 6.
class SymmetricGroup {
   public:
    static const SymmetricGroup &get(int n);

    int n() const { return n_; }
    std::size_t order() const { return elements_.size(); }
    const Permutation &element(std::size_t rank) const { return elements_[rank]; }
    std::size_t inverse(std::size_t r) const { return inverse_[r]; }
    /// Index of the element's cycle type in partitions(n).
    std::size_t class_of(std::size_t r) const { return class_of_[r]; }
    /// Ranks of the members of class c (c indexes partitions(n)).
    const std::vector<std::uint32_t> &class_members(std::size_t c) const { return members_[c]; }
    bool has_multiplication_table() const { return !mul_.empty(); }
    /// rank(a * b); uses the table when present.
    std::size_t multiply(std::size_t a, std::size_t b) const;

   private:
    explicit SymmetricGroup(int n);
    int n_;
    std::vector<Permutation> elements_;
    std::vector<std::uint32_t> inverse_;
    std::vector<std::uint32_t> class_of_;
    std::vector<std::vector<std::uint32_t>> members_;
    std::vector<std::uint32_t> mul_;
};

}  // namespace symdetect

#endif  // SYMDETECT_PERMUTATION_H
