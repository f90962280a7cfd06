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

#ifndef SYMDETECT_CHARACTERS_H
#define SYMDETECT_CHARACTERS_H

#include <cstddef>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "symdetect/numeric.h"
#include "symdetect/partition.h"

namespace symdetect {

/// d_R by the hook length formula (memoized).
const BigInt &dimension(const Partition &r);

/// chi^R(mu) by the Murnaghan-Nakayama rule (memoized, thread safe).
/// Throws std::invalid_argument if the weights differ.
BigInt character(const Partition &r, const Partition &mu);

/// Sum over R |- n of d_R.
BigInt sum_of_dimensions(int n);
/// sum_{k} n!/(2^k k! (n-2k)!), the number of involutions in S_n.
BigInt involution_count(int n);

/// A border strip of length k removed from a diagram.
struct StripRemoval {
    Partition remainder;
    int height;  // rows spanned minus one
};
/// All border strips of length k in r.
std::vector<StripRemoval> remove_border_strips(const Partition &r, int k);

/// Character table of S_n. Rows and columns follow partitions(n). Columns are
/// computed on first access and then shared; safe for concurrent readers.
class CharacterTable {
   public:
    explicit CharacterTable(int n);

    int n() const { return n_; }
    const std::vector<Partition> &labels() const { return partitions(n_); }
    std::size_t size() const { return labels().size(); }
    const BigInt &dim(std::size_t r) const;
    const BigInt &class_size(std::size_t c) const { return class_sizes_[c]; }
    const std::vector<BigInt> &column(std::size_t c) const;
    const BigInt &at(std::size_t r, std::size_t c) const { return column(c)[r]; }

    /// Rows R in canonical order, one column per class mu.
    std::string to_csv() const;
    std::string to_json() const;

   private:
    int n_;
    std::vector<BigInt> class_sizes_;
    mutable std::vector<std::unique_ptr<std::once_flag>> once_;
    mutable std::vector<std::vector<BigInt>> columns_;
};

}  // namespace symdetect

#endif  // SYMDETECT_CHARACTERS_H
