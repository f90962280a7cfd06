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

#ifndef SYMDETECT_PARTITION_H
#define SYMDETECT_PARTITION_H

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "symdetect/numeric.h"

namespace symdetect {

/// A weakly decreasing sequence of positive integers. Used both as a Young
/// diagram (irrep label) and as a cycle type (conjugacy class label).
class Partition {
   public:
    Partition() = default;
    /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
    explicit Partition(std::vector<int> parts);

    /// Parses comma-joined parts such as "3,2,1". The empty string is the empty
    /// partition. Throws std::invalid_argument naming the offending token.
    static Partition parse(std::string_view text);

    const std::vector<int> &parts() const { return parts_; }
    int weight() const { return weight_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    /// Part i (0-based), or 0 past the end.
    int part(int i) const;

    Partition conjugate() const;
    /// Number of parts equal to k.
    int multiplicity(int k) const;
    bool is_one_row() const { return parts_.size() <= 1; }

    std::string to_string() const;

    /// Lexicographic on parts; canonical order is *descending* under this.
    friend auto operator<=>(const Partition &a, const Partition &b) { return a.parts_ <=> b.parts_; }
    friend bool operator==(const Partition &a, const Partition &b) { return a.parts_ == b.parts_; }

   private:
    std::vector<int> parts_;
    int weight_ = 0;
};

struct PartitionHash {
    std::size_t operator()(const Partition &p) const;
};

/// All partitions of n, in reverse lexicographic order ([n] first, [1^n] last).
const std::vector<Partition> &partitions(int n);

/// Position of p within partitions(p.weight()).
std::size_t partition_index(const Partition &p);

/// [k, 1^{n-k}].
Partition cycle_class(int n, int k);
/// [1^n].
Partition identity_class(int n);
/// Multiset union of parts (cycle type of a disjoint product).
Partition concatenate(const Partition &a, const Partition &b);

/// z_mu = prod_k k^{m_k} m_k!.
BigInt centralizer_order(const Partition &mu);
/// n!/z_mu.
BigInt class_size(const Partition &mu);
/// (-1)^{n - length}.
int sign(const Partition &mu);

}  // namespace symdetect

#endif  // SYMDETECT_PARTITION_H
