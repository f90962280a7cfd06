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

#include "symdetect/partition.h"

#include <algorithm>
#include <charconv>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace symdetect {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) {
            throw std::invalid_argument("partition parts must be positive: " + to_string());
        }
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw std::invalid_argument("partition parts must be weakly decreasing: " + to_string());
        }
        weight_ += parts_[i];
    }
}

Partition Partition::parse(std::string_view text) {
    std::vector<int> parts;
    auto trim = [](std::string_view s) {
        while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
        while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text.empty()) {
        return Partition();
    }
    std::size_t start = 0;
    while (true) {
        std::size_t end = text.find(',', start);
        std::string_view tok = trim(text.substr(start, end == std::string_view::npos ? text.npos : end - start));
        int v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
            throw std::invalid_argument("malformed partition part '" + std::string(tok) + "' in \"" +
                                        std::string(text) + "\"");
        }
        if (v <= 0) {
            throw std::invalid_argument("non-positive partition part '" + std::string(tok) + "' in \"" +
                                        std::string(text) + "\"");
        }
        if (!parts.empty() && v > parts.back()) {
            throw std::invalid_argument("partition part '" + std::string(tok) + "' breaks descending order in \"" +
                                        std::string(text) + "\"");
        }
        parts.push_back(v);
        if (end == std::string_view::npos) {
            break;
        }
        start = end + 1;
    }
    return Partition(std::move(parts));
}

int Partition::part(int i) const { return i < length() ? parts_[i] : 0; }

Partition Partition::conjugate() const {
    std::vector<int> c;
    if (!parts_.empty()) {
        c.assign(parts_[0], 0);
        for (int p : parts_) {
            for (int j = 0; j < p; ++j) {
                ++c[j];
            }
        }
    }
    return Partition(std::move(c));
}

int Partition::multiplicity(int k) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), k));
}

std::string Partition::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

std::size_t PartitionHash::operator()(const Partition &p) const {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int x : p.parts()) {
        h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

namespace {

void generate(int remaining, int max_part, std::vector<int> &cur, std::vector<Partition> &out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        generate(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

struct PartitionList {
    std::vector<Partition> items;
    std::unordered_map<Partition, std::size_t, PartitionHash> index;
};

const PartitionList &partition_list(int n) {
    if (n < 0) {
        throw std::invalid_argument("partitions of a negative number");
    }
    static std::mutex mu;
    static std::map<int, std::unique_ptr<PartitionList>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto &slot = cache[n];
    if (!slot) {
        auto list = std::make_unique<PartitionList>();
        std::vector<int> cur;
        generate(n, n, cur, list->items);
        list->index.reserve(list->items.size());
        for (std::size_t i = 0; i < list->items.size(); ++i) {
            list->index.emplace(list->items[i], i);
        }
        slot = std::move(list);
    }
    return *slot;
}

}  // namespace

const std::vector<Partition> &partitions(int n) { return partition_list(n).items; }

std::size_t partition_index(const Partition &p) {
    const auto &list = partition_list(p.weight());
    return list.index.at(p);
}

Partition cycle_class(int n, int k) {
    if (k < 1 || k > n) {
        throw std::invalid_argument("cycle length out of range");
    }
    std::vector<int> parts{k};
    parts.insert(parts.end(), n - k, 1);
    return Partition(std::move(parts));
}

Partition identity_class(int n) { return Partition(std::vector<int>(n, 1)); }

Partition concatenate(const Partition &a, const Partition &b) {
    std::vector<int> parts = a.parts();
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(std::move(parts));
}

BigInt centralizer_order(const Partition &mu) {
    BigInt z = 1;
    const auto &p = mu.parts();
    std::size_t i = 0;
    while (i < p.size()) {
        std::size_t j = i;
        while (j < p.size() && p[j] == p[i]) ++j;
        int m = static_cast<int>(j - i);
        for (int r = 0; r < m; ++r) z *= p[i];
        z *= factorial(m);
        i = j;
    }
    return z;
}

BigInt class_size(const Partition &mu) { return factorial(mu.weight()) / centralizer_order(mu); }

int sign(const Partition &mu) { return (mu.weight() - mu.length()) % 2 == 0 ? 1 : -1; }

}  // namespace symdetect
