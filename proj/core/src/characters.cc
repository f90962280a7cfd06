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

#include "symdetect/characters.h"

#include <algorithm>
#include <functional>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <utility>

#include "json_util.h"

namespace symdetect {

namespace {

template <typename K, typename V, typename H>
class SharedCache {
   public:
    const V *find(const K &key) const {
        std::shared_lock lock(mu_);
        auto it = map_.find(key);
        return it == map_.end() ? nullptr : &it->second;
    }
    const V &insert(const K &key, V value) {
        std::unique_lock lock(mu_);
        return map_.try_emplace(key, std::move(value)).first->second;
    }

   private:
    mutable std::shared_mutex mu_;
    std::unordered_map<K, V, H> map_;
};

struct PairHash {
    std::size_t operator()(const std::pair<Partition, Partition> &p) const {
        PartitionHash h;
        return h(p.first) * 0x100000001b3ULL ^ h(p.second);
    }
};

SharedCache<Partition, BigInt, PartitionHash> &dimension_cache() {
    static SharedCache<Partition, BigInt, PartitionHash> cache;
    return cache;
}

SharedCache<std::pair<Partition, Partition>, BigInt, PairHash> &character_cache() {
    static SharedCache<std::pair<Partition, Partition>, BigInt, PairHash> cache;
    return cache;
}

BigInt hook_dimension(const Partition &r) {
    Partition c = r.conjugate();
    BigInt hooks = 1;
    for (int i = 0; i < r.length(); ++i) {
        for (int j = 0; j < r.part(i); ++j) {
            hooks *= r.part(i) - j + c.part(j) - i - 1;
        }
    }
    return factorial(r.weight()) / hooks;
}

BigInt murnaghan_nakayama(const Partition &r, const Partition &mu) {
    if (mu.empty()) {
        return 1;
    }
    if (mu.part(0) == 1) {
        return dimension(r);
    }
    auto key = std::make_pair(r, mu);
    if (const BigInt *hit = character_cache().find(key)) {
        return *hit;
    }
    std::vector<int> rest(mu.parts().begin() + 1, mu.parts().end());
    Partition tail(std::move(rest));
    BigInt total = 0;
    for (const auto &strip : remove_border_strips(r, mu.part(0))) {
        BigInt v = murnaghan_nakayama(strip.remainder, tail);
        if (strip.height % 2) {
            total -= v;
        } else {
            total += v;
        }
    }
    return character_cache().insert(key, std::move(total));
}

}  // namespace

const BigInt &dimension(const Partition &r) {
    if (const BigInt *hit = dimension_cache().find(r)) {
        return *hit;
    }
    return dimension_cache().insert(r, hook_dimension(r));
}

std::vector<StripRemoval> remove_border_strips(const Partition &r, int k) {
    const int len = r.length();
    std::vector<int> beta(len);
    for (int i = 0; i < len; ++i) beta[i] = r.part(i) + len - 1 - i;
    std::vector<StripRemoval> out;
    for (int i = 0; i < len; ++i) {
        int target = beta[i] - k;
        if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) {
            continue;
        }
        int height = 0;
        for (int b : beta) {
            if (b > target && b < beta[i]) ++height;
        }
        std::vector<int> nb(beta);
        nb[i] = target;
        std::sort(nb.begin(), nb.end(), std::greater<int>());
        std::vector<int> parts;
        for (int j = 0; j < len; ++j) {
            int p = nb[j] - (len - 1 - j);
            if (p > 0) parts.push_back(p);
        }
        out.push_back({Partition(std::move(parts)), height});
    }
    return out;
}

BigInt character(const Partition &r, const Partition &mu) {
    if (r.weight() != mu.weight()) {
        throw std::invalid_argument("character: weights differ (" + r.to_string() + " vs " + mu.to_string() + ")");
    }
    return murnaghan_nakayama(r, mu);
}

BigInt sum_of_dimensions(int n) {
    BigInt s = 0;
    for (const auto &r : partitions(n)) s += dimension(r);
    return s;
}

BigInt involution_count(int n) {
    BigInt s = 0;
    for (int k = 0; 2 * k <= n; ++k) {
        BigInt pow2 = BigInt(1) << k;
        s += factorial(n) / (pow2 * factorial(k) * factorial(n - 2 * k));
    }
    return s;
}

CharacterTable::CharacterTable(int n) : n_(n) {
    const auto &labels = partitions(n);
    class_sizes_.reserve(labels.size());
    for (const auto &mu : labels) class_sizes_.push_back(symdetect::class_size(mu));
    once_.resize(labels.size());
    for (auto &f : once_) f = std::make_unique<std::once_flag>();
    columns_.resize(labels.size());
}

const BigInt &CharacterTable::dim(std::size_t r) const { return dimension(labels()[r]); }

const std::vector<BigInt> &CharacterTable::column(std::size_t c) const {
    std::call_once(*once_[c], [&] {
        const auto &labels = this->labels();
        std::vector<BigInt> col;
        col.reserve(labels.size());
        for (const auto &r : labels) col.push_back(character(r, labels[c]));
        columns_[c] = std::move(col);
    });
    return columns_[c];
}

std::string CharacterTable::to_csv() const {
    using internal::csv_quote;
    std::ostringstream out;
    out << "R";
    for (const auto &mu : labels()) out << ',' << csv_quote(mu.to_string());
    out << '\n';
    for (std::size_t r = 0; r < size(); ++r) {
        out << csv_quote(labels()[r].to_string());
        for (std::size_t c = 0; c < size(); ++c) out << ',' << at(r, c);
        out << '\n';
    }
    return out.str();
}

std::string CharacterTable::to_json() const {
    using internal::Json;
    Json j;
    j["schema"] = "1";
    j["n"] = n_;
    Json labels = Json::array(), sizes = Json::array(), dims = Json::array(), rows = Json::array();
    for (std::size_t i = 0; i < size(); ++i) {
        labels.push_back(this->labels()[i].to_string());
        sizes.push_back(internal::json_int(class_size(i)));
        dims.push_back(internal::json_int(dim(i)));
    }
    for (std::size_t r = 0; r < size(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < size(); ++c) row.push_back(internal::json_int(at(r, c)));
        rows.push_back(std::move(row));
    }
    j["partitions"] = std::move(labels);
    j["class_sizes"] = std::move(sizes);
    j["dimensions"] = std::move(dims);
    j["characters"] = std::move(rows);
    return j.dump(2) + "\n";
}

}  // namespace symdetect
