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

#include "symdetect/permutation.h"

#include <algorithm>
#include <array>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "symdetect/errors.h"

namespace symdetect {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
    std::vector<char> seen(image_.size(), 0);
    for (int x : image_) {
        if (x < 0 || x >= size() || seen[x]) {
            throw std::invalid_argument("not a permutation: " + to_string());
        }
        seen[x] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i;
    return Permutation(std::move(img));
}

Permutation Permutation::cycle(int n, const std::vector<int> &points) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i;
    for (std::size_t i = 0; i < points.size(); ++i) {
        img[points[i]] = points[(i + 1) % points.size()];
    }
    return Permutation(std::move(img));
}

Permutation Permutation::unrank(int n, std::uint64_t rank) {
    std::vector<int> avail(n);
    for (int i = 0; i < n; ++i) avail[i] = i;
    std::vector<std::uint64_t> fact(n + 1, 1);
    for (int i = 1; i <= n; ++i) fact[i] = fact[i - 1] * i;
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) {
        std::uint64_t f = fact[n - 1 - i];
        std::uint64_t d = rank / f;
        rank %= f;
        img[i] = avail[d];
        avail.erase(avail.begin() + static_cast<std::ptrdiff_t>(d));
    }
    return Permutation(std::move(img));
}

Permutation Permutation::operator*(const Permutation &b) const {
    if (b.size() != size()) {
        throw std::invalid_argument("composing permutations of different degree");
    }
    std::vector<int> img(image_.size());
    for (int i = 0; i < size(); ++i) img[i] = image_[b.image_[i]];
    Permutation p;
    p.image_ = std::move(img);
    return p;
}

Permutation Permutation::inverse() const {
    std::vector<int> img(image_.size());
    for (int i = 0; i < size(); ++i) img[image_[i]] = i;
    Permutation p;
    p.image_ = std::move(img);
    return p;
}

Partition Permutation::cycle_type() const {
    std::vector<char> seen(image_.size(), 0);
    std::vector<int> lengths;
    for (int i = 0; i < size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int j = i; !seen[j]; j = image_[j]) {
            seen[j] = 1;
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end(), std::greater<int>());
    return Partition(std::move(lengths));
}

bool Permutation::is_identity() const {
    for (int i = 0; i < size(); ++i) {
        if (image_[i] != i) return false;
    }
    return true;
}

std::uint64_t Permutation::rank() const {
    const int n = size();
    std::uint64_t r = 0;
    for (int i = 0; i < n; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < n; ++j) {
            if (image_[j] < image_[i]) ++smaller;
        }
        r = r * static_cast<std::uint64_t>(n - i) + static_cast<std::uint64_t>(smaller);
    }
    return r;
}

Permutation Permutation::shifted(int offset, int total) const {
    std::vector<int> img(total);
    for (int i = 0; i < total; ++i) img[i] = i;
    for (int i = 0; i < size(); ++i) img[offset + i] = offset + image_[i];
    return Permutation(std::move(img));
}

Permutation Permutation::direct_sum(const Permutation &a, const Permutation &b) {
    std::vector<int> img(a.image_);
    for (int x : b.image_) img.push_back(a.size() + x);
    return Permutation(std::move(img));
}

std::string Permutation::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < image_.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(image_[i]);
    }
    return s + "]";
}

SymmetricGroup::SymmetricGroup(int n) : n_(n) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i;
    do {
        elements_.emplace_back(img);
    } while (std::next_permutation(img.begin(), img.end()));

    const std::size_t order = elements_.size();
    inverse_.resize(order);
    class_of_.resize(order);
    members_.resize(partitions(n).size());
    for (std::size_t r = 0; r < order; ++r) {
        inverse_[r] = static_cast<std::uint32_t>(elements_[r].inverse().rank());
        std::size_t c = partition_index(elements_[r].cycle_type());
        class_of_[r] = static_cast<std::uint32_t>(c);
        members_[c].push_back(static_cast<std::uint32_t>(r));
    }
    if (n <= 6) {
        mul_.resize(order * order);
        for (std::size_t a = 0; a < order; ++a) {
            for (std::size_t b = 0; b < order; ++b) {
                mul_[a * order + b] = static_cast<std::uint32_t>((elements_[a] * elements_[b]).rank());
            }
        }
    }
}

std::size_t SymmetricGroup::multiply(std::size_t a, std::size_t b) const {
    if (!mul_.empty()) {
        return mul_[a * elements_.size() + b];
    }
    return (elements_[a] * elements_[b]).rank();
}

const SymmetricGroup &SymmetricGroup::get(int n) {
    if (n < 0 || n > 8) {
        throw CapabilityError("symmetric group tables are limited to n <= 8");
    }
    static std::mutex mu;
    static std::array<std::unique_ptr<SymmetricGroup>, 9> cache;
    std::lock_guard<std::mutex> lock(mu);
    if (!cache[n]) {
        cache[n].reset(new SymmetricGroup(n));
    }
    return *cache[n];
}

}  // namespace symdetect
