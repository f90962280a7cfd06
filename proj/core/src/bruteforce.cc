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

#include "symdetect/bruteforce.h"

#include <limits>
#include <stdexcept>

#include "symdetect/characters.h"
#include "symdetect/errors.h"

namespace symdetect {

namespace {

using Int128 = __int128;

BigInt from_int128(Int128 x) {
    bool neg = x < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(x + 1)) + 1 : static_cast<unsigned __int128>(x);
    BigInt r = static_cast<std::uint64_t>(u >> 64);
    r <<= 64;
    r += static_cast<std::uint64_t>(u);
    return neg ? BigInt(-r) : r;
}

/// Coefficients scaled to integers over a common denominator, when every
/// numerator fits comfortably in 50 bits.
struct Scaled {
    bool ok = false;
    BigInt den = 1;
    std::vector<std::int64_t> num;
    std::vector<std::size_t> support;
};

Scaled scale(const std::vector<Rational> &c) {
    Scaled s;
    for (const auto &q : c) {
        if (q != 0) s.den = boost::multiprecision::lcm(s.den, denominator(q));
    }
    s.num.assign(c.size(), 0);
    const BigInt limit = BigInt(1) << 50;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        BigInt v = numerator(c[i]) * (s.den / denominator(c[i]));
        if (abs(v) >= limit) return s;
        s.num[i] = v.convert_to<std::int64_t>();
        s.support.push_back(i);
    }
    s.ok = true;
    return s;
}

/// Generic convolution over an index product map.
template <typename ProductIndex>
std::vector<Rational> convolve(const std::vector<Rational> &a, const std::vector<Rational> &b, ProductIndex product) {
    const std::size_t d = a.size();
    Scaled sa = scale(a), sb = scale(b);
    std::vector<Rational> out(d, Rational(0));
    if (sa.ok && sb.ok) {
        std::vector<Int128> acc(d, 0);
        for (std::size_t i : sa.support) {
            for (std::size_t j : sb.support) {
                acc[product(i, j)] += static_cast<Int128>(sa.num[i]) * sb.num[j];
            }
        }
        BigInt den = sa.den * sb.den;
        for (std::size_t k = 0; k < d; ++k) {
            if (acc[k] != 0) out[k] = Rational(from_int128(acc[k]), den);
        }
        return out;
    }
    for (std::size_t i = 0; i < d; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < d; ++j) {
            if (b[j] == 0) continue;
            out[product(i, j)] += a[i] * b[j];
        }
    }
    return out;
}

void check_single(int n) {
    if (n < 0 || n > GroupAlgebraElement::kMaxN) {
        throw CapabilityError("group algebra elements are limited to n <= " +
                              std::to_string(GroupAlgebraElement::kMaxN));
    }
}

void check_tensor(int n) {
    if (n < 0 || n > TensorElement::kMaxN) {
        throw CapabilityError("tensor elements are limited to n <= " + std::to_string(TensorElement::kMaxN));
    }
}

}  // namespace

GroupAlgebraElement::GroupAlgebraElement(int n) : n_(n) {
    check_single(n);
    coeffs_.assign(SymmetricGroup::get(n).order(), Rational(0));
}

GroupAlgebraElement GroupAlgebraElement::identity(int n) {
    GroupAlgebraElement e(n);
    e.coeffs_[0] = 1;
    return e;
}

GroupAlgebraElement GroupAlgebraElement::basis(const Permutation &sigma) {
    GroupAlgebraElement e(sigma.size());
    e.coeffs_[sigma.rank()] = 1;
    return e;
}

GroupAlgebraElement GroupAlgebraElement::class_sum(const Partition &mu) {
    GroupAlgebraElement e(mu.weight());
    for (auto r : SymmetricGroup::get(mu.weight()).class_members(partition_index(mu))) e.coeffs_[r] = 1;
    return e;
}

GroupAlgebraElement GroupAlgebraElement::projector(const Partition &r) {
    const int n = r.weight();
    GroupAlgebraElement e(n);
    const auto &g = SymmetricGroup::get(n);
    const auto &labels = partitions(n);
    for (std::size_t c = 0; c < labels.size(); ++c) {
        Rational v(dimension(r) * character(r, labels[c]), factorial(n));
        for (auto s : g.class_members(c)) e.coeffs_[s] = v;
    }
    return e;
}

bool GroupAlgebraElement::is_zero() const {
    for (const auto &c : coeffs_) {
        if (c != 0) return false;
    }
    return true;
}

GroupAlgebraElement &GroupAlgebraElement::operator+=(const GroupAlgebraElement &o) {
    if (o.n_ != n_) throw std::invalid_argument("adding elements of different n");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

GroupAlgebraElement &GroupAlgebraElement::operator-=(const GroupAlgebraElement &o) {
    if (o.n_ != n_) throw std::invalid_argument("subtracting elements of different n");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

GroupAlgebraElement &GroupAlgebraElement::operator*=(const Rational &s) {
    for (auto &c : coeffs_) c *= s;
    return *this;
}

GroupAlgebraElement multiply(const GroupAlgebraElement &a, const GroupAlgebraElement &b) {
    if (a.n() != b.n()) throw std::invalid_argument("multiply: elements of different n");
    const auto &g = SymmetricGroup::get(a.n());
    GroupAlgebraElement out(a.n());
    auto c = convolve(a.coefficients(), b.coefficients(), [&](std::size_t i, std::size_t j) { return g.multiply(i, j); });
    for (std::size_t i = 0; i < c.size(); ++i) out[i] = std::move(c[i]);
    return out;
}

GroupAlgebraElement antipode(const GroupAlgebraElement &a) {
    const auto &g = SymmetricGroup::get(a.n());
    GroupAlgebraElement out(a.n());
    for (std::size_t i = 0; i < a.dim(); ++i) out[g.inverse(i)] = a[i];
    return out;
}

Rational delta(const GroupAlgebraElement &a) { return a[0]; }

Rational g_pair(const GroupAlgebraElement &a, const GroupAlgebraElement &b) { return delta(multiply(antipode(a), b)); }

TensorElement::TensorElement(int n) : n_(n) {
    check_tensor(n);
    order_ = SymmetricGroup::get(n).order();
    coeffs_.assign(order_ * order_, Rational(0));
}

TensorElement TensorElement::identity(int n) {
    TensorElement e(n);
    e.coeffs_[0] = 1;
    return e;
}

TensorElement TensorElement::product(const GroupAlgebraElement &a, const GroupAlgebraElement &b) {
    if (a.n() != b.n()) throw std::invalid_argument("tensor product of elements of different n");
    TensorElement e(a.n());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.dim(); ++j) {
            if (b[j] != 0) e.at(i, j) = a[i] * b[j];
        }
    }
    return e;
}

TensorElement TensorElement::coproduct(const GroupAlgebraElement &a) {
    TensorElement e(a.n());
    for (std::size_t i = 0; i < a.dim(); ++i) e.at(i, i) = a[i];
    return e;
}

bool TensorElement::is_zero() const {
    for (const auto &c : coeffs_) {
        if (c != 0) return false;
    }
    return true;
}

TensorElement &TensorElement::operator+=(const TensorElement &o) {
    if (o.n_ != n_) throw std::invalid_argument("adding tensors of different n");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

TensorElement &TensorElement::operator-=(const TensorElement &o) {
    if (o.n_ != n_) throw std::invalid_argument("subtracting tensors of different n");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

TensorElement multiply(const TensorElement &a, const TensorElement &b) {
    if (a.n() != b.n()) throw std::invalid_argument("multiply: tensors of different n");
    const auto &g = SymmetricGroup::get(a.n());
    const std::size_t order = a.group_order();
    TensorElement out(a.n());
    auto c = convolve(a.coefficients(), b.coefficients(), [&](std::size_t i, std::size_t j) {
        return g.multiply(i / order, j / order) * order + g.multiply(i % order, j % order);
    });
    for (std::size_t i = 0; i < order; ++i) {
        for (std::size_t j = 0; j < order; ++j) out.at(i, j) = std::move(c[i * order + j]);
    }
    return out;
}

Rational delta(const TensorElement &a) { return a.at(0, 0); }

Rational g_pair(const TensorElement &a, const TensorElement &b) {
    const auto &g = SymmetricGroup::get(a.n());
    TensorElement sa(a.n());
    for (std::size_t i = 0; i < a.group_order(); ++i) {
        for (std::size_t j = 0; j < a.group_order(); ++j) sa.at(g.inverse(i), g.inverse(j)) = a.at(i, j);
    }
    return delta(multiply(sa, b));
}

TensorElement diagonal_orbit_sum(const Permutation &s1, const Permutation &s2) {
    const int n = s1.size();
    if (s2.size() != n) throw std::invalid_argument("diagonal_orbit_sum: degrees differ");
    TensorElement e(n);
    const auto &g = SymmetricGroup::get(n);
    const std::size_t a = s1.rank(), b = s2.rank();
    for (std::size_t x = 0; x < g.order(); ++x) {
        std::size_t xi = g.inverse(x);
        e.at(g.multiply(g.multiply(x, a), xi), g.multiply(g.multiply(x, b), xi)) = 1;
    }
    return e;
}

GroupAlgebraElement subgroup_orbit_sum(const Permutation &sigma, int m, int n) {
    if (sigma.size() != m + n) throw std::invalid_argument("subgroup_orbit_sum: sigma is not in S_{m+n}");
    GroupAlgebraElement e(m + n);
    const auto &gm = SymmetricGroup::get(m);
    const auto &gn = SymmetricGroup::get(n);
    for (std::size_t i = 0; i < gm.order(); ++i) {
        for (std::size_t j = 0; j < gn.order(); ++j) {
            Permutation x = Permutation::direct_sum(gm.element(i), gn.element(j));
            e[(x * sigma * x.inverse()).rank()] = 1;
        }
    }
    return e;
}

std::int64_t count_diagonal_orbits(int n) {
    check_tensor(n);
    const auto &g = SymmetricGroup::get(n);
    const std::size_t order = g.order();
    std::vector<char> seen(order * order, 0);
    std::int64_t orbits = 0;
    for (std::size_t a = 0; a < order; ++a) {
        for (std::size_t b = 0; b < order; ++b) {
            if (seen[a * order + b]) continue;
            ++orbits;
            for (std::size_t x = 0; x < order; ++x) {
                std::size_t xi = g.inverse(x);
                seen[g.multiply(g.multiply(x, a), xi) * order + g.multiply(g.multiply(x, b), xi)] = 1;
            }
        }
    }
    return orbits;
}

std::int64_t count_subgroup_orbits(int m, int n) {
    check_single(m + n);
    const auto &g = SymmetricGroup::get(m + n);
    const auto &gm = SymmetricGroup::get(m);
    const auto &gn = SymmetricGroup::get(n);
    std::vector<std::size_t> sub;
    for (std::size_t i = 0; i < gm.order(); ++i) {
        for (std::size_t j = 0; j < gn.order(); ++j) {
            sub.push_back(Permutation::direct_sum(gm.element(i), gn.element(j)).rank());
        }
    }
    std::vector<char> seen(g.order(), 0);
    std::int64_t orbits = 0;
    for (std::size_t s = 0; s < g.order(); ++s) {
        if (seen[s]) continue;
        ++orbits;
        for (std::size_t x : sub) seen[g.multiply(g.multiply(x, s), g.inverse(x))] = 1;
    }
    return orbits;
}

}  // namespace symdetect
