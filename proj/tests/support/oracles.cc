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

#include "oracles.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>
#include <stdexcept>

#include "symdetect/permutation.h"

namespace symdetect::oracle {

namespace {

using Monomials = std::map<std::vector<int>, BigInt>;

BigInt factorial_of(int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

int inversions(const std::vector<int> &w) {
    int inv = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        for (std::size_t j = i + 1; j < w.size(); ++j) inv += w[i] > w[j];
    }
    return inv;
}

std::vector<int> conjugate_parts(const std::vector<int> &p) {
    std::vector<int> c(p.empty() ? 0 : p.front(), 0);
    for (int row : p) {
        for (int j = 0; j < row; ++j) ++c[j];
    }
    return c;
}

BigInt centralizer_count(const Permutation &g) {
    const auto &sg = SymmetricGroup::get(g.size());
    BigInt count = 0;
    for (std::size_t i = 0; i < sg.order(); ++i) {
        const Permutation &h = sg.element(i);
        if (h * g == g * h) ++count;
    }
    return count;
}

}  // namespace

BigInt frobenius_character(const Partition &lambda, const Partition &mu) {
    if (lambda.weight() != mu.weight()) throw std::invalid_argument("frobenius_character: weights differ");
    if (lambda.weight() == 0) return 1;
    const int ell = lambda.length();
    Monomials poly{{std::vector<int>(ell, 0), BigInt(1)}};
    for (int k : mu.parts()) {
        Monomials next;
        for (const auto &[exp, c] : poly) {
            for (int v = 0; v < ell; ++v) {
                auto e = exp;
                e[v] += k;
                next[e] += c;
            }
        }
        poly = std::move(next);
    }
    std::vector<int> target(ell);
    for (int i = 0; i < ell; ++i) target[i] = lambda.part(i) + ell - 1 - i;
    // a_delta = sum_w sgn(w) x^{w(delta)}.
    std::vector<int> w(ell);
    for (int i = 0; i < ell; ++i) w[i] = ell - 1 - i;
    std::sort(w.begin(), w.end());
    BigInt chi = 0;
    do {
        std::vector<int> need(ell);
        bool ok = true;
        for (int i = 0; i < ell && ok; ++i) {
            need[i] = target[i] - w[i];
            ok = need[i] >= 0;
        }
        if (!ok) continue;
        auto it = poly.find(need);
        if (it == poly.end()) continue;
        // sign of w relative to the decreasing delta
        std::vector<int> rel(ell);
        for (int i = 0; i < ell; ++i) rel[i] = ell - 1 - w[i];
        chi += inversions(rel) % 2 ? -it->second : it->second;
    } while (std::next_permutation(w.begin(), w.end()));
    return chi;
}

BigInt syt_count(const Partition &lambda) {
    static std::map<std::vector<int>, BigInt> memo;
    if (lambda.weight() <= 1) return 1;
    auto it = memo.find(lambda.parts());
    if (it != memo.end()) return it->second;
    BigInt total = 0;
    const auto &p = lambda.parts();
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i + 1 < p.size() && p[i + 1] == p[i]) continue;  // not a corner
        auto q = p;
        if (--q[i] == 0) q.pop_back();
        total += syt_count(Partition(q));
    }
    memo.emplace(p, total);
    return total;
}

BigInt cycle_character(const Partition &lambda, int k) {
    const int n = lambda.weight();
    if (k < 1 || k > n) throw std::invalid_argument("cycle_character: bad k");
    const auto &p = lambda.parts();
    const auto c = conjugate_parts(p);
    BigInt chi = 0;
    for (int i = 0; i < static_cast<int>(p.size()); ++i) {
        for (int j = 0; j < p[i]; ++j) {
            const int arm = p[i] - j - 1;
            const int leg = c[j] - i - 1;
            if (arm + leg + 1 != k) continue;
            auto q = p;
            for (int r = i; r < i + leg; ++r) q[r] = p[r + 1] - 1;
            q[i + leg] = j;
            while (!q.empty() && q.back() == 0) q.pop_back();
            BigInt f = syt_count(Partition(q));
            chi += leg % 2 ? -f : f;
        }
    }
    return chi;
}

int k_star(int n) {
    if (n < 2) throw std::invalid_argument("oracle k_star: need n >= 2");
    // Partitions of n, generated independently of the library ordering.
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    auto gen = [&](auto &&self, int rest, int max) -> void {
        if (rest == 0) {
            parts.push_back(cur);
            return;
        }
        for (int a = std::min(rest, max); a >= 1; --a) {
            cur.push_back(a);
            self(self, rest - a, a);
            cur.pop_back();
        }
    };
    gen(gen, n, n);
    std::vector<std::vector<BigInt>> sig(parts.size());
    for (int k = 2; k <= n; ++k) {
        BigInt tk = factorial_of(n) / (factorial_of(n - k) * k);
        for (std::size_t r = 0; r < parts.size(); ++r) {
            Partition lam(parts[r]);
            sig[r].push_back(tk * cycle_character(lam, k) / syt_count(lam));
        }
        std::set<std::vector<BigInt>> seen(sig.begin(), sig.end());
        if (seen.size() == parts.size()) return k;
    }
    return n + 1;  // unreachable: the full character table separates
}

BigInt lr_tableaux(const Partition &outer, const Partition &inner, const Partition &content) {
    if (outer.weight() != inner.weight() + content.weight()) return 0;
    if (inner.length() > outer.length()) return 0;
    for (int i = 0; i < inner.length(); ++i) {
        if (inner.part(i) > outer.part(i)) return 0;
    }
    struct Cell {
        int r, c;
    };
    std::vector<Cell> cells;  // reading order: rows top to bottom, right to left
    for (int r = 0; r < outer.length(); ++r) {
        for (int c = outer.part(r) - 1; c >= inner.part(r); --c) cells.push_back({r, c});
    }
    const int rows = outer.length();
    std::vector<std::vector<int>> t(rows, std::vector<int>(outer.part(0), 0));
    std::vector<int> used(content.length() + 1, 0);
    BigInt count = 0;
    auto fill = [&](auto &&self, std::size_t idx) -> void {
        if (idx == cells.size()) {
            ++count;
            return;
        }
        const auto [r, c] = cells[idx];
        for (int v = 1; v <= content.length(); ++v) {
            if (used[v] >= content.part(v - 1)) continue;
            if (v > 1 && used[v] + 1 > used[v - 1]) continue;
            if (c + 1 < outer.part(r) && v > t[r][c + 1]) continue;
            if (r > 0 && c >= inner.part(r - 1) && v <= t[r - 1][c]) continue;
            t[r][c] = v;
            ++used[v];
            self(self, idx + 1);
            --used[v];
            t[r][c] = 0;
        }
    };
    fill(fill, 0);
    return count;
}

BigInt partition_count(int n) {
    std::vector<BigInt> p(n + 1, BigInt(0));
    p[0] = 1;
    for (int m = 1; m <= n; ++m) {
        for (int k = 1;; ++k) {
            int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
            if (g1 > m) break;
            BigInt term = p[m - g1] + (g2 <= m ? p[m - g2] : BigInt(0));
            p[m] += k % 2 ? term : BigInt(-term);
        }
    }
    return p[n];
}

BigInt involutions(int n) {
    BigInt a = 1, b = 1;  // a(0), a(1)
    if (n == 0) return a;
    for (int m = 2; m <= n; ++m) {
        BigInt c = b + (m - 1) * a;
        a = b;
        b = c;
    }
    return b;
}

double legendre_explicit(int l, double x) {
    double s = 0;
    for (int k = 0; k <= l; ++k) {
        double b = std::tgamma(l + 1.0) / (std::tgamma(k + 1.0) * std::tgamma(l - k + 1.0));
        s += b * b * std::pow(x - 1.0, l - k) * std::pow(x + 1.0, k);
    }
    return s / std::pow(2.0, l);
}

std::vector<double> qpe_distribution(double phi, int t) {
    const double size = std::ldexp(1.0, t);
    std::vector<double> p(static_cast<std::size_t>(size));
    for (std::size_t m = 0; m < p.size(); ++m) {
        double d = phi - static_cast<double>(m) / size;
        double den = std::sin(std::numbers::pi * d);
        if (std::abs(den) < 1e-15) {
            p[m] = 1.0;
        } else {
            double v = std::sin(std::numbers::pi * size * d) / (size * den);
            p[m] = v * v;
        }
    }
    return p;
}

BigInt direct_power_sum(const std::vector<std::int64_t> &f, int k) {
    BigInt s = 0;
    for (auto x : f) s += pow(BigInt(x), static_cast<unsigned>(k));
    return s;
}

BigInt delannoy(int a, int b) {
    std::vector<std::vector<BigInt>> d(a + 1, std::vector<BigInt>(b + 1, BigInt(1)));
    for (int i = 1; i <= a; ++i) {
        for (int j = 1; j <= b; ++j) d[i][j] = d[i - 1][j] + d[i][j - 1] + d[i - 1][j - 1];
    }
    return d[a][b];
}

BigInt burnside_diagonal_orbits(int n) {
    const auto &sg = SymmetricGroup::get(n);
    BigInt fixed = 0;
    for (std::size_t i = 0; i < sg.order(); ++i) {
        BigInt c = centralizer_count(sg.element(i));
        fixed += c * c;
    }
    return fixed / BigInt(sg.order());
}

BigInt burnside_subgroup_orbits(int m, int n) {
    const auto &sm = SymmetricGroup::get(m);
    const auto &sn = SymmetricGroup::get(n);
    BigInt fixed = 0;
    for (std::size_t a = 0; a < sm.order(); ++a) {
        for (std::size_t b = 0; b < sn.order(); ++b) {
            fixed += centralizer_count(Permutation::direct_sum(sm.element(a), sn.element(b)));
        }
    }
    return fixed / BigInt(sm.order() * sn.order());
}

double legendre_fourier_coefficient(int l, int m) {
    const int points = 4 * l + 8;
    double s = 0;
    for (int j = 0; j < points; ++j) {
        double phi = 2.0 * std::numbers::pi * j / points;
        s += legendre_explicit(l, std::cos(phi)) * std::cos(m * phi);
    }
    return s / points;
}

}  // namespace symdetect::oracle
