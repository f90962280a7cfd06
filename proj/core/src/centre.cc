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

#include "symdetect/centre.h"

#include <cmath>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json_util.h"
#include "symdetect/errors.h"

namespace symdetect {

BigInt cycle_class_size(int n, int k) {
    if (k < 1 || k > n) {
        throw std::invalid_argument("cycle length out of range");
    }
    return factorial(n) / (BigInt(k) * factorial(n - k));
}

BigInt normalized_character(const Partition &r, const Partition &mu) {
    BigInt num = class_size(mu) * character(r, mu);
    return exact_div(num, dimension(r), "normalized_character");
}

BigInt normalized_character(const Partition &r, int k) {
    const int n = r.weight();
    if (k < 1 || k > n) {
        throw std::invalid_argument("normalized_character: need 1 <= k <= n, got k=" + std::to_string(k));
    }
    BigInt chi = 0;
    for (const auto &strip : remove_border_strips(r, k)) {
        if (strip.height % 2) {
            chi -= dimension(strip.remainder);
        } else {
            chi += dimension(strip.remainder);
        }
    }
    return exact_div(cycle_class_size(n, k) * chi, dimension(r), "normalized_character");
}

std::int64_t content_sum(const Partition &r) {
    std::int64_t s = 0;
    for (int i = 0; i < r.length(); ++i) {
        for (int j = 0; j < r.part(i); ++j) s += j - i;
    }
    return s;
}

BigInt chi_max(int n, int k) {
    if (k < 2 || k > n) {
        throw std::invalid_argument("chi_max: need 2 <= k <= n");
    }
    BigInt best = 0;
    bool first = true;
    for (const auto &r : partitions(n)) {
        BigInt v = normalized_character(r, k);
        if (first || v > best) best = v;
        first = false;
    }
    if (best != cycle_class_size(n, k)) {
        throw ConsistencyError("chi_max scan " + best.str() + " differs from |T_k| = " +
                               cycle_class_size(n, k).str());
    }
    return best;
}

Signature signature(const Partition &r, int max_k) {
    Signature s{r, {}};
    for (int k = 2; k <= max_k; ++k) s.values.push_back(normalized_character(r, k));
    return s;
}

std::size_t SignatureHash::operator()(const std::vector<BigInt> &v) const {
    std::size_t h = 0x84222325cbf29ce4ULL;
    BigIntHash bh;
    for (const auto &x : v) h = (h ^ bh(x)) * 0x100000001b3ULL;
    return h;
}

SignatureTable::SignatureTable(int n, int max_k) : n_(n), max_k_(max_k) {
    if (max_k > n) {
        throw std::invalid_argument("signature table: K exceeds n");
    }
    const auto &labels = partitions(n);
    rows_.reserve(labels.size());
    std::unordered_map<std::vector<BigInt>, std::vector<std::size_t>, SignatureHash> groups;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        rows_.push_back(signature(labels[i], max_k));
        groups[rows_.back().values].push_back(i);
    }
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const auto &members = groups[rows_[i].values];
        if (members.size() == 1) {
            index_.emplace(rows_[i].values, i);
        } else if (members.front() == i) {
            std::vector<Partition> group;
            for (std::size_t m : members) group.push_back(labels[m]);
            collisions_.push_back(std::move(group));
        }
    }
}

std::string SignatureTable::collision_report() const {
    std::ostringstream out;
    for (const auto &group : collisions_) {
        out << "collision at K=" << max_k_ << ":";
        for (const auto &p : group) out << " [" << p.to_string() << "]";
        out << '\n';
    }
    return out.str();
}

std::optional<Partition> SignatureTable::lookup(const std::vector<BigInt> &values) const {
    auto it = index_.find(values);
    if (it == index_.end()) return std::nullopt;
    return rows_[it->second].label;
}

bool SignatureTable::in_column(int k, const BigInt &value) const {
    if (k < 2 || k > max_k_) {
        throw std::invalid_argument("in_column: k outside the table");
    }
    for (const auto &row : rows_) {
        if (row.values[k - 2] == value) return true;
    }
    return false;
}

std::string SignatureTable::to_csv() const {
    std::ostringstream out;
    out << "partition";
    for (int k = 2; k <= max_k_; ++k) out << ",T" << k;
    out << '\n';
    for (const auto &row : rows_) {
        out << internal::csv_quote(row.label.to_string());
        for (const auto &v : row.values) out << ',' << v;
        out << '\n';
    }
    return out.str();
}

int k_star(int n) {
    if (n < 2) {
        throw std::invalid_argument("k_star: need n >= 2");
    }
    static std::mutex mu;
    static std::map<int, int> memo;
    {
        std::lock_guard<std::mutex> lock(mu);
        if (auto it = memo.find(n); it != memo.end()) return it->second;
    }
    // Refine the partition of labels by one column at a time; only the
    // columns up to the answer are ever evaluated.
    const auto &labels = partitions(n);
    std::vector<std::vector<std::size_t>> groups(1);
    for (std::size_t i = 0; i < labels.size(); ++i) groups[0].push_back(i);
    int answer = n;
    for (int k = 2; k <= n; ++k) {
        std::vector<std::vector<std::size_t>> next;
        for (const auto &g : groups) {
            if (g.size() == 1) {
                next.push_back(g);
                continue;
            }
            std::map<BigInt, std::vector<std::size_t>> split;
            for (std::size_t i : g) split[normalized_character(labels[i], k)].push_back(i);
            for (auto &[value, members] : split) next.push_back(std::move(members));
        }
        groups = std::move(next);
        if (groups.size() == labels.size()) {
            answer = k;
            break;
        }
    }
    if (groups.size() != labels.size()) {
        throw ConsistencyError("T_2..T_n fail to separate the diagrams of " + std::to_string(n));
    }
    std::lock_guard<std::mutex> lock(mu);
    memo[n] = answer;
    return answer;
}

const SignatureTable &detection_table(int n) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<SignatureTable>> cache;
    int k = k_star(n);
    std::lock_guard<std::mutex> lock(mu);
    auto &slot = cache[n];
    if (!slot) {
        slot = std::make_unique<SignatureTable>(n, k);
        if (!slot->collision_free()) {
            throw ConsistencyError("signature table at k_star has collisions:\n" + slot->collision_report());
        }
    }
    return *slot;
}

std::vector<KStarRow> k_star_growth_report(int n_max, int n_min) {
    std::vector<KStarRow> rows;
    for (int n = std::max(2, n_min); n <= n_max; ++n) {
        int k = k_star(n);
        if (k > n) {
            throw ConsistencyError("k_star exceeds n");
        }
        rows.push_back({n, k, std::pow(static_cast<double>(n), 0.25) / std::log(static_cast<double>(n))});
    }
    return rows;
}

std::string k_star_report_json(const std::vector<KStarRow> &rows) {
    internal::Json arr = internal::Json::array();
    for (const auto &row : rows) {
        internal::Json j;
        j["n"] = row.n;
        j["k_star"] = row.k_star;
        j["growth"] = row.growth;
        arr.push_back(std::move(j));
    }
    internal::Json out;
    out["schema"] = "1";
    out["k_star"] = std::move(arr);
    return out.dump(2) + "\n";
}

StructureConstants structure_constants(int n, const Partition &mu) {
    if (n > 8) {
        throw CapabilityError("structure_constants: limited to n <= 8");
    }
    if (mu.weight() != n) {
        throw std::invalid_argument("structure_constants: mu is not a partition of n");
    }
    CharacterTable table(n);
    const std::size_t p = table.size();
    const std::size_t m = partition_index(mu);
    StructureConstants out{mu, std::vector<std::vector<BigInt>>(p, std::vector<BigInt>(p))};
    for (std::size_t nu = 0; nu < p; ++nu) {
        for (std::size_t la = 0; la < p; ++la) {
            Rational s = 0;
            for (std::size_t r = 0; r < p; ++r) {
                s += Rational(table.at(r, m) * table.at(r, nu) * table.at(r, la), table.dim(r));
            }
            s *= Rational(table.class_size(m) * table.class_size(nu), factorial(n));
            if (denominator(s) != 1) {
                throw ConsistencyError("structure constant is not an integer");
            }
            out.entries[nu][la] = numerator(s);
        }
    }
    return out;
}

namespace {

template <typename T>
T from_rational(const Rational &q);

template <>
Rational from_rational<Rational>(const Rational &q) {
    return q;
}

template <>
std::complex<double> from_rational<std::complex<double>>(const Rational &q) {
    return {to_double(q), 0.0};
}

}  // namespace

template <typename T>
std::vector<T> projector_to_class_basis(const CharacterTable &table, const std::vector<T> &a) {
    const std::size_t p = table.size();
    if (a.size() != p) throw std::invalid_argument("coefficient vector has the wrong length");
    const BigInt &nfact = factorial(table.n());
    std::vector<T> c(p, T(0));
    for (std::size_t mu = 0; mu < p; ++mu) {
        for (std::size_t r = 0; r < p; ++r) {
            c[mu] += a[r] * from_rational<T>(Rational(table.dim(r) * table.at(r, mu), nfact));
        }
    }
    return c;
}

template <typename T>
std::vector<T> class_to_projector_basis(const CharacterTable &table, const std::vector<T> &c) {
    const std::size_t p = table.size();
    if (c.size() != p) throw std::invalid_argument("coefficient vector has the wrong length");
    std::vector<T> a(p, T(0));
    for (std::size_t r = 0; r < p; ++r) {
        for (std::size_t mu = 0; mu < p; ++mu) {
            a[r] += c[mu] * from_rational<T>(Rational(table.class_size(mu) * table.at(r, mu), table.dim(r)));
        }
    }
    return a;
}

template std::vector<Rational> projector_to_class_basis(const CharacterTable &, const std::vector<Rational> &);
template std::vector<std::complex<double>> projector_to_class_basis(const CharacterTable &,
                                                                    const std::vector<std::complex<double>> &);
template std::vector<Rational> class_to_projector_basis(const CharacterTable &, const std::vector<Rational> &);
template std::vector<std::complex<double>> class_to_projector_basis(const CharacterTable &,
                                                                    const std::vector<std::complex<double>> &);

namespace {

std::vector<std::complex<double>> to_complex(const std::vector<Rational> &v) {
    std::vector<std::complex<double>> out;
    out.reserve(v.size());
    for (const auto &q : v) out.emplace_back(to_double(q), 0.0);
    return out;
}

const CharacterTable &shared_table(int n) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<CharacterTable>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto &slot = cache[n];
    if (!slot) slot = std::make_unique<CharacterTable>(n);
    return *slot;
}

double plancherel(int n, std::size_t r) {
    const BigInt &d = dimension(partitions(n)[r]);
    return to_double(Rational(d * d, factorial(n)));
}

}  // namespace

CentreState::CentreState(int n, std::optional<std::vector<Rational>> exact, std::vector<std::complex<double>> amps)
    : n_(n), exact_(std::move(exact)), amps_(std::move(amps)) {
    if (amps_.size() != partitions(n).size()) {
        throw std::invalid_argument("centre state: expected " + std::to_string(partitions(n).size()) +
                                    " coefficients");
    }
}

CentreState CentreState::projector(const Partition &r) {
    const int n = r.weight();
    std::vector<Rational> a(partitions(n).size(), Rational(0));
    a[partition_index(r)] = 1;
    return from_projector_coefficients(n, std::move(a));
}

CentreState CentreState::from_projector_coefficients(int n, std::vector<Rational> a) {
    auto amps = to_complex(a);
    return CentreState(n, std::move(a), std::move(amps));
}

CentreState CentreState::from_projector_coefficients(int n, std::vector<std::complex<double>> a) {
    return CentreState(n, std::nullopt, std::move(a));
}

CentreState CentreState::from_class_coefficients(int n, const std::vector<Rational> &c) {
    return from_projector_coefficients(n, class_to_projector_basis(shared_table(n), c));
}

CentreState CentreState::from_class_coefficients(int n, const std::vector<std::complex<double>> &c) {
    return from_projector_coefficients(n, class_to_projector_basis(shared_table(n), c));
}

const std::vector<Rational> &CentreState::exact_projector_coefficients() const {
    if (!exact_) throw std::logic_error("centre state has no exact coefficients");
    return *exact_;
}

std::vector<std::complex<double>> CentreState::class_coefficients() const {
    return projector_to_class_basis(shared_table(n_), amps_);
}

std::optional<std::vector<Rational>> CentreState::exact_class_coefficients() const {
    if (!exact_) return std::nullopt;
    return projector_to_class_basis(shared_table(n_), *exact_);
}

std::vector<std::complex<double>> CentreState::orthonormal_coefficients() const {
    std::vector<std::complex<double>> out(amps_.size());
    for (std::size_t r = 0; r < amps_.size(); ++r) out[r] = amps_[r] * std::sqrt(plancherel(n_, r));
    return out;
}

CentreState CentreState::scaled(std::complex<double> s) const {
    std::vector<std::complex<double>> amps(amps_);
    for (auto &x : amps) x *= s;
    return CentreState(n_, std::nullopt, std::move(amps));
}

double CentreState::g_norm() const { return std::sqrt(g_inner(*this, *this).real()); }

std::complex<double> g_inner(const CentreState &a, const CentreState &b) {
    if (a.n() != b.n()) throw std::invalid_argument("g_inner: states of different n");
    std::complex<double> s = 0;
    const auto &x = a.projector_coefficients();
    const auto &y = b.projector_coefficients();
    for (std::size_t r = 0; r < x.size(); ++r) s += std::conj(x[r]) * y[r] * plancherel(a.n(), r);
    return s;
}

std::complex<double> g_inner_class_basis(const CentreState &a, const CentreState &b) {
    if (a.n() != b.n()) throw std::invalid_argument("g_inner: states of different n");
    auto x = a.class_coefficients();
    auto y = b.class_coefficients();
    const auto &labels = partitions(a.n());
    std::complex<double> s = 0;
    for (std::size_t mu = 0; mu < x.size(); ++mu) s += std::conj(x[mu]) * y[mu] * to_double(class_size(labels[mu]));
    return s;
}

Rational g_inner_exact(const CentreState &a, const CentreState &b) {
    if (a.n() != b.n()) throw std::invalid_argument("g_inner: states of different n");
    const auto &x = a.exact_projector_coefficients();
    const auto &y = b.exact_projector_coefficients();
    const auto &labels = partitions(a.n());
    Rational s = 0;
    for (std::size_t r = 0; r < x.size(); ++r) {
        const BigInt &d = dimension(labels[r]);
        s += x[r] * y[r] * Rational(d * d, factorial(a.n()));
    }
    return s;
}

}  // namespace symdetect
