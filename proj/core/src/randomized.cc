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

#include "symdetect/randomized.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "json_util.h"
#include "symdetect/centre.h"
#include "symdetect/characters.h"
#include "symdetect/errors.h"

namespace symdetect {

Rational preg_entry(const Partition &r, const Permutation &gamma, const Permutation &mu) {
    const int n = r.weight();
    Partition cls = (gamma * mu.inverse()).cycle_type();
    return Rational(dimension(r) * character(r, cls), factorial(n));
}

int tk_row_entry(const Permutation &sigma, const Permutation &tau, int k) {
    const int n = sigma.size();
    return (sigma * tau.inverse()).cycle_type() == cycle_class(n, k) ? 1 : 0;
}

DenseVector::DenseVector(std::vector<double> values) : values_(std::move(values)), norm2_(0.0) {
    std::vector<double> w;
    w.reserve(values_.size());
    for (double v : values_) {
        w.push_back(v * v);
        norm2_ += v * v;
    }
    if (norm2_ > 0) dist_ = std::discrete_distribution<std::size_t>(w.begin(), w.end());
}

std::pair<std::size_t, double> DenseVector::sample(std::mt19937_64 &rng) {
    ++SampleQueryVector::queries_;
    std::size_t i = dist_(rng);
    return {i, values_[i]};
}

double DenseVector::norm_squared() {
    ++SampleQueryVector::queries_;
    return norm2_;
}

double DenseVector::entry(std::size_t i) {
    ++QueryVector::queries_;
    return values_.at(i);
}

namespace {

void check_regular_size(int n) {
    if (n > 8) {
        throw CapabilityError("regular representation oracles are limited to n <= 8");
    }
}

}  // namespace

ProjectorColumnOracle::ProjectorColumnOracle(const Partition &r, const Permutation &mu)
    : r_(r), mu_(mu), n_(r.weight()), norm2_(0.0) {
    check_regular_size(n_);
    if (mu.size() != n_) throw std::invalid_argument("column permutation has the wrong degree");
    const auto &labels = partitions(n_);
    std::vector<double> weights;
    for (const auto &c : labels) {
        double v = to_double(Rational(dimension(r) * character(r, c), factorial(n_)));
        class_value_.push_back(v);
        double w = to_double(class_size(c)) * v * v;
        weights.push_back(w);
        norm2_ += w;
    }
    class_dist_ = std::discrete_distribution<std::size_t>(weights.begin(), weights.end());
}

std::size_t ProjectorColumnOracle::size() const { return SymmetricGroup::get(n_).order(); }

std::pair<std::size_t, double> ProjectorColumnOracle::sample(std::mt19937_64 &rng) {
    ++queries_;
    const auto &g = SymmetricGroup::get(n_);
    std::size_t c = class_dist_(rng);
    const auto &members = g.class_members(c);
    std::uniform_int_distribution<std::size_t> pick(0, members.size() - 1);
    std::size_t rho = members[pick(rng)];
    // gamma mu^{-1} = rho.
    std::size_t gamma = mu_.is_identity() ? rho : g.multiply(rho, mu_.rank());
    return {gamma, class_value_[c]};
}

double ProjectorColumnOracle::norm_squared() {
    ++queries_;
    return norm2_;
}

Rational ProjectorColumnOracle::entry(const Permutation &gamma) {
    ++queries_;
    return preg_entry(r_, gamma, mu_);
}

std::pair<Permutation, Permutation> ProjectorColumnOracle::find_nonzero_entry() {
    ++queries_;
    return {Permutation::identity(n_), Permutation::identity(n_)};
}

CycleRowOracle::CycleRowOracle(int n, int k, const Permutation &sigma)
    : n_(n), k_(k), sigma_(sigma), target_class_(partition_index(cycle_class(n, k))) {
    check_regular_size(n);
}

std::size_t CycleRowOracle::size() const { return SymmetricGroup::get(n_).order(); }

double CycleRowOracle::entry(std::size_t tau_rank) {
    ++queries_;
    const auto &g = SymmetricGroup::get(n_);
    std::size_t cls;
    if (sigma_.is_identity()) {
        cls = g.class_of(g.inverse(tau_rank));
    } else {
        cls = g.class_of(g.multiply(sigma_.rank(), g.inverse(tau_rank)));
    }
    return cls == target_class_ ? 1.0 : 0.0;
}

namespace {

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t h = v.size() / 2;
    return v.size() % 2 ? v[h] : 0.5 * (v[h - 1] + v[h]);
}

}  // namespace

SampleEstimate l2_inner_product_plan(double epsilon, double delta) {
    if (!(epsilon > 0) || !(delta > 0 && delta < 1)) {
        throw std::invalid_argument("l2_inner_product: need epsilon > 0 and 0 < delta < 1");
    }
    SampleEstimate e;
    e.epsilon = epsilon;
    e.delta = delta;
    e.groups = 6 * static_cast<std::int64_t>(std::ceil(std::log(1.0 / delta)));
    e.samples_per_group = static_cast<std::int64_t>(std::ceil(9.0 / (epsilon * epsilon)));
    e.samples = e.groups * e.samples_per_group;
    // One sampled index and one y read per sample, plus the norm read.
    e.queries = 2 * e.samples + 1;
    return e;
}

SampleEstimate l2_inner_product(SampleQueryVector &x, QueryVector &y, double epsilon, double delta,
                                std::uint64_t seed) {
    SampleEstimate e = l2_inner_product_plan(epsilon, delta);
    if (x.size() != y.size()) throw std::invalid_argument("l2_inner_product: vector sizes differ");
    const std::int64_t q0 = x.queries() + y.queries();
    const double norm2 = x.norm_squared();
    if (!(norm2 > 0)) throw std::invalid_argument("l2_inner_product: zero-norm x");
    std::mt19937_64 rng(seed);
    std::vector<double> means;
    means.reserve(static_cast<std::size_t>(e.groups));
    for (std::int64_t g = 0; g < e.groups; ++g) {
        double sum = 0;
        for (std::int64_t s = 0; s < e.samples_per_group; ++s) {
            auto [i, xi] = x.sample(rng);
            sum += y.entry(i) / xi * norm2;
        }
        means.push_back(sum / static_cast<double>(e.samples_per_group));
    }
    e.value = median(std::move(means));
    e.queries = x.queries() + y.queries() - q0;
    return e;
}

const char *to_string(EpsilonRule rule) {
    return rule == EpsilonRule::kNormProduct ? "norm_product" : "rounding";
}

namespace {

double x_norm(const Partition &r) {
    return std::sqrt(to_double(Rational(dimension(r) * dimension(r), factorial(r.weight()))));
}

double y_norm(int n, int k) { return std::sqrt(to_double(cycle_class_size(n, k))); }

/// Median-of-means where each group mean is drawn from the class multinomial.
double aggregated_estimate(const Partition &r, int k, const SampleEstimate &plan, std::uint64_t seed) {
    const int n = r.weight();
    const auto &labels = partitions(n);
    const std::size_t target = partition_index(cycle_class(n, k));
    const BigInt &d = dimension(r);
    double norm2 = 0;
    std::vector<double> prob, z;
    for (std::size_t c = 0; c < labels.size(); ++c) {
        double xc = to_double(Rational(d * character(r, labels[c]), factorial(n)));
        double w = to_double(class_size(labels[c])) * xc * xc;
        prob.push_back(w);
        norm2 += w;
        z.push_back(xc != 0 && c == target ? 1.0 / xc : 0.0);
    }
    for (std::size_t c = 0; c < prob.size(); ++c) {
        prob[c] /= norm2;
        z[c] *= norm2;
    }
    std::mt19937_64 rng(seed);
    std::vector<double> means;
    for (std::int64_t g = 0; g < plan.groups; ++g) {
        std::int64_t remaining = plan.samples_per_group;
        double rest = 1.0, sum = 0.0;
        for (std::size_t c = 0; c < prob.size() && remaining > 0; ++c) {
            std::int64_t cnt;
            if (c + 1 == prob.size() || prob[c] >= rest) {
                cnt = remaining;
            } else {
                std::binomial_distribution<std::int64_t> b(remaining, std::clamp(prob[c] / rest, 0.0, 1.0));
                cnt = b(rng);
            }
            sum += static_cast<double>(cnt) * z[c];
            remaining -= cnt;
            rest -= prob[c];
        }
        means.push_back(sum / static_cast<double>(plan.samples_per_group));
    }
    return median(std::move(means));
}

}  // namespace

double epsilon_norm_product(const Partition &r, int k) { return 1.0 / (x_norm(r) * y_norm(r.weight(), k)); }

double epsilon_rounding(const Partition &r, int k) {
    double xe = to_double(Rational(dimension(r) * dimension(r), factorial(r.weight())));
    return xe / (2.0 * x_norm(r) * y_norm(r.weight(), k));
}

EigenvalueEstimate estimate_eigenvalue(const Partition &r, int k, double delta, std::uint64_t seed, EpsilonRule rule,
                                       SamplingMode mode) {
    const int n = r.weight();
    check_regular_size(n);
    if (k < 2 || k > n) throw std::invalid_argument("estimate_eigenvalue: need 2 <= k <= n");
    const double eps = rule == EpsilonRule::kNormProduct ? epsilon_norm_product(r, k) : epsilon_rounding(r, k);

    ProjectorColumnOracle x(r, Permutation::identity(n));
    auto [gamma, mu] = x.find_nonzero_entry();
    const double xe = to_double(x.entry(gamma));
    CycleRowOracle y(n, k, mu);

    EigenvalueEstimate out;
    out.k = k;
    out.truth = normalized_character(r, k);
    if (mode == SamplingMode::kPerSample) {
        out.sample = l2_inner_product(x, y, eps, delta, seed);
        out.queries = x.queries() + y.queries();
    } else {
        out.sample = l2_inner_product_plan(eps, delta);
        out.sample.value = aggregated_estimate(r, k, out.sample, seed);
        out.queries = out.sample.queries + x.queries();
    }
    out.queries_per_group = 2 * out.sample.samples_per_group + (out.queries - 2 * out.sample.samples);
    out.raw = out.sample.value / xe;
    out.rounded = std::llround(out.raw);
    out.in_column = false;
    for (const auto &other : partitions(n)) {
        if (normalized_character(other, k) == out.rounded) {
            out.in_column = true;
            break;
        }
    }
    return out;
}

double q_star(const Partition &r, int k) {
    const int n = r.weight();
    const BigInt &d = dimension(r);
    return std::pow(static_cast<double>(n), k) * to_double(Rational(d * d, factorial(n))) / k;
}

ClassicalDetection classical_detect(const Partition &r, double delta, std::uint64_t seed, EpsilonRule rule,
                                    SamplingMode mode) {
    const int n = r.weight();
    check_regular_size(n);
    ClassicalDetection det;
    det.n = n;
    det.truth = r;
    const int kmax = k_star(n);
    std::vector<BigInt> values;
    bool all_in_column = true;
    for (int k = 2; k <= kmax; ++k) {
        const std::uint64_t round_seed = seed * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(k);
        EigenvalueEstimate est = estimate_eigenvalue(r, k, delta, round_seed, rule, mode);
        if (!est.in_column) {
            ++det.failures;
            all_in_column = false;
        }
        values.push_back(est.rounded);
        det.query_total += est.queries;
        det.query_total_per_group += est.queries_per_group;
        det.q_star_total += q_star(r, k);
        det.per_k.push_back(std::move(est));
    }
    if (all_in_column) det.identified = detection_table(n).lookup(values);
    return det;
}

std::int64_t classical_query_plan(const Partition &r, double delta, EpsilonRule rule, bool per_group) {
    const int n = r.weight();
    std::int64_t total = 0;
    for (int k = 2; k <= k_star(n); ++k) {
        double eps = rule == EpsilonRule::kNormProduct ? epsilon_norm_product(r, k) : epsilon_rounding(r, k);
        SampleEstimate plan = l2_inner_product_plan(eps, delta);
        // Plus find_nonzero_entry and the X_e read.
        total += per_group ? 2 * plan.samples_per_group + 3 : plan.queries + 2;
    }
    return total;
}

std::string classical_detection_to_json(const std::vector<ClassicalDetection> &trials, double delta,
                                        std::uint64_t seed, EpsilonRule rule) {
    using internal::Json;
    Json j;
    j["schema"] = "1";
    j["n"] = trials.empty() ? 0 : trials.front().n;
    j["truth"] = trials.empty() ? "" : trials.front().truth.to_string();
    j["delta"] = delta;
    j["seed"] = seed;
    j["epsilon_rule"] = to_string(rule);
    Json arr = Json::array();
    std::int64_t failures = 0, queries = 0, per_group = 0;
    double qstar = 0;
    for (const auto &t : trials) {
        Json x;
        x["identified"] = t.identified ? Json(t.identified->to_string()) : Json(nullptr);
        Json per_k = Json::array();
        for (const auto &e : t.per_k) {
            per_k.push_back({{"k", e.k},
                             {"queries", e.queries},
                             {"estimate", e.rounded},
                             {"raw", e.raw},
                             {"truth", internal::json_int(e.truth)},
                             {"epsilon", e.sample.epsilon}});
        }
        x["per_k"] = std::move(per_k);
        x["failures"] = t.failures;
        arr.push_back(std::move(x));
        if (!t.identified || !(*t.identified == t.truth)) ++failures;
        queries += t.query_total;
        per_group += t.query_total_per_group;
        qstar = t.q_star_total;
    }
    j["trials"] = std::move(arr);
    j["failures"] = failures;
    j["totals"] = {{"queries", queries}, {"queries_per_group", per_group}, {"q_star", qstar}};
    return j.dump(2) + "\n";
}

DmaxBounds dmax_bounds(int n) {
    if (n < 3) throw std::invalid_argument("dmax_bounds: need n >= 3");
    const double nf = to_double(factorial(n));
    const double p = static_cast<double>(partitions(n).size());
    DmaxBounds b{std::sqrt((nf - 2) / (p - 2)), std::sqrt(nf - 2), 0, 0};
    for (const auto &r : partitions(n)) {
        const BigInt &d = dimension(r);
        if (d > b.actual) b.actual = d;
        if (d == 1) ++b.one_dimensional;
    }
    if (b.one_dimensional != 2) throw ConsistencyError("expected exactly two one-dimensional irreps");
    return b;
}

}  // namespace symdetect
