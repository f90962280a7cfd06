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

#ifndef SYMDETECT_RANDOMIZED_H
#define SYMDETECT_RANDOMIZED_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "symdetect/numeric.h"
#include "symdetect/partition.h"
#include "symdetect/permutation.h"

namespace symdetect {

/// (d_R/n!) chi^R(gamma mu^{-1}).
Rational preg_entry(const Partition &r, const Permutation &gamma, const Permutation &mu);
/// 1 iff sigma tau^{-1} has cycle type [k, 1^{n-k}].
int tk_row_entry(const Permutation &sigma, const Permutation &tau, int k);

/// Vector supporting l2-norm sampling and norm reads.
class SampleQueryVector {
   public:
    virtual ~SampleQueryVector() = default;
    virtual std::size_t size() const = 0;
    /// Draws i with probability x_i^2 / |x|^2 and returns (i, x_i). One query.
    virtual std::pair<std::size_t, double> sample(std::mt19937_64 &rng) = 0;
    /// |x|^2. One query.
    virtual double norm_squared() = 0;
    std::int64_t queries() const { return queries_; }

   protected:
    std::int64_t queries_ = 0;
};

/// Vector supporting entry reads.
class QueryVector {
   public:
    virtual ~QueryVector() = default;
    virtual std::size_t size() const = 0;
    /// One query.
    virtual double entry(std::size_t i) = 0;
    std::int64_t queries() const { return queries_; }

   protected:
    std::int64_t queries_ = 0;
};

/// Explicit dense vector usable on either side.
class DenseVector : public SampleQueryVector, public QueryVector {
   public:
    explicit DenseVector(std::vector<double> values);
    std::size_t size() const override { return values_.size(); }
    std::pair<std::size_t, double> sample(std::mt19937_64 &rng) override;
    double norm_squared() override;
    double entry(std::size_t i) override;
    std::int64_t sample_queries() const { return SampleQueryVector::queries_; }
    std::int64_t entry_queries() const { return QueryVector::queries_; }

   private:
    std::vector<double> values_;
    std::discrete_distribution<std::size_t> dist_;
    double norm2_;
};

/// Column mu of D^reg(P_R), indexed by gamma's rank. Sampling draws a class
/// with weight |C| chi^2 and then a uniform member.
class ProjectorColumnOracle : public SampleQueryVector {
   public:
    ProjectorColumnOracle(const Partition &r, const Permutation &mu);
    std::size_t size() const override;
    std::pair<std::size_t, double> sample(std::mt19937_64 &rng) override;
    double norm_squared() override;
    /// Entry (gamma, mu); one query.
    Rational entry(const Permutation &gamma);
    /// (e, e): the diagonal entry is d_R^2/n! > 0. One query.
    std::pair<Permutation, Permutation> find_nonzero_entry();

   private:
    Partition r_;
    Permutation mu_;
    int n_;
    std::vector<double> class_value_;  // entry value on each class of gamma mu^{-1}
    std::discrete_distribution<std::size_t> class_dist_;
    double norm2_;
};

/// Row sigma of D^reg(T_k), indexed by tau's rank.
class CycleRowOracle : public QueryVector {
   public:
    CycleRowOracle(int n, int k, const Permutation &sigma);
    std::size_t size() const override;
    double entry(std::size_t tau_rank) override;

   private:
    int n_;
    int k_;
    Permutation sigma_;
    std::size_t target_class_;
};

struct SampleEstimate {
    double value = 0.0;
    double epsilon = 0.0;
    double delta = 0.0;
    std::int64_t queries = 0;
    std::int64_t samples = 0;
    std::int64_t groups = 0;
    std::int64_t samples_per_group = 0;
};

/// Median of 6 ceil(ln(1/delta)) means of ceil(9/epsilon^2) samples of
/// (y_i / x_i) |x|^2. Throws std::invalid_argument if |x| = 0.
SampleEstimate l2_inner_product(SampleQueryVector &x, QueryVector &y, double epsilon, double delta,
                                std::uint64_t seed);
/// The sample layout of l2_inner_product without drawing anything.
SampleEstimate l2_inner_product_plan(double epsilon, double delta);

enum class EpsilonRule {
    /// epsilon = 1/(|X| |Y|).
    kNormProduct,
    /// epsilon = X_e/(2 |X| |Y|): error at most 1/2 after dividing by
    /// X_e = d_R^2/n!, so nearest-integer rounding is exact.
    kRounding,
};

enum class SamplingMode {
    /// Every sample is drawn through the oracles one at a time.
    kPerSample,
    /// With sigma = mu = e the sample value depends only on the conjugacy
    /// class of the drawn index, so each group mean is drawn from the same
    /// multinomial over classes directly. The query ledger is unchanged.
    kClassAggregated,
};
const char *to_string(EpsilonRule rule);

double epsilon_norm_product(const Partition &r, int k);
double epsilon_rounding(const Partition &r, int k);

struct EigenvalueEstimate {
    int k = 0;
    std::int64_t rounded = 0;
    double raw = 0.0;  // estimate / X_e before rounding
    bool in_column = false;
    BigInt truth;
    SampleEstimate sample;
    /// sample.queries plus the find_nonzero_entry call and the X_e read.
    std::int64_t queries = 0;
    /// Same ledger for a single median-of-means group.
    std::int64_t queries_per_group = 0;
};

/// sigma = mu = e. Throws CapabilityError for n > 8.
EigenvalueEstimate estimate_eigenvalue(const Partition &r, int k, double delta, std::uint64_t seed,
                                       EpsilonRule rule = EpsilonRule::kRounding,
                                       SamplingMode mode = SamplingMode::kPerSample);

struct ClassicalDetection {
    int n = 0;
    Partition truth;
    std::optional<Partition> identified;
    std::vector<EigenvalueEstimate> per_k;
    int failures = 0;  // rounds whose rounded value is not a table entry
    std::int64_t query_total = 0;
    /// Per-group queries (the convention that drops the log(1/delta) factor).
    std::int64_t query_total_per_group = 0;
    /// sum_k n^k d_R^2/(k n!).
    double q_star_total = 0.0;
};

ClassicalDetection classical_detect(const Partition &r, double delta, std::uint64_t seed,
                                    EpsilonRule rule = EpsilonRule::kRounding,
                                    SamplingMode mode = SamplingMode::kPerSample);
std::string classical_detection_to_json(const std::vector<ClassicalDetection> &trials, double delta,
                                        std::uint64_t seed, EpsilonRule rule);

/// n^k d_R^2/(k n!).
double q_star(const Partition &r, int k);

struct DmaxBounds {
    double lower;
    double upper;
    BigInt actual;
    int one_dimensional;  // number of R with d_R = 1
};
/// Throws std::invalid_argument for n < 3.
DmaxBounds dmax_bounds(int n);

/// Planned query total for classical detection of r (no sampling performed).
std::int64_t classical_query_plan(const Partition &r, double delta, EpsilonRule rule, bool per_group);

}  // namespace symdetect

#endif  // SYMDETECT_RANDOMIZED_H
