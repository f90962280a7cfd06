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

#ifndef SYMDETECT_DETECTION_H
#define SYMDETECT_DETECTION_H

#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "symdetect/centre.h"
#include "symdetect/partition.h"
#include "symdetect/qpe.h"

namespace symdetect {

/// Unit g-norm multiple of P_R.
CentreState bob_prepare(const Partition &r);

/// ceil(log2(2 |T_k| + 2)).
int t_bits(int n, int k);

struct RoundRecord {
    int family = 0;  // which tensor factor / subgroup (0 for plain centre detection)
    int group_n = 0;
    int k = 0;
    int t = 0;
    std::uint64_t register_value = 0;
    std::int64_t measured = 0;
    double measured_probability = 0.0;
    GateCounters counters;
};

struct DetectionTranscript {
    int n = 0;
    std::optional<std::string> true_label;
    std::string identified_label;
    std::vector<RoundRecord> rounds;
    std::int64_t query_total = 0;
    std::int64_t gate_total = 0;
    std::uint64_t seed = 0;
};

std::string transcript_to_json(const DetectionTranscript &transcript);

/// One commuting family of central operators T_k^{(f)} acting on a shared
/// basis. labels[s] is the S_{group_n} diagram carried by basis vector s.
struct EigenFamily {
    int group_n = 0;
    std::vector<Partition> labels;
};

struct RoundsOutcome {
    /// Decoded eigenvalues (T_2 .. T_{k*}) per family.
    std::vector<std::vector<BigInt>> signatures;
    std::vector<RoundRecord> rounds;
    /// System state after the last measurement.
    std::vector<std::complex<double>> post_state;
};

/// Runs QPE for k = 2 .. k_star(group_n) in every family in order, reusing the
/// post-measurement state between rounds.
RoundsOutcome run_detection_rounds(std::vector<std::complex<double>> system,
                                   const std::vector<EigenFamily> &families, std::mt19937_64 &rng);

/// Label lookup for a decoded family signature. Throws DetectionError.
Partition lookup_family(int group_n, const std::vector<BigInt> &values, const char *what);

struct DetectionResult {
    Partition label;
    DetectionTranscript transcript;
};

/// Identifies the projector carried by state. Throws DetectionError if the
/// decoded signature is not in the table ("not a projector state").
DetectionResult alice_detect(const CentreState &state, int n, std::uint64_t seed);

/// bob_prepare followed by alice_detect, with the true label recorded.
DetectionResult detect_projector(const Partition &r, std::uint64_t seed);

struct ComplexityRow {
    int k;
    int t;
    std::int64_t queries;
    std::int64_t gates;
};

struct ComplexityReport {
    int n = 0;
    int k_star = 0;
    std::vector<ComplexityRow> per_k;
    std::int64_t query_total = 0;
    std::int64_t gate_total = 0;
    /// gate_total plus the controlled-U queries.
    std::int64_t circuit_total = 0;
};

ComplexityReport complexity_report(int n);

}  // namespace symdetect

#endif  // SYMDETECT_DETECTION_H
