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

#include "symdetect/detection.h"

#include <cmath>
#include <stdexcept>

#include "json_util.h"
#include "symdetect/errors.h"

namespace symdetect {

CentreState bob_prepare(const Partition &r) {
    const int n = r.weight();
    const BigInt &d = dimension(r);
    // |P_R|_g^2 = d_R^2 / n!.
    const double scale = std::sqrt(to_double(factorial(n))) / to_double(d);
    std::vector<std::complex<double>> a(partitions(n).size(), {0.0, 0.0});
    a[partition_index(r)] = scale;
    return CentreState::from_projector_coefficients(n, std::move(a));
}

int t_bits(int n, int k) {
    if (k < 2 || k > n) {
        throw std::invalid_argument("t_bits: need 2 <= k <= n");
    }
    return ceil_log2(2 * cycle_class_size(n, k) + 2);
}

std::string transcript_to_json(const DetectionTranscript &tr) {
    internal::Json j;
    j["schema"] = "1";
    j["n"] = tr.n;
    j["true_label"] = tr.true_label ? internal::Json(*tr.true_label) : internal::Json(nullptr);
    j["identified_label"] = tr.identified_label;
    internal::Json rounds = internal::Json::array();
    for (const auto &r : tr.rounds) {
        internal::Json x;
        x["family"] = r.family;
        x["group_n"] = r.group_n;
        x["k"] = r.k;
        x["t"] = r.t;
        x["value"] = r.register_value;
        x["measured"] = r.measured;
        x["probability"] = r.measured_probability;
        x["cu_queries"] = r.counters.cu_queries;
        x["total_gates"] = r.counters.total_gates();
        rounds.push_back(std::move(x));
    }
    j["rounds"] = std::move(rounds);
    j["query_total"] = tr.query_total;
    j["gate_total"] = tr.gate_total;
    j["seed"] = tr.seed;
    return j.dump(2) + "\n";
}

RoundsOutcome run_detection_rounds(std::vector<std::complex<double>> system, const std::vector<EigenFamily> &families,
                                   std::mt19937_64 &rng) {
    RoundsOutcome out;
    for (std::size_t f = 0; f < families.size(); ++f) {
        const auto &fam = families[f];
        if (fam.labels.size() != system.size()) {
            throw std::invalid_argument("family labels do not match the system dimension");
        }
        out.signatures.emplace_back();
        if (fam.group_n < 2) {
            continue;  // a single diagram; nothing to measure
        }
        const int kmax = k_star(fam.group_n);
        for (int k = 2; k <= kmax; ++k) {
            const int t = t_bits(fam.group_n, k);
            const BigInt bound = cycle_class_size(fam.group_n, k);
            std::vector<double> phases(system.size());
            for (std::size_t s = 0; s < system.size(); ++s) {
                phases[s] = phase_encode(normalized_character(fam.labels[s], k), bound, t);
            }
            QpeOutcome qo = qpe_run(DiagonalUnitary(std::move(phases)), system, t);
            std::uint64_t m = sample_outcome(qo.distribution, rng);
            RoundRecord rec;
            rec.family = static_cast<int>(f);
            rec.group_n = fam.group_n;
            rec.k = k;
            rec.t = t;
            rec.register_value = m;
            rec.measured = phase_decode(m, t);
            rec.measured_probability = qo.distribution[m];
            rec.counters = qo.counters;
            out.rounds.push_back(rec);
            out.signatures.back().push_back(rec.measured);
            system = collapse(qo, m);
        }
    }
    out.post_state = std::move(system);
    return out;
}

Partition lookup_family(int group_n, const std::vector<BigInt> &values, const char *what) {
    if (group_n < 2) {
        return partitions(group_n).front();
    }
    auto hit = detection_table(group_n).lookup(values);
    if (!hit) {
        std::string v;
        for (const auto &x : values) v += (v.empty() ? "" : ",") + x.str();
        throw DetectionError(std::string(what) + ": signature (" + v + ") of S_" + std::to_string(group_n) +
                             " is not in the table");
    }
    return *hit;
}

namespace {

void total_up(DetectionTranscript &tr) {
    tr.query_total = 0;
    tr.gate_total = 0;
    for (const auto &r : tr.rounds) {
        tr.query_total += r.counters.cu_queries;
        tr.gate_total += r.counters.total_gates();
    }
}

}  // namespace

DetectionResult alice_detect(const CentreState &state, int n, std::uint64_t seed) {
    if (state.n() != n) {
        throw std::invalid_argument("alice_detect: state belongs to a different n");
    }
    auto amps = state.orthonormal_coefficients();
    double norm2 = 0;
    for (const auto &a : amps) norm2 += std::norm(a);
    if (norm2 <= 0) {
        throw std::invalid_argument("alice_detect: zero state");
    }
    for (auto &a : amps) a /= std::sqrt(norm2);

    std::mt19937_64 rng(seed);
    RoundsOutcome ro = run_detection_rounds(std::move(amps), {EigenFamily{n, partitions(n)}}, rng);
    DetectionResult res;
    res.transcript.n = n;
    res.transcript.seed = seed;
    res.transcript.rounds = std::move(ro.rounds);
    total_up(res.transcript);
    res.label = lookup_family(n, ro.signatures[0], "not a projector state");
    res.transcript.identified_label = res.label.to_string();
    return res;
}

DetectionResult detect_projector(const Partition &r, std::uint64_t seed) {
    DetectionResult res = alice_detect(bob_prepare(r), r.weight(), seed);
    res.transcript.true_label = r.to_string();
    return res;
}

ComplexityReport complexity_report(int n) {
    ComplexityReport rep;
    rep.n = n;
    rep.k_star = k_star(n);
    for (int k = 2; k <= rep.k_star; ++k) {
        int t = t_bits(n, k);
        ComplexityRow row{k, t, t, qpe_gate_count(t)};
        rep.per_k.push_back(row);
        rep.query_total += row.queries;
        rep.gate_total += row.gates;
    }
    rep.circuit_total = rep.gate_total + rep.query_total;
    return rep;
}

}  // namespace symdetect
