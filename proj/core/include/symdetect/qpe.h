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

#ifndef SYMDETECT_QPE_H
#define SYMDETECT_QPE_H

#include <complex>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "symdetect/numeric.h"

namespace symdetect {

/// diag(e^{2 pi i lambda_s}) with each lambda_s in [0, 1).
class DiagonalUnitary {
   public:
    explicit DiagonalUnitary(std::vector<double> phases);
    std::size_t dim() const { return phases_.size(); }
    const std::vector<double> &phases() const { return phases_; }
    double phase(std::size_t s) const { return phases_[s]; }

   private:
    std::vector<double> phases_;
};

struct GateCounters {
    std::int64_t cu_queries = 0;
    std::int64_t hadamards = 0;
    std::int64_t controlled_rk = 0;

    /// Hadamards plus controlled-R_k; the CU applications are queries and are
    /// tracked separately.
    std::int64_t total_gates() const { return hadamards + controlled_rk; }
    /// Every gate in the circuit including the CU queries.
    std::int64_t circuit_size() const { return total_gates() + cu_queries; }

    GateCounters &operator+=(const GateCounters &o);
};

/// 2t + t(t-1)/2.
std::int64_t qpe_gate_count(int t);

/// Joint amplitudes of a t-qubit register and a D-dimensional system.
/// Index l * D + s; register qubit 1 is the most significant bit of l.
class QpeState {
   public:
    /// Register |0...0> tensored with the given system vector.
    QpeState(int t, std::vector<std::complex<double>> system);

    int t() const { return t_; }
    std::size_t system_dim() const { return dim_; }
    std::size_t register_size() const { return std::size_t{1} << t_; }
    const std::vector<std::complex<double>> &amplitudes() const { return amps_; }
    std::vector<std::complex<double>> &amplitudes() { return amps_; }
    std::complex<double> amplitude(std::size_t l, std::size_t s) const { return amps_[l * dim_ + s]; }
    double norm() const;
    GateCounters &counters() { return counters_; }
    const GateCounters &counters() const { return counters_; }

    /// Hadamard on register qubit q (1 = most significant).
    void apply_hadamard(int q);
    /// Phase e^{+-2 pi i / 2^k} on amplitudes where qubits control and target are both 1.
    void apply_controlled_rk(int control, int target, int k, bool inverse);
    /// Exchanges two register qubits. Wiring only, not counted as a gate.
    void apply_swap(int q1, int q2);

    /// Probability of each register value, summed over the system.
    std::vector<double> register_distribution() const;

   private:
    std::size_t bit_of(int q) const { return static_cast<std::size_t>(t_ - q); }
    int t_;
    std::size_t dim_;
    std::vector<std::complex<double>> amps_;
    GateCounters counters_;
};

/// One Hadamard on every register qubit.
void hadamard_layer(QpeState &state);
/// Applies U^{2^j} controlled by bit j of the register value (the qubit with
/// weight 2^j). Counts one query.
void controlled_power_u(QpeState &state, const DiagonalUnitary &u, int j);
/// Textbook QFT circuit: Hadamards and controlled-R_k followed by the qubit
/// order reversal.
void qft(QpeState &state);
void inverse_qft(QpeState &state);

struct QpeOutcome {
    int t = 0;
    std::vector<double> distribution;  // over register values 0 .. 2^t - 1
    GateCounters counters;
    /// Pre-measurement state over the simulated system components.
    QpeState final_state;
    /// Full-system index of each simulated component.
    std::vector<std::size_t> support;
    std::size_t system_dim = 0;
};

/// Full circuit: Hadamards, CU ladder j = 0..t-1, inverse QFT. Only system
/// components with nonzero weight are simulated. Throws std::invalid_argument
/// for t <= 0, a dimension mismatch, or a non-normalized system state.
QpeOutcome qpe_run(const DiagonalUnitary &u, const std::vector<std::complex<double>> &system_state, int t);

/// Draws a register value from an outcome distribution.
std::uint64_t sample_outcome(const std::vector<double> &distribution, std::mt19937_64 &rng);

/// System state after observing register value m, renormalized.
std::vector<std::complex<double>> collapse(const QpeOutcome &outcome, std::uint64_t m);

/// (e mod 2^t) / 2^t. Throws std::invalid_argument unless |e| <= chi_max and
/// 2^t >= 2 chi_max + 2.
double phase_encode(const BigInt &eigenvalue, const BigInt &chi_max, int t);
/// m if m < 2^{t-1}, else m - 2^t.
std::int64_t phase_decode(std::uint64_t m, int t);

struct ShotCount {
    std::uint64_t value;
    std::int64_t count;
};
std::vector<ShotCount> sample_shots(const std::vector<double> &distribution, std::int64_t shots,
                                    std::uint64_t seed);
std::string shots_to_json(int t, const std::vector<ShotCount> &shots, const GateCounters &counters,
                          std::uint64_t seed);

}  // namespace symdetect

#endif  // SYMDETECT_QPE_H
