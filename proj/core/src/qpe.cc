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

#include "symdetect/qpe.h"

#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

#include "json_util.h"

namespace symdetect {

DiagonalUnitary::DiagonalUnitary(std::vector<double> phases) : phases_(std::move(phases)) {
    for (double p : phases_) {
        if (!(p >= 0.0 && p < 1.0)) {
            throw std::invalid_argument("diagonal unitary phases must lie in [0, 1)");
        }
    }
}

GateCounters &GateCounters::operator+=(const GateCounters &o) {
    cu_queries += o.cu_queries;
    hadamards += o.hadamards;
    controlled_rk += o.controlled_rk;
    return *this;
}

std::int64_t qpe_gate_count(int t) { return 2 * static_cast<std::int64_t>(t) + static_cast<std::int64_t>(t) * (t - 1) / 2; }

QpeState::QpeState(int t, std::vector<std::complex<double>> system) : t_(t), dim_(system.size()) {
    if (t <= 0 || t > 30) {
        throw std::invalid_argument("register size t must be in 1..30");
    }
    if (dim_ == 0) {
        throw std::invalid_argument("empty system state");
    }
    amps_.assign(register_size() * dim_, {0.0, 0.0});
    for (std::size_t s = 0; s < dim_; ++s) amps_[s] = system[s];
}

double QpeState::norm() const {
    double s = 0;
    for (const auto &a : amps_) s += std::norm(a);
    return std::sqrt(s);
}

void QpeState::apply_hadamard(int q) {
    const std::size_t mask = std::size_t{1} << bit_of(q);
    const double h = std::numbers::sqrt2 / 2.0;
    for (std::size_t l = 0; l < register_size(); ++l) {
        if (l & mask) continue;
        auto *a0 = &amps_[l * dim_];
        auto *a1 = &amps_[(l | mask) * dim_];
        for (std::size_t s = 0; s < dim_; ++s) {
            std::complex<double> x = a0[s], y = a1[s];
            a0[s] = (x + y) * h;
            a1[s] = (x - y) * h;
        }
    }
    ++counters_.hadamards;
}

void QpeState::apply_controlled_rk(int control, int target, int k, bool inverse) {
    const std::size_t mask = (std::size_t{1} << bit_of(control)) | (std::size_t{1} << bit_of(target));
    const double angle = (inverse ? -2.0 : 2.0) * std::numbers::pi / std::ldexp(1.0, k);
    const std::complex<double> w = std::polar(1.0, angle);
    for (std::size_t l = 0; l < register_size(); ++l) {
        if ((l & mask) != mask) continue;
        for (std::size_t s = 0; s < dim_; ++s) amps_[l * dim_ + s] *= w;
    }
    ++counters_.controlled_rk;
}

void QpeState::apply_swap(int q1, int q2) {
    if (q1 == q2) return;
    const std::size_t m1 = std::size_t{1} << bit_of(q1);
    const std::size_t m2 = std::size_t{1} << bit_of(q2);
    for (std::size_t l = 0; l < register_size(); ++l) {
        // Visit each pair once: bit q1 set, bit q2 clear.
        if (!(l & m1) || (l & m2)) continue;
        std::size_t other = (l & ~m1) | m2;
        for (std::size_t s = 0; s < dim_; ++s) std::swap(amps_[l * dim_ + s], amps_[other * dim_ + s]);
    }
}

std::vector<double> QpeState::register_distribution() const {
    std::vector<double> p(register_size(), 0.0);
    for (std::size_t l = 0; l < register_size(); ++l) {
        for (std::size_t s = 0; s < dim_; ++s) p[l] += std::norm(amps_[l * dim_ + s]);
    }
    return p;
}

void hadamard_layer(QpeState &state) {
    for (int q = 1; q <= state.t(); ++q) state.apply_hadamard(q);
}

void controlled_power_u(QpeState &state, const DiagonalUnitary &u, int j) {
    if (j < 0 || j >= state.t()) {
        throw std::invalid_argument("controlled_power_u: j out of range");
    }
    if (u.dim() != state.system_dim()) {
        throw std::invalid_argument("controlled_power_u: unitary and system dimensions differ");
    }
    std::vector<std::complex<double>> phase(u.dim());
    for (std::size_t s = 0; s < u.dim(); ++s) {
        // 2^j lambda is exact in binary; keep only its fractional part.
        double x = std::ldexp(u.phase(s), j);
        x -= std::floor(x);
        phase[s] = std::polar(1.0, 2.0 * std::numbers::pi * x);
    }
    const std::size_t mask = std::size_t{1} << j;
    auto &amps = state.amplitudes();
    const std::size_t d = state.system_dim();
    for (std::size_t l = 0; l < state.register_size(); ++l) {
        if (!(l & mask)) continue;
        for (std::size_t s = 0; s < d; ++s) amps[l * d + s] *= phase[s];
    }
    ++state.counters().cu_queries;
}

void qft(QpeState &state) {
    const int t = state.t();
    for (int q = 1; q <= t; ++q) {
        state.apply_hadamard(q);
        for (int k = 2; k <= t - q + 1; ++k) state.apply_controlled_rk(q + k - 1, q, k, false);
    }
    for (int q = 1; q <= t / 2; ++q) state.apply_swap(q, t + 1 - q);
}

void inverse_qft(QpeState &state) {
    const int t = state.t();
    for (int q = 1; q <= t / 2; ++q) state.apply_swap(q, t + 1 - q);
    for (int q = t; q >= 1; --q) {
        for (int k = t - q + 1; k >= 2; --k) state.apply_controlled_rk(q + k - 1, q, k, true);
        state.apply_hadamard(q);
    }
}

QpeOutcome qpe_run(const DiagonalUnitary &u, const std::vector<std::complex<double>> &system_state, int t) {
    if (t <= 0) {
        throw std::invalid_argument("qpe_run: t must be positive");
    }
    if (u.dim() != system_state.size()) {
        throw std::invalid_argument("qpe_run: unitary and system dimensions differ");
    }
    double norm2 = 0;
    for (const auto &a : system_state) norm2 += std::norm(a);
    if (std::abs(norm2 - 1.0) > 1e-9) {
        throw std::invalid_argument("qpe_run: system state is not normalized");
    }
    std::vector<std::size_t> support;
    std::vector<std::complex<double>> reduced;
    std::vector<double> phases;
    for (std::size_t s = 0; s < system_state.size(); ++s) {
        if (system_state[s] != std::complex<double>(0.0, 0.0)) {
            support.push_back(s);
            reduced.push_back(system_state[s]);
            phases.push_back(u.phase(s));
        }
    }
    DiagonalUnitary ur(std::move(phases));
    QpeState state(t, std::move(reduced));
    hadamard_layer(state);
    for (int j = 0; j < t; ++j) controlled_power_u(state, ur, j);
    inverse_qft(state);
    QpeOutcome out{t, state.register_distribution(), state.counters(), std::move(state), std::move(support),
                   system_state.size()};
    return out;
}

std::uint64_t sample_outcome(const std::vector<double> &distribution, std::mt19937_64 &rng) {
    std::discrete_distribution<std::uint64_t> dist(distribution.begin(), distribution.end());
    return dist(rng);
}

std::vector<std::complex<double>> collapse(const QpeOutcome &outcome, std::uint64_t m) {
    const auto &st = outcome.final_state;
    std::vector<std::complex<double>> full(outcome.system_dim, {0.0, 0.0});
    double norm2 = 0;
    for (std::size_t i = 0; i < outcome.support.size(); ++i) {
        auto a = st.amplitude(m, i);
        full[outcome.support[i]] = a;
        norm2 += std::norm(a);
    }
    // Anything this small is rounding residue of an outcome with amplitude zero.
    if (norm2 <= 1e-24) {
        throw std::invalid_argument("collapse: outcome has zero probability");
    }
    const double scale = 1.0 / std::sqrt(norm2);
    for (auto &a : full) a *= scale;
    return full;
}

double phase_encode(const BigInt &eigenvalue, const BigInt &chi_max, int t) {
    if (t <= 0 || t > 62) {
        throw std::invalid_argument("phase_encode: t out of range");
    }
    if (abs(eigenvalue) > chi_max) {
        throw std::invalid_argument("phase_encode: |eigenvalue| exceeds chi_max");
    }
    const BigInt modulus = BigInt(1) << t;
    if (modulus < 2 * chi_max + 2) {
        throw std::invalid_argument("phase_encode: register too small for chi_max " + chi_max.str());
    }
    BigInt e = eigenvalue % modulus;
    if (e < 0) e += modulus;
    return std::ldexp(e.convert_to<double>(), -t);
}

std::int64_t phase_decode(std::uint64_t m, int t) {
    const std::uint64_t modulus = std::uint64_t{1} << t;
    if (m >= modulus) {
        throw std::invalid_argument("phase_decode: register value out of range");
    }
    if (m < modulus / 2) return static_cast<std::int64_t>(m);
    return static_cast<std::int64_t>(m) - static_cast<std::int64_t>(modulus);
}

std::vector<ShotCount> sample_shots(const std::vector<double> &distribution, std::int64_t shots, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::discrete_distribution<std::uint64_t> dist(distribution.begin(), distribution.end());
    std::map<std::uint64_t, std::int64_t> counts;
    for (std::int64_t i = 0; i < shots; ++i) ++counts[dist(rng)];
    std::vector<ShotCount> out;
    for (const auto &[v, c] : counts) out.push_back({v, c});
    return out;
}

std::string shots_to_json(int t, const std::vector<ShotCount> &shots, const GateCounters &counters,
                          std::uint64_t seed) {
    internal::Json j;
    j["schema"] = "1";
    j["t"] = t;
    internal::Json outcomes = internal::Json::array();
    for (const auto &s : shots) outcomes.push_back({{"value", s.value}, {"count", s.count}});
    j["outcomes"] = std::move(outcomes);
    j["cu_queries"] = counters.cu_queries;
    j["total_gates"] = counters.total_gates();
    j["seed"] = seed;
    return j.dump(2) + "\n";
}

}  // namespace symdetect
