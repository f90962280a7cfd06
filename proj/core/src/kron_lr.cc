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

#include "symdetect/kron_lr.h"

#include <cmath>
#include <random>
#include <stdexcept>

#include "symdetect/centre.h"
#include "symdetect/characters.h"
#include "symdetect/errors.h"

namespace symdetect {

std::string triple_to_string(const Triple &t) {
    return t[0].to_string() + ";" + t[1].to_string() + ";" + t[2].to_string();
}

Triple parse_triple(std::string_view text) {
    Triple t;
    std::size_t start = 0;
    for (int i = 0; i < 3; ++i) {
        std::size_t end = text.find(';', start);
        if ((i < 2) == (end == std::string_view::npos)) {
            throw std::invalid_argument("expected three ';'-separated partitions in \"" + std::string(text) + "\"");
        }
        t[i] = Partition::parse(text.substr(start, end == std::string_view::npos ? text.npos : end - start));
        start = end + 1;
    }
    return t;
}

BigInt kronecker(const Partition &r1, const Partition &r2, const Partition &r3) {
    const int n = r1.weight();
    if (r2.weight() != n || r3.weight() != n) {
        throw std::invalid_argument("kronecker: diagrams of different size");
    }
    BigInt s = 0;
    for (const auto &mu : partitions(n)) {
        s += class_size(mu) * character(r1, mu) * character(r2, mu) * character(r3, mu);
    }
    BigInt c = exact_div(s, factorial(n), "kronecker");
    if (c < 0) throw ConsistencyError("kronecker: negative coefficient");
    return c;
}

std::vector<KroneckerTriple> kronecker_triples(int n, bool include_zero) {
    CharacterTable table(n);
    const std::size_t p = table.size();
    const auto &labels = table.labels();
    std::vector<KroneckerTriple> out;
    for (std::size_t a = 0; a < p; ++a) {
        for (std::size_t b = 0; b < p; ++b) {
            for (std::size_t c = 0; c < p; ++c) {
                BigInt s = 0;
                for (std::size_t mu = 0; mu < p; ++mu) {
                    s += table.class_size(mu) * table.at(a, mu) * table.at(b, mu) * table.at(c, mu);
                }
                BigInt coeff = exact_div(s, factorial(n), "kronecker");
                if (coeff < 0) throw ConsistencyError("kronecker: negative coefficient");
                if (coeff != 0 || include_zero) out.push_back({{labels[a], labels[b], labels[c]}, coeff});
            }
        }
    }
    return out;
}

BigInt dim_K(int n) {
    BigInt s = 0;
    for (const auto &t : kronecker_triples(n)) s += t.coefficient * t.coefficient;
    return s;
}

BigInt ribbon_count(int n) {
    BigInt s = 0;
    for (const auto &mu : partitions(n)) s += centralizer_order(mu);
    return s;
}

namespace {

TripleCentreState single_state(int n, int m, std::vector<Triple> basis, const Triple &target) {
    TripleCentreState st;
    st.n = n;
    st.m = m;
    st.amplitudes.assign(basis.size(), {0.0, 0.0});
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (basis[i] == target) st.amplitudes[i] = 1.0;
    }
    st.basis = std::move(basis);
    return st;
}

std::vector<EigenFamily> families_for(const TripleCentreState &state, const std::array<int, 3> &group_n) {
    std::vector<EigenFamily> fams(3);
    for (int i = 0; i < 3; ++i) {
        fams[i].group_n = group_n[i];
        for (const auto &t : state.basis) fams[i].labels.push_back(t[i]);
    }
    return fams;
}

TripleDetection detect_triple(const TripleCentreState &state, const std::array<int, 3> &group_n,
                              std::uint64_t seed, const char *what) {
    std::vector<std::complex<double>> amps(state.amplitudes);
    double norm2 = 0;
    for (const auto &a : amps) norm2 += std::norm(a);
    if (norm2 <= 0) throw std::invalid_argument(std::string(what) + ": zero state");
    for (auto &a : amps) a /= std::sqrt(norm2);

    std::mt19937_64 rng(seed);
    RoundsOutcome ro = run_detection_rounds(std::move(amps), families_for(state, group_n), rng);
    TripleDetection res;
    for (int i = 0; i < 3; ++i) res.labels[i] = lookup_family(group_n[i], ro.signatures[i], what);
    bool in_basis = false;
    for (const auto &t : state.basis) in_basis = in_basis || t == res.labels;
    if (!in_basis) {
        throw DetectionError(std::string(what) + ": decoded triple " + triple_to_string(res.labels) +
                             " has a zero coefficient");
    }
    res.transcript.n = state.n;
    res.transcript.seed = seed;
    res.transcript.rounds = std::move(ro.rounds);
    for (const auto &r : res.transcript.rounds) {
        res.transcript.query_total += r.counters.cu_queries;
        res.transcript.gate_total += r.counters.total_gates();
    }
    res.transcript.identified_label = triple_to_string(res.labels);
    return res;
}

std::vector<Triple> kron_basis(int n) {
    std::vector<Triple> basis;
    for (const auto &t : kronecker_triples(n)) basis.push_back(t.labels);
    return basis;
}

std::vector<Triple> lr_basis(int m, int n) {
    std::vector<Triple> basis;
    for (const auto &t : lr_triples(m, n)) basis.push_back(t.labels);
    return basis;
}

}  // namespace

TripleCentreState kron_projector_state(const Triple &t) {
    if (kronecker(t[0], t[1], t[2]) == 0) {
        throw std::invalid_argument("kron_projector_state: C(" + triple_to_string(t) + ") = 0");
    }
    const int n = t[0].weight();
    return single_state(n, 0, kron_basis(n), t);
}

TripleDetection kron_detect(const TripleCentreState &state, int n, std::uint64_t seed) {
    if (state.n != n) throw std::invalid_argument("kron_detect: state belongs to a different n");
    return detect_triple(state, {n, n, n}, seed, "not a Kronecker projector");
}

TensorElement kron_projector_brute(const Partition &r1, const Partition &r2, const Partition &r3) {
    const int n = r1.weight();
    if (n > TensorElement::kMaxN) {
        throw CapabilityError("kron_projector_brute: limited to n <= 5");
    }
    TensorElement coprod = TensorElement::coproduct(GroupAlgebraElement::projector(r3));
    TensorElement pair =
        TensorElement::product(GroupAlgebraElement::projector(r1), GroupAlgebraElement::projector(r2));
    return multiply(coprod, pair);
}

namespace {

/// Identity coefficient of P~: sum_sigma P3(sigma) P1(sigma^-1) P2(sigma^-1).
Rational identity_coefficient(const Triple &t) {
    const int n = t[0].weight();
    const auto &g = SymmetricGroup::get(n);
    const auto &labels = partitions(n);
    std::array<std::vector<Rational>, 3> p;
    for (int i = 0; i < 3; ++i) {
        for (const auto &mu : labels) {
            p[i].push_back(Rational(dimension(t[i]) * character(t[i], mu), factorial(n)));
        }
    }
    Rational s = 0;
    for (std::size_t x = 0; x < g.order(); ++x) {
        std::size_t xi = g.inverse(x);
        s += p[2][g.class_of(x)] * p[0][g.class_of(xi)] * p[1][g.class_of(xi)];
    }
    return s;
}

}  // namespace

TripleCentreState identity_expansion_state(int n) {
    if (n < 1 || n > 6) {
        throw CapabilityError("identity_expansion_state: limited to 1 <= n <= 6");
    }
    TripleCentreState st;
    st.n = n;
    st.basis = kron_basis(n);
    for (const auto &t : st.basis) {
        double amp;
        if (n <= 4) {
            TensorElement pt = kron_projector_brute(t[0], t[1], t[2]);
            Rational overlap = g_pair(pt, TensorElement::identity(n));
            Rational norm2 = g_pair(pt, pt);
            amp = to_double(overlap) / std::sqrt(to_double(norm2));
        } else {
            // P~ is a hermitian idempotent, so g(P~, P~) = g(P~, 1 x 1) = delta(P~).
            amp = std::sqrt(to_double(identity_coefficient(t)));
        }
        st.amplitudes.emplace_back(amp, 0.0);
    }
    return st;
}

IdentitySample identity_expansion_sample(int n, std::uint64_t seed) {
    TripleDetection d = kron_detect(identity_expansion_state(n), n, seed);
    return {d.labels, std::move(d.transcript)};
}

BigInt lr_coefficient(const Partition &r1, const Partition &r2, const Partition &r) {
    const int m = r1.weight(), n = r2.weight();
    if (r.weight() != m + n) {
        throw std::invalid_argument("lr_coefficient: |R| must equal |R1| + |R2|");
    }
    BigInt s = 0;
    for (const auto &mu1 : partitions(m)) {
        BigInt a = class_size(mu1) * character(r1, mu1);
        if (a == 0) continue;
        for (const auto &mu2 : partitions(n)) {
            s += a * class_size(mu2) * character(r2, mu2) * character(r, concatenate(mu1, mu2));
        }
    }
    BigInt g = exact_div(s, factorial(m) * factorial(n), "lr_coefficient");
    if (g < 0) throw ConsistencyError("lr_coefficient: negative coefficient");
    return g;
}

std::vector<LRTriple> lr_triples(int m, int n, bool include_zero) {
    std::vector<LRTriple> out;
    for (const auto &r1 : partitions(m)) {
        for (const auto &r2 : partitions(n)) {
            for (const auto &r : partitions(m + n)) {
                BigInt g = lr_coefficient(r1, r2, r);
                if (g != 0 || include_zero) out.push_back({{r1, r2, r}, g});
            }
        }
    }
    return out;
}

BigInt dim_A(int m, int n) {
    BigInt s = 0;
    for (const auto &t : lr_triples(m, n)) s += t.coefficient * t.coefficient;
    return s;
}

BigInt necklace_count(int m, int n) {
    // Burnside, class by class: the fixed points of gamma are its centralizer.
    BigInt s = 0;
    for (const auto &mu1 : partitions(m)) {
        for (const auto &mu2 : partitions(n)) {
            s += class_size(mu1) * class_size(mu2) * centralizer_order(concatenate(mu1, mu2));
        }
    }
    return exact_div(s, factorial(m) * factorial(n), "necklace_count");
}

TripleCentreState lr_projector_state(const Triple &t) {
    if (lr_coefficient(t[0], t[1], t[2]) == 0) {
        throw std::invalid_argument("lr_projector_state: g(" + triple_to_string(t) + ") = 0");
    }
    const int m = t[0].weight(), n = t[1].weight();
    return single_state(m + n, m, lr_basis(m, n), t);
}

TripleDetection lr_detect(const TripleCentreState &state, int m, int n, std::uint64_t seed) {
    if (state.n != m + n || state.m != m) throw std::invalid_argument("lr_detect: state belongs to different (m, n)");
    return detect_triple(state, {m, n, m + n}, seed, "not an LR projector");
}

}  // namespace symdetect
