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

#ifndef SYMDETECT_KRON_LR_H
#define SYMDETECT_KRON_LR_H

#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "symdetect/bruteforce.h"
#include "symdetect/detection.h"
#include "symdetect/numeric.h"
#include "symdetect/partition.h"

namespace symdetect {

using Triple = std::array<Partition, 3>;

/// "R1;R2;R3".
std::string triple_to_string(const Triple &t);
/// Parses "R1;R2;R3". Throws std::invalid_argument naming the offending token.
Triple parse_triple(std::string_view text);

// ---------------------------------------------------------------------------
// Kronecker algebra K(n)

/// (1/n!) sum_mu |C_mu| chi^{R1}(mu) chi^{R2}(mu) chi^{R3}(mu).
BigInt kronecker(const Partition &r1, const Partition &r2, const Partition &r3);

struct KroneckerTriple {
    Triple labels;
    BigInt coefficient;
};

/// All triples of diagrams of n in lexicographic order of canonical indices;
/// zero coefficients are skipped unless include_zero.
std::vector<KroneckerTriple> kronecker_triples(int n, bool include_zero = false);

/// Sum over triples of C^2.
BigInt dim_K(int n);
/// Burnside count of diagonal conjugation orbits: sum_mu z_mu.
BigInt ribbon_count(int n);

/// State over a basis of triple projectors. amplitudes are in the orthonormal
/// basis.
struct TripleCentreState {
    int n = 0;  // for LR states: m + n
    int m = 0;  // LR only
    std::vector<Triple> basis;
    std::vector<std::complex<double>> amplitudes;
};

/// Single normalized triple projector. Throws std::invalid_argument if C = 0.
TripleCentreState kron_projector_state(const Triple &t);

struct TripleDetection {
    Triple labels;
    DetectionTranscript transcript;
};

/// Three families of rounds (one per tensor factor). Throws DetectionError
/// ("not a Kronecker projector").
TripleDetection kron_detect(const TripleCentreState &state, int n, std::uint64_t seed);

/// P~ = Delta(P_{R3}) (P_{R1} (x) P_{R2}), exact, n <= 5.
TensorElement kron_projector_brute(const Partition &r1, const Partition &r2, const Partition &r3);

/// The 1 (x) 1 state expanded over {P~ : C > 0}. Amplitude squared of each
/// triple is g(P~, 1 (x) 1) / g(1 (x) 1, 1 (x) 1), with the pairings taken by
/// brute force for n <= 4 and from the identity coefficient of P~ for n <= 6.
TripleCentreState identity_expansion_state(int n);

struct IdentitySample {
    Triple labels;
    DetectionTranscript transcript;
};
IdentitySample identity_expansion_sample(int n, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Littlewood-Richardson algebra A(m, n)

/// (1/(m! n!)) sum |C_mu1| |C_mu2| chi^R(mu1 u mu2) chi^{R1}(mu1) chi^{R2}(mu2).
BigInt lr_coefficient(const Partition &r1, const Partition &r2, const Partition &r);

struct LRTriple {
    Triple labels;  // (R1 |- m, R2 |- n, R |- m+n)
    BigInt coefficient;
};
std::vector<LRTriple> lr_triples(int m, int n, bool include_zero = false);

BigInt dim_A(int m, int n);
/// Burnside count of S_m x S_n conjugation orbits on S_{m+n}.
BigInt necklace_count(int m, int n);

/// Single normalized LR projector P^R_{R1,R2}. Throws if g = 0.
TripleCentreState lr_projector_state(const Triple &t);

/// Families for S_m, S_n and S_{m+n}. Throws DetectionError ("not an LR projector").
TripleDetection lr_detect(const TripleCentreState &state, int m, int n, std::uint64_t seed);

}  // namespace symdetect

#endif  // SYMDETECT_KRON_LR_H
