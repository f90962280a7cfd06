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

#ifndef SYMDETECT_HOLOGRAPHIC_H
#define SYMDETECT_HOLOGRAPHIC_H

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "symdetect/numeric.h"
#include "symdetect/partition.h"

namespace symdetect {

/// Strictly increasing non-negative fermion energies.
struct FermionConfig {
    int N = 0;
    std::vector<std::int64_t> energies;

    /// f_i = R_{N+1-i} + i - 1 (R padded with zeros). Throws
    /// std::invalid_argument if R has more than N rows.
    static FermionConfig from_diagram(const Partition &r, int N);
    /// Throws std::invalid_argument unless strictly increasing and >= 0.
    static FermionConfig from_energies(std::vector<std::int64_t> energies);
};

/// A^l(f) = l! sum_r C(l, r) C(f, r) 2^r.
BigInt a_poly(int l, std::int64_t f);

/// A_l = sum_f A^l(f), l = 0..lambda.
std::vector<BigInt> casimir_sums(const FermionConfig &f, int lambda);
/// M_k = sum_f f^k, k = 0..lambda.
std::vector<BigInt> power_sums(const FermionConfig &f, int lambda);

/// Legendre P_l: monomial coefficients p[l][k] (in x) and Fourier coefficients
/// ptilde[l][m] of P_l(cos 2 theta) in e^{2 i m theta}, m = 0..l (symmetric in m).
struct JacobiCoeffTable {
    int lambda = 0;
    std::vector<std::vector<Rational>> p;
    std::vector<std::vector<Rational>> ptilde;

    /// ptilde for any integer m (0 when |m| > l).
    Rational ptilde_at(int l, int m) const;
};
JacobiCoeffTable jacobi_coeffs(int lambda);

/// P_l(x) by the three-term recurrence.
double legendre(int l, double x);
/// 2F1(-l, l+1; 1; z) as a terminating series.
double hypergeometric_2f1_legendre(int l, double z);

struct GeometryProfile {
    double rho = 1.0;
    int lambda = 0;
    std::vector<double> theta;    // theta_j = pi j / L
    std::vector<double> samples;  // u(rho, theta_j)
};

/// Number of samples: 2 lambda + 1, or the next power of two when pow2.
int profile_length(int lambda, bool pow2);

/// U(l, rho) = (-1)^l (l+1) A_l / rho^{2l+2}.
std::vector<double> u_coefficients(const std::vector<BigInt> &a, double rho);
/// u = sum_l U(l, rho) P_l(cos 2 theta) sampled on L = profile_length points.
GeometryProfile u_profile(const std::vector<BigInt> &a, double rho, int lambda, bool pow2 = false);
GeometryProfile u_profile(const FermionConfig &f, double rho, int lambda, bool pow2 = false);

struct OpCount {
    std::int64_t complex_mults = 0;
    std::int64_t butterflies = 0;
};

enum class TransformPath { kAuto, kDirect, kFft };

struct FourierExtraction {
    std::vector<double> coefficients;  // C~_m, m = 0..lambda
    double max_imaginary = 0.0;
    bool used_fft = false;
    OpCount ops;
};

/// C~_m = (1/L) sum_j u(theta_j) e^{-2 pi i j m / L}. kAuto uses the radix-2
/// FFT when L is a power of two. Throws std::invalid_argument when
/// L < 2 lambda + 1 (aliased grid) or kFft is requested for other L.
FourierExtraction dft_extract(const GeometryProfile &profile, TransformPath path = TransformPath::kAuto);

/// In-place transforms with the forward sign e^{-2 pi i jm/L}. The FFT requires
/// a power-of-two length; both record their operation counts.
void direct_dft(std::vector<std::complex<double>> &data, OpCount &ops);
void fft_radix2(std::vector<std::complex<double>> &data, OpCount &ops);

struct USolve {
    std::vector<double> U;
    std::vector<double> a_unrounded;
    std::vector<BigInt> a;
    double max_residual = 0.0;
    std::int64_t ops = 0;
};
/// Back substitution from l = lambda down to 0, then rounding A_l. Throws
/// NumericalError if a residual reaches 0.5.
USolve solve_U(const std::vector<double> &coefficients, const JacobiCoeffTable &table, double rho);

/// c^l_k = sum_{r=k}^{l} s(r,k) 2^r l!/r! C(l,r), signed Stirling numbers.
std::vector<std::vector<BigInt>> stirling_system(int lambda);
/// Solves A_l = sum_k c^l_k M_k. Throws ConsistencyError on a non-integer M_k
/// and std::invalid_argument if A_0 < 1.
std::vector<BigInt> moments_from_casimirs(const std::vector<BigInt> &a);
std::vector<BigInt> casimirs_from_moments(const std::vector<BigInt> &m);

/// Smallest K for which (M_1..M_K) separates all R |- n at this N.
int moment_cutoff(int n, int N);

/// Matches M (indices 0..K) against every R |- n. Throws DetectionError if no
/// diagram matches, std::invalid_argument if more than one does.
Partition recover_diagram(const std::vector<BigInt> &m, int n, int N);

struct RoundTrip {
    Partition input;
    Partition recovered;
    int N = 0;
    int lambda = 0;
    double rho = 1.0;
    std::vector<BigInt> a;
    std::vector<BigInt> m;
    double a_residual = 0.0;
    double fft_dft_gap = 0.0;
    GeometryProfile profile;
    FourierExtraction extraction;
};
/// Diagram -> profile -> diagram. lambda < 0 selects moment_cutoff(n, N).
RoundTrip holographic_roundtrip(const Partition &r, int N, int lambda = -1, double rho = 1.0);

struct HolographicCost {
    int lambda = 0;
    double beta = 0.0;
    int samples = 0;
    double measurement_ops = 0.0;  // lambda * lambda^beta
    std::int64_t fft_ops = 0;
    std::int64_t dft_ops = 0;
    std::int64_t solve_ops = 0;
    int case_number = 0;  // 1: beta <= 1, 2: beta > 1
    double exponent = 0.0;
    std::string dominant;  // "solve" or "measurement" (or "fft")
};
HolographicCost holographic_complexity_report(int lambda, double beta);

std::string profile_to_csv(const GeometryProfile &profile);

}  // namespace symdetect

#endif  // SYMDETECT_HOLOGRAPHIC_H
