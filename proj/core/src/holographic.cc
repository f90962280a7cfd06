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

#include "symdetect/holographic.h"

#include <cmath>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "symdetect/errors.h"

namespace symdetect {

FermionConfig FermionConfig::from_diagram(const Partition &r, int N) {
    if (r.length() > N) {
        throw std::invalid_argument("diagram " + r.to_string() + " has more than N = " + std::to_string(N) + " rows");
    }
    FermionConfig f;
    f.N = N;
    for (int i = 1; i <= N; ++i) f.energies.push_back(r.part(N - i) + i - 1);
    return f;
}

FermionConfig FermionConfig::from_energies(std::vector<std::int64_t> energies) {
    for (std::size_t i = 0; i < energies.size(); ++i) {
        if (energies[i] < 0 || (i > 0 && energies[i] <= energies[i - 1])) {
            throw std::invalid_argument("fermion energies must be non-negative and strictly increasing");
        }
    }
    FermionConfig f;
    f.N = static_cast<int>(energies.size());
    f.energies = std::move(energies);
    return f;
}

BigInt a_poly(int l, std::int64_t f) {
    if (l < 0 || f < 0) throw std::invalid_argument("a_poly: need l, f >= 0");
    BigInt s = 0;
    for (int r = 0; r <= l; ++r) s += binomial(l, r) * binomial(f, r) * (BigInt(1) << r);
    return factorial(l) * s;
}

std::vector<BigInt> casimir_sums(const FermionConfig &f, int lambda) {
    std::vector<BigInt> a(lambda + 1, BigInt(0));
    for (int l = 0; l <= lambda; ++l) {
        for (auto e : f.energies) a[l] += a_poly(l, e);
    }
    return a;
}

std::vector<BigInt> power_sums(const FermionConfig &f, int lambda) {
    std::vector<BigInt> m(lambda + 1, BigInt(0));
    for (auto e : f.energies) {
        BigInt p = 1;
        for (int k = 0; k <= lambda; ++k) {
            m[k] += p;
            p *= e;
        }
    }
    return m;
}

Rational JacobiCoeffTable::ptilde_at(int l, int m) const {
    if (m < 0) m = -m;
    if (l < 0 || l > lambda || m > l) return 0;
    return ptilde[l][m];
}

JacobiCoeffTable jacobi_coeffs(int lambda) {
    if (lambda < 0) throw std::invalid_argument("jacobi_coeffs: need lambda >= 0");
    JacobiCoeffTable t;
    t.lambda = lambda;
    for (int l = 0; l <= lambda; ++l) {
        std::vector<Rational> p(l + 1);
        for (int k = 0; k <= l; ++k) {
            Rational acc = 0;
            for (int m = k; m <= l; ++m) {
                Rational term(binomial(l, m) * binomial(m, k) * factorial(l + m), (BigInt(1) << m) * factorial(m));
                acc += (m % 2 ? -term : term);
            }
            acc /= Rational(factorial(l));
            p[k] = k % 2 ? Rational(-acc) : acc;
        }
        std::vector<Rational> pt(l + 1, Rational(0));
        for (int m = 0; m <= l; ++m) {
            for (int k = m; k <= l; k += 2) {
                pt[m] += p[k] / Rational(BigInt(1) << k) * Rational(binomial(k, (k + m) / 2));
            }
        }
        t.p.push_back(std::move(p));
        t.ptilde.push_back(std::move(pt));
    }
    return t;
}

double legendre(int l, double x) {
    if (l == 0) return 1.0;
    double p0 = 1.0, p1 = x;
    for (int k = 1; k < l; ++k) {
        double p2 = ((2.0 * k + 1.0) * x * p1 - k * p0) / (k + 1.0);
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

double hypergeometric_2f1_legendre(int l, double z) {
    // sum_j (-l)_j (l+1)_j / (j!)^2 z^j
    double term = 1.0, sum = 1.0;
    for (int j = 0; j < l; ++j) {
        term *= static_cast<double>(-l + j) * static_cast<double>(l + 1 + j) / ((j + 1.0) * (j + 1.0)) * z;
        sum += term;
    }
    return sum;
}

int profile_length(int lambda, bool pow2) {
    int len = 2 * lambda + 1;
    if (!pow2) return len;
    int p = 1;
    while (p < len) p <<= 1;
    return p;
}

std::vector<double> u_coefficients(const std::vector<BigInt> &a, double rho) {
    if (!(rho > 0)) throw std::invalid_argument("rho must be positive");
    std::vector<double> u(a.size());
    for (std::size_t l = 0; l < a.size(); ++l) {
        double sign = l % 2 ? -1.0 : 1.0;
        u[l] = sign * static_cast<double>(l + 1) * to_double(a[l]) / std::pow(rho, 2.0 * static_cast<double>(l) + 2.0);
    }
    return u;
}

GeometryProfile u_profile(const std::vector<BigInt> &a, double rho, int lambda, bool pow2) {
    if (lambda < 0 || static_cast<int>(a.size()) < lambda + 1) {
        throw std::invalid_argument("u_profile: need A_0..A_lambda");
    }
    std::vector<BigInt> head(a.begin(), a.begin() + lambda + 1);
    std::vector<double> u = u_coefficients(head, rho);
    GeometryProfile prof;
    prof.rho = rho;
    prof.lambda = lambda;
    const int len = profile_length(lambda, pow2);
    for (int j = 0; j < len; ++j) {
        double theta = std::numbers::pi * j / len;
        double x = std::cos(2.0 * theta);
        double v = 0;
        for (int l = 0; l <= lambda; ++l) v += u[l] * legendre(l, x);
        prof.theta.push_back(theta);
        prof.samples.push_back(v);
    }
    return prof;
}

GeometryProfile u_profile(const FermionConfig &f, double rho, int lambda, bool pow2) {
    return u_profile(casimir_sums(f, lambda), rho, lambda, pow2);
}

void direct_dft(std::vector<std::complex<double>> &data, OpCount &ops) {
    const std::size_t len = data.size();
    std::vector<std::complex<double>> out(len);
    for (std::size_t m = 0; m < len; ++m) {
        std::complex<double> s = 0;
        for (std::size_t j = 0; j < len; ++j) {
            double ang = -2.0 * std::numbers::pi * static_cast<double>((j * m) % len) / static_cast<double>(len);
            s += data[j] * std::polar(1.0, ang);
            ++ops.complex_mults;
        }
        out[m] = s;
    }
    data = std::move(out);
}

void fft_radix2(std::vector<std::complex<double>> &data, OpCount &ops) {
    const std::size_t len = data.size();
    if (len == 0 || (len & (len - 1)) != 0) {
        throw std::invalid_argument("fft_radix2: length must be a power of two");
    }
    for (std::size_t i = 1, j = 0; i < len; ++i) {
        std::size_t bit = len >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(data[i], data[j]);
    }
    for (std::size_t size = 2; size <= len; size <<= 1) {
        const double ang = -2.0 * std::numbers::pi / static_cast<double>(size);
        for (std::size_t start = 0; start < len; start += size) {
            for (std::size_t k = 0; k < size / 2; ++k) {
                std::complex<double> w = std::polar(1.0, ang * static_cast<double>(k));
                std::complex<double> a = data[start + k];
                std::complex<double> b = data[start + k + size / 2] * w;
                data[start + k] = a + b;
                data[start + k + size / 2] = a - b;
                ++ops.butterflies;
                ++ops.complex_mults;
            }
        }
    }
}

FourierExtraction dft_extract(const GeometryProfile &profile, TransformPath path) {
    const std::size_t len = profile.samples.size();
    const int lambda = profile.lambda;
    if (static_cast<int>(len) < 2 * lambda + 1) {
        throw std::invalid_argument("dft_extract: " + std::to_string(len) + " samples alias the coefficients up to m = " +
                                    std::to_string(lambda) + " (need at least 2 lambda + 1)");
    }
    if (profile.theta.size() != len) throw std::invalid_argument("dft_extract: theta grid missing");
    for (std::size_t j = 0; j < len; ++j) {
        if (std::abs(profile.theta[j] - std::numbers::pi * static_cast<double>(j) / static_cast<double>(len)) > 1e-12) {
            throw std::invalid_argument("dft_extract: samples are not on the grid theta_j = pi j / L");
        }
    }
    const bool pow2 = (len & (len - 1)) == 0;
    if (path == TransformPath::kFft && !pow2) {
        throw std::invalid_argument("dft_extract: FFT path needs a power-of-two sample count");
    }
    FourierExtraction out;
    out.used_fft = path == TransformPath::kFft || (path == TransformPath::kAuto && pow2);
    std::vector<std::complex<double>> data(profile.samples.begin(), profile.samples.end());
    if (out.used_fft) {
        fft_radix2(data, out.ops);
    } else {
        direct_dft(data, out.ops);
    }
    for (int m = 0; m <= lambda; ++m) {
        std::complex<double> c = data[m] / static_cast<double>(len);
        out.coefficients.push_back(c.real());
        out.max_imaginary = std::max(out.max_imaginary, std::abs(c.imag()));
    }
    return out;
}

namespace {

std::vector<double> back_substitute(const std::vector<double> &c, const JacobiCoeffTable &table, std::int64_t &ops) {
    const int lambda = static_cast<int>(c.size()) - 1;
    std::vector<std::vector<double>> pt(lambda + 1);
    for (int l = 0; l <= lambda; ++l) {
        for (int m = 0; m <= l; ++m) pt[l].push_back(to_double(table.ptilde[l][m]));
    }
    std::vector<double> u(lambda + 1, 0.0);
    for (int j = lambda; j >= 0; --j) {
        double s = c[j];
        for (int l = j + 1; l <= lambda; ++l) {
            s -= u[l] * pt[l][j];
            ++ops;
        }
        u[j] = s / pt[j][j];
        ++ops;
    }
    return u;
}

}  // namespace

USolve solve_U(const std::vector<double> &coefficients, const JacobiCoeffTable &table, double rho) {
    const int lambda = static_cast<int>(coefficients.size()) - 1;
    if (lambda < 0 || lambda > table.lambda) throw std::invalid_argument("solve_U: table too small");
    if (!(rho > 0)) throw std::invalid_argument("rho must be positive");
    USolve out;
    out.U = back_substitute(coefficients, table, out.ops);
    for (int l = 0; l <= lambda; ++l) {
        double sign = l % 2 ? -1.0 : 1.0;
        double a = sign * std::pow(rho, 2.0 * l + 2.0) * out.U[l] / (l + 1.0);
        double rounded = std::round(a);
        double residual = std::abs(a - rounded);
        if (!std::isfinite(a) || !(residual < 0.5) || std::abs(rounded) > 9.0e15) {
            throw NumericalError("solve_U: A_" + std::to_string(l) + " = " + std::to_string(a) +
                                 " cannot be rounded to an integer");
        }
        out.a_unrounded.push_back(a);
        out.a.emplace_back(static_cast<std::int64_t>(rounded));
        out.max_residual = std::max(out.max_residual, residual);
    }
    return out;
}

std::vector<std::vector<BigInt>> stirling_system(int lambda) {
    // Signed Stirling numbers of the first kind s(r, k).
    std::vector<std::vector<BigInt>> s(lambda + 1, std::vector<BigInt>(lambda + 1, BigInt(0)));
    s[0][0] = 1;
    for (int r = 0; r < lambda; ++r) {
        for (int k = 0; k <= r + 1; ++k) {
            BigInt v = -BigInt(r) * s[r][k];
            if (k > 0) v += s[r][k - 1];
            if (k <= lambda) s[r + 1][k] = v;
        }
    }
    std::vector<std::vector<BigInt>> c(lambda + 1, std::vector<BigInt>(lambda + 1, BigInt(0)));
    for (int l = 0; l <= lambda; ++l) {
        for (int k = 0; k <= l; ++k) {
            for (int r = k; r <= l; ++r) {
                c[l][k] += s[r][k] * (BigInt(1) << r) * (factorial(l) / factorial(r)) * binomial(l, r);
            }
        }
    }
    return c;
}

std::vector<BigInt> moments_from_casimirs(const std::vector<BigInt> &a) {
    if (a.empty() || a[0] < 1) throw std::invalid_argument("moments_from_casimirs: need A_0 >= 1");
    const int lambda = static_cast<int>(a.size()) - 1;
    auto c = stirling_system(lambda);
    std::vector<BigInt> m(lambda + 1);
    for (int l = 0; l <= lambda; ++l) {
        BigInt rest = a[l];
        for (int k = 0; k < l; ++k) rest -= c[l][k] * m[k];
        m[l] = exact_div(rest, c[l][l], "moments_from_casimirs");
    }
    return m;
}

std::vector<BigInt> casimirs_from_moments(const std::vector<BigInt> &m) {
    const int lambda = static_cast<int>(m.size()) - 1;
    auto c = stirling_system(lambda);
    std::vector<BigInt> a(lambda + 1, BigInt(0));
    for (int l = 0; l <= lambda; ++l) {
        for (int k = 0; k <= l; ++k) a[l] += c[l][k] * m[k];
    }
    return a;
}

int moment_cutoff(int n, int N) {
    if (N <= n) throw std::invalid_argument("moment_cutoff: need N > n");
    const auto &labels = partitions(n);
    if (labels.size() <= 1) return 1;
    std::vector<FermionConfig> configs;
    for (const auto &r : labels) configs.push_back(FermionConfig::from_diagram(r, N));
    for (int k = 1; k <= N; ++k) {
        std::map<std::vector<BigInt>, int> seen;
        bool distinct = true;
        for (const auto &f : configs) {
            auto m = power_sums(f, k);
            if (++seen[m] > 1) {
                distinct = false;
                break;
            }
        }
        if (distinct) return k;
    }
    throw ConsistencyError("power sums up to N failed to separate fermion configurations");
}

Partition recover_diagram(const std::vector<BigInt> &m, int n, int N) {
    if (m.empty()) throw std::invalid_argument("recover_diagram: no moments");
    const int k = static_cast<int>(m.size()) - 1;
    std::vector<Partition> hits;
    for (const auto &r : partitions(n)) {
        if (r.length() > N) continue;
        if (power_sums(FermionConfig::from_diagram(r, N), k) == m) hits.push_back(r);
    }
    if (hits.empty()) throw DetectionError("recover_diagram: inconsistent moments");
    if (hits.size() > 1) {
        throw std::invalid_argument("recover_diagram: moments up to " + std::to_string(k) +
                                    " do not separate the diagrams; raise lambda");
    }
    return hits.front();
}

RoundTrip holographic_roundtrip(const Partition &r, int N, int lambda, double rho) {
    const int n = r.weight();
    RoundTrip rt;
    rt.input = r;
    rt.N = N;
    rt.lambda = lambda < 0 ? moment_cutoff(n, N) : lambda;
    rt.rho = rho;
    FermionConfig f = FermionConfig::from_diagram(r, N);
    std::vector<BigInt> a = casimir_sums(f, rt.lambda);

    rt.profile = u_profile(a, rho, rt.lambda, false);
    rt.extraction = dft_extract(rt.profile, TransformPath::kDirect);
    FourierExtraction fft = dft_extract(u_profile(a, rho, rt.lambda, true), TransformPath::kFft);
    for (int m = 0; m <= rt.lambda; ++m) {
        rt.fft_dft_gap = std::max(rt.fft_dft_gap, std::abs(fft.coefficients[m] - rt.extraction.coefficients[m]));
    }
    USolve sol = solve_U(rt.extraction.coefficients, jacobi_coeffs(rt.lambda), rho);
    rt.a = sol.a;
    rt.a_residual = sol.max_residual;
    rt.m = moments_from_casimirs(rt.a);
    rt.recovered = recover_diagram(rt.m, n, N);
    return rt;
}

HolographicCost holographic_complexity_report(int lambda, double beta) {
    if (lambda < 1) throw std::invalid_argument("holographic_complexity_report: need lambda >= 1");
    if (!(beta >= 0)) throw std::invalid_argument("holographic_complexity_report: need beta >= 0");
    HolographicCost c;
    c.lambda = lambda;
    c.beta = beta;
    c.samples = profile_length(lambda, true);
    c.measurement_ops = static_cast<double>(lambda) * std::pow(static_cast<double>(lambda), beta);

    OpCount fft_ops, dft_ops;
    std::vector<std::complex<double>> data(c.samples, {1.0, 0.0});
    fft_radix2(data, fft_ops);
    c.fft_ops = fft_ops.butterflies;
    std::vector<std::complex<double>> small(profile_length(lambda, false), {1.0, 0.0});
    direct_dft(small, dft_ops);
    c.dft_ops = dft_ops.complex_mults;

    JacobiCoeffTable table;
    table.lambda = lambda;
    // Unit triangle: only the operation count matters here.
    for (int l = 0; l <= lambda; ++l) {
        table.ptilde.emplace_back(l + 1, Rational(1));
    }
    back_substitute(std::vector<double>(lambda + 1, 0.0), table, c.solve_ops);

    c.case_number = beta <= 1.0 ? 1 : 2;
    c.exponent = std::max(2.0, 1.0 + beta);
    double fft = static_cast<double>(c.fft_ops), solve = static_cast<double>(c.solve_ops);
    if (c.measurement_ops >= fft && c.measurement_ops >= solve) {
        c.dominant = "measurement";
    } else if (solve >= fft) {
        c.dominant = "solve";
    } else {
        c.dominant = "fft";
    }
    return c;
}

std::string profile_to_csv(const GeometryProfile &profile) {
    std::ostringstream out;
    out.precision(17);
    out << "theta,u\n";
    for (std::size_t j = 0; j < profile.samples.size(); ++j) out << profile.theta[j] << ',' << profile.samples[j] << '\n';
    return out.str();
}

}  // namespace symdetect
