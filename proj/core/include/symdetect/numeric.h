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

#ifndef SYMDETECT_NUMERIC_H
#define SYMDETECT_NUMERIC_H

#include <cstdint>
#include <cstddef>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace symdetect {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// n! with a process-wide cache.
const BigInt &factorial(int n);

BigInt binomial(std::int64_t n, std::int64_t k);

/// Number of bits needed to write x >= 0, i.e. floor(log2 x) + 1 (0 for x = 0).
int bit_length(const BigInt &x);

/// Smallest t with 2^t >= x (x >= 1).
int ceil_log2(const BigInt &x);

/// Exact quotient; throws ConsistencyError if den does not divide num.
BigInt exact_div(const BigInt &num, const BigInt &den, const char *what);

double to_double(const BigInt &x);
double to_double(const Rational &x);
std::int64_t to_int64(const BigInt &x, const char *what);

std::string to_string(const BigInt &x);
std::string to_string(const Rational &x);

struct BigIntHash {
    std::size_t operator()(const BigInt &x) const;
};

}  // namespace symdetect

#endif  // SYMDETECT_NUMERIC_H
