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

#include "symdetect/numeric.h"

#include <deque>
#include <limits>
#include <mutex>
#include <stdexcept>

#include "symdetect/errors.h"

namespace symdetect {

const BigInt &factorial(int n) {
    if (n < 0) {
        throw std::invalid_argument("factorial of a negative number");
    }
    static std::mutex mu;
    static std::deque<BigInt> cache{BigInt(1)};
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<int>(cache.size()) <= n) {
        BigInt next = cache.back() * static_cast<unsigned>(cache.size());
        cache.push_back(std::move(next));
    }
    return cache[n];
}

BigInt binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) {
        return 0;
    }
    if (k > n - k) {
        k = n - k;
    }
    BigInt r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

int bit_length(const BigInt &x) {
    if (x <= 0) {
        return 0;
    }
    return static_cast<int>(boost::multiprecision::msb(x)) + 1;
}

int ceil_log2(const BigInt &x) {
    if (x <= 1) {
        return 0;
    }
    return bit_length(BigInt(x - 1));
}

BigInt exact_div(const BigInt &num, const BigInt &den, const char *what) {
    BigInt q, r;
    boost::multiprecision::divide_qr(num, den, q, r);
    if (r != 0) {
        throw ConsistencyError(std::string(what) + ": inexact division " + num.str() + " / " + den.str());
    }
    return q;
}

double to_double(const BigInt &x) { return x.convert_to<double>(); }

double to_double(const Rational &x) { return x.convert_to<double>(); }

std::int64_t to_int64(const BigInt &x, const char *what) {
    if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min()) {
        throw CapabilityError(std::string(what) + ": value exceeds 64 bits");
    }
    return x.convert_to<std::int64_t>();
}

std::string to_string(const BigInt &x) { return x.str(); }

std::string to_string(const Rational &x) {
    if (denominator(x) == 1) {
        return numerator(x).str();
    }
    return numerator(x).str() + "/" + denominator(x).str();
}

std::size_t BigIntHash::operator()(const BigInt &x) const {
    // Low 64 bits of |x| mixed with the sign.
    BigInt a = abs(x);
    auto low = static_cast<std::uint64_t>(a & BigInt(std::numeric_limits<std::uint64_t>::max()));
    low ^= (x < 0 ? 0x9e3779b97f4a7c15ULL : 0);
    return std::hash<std::uint64_t>{}(low);
}

}  // namespace symdetect
