// Copyright (c) the bqs contributors
// SPDX-License-Identifier: Apache-2.0
#include "bqs/special.hpp"

#include <cmath>
#include <stdexcept>

namespace bqs {

double log_gamma(double x) {
    if (!(x > 0.0)) throw std::domain_error("log_gamma requires x > 0");
    int sign = 0;
    return ::lgamma_r(x, &sign);
}

double log_factorial(std::int64_t m) {
    if (m < 0) throw std::domain_error("factorial requires m >= 0");
    return log_gamma(static_cast<double>(m) + 1.0);
}

double log_factorial_multi(const MultiIndex& k) {
    double total = 0.0;
    for (int i = 0; i < k.dim(); ++i) total += log_factorial(k[i]);
    return total;
}

BigInt factorial_big(std::int64_t m) {
    if (m < 0) throw std::domain_error("factorial requires m >= 0");
    BigInt out = 1;
    for (std::int64_t i = 2; i <= m; ++i) out *= i;
    return out;
}

ExactRational exact_factorial(std::int64_t m) { return ExactRational(factorial_big(m)); }

BigInt factorial_big_multi(const MultiIndex& k) {
    BigInt out = 1;
    for (int i = 0; i < k.dim(); ++i) out *= factorial_big(k[i]);
    return out;
}

double log_big(const BigInt& x) {
    if (x <= 0) throw std::domain_error("log_big requires a positive integer");
    const unsigned bits = boost::multiprecision::msb(x);
    if (bits <= 62) {
        return static_cast<double>(
            std::log(static_cast<long double>(x.convert_to<std::uint64_t>())));
    }
    // Keep the top 63 bits, which a long double represents exactly.
    const unsigned shift = bits - 62;
    const std::uint64_t top = BigInt(x >> shift).convert_to<std::uint64_t>();
    const long double ln2 = 0.69314718055994530941723212145817656808L;
    return static_cast<double>(std::log(static_cast<long double>(top)) +
                               static_cast<long double>(shift) * ln2);
}

double log_exact(const ExactRational& q) {
    if (q <= 0) throw std::domain_error("log_exact requires a positive rational");
    return log_big(boost::multiprecision::numerator(q)) -
           log_big(boost::multiprecision::denominator(q));
}

}  // namespace bqs
