// Copyright (c) the bqs contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>

#include "bqs/lattice.hpp"

namespace bqs {

using BigInt = boost::multiprecision::cpp_int;
/// Exact rational with arbitrary-precision integer parts; always reduced,
/// denominator > 0. Used as the oracle arithmetic for factorial ratios.
using ExactRational = boost::multiprecision::cpp_rational;

/// Natural log of Gamma(x) for x > 0. Throws std::domain_error otherwise.
double log_gamma(double x);

/// log(m!) for m >= 0.
double log_factorial(std::int64_t m);

/// log(k!) = sum_i log(k_i!) for a multi-index.
double log_factorial_multi(const MultiIndex& k);

/// Exact m! as a big integer.
BigInt factorial_big(std::int64_t m);

/// Exact m! as a rational.
ExactRational exact_factorial(std::int64_t m);

/// Exact k! = prod_i k_i! for a multi-index.
BigInt factorial_big_multi(const MultiIndex& k);

/// Natural log of a positive big integer, accurate to double precision.
double log_big(const BigInt& x);

/// Natural log of a positive rational.
double log_exact(const ExactRational& q);

}  // namespace bqs
