// Copyright 2026 The hgcong Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace hgc {

using Integer = mpz_class;
using Rational = mpq_class;

// n/d in lowest terms; d != 0.
Rational ratio(long n, long d);

// Accepts "n", "-n", "n/d" with optional surrounding whitespace.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

Integer floor(const Rational& r);
Integer ceil(const Rational& r);
// r - floor(r), in [0, 1).
Rational frac(const Rational& r);

// p-adic valuation; the argument must be nonzero.
int valuation(const Integer& n, std::uint64_t p);
int valuation(const Rational& r, std::uint64_t p);

Integer lcm(const Integer& a, const Integer& b);
Integer ipow(const Integer& base, unsigned long e);
Rational rpow(const Rational& base, long e);

// Fits in a signed 64-bit integer, else throws.
std::int64_t to_int64(const Integer& z);

}  // namespace hgc
