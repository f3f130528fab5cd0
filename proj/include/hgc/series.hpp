// Copyright 2026 The hgcong Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "hgc/datum.hpp"
#include "hgc/padic.hpp"

namespace hgc {

inline constexpr int kSeriesGuardDigits = 3;

Rational pochhammer(const Rational& a, unsigned long k);

// sum_{k=0}^{m} prod (u)_k / prod (l)_k z^k. The lower list carries its own
// trailing 1 when a k! is wanted.
Rational series_sum(const std::vector<Rational>& upper, const std::vector<Rational>& lower,
                    const Rational& z, unsigned long m);

// F(alpha, beta; lambda)_m, terms k = 0..m inclusive.
Rational truncated_F(const HypergeometricDatum& d, unsigned long m);

// Classical pFq(upper; lower; z) truncated at z^m, with the implicit k!.
Rational pFq(const std::vector<Rational>& upper, const std::vector<Rational>& lower,
             const Rational& z, unsigned long m);

// Same sums in Q_p. Every term is carried to relative precision N + guard, so
// the result is certified to absolute precision N + guard - (worst negative
// term valuation); the returned precision() reports exactly that.
Padic series_sum_padic(const std::vector<Rational>& upper, const std::vector<Rational>& lower,
                       const Rational& z, unsigned long m, u64 p, int N,
                       int guard = kSeriesGuardDigits);
Padic truncated_F_padic(const HypergeometricDatum& d, unsigned long m, u64 p, int N,
                        int guard = kSeriesGuardDigits);

}  // namespace hgc
