// Copyright 2026 The hgcong Authors
// SPDX-License-Identifier: Apache-2.0
#include "hgc/series.hpp"

#include <algorithm>

#include "hgc/errors.hpp"

namespace hgc {

namespace {

void check_poles(const std::vector<Rational>& lower, unsigned long m) {
  for (const auto& b : lower) {
    if (b.get_den() == 1 && b <= 0 && -b < Rational(static_cast<long>(m))) {
      throw PoleError("lower parameter " + b.get_str() + " gives a zero denominator at k=" +
                      Rational(1 - b).get_str());
    }
  }
}

}  // namespace

Rational pochhammer(const Rational& a, unsigned long k) {
  Rational r = 1;
  for (unsigned long i = 0; i < k; ++i) r *= a + static_cast<long>(i);
  return r;
}

Rational series_sum(const std::vector<Rational>& upper, const std::vector<Rational>& lower,
                    const Rational& z, unsigned long m) {
  check_poles(lower, m);
  Rational sum = 0, term = 1;
  for (unsigned long k = 0; k <= m; ++k) {
    sum += term;
    if (k == m) break;
    Rational num = z, den = 1;
    for (const auto& a : upper) num *= a + static_cast<long>(k);
    for (const auto& b : lower) den *= b + static_cast<long>(k);
    if (num == 0) break;
    term *= num / den;
  }
  return sum;
}

Rational truncated_F(const HypergeometricDatum& d, unsigned long m) {
  return series_sum(d.alpha, d.beta, d.lambda, m);
}

Rational pFq(const std::vector<Rational>& upper, const std::vector<Rational>& lower,
             const Rational& z, unsigned long m) {
  std::vector<Rational> lo = lower;
  lo.emplace_back(1);
  return series_sum(upper, lo, z, m);
}

Padic series_sum_padic(const std::vector<Rational>& upper, const std::vector<Rational>& lower,
                       const Rational& z, unsigned long m, u64 p, int N, int guard) {
  check_poles(lower, m);
  for (const auto& x : upper)
    if (mpz_divisible_ui_p(x.get_den_mpz_t(), p)) throw InvalidPrime("p divides a parameter denominator");
  for (const auto& x : lower)
    if (mpz_divisible_ui_p(x.get_den_mpz_t(), p)) throw InvalidPrime("p divides a parameter denominator");
  const int rel = std::min(N + guard, max_digits(p));
  Padic term = Padic::from_unit(p, 0, 1, rel);
  Padic sum = term;
  const Padic zp = Padic::exact(z, p);
  for (unsigned long k = 0; k < m; ++k) {
    Rational num = 1, den = 1;
    for (const auto& a : upper) num *= a + static_cast<long>(k);
    for (const auto& b : lower) den *= b + static_cast<long>(k);
    if (num == 0 || z == 0) break;
    term = term * Padic::exact(num, p) / Padic::exact(den, p) * zp;
    sum = sum + term;
  }
  return sum;
}

Padic truncated_F_padic(const HypergeometricDatum& d, unsigned long m, u64 p, int N, int guard) {
  if (prime_divides_level(d, p))
    throw InvalidPrime("p=" + std::to_string(p) + " divides the level of the datum");
  return series_sum_padic(d.alpha, d.beta, d.lambda, m, p, N, guard);
}

}  // namespace hgc
