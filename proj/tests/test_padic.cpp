// Copyright 2026 The hgcong Authors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "hgc/errors.hpp"
#include "hgc/padic.hpp"

using namespace hgc;

namespace {
Rational R(long n, long d = 1) { return ratio(n, d); }

// Morita's product for positive integers, as an exact integer.
Integer gamma_integer(long n, u64 p) {
  Integer out = n % 2 ? -1 : 1;
  for (long j = 1; j < n; ++j)
    if (j % static_cast<long>(p)) out *= j;
  return out;
}
}  // namespace

TEST_CASE("first digit") {
  for (u64 p : primes_in(3, 97)) CHECK(first_digit(R(-1, 2), p) == static_cast<int>((p - 1) / 2));
  for (u64 p : primes_in(5, 97)) {
    const long P = static_cast<long>(p);
    if (p % 3 == 1) CHECK(first_digit(R(-7, 6), p) == (P - 7) / 6);
    if (p % 3 == 2) CHECK(first_digit(R(-7, 6), p) == (5 * P - 7) / 6);
  }
  CHECK_THROWS_AS(first_digit(R(1, 7), 7), InvalidPrime);
}

TEST_CASE("dash") {
  for (u64 p : primes_in(5, 97)) {
    CHECK(dash(R(7, 6), p) == (p % 3 == 1 ? R(1, 6) : R(5, 6)));
    CHECK(dash(R(1, 2), p) == R(1, 2));
  }
  // p a' - a is the first digit of -a.
  for (u64 p : {5, 7, 11}) {
    for (long d = 1; d <= 12; ++d) {
      if (d % static_cast<long>(p) == 0) continue;
      for (long n = -15; n <= 15; ++n) {
        const Rational a = R(n, d);
        const Rational diff = Rational(static_cast<long>(p)) * dash(a, p) - a;
        CHECK(diff.get_den() == 1);
        CHECK(diff >= 0);
        CHECK(diff < static_cast<long>(p));
      }
    }
  }
}

TEST_CASE("a0") {
  CHECK(a0(1, 7) == 1);
  CHECK(a0(0, 7) == 7);
  CHECK(a0(R(1, 2), 7) == 4);
  CHECK(a0(R(3, 5), 7) == first_digit(R(3, 5), 7));
}

TEST_CASE("padic arithmetic") {
  const u64 p = 5;
  const Padic third = Padic::from_rational(R(1, 3), p, 8);
  CHECK((third * Padic::exact(3, p)).residue(8) == 1);
  CHECK(Padic::exact(50, p).valuation() == 2);
  CHECK(Padic::exact(R(1, 25), p).valuation() == -2);
  const Padic x = Padic::from_rational(R(-7, 4), p, 6);
  CHECK(x.symmetric_residue(6) == reduce(R(-7, 4), pow_u64(p, 6)) - Integer(pow_u64(p, 6)));
  CHECK((x - x).is_zero());
  CHECK(Padic::from_rational(2, p, 4).pow(-1).residue(4) == reduce(R(1, 2), pow_u64(p, 4)));
  CHECK_THROWS(Padic::exact(1, 5) + Padic::exact(1, 7));
}

TEST_CASE("gamma_p values") {
  for (u64 p : primes_in(3, 97)) {
    CHECK(gamma_p(1, p, 4).symmetric_residue(4) == -1);
    CHECK(gamma_p(0, p, 4).symmetric_residue(4) == 1);
    const Padic half = gamma_p(R(1, 2), p, 5);
    CHECK((half * half).symmetric_residue(5) == (((p + 1) / 2) % 2 ? -1 : 1));
  }
  for (u64 p : {5, 7, 11})
    for (long n = 1; n < 40; ++n) {
      const u64 mod = pow_u64(p, 4);
      CHECK(gamma_p(n, p, 4).residue(4) == reduce(gamma_integer(n, p), mod));
    }
}

TEST_CASE("gamma_p reflection and functional equation") {
  for (u64 p : {5, 7, 13, 31}) {
    for (long d = 1; d <= 12; ++d) {
      if (d % static_cast<long>(p) == 0) continue;
      for (long n = 0; n < d; ++n) {
        const Rational x = R(n, d);
        const Padic lhs = gamma_p(x, p, 4) * gamma_p(1 - x, p, 4);
        CHECK(lhs.symmetric_residue(4) == (a0(x, p) % 2 ? -1 : 1));
        const Padic step = gamma_p(x + 1, p, 4);
        const Padic factor = first_digit(x, p) == 0 ? Padic::exact(-1, p) : Padic::exact(-x, p);
        CHECK((step - factor * gamma_p(x, p, 4)).with_precision(4).is_zero());
      }
    }
  }
}

TEST_CASE("teichmuller") {
  for (u64 p : primes_in(3, 31)) {
    for (int N = 1; N <= 6; ++N) {
      CHECK(teichmuller(1, p, N).residue(N) == 1);
      CHECK(teichmuller(Integer(p - 1), p, N).symmetric_residue(N) == -1);
      for (u64 a = 1; a < p; ++a) {
        const Padic w = teichmuller(Integer(a), p, N);
        CHECK(w.pow(static_cast<long>(p - 1)).residue(N) == 1);
        CHECK(w.residue(1) == a);
      }
    }
  }
}

TEST_CASE("primes") {
  CHECK(primes_in(7, 31) == std::vector<u64>{7, 11, 13, 17, 19, 23, 29, 31});
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(91));
}
