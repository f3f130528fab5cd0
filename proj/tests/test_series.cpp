// Copyright 2026 The hgcong Authors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "hgc/datum.hpp"
#include "hgc/series.hpp"

using namespace hgc;

namespace {
Rational R(long n, long d = 1) { return ratio(n, d); }
}  // namespace

TEST_CASE("pochhammer") {
  CHECK(pochhammer(R(3, 7), 0) == 1);
  Integer fact = 1;
  for (unsigned long k = 1; k <= 10; ++k) {
    fact *= k;
    CHECK(pochhammer(1, k) == fact);
  }
  CHECK(pochhammer(R(1, 2), 3) == R(15, 8));
  CHECK(pochhammer(-2, 3) == 0);
}

TEST_CASE("truncated hypergeometric sums") {
  const auto d = make_datum({R(1, 2), R(1, 2)}, {1, 1}, 1);
  CHECK(truncated_F(d, 0) == 1);
  CHECK(truncated_F(d, 2) == R(89, 64));
  CHECK(truncated_F(make_datum({R(2, 5)}, {1}, 1), 1) == R(7, 5));
  CHECK(truncated_F(*datum_alias("H1"), 0) == 1);
}

TEST_CASE("p-adic sums agree with exact sums") {
  const auto h1 = *datum_alias("H1");
  const auto shifted = make_datum({R(1, 2), R(1, 2), R(1, 2), R(1, 2), R(1, 3), R(2, 3)},
                                  {1, 1, 1, 1, R(7, 6), R(5, 6)}, -1);
  for (u64 p : {5, 7, 11, 13, 31}) {
    for (unsigned long m : {1ul, 7ul, 23ul, 50ul}) {
      for (const auto& d : {h1, shifted}) {
        const Padic x = truncated_F_padic(d, m, p, 6);
        const Padic y = Padic::exact(truncated_F(d, m), p);
        CHECK((x - y).valuation() >= 6);
      }
    }
  }
}

TEST_CASE("the 7/6 shift gives a p-integral scaled sum") {
  const auto d = make_datum({R(1, 2), R(1, 2), R(1, 2), R(1, 2), R(1, 3), R(2, 3)},
                            {1, 1, 1, 1, R(7, 6), R(5, 6)}, 1);
  for (u64 p : {7, 11, 13}) {
    const Padic x = truncated_F_padic(d, p - 1, p, 6) * Padic::exact(static_cast<long>(p), p);
    CHECK(x.valuation() >= 0);
  }
}
