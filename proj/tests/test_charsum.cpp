// Copyright 2026 The hgcong Authors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <memory>
#include <random>

#include "hgc/charsum.hpp"
#include "hgc/datum.hpp"
#include "hgc/errors.hpp"
#include "hgc/modforms.hpp"
#include "hgc/profile.hpp"

using namespace hgc;

namespace {
Rational R(long n, long d = 1) { return ratio(n, d); }
const Rational h = R(1, 2);

Integer ap(const char* label, u64 p) {
  static CoefficientCache cache(default_fixture_dir());
  return fetch_ap(parse_label(label), p, cache);
}

bool agree(const CharSumValue& v, const Rational& x, int N) {
  REQUIRE(v.padic.has_value());
  return (*v.padic - Padic::exact(x, v.padic->prime())).valuation() >= N;
}

// alpha from cyclotomic blocks, beta padded with ones.
HypergeometricDatum random_datum(std::mt19937_64& rng) {
  static const std::vector<std::vector<Rational>> blocks{
      {h}, {R(1, 3), R(2, 3)}, {R(1, 4), R(3, 4)}, {R(1, 6), R(5, 6)}, {R(1, 5), R(2, 5), R(3, 5), R(4, 5)}};
  std::vector<Rational> alpha, beta;
  const int count = 1 + static_cast<int>(rng() % 3);
  for (int i = 0; i < count; ++i) {
    const auto& b = blocks[rng() % blocks.size()];
    alpha.insert(alpha.end(), b.begin(), b.end());
  }
  if (alpha.size() >= 4 && rng() % 2) {
    beta = {R(1, 3), R(2, 3)};
    if (std::count(alpha.begin(), alpha.end(), R(1, 3))) beta = {R(1, 4), R(3, 4)};
  }
  while (beta.size() < alpha.size()) beta.push_back(1);
  return make_datum(alpha, beta, rng() % 2 ? 1 : -1);
}
}  // namespace

TEST_CASE("finite fields") {
  const FiniteField f(5, 2);
  CHECK(f.q() == 25);
  CHECK(f.pow(f.generator(), 24) == 1);
  for (u64 k = 1; k < 24; ++k) CHECK(f.pow(f.generator(), k) != 1);
  for (u64 x = 1; x < 25; ++x) CHECK(f.exp(f.dlog(x)) == x);
  const FiniteField g(7, 3, 1, 1);
  CHECK(g.q() == 343);
  CHECK(g.modulus() != FiniteField(7, 3).modulus());
}

TEST_CASE("gauss sums") {
  for (auto [p, e] : {std::pair{7ul, 1}, std::pair{13ul, 1}, std::pair{5ul, 2}}) {
    const FiniteField f(p, e);
    const double q = static_cast<double>(f.q());
    const GaussSum g0 = gauss_sum_complex(f, 0, 128);
    CHECK(std::abs(g0.value.re.to_double() + 1) < 1e-20);
    CHECK(std::abs(g0.value.im.to_double()) < 1e-20);
    for (long j = 1; j < static_cast<long>(f.q() - 1); ++j) {
      const GaussSum g = gauss_sum_complex(f, j, 128);
      const GaussSum gm = gauss_sum_complex(f, static_cast<long>(f.q() - 1) - j, 128);
      CHECK(std::abs(norm2(g.value).to_double() - q) < 1e-15 * q);
      const Complex prod = g.value * gm.value;
      CHECK(std::abs(prod.re.to_double() - (j % 2 ? -q : q)) < 1e-15 * q);
      CHECK(std::abs(prod.im.to_double()) < 1e-15 * q);
    }
  }
}

TEST_CASE("H_p identities with modular forms") {
  const auto quartic = make_datum({h, h, h, h}, {1, 1, 1, 1}, 1);
  const auto sextic = make_datum({h, h, h, h, h, h}, {1, 1, 1, 1, 1, 1}, 1);
  for (u64 p : {7ul, 11ul, 13ul}) {
    const Integer P = static_cast<long>(p);
    const Rational expect4(ap("8.4.1.a", p) + P);
    CHECK(*hq_complex(quartic, p, 1).exact == expect4);
    CHECK(agree(hp_padic(quartic, p, 6), expect4, 6));
    const Rational expect6(ap("8.6.1.a", p) + ap("8.4.1.a", p) * P + legendre(-1, p) * P * P);
    CHECK(*hq_complex(sextic, p, 1).exact == expect6);
    CHECK(agree(hp_padic(sextic, p, 6), expect6, 6));
  }
  const auto h2 = *datum_alias("H2");
  for (u64 p : {7ul, 13ul, 19ul}) {
    const Integer P = static_cast<long>(p);
    const Rational expect(ap("36.4.1.a", p) + legendre(3, p) * P);
    CHECK(*hq_complex(h2, p, 1).exact == expect);
    CHECK(agree(hq_general(h2, p, 1, 6), expect, 6));
  }
}

TEST_CASE("choices of field data do not change H_q") {
  const auto h2 = *datum_alias("H2");
  const Rational base = *hq_complex(h2, 13, 1).exact;
  ComplexOptions opt;
  opt.generator_index = 1;
  CHECK(*hq_complex(h2, 13, 1, opt).exact == base);
  opt.additive_scale = 2;
  CHECK(*hq_complex(h2, 13, 1, opt).exact == base);
  const Rational sq = *hq_complex(h2, 5, 2).exact;
  ComplexOptions other;
  other.modulus_index = 1;
  CHECK(*hq_complex(h2, 5, 2, other).exact == sq);
}

TEST_CASE("gamma-vector form against the complex oracle for q = p^2") {
  const auto quartic = make_datum({h, h, h, h}, {1, 1, 1, 1}, 1);
  for (const auto& d : {*datum_alias("H2"), quartic, *datum_alias("H1")}) {
    for (u64 p : {5ul, 7ul}) {
      const CharSumValue cx = hq_complex(d, p, 2);
      CHECK(agree(hq_general(d, p, 2, 6), *cx.exact, 6));
    }
  }
}

TEST_CASE("random data: integrality and agreement of the three routes") {
  std::mt19937_64 rng(20261016);
  int tested = 0;
  while (tested < 50) {
    const auto d = random_datum(rng);
    if (!satisfies_diamond(d)) continue;
    const long M = lcm_denominator(d).get_si();
    for (u64 p : primes_in(7, 31)) {
      if (prime_divides_level(d, p)) continue;
      const int s = profile_at(d, p).s;
      const CharSumValue v = hp_padic(d, p, 5);
      CHECK(v.padic->valuation() >= -std::max(0, -s));
      CHECK((v.padic->with_precision(5) - hq_general(d, p, 1, 5).padic->with_precision(5)).valuation() >= 5 - std::max(0, -s));
      if ((p - 1) % M == 0) CHECK(agree(v, *hq_complex(d, p, 1).exact, 5 - std::max(0, -s)));
    }
    ++tested;
  }
}

TEST_CASE("rational recovery") {
  const Padic x = Padic::from_rational(R(-37, 25), 5, 8);
  CHECK(recover_rational(x, 2) == R(-37, 25));
}
