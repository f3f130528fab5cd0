// Copyright 2026 The hgcong Authors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hgc/datum.hpp"
#include "hgc/errors.hpp"
#include "hgc/profile.hpp"

using namespace hgc;

namespace {
Rational R(long n, long d = 1) { return ratio(n, d); }
const Rational h = R(1, 2), t = R(1, 3), tt = R(2, 3), s6 = R(1, 6), ss = R(5, 6);

HypergeometricDatum example1() { return make_datum({h, h, h, h, t, tt}, {1, 1, 1, 1, s6, ss}, 1); }
HypergeometricDatum example2() { return make_datum({h, h, s6, ss}, {1, 1, t, tt}, 1); }
}  // namespace

TEST_CASE("nu") {
  for (u64 p : {5, 7, 13})
    for (long x = 0; x < static_cast<long>(p); ++x) CHECK(nu(0, x, p) == 0);
  CHECK(nu(6, 3, 7) == 1);
  CHECK(nu(3, 3, 7) == 0);
  CHECK_THROWS_AS(nu(7, 3, 7), Error);
}

TEST_CASE("Lemma on nu under dashing") {
  for (u64 p : primes_in(5, 31)) {
    const long P = static_cast<long>(p);
    for (long d = 2; d <= 12; ++d) {
      if (d % P == 0) continue;
      for (long n = 1; n < d; ++n) {
        const Rational a = R(n, d);
        if (a.get_num() % P == 0) continue;
        const Rational ad = dash(a, p);
        for (long k = 0; k < P; ++k) {
          const int inner = nu(k, (P - 1) * a, p);
          CHECK(nu(k, (P - 1) * ad, p) == nu(k, first_digit(-a - inner, p), p));
        }
      }
    }
  }
}

TEST_CASE("e on the bottom of example 1") {
  const auto d = example1();
  for (long k = 2; k <= 4; ++k) CHECK(e_function(d, 13, k) == -1);
  CHECK(e_function(d, 13, 0) == 0);
  CHECK(e_function(make_datum({h, t, tt}, {1, 1, 1}, 1), 7, 0) == 0);
}

TEST_CASE("profile shapes") {
  const Profile p1 = profile(example1());
  CHECK(p1.s == -1);
  CHECK(p1.w == 6);
  CHECK(p1.connected);
  REQUIRE(p1.bottom.size() == 1);
  CHECK(p1.bottom[0].lo == s6);
  CHECK(p1.bottom[0].hi == t);
  CHECK(p1.hat_alpha == example1().alpha);
  CHECK(p1.breve_beta == make_multiset({1, 1, 1, 1, R(7, 6), ss}));

  const Profile p2 = profile(example2());
  CHECK(p2.s == 0);
  CHECK(p2.w == 2);
  CHECK_FALSE(p2.connected);
  REQUIRE(p2.bottom.size() == 2);
  CHECK(p2.bottom[0].lo == 0);
  CHECK(p2.bottom[0].hi == s6);
  CHECK(p2.bottom[1].lo == t);
  CHECK(p2.bottom[1].hi == h);

  const Profile p3 = profile(make_datum({h, h, h, h, s6, ss}, {1, 1, 1, 1, t, tt}, 1));
  CHECK(p3.s == 0);
  CHECK(p3.w == 4);
  CHECK_FALSE(p3.connected);

  // beta all ones with 0 on the bottom: no shift.
  const Profile p4 = profile(make_datum({h, h, t, tt}, {1, 1, 1, 1}, 1));
  CHECK(p4.breve_beta == make_multiset({1, 1, 1, 1}));
}

TEST_CASE("prime profile agrees with the limiting profile") {
  for (const auto& d : {example1(), example2(), *datum_alias("H2")}) {
    const Profile lim = profile(d);
    for (u64 p : {13, 19, 31, 37}) {
      if (prime_divides_level(d, p) || (p - 1) % 6) continue;
      const PrimeProfile pp = profile_at(d, p);
      CHECK(pp.s == lim.s);
      CHECK(pp.w == lim.w);
      CHECK(pp.connected == lim.connected);
      CHECK(*std::min_element(pp.e.begin(), pp.e.end()) == pp.s);
    }
  }
}

TEST_CASE("parity of t") {
  for (u64 p : primes_in(5, 97)) {
    CHECK(t_sum(example1().beta, p) % 2 == 0);
    CHECK(t_sum({1, 1, 1, 1, 1}, p) == 5);
    for (const Rational& b : {R(1, 3), R(1, 4), R(1, 6), R(2, 5)}) {
      if (b.get_den() % p == 0) continue;
      CHECK(t_sum({1, b, 1 - b}, p) % 2 == 1);
    }
  }
}

TEST_CASE("csv and svg export") {
  const Profile p1 = profile(example1());
  const std::string csv = profile_csv(p1);
  CHECK(csv.rfind("x_start,x_end,e", 0) == 0);
  CHECK(csv.find("0.1666") != std::string::npos);
  const std::string svg = profile_svg(p1);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg == profile_svg(profile(example1())));

  const Profile flat = profile(make_datum({h}, {1}, 1));
  std::istringstream rows(profile_csv(flat));
  std::string line;
  int count = 0;
  while (std::getline(rows, line))
    if (!line.empty()) ++count;
  CHECK(count == static_cast<int>(flat.segments.size()) + 1);

  const auto path = std::filesystem::temp_directory_path() / "hgc_profile_test.svg";
  export_profile_plot(p1, PlotFormat::svg, path.string());
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == svg);
  std::filesystem::remove(path);
}
