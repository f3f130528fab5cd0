// Copyright 2026 The hgcong Authors
// SPDX-License-Identifier: Apache-2.0
#include "hgc/rational.hpp"

#include <cctype>

#include "hgc/errors.hpp"

namespace hgc {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  s = trim(s);
  std::size_t i = 0;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) throw ParseError("malformed number '" + std::string(whole) + "'");
  for (std::size_t j = i; j < s.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(s[j])))
      throw ParseError("malformed number '" + std::string(whole) + "'");
  }
  std::string digits(s.substr(s[0] == '+' ? 1 : 0));
  return Integer(digits, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  auto slash = s.find('/');
  Rational r;
  if (slash == std::string_view::npos) {
    r = Rational(parse_integer(s, text));
  } else {
    Integer num = parse_integer(s.substr(0, slash), text);
    Integer den = parse_integer(s.substr(slash + 1), text);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    r = Rational(num, den);
    r.canonicalize();
  }
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

Integer floor(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Integer ceil(const Rational& r) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Rational frac(const Rational& r) { return r - Rational(floor(r)); }

int valuation(const Integer& n, std::uint64_t p) {
  if (n == 0) throw Error("valuation of zero");
  Integer m = abs(n);
  int v = 0;
  while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
    mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
    ++v;
  }
  return v;
}

int valuation(const Rational& r, std::uint64_t p) {
  return valuation(Integer(r.get_num()), p) - valuation(Integer(r.get_den()), p);
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer ipow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Rational rpow(const Rational& base, long e) {
  if (e >= 0) {
    Rational r(ipow(base.get_num(), static_cast<unsigned long>(e)),
               ipow(base.get_den(), static_cast<unsigned long>(e)));
    r.canonicalize();
    return r;
  }
  if (base == 0) throw PoleError("zero to a negative power");
  return 1 / rpow(base, -e);
}

std::int64_t to_int64(const Integer& z) {
  if (!z.fits_slong_p()) throw Error("integer " + z.get_str() + " does not fit in 64 bits");
  return z.get_si();
}

Rational ratio(long n, long d) {
  Rational r(n);
  r /= Rational(d);
  return r;
}

}  // namespace hgc
