// Copyright 2026 The hgcong Authors
// SPDX-License-Identifier: Apache-2.0
#include "hgc/datum.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <map>
#include <sstream>

#include "hgc/errors.hpp"
#include "hgc/padic.hpp"

namespace hgc {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<Rational> parse_list(std::string_view s) {
  std::vector<Rational> out;
  while (true) {
    auto comma = s.find(',');
    out.push_back(parse_rational(s.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

std::vector<Rational> fracs(std::initializer_list<std::pair<int, int>> xs) {
  std::vector<Rational> out;
  for (auto [a, b] : xs) out.emplace_back(a, b);
  for (auto& r : out) r.canonicalize();
  return out;
}

}  // namespace

Multiset make_multiset(std::vector<Rational> values) {
  for (auto& v : values) v.canonicalize();
  std::sort(values.begin(), values.end());
  return values;
}

HypergeometricDatum make_datum(std::vector<Rational> alpha, std::vector<Rational> beta,
                               Rational lambda, bool normalize) {
  if (alpha.empty() || alpha.size() != beta.size())
    throw ParseError("alpha and beta must be nonempty and of equal size");
  if (normalize) {
    for (auto& a : alpha) a = frac(a);
    for (auto& b : beta) b = b - Rational(ceil(b)) + 1;
  }
  lambda.canonicalize();
  return {make_multiset(std::move(alpha)), make_multiset(std::move(beta)), lambda};
}

std::optional<HypergeometricDatum> datum_alias(std::string_view name) {
  const auto h = fracs({{1, 2}});
  auto halves = [&](int k) { return std::vector<Rational>(k, h[0]); };
  auto ones = [](int k) { return std::vector<Rational>(k, Rational(1)); };
  auto cat = [](std::vector<Rational> a, const std::vector<Rational>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };
  const auto thirds = fracs({{1, 3}, {2, 3}});
  const auto sixths = fracs({{1, 6}, {5, 6}});
  if (name == "H1") return make_datum(cat(halves(4), thirds), cat(ones(4), sixths), 1);
  if (name == "H2") return make_datum(cat(halves(2), thirds), ones(4), 1);
  if (name == "H5") return make_datum(halves(5), ones(5), -1);
  if (name == "H6") return make_datum(halves(3), ones(3), 1);
  if (name == "H7") return make_datum(cat(halves(3), thirds), cat(ones(3), sixths), -1);
  if (name == "H8") return make_datum(cat(halves(1), thirds), ones(3), 1);
  return std::nullopt;
}

HypergeometricDatum parse_datum(std::string_view text) {
  std::string_view s = trim(text);
  if (auto alias = datum_alias(s)) return *alias;
  std::optional<std::vector<Rational>> alpha, beta;
  std::optional<Rational> lambda;
  while (!s.empty()) {
    auto semi = s.find(';');
    std::string_view field = trim(s.substr(0, semi));
    s = semi == std::string_view::npos ? std::string_view{} : s.substr(semi + 1);
    if (field.empty()) continue;
    auto eq = field.find('=');
    if (eq == std::string_view::npos) throw ParseError("expected key=value in '" + std::string(field) + "'");
    std::string_view key = trim(field.substr(0, eq));
    std::string_view value = field.substr(eq + 1);
    if (key == "alpha") {
      alpha = parse_list(value);
    } else if (key == "beta") {
      beta = parse_list(value);
    } else if (key == "lambda") {
      lambda = parse_rational(value);
    } else {
      throw ParseError("unknown datum key '" + std::string(key) + "'");
    }
  }
  if (!alpha || !beta) throw ParseError("datum needs alpha= and beta=");
  return make_datum(*alpha, *beta, lambda.value_or(Rational(1)));
}

std::string format_multiset(const Multiset& s) {
  std::ostringstream os;
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i].get_str();
  return os.str();
}

std::string format_datum(const HypergeometricDatum& d) {
  return "alpha=" + format_multiset(d.alpha) + "; beta=" + format_multiset(d.beta) +
         "; lambda=" + d.lambda.get_str();
}

Integer lcm_denominator(const Multiset& s) {
  Integer m = 1;
  for (const auto& r : s) m = lcm(m, r.get_den());
  return m;
}

Integer lcm_denominator(const HypergeometricDatum& d) {
  Integer m = lcm(lcm_denominator(d.alpha), lcm_denominator(d.beta));
  return lcm(m, d.lambda.get_den());
}

bool is_defined_over_Q(const Multiset& s) {
  // Galois stability: for each denominator d every unit residue mod d occurs
  // equally often among the numerators of fractional parts with denominator d.
  std::map<unsigned long, std::map<unsigned long, int>> counts;
  for (const auto& r : s) {
    Rational f = frac(r);
    unsigned long d = f.get_den().get_ui();
    counts[d][f.get_num().get_ui()] += 1;
  }
  for (const auto& [d, by_num] : counts) {
    int expected = -1;
    for (unsigned long u = 0; u < d; ++u) {
      if (std::gcd(u, d) != 1) continue;
      auto it = by_num.find(u);
      int c = it == by_num.end() ? 0 : it->second;
      if (expected < 0) expected = c;
      if (c != expected) return false;
    }
  }
  return true;
}

bool satisfies_diamond(const HypergeometricDatum& d) {
  for (const auto& a : d.alpha)
    if (a < 0 || a >= 1) return false;
  for (const auto& b : d.beta)
    if (b <= 0 || b > 1) return false;
  if (!is_defined_over_Q(d.alpha) || !is_defined_over_Q(d.beta)) return false;
  for (const auto& a : d.alpha)
    for (const auto& b : d.beta)
      if (Rational(a - b).get_den() == 1) return false;
  return true;
}

Multiset dash_image(const Multiset& s, std::uint64_t p) {
  std::vector<Rational> out;
  out.reserve(s.size());
  for (const auto& r : s) out.push_back(dash(r, p));
  return make_multiset(std::move(out));
}

bool prime_divides_level(const HypergeometricDatum& d, std::uint64_t p) {
  return mpz_divisible_ui_p(lcm_denominator(d).get_mpz_t(), p) != 0;
}

}  // namespace hgc
