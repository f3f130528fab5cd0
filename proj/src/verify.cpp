// Copyright 2026 The hgcong Authors
// SPDX-License-Identifier: Apache-2.0
#include "hgc/verify.hpp"

#include <algorithm>
#include <atomic>
#include <json.hpp>
#include <map>
#include <mutex>
#include <random>
#include <thread>

#include "hgc/charsum.hpp"
#include "hgc/errors.hpp"
#include "hgc/euler.hpp"
#include "hgc/profile.hpp"
#include "hgc/series.hpp"

namespace hgc {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    default: return "inconclusive";
  }
}

namespace {

Rational R(long n, long d = 1) { return ratio(n, d); }

Padic exact_p(const Rational& x, u64 p) { return Padic::exact(x, p); }

Rational p_pow(u64 p, long k) { return rpow(Rational(static_cast<unsigned long>(p)), k); }

std::string render(const Padic& x, int c) {
  if (!x.is_zero() && x.valuation() < 0) return x.str();
  if (x.precision() < c) return x.str();
  return x.symmetric_residue(c).get_str();
}

}  // namespace

CongruenceCheck compare_padic(const std::string& spec, const std::string& description, const Padic& lhs,
                              const Padic& rhs, int c) {
  CongruenceCheck out;
  out.spec = spec;
  out.description = description;
  out.p = lhs.prime();
  out.modulus_exp = c;
  out.precision = std::min(lhs.precision(), rhs.precision());
  out.lhs = render(lhs, c);
  out.rhs = render(rhs, c);
  if (out.precision < c) {
    out.verdict = Verdict::inconclusive;
    return out;
  }
  const Padic diff = lhs - rhs;
  out.verdict = diff.valuation() >= c ? Verdict::holds : Verdict::fails;
  return out;
}

std::string report_json(const std::vector<CongruenceCheck>& checks) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json j;
    j["spec"] = c.spec;
    j["p"] = c.p;
    j["modulus_exp"] = c.modulus_exp;
    j["verdict"] = to_string(c.verdict);
    j["lhs"] = c.lhs;
    j["rhs"] = c.rhs;
    j["precision"] = c.precision;
    arr.push_back(j);
  }
  return arr.dump(1) + "\n";
}

// ---- Dwork and unit roots ----

namespace {

HypergeometricDatum dashed(const HypergeometricDatum& d, u64 p) {
  return HypergeometricDatum{dash_image(d.alpha, p), d.beta, rpow(d.lambda, static_cast<long>(p))};
}

Padic F(const HypergeometricDatum& d, unsigned long m, u64 p, int N) { return truncated_F_padic(d, m, p, N); }

}  // namespace

CongruenceCheck check_dwork(const HypergeometricDatum& d, u64 p, int m, int s, int t, int c) {
  if (s < 1 || t < s || m < 1 || c < 1) throw Error("Dwork check needs t >= s >= 1, m >= 1, c >= 1");
  const HypergeometricDatum dd = dashed(d, p);
  const int target = c * s;
  const int N = target + 2;
  auto idx = [&](int e) { return static_cast<unsigned long>(m) * static_cast<unsigned long>(pow_u64(p, e)) - 1; };
  const Padic lhs = F(d, idx(s), p, N) * F(dd, idx(t - 1), p, N);
  const Padic rhs = F(dd, idx(s - 1), p, N) * F(d, idx(t), p, N);
  return compare_padic("dwork", format_datum(d), lhs, rhs, target);
}

UnitRoot unit_root_diagnostics(const HypergeometricDatum& d, u64 p, int N) {
  if (N < 1) throw Error("unit root precision must be positive");
  const HypergeometricDatum dd = dashed(d, p);
  const Padic f1 = F(d, p - 1, p, 2);
  if (f1.is_zero() || f1.valuation() > 0) throw NotApplicable("p is not ordinary for " + format_datum(d));
  UnitRoot out;
  for (int s = 1; s <= N; ++s) {
    const unsigned long top = static_cast<unsigned long>(pow_u64(p, s)) - 1;
    const unsigned long prev = static_cast<unsigned long>(pow_u64(p, s - 1)) - 1;
    out.by_s.push_back((F(d, top, p, s + 2) / F(dd, prev, p, s + 2)).with_precision(s));
  }
  for (int s = 1; s < N; ++s)
    if (!(out.by_s[s] - out.by_s[s - 1]).with_precision(s).is_zero()) out.stable_in_s = false;
  out.mu = out.by_s.back();
  const unsigned long top2 = 2 * static_cast<unsigned long>(pow_u64(p, N)) - 1;
  const unsigned long prev2 = 2 * static_cast<unsigned long>(pow_u64(p, N - 1)) - 1;
  const Padic mu2 = (F(d, top2, p, N + 2) / F(dd, prev2, p, N + 2)).with_precision(N);
  out.stable_in_m = (mu2 - out.mu).is_zero();
  return out;
}

Padic unit_root(const HypergeometricDatum& d, u64 p, int N) {
  UnitRoot u = unit_root_diagnostics(d, p, N);
  if (!u.stable_in_s || !u.stable_in_m) throw ConsistencyError("unit root approximations are not stable");
  return u.mu;
}

// ---- exact character sums ----

Integer exact_scaled_hp(const HypergeometricDatum& d, u64 p) {
  const HypergeometricDatum dn = make_datum(d.alpha, d.beta, d.lambda, true);
  const int scale = std::max(0, -profile(dn).s);
  const Integer value = power_sum(d, p, 1);
  const Padic scaled = exact_p(Rational(value), p);
  const Padic factor = exact_p(p_pow(p, scale), p);
  if (satisfies_diamond(dn)) {
    const int N = std::min(6, max_digits(p) - 2);
    const Padic gk = *hp_padic(d, p, N).padic * factor;
    if (!(gk - scaled).is_zero())
      throw ConsistencyError("Gamma_p and gamma-vector evaluations of H_p disagree at p=" + std::to_string(p));
  }
  const Integer M = lcm_denominator(dn);
  if (mpz_divisible_p(Integer(static_cast<unsigned long>(p - 1)).get_mpz_t(), M.get_mpz_t())) {
    const Rational hc = *hq_complex(d, p, 1).exact * p_pow(p, scale);
    if (hc != Rational(value))
      throw ConsistencyError("complex and p-adic evaluations of H_p disagree at p=" + std::to_string(p));
  }
  return value;
}

// ---- sequences ----

namespace {

HypergeometricDatum alias(const char* name) { return *datum_alias(name); }

Integer c1_full(const HypergeometricDatum& d, u64 p) { return -power_sum(d, p, 1); }

}  // namespace

Integer trace_combination(u64 p) {
  const EulerFactor f1 = reference_euler_factor(alias("H1"), p);
  const EulerFactor f2 = reference_euler_factor(alias("H2"), p);
  return -linear_coefficient(f1) + legendre(-3, p) * Integer(static_cast<unsigned long>(p)) * linear_coefficient(f2);
}

Integer compute_Ap(u64 p) {
  const Integer pp = static_cast<unsigned long>(p);
  return c1_full(alias("H5"), p) - pp * c1_full(alias("H6"), p) - legendre(-3, p) * pp * pp;
}

Integer compute_Bp(u64 p) {
  const Integer pp = static_cast<unsigned long>(p);
  return c1_full(alias("H7"), p) - pp * c1_full(alias("H8"), p) - legendre(3, p) * pp * pp;
}

// ---- catalog ----

bool PrimeFilter::admits(u64 p) const {
  if (p < min_p || !is_prime(p)) return false;
  return modulus == 0 || p % modulus == residue;
}

namespace {

HypergeometricDatum datum(std::vector<Rational> a, std::vector<Rational> b, long lambda) {
  return make_datum(std::move(a), std::move(b), Rational(lambda));
}

RhsTerm form(const std::string& label, long leg = 0, long coeff = 1, int pexp = 0) {
  RhsTerm t;
  t.kind = RhsTerm::Kind::form;
  t.label = label;
  t.legendre_arg = leg;
  t.coefficient = coeff;
  t.p_exponent = pexp;
  return t;
}

RhsTerm eta_form(const std::string& label) {
  RhsTerm t = form(label);
  t.source = RhsTerm::FormSource::eta_product;
  return t;
}

RhsTerm power(int k, long leg = 0, long coeff = 1) {
  RhsTerm t;
  t.kind = RhsTerm::Kind::p_power;
  t.p_exponent = k;
  t.legendre_arg = leg;
  t.coefficient = coeff;
  return t;
}

RhsTerm sequence(const std::string& name, long coeff) {
  RhsTerm t;
  t.kind = RhsTerm::Kind::sequence;
  t.label = name;
  t.coefficient = coeff;
  return t;
}

std::string frac_str(const Rational& r) { return to_string(r); }

std::vector<ConjectureSpec> build_catalog() {
  std::vector<ConjectureSpec> out;
  const Rational h = R(1, 2), t3 = R(1, 3), tt = R(2, 3);

  auto series = [&](std::string id, std::string group, std::string desc, HypergeometricDatum d, int scale,
                    std::vector<RhsTerm> rhs, int c, u64 min_p) {
    ConjectureSpec s;
    s.id = std::move(id);
    s.group = std::move(group);
    s.description = std::move(desc);
    s.datum = std::move(d);
    s.p_scale = scale;
    s.rhs = std::move(rhs);
    s.modulus_exp = c;
    s.filter.min_p = min_p;
    return s;
  };

  // Rigid Calabi-Yau 4F3 data, weight 4 forms read off the Euler factor.
  const std::vector<std::pair<Rational, Rational>> cy4f3 = {
      {R(1, 2), R(1, 2)}, {R(1, 2), R(1, 3)}, {R(1, 2), R(1, 4)}, {R(1, 2), R(1, 6)}, {R(1, 3), R(1, 3)},
      {R(1, 3), R(1, 4)}, {R(1, 3), R(1, 6)}, {R(1, 4), R(1, 4)}, {R(1, 4), R(1, 6)}, {R(1, 6), R(1, 6)},
      {R(1, 5), R(2, 5)}, {R(1, 8), R(3, 8)}, {R(1, 10), R(3, 10)}, {R(1, 12), R(5, 12)}};
  for (const auto& [r1, r2] : cy4f3) {
    HypergeometricDatum d = datum({r1, 1 - r1, r2, 1 - r2}, {1, 1, 1, 1}, 1);
    for (int m = 1; m <= 3; ++m) {
      RhsTerm ap = form("f_alpha");
      ap.source = RhsTerm::FormSource::euler_trace;
      ap.euler_datum = d;
      ConjectureSpec s = series("cy4f3." + frac_str(r1) + "," + frac_str(r2) + ".m" + std::to_string(m), "cy4f3",
                                "F(alpha,1^4;1)_{mp-1} = a_p(f_alpha) F_{m-1} mod p^3", d, 0, {ap}, 3, 7);
      s.m = m;
      out.push_back(s);
    }
  }

  const HypergeometricDatum sextic = datum({h, h, h, h, h, h}, {1, 1, 1, 1, 1, 1}, 1);
  out.push_back(series("mortenson", "mortenson", "6F5(1/2^6;1)_{p-1} = a_p(8.6.1.a) mod p^5", sextic, 0,
                       {eta_form("8.6.1.a")}, 5, 3));

  const HypergeometricDatum c1 = datum({h, h, h, h, t3, tt}, {1, 1, 1, 1, R(7, 6), R(5, 6)}, 1);
  {
    ConjectureSpec s = series("conj1.1", "conj1",
                              "p H_p = (2/p)a_p(64.6.1.f) + (-3/p)p a_p(36.4.1.a) + (3/p)p^2 exactly", c1, 1,
                              {form("64.6.1.f", 2), form("36.4.1.a", -3, 1, 1), power(2, 3)}, 0, 7);
    s.kind = ConjectureSpec::Kind::identity;
    out.push_back(s);
    s.id = "conj1.1-alt";
    s.description = "p H_p = (2/p)a_p(64.6.1.f) + (-3/p)p a_p(36.4.1.a) + (-3/p)p^2 exactly";
    s.rhs.back() = power(2, -3);
    out.push_back(s);
  }
  out.push_back(series("conj1.2", "conj1", "p 6F5(...;7/6,5/6)_{p-1} = (2/p)a_p(64.6.1.f) mod p^5", c1, 1,
                       {form("64.6.1.f", 2)}, 5, 7));

  {
    ConjectureSpec s;
    s.id = "minus2p";
    s.group = "minus2p";
    s.description = "-2p 6F5(...;1/6,5/6)_{p-1} = p 6F5(...;7/6,5/6)_{p-1} mod p";
    s.kind = ConjectureSpec::Kind::minus2p_relation;
    s.modulus_exp = 1;
    out.push_back(s);
    s.id = "minus2p-7f6";
    s.description = "7F6 with e=(1-p)/2 truncated at p-1 lies in Z_p";
    s.kind = ConjectureSpec::Kind::integrality_7f6;
    s.modulus_exp = 0;
    out.push_back(s);
  }

  out.push_back(series("conj3.1", "conj3.1", "p^2 6F5(1/2,1/2,1/3,2/3,1/3,2/3;...)_{p-1} = (-1/p)a_p(48.6.1.c) mod p^4",
                       datum({h, h, t3, tt, t3, tt}, {1, R(7, 6), R(5, 6), R(7, 6), R(5, 6), 1}, 1), 2,
                       {form("48.6.1.c", -1)}, 4, 7));

  const HypergeometricDatum c32 = datum({h, h, h, h, R(1, 6), R(5, 6)}, {1, 1, 1, 1, R(4, 3), tt}, 1);
  {
    ConjectureSpec s = series("conj3.2-identity", "conj3.2",
                              "H_p = (2/p)a_p(64.4.1.d) + (-3/p)a_p(72.4.1.b) + (3/p)p exactly", c32, 0,
                              {form("64.4.1.d", 2), form("72.4.1.b", -3), power(1, 3)}, 0, 5);
    s.kind = ConjectureSpec::Kind::identity;
    out.push_back(s);
  }
  out.push_back(series("conj3.2", "conj3.2", "6F5(...;4/3,2/3)_{p-1} = (2/p)a_p(64.4.1.d) mod p^3", c32, 0,
                       {form("64.4.1.d", 2)}, 3, 5));
  {
    ConjectureSpec s = series("conj3.2-dwork", "conj3.2", "Dwork congruence for the same datum mod p^{3s}, s=1, t=2",
                              c32, 0, {}, 3, 5);
    s.kind = ConjectureSpec::Kind::dwork;
    out.push_back(s);
  }

  auto f43 = [&](std::vector<Rational> a, Rational b1, Rational b2) { return datum(std::move(a), {1, b1, b2, 1}, 1); };
  out.push_back(series("4f3.1", "4f3", "p 4F3(1/2,1/2,1/3,2/3;1,5/4,3/4)_{p-1} = (3/p)a_p(48.4.1.c) mod p^3",
                       f43({h, h, t3, tt}, R(5, 4), R(3, 4)), 1, {form("48.4.1.c", 3)}, 3, 7));
  out.push_back(series("4f3.2", "4f3", "p 4F3(1/2,1/2,1/3,2/3;1,7/6,5/6)_{p-1} = (-1/p)a_p(48.4.1.c) mod p^3",
                       f43({h, h, t3, tt}, R(7, 6), R(5, 6)), 1, {form("48.4.1.c", -1)}, 3, 7));
  out.push_back(series("4f3.3", "4f3", "p 4F3(1/2,1/2,1/4,3/4;1,7/6,5/6)_{p-1} = a_p(48.4.1.c) mod p^3",
                       f43({h, h, R(1, 4), R(3, 4)}, R(7, 6), R(5, 6)), 1, {form("48.4.1.c")}, 3, 7));
  out.push_back(series("4f3.4", "4f3", "p 4F3(1/2^4;1,4/3,2/3)_{p-1} = a_p(24.4.1.a) mod p^3",
                       f43({h, h, h, h}, R(4, 3), tt), 1, {form("24.4.1.a")}, 3, 7));
  out.push_back(series("4f3.5", "4f3", "p 4F3(1/2^4;1,7/6,5/6)_{p-1} = a_p(12.4.1.a) mod p^3",
                       f43({h, h, h, h}, R(7, 6), R(5, 6)), 1, {form("12.4.1.a")}, 3, 7));
  out.push_back(series("4f3.6", "4f3", "p 4F3(1/2^4;1,5/4,3/4)_{p-1} = a_p(64.4.1.b) mod p^3 (as printed)",
                       f43({h, h, h, h}, R(5, 4), R(3, 4)), 1, {form("64.4.1.b")}, 3, 7));
  out.push_back(series("4f3.6-twist", "4f3", "p 4F3(1/2^4;1,5/4,3/4)_{p-1} = (-2/p)a_p(64.4.1.b) mod p^3",
                       f43({h, h, h, h}, R(5, 4), R(3, 4)), 1, {form("64.4.1.b", -2)}, 3, 7));

  out.push_back(series("wt2.1", "wt2", "4F3(1/2,1/2,1/6,5/6;1,4/3,2/3)_{p-1} = a_p(24.2.1.a) mod p",
                       f43({h, h, R(1, 6), R(5, 6)}, R(4, 3), tt), 0, {form("24.2.1.a")}, 1, 7));
  out.push_back(series("wt2.2", "wt2", "4F3(1/2,1/2,1/4,3/4;1,4/3,2/3)_{p-1} = (-1/p)a_p(24.2.1.a) mod p",
                       f43({h, h, R(1, 4), R(3, 4)}, R(4, 3), tt), 0, {form("24.2.1.a", -1)}, 1, 7));

  out.push_back(series("seq.A", "sequences", "5F4(1/2^5;-1)_{p-1} = -A_p mod p^2",
                       datum({h, h, h, h, h}, {1, 1, 1, 1, 1}, -1), 0, {sequence("A", -1)}, 2, 7));
  out.push_back(series("seq.B", "sequences", "p 5F4(1/2,1/2,1/2,1/3,2/3;1,1,7/6,5/6;-1)_{p-1} = -B_p mod p^2",
                       datum({h, h, h, t3, tt}, {1, 1, R(7, 6), R(5, 6), 1}, -1), 1, {sequence("B", -1)}, 2, 7));

  {
    RhsTerm g = form("32.3.31.a", 2);
    g.kind = RhsTerm::Kind::gamma;
    g.gamma = {{R(1, 4), 2}, {R(1, 2), -1}};
    ConjectureSpec s = series("remark", "remark", "4F3(1/2^4;-1)_{p-1} = (2/p) G_p(1/4)^2/G_p(1/2) a_p(32.3.31.a) mod p^2",
                              datum({h, h, h, h}, {1, 1, 1, 1}, -1), 0, {g}, 2, 5);
    s.filter.modulus = 4;
    s.filter.residue = 1;
    out.push_back(s);
  }

  for (const auto& [id, d] : {std::pair{std::string("shifted.h1"), alias("H1")},
                              std::pair{std::string("shifted.sextic"),
                                        datum({h, h, t3, tt, t3, tt}, {1, 1, R(1, 6), R(5, 6), R(1, 6), R(5, 6)}, 1)}}) {
    ConjectureSpec s = series(id, "shifted", "(-1)^t p^-s H_p = p^-s F(hat alpha, breve beta)_{p-1} mod p", d, 0, {}, 1, 5);
    s.kind = ConjectureSpec::Kind::shifted_mod_p;
    out.push_back(s);
  }

  // Closed forms of H_p quoted alongside the catalog.
  {
    ConjectureSpec s = series("hp.sextic", "hp", "H_p(1/2^6;1) = a_p(8.6.1.a) + a_p(8.4.1.a)p + (-1/p)p^2", sextic, 0,
                              {eta_form("8.6.1.a"), form("8.4.1.a", 0, 1, 1), power(2, -1)}, 0, 3);
    s.kind = ConjectureSpec::Kind::identity;
    out.push_back(s);
    s = series("hp.quartic", "hp", "H_p(1/2^4;1) = a_p(8.4.1.a) + p", datum({h, h, h, h}, {1, 1, 1, 1}, 1), 0,
               {form("8.4.1.a"), power(1)}, 0, 3);
    s.kind = ConjectureSpec::Kind::identity;
    out.push_back(s);
    s = series("hp.h2", "hp", "H_p(1/2,1/2,1/3,2/3;1) = a_p(36.4.1.a) + (3/p)p", alias("H2"), 0,
               {form("36.4.1.a"), power(1, 3)}, 0, 5);
    s.kind = ConjectureSpec::Kind::identity;
    out.push_back(s);
  }
  return out;
}

std::mutex euler_cache_mu;
std::map<std::pair<std::string, u64>, Integer> euler_cache;

Integer euler_trace(const HypergeometricDatum& d, u64 p) {
  const auto key = std::make_pair(format_datum(d), p);
  {
    std::lock_guard<std::mutex> lock(euler_cache_mu);
    auto it = euler_cache.find(key);
    if (it != euler_cache.end()) return it->second;
  }
  const Integer t = trace(reference_euler_factor(d, p));
  std::lock_guard<std::mutex> lock(euler_cache_mu);
  return euler_cache.emplace(key, t).first->second;
}

Integer form_coefficient(const RhsTerm& t, u64 p, VerifyContext& ctx) {
  switch (t.source) {
    case RhsTerm::FormSource::eta_product: {
      const auto eta = named_eta_product(t.label);
      if (!eta) throw MissingFixture("no eta product for " + t.label);
      return eta_expansion(*eta, static_cast<int>(p))[static_cast<int>(p)];
    }
    case RhsTerm::FormSource::euler_trace:
      return euler_trace(*t.euler_datum, p);
    default:
      if (!ctx.cache) throw MissingFixture("no coefficient cache configured");
      return fetch_ap(parse_label(t.label), p, *ctx.cache, ctx.client);
  }
}

// Exact integer value of the terms without Gamma factors.
Integer term_integer(const RhsTerm& t, u64 p, VerifyContext& ctx) {
  Integer v = t.coefficient;
  if (t.legendre_arg) v *= legendre(t.legendre_arg, p);
  v *= ipow(Integer(static_cast<unsigned long>(p)), static_cast<unsigned long>(t.p_exponent));
  switch (t.kind) {
    case RhsTerm::Kind::form: return v * form_coefficient(t, p, ctx);
    case RhsTerm::Kind::sequence: return v * (t.label == "A" ? compute_Ap(p) : compute_Bp(p));
    case RhsTerm::Kind::gamma: throw NotApplicable("Gamma_p terms have no exact integer value");
    default: return v;
  }
}

Padic term_padic(const RhsTerm& t, u64 p, int N, VerifyContext& ctx) {
  if (t.kind != RhsTerm::Kind::gamma) return exact_p(Rational(term_integer(t, p, ctx)), p);
  RhsTerm plain = t;
  plain.kind = t.label.empty() ? RhsTerm::Kind::p_power : RhsTerm::Kind::form;
  Padic v = exact_p(Rational(term_integer(plain, p, ctx)), p);
  for (const auto& [x, e] : t.gamma) v = v * gamma_p(x, p, N).pow(e);
  return v;
}

}  // namespace

const std::vector<ConjectureSpec>& catalog() {
  static const std::vector<ConjectureSpec> specs = build_catalog();
  return specs;
}

std::vector<std::string> catalog_groups() {
  std::vector<std::string> g;
  for (const auto& s : catalog())
    if (std::find(g.begin(), g.end(), s.group) == g.end()) g.push_back(s.group);
  return g;
}

std::vector<ConjectureSpec> select_specs(const std::string& name) {
  std::vector<ConjectureSpec> out;
  for (const auto& s : catalog())
    if (name == "all" || s.group == name || s.id == name) out.push_back(s);
  if (out.empty()) throw ParseError("unknown catalog entry or group: " + name);
  return out;
}

CongruenceCheck check_shifted_series(const HypergeometricDatum& d, u64 p) {
  const HypergeometricDatum dn = make_datum(d.alpha, d.beta, d.lambda, true);
  const PrimeProfile pr = profile_at(dn, p);
  if (pr.s >= 0) throw NotApplicable("the shifted series comparison needs s < 0");
  const auto [ha, bb] = hat_breve(dn, p);
  Integer hp = exact_scaled_hp(dn, p);
  if (pr.t % 2) hp = -hp;
  const HypergeometricDatum shifted{ha, bb, dn.lambda};
  const Padic rhs = F(shifted, p - 1, p, 3) * exact_p(p_pow(p, -pr.s), p);
  return compare_padic("shifted", format_datum(d), exact_p(Rational(hp), p), rhs, 1);
}

CongruenceCheck check_minus2p_relation(u64 p) {
  if (p < 7) throw NotApplicable("the -2p relation is stated for p >= 7");
  const Rational h = R(1, 2);
  const int N = 3;
  const HypergeometricDatum a = make_datum({h, h, h, h, R(1, 3), R(2, 3)}, {1, 1, 1, R(1, 6), R(5, 6), 1}, 1);
  const HypergeometricDatum b = make_datum({h, h, h, h, R(1, 3), R(2, 3)}, {1, 1, 1, R(7, 6), R(5, 6), 1}, 1);
  const Padic pp = exact_p(Rational(static_cast<unsigned long>(p)), p);
  const Padic lhs = exact_p(-2, p) * pp * F(a, p - 1, p, N);
  const Padic rhs = pp * F(b, p - 1, p, N);
  return compare_padic("minus2p", "-2p 6F5(...;1/6,5/6) = p 6F5(...;7/6,5/6) mod p", lhs, rhs, 1);
}

CongruenceCheck check_minus2p_integrality(u64 p) {
  if (p < 7) throw NotApplicable("the -2p relation is stated for p >= 7");
  const Rational h = R(1, 2);
  const Rational e = R(1 - static_cast<long>(p), 2);
  const std::vector<Rational> upper{h, R(5, 4), h, h, e, R(1, 3), R(2, 3)};
  const std::vector<Rational> lower{R(1, 4), 1, 1, 1 + h - e, R(7, 6), R(5, 6), 1};
  const Padic v = series_sum_padic(upper, lower, 1, p - 1, p, 3);
  CongruenceCheck out;
  out.spec = "minus2p-7f6";
  out.description = "7F6 with e=(1-p)/2 lies in Z_p";
  out.p = p;
  out.modulus_exp = 0;
  out.precision = v.precision();
  out.lhs = v.str();
  out.rhs = "Z_p";
  out.verdict = (v.is_zero() || v.valuation() >= 0) ? Verdict::holds : Verdict::fails;
  return out;
}

CongruenceCheck check_supercongruence(const ConjectureSpec& spec, u64 p, VerifyContext& ctx) {
  if (!spec.filter.admits(p)) throw NotApplicable(spec.id + " is not stated at p=" + std::to_string(p));
  switch (spec.kind) {
    case ConjectureSpec::Kind::minus2p_relation: {
      auto c = check_minus2p_relation(p);
      c.spec = spec.id;
      return c;
    }
    case ConjectureSpec::Kind::integrality_7f6:
      return check_minus2p_integrality(p);
    case ConjectureSpec::Kind::shifted_mod_p: {
      auto c = check_shifted_series(spec.datum, p);
      c.spec = spec.id;
      c.description = spec.description;
      return c;
    }
    case ConjectureSpec::Kind::dwork: {
      auto c = check_dwork(spec.datum, p, spec.m, spec.dwork_s, spec.dwork_t, spec.modulus_exp);
      c.spec = spec.id;
      c.description = spec.description;
      return c;
    }
    case ConjectureSpec::Kind::identity: {
      const HypergeometricDatum dn = make_datum(spec.datum.alpha, spec.datum.beta, spec.datum.lambda, true);
      const int scale = std::max(0, -profile(dn).s);
      Rational lhs(exact_scaled_hp(spec.datum, p));
      lhs *= p_pow(p, spec.p_scale - scale);
      Integer rhs = 0;
      for (const auto& t : spec.rhs) rhs += term_integer(t, p, ctx);
      CongruenceCheck out;
      out.spec = spec.id;
      out.description = spec.description;
      out.p = p;
      out.modulus_exp = 0;
      out.lhs = to_string(lhs);
      out.rhs = rhs.get_str();
      out.precision = 0;
      out.verdict = lhs == Rational(rhs) ? Verdict::holds : Verdict::fails;
      return out;
    }
    default:
      break;
  }
  const int c = spec.modulus_exp;
  const int N = c + 2;
  const unsigned long top = static_cast<unsigned long>(spec.m) * p - 1;
  const Padic lhs = F(spec.datum, top, p, N) * exact_p(p_pow(p, spec.p_scale), p);
  Padic rhs = Padic::zero(p, 1 << 20);
  for (const auto& t : spec.rhs) rhs = rhs + term_padic(t, p, N, ctx);
  if (spec.m > 1) rhs = rhs * F(spec.datum, static_cast<unsigned long>(spec.m - 1), p, N);
  return compare_padic(spec.id, spec.description, lhs, rhs, c);
}

CongruenceCheck check_remark_gamma(u64 p, VerifyContext& ctx) {
  for (const auto& s : catalog())
    if (s.id == "remark") return check_supercongruence(s, p, ctx);
  throw ConsistencyError("remark missing from the catalog");
}

std::vector<CongruenceCheck> run_checks(const std::vector<ConjectureSpec>& specs, const std::vector<u64>& primes,
                                        VerifyContext& ctx, int jobs) {
  std::vector<std::pair<const ConjectureSpec*, u64>> work;
  for (const auto& s : specs)
    for (u64 p : primes)
      if (s.filter.admits(p) && (s.datum.n() == 0 || !prime_divides_level(s.datum, p))) work.emplace_back(&s, p);
  std::vector<CongruenceCheck> results(work.size());
  std::vector<std::exception_ptr> errors(work.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < work.size();) {
      try {
        results[i] = check_supercongruence(*work[i].first, work[i].second, ctx);
      } catch (const PrecisionError& e) {
        CongruenceCheck c;
        c.spec = work[i].first->id;
        c.description = e.what();
        c.p = work[i].second;
        c.modulus_exp = work[i].first->modulus_exp;
        c.verdict = Verdict::inconclusive;
        results[i] = c;
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int j = 1; j < std::max(1, jobs); ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::stable_sort(results.begin(), results.end(), [](const CongruenceCheck& a, const CongruenceCheck& b) {
    return a.spec != b.spec ? a.spec < b.spec : a.p < b.p;
  });
  return results;
}

// ---- Whipple ----

namespace {

void require_nonzero(const Rational& x) {
  if (x == 0) throw PoleError("Gamma quotient has a zero denominator");
}

}  // namespace

WhippleSides whipple_7f6(const Rational& a, const Rational& c, const Rational& d, const Rational& e,
                         const Rational& f, unsigned m) {
  const Rational g = -static_cast<long>(m);
  const Rational one = 1;
  WhippleSides out;
  out.lhs = pFq({a, one + a / 2, c, d, e, f, g}, {a / 2, one + a - c, one + a - d, one + a - e, one + a - f, one + a - g},
                1, m);
  const Rational den = pochhammer(one + a - e, m) * pochhammer(one + a - f, m);
  require_nonzero(den);
  const Rational q = pochhammer(one + a, m) * pochhammer(one + a - e - f, m) / den;
  out.rhs = q * pFq({one + a - c - d, e, f, g}, {one + a - c, one + a - d, e + f + g - a}, 1, m);
  return out;
}

WhippleSides whipple_6f5(const Rational& a, const Rational& b, const Rational& c, const Rational& d, unsigned m) {
  const Rational e = -static_cast<long>(m);
  const Rational one = 1;
  WhippleSides out;
  out.lhs = pFq({a, a / 2 + one, b, c, d, e}, {a / 2, a - b + one, a - c + one, a - d + one, a - e + one}, -1, m);
  const Rational den = pochhammer(a - d + one, m);
  require_nonzero(den);
  out.rhs = pochhammer(a + one, m) / den * pFq({a - b - c + one, d, e}, {a - b + one, a - c + one}, 1, m);
  return out;
}

WhippleSuite whipple_random_suite(WhippleKind kind, int count, unsigned long long seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-20, 20), den(1, 7);
  std::uniform_int_distribution<unsigned> depth(0, 8);
  auto r = [&] { return ratio(num(rng), den(rng)); };
  WhippleSuite out;
  while (out.passed + out.failed < count) {
    const unsigned m = depth(rng);
    try {
      WhippleSides s = kind == WhippleKind::seven_f_six ? whipple_7f6(r(), r(), r(), r(), r(), m)
                                                        : whipple_6f5(r(), r(), r(), r(), m);
      (s.lhs == s.rhs ? out.passed : out.failed)++;
    } catch (const PoleError&) {
      ++out.resampled;
    }
  }
  return out;
}

}  // namespace hgc
