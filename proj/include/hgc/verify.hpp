// Copyright 2026 The hgcong Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hgc/datum.hpp"
#include "hgc/modforms.hpp"
#include "hgc/padic.hpp"

namespace hgc {

enum class Verdict { holds, fails, inconclusive };
std::string to_string(Verdict v);

struct CongruenceCheck {
  std::string spec;
  std::string description;
  u64 p = 0;
  int modulus_exp = 0;
  Verdict verdict = Verdict::inconclusive;
  std::string lhs, rhs;
  int precision = 0;  // guaranteed precision of both sides
};

// holds iff lhs == rhs mod p^c, asserted only when both are known mod p^c.
CongruenceCheck compare_padic(const std::string& spec, const std::string& description, const Padic& lhs,
                              const Padic& rhs, int c);

// {"spec","p","modulus_exp","verdict","lhs","rhs","precision"} per check.
std::string report_json(const std::vector<CongruenceCheck>& checks);

// F(a,b;l)_{mp^s-1} F(a',b;l^p)_{mp^{t-1}-1} == F(a',b;l^p)_{mp^{s-1}-1} F(a,b;l)_{mp^t-1}
// mod p^{c s}; only alpha is dashed.
CongruenceCheck check_dwork(const HypergeometricDatum& d, u64 p, int m, int s, int t, int c);

struct UnitRoot {
  Padic mu;                         // known mod p^N
  bool stable_in_s = true;          // mu_s == mu_{s+1} mod p^s for s < N
  bool stable_in_m = true;          // m = 2 agrees with m = 1 mod p^N
  std::vector<Padic> by_s;          // mu_1 .. mu_N
};
// Throws NotApplicable when p is not ordinary.
UnitRoot unit_root_diagnostics(const HypergeometricDatum& d, u64 p, int N);
// As above, throwing ConsistencyError unless both stability checks pass.
Padic unit_root(const HypergeometricDatum& d, u64 p, int N);

// ---- catalog ----

struct RhsTerm {
  enum class Kind { form, p_power, gamma, sequence };
  enum class FormSource { fixture, eta_product, euler_trace };
  Kind kind = Kind::p_power;
  Integer coefficient = 1;
  long legendre_arg = 0;  // 0: no Legendre twist
  int p_exponent = 0;     // extra factor p^k
  std::string label;      // form label, or "A"/"B" for sequences
  FormSource source = FormSource::fixture;
  std::optional<HypergeometricDatum> euler_datum;  // for euler_trace
  std::vector<std::pair<Rational, int>> gamma;     // prod Gamma_p(x)^e
};

struct PrimeFilter {
  u64 min_p = 7;
  u64 modulus = 0;  // 0: no congruence condition
  u64 residue = 0;
  bool admits(u64 p) const;
};

struct ConjectureSpec {
  enum class Kind { series, identity, minus2p_relation, integrality_7f6, dwork, shifted_mod_p };
  std::string id;
  std::string group;
  std::string description;
  Kind kind = Kind::series;
  HypergeometricDatum datum;
  int p_scale = 0;  // lhs multiplied by p^p_scale
  int m = 1;        // lhs truncation m p - 1, rhs times F_{m-1}
  std::vector<RhsTerm> rhs;
  int modulus_exp = 1;
  PrimeFilter filter;
  int dwork_s = 1, dwork_t = 2;
};

struct VerifyContext {
  CoefficientCache* cache = nullptr;
  LmfdbClient* client = nullptr;
};

const std::vector<ConjectureSpec>& catalog();
std::vector<std::string> catalog_groups();
// A group name, a spec id, or "all".
std::vector<ConjectureSpec> select_specs(const std::string& name);

CongruenceCheck check_supercongruence(const ConjectureSpec& spec, u64 p, VerifyContext& ctx);
// Every admissible (spec, p), sorted by spec id then p.
std::vector<CongruenceCheck> run_checks(const std::vector<ConjectureSpec>& specs, const std::vector<u64>& primes,
                                        VerifyContext& ctx, int jobs = 1);

// p^max(0,-s) H_p(d) as an exact integer; the Gamma_p, gamma-vector and
// (when q = 1 mod M) complex evaluations must agree.
Integer exact_scaled_hp(const HypergeometricDatum& d, u64 p);

// (-1)^t p^-s H_p(d) against p^-s F(hat alpha, breve beta)_{p-1} mod p, for
// s < 0 and a connected bottom interval.
CongruenceCheck check_shifted_series(const HypergeometricDatum& d, u64 p);

CongruenceCheck check_minus2p_relation(u64 p);
CongruenceCheck check_minus2p_integrality(u64 p);
CongruenceCheck check_remark_gamma(u64 p, VerifyContext& ctx);

// -c1(EF(H1,1,p)) + (-3/p) p c1(EF(H2,1,p)).
Integer trace_combination(u64 p);
Integer compute_Ap(u64 p);
Integer compute_Bp(u64 p);

// ---- Whipple ----

struct WhippleSides {
  Rational lhs, rhs;
};
// 7F6(a,1+a/2,c,d,e,f,-m; a/2,1+a-c,1+a-d,1+a-e,1+a-f,1+a+m; 1) against
// (1+a)_m(1+a-e-f)_m/((1+a-e)_m(1+a-f)_m) 4F3(1+a-c-d,e,f,-m; 1+a-c,1+a-d,e+f-m-a; 1).
WhippleSides whipple_7f6(const Rational& a, const Rational& c, const Rational& d, const Rational& e,
                         const Rational& f, unsigned m);
// 6F5(a,1+a/2,b,c,d,-m; a/2,a-b+1,a-c+1,a-d+1,a+m+1; -1) against
// (a+1)_m/(a-d+1)_m 3F2(a-b-c+1,d,-m; a-b+1,a-c+1; 1).
WhippleSides whipple_6f5(const Rational& a, const Rational& b, const Rational& c, const Rational& d, unsigned m);

struct WhippleSuite {
  int passed = 0, failed = 0, resampled = 0;
};
enum class WhippleKind { seven_f_six, six_f_five };
WhippleSuite whipple_random_suite(WhippleKind kind, int count, unsigned long long seed);

}  // namespace hgc
