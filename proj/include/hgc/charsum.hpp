// Copyright 2026 The hgcong Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hgc/bigfloat.hpp"
#include "hgc/datum.hpp"
#include "hgc/finite_field.hpp"
#include "hgc/padic.hpp"

namespace hgc {

enum class CharSumMethod { padic_gk, complex_oracle };
std::string to_string(CharSumMethod m);

struct CharSumValue {
  std::optional<Rational> exact;
  std::optional<Padic> padic;
  u64 q = 0;
  CharSumMethod method = CharSumMethod::padic_gk;
  double error_bound = 0;  // complex oracle only: certified |computed - true|
  double residual = 0;     // complex oracle only: distance to the rounded value
  int precision_bits = 0;
};

// Gauss sums g(omega^j) = sum_{x != 0} omega^j(x) Psi_c(x) over one field,
// with omega(g^l) = exp(2 pi i l/(q-1)) and Psi_c(x) = exp(2 pi i c Tr(x)/p).
// Values are computed on demand and kept.
class GaussSumTable {
 public:
  GaussSumTable(std::shared_ptr<const FiniteField> field, mpfr_prec_t prec, u64 additive_scale = 1);
  const Complex& value(long j);
  // Bound on |computed - exact| valid for every j.
  double error_bound() const { return error_; }
  const Complex& root(long k) const;  // exp(2 pi i k/(q-1))
  const FiniteField& field() const { return *field_; }
  mpfr_prec_t precision() const { return prec_; }

 private:
  std::shared_ptr<const FiniteField> field_;
  mpfr_prec_t prec_;
  u64 scale_;
  std::vector<Complex> mult_roots_, add_roots_;
  std::map<u64, Complex> values_;
  double error_;
};

struct GaussSum {
  Complex value;
  double error_bound;
};
GaussSum gauss_sum_complex(const FiniteField& field, long j, int precision_bits);

struct ComplexOptions {
  int precision_bits = 256;
  int max_precision_bits = 8192;
  int modulus_index = 0;
  int generator_index = 0;
  u64 additive_scale = 1;
};

// H_q by the Gauss-sum definition, rounded to a rational with denominator
// q^(n max(0,-s)). Requires a_i(q-1), b_j(q-1) integral.
CharSumValue hq_complex(const HypergeometricDatum& d, u64 p, int e, const ComplexOptions& opt = {});

// H_p as a Gamma_p sum with step exponent e(k), certified to absolute
// precision N + 2 + s >= N - max(0,-s). Alpha is taken mod 1 and beta into
// (0,1]; the normalized datum must satisfy the diamond condition.
CharSumValue hp_padic(const HypergeometricDatum& d, u64 p, int N);

// (-1)^t p^max(0,-s) times the k-sum restricted to the bottom (e(k) = s);
// congruent to p^max(0,-s) H_p mod p.
Padic hp_bottom_sum(const HypergeometricDatum& d, u64 p, int N);

// H_q for q = p^e from the gamma-vector form of the Gauss-sum definition,
// which needs no divisibility of q - 1 by the denominators. Absolute
// precision N + 2.
CharSumValue hq_general(const HypergeometricDatum& d, u64 p, int e, int N);

// prod (x^v - 1)^gamma_v = prod (x - e^{2 pi i a}) / prod (x - e^{2 pi i b}).
std::map<long, long> gamma_vector(const HypergeometricDatum& d);

// The rational with denominator p^k nearest to x in the symmetric residue
// system mod p^precision.
Rational recover_rational(const Padic& x, int denominator_exp);

}  // namespace hgc
