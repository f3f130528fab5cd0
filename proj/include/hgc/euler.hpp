// Copyright 2026 The hgcong Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hgc/datum.hpp"
#include "hgc/padic.hpp"

namespace hgc {

// Integer polynomial, constant term first.
using Poly = std::vector<Integer>;

struct EulerFactor {
  Poly coefficients;  // coefficients[0] == 1
  u64 p = 0;
  // Set when a linear factor 1 - mu T was divided out.
  std::optional<Integer> removed_eigenvalue;
  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
};

// s_k = q^max(0,-s) H_q with q = p^k: the k-th power sum of the
// Frobenius eigenvalues. Exact; throws PrecisionError beyond capacity.
Integer power_sum(const HypergeometricDatum& d, u64 p, int k);
// The same known only mod p^N (N is reduced until it fits the word size).
Padic power_sum_padic(const HypergeometricDatum& d, u64 p, int k, int N);

// Coefficients of prod(1 - mu T) from power sums s_1..s_d. Throws
// ConsistencyError when a coefficient is not an integer.
Poly newton_to_poly(const std::vector<Integer>& power_sums);
std::vector<Integer> poly_power_sums(const Poly& f, int count);

// Degree 0 < degree <= n; full degree is n - 1 at lambda = 1 and n otherwise.
EulerFactor euler_factor(const HypergeometricDatum& d, u64 p, int degree);
int full_degree(const HypergeometricDatum& d);

// Divides out 1 - mu T with mu = +-p^((n-2)/2), trying both signs.
EulerFactor remove_degenerate_factor(const EulerFactor& f, int n);

// The degree n-2 quotient for lambda = 1, n even, from s_1..s_h with
// h = (n-2)/2 and the functional equation c_{2h-i} = eta p^{(n-1)(h-i)} c_i;
// the degenerate sign and eta are fixed by checking s_{h+1}.
EulerFactor degenerate_quotient(const HypergeometricDatum& d, u64 p);

// What the reference computer algebra command returns: the full factor, with
// the degenerate linear factor removed at lambda = 1 and even n.
EulerFactor reference_euler_factor(const HypergeometricDatum& d, u64 p);

Integer trace(const EulerFactor& f);
Integer linear_coefficient(const EulerFactor& f);
Poly scale_variable(const Poly& f, const Integer& c);
Poly poly_mul(const Poly& a, const Poly& b);
// |mu| for the roots 1/mu of f, ascending.
std::vector<double> root_moduli(const Poly& f);
std::string poly_json(const Poly& f);

}  // namespace hgc
