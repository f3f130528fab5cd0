// Copyright 2026 The hgcong Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "hgc/rational.hpp"

namespace hgc {

using u64 = std::uint64_t;

// Residues mod p^r are kept in 64-bit words; r is limited so that p^r < 2^63.
int max_digits(u64 p);
u64 pow_u64(u64 p, int r);
u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 a, u64 e, u64 m);
u64 invmod(u64 a, u64 m);
u64 reduce(const Integer& z, u64 m);
u64 reduce(const Rational& r, u64 m);
bool is_prime(u64 n);
std::vector<u64> primes_in(u64 lo, u64 hi);

// [r]_0: the integer in [0,p-1] congruent to r mod p.
int first_digit(const Rational& r, u64 p);
// r' = (r + [-r]_0)/p.
Rational dash(const Rational& r, u64 p);
// The integer in [1,p] congruent to x mod p.
int a0(const Rational& x, u64 p);

// u * p^v with u a unit known modulo p^(N-v); N is the absolute precision.
// A zero carries only its absolute precision.
class Padic {
 public:
  Padic() = default;

  static Padic zero(u64 p, int precision);
  static Padic from_rational(const Rational& x, u64 p, int precision);
  // Relative precision as large as the word size allows.
  static Padic exact(const Rational& x, u64 p);
  static Padic from_unit(u64 p, int valuation, u64 unit, int relative_precision);

  u64 prime() const { return p_; }
  bool is_zero() const { return zero_; }
  // For a zero this is the precision: the value is known to be 0 mod p^N.
  int valuation() const { return zero_ ? prec_ : val_; }
  int precision() const { return prec_; }
  int relative_precision() const { return zero_ ? 0 : prec_ - val_; }
  u64 unit() const { return unit_; }

  Padic operator-() const;
  Padic operator+(const Padic& o) const;
  Padic operator-(const Padic& o) const;
  Padic operator*(const Padic& o) const;
  Padic operator/(const Padic& o) const;
  Padic& operator+=(const Padic& o) { return *this = *this + o; }
  Padic& operator*=(const Padic& o) { return *this = *this * o; }
  Padic pow(long e) const;
  Padic with_precision(int precision) const;

  // Value mod p^c in [0, p^c). Throws PrecisionError if not known that far
  // and ConsistencyError if the value is not integral.
  Integer residue(int c) const;
  Integer symmetric_residue(int c) const;

  std::string str() const;

 private:
  void check_same_prime(const Padic& o) const;

  u64 p_ = 0;
  int val_ = 0;
  int prec_ = 0;
  u64 unit_ = 0;
  bool zero_ = true;
};

// Morita Gamma at integers, by products over blocks of p^k consecutive
// integers: U_k(Z) = prod_{0<=j<p^k, p!|j} (p^k Z + j) is kept as a polynomial
// in Z truncated at degree N, which is exact mod p^N because the Z^i
// coefficient is divisible by p^i.
class GammaTable {
 public:
  GammaTable(u64 p, int N);
  // Gamma_p(m) mod p^N for 0 <= m < p^N.
  u64 at_integer(u64 m) const;
  u64 prime() const { return p_; }
  int digits() const { return N_; }
  u64 modulus() const { return mod_; }

 private:
  u64 eval(const std::vector<u64>& poly, u64 z) const;

  u64 p_;
  int N_;
  u64 mod_;
  std::vector<std::vector<u64>> blocks_;  // blocks_[k] = U_k
};

std::shared_ptr<const GammaTable> gamma_table(u64 p, int N);
Padic gamma_p(const Rational& x, u64 p, int N);
u64 gamma_p_residue(const Rational& x, u64 p, int N);

// Iterates y -> y^p to its fixed point mod p^N.
u64 teichmuller_residue(u64 x, u64 p, int N);
Padic teichmuller(const Integer& x, u64 p, int N);

}  // namespace hgc
