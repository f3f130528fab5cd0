// Copyright 2026 The hgcong Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "hgc/padic.hpp"

namespace hgc {

// F_q with q = p^e. Elements are encoded as integers sum c_i p^i for the
// polynomial sum c_i x^i reduced by the modulus.
class FiniteField {
 public:
  // modulus_index / generator_index select the first, second, ... admissible
  // choice in encoding order; 0 gives the canonical table.
  FiniteField(u64 p, int e, int modulus_index = 0, int generator_index = 0);

  u64 p() const { return p_; }
  int degree() const { return e_; }
  u64 q() const { return q_; }
  const std::vector<u64>& modulus() const { return modulus_; }  // c_0..c_{e-1}, monic
  u64 generator() const { return generator_; }

  u64 add(u64 x, u64 y) const;
  u64 mul(u64 x, u64 y) const;
  u64 pow(u64 x, u64 k) const;
  u64 dlog(u64 x) const;  // x != 0
  u64 exp(u64 k) const { return exp_[k % (q_ - 1)]; }
  u64 trace(u64 x) const { return trace_[x]; }  // in [0, p)
  u64 embed(long a) const;                      // image of an integer

 private:
  bool irreducible(const std::vector<u64>& f) const;
  u64 p_;
  int e_;
  u64 q_;
  std::vector<u64> modulus_;
  u64 generator_ = 0;
  std::vector<u64> exp_, log_, trace_;
};

}  // namespace hgc
