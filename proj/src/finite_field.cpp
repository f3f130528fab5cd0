// Copyright 2026 The hgcong Authors
// SPDX-License-Identifier: Apache-2.0
#include "hgc/finite_field.hpp"

#include "hgc/errors.hpp"

namespace hgc {

namespace {

std::vector<u64> digits_of(u64 x, u64 p, int e) {
  std::vector<u64> c(e);
  for (int i = 0; i < e; ++i) {
    c[i] = x % p;
    x /= p;
  }
  return c;
}

u64 encode(const std::vector<u64>& c, u64 p) {
  u64 x = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) x = x * p + *it;
  return x;
}

// Remainder of a by the monic polynomial f (coefficients low to high,
// leading 1 included).
std::vector<u64> poly_rem(std::vector<u64> a, const std::vector<u64>& f, u64 p) {
  const std::size_t df = f.size() - 1;
  for (std::size_t i = a.size(); i-- > df;) {
    u64 c = a[i] % p;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= df; ++j) a[i - df + j] = (a[i - df + j] + (p - c) * f[j]) % p;
  }
  a.resize(df);
  return a;
}

std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> out;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool FiniteField::irreducible(const std::vector<u64>& f) const {
  const int deg = static_cast<int>(f.size()) - 1;
  for (int d = 1; 2 * d <= deg; ++d) {
    u64 count = pow_u64(p_, d);
    for (u64 code = 0; code < count; ++code) {
      std::vector<u64> g = digits_of(code, p_, d);
      g.push_back(1);
      auto r = poly_rem(f, g, p_);
      bool zero = true;
      for (u64 c : r) zero = zero && c == 0;
      if (zero) return false;
    }
  }
  return true;
}

FiniteField::FiniteField(u64 p, int e, int modulus_index, int generator_index) : p_(p), e_(e) {
  if (!is_prime(p)) throw InvalidPrime(std::to_string(p) + " is not prime");
  if (e < 1) throw Error("field degree must be positive");
  q_ = pow_u64(p, e);
  if (q_ > 20000000) throw Error("field too large for explicit tables");

  int seen = 0;
  for (u64 code = 0;; ++code) {
    if (code >= q_) throw Error("no irreducible polynomial with the requested index");
    std::vector<u64> f = digits_of(code, p, e);
    f.push_back(1);
    if (e > 1 && f[0] == 0) continue;
    if (!irreducible(f)) continue;
    if (seen++ == modulus_index) {
      modulus_.assign(f.begin(), f.end() - 1);
      break;
    }
  }

  const u64 order = q_ - 1;
  const auto factors = prime_factors(order);
  seen = 0;
  for (u64 g = 1; g < q_; ++g) {
    bool full = true;
    for (u64 r : factors) full = full && pow(g, order / r) != 1;
    if (order == 1) full = (g == 1);
    if (full && seen++ == generator_index) {
      generator_ = g;
      break;
    }
  }
  if (generator_ == 0) throw Error("no generator with the requested index");

  exp_.resize(order);
  log_.assign(q_, 0);
  u64 x = 1;
  for (u64 k = 0; k < order; ++k) {
    exp_[k] = x;
    log_[x] = k;
    x = mul(x, generator_);
  }
  if (x != 1) throw ConsistencyError("generator order mismatch");

  trace_.assign(q_, 0);
  for (u64 k = 0; k < order; ++k) {
    u64 s = 0, pk = 1;
    for (int i = 0; i < e; ++i) {
      s = add(s, exp_[static_cast<u64>((static_cast<unsigned __int128>(k) * pk) % order)]);
      pk = pk * p % order;
      if (order == 1) pk = 0;
    }
    if (s >= p) throw ConsistencyError("trace left the prime field");
    trace_[exp_[k]] = s;
  }
}

u64 FiniteField::add(u64 x, u64 y) const {
  auto a = digits_of(x, p_, e_), b = digits_of(y, p_, e_);
  for (int i = 0; i < e_; ++i) a[i] = (a[i] + b[i]) % p_;
  return encode(a, p_);
}

u64 FiniteField::mul(u64 x, u64 y) const {
  auto a = digits_of(x, p_, e_), b = digits_of(y, p_, e_);
  std::vector<u64> c(2 * e_ - 1, 0);
  for (int i = 0; i < e_; ++i)
    for (int j = 0; j < e_; ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p_;
  std::vector<u64> f = modulus_;
  f.push_back(1);
  return encode(poly_rem(c, f, p_), p_);
}

u64 FiniteField::pow(u64 x, u64 k) const {
  u64 r = 1;
  while (k) {
    if (k & 1) r = mul(r, x);
    x = mul(x, x);
    k >>= 1;
  }
  return r;
}

u64 FiniteField::dlog(u64 x) const {
  if (x == 0 || x >= q_) throw Error("discrete log of zero or a non-element");
  return log_[x];
}

u64 FiniteField::embed(long a) const {
  long r = a % static_cast<long>(p_);
  if (r < 0) r += static_cast<long>(p_);
  return static_cast<u64>(r);
}

}  // namespace hgc
