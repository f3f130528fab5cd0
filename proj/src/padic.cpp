// Copyright 2026 The hgcong Authors
// SPDX-License-Identifier: Apache-2.0
#include "hgc/padic.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "hgc/errors.hpp"

namespace hgc {

using u128 = unsigned __int128;

int max_digits(u64 p) {
  int r = 0;
  u128 x = 1;
  while (x * p < (u128(1) << 63)) {
    x *= p;
    ++r;
  }
  return r;
}

u64 pow_u64(u64 p, int r) {
  u128 x = 1;
  for (int i = 0; i < r; ++i) {
    x *= p;
    if (x >= (u128(1) << 63)) throw PrecisionError("p^r exceeds the 63-bit residue range");
  }
  return static_cast<u64>(x);
}

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 m) {
  __int128 t = 0, nt = 1, r = m, nr = a % m;
  while (nr != 0) {
    __int128 q = r / nr;
    __int128 tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) throw Error("residue is not invertible");
  if (t < 0) t += m;
  return static_cast<u64>(t);
}

u64 reduce(const Integer& z, u64 m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), z.get_mpz_t(), Integer(std::to_string(m)).get_mpz_t());
  return std::stoull(r.get_str());
}

u64 reduce(const Rational& x, u64 m) {
  u64 num = reduce(Integer(x.get_num()), m);
  u64 den = reduce(Integer(x.get_den()), m);
  return mulmod(num, invmod(den, m), m);
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<u64> primes_in(u64 lo, u64 hi) {
  std::vector<u64> out;
  for (u64 n = lo; n <= hi; ++n)
    if (is_prime(n)) out.push_back(n);
  return out;
}

int first_digit(const Rational& r, u64 p) {
  if (mpz_divisible_ui_p(r.get_den_mpz_t(), p))
    throw InvalidPrime("p=" + std::to_string(p) + " divides the denominator of " + r.get_str());
  return static_cast<int>(reduce(r, p));
}

Rational dash(const Rational& r, u64 p) {
  Rational out = (r + first_digit(-r, p)) / Rational(static_cast<unsigned long>(p));
  out.canonicalize();
  return out;
}

int a0(const Rational& x, u64 p) {
  int d = first_digit(x, p);
  return d == 0 ? static_cast<int>(p) : d;
}

// ---- Padic ----

Padic Padic::zero(u64 p, int precision) {
  Padic z;
  z.p_ = p;
  z.prec_ = precision;
  z.zero_ = true;
  return z;
}

Padic Padic::from_unit(u64 p, int valuation, u64 unit, int relative_precision) {
  if (relative_precision <= 0) return zero(p, valuation + relative_precision);
  if (relative_precision > max_digits(p))
    throw PrecisionError("relative precision " + std::to_string(relative_precision) +
                         " exceeds capacity for p=" + std::to_string(p));
  Padic x;
  x.p_ = p;
  x.val_ = valuation;
  x.prec_ = valuation + relative_precision;
  x.unit_ = unit % pow_u64(p, relative_precision);
  x.zero_ = false;
  if (x.unit_ % p == 0) throw Error("Padic unit part divisible by p");
  return x;
}

Padic Padic::from_rational(const Rational& x, u64 p, int precision) {
  if (x == 0) return zero(p, precision);
  int v = hgc::valuation(x, p);
  int rel = precision - v;
  if (rel <= 0) return zero(p, precision);
  Integer num = x.get_num(), den = x.get_den();
  Integer pp = static_cast<unsigned long>(p);
  for (int i = 0; i < v; ++i) num /= pp;
  for (int i = 0; i < -v; ++i) den /= pp;
  u64 m = pow_u64(p, rel);
  return from_unit(p, v, reduce(Rational(num, den), m), rel);
}

Padic Padic::exact(const Rational& x, u64 p) {
  if (x == 0) return zero(p, 1 << 20);
  return from_rational(x, p, hgc::valuation(x, p) + max_digits(p));
}

void Padic::check_same_prime(const Padic& o) const {
  if (p_ != o.p_) throw Error("p-adic numbers over different primes");
}

Padic Padic::operator-() const {
  if (zero_) return *this;
  Padic r = *this;
  u64 m = pow_u64(p_, prec_ - val_);
  r.unit_ = (m - unit_) % m;
  return r;
}

Padic Padic::with_precision(int precision) const {
  if (precision >= prec_) return *this;
  if (zero_ || precision <= val_) return zero(p_, precision);
  return from_unit(p_, val_, unit_, precision - val_);
}

Padic Padic::operator+(const Padic& o) const {
  check_same_prime(o);
  int N = std::min(prec_, o.prec_);
  if (zero_ && o.zero_) return zero(p_, N);
  if (zero_) return o.with_precision(N);
  if (o.zero_) return with_precision(N);
  int v = std::min(val_, o.val_);
  int r = N - v;
  if (r <= 0) return zero(p_, N);
  u64 m = pow_u64(p_, r);
  auto shifted = [&](const Padic& x) -> u64 {
    int k = x.val_ - v;
    if (k >= r) return 0;
    return mulmod(x.unit_ % m, pow_u64(p_, k), m);
  };
  u64 s = (shifted(*this) + shifted(o)) % m;
  if (s == 0) return zero(p_, N);
  int k = 0;
  while (s % p_ == 0) {
    s /= p_;
    ++k;
  }
  return from_unit(p_, v + k, s, r - k);
}

Padic Padic::operator-(const Padic& o) const { return *this + (-o); }

Padic Padic::operator*(const Padic& o) const {
  check_same_prime(o);
  if (zero_ && o.zero_) return zero(p_, prec_ + o.prec_);
  if (zero_) return zero(p_, prec_ + o.val_);
  if (o.zero_) return zero(p_, o.prec_ + val_);
  int rel = std::min(prec_ - val_, o.prec_ - o.val_);
  u64 m = pow_u64(p_, rel);
  return from_unit(p_, val_ + o.val_, mulmod(unit_ % m, o.unit_ % m, m), rel);
}

Padic Padic::operator/(const Padic& o) const {
  check_same_prime(o);
  if (o.zero_) throw PrecisionError("division by a p-adic number indistinguishable from zero");
  if (zero_) return zero(p_, prec_ - o.val_);
  int rel = std::min(prec_ - val_, o.prec_ - o.val_);
  u64 m = pow_u64(p_, rel);
  return from_unit(p_, val_ - o.val_, mulmod(unit_ % m, invmod(o.unit_ % m, m), m), rel);
}

Padic Padic::pow(long e) const {
  if (e < 0) return exact(1, p_) / pow(-e);
  Padic r = exact(1, p_);
  Padic b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

Integer Padic::residue(int c) const {
  if (prec_ < c)
    throw PrecisionError("value known mod p^" + std::to_string(prec_) + ", need p^" + std::to_string(c));
  if (zero_ || val_ >= c) return 0;
  if (val_ < 0) throw ConsistencyError("value " + str() + " is not p-integral");
  u64 m = pow_u64(p_, c - val_);
  Integer u = static_cast<unsigned long>(unit_ % m);
  return u * ipow(Integer(static_cast<unsigned long>(p_)), val_);
}

Integer Padic::symmetric_residue(int c) const {
  Integer r = residue(c);
  Integer m = ipow(Integer(static_cast<unsigned long>(p_)), c);
  if (2 * r > m) r -= m;
  return r;
}

std::string Padic::str() const {
  std::ostringstream os;
  if (zero_) {
    os << "O(" << p_ << "^" << prec_ << ")";
    return os.str();
  }
  u64 m = pow_u64(p_, prec_ - val_);
  Integer u = static_cast<unsigned long>(unit_);
  if (2 * u > Integer(static_cast<unsigned long>(m))) u -= static_cast<unsigned long>(m);
  if (val_ >= 0) {
    os << Integer(u * ipow(Integer(static_cast<unsigned long>(p_)), val_)).get_str();
  } else {
    os << u.get_str() << "/" << p_ << "^" << -val_;
  }
  os << " + O(" << p_ << "^" << prec_ << ")";
  return os.str();
}

// ---- Gamma_p ----

namespace {

std::vector<u64> poly_mul(const std::vector<u64>& a, const std::vector<u64>& b, std::size_t max_len,
                          u64 m) {
  std::vector<u64> r(std::min(a.size() + b.size() - 1, max_len), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j < r.size(); ++j)
      r[i + j] = (r[i + j] + mulmod(a[i], b[j], m)) % m;
  }
  return r;
}

// poly(a Z + b), truncated.
std::vector<u64> compose_linear(const std::vector<u64>& poly, u64 a, u64 b, std::size_t max_len, u64 m) {
  std::vector<u64> r{0};
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) {
    std::vector<u64> next(std::min(r.size() + 1, max_len), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
      next[i] = (next[i] + mulmod(r[i], b, m)) % m;
      if (i + 1 < next.size()) next[i + 1] = (next[i + 1] + mulmod(r[i], a, m)) % m;
    }
    next[0] = (next[0] + *it) % m;
    r = std::move(next);
  }
  return r;
}

}  // namespace

GammaTable::GammaTable(u64 p, int N) : p_(p), N_(N) {
  if (p % 2 == 0 || !is_prime(p)) throw InvalidPrime("Gamma_p needs an odd prime, got " + std::to_string(p));
  if (N < 1 || N > max_digits(p))
    throw PrecisionError("Gamma_p precision " + std::to_string(N) + " out of range for p=" + std::to_string(p));
  mod_ = pow_u64(p, N);
  const std::size_t len = static_cast<std::size_t>(N) + 1;
  blocks_.resize(std::max(N, 2));
  std::vector<u64> u1{1};
  for (u64 j = 1; j < p; ++j) u1 = poly_mul(u1, {j % mod_, p % mod_}, len, mod_);
  blocks_[1] = u1;
  for (int k = 1; k + 1 < N; ++k) {
    std::vector<u64> next{1};
    for (u64 c = 0; c < p; ++c) next = poly_mul(next, compose_linear(blocks_[k], p % mod_, c, len, mod_), len, mod_);
    blocks_[k + 1] = std::move(next);
  }
}

u64 GammaTable::eval(const std::vector<u64>& poly, u64 z) const {
  u64 r = 0;
  z %= mod_;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) r = (mulmod(r, z, mod_) + *it) % mod_;
  return r;
}

u64 GammaTable::at_integer(u64 m) const {
  if (m == 0) return 1 % mod_;
  std::vector<u64> digits;
  for (u64 x = m; x; x /= p_) digits.push_back(x % p_);
  u64 prod = 1 % mod_;
  u64 base = 0;
  u64 pk = 1;
  for (std::size_t k = 1; k < digits.size(); ++k) pk *= p_;
  for (std::size_t k = digits.size() - 1; k >= 1; --k) {
    const auto& block = blocks_.at(k);
    for (u64 c = 0; c < digits[k]; ++c) prod = mulmod(prod, eval(block, base / pk + c), mod_);
    base += digits[k] * pk;
    pk /= p_;
  }
  for (u64 j = 1; j < digits[0]; ++j) prod = mulmod(prod, (base + j) % mod_, mod_);
  return (m & 1) ? (mod_ - prod) % mod_ : prod;
}

std::shared_ptr<const GammaTable> gamma_table(u64 p, int N) {
  static std::mutex mu;
  static std::map<std::pair<u64, int>, std::shared_ptr<const GammaTable>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{p, N}];
  if (!slot) slot = std::make_shared<const GammaTable>(p, N);
  return slot;
}

u64 gamma_p_residue(const Rational& x, u64 p, int N) {
  if (mpz_divisible_ui_p(x.get_den_mpz_t(), p))
    throw InvalidPrime("Gamma_p argument " + x.get_str() + " is not in Z_p");
  auto table = gamma_table(p, N);
  return table->at_integer(reduce(x, table->modulus()));
}

Padic gamma_p(const Rational& x, u64 p, int N) {
  return Padic::from_unit(p, 0, gamma_p_residue(x, p, N), N);
}

u64 teichmuller_residue(u64 x, u64 p, int N) {
  if (x % p == 0) throw InvalidPrime("Teichmuller lift of a multiple of p");
  u64 m = pow_u64(p, N);
  u64 y = x % m;
  // Each step gains one digit, so this stops after at most N rounds.
  while (true) {
    u64 z = powmod(y, p, m);
    if (z == y) return y;
    y = z;
  }
}

Padic teichmuller(const Integer& x, u64 p, int N) {
  return Padic::from_unit(p, 0, teichmuller_residue(reduce(x, p), p, N), N);
}

}  // namespace hgc
