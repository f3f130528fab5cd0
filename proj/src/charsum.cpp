// Copyright 2026 The hgcong Authors
// SPDX-License-Identifier: Apache-2.0
#include "hgc/charsum.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>
#include <tuple>

#include "hgc/errors.hpp"
#include "hgc/profile.hpp"

namespace hgc {

std::string to_string(CharSumMethod m) {
  return m == CharSumMethod::padic_gk ? "padic-gk" : "complex-oracle";
}

namespace {

void require_unit_lambda(const Rational& lambda, u64 p) {
  if (lambda == 0 || valuation(lambda, p) != 0)
    throw InvalidPrime("lambda must be a p-adic unit at p=" + std::to_string(p));
}

void require_good_prime(const HypergeometricDatum& d, u64 p) {
  if (!is_prime(p)) throw InvalidPrime(std::to_string(p) + " is not prime");
  if (p == 2) throw InvalidPrime("p must be odd");
  if (prime_divides_level(d, p)) throw InvalidPrime("p divides a denominator of the datum");
  require_unit_lambda(d.lambda, p);
}

// 2^(1-prec), a generous unit roundoff.
double unit_roundoff(mpfr_prec_t prec) { return std::ldexp(1.0, 1 - static_cast<int>(prec)); }

double abs_double(const Complex& z) {
  return std::hypot(z.re.to_double(), z.im.to_double());
}

}  // namespace

// ---- complex oracle ----

GaussSumTable::GaussSumTable(std::shared_ptr<const FiniteField> field, mpfr_prec_t prec,
                             u64 additive_scale)
    : field_(std::move(field)), prec_(prec), scale_(additive_scale % field_->p()) {
  if (scale_ == 0) throw Error("additive character scale must be nonzero mod p");
  const u64 q = field_->q(), p = field_->p();
  mult_roots_.reserve(q - 1);
  for (u64 k = 0; k < q - 1; ++k) mult_roots_.push_back(root_of_unity(static_cast<long>(k), static_cast<long>(q - 1), prec));
  add_roots_.reserve(p);
  for (u64 k = 0; k < p; ++k) add_roots_.push_back(root_of_unity(static_cast<long>(k), static_cast<long>(p), prec));
  // Each tabulated root is within rho of the true value; a product of two
  // adds 4u; q - 1 summands of modulus <= 1 add 2u|partial| per addition.
  const double u = unit_roundoff(prec);
  const double rho = 32 * u;
  const double n = static_cast<double>(q - 1);
  error_ = n * (2 * rho + 4 * u + 2 * n * u);
}

const Complex& GaussSumTable::root(long k) const {
  const long m = static_cast<long>(field_->q() - 1);
  return mult_roots_[static_cast<std::size_t>(((k % m) + m) % m)];
}

const Complex& GaussSumTable::value(long j) {
  const u64 m = field_->q() - 1;
  const u64 jj = static_cast<u64>(((j % static_cast<long>(m)) + static_cast<long>(m)) % static_cast<long>(m));
  auto it = values_.find(jj);
  if (it != values_.end()) return it->second;
  Complex acc(prec_);
  const u64 p = field_->p();
  for (u64 l = 0; l < m; ++l) {
    const u64 x = field_->exp(l);
    const u64 t = field_->trace(x) * scale_ % p;
    acc = acc + mult_roots_[static_cast<std::size_t>(static_cast<unsigned __int128>(jj) * l % m)] * add_roots_[t];
  }
  return values_.emplace(jj, std::move(acc)).first->second;
}

GaussSum gauss_sum_complex(const FiniteField& field, long j, int precision_bits) {
  const long m = static_cast<long>(field.q() - 1);
  if (j < 0 || j > m - 1) throw Error("character index out of range");
  GaussSumTable table(std::make_shared<const FiniteField>(field), precision_bits);
  return {table.value(j), table.error_bound()};
}

namespace {

struct ComplexAttempt {
  bool ok = false;
  Rational value;
  double bound = 0, residual = 0;
};

ComplexAttempt hq_complex_once(const HypergeometricDatum& d, std::shared_ptr<const FiniteField> field,
                               const ComplexOptions& opt, mpfr_prec_t prec, const Integer& D) {
  GaussSumTable gs(field, prec, opt.additive_scale);
  const u64 q = field->q();
  const Integer q1 = static_cast<unsigned long>(q - 1);
  const std::size_t n = d.n();
  std::vector<long> A(n), B(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational a = d.alpha[i] * q1, b = d.beta[i] * q1;
    if (a.get_den() != 1 || b.get_den() != 1)
      throw NotApplicable("a_i(q-1) and b_j(q-1) must be integers");
    A[i] = static_cast<long>(to_int64(a.get_num()));
    B[i] = static_cast<long>(to_int64(b.get_num()));
  }
  Rational lam = (n % 2 ? -1 : 1) * d.lambda;
  const u64 lam_mod = reduce(lam, field->p());
  const long lam_log = static_cast<long>(field->dlog(field->embed(static_cast<long>(lam_mod))));

  Complex denom(prec);
  mpfr_set_ui(denom.re.get(), 1, MPFR_RNDN);
  for (std::size_t i = 0; i < n; ++i) denom = denom * gs.value(A[i]) * gs.value(-B[i]);

  const double u = unit_roundoff(prec);
  const double delta = gs.error_bound();
  const double rel = (4.0 * n + 1) * (delta + 32 * u) + (8.0 * n + 8) * 8 * u;
  if (rel > 0.01) return {};

  Complex total(prec);
  double abs_sum = 0;
  for (u64 k = 0; k < q - 1; ++k) {
    const long kk = static_cast<long>(k);
    Complex num(prec);
    mpfr_set_ui(num.re.get(), 1, MPFR_RNDN);
    for (std::size_t i = 0; i < n; ++i) num = num * gs.value(kk + A[i]) * gs.value(-kk - B[i]);
    Complex term = (num / denom) * gs.root(kk * lam_log);
    abs_sum += abs_double(term);
    total = total + term;
  }
  const double bound =
      (abs_sum * rel * 1.1 + 2 * u * static_cast<double>(q) * abs_sum) / static_cast<double>(q - 1);

  // H = total / (1 - q); X = D H should be an integer.
  Real scale(prec);
  mpfr_set_z(scale.get(), D.get_mpz_t(), MPFR_RNDN);
  mpfr_div_si(scale.get(), scale.get(), 1 - static_cast<long>(q), MPFR_RNDN);
  Real x(prec), y(prec), r(prec);
  mpfr_mul(x.get(), total.re.get(), scale.get(), MPFR_RNDN);
  mpfr_mul(y.get(), total.im.get(), scale.get(), MPFR_RNDN);
  mpfr_round(r.get(), x.get());
  Integer rounded;
  mpfr_get_z(rounded.get_mpz_t(), r.get(), MPFR_RNDN);
  mpfr_sub(x.get(), x.get(), r.get(), MPFR_RNDN);
  ComplexAttempt out;
  out.residual = std::fabs(x.to_double()) + std::fabs(y.to_double());
  out.bound = bound * D.get_d();
  out.value = Rational(rounded, D);
  out.value.canonicalize();
  out.ok = out.residual < 1e-6 && out.bound < 1e-6;
  return out;
}

}  // namespace

CharSumValue hq_complex(const HypergeometricDatum& d, u64 p, int e, const ComplexOptions& opt) {
  require_good_prime(d, p);
  auto field = std::make_shared<const FiniteField>(p, e, opt.modulus_index, opt.generator_index);
  const u64 q = field->q();
  HypergeometricDatum dn = make_datum(d.alpha, d.beta, d.lambda, true);
  const int s = profile(dn).s;
  const Integer D = ipow(Integer(static_cast<unsigned long>(q)), d.n() * static_cast<unsigned long>(std::max(0, -s)));
  for (int bits = opt.precision_bits; bits <= opt.max_precision_bits; bits *= 2) {
    auto at = hq_complex_once(d, field, opt, bits, D);
    if (!at.ok) continue;
    CharSumValue v;
    v.exact = at.value;
    v.q = q;
    v.method = CharSumMethod::complex_oracle;
    v.error_bound = at.bound / D.get_d();
    v.residual = at.residual;
    v.precision_bits = bits;
    return v;
  }
  throw PrecisionError("complex oracle could not certify H_q at " + std::to_string(opt.max_precision_bits) + " bits");
}

// ---- Gamma_p form at q = p ----

namespace {

Padic hp_sum(const HypergeometricDatum& d, u64 p, int N, bool bottom_only) {
  require_good_prime(d, p);
  HypergeometricDatum dn = make_datum(d.alpha, d.beta, d.lambda, true);
  if (!satisfies_diamond(dn)) throw NotApplicable("datum does not satisfy the diamond condition");
  const std::size_t n = dn.n();
  const PrimeProfile pr = profile_at(dn, p);
  const int R = N + 2;
  if (R > max_digits(p)) throw PrecisionError("requested precision exceeds capacity for p=" + std::to_string(p));
  const u64 mod = pow_u64(p, R);

  // k-independent factors Gamma_p(1 - {b_i}) / Gamma_p(a_i).
  u64 fixed = 1;
  for (std::size_t i = 0; i < n; ++i) {
    fixed = mulmod(fixed, invmod(gamma_p_residue(dn.alpha[i], p, R), mod), mod);
    fixed = mulmod(fixed, gamma_p_residue(1 - frac(dn.beta[i]), p, R), mod);
  }
  Rational lam = (n % 2 ? -1 : 1) * dn.lambda;
  const u64 w = teichmuller_residue(reduce(lam, p), p, R);

  const int smin = pr.s;
  u64 S = 0, wk = 1;
  for (u64 k = 0; k + 1 < p; ++k, wk = mulmod(wk, w, mod)) {
    const int ek = pr.e[k];
    if (bottom_only && ek != smin) continue;
    const Rational x = ratio(static_cast<long>(k), static_cast<long>(p - 1));
    u64 unit = fixed;
    for (std::size_t i = 0; i < n; ++i) {
      unit = mulmod(unit, gamma_p_residue(frac(dn.alpha[i] - x), p, R), mod);
      unit = mulmod(unit, invmod(gamma_p_residue(1 - frac(frac(dn.beta[i]) + x), p, R), mod), mod);
    }
    unit = mulmod(unit, wk, mod);
    const bool negative = ((ek % 2 != 0) != ((k * n) % 2 != 0));
    if (negative) unit = (mod - unit) % mod;
    const int shift = ek - smin;
    if (shift >= R) continue;
    S = (S + mulmod(unit, pow_u64(p, shift), mod)) % mod;
  }
  Padic sum = Padic::from_rational(Rational(Integer(static_cast<unsigned long>(S))), p, R);
  // The k-dependent reflection signs collapse to (-1)^(kn); no (-1)^t is
  // left over once Gamma_p(1 - {b}) is taken literally.
  sum = sum * Padic::exact(rpow(Rational(static_cast<unsigned long>(p)), smin), p);
  return sum;
}

}  // namespace

CharSumValue hp_padic(const HypergeometricDatum& d, u64 p, int N) {
  Padic sum = hp_sum(d, p, N, false);
  sum = sum / Padic::exact(Rational(1 - static_cast<long>(p)), p);
  CharSumValue v;
  v.padic = sum;
  v.q = p;
  v.method = CharSumMethod::padic_gk;
  return v;
}

Padic hp_bottom_sum(const HypergeometricDatum& d, u64 p, int N) {
  Padic sum = hp_sum(d, p, N, true);
  HypergeometricDatum dn = make_datum(d.alpha, d.beta, d.lambda, true);
  const int s = profile_at(dn, p).s;
  return sum * Padic::exact(rpow(Rational(static_cast<unsigned long>(p)), std::max(0, -s)), p);
}

// ---- gamma-vector form for general q ----

std::map<long, long> gamma_vector(const HypergeometricDatum& d) {
  auto mobius = [](long m) {
    int r = 1;
    for (long f = 2; f * f <= m; ++f) {
      if (m % f) continue;
      m /= f;
      if (m % f == 0) return 0;
      r = -r;
    }
    return m > 1 ? -r : r;
  };
  auto totient = [](long m) {
    long r = m;
    for (long f = 2; f * f <= m; ++f) {
      if (m % f) continue;
      while (m % f == 0) m /= f;
      r -= r / f;
    }
    if (m > 1) r -= r / m;
    return r;
  };
  std::map<long, long> g;
  for (int side = 0; side < 2; ++side) {
    const Multiset& s = side == 0 ? d.alpha : d.beta;
    const long sign = side == 0 ? 1 : -1;
    std::map<long, long> count;
    for (const auto& a : s) ++count[static_cast<long>(to_int64(frac(a).get_den()))];
    for (auto [den, c] : count) {
      const long phi = totient(den);
      if (c % phi) throw NotApplicable("multiset is not defined over Q");
      for (long v = 1; v <= den; ++v)
        if (den % v == 0) g[v] += sign * (c / phi) * mobius(den / v);
    }
  }
  for (auto it = g.begin(); it != g.end();) it = it->second == 0 ? g.erase(it) : std::next(it);
  return g;
}

namespace {

// Gauss-sum data for the Frobenius orbit of a/(q-1): the unit
// -prod_{i<e} Gamma_p({p^i a/(q-1)}) and the base-p digit sum of a.
struct GaussTable {
  std::vector<u64> unit;
  std::vector<int> digit_sum;
};

std::shared_ptr<const GaussTable> gauss_table(u64 p, int e, int R) {
  static std::mutex mu;
  static std::map<std::tuple<u64, int, int>, std::shared_ptr<const GaussTable>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({p, e, R});
    if (it != cache.end()) return it->second;
  }
  const u64 q = pow_u64(p, e), q1 = q - 1;
  auto gt = gamma_table(p, R);
  const u64 mod = gt->modulus();
  const u64 inv_q1 = invmod(q1 % mod, mod);
  std::vector<u64> gam(q1);
  for (u64 a = 0; a < q1; ++a) gam[a] = gt->at_integer(mulmod(a, inv_q1, mod));
  auto out = std::make_shared<GaussTable>();
  out->unit.resize(q1);
  out->digit_sum.resize(q1);
  for (u64 a = 0; a < q1; ++a) {
    u64 prod = mod - 1;
    u64 b = a;
    for (int i = 0; i < e; ++i) {
      prod = mulmod(prod, gam[b], mod);
      b = static_cast<u64>(static_cast<unsigned __int128>(b) * p % q1);
    }
    out->unit[a] = prod;
    int ds = 0;
    for (u64 x = a; x; x /= p) ds += static_cast<int>(x % p);
    out->digit_sum[a] = ds;
  }
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(std::make_tuple(p, e, R), out).first->second;
}

}  // namespace

CharSumValue hq_general(const HypergeometricDatum& d, u64 p, int e, int N) {
  require_good_prime(d, p);
  if (e < 1) throw Error("field degree must be positive");
  if (!is_defined_over_Q(d.alpha) || !is_defined_over_Q(d.beta))
    throw NotApplicable("datum is not defined over Q");
  const u64 q = pow_u64(p, e), q1 = q - 1;
  if (q > 2000000) throw PrecisionError("q too large");
  const auto gv = gamma_vector(d);
  std::vector<long> plist, qlist;
  long qsum = 0;
  Rational M = 1;
  for (auto [v, c] : gv) {
    for (long i = 0; i < std::abs(c); ++i) (c > 0 ? plist : qlist).push_back(v);
    if (c < 0) qsum += -c * v;
    M *= rpow(Rational(v), v * c);
  }
  const Rational target = (qsum % 2 ? -1 : 1) * d.lambda / M;

  auto smult = [&](u64 m) {
    const long dd = static_cast<long>(q1 / std::gcd(m, q1));
    long a = 0, b = 0;
    for (long v : plist) a += (v % dd == 0);
    for (long v : qlist) b += (v % dd == 0);
    return std::min(a, b);
  };
  auto idx = [&](long long x) { return static_cast<u64>(((x % static_cast<long long>(q1)) + static_cast<long long>(q1)) % static_cast<long long>(q1)); };

  // Exponents first, to size the working precision.
  auto digits_only = gauss_table(p, e, 1);
  const long s0 = smult(0);
  std::vector<long> expo(q1);
  long xmin = 0;  // expo[0] = E(0) = 0
  for (u64 m = 0; m < q1; ++m) {
    long ds = 0;
    for (long v : plist) ds += digits_only->digit_sum[idx(-static_cast<long long>(v) * m)];
    for (long v : qlist) ds += digits_only->digit_sum[idx(static_cast<long long>(v) * m)];
    if (ds % static_cast<long>(p - 1)) throw ConsistencyError("Gauss sum digit sums not divisible by p-1");
    const long E = ds / static_cast<long>(p - 1);
    expo[m] = E + e * (smult(m) - s0);
    xmin = std::min(xmin, expo[m]);
  }
  const int R = std::max(1, N + 2 - static_cast<int>(xmin));
  if (R > max_digits(p))
    throw PrecisionError("H_q needs " + std::to_string(R) + " digits; capacity is " + std::to_string(max_digits(p)));
  auto gt = gauss_table(p, e, R);
  const u64 mod = pow_u64(p, R);
  const u64 w = teichmuller_residue(reduce(target, p), p, R);

  u64 S = 0, wm = 1;
  for (u64 m = 0; m < q1; ++m, wm = mulmod(wm, w, mod)) {
    const long shift = expo[m] - xmin;
    if (shift >= R) continue;
    u64 val = 1;
    long ds = 0;
    for (long v : plist) {
      const u64 a = idx(-static_cast<long long>(v) * m);
      val = mulmod(val, gt->unit[a], mod);
      ds += gt->digit_sum[a];
    }
    for (long v : qlist) {
      const u64 a = idx(static_cast<long long>(v) * m);
      val = mulmod(val, gt->unit[a], mod);
      ds += gt->digit_sum[a];
    }
    const long E = ds / static_cast<long>(p - 1);
    val = mulmod(val, wm, mod);
    if (E % 2) val = (mod - val) % mod;
    S = (S + mulmod(val, pow_u64(p, static_cast<int>(shift)), mod)) % mod;
  }
  Padic sum = Padic::from_rational(Rational(Integer(static_cast<unsigned long>(S))), p, R);
  sum = sum * Padic::exact(rpow(Rational(static_cast<unsigned long>(p)), xmin), p);
  sum = sum / Padic::exact(Rational(1 - static_cast<long>(q)), p);
  // Each b = 1 contributes 1/g(trivial) = -1 to the defining sum.
  long ones = 0;
  for (const auto& b : d.beta) ones += b.get_den() == 1;
  if (ones % 2) sum = -sum;
  CharSumValue v;
  v.padic = sum;
  v.q = q;
  v.method = CharSumMethod::padic_gk;
  return v;
}

Rational recover_rational(const Padic& x, int denominator_exp) {
  const Padic y = x * Padic::exact(rpow(Rational(static_cast<unsigned long>(x.prime())), denominator_exp), x.prime());
  Rational r(y.symmetric_residue(y.precision()));
  r /= ipow(Integer(static_cast<unsigned long>(x.prime())), static_cast<unsigned long>(denominator_exp));
  r.canonicalize();
  return r;
}

}  // namespace hgc
