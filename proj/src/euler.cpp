// Copyright 2026 The hgcong Authors
// SPDX-License-Identifier: Apache-2.0
#include "hgc/euler.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <future>
#include <sstream>

#include "hgc/charsum.hpp"
#include "hgc/errors.hpp"
#include "hgc/profile.hpp"

namespace hgc {

namespace {

int scale_exponent(const HypergeometricDatum& d) {
  return std::max(0, -profile(make_datum(d.alpha, d.beta, d.lambda, true)).s);
}

// Digits needed to pin down an integer of size n q^((n-1)/2) by its
// symmetric residue.
int exact_digits(const HypergeometricDatum& d, u64 p, int k) {
  const Integer pp = static_cast<unsigned long>(p);
  const Integer q = ipow(pp, static_cast<unsigned long>(k));
  Integer root;
  Integer w = ipow(q, d.n() - 1);
  mpz_sqrt(root.get_mpz_t(), w.get_mpz_t());
  const Integer bound = 2 * (Integer(static_cast<unsigned long>(d.n())) * (root + 1) + 1);
  int N = 0;
  for (Integer x = 1; x <= bound; x *= pp) ++N;
  return N;
}

Padic scaled_sum(const HypergeometricDatum& d, u64 p, int k, int N) {
  const int scale = scale_exponent(d);
  const int Nh = std::max(1, N - k * scale);
  Padic h = *hq_general(d, p, k, Nh).padic;
  return h * Padic::exact(rpow(Rational(static_cast<unsigned long>(p)), k * scale), p);
}

bool is_one(const Rational& r) { return r == 1; }

}  // namespace

Integer power_sum(const HypergeometricDatum& d, u64 p, int k) {
  const int N = exact_digits(d, p, k);
  return scaled_sum(d, p, k, N).symmetric_residue(N);
}

Padic power_sum_padic(const HypergeometricDatum& d, u64 p, int k, int N) {
  for (int n = N; n >= 1; --n) {
    try {
      return scaled_sum(d, p, k, n).with_precision(n);
    } catch (const PrecisionError&) {
    }
  }
  throw PrecisionError("no precision available for the power sum at q=" + std::to_string(p) + "^" + std::to_string(k));
}

Poly newton_to_poly(const std::vector<Integer>& s) {
  Poly c{1};
  for (std::size_t k = 1; k <= s.size(); ++k) {
    Integer acc = 0;
    for (std::size_t i = 1; i <= k; ++i) acc += c[k - i] * s[i - 1];
    if (!mpz_divisible_ui_p(acc.get_mpz_t(), k))
      throw ConsistencyError("Newton identity produced a non-integer coefficient at degree " + std::to_string(k));
    c.push_back(-acc / static_cast<unsigned long>(k));
  }
  return c;
}

std::vector<Integer> poly_power_sums(const Poly& f, int count) {
  auto coef = [&](int i) -> Integer { return i < static_cast<int>(f.size()) ? f[i] : Integer(0); };
  std::vector<Integer> s;
  for (int k = 1; k <= count; ++k) {
    Integer acc = -k * coef(k);
    for (int i = 1; i < k; ++i) acc -= coef(i) * s[k - i - 1];
    s.push_back(acc);
  }
  return s;
}

int full_degree(const HypergeometricDatum& d) {
  return static_cast<int>(d.n()) - (is_one(d.lambda) ? 1 : 0);
}

EulerFactor euler_factor(const HypergeometricDatum& d, u64 p, int degree) {
  if (degree < 0 || degree > static_cast<int>(d.n())) throw Error("degree must lie in [0, n]");
  std::vector<std::future<Integer>> jobs;
  for (int k = 1; k <= degree; ++k)
    jobs.push_back(std::async(std::launch::async, [&d, p, k] { return power_sum(d, p, k); }));
  std::vector<Integer> s;
  for (auto& j : jobs) s.push_back(j.get());
  EulerFactor f;
  f.p = p;
  f.coefficients = newton_to_poly(s);
  return f;
}

namespace {

std::optional<Poly> divide_linear(const Poly& f, const Integer& mu) {
  const int d = static_cast<int>(f.size()) - 1;
  if (d < 1) return std::nullopt;
  Poly g(d);
  g[0] = f[0];
  for (int i = 1; i < d; ++i) g[i] = f[i] + mu * g[i - 1];
  if (f[d] != -mu * g[d - 1]) return std::nullopt;
  return g;
}

}  // namespace

EulerFactor remove_degenerate_factor(const EulerFactor& f, int n) {
  if (n < 2 || n % 2) throw NotApplicable("degenerate factor needs even n");
  const Integer m = ipow(Integer(static_cast<unsigned long>(f.p)), static_cast<unsigned long>((n - 2) / 2));
  std::optional<EulerFactor> found;
  for (int sign : {1, -1}) {
    const Integer mu = sign * m;
    if (auto g = divide_linear(f.coefficients, mu)) {
      if (found) throw ConsistencyError("both signs of the degenerate eigenvalue divide the factor");
      found = EulerFactor{*g, f.p, mu};
    }
  }
  if (!found) throw NotApplicable("no linear factor 1 -+ p^((n-2)/2) T: factor is not degenerate");
  return *found;
}

EulerFactor degenerate_quotient(const HypergeometricDatum& d, u64 p) {
  const int n = static_cast<int>(d.n());
  if (!is_one(d.lambda) || n % 2 || n < 2) throw NotApplicable("degenerate quotient needs lambda = 1 and even n");
  const int h = (n - 2) / 2;
  const unsigned long w = static_cast<unsigned long>(n - 1);
  const Integer pp = static_cast<unsigned long>(p);
  std::vector<Integer> s;
  for (int k = 1; k <= h; ++k) s.push_back(power_sum(d, p, k));
  const Padic check = power_sum_padic(d, p, h + 1, exact_digits(d, p, h + 1));

  std::vector<EulerFactor> candidates;
  for (int eps : {1, -1}) {
    const Integer mu = eps * ipow(pp, static_cast<unsigned long>(h));
    std::vector<Integer> t;
    for (int k = 1; k <= h; ++k) t.push_back(s[k - 1] - ipow(mu, static_cast<unsigned long>(k)));
    Poly c;
    try {
      c = newton_to_poly(t);
    } catch (const ConsistencyError&) {
      continue;
    }
    for (int eta : {1, -1}) {
      if (eta == -1 && c[h] != 0) continue;
      Poly Q(2 * h + 1);
      for (int i = 0; i <= h; ++i) Q[i] = c[i];
      for (int i = 0; i < h; ++i) Q[2 * h - i] = eta * ipow(pp, w * static_cast<unsigned long>(h - i)) * c[i];
      const Integer predicted = poly_power_sums(Q, h + 1)[h] + ipow(mu, static_cast<unsigned long>(h + 1));
      if ((Padic::exact(Rational(predicted), p) - check).is_zero()) candidates.push_back(EulerFactor{Q, p, mu});
    }
  }
  if (candidates.size() != 1)
    throw ConsistencyError(std::to_string(candidates.size()) + " degenerate-sign candidates match s_" +
                           std::to_string(h + 1) + " at p=" + std::to_string(p));
  return candidates.front();
}

EulerFactor reference_euler_factor(const HypergeometricDatum& d, u64 p) {
  const int n = static_cast<int>(d.n());
  const int deg = full_degree(d);
  const bool degenerate = is_one(d.lambda) && n % 2 == 0 && n >= 2;
  if (std::pow(static_cast<double>(p), deg) <= 40000.0) {
    try {
      EulerFactor f = euler_factor(d, p, deg);
      return degenerate ? remove_degenerate_factor(f, n) : f;
    } catch (const PrecisionError&) {
      if (!degenerate) throw;
    }
  }
  if (degenerate) return degenerate_quotient(d, p);
  return euler_factor(d, p, deg);
}

Integer linear_coefficient(const EulerFactor& f) {
  return f.coefficients.size() > 1 ? f.coefficients[1] : Integer(0);
}

Integer trace(const EulerFactor& f) { return -linear_coefficient(f); }

Poly scale_variable(const Poly& f, const Integer& c) {
  Poly g(f.size());
  Integer ck = 1;
  for (std::size_t i = 0; i < f.size(); ++i, ck *= c) g[i] = f[i] * ck;
  while (g.size() > 1 && g.back() == 0) g.pop_back();
  return g;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

std::vector<double> root_moduli(const Poly& f) {
  // Roots of x^d + c_1 x^{d-1} + ... + c_d are the mu with f = prod(1 - mu T).
  using C = std::complex<long double>;
  const int d = static_cast<int>(f.size()) - 1;
  if (d < 1) return {};
  const long double r = std::pow(std::fabs(static_cast<long double>(f[d].get_d())), 1.0L / d);
  std::vector<C> a(d + 1);  // monic in y = x / r
  for (int i = 0; i <= d; ++i) a[i] = static_cast<long double>(f[i].get_d()) / std::pow(r, static_cast<long double>(i));
  auto eval = [&](C y) {
    C v = 1;
    for (int i = 1; i <= d; ++i) v = v * y + a[i];
    return v;
  };
  std::vector<C> z(d);
  for (int i = 0; i < d; ++i) z[i] = std::pow(C(0.4L, 0.9L), i);
  for (int it = 0; it < 2000; ++it) {
    long double change = 0;
    for (int i = 0; i < d; ++i) {
      C den = 1;
      for (int j = 0; j < d; ++j)
        if (j != i) den *= z[i] - z[j];
      C step = eval(z[i]) / den;
      z[i] -= step;
      change = std::max(change, std::abs(step));
    }
    if (change < 1e-15L) break;
  }
  std::vector<double> out;
  for (auto& y : z) out.push_back(static_cast<double>(std::abs(y) * r));
  std::sort(out.begin(), out.end());
  return out;
}

std::string poly_json(const Poly& f) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < f.size(); ++i) os << (i ? "," : "") << f[i].get_str();
  os << ']';
  return os.str();
}

}  // namespace hgc
