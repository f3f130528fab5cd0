// Copyright 2026 The hgcong Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <mpfr.h>

#include <utility>

namespace hgc {

// Owning wrapper over mpfr_t.
class Real {
 public:
  explicit Real(mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }
  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real(Real&& o) noexcept : Real(mpfr_get_prec(o.v_)) { mpfr_swap(v_, o.v_); }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

 private:
  mpfr_t v_;
};

struct Complex {
  Real re, im;
  explicit Complex(mpfr_prec_t prec) : re(prec), im(prec) {}
};

inline Complex operator+(const Complex& a, const Complex& b) {
  Complex r(a.re.prec());
  mpfr_add(r.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_add(r.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  return r;
}

inline Complex operator*(const Complex& a, const Complex& b) {
  const mpfr_prec_t prec = a.re.prec();
  Complex r(prec);
  Real t(prec);
  mpfr_mul(r.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_mul(t.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  mpfr_sub(r.re.get(), r.re.get(), t.get(), MPFR_RNDN);
  mpfr_mul(r.im.get(), a.re.get(), b.im.get(), MPFR_RNDN);
  mpfr_mul(t.get(), a.im.get(), b.re.get(), MPFR_RNDN);
  mpfr_add(r.im.get(), r.im.get(), t.get(), MPFR_RNDN);
  return r;
}

inline Complex conj(const Complex& a) {
  Complex r = a;
  mpfr_neg(r.im.get(), r.im.get(), MPFR_RNDN);
  return r;
}

inline Real norm2(const Complex& a) {
  Real r(a.re.prec()), t(a.re.prec());
  mpfr_sqr(r.get(), a.re.get(), MPFR_RNDN);
  mpfr_sqr(t.get(), a.im.get(), MPFR_RNDN);
  mpfr_add(r.get(), r.get(), t.get(), MPFR_RNDN);
  return r;
}

inline Complex operator/(const Complex& a, const Complex& b) {
  Real n = norm2(b);
  Complex r = a * conj(b);
  mpfr_div(r.re.get(), r.re.get(), n.get(), MPFR_RNDN);
  mpfr_div(r.im.get(), r.im.get(), n.get(), MPFR_RNDN);
  return r;
}

// exp(2 pi i num/den).
inline Complex root_of_unity(long num, long den, mpfr_prec_t prec) {
  Complex r(prec);
  Real angle(prec);
  mpfr_const_pi(angle.get(), MPFR_RNDN);
  mpfr_mul_si(angle.get(), angle.get(), 2 * num, MPFR_RNDN);
  mpfr_div_si(angle.get(), angle.get(), den, MPFR_RNDN);
  mpfr_sin_cos(r.im.get(), r.re.get(), angle.get(), MPFR_RNDN);
  return r;
}

}  // namespace hgc
