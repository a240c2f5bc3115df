// Copyright 2026 The galois6 Authors.
// SPDX-License-Identifier: Apache-2.0

#include "galois/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

namespace galois::numeric {

BigFloat::BigFloat(long prec) {
  mpfr_init2(v_, prec);
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(long prec, long value) {
  mpfr_init2(v_, prec);
  mpfr_set_si(v_, value, MPFR_RNDN);
}

BigFloat::BigFloat(long prec, const Integer& value) {
  mpfr_init2(v_, prec);
  mpfr_set_z(v_, value.get_mpz_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& o) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) {
    mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

long BigFloat::exponent() const {
  if (mpfr_zero_p(v_)) return -(1L << 40);
  return static_cast<long>(mpfr_get_exp(v_));
}

Integer BigFloat::nearest_integer(BigFloat* distance) const {
  BigFloat r(prec());
  mpfr_round(r.v_, v_);
  Integer z;
  mpfr_get_z(z.get_mpz_t(), r.v_, MPFR_RNDN);
  if (distance) {
    *distance = BigFloat(prec());
    mpfr_sub(distance->v_, v_, r.v_, MPFR_RNDN);
    mpfr_abs(distance->v_, distance->v_, MPFR_RNDN);
  }
  return z;
}

BigFloat& BigFloat::operator+=(const BigFloat& o) {
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
BigFloat& BigFloat::operator-=(const BigFloat& o) {
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
BigFloat& BigFloat::operator*=(const BigFloat& o) {
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
BigFloat& BigFloat::operator/=(const BigFloat& o) {
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigFloat BigFloat::operator-() const {
  BigFloat r(*this);
  mpfr_neg(r.v_, r.v_, MPFR_RNDN);
  return r;
}

std::string BigFloat::to_string(int digits) const {
  char* s = nullptr;
  mpfr_asprintf(&s, "%.*Rg", digits, v_);
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

BigFloat abs(const BigFloat& x) {
  BigFloat r(x);
  mpfr_abs(r.get(), r.get(), MPFR_RNDN);
  return r;
}

BigFloat sqrt(const BigFloat& x) {
  BigFloat r(x);
  mpfr_sqrt(r.get(), r.get(), MPFR_RNDN);
  return r;
}

Complex& Complex::operator+=(const Complex& o) {
  re += o.re;
  im += o.im;
  return *this;
}

Complex& Complex::operator-=(const Complex& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

Complex& Complex::operator*=(const Complex& o) {
  BigFloat a = re * o.re;
  BigFloat b = im * o.im;
  BigFloat c = re * o.im;
  im *= o.re;
  im += c;
  re = a - b;
  return *this;
}

Complex& Complex::operator/=(const Complex& o) {
  BigFloat d = norm(o);
  BigFloat a = re * o.re + im * o.im;
  BigFloat b = im * o.re - re * o.im;
  re = a / d;
  im = b / d;
  return *this;
}

Complex& Complex::scale(const BigFloat& s) {
  re *= s;
  im *= s;
  return *this;
}

BigFloat norm(const Complex& z) { return z.re * z.re + z.im * z.im; }
BigFloat abs(const Complex& z) { return sqrt(norm(z)); }

double root_bound_log2(const IntPolynomial& f) {
  // Fujiwara: 2 max |a_{n-k}/a_n|^(1/k)
  const int n = f.degree();
  double best = -1e300;
  double ln = std::log2(std::fabs(mpz_get_d(f.leading().get_mpz_t())));
  for (int k = 1; k <= n; ++k) {
    const Integer& a = f[n - k];
    if (a == 0) continue;
    long e;
    double d = mpz_get_d_2exp(&e, a.get_mpz_t());
    double l = std::log2(std::fabs(d)) + static_cast<double>(e) - ln;
    if (k == n) l -= 1.0;  // the constant term admits |a_0/(2 a_n)|
    best = std::max(best, l / k);
  }
  return best < -1e299 ? 0.0 : best + 1.0;
}

ComplexPoly poly_from_roots(const std::vector<Complex>& roots, long prec) {
  ComplexPoly c{Complex(BigFloat(prec, 1), BigFloat(prec))};
  for (const auto& t : roots) {
    ComplexPoly next(c.size() + 1, Complex(prec));
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= c[i] * t;
    }
    c = std::move(next);
  }
  return c;
}

std::optional<std::vector<Integer>> round_to_integers(const ComplexPoly& c) {
  std::vector<Integer> out;
  out.reserve(c.size());
  for (const auto& z : c) {
    BigFloat dist(64);
    Integer v = z.re.nearest_integer(&dist);
    if (dist.exponent() > -2 || abs(z.im).exponent() > -2) return std::nullopt;  // >= 1/4
    out.push_back(std::move(v));
  }
  return out;
}

namespace {

void set_prec(Complex& z, long prec) {
  mpfr_prec_round(z.re.get(), prec, MPFR_RNDN);
  mpfr_prec_round(z.im.get(), prec, MPFR_RNDN);
}

// f(z) and f'(z) by Horner.
void horner(const std::vector<BigFloat>& c, const Complex& z, Complex& v, Complex& dv) {
  const long prec = z.prec();
  const int n = static_cast<int>(c.size()) - 1;
  v = Complex(c[n], BigFloat(prec));
  dv = Complex(prec);
  for (int i = n - 1; i >= 0; --i) {
    dv *= z;
    dv += v;
    v *= z;
    v.re += c[i];
  }
}

// One Aberth sweep; returns the largest correction relative to max(1, |z|).
double aberth_sweep(const std::vector<BigFloat>& c, std::vector<Complex>& z) {
  const long prec = z[0].prec();
  const std::size_t n = z.size();
  double worst = 0.0;
  Complex v(prec), dv(prec);
  for (std::size_t i = 0; i < n; ++i) {
    horner(c, z[i], v, dv);
    if (v.re.is_zero() && v.im.is_zero()) continue;
    Complex ratio = v / dv;  // Newton correction
    Complex sum(prec);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      Complex d = z[i] - z[j];
      Complex one(BigFloat(prec, 1), BigFloat(prec));
      sum += one / d;
    }
    Complex denom(BigFloat(prec, 1), BigFloat(prec));
    denom -= ratio * sum;
    Complex w = ratio / denom;
    z[i] -= w;
    BigFloat mag = abs(w), zm = abs(z[i]);
    double rel = mag.exponent() - std::max(0L, zm.exponent());
    worst = std::max(worst, std::ldexp(1.0, static_cast<int>(std::max(rel, -1000.0))));
  }
  return worst;
}

}  // namespace

RootApproximation complex_roots(const IntPolynomial& f, long prec) {
  const int n = f.degree();
  require(n >= 1, "root finding needs a nonconstant polynomial");
  RootApproximation out;
  out.prec = prec;

  long level = std::min(prec, 64L);
  auto coeffs_at = [&](long p) {
    std::vector<BigFloat> c;
    for (int i = 0; i <= n; ++i) c.emplace_back(p, f[i]);
    BigFloat lc = c[n];
    for (auto& x : c) x /= lc;
    return c;
  };

  // starting points on a circle, rotated off the axes
  double r0 = std::exp2(root_bound_log2(f));
  std::vector<Complex> z;
  for (int k = 0; k < n; ++k) {
    double t = 2.0 * M_PI * k / n + 0.4;
    Complex zk(level);
    mpfr_set_d(zk.re.get(), r0 * std::cos(t), MPFR_RNDN);
    mpfr_set_d(zk.im.get(), r0 * std::sin(t), MPFR_RNDN);
    z.push_back(std::move(zk));
  }

  for (;;) {
    auto c = coeffs_at(level);
    const double target = std::ldexp(1.0, -static_cast<int>(std::min(level - 8, 1000L)));
    const int max_iter = level == std::min(prec, 64L) ? 500 : 60;
    for (int it = 0; it < max_iter; ++it)
      if (aberth_sweep(c, z) < target) break;
    if (level >= prec) break;
    level = std::min(prec, level * 2);
    for (auto& zk : z) set_prec(zk, level);
  }

  // inclusion radii n |f(z_i)| / |a_n prod (z_i - z_j)|
  auto c = coeffs_at(prec);
  Complex v(prec), dv(prec);
  for (int i = 0; i < n; ++i) {
    horner(c, z[i], v, dv);
    Complex prod(BigFloat(prec, 1), BigFloat(prec));
    for (int j = 0; j < n; ++j)
      if (j != i) prod *= z[i] - z[j];
    BigFloat pm = abs(prod);
    BigFloat r = abs(v) * BigFloat(prec, n);
    if (pm.is_zero())
      mpfr_set_inf(r.get(), 1);
    else
      r /= pm;
    BigFloat r64(64);
    mpfr_set(r64.get(), r.get(), MPFR_RNDU);
    out.radii.push_back(std::move(r64));
  }
  out.isolated = true;
  for (int i = 0; i < n && out.isolated; ++i)
    for (int j = i + 1; j < n && out.isolated; ++j) {
      BigFloat d = abs(z[i] - z[j]);
      BigFloat s(prec);
      mpfr_add(s.get(), out.radii[i].get(), out.radii[j].get(), MPFR_RNDU);
      if (!(s < d)) out.isolated = false;
    }
  out.roots = std::move(z);
  return out;
}

}  // namespace galois::numeric
