// Copyright 2026 The galois6 Authors.
// SPDX-License-Identifier: Apache-2.0

// Multiprecision floating point on top of MPFR and simultaneous complex root
// approximation with inclusion radii.

#ifndef GALOIS_NUMERIC_HPP
#define GALOIS_NUMERIC_HPP

#include <mpfr.h>

#include <optional>
#include <string>
#include <vector>

#include "galois/polynomial.hpp"

namespace galois::numeric {

class BigFloat {
 public:
  explicit BigFloat(long prec = 64);
  BigFloat(long prec, long value);
  BigFloat(long prec, const Integer& value);
  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept;
  ~BigFloat();

  long prec() const { return static_cast<long>(mpfr_get_prec(v_)); }
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// Base-2 exponent e with 2^(e-1) <= |x| < 2^e; a large negative value for 0.
  long exponent() const;
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  /// Nearest integer and the distance to it.
  Integer nearest_integer(BigFloat* distance = nullptr) const;

  BigFloat& operator+=(const BigFloat& o);
  BigFloat& operator-=(const BigFloat& o);
  BigFloat& operator*=(const BigFloat& o);
  BigFloat& operator/=(const BigFloat& o);

  friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
  friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
  friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
  friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }
  BigFloat operator-() const;
  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }

  std::string to_string(int digits = 20) const;

 private:
  mpfr_t v_;
};

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);

struct Complex {
  BigFloat re, im;

  explicit Complex(long prec = 64) : re(prec), im(prec) {}
  Complex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

  long prec() const { return re.prec(); }
  Complex& operator+=(const Complex& o);
  Complex& operator-=(const Complex& o);
  Complex& operator*=(const Complex& o);
  Complex& operator/=(const Complex& o);
  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
  Complex& scale(const BigFloat& s);
};

BigFloat norm(const Complex& z);  // |z|^2
BigFloat abs(const Complex& z);

/// Complex polynomial in ascending coefficient order.
using ComplexPoly = std::vector<Complex>;

struct RootApproximation {
  long prec = 0;
  std::vector<Complex> roots;
  /// Inclusion radii: the union of the disks holds every root, and each disk
  /// holds exactly one root when they are pairwise disjoint.
  std::vector<BigFloat> radii;
  bool isolated = false;  // the disks are pairwise disjoint
};

/// Approximates all complex roots of a squarefree polynomial by Aberth
/// iteration, climbing a precision ladder up to prec bits.
RootApproximation complex_roots(const IntPolynomial& f, long prec);

/// Coefficients of prod (x - r_k), ascending, at the given precision.
ComplexPoly poly_from_roots(const std::vector<Complex>& roots, long prec);

/// Nearest integers of the coefficients, or nullopt when some coefficient is
/// not within 1/4 of a real integer.
std::optional<std::vector<Integer>> round_to_integers(const ComplexPoly& c);

/// log2 of a bound on the modulus of every complex root of f.
double root_bound_log2(const IntPolynomial& f);

}  // namespace galois::numeric

#endif  // GALOIS_NUMERIC_HPP
