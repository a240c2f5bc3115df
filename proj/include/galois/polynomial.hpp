// Copyright 2026 The galois6 Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef GALOIS_POLYNOMIAL_HPP
#define GALOIS_POLYNOMIAL_HPP

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "galois/types.hpp"

namespace galois {

/// Dense univariate polynomial a0 + a1 x + ... + an x^n over an exact scalar
/// ring. Coefficients are stored in ascending degree and trailing zeros are
/// always trimmed, so the zero polynomial has an empty coefficient list.
template <typename Scalar>
class Polynomial {
 public:
  using scalar_type = Scalar;

  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) {
    trim();
  }
  Polynomial(std::initializer_list<Scalar> coeffs) : c_(coeffs) { trim(); }

  static Polynomial constant(const Scalar& c) { return Polynomial({c}); }
  static Polynomial monomial(const Scalar& c, int degree) {
    std::vector<Scalar> v(static_cast<std::size_t>(degree) + 1, Scalar(0));
    v.back() = c;
    return Polynomial(std::move(v));
  }
  static Polynomial x() { return monomial(Scalar(1), 1); }

  bool is_zero() const noexcept { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  std::size_t size() const noexcept { return c_.size(); }

  const Scalar& operator[](int i) const {
    static const Scalar zero(0);
    return (i < 0 || i >= static_cast<int>(c_.size())) ? zero : c_[i];
  }
  const Scalar& leading() const {
    require(!c_.empty(), "leading coefficient of the zero polynomial");
    return c_.back();
  }
  std::span<const Scalar> coeffs() const noexcept { return c_; }
  const std::vector<Scalar>& vec() const noexcept { return c_; }

  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  Scalar operator()(const Scalar& x) const {
    Scalar acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Scalar> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
    return Polynomial(std::move(d));
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& a : r.c_) a = -a;
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Scalar& s) {
    for (auto& a : c_) a *= s;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Scalar& s) { return a *= s; }
  friend Polynomial operator*(const Scalar& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> r(a.c_.size() + b.c_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(r));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.c_ == b.c_;
  }

  /// Polynomial composition this(g(x)).
  Polynomial compose(const Polynomial& g) const {
    Polynomial acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * g + constant(*it);
    return acc;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Scalar> c_;
};

using IntPolynomial = Polynomial<Integer>;
using RatPolynomial = Polynomial<Rational>;

/// Division with remainder over a field.
template <typename Field>
std::pair<Polynomial<Field>, Polynomial<Field>> divmod(const Polynomial<Field>& a,
                                                       const Polynomial<Field>& b) {
  require(!b.is_zero(), "division by the zero polynomial");
  std::vector<Field> r(a.vec());
  const int db = b.degree();
  if (a.degree() < db) return {{}, a};
  std::vector<Field> q(static_cast<std::size_t>(a.degree() - db) + 1, Field(0));
  const Field lead = b.leading();
  for (int i = a.degree(); i >= db; --i) {
    if (r[i] == 0) continue;
    Field t = r[i] / lead;
    q[i - db] = t;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= t * b[j];
  }
  return {Polynomial<Field>(std::move(q)), Polynomial<Field>(std::move(r))};
}

/// Monic gcd over a field; the gcd of two zero polynomials is zero.
template <typename Field>
Polynomial<Field> gcd(Polynomial<Field> a, Polynomial<Field> b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a * Field(Field(1) / a.leading());
}

RatPolynomial to_rational(const IntPolynomial& f);

/// Clears denominators and divides by the content, making the leading
/// coefficient positive.
IntPolynomial primitive_from_rational(const RatPolynomial& f);

/// Gcd of the coefficients (non-negative; zero for the zero polynomial).
Integer content(const IntPolynomial& f);
/// f / content(f) with positive leading coefficient.
IntPolynomial primitive_part(const IntPolynomial& f);

/// Primitive gcd over Q, normalized to positive leading coefficient.
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

/// Quotient a / b if b divides a in Z[x], nullopt otherwise.
std::optional<IntPolynomial> exact_divide(const IntPolynomial& a, const IntPolynomial& b);

/// f(x + c).
IntPolynomial taylor_shift(const IntPolynomial& f, const Integer& c);

/// "a0,a1,...,an" with arbitrary-precision decimal integers.
IntPolynomial parse_coefficients(const std::string& text);
std::string format_coefficients(const IntPolynomial& f);
/// Human-readable form such as "x^6 - x^3 + 1".
std::string to_string(const IntPolynomial& f);

}  // namespace galois

#endif  // GALOIS_POLYNOMIAL_HPP
