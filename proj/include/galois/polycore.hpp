// Copyright 2026 The galois6 Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef GALOIS_POLYCORE_HPP
#define GALOIS_POLYCORE_HPP

#include <array>
#include <vector>

#include "galois/polynomial.hpp"

namespace galois {

/// max |a_i| of a nonzero polynomial or form.
struct Height {
  Integer value;
  friend bool operator==(const Height&, const Height&) = default;
};

/// Binary form F(x, y) = sum a_i x^i y^(n-i), stored as a0..an. Unlike
/// IntPolynomial the formal degree n is kept even when a_n = 0.
class BinaryForm {
 public:
  BinaryForm() = default;
  BinaryForm(std::vector<Integer> coeffs);

  int degree() const noexcept { return static_cast<int>(a_.size()) - 1; }
  const Integer& operator[](int i) const { return a_[static_cast<std::size_t>(i)]; }
  const std::vector<Integer>& coeffs() const noexcept { return a_; }
  bool is_zero() const;

  /// Divides out the coefficient gcd and makes the first nonzero coefficient
  /// (lowest index) positive. Idempotent.
  BinaryForm primitive() const;
  bool is_primitive() const;

  /// F(a x + b y, c x + d y).
  BinaryForm substitute(const Integer& a, const Integer& b, const Integer& c,
                        const Integer& d) const;
  /// F(y, x).
  BinaryForm swapped() const;

  friend bool operator==(const BinaryForm&, const BinaryForm&) = default;

 private:
  std::vector<Integer> a_;
};

Height height(const IntPolynomial& f);
Height height(const BinaryForm& f);

/// a_n^(n-1) f(x / a_n): monic, integral, same splitting field.
IntPolynomial monic_associate(const IntPolynomial& f);

BinaryForm homogenize(const IntPolynomial& f, int n);
IntPolynomial dehomogenize(const BinaryForm& form);

/// Determinant of the Sylvester matrix, by fraction-free elimination.
Integer resultant(const IntPolynomial& f, const IntPolynomial& g);

/// (-1)^(n(n-1)/2) res(f, f') / a_n.
Integer discriminant(const IntPolynomial& f);

/// f / gcd(f, f'), primitive.
IntPolynomial squarefree_part(const IntPolynomial& f);

/// Number of distinct real roots over all of R, from sign variations of the
/// Sturm sequence at -inf and +inf.
int sturm_real_roots(const IntPolynomial& f);

/// Exact determinant of a square integer matrix (Bareiss).
Integer determinant(std::vector<std::vector<Integer>> m);

}  // namespace galois

#endif  // GALOIS_POLYCORE_HPP
