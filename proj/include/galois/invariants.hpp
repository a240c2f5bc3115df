// Copyright 2026 The galois6 Authors.
// SPDX-License-Identifier: Apache-2.0

// Igusa-Clebsch invariants of binary sextics and GL2(Q)-equivalence classes.

#ifndef GALOIS_INVARIANTS_HPP
#define GALOIS_INVARIANTS_HPP

#include <string>
#include <vector>

#include "galois/polycore.hpp"

namespace galois {

/// Binary form with rational coefficients, a_i the coefficient of x^i y^(m-i).
using RationalForm = std::vector<Rational>;

/// Transvectant (f, g)_k of forms of degrees m and n, normalized by
/// (m-k)!(n-k)!/(m! n!).
RationalForm transvectant(const RationalForm& f, const RationalForm& g, int k);

struct IgusaTuple {
  Rational J2, J4, J6, J10;
  friend bool operator==(const IgusaTuple&, const IgusaTuple&) = default;
};

struct AbsoluteTriple {
  Rational t1, t2, t3;
  friend bool operator==(const AbsoluteTriple&, const AbsoluteTriple&) = default;
  friend bool operator<(const AbsoluteTriple& a, const AbsoluteTriple& b) {
    if (a.t1 != b.t1) return a.t1 < b.t1;
    if (a.t2 != b.t2) return a.t2 < b.t2;
    return a.t3 < b.t3;
  }
};

/// Igusa-Clebsch invariants I2, I4, I6, I10 built from the Clebsch
/// transvectants A, B, C, D. For x^6 - x^3 + 1 this gives
/// (-234, 1944, -129762, -19683); J10 vanishes exactly on non-squarefree
/// forms. Weight law: J_d(F o M) = det(M)^(3d) J_d(F).
IgusaTuple igusa(const BinaryForm& form);

/// (J2^5/J10, J4^5/J10^2, J6^5/J10^3). Throws NotSquarefree when J10 = 0.
AbsoluteTriple absolute(const IgusaTuple& j);

/// Groups the forms by equal absolute invariants. Each class lists indices
/// into forms in increasing order; classes are ordered by first member.
/// Throws NotSquarefree naming the first offending index.
std::vector<std::vector<std::size_t>> equivalence_classes(const std::vector<BinaryForm>& forms);

/// "num/den", always with an explicit denominator.
std::string rational_string(const Rational& q);

}  // namespace galois

#endif  // GALOIS_INVARIANTS_HPP
