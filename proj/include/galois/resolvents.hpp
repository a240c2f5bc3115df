// Copyright 2026 The galois6 Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef GALOIS_RESOLVENTS_HPP
#define GALOIS_RESOLVENTS_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "galois/ffactor.hpp"
#include "galois/groups.hpp"
#include "galois/polynomial.hpp"

namespace galois {

/// Integer polynomial in x1..x6 as a sorted sparse term list.
class InvariantPoly {
 public:
  using Exponents = std::array<int, Permutation::kPoints>;
  struct Term {
    Exponents exps{};
    Integer coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  InvariantPoly() = default;
  explicit InvariantPoly(std::vector<Term> terms);

  /// Parses a sum of terms "c*x1^e1*...*x6^e6", e.g. "x1*x2 + x3*x4 - 2*x5^3".
  static InvariantPoly parse(const std::string& text);

  const std::vector<Term>& terms() const { return terms_; }
  int total_degree() const;
  /// F o sigma: the polynomial F(x_sigma(1), ..., x_sigma(6)).
  InvariantPoly permuted(const Permutation& sigma) const;
  std::string to_string() const;

  friend bool operator==(const InvariantPoly&, const InvariantPoly&) = default;

 private:
  std::vector<Term> terms_;  // sorted by exponents, nonzero coefficients
};

/// x1*x2 + x3*x4 + x5*x6, stabiliser of index 15 in S6.
const InvariantPoly& pairing_invariant();
/// x1*x2*x3 + x4*x5*x6, stabiliser of index 10 in S6.
const InvariantPoly& triple_invariant();

struct Stabilizer {
  ElementSet subgroup;
  std::vector<Permutation> coset_reps;
  int index = 0;
};

Stabilizer stabilizer(const InvariantPoly& F, const TransitiveGroup& G);

struct ResolventOptions {
  long min_precision = 0;         // bits
  long max_precision = 1L << 16;  // bits
};

struct ResolventResult {
  IntPolynomial resolvent;
  int index = 0;
  long precision = 0;  // bits used by the accepted evaluation
  bool squarefree = false;
  DegreePattern factor_degrees;         // non-increasing, when squarefree
  std::vector<IntPolynomial> factors;   // irreducible factors, when squarefree
};

/// R_G(F, f)(x) = prod over cosets sigma H of (x - F(alpha_sigma(1), ..., alpha_sigma(6))).
/// Coefficients are accepted once two precision levels round to the same
/// integers, each within 1/4 of an integer. Throws PrecisionFailure past
/// the precision ceiling.
ResolventResult resolvent(const InvariantPoly& F, const TransitiveGroup& G, const IntPolynomial& f,
                          const ResolventOptions& options = {});

/// Characteristic polynomial of T(alpha) on Q[x]/(f), via resultant_y(f(y), x - T(y)).
IntPolynomial tschirnhausen(const IntPolynomial& f, const IntPolynomial& T);
/// Same with a random T of small coefficients, retried until the result is squarefree.
IntPolynomial tschirnhausen(const IntPolynomial& f, std::uint64_t seed);

/// True when the factor degrees of R match the orbit lengths of the labelled
/// group acting on the cosets G/Stab_G(F).
bool orbit_length_check(const ResolventResult& R, const TransitiveGroup& G, const InvariantPoly& F,
                        const std::string& gal_label);

}  // namespace galois

#endif  // GALOIS_RESOLVENTS_HPP
