// Copyright 2026 The galois6 Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef GALOIS_FFACTOR_HPP
#define GALOIS_FFACTOR_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "galois/modp.hpp"
#include "galois/polynomial.hpp"

namespace galois {

using DegreePattern = Partition;

struct ModPFactor {
  modp::Poly poly;  // monic, irreducible over F_p
  int multiplicity = 1;
};

struct ModPFactorization {
  std::uint64_t p = 0;
  std::uint64_t leading = 0;  // leading coefficient of f mod p
  std::vector<ModPFactor> factors;

  /// leading * prod factor^multiplicity.
  modp::Poly product() const;
  DegreePattern pattern() const;
};

/// Complete factorization of f mod p: squarefree decomposition, distinct-
/// degree splitting and seeded equal-degree splitting. Factors are returned
/// sorted by (degree, coefficients), so the result does not depend on the
/// seed.
ModPFactorization factor_mod_p(const IntPolynomial& f, std::uint64_t p,
                               std::uint64_t seed = 0x5eed);

/// Cycle type realised by Frobenius at an unramified prime. f must be monic.
/// Throws RamifiedPrime if p divides the discriminant.
DegreePattern degree_pattern(const IntPolynomial& f, std::uint64_t p);
/// Same, with the discriminant supplied by the caller.
DegreePattern degree_pattern(const IntPolynomial& f, std::uint64_t p, const Integer& disc);

/// Fast path: the pattern of f mod p when p does not divide the leading
/// coefficient and f mod p is squarefree, nullopt otherwise. Works for
/// non-monic f.
std::optional<DegreePattern> unramified_pattern(const IntPolynomial& f, std::uint64_t p);

struct IntFactorization {
  Integer content;  // signed so that content * prod factors == f
  std::vector<std::pair<IntPolynomial, int>> factors;

  IntPolynomial product() const;
};

/// Factors f into primitive irreducible polynomials with positive leading
/// coefficients, times a signed content.
IntFactorization factor_over_z(const IntPolynomial& f);

/// Irreducible factors of a primitive squarefree polynomial (Hensel lifting
/// plus exhaustive recombination).
std::vector<IntPolynomial> factor_squarefree(const IntPolynomial& f);

bool is_irreducible(const IntPolynomial& f);

/// Multifactor Hensel lifting record: level k holds the factors modulo p^(k+1).
struct HenselLift {
  std::uint64_t p = 0;
  std::vector<std::vector<IntPolynomial>> chain;
  Integer modulus;  // p^chain.size()
};

/// Lifts monic factors u_i with f = lc(f) prod u_i mod p to modulus >= bound.
HenselLift hensel_lift(const IntPolynomial& f, const std::vector<modp::Poly>& factors,
                       std::uint64_t p, const Integer& bound);

/// Mignotte-type bound on the coefficients of any factor of f, times |lc f|.
Integer factor_coefficient_bound(const IntPolynomial& f);

}  // namespace galois

#endif  // GALOIS_FFACTOR_HPP
