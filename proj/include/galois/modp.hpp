// Copyright 2026 The galois6 Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef GALOIS_MODP_HPP
#define GALOIS_MODP_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "galois/polynomial.hpp"

namespace galois::modp {

using Coeff = std::uint64_t;
/// Dense polynomial over F_p, ascending degree, trailing zeros trimmed.
using Poly = std::vector<Coeff>;

/// Arithmetic in F_p for p < 2^63.
class Field {
 public:
  explicit Field(Coeff p) : p_(p) {}
  Coeff p() const noexcept { return p_; }

  Coeff add(Coeff a, Coeff b) const noexcept {
    Coeff s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Coeff sub(Coeff a, Coeff b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Coeff neg(Coeff a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const noexcept {
    return static_cast<Coeff>(static_cast<unsigned __int128>(a) * b % p_);
  }
  Coeff pow(Coeff a, std::uint64_t e) const noexcept;
  Coeff inv(Coeff a) const;
  Coeff reduce(const Integer& a) const;

 private:
  Coeff p_;
};

inline int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }
void trim(Poly& f);

Poly reduce(const IntPolynomial& f, const Field& k);
/// Symmetric lift to Z (coefficients in (-p/2, p/2]).
IntPolynomial lift(const Poly& f, const Field& k);

Poly add(const Poly& a, const Poly& b, const Field& k);
Poly sub(const Poly& a, const Poly& b, const Field& k);
Poly mul(const Poly& a, const Poly& b, const Field& k);
Poly scale(const Poly& a, Coeff c, const Field& k);
Poly derivative(const Poly& a, const Field& k);
/// Quotient and remainder; b must be nonzero.
void divmod(const Poly& a, const Poly& b, const Field& k, Poly* q, Poly* r);
Poly rem(const Poly& a, const Poly& b, const Field& k);
Poly quot(const Poly& a, const Poly& b, const Field& k);
Poly monic(const Poly& a, const Field& k);
/// Monic gcd.
Poly gcd(Poly a, Poly b, const Field& k);
/// Returns g = gcd(a, b) and s, t with s a + t b = g.
Poly xgcd(const Poly& a, const Poly& b, const Field& k, Poly* s, Poly* t);
Poly powmod(const Poly& base, const Integer& e, const Poly& m, const Field& k);
Poly powmod(const Poly& base, std::uint64_t e, const Poly& m, const Field& k);

/// Degrees of the irreducible factors of a monic squarefree polynomial, via
/// distinct-degree splitting, sorted non-increasing.
Partition ddf_pattern(const Poly& f, const Field& k);

/// Sorted list of the first primes up to and including `bound`.
const std::vector<std::uint32_t>& small_primes();
std::vector<std::uint32_t> primes_up_to(std::uint32_t bound);

}  // namespace galois::modp

#endif  // GALOIS_MODP_HPP
