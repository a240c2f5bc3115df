// Copyright 2026 The galois6 Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef GALOIS_CLASSIFIER_HPP
#define GALOIS_CLASSIFIER_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "galois/ffactor.hpp"
#include "galois/groups.hpp"
#include "galois/polynomial.hpp"
#include "galois/resolvents.hpp"

namespace galois {

/// Exact integer square test. d must be nonzero.
bool is_square(const Integer& d);

struct NrBound {
  int r = 0;
  int s = 0;
  double N = 0.0;
};

/// N(r) = s (s ln s + 2 ln s + 3) with r = 2s non-real roots.
NrBound nr_bound(int r);

/// For prime degree p with r non-real roots the group is A_p or S_p when
/// p exceeds the listed threshold (r = 4, 6, 8, 10). nullopt outside the list.
std::optional<int> prime_degree_threshold(int r);
bool forces_alternating_or_symmetric(int p, int r);

struct PrimeBudget {
  std::uint64_t max_prime = 211;
  int stable_stop = 10;  // stop after this many primes without change; 0 disables
};

struct PrimeObservation {
  std::uint64_t p = 0;
  DegreePattern pattern;
};

/// Degree patterns at the good primes of a monic irreducible sextic. With
/// stable_stop set, sampling ends once the pattern-compatible candidate set
/// has not changed for that many consecutive good primes.
std::set<DegreePattern> sample_patterns(const IntPolynomial& f, const PrimeBudget& budget = {},
                                        std::vector<PrimeObservation>* log = nullptr);

struct ResolventEvidence {
  std::string invariant;
  int index = 0;
  IntPolynomial polynomial;  // the sextic the resolvent was built from
  IntPolynomial resolvent;
  DegreePattern factor_degrees;
  std::vector<bool> factor_square_disc;  // per factor, degree order
  std::vector<std::string> survivors;
};

struct ClassificationCertificate {
  IntPolynomial input;
  IntPolynomial monic;
  Integer discriminant;
  std::vector<PrimeObservation> primes;
  std::set<DegreePattern> patterns;
  int real_roots = 0;
  CycleType conj_type;
  bool disc_square = false;
  std::vector<ResolventEvidence> resolvents;
  std::vector<std::vector<std::string>> trace;
  std::string label;

  std::string to_json(int indent = -1) const;
};

struct Classification {
  std::string label;
  ClassificationCertificate certificate;
};

struct ClassifyOptions {
  PrimeBudget budget;
  long max_precision = 1L << 16;
};

/// Galois group label (g1..g15 or S6) of an irreducible integer sextic.
Classification classify(const IntPolynomial& f, const ClassifyOptions& options = {});

/// Multiset of (orbit length, image is even) for a group acting on the cosets
/// of Stab_S6(F), as a sorted list.
std::vector<std::pair<int, bool>> resolvent_orbit_data(const InvariantPoly& F, const TransitiveGroup& group);

/// |Gal(f)| by descending the lattice of concrete transitive subgroups of S6:
/// containment Gal <= K is decided by integrality of prod_{s in K} (x - V_s)
/// for a separating linear form V in the roots.
int oracle_order(const IntPolynomial& f, std::uint64_t seed = 1);

}  // namespace galois

#endif  // GALOIS_CLASSIFIER_HPP
