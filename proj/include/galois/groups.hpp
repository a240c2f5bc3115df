// Copyright 2026 The galois6 Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef GALOIS_GROUPS_HPP
#define GALOIS_GROUPS_HPP

#include <array>
#include <bitset>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "galois/types.hpp"

namespace galois {

/// Permutation of the points 1..6, stored 0-based. Composition follows
/// functions: (a * b)(i) = a(b(i)).
class Permutation {
 public:
  static constexpr int kPoints = 6;

  Permutation();  // identity
  explicit Permutation(const std::array<std::uint8_t, kPoints>& image);

  /// Parses cycle notation such as "(1,2,3)(4,5)", "(1 2)" or "()".
  static Permutation parse(const std::string& text);
  static Permutation from_cycles(const std::vector<std::vector<int>>& cycles);

  int operator()(int i) const { return image_[i]; }  // 0-based
  const std::array<std::uint8_t, kPoints>& image() const { return image_; }

  Permutation inverse() const;
  bool is_identity() const;
  bool is_even() const;
  Partition cycle_type() const;  // includes fixed points, non-increasing
  /// Rank in [0, 720) by Lehmer code.
  int rank() const;
  static Permutation unrank(int r);

  std::string to_string() const;  // "(1,2,3)(4,5)", "()" for identity

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::array<std::uint8_t, kPoints> image_;
};

using CycleType = Partition;

/// Subset of S6 as a bitmap over permutation ranks.
using ElementSet = std::bitset<720>;

constexpr int kSignatureClasses = 10;
using Signature = std::array<int, kSignatureClasses>;

/// The nontrivial cycle types in signature order:
/// (2), (2)^2, (2)^3, (3), (3)(2), (3)^2, (4), (4)(2), (5), (6).
const std::array<CycleType, kSignatureClasses>& signature_classes();
/// Index 0..9 of a nontrivial cycle type, -1 for the identity type.
int signature_class(const CycleType& t);

/// Closure of the generators under composition; {identity} when empty.
std::vector<Permutation> expand(const std::vector<Permutation>& generators);
ElementSet element_set(const std::vector<Permutation>& elements);
std::vector<Permutation> elements_of(const ElementSet& set);

struct GapId {
  int order = 0;
  int index = 0;
  friend bool operator==(const GapId&, const GapId&) = default;
};

struct TransitiveGroup {
  std::string label;  // g1..g15 or S6
  std::string name;
  int transitive_id = 0;  // T-number in the standard list of degree 6
  GapId gap_id;
  std::vector<Permutation> generators;
  std::vector<Permutation> elements;  // sorted
  ElementSet members;
  int order = 0;
  Signature signature{};
  bool in_A6 = false;

  bool contains(const Permutation& s) const { return members.test(s.rank()); }
  bool is_transitive() const;
};

Signature signature(const std::vector<Permutation>& elements);
bool in_A6(const std::vector<Permutation>& elements);

/// The 16 transitive subgroups of S6, g1..g15 then S6, validated on first use.
const std::vector<TransitiveGroup>& transitive_groups();
const TransitiveGroup& group_by_label(const std::string& label);
/// Index into transitive_groups(), nullopt for an unknown label.
std::optional<std::size_t> group_index(const std::string& label);

/// Labels of groups whose signature admits every observed cycle type and the
/// complex-conjugation type, and whose parity matches when known. Throws
/// InconsistentEvidence when nothing survives.
std::vector<std::string> candidates(const std::set<CycleType>& observed, const CycleType& conj_type,
                                    std::optional<bool> parity);

/// All distinct conjugates of a subgroup of S6.
std::vector<ElementSet> conjugates(const ElementSet& group);

/// True when some conjugate of a lies inside b.
bool conjugate_contained(const TransitiveGroup& a, const TransitiveGroup& b);

struct GroupLattice {
  /// contains[i][j]: group i is contained in a conjugate of group j (i != j).
  std::vector<std::vector<bool>> contains;
  /// Covering edges (i, j): i is a maximal proper subgroup class of j.
  std::vector<std::pair<int, int>> edges;
};

const GroupLattice& group_lattice();

/// Left cosets sigma H of a subgroup H in a group G.
class CosetSpace {
 public:
  CosetSpace(const std::vector<Permutation>& g, const ElementSet& h);

  int size() const { return static_cast<int>(reps_.size()); }
  const std::vector<Permutation>& representatives() const { return reps_; }
  int coset_of(const Permutation& s) const;
  /// The permutation of cosets induced by left multiplication.
  std::vector<int> action(const Permutation& tau) const;

  struct Orbit {
    std::vector<int> cosets;
    bool even = true;  // the group's image acting on this orbit lies in Alt
  };
  /// Orbits of the group generated by gens acting on the cosets.
  std::vector<Orbit> orbits(const std::vector<Permutation>& gens) const;
  /// Sorted orbit lengths.
  std::vector<int> orbit_lengths(const std::vector<Permutation>& gens) const;

 private:
  std::vector<Permutation> reps_;
  std::array<int, 720> coset_{};
};

/// JSON text of the group table: label, gap_id, order, generators,
/// signature, in_A6.
std::string groups_json();

std::string format_cycle_type(const CycleType& t);

}  // namespace galois

#endif  // GALOIS_GROUPS_HPP
