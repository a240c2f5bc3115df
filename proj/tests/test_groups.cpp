// Copyright 2026 The galois6 Authors.
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "galois/groups.hpp"

using namespace galois;

TEST_CASE("permutation basics") {
  auto c = Permutation::parse("(1,2,3,4,5,6)");
  CHECK(c.cycle_type() == CycleType{6});
  CHECK(Permutation::parse("(1 2)(3 4)(5 6)").cycle_type() == CycleType{2, 2, 2});
  CHECK(Permutation().cycle_type() == CycleType{1, 1, 1, 1, 1, 1});
  CHECK(Permutation::parse("()").is_identity());
  CHECK(c.to_string() == "(1,2,3,4,5,6)");
  CHECK((c * c.inverse()).is_identity());
  // (a * b)(i) = a(b(i))
  auto a = Permutation::parse("(1,2)"), b = Permutation::parse("(2,3)");
  CHECK((a * b)(1) == 2);  // b sends 2 to 3, a fixes 3
  CHECK((a * b).to_string() == "(1,2,3)");
  CHECK_THROWS_AS(Permutation::parse("(1,7)"), Error);
  CHECK_THROWS_AS(Permutation::parse("(1,2)(2,3)"), Error);
  CHECK_THROWS_AS(Permutation::parse("1,2"), Error);
}

TEST_CASE("rank is a bijection onto 0..719") {
  std::vector<bool> hit(720, false);
  for (int r = 0; r < 720; ++r) {
    auto p = Permutation::unrank(r);
    CHECK(p.rank() == r);
    hit[r] = true;
  }
  CHECK(std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }));
}

TEST_CASE("expand") {
  CHECK(expand({Permutation::parse("(1,2,3,4,5,6)")}).size() == 6);
  CHECK(expand({Permutation::parse("(1,2)"), Permutation::parse("(1,2,3,4,5,6)")}).size() == 720);
  auto triv = expand({});
  REQUIRE(triv.size() == 1);
  CHECK(triv[0].is_identity());
}

TEST_CASE("the sixteen transitive groups") {
  const auto& gs = transitive_groups();
  REQUIRE(gs.size() == 16);
  std::vector<int> orders;
  for (const auto& g : gs) {
    orders.push_back(g.order);
    CHECK(g.is_transitive());
    CHECK(720 % g.order == 0);
    CHECK(g.order % 6 == 0);
    CHECK(static_cast<int>(g.elements.size()) == g.gap_id.order);
  }
  CHECK(orders == std::vector<int>{6, 6, 12, 12, 18, 24, 24, 24, 36, 36, 48, 60, 72, 120, 360, 720});
  // pairwise non-conjugate
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = i + 1; j < gs.size(); ++j)
      if (gs[i].order == gs[j].order)
        CHECK_FALSE(conjugate_contained(gs[i], gs[j]));
}

TEST_CASE("signatures") {
  Signature c6{0, 0, 1, 0, 0, 1, 0, 0, 0, 1};
  CHECK(group_by_label("g1").signature == c6);
  Signature all;
  all.fill(1);
  CHECK(group_by_label("S6").signature == all);
  CHECK(signature(expand({})) == Signature{});
  // table rows that are printed correctly
  CHECK(group_by_label("g2").signature == Signature{0, 0, 1, 0, 0, 1, 0, 0, 0, 0});
  CHECK(group_by_label("g7").signature == Signature{0, 1, 0, 0, 0, 1, 0, 1, 0, 0});
  CHECK(group_by_label("g8").signature == Signature{0, 1, 1, 0, 0, 1, 1, 0, 0, 0});
  CHECK(group_by_label("g9").signature == Signature{0, 1, 0, 1, 0, 1, 0, 1, 0, 0});
  CHECK(group_by_label("g10").signature == Signature{0, 1, 1, 1, 0, 1, 0, 0, 0, 1});
  CHECK(group_by_label("g15").signature == Signature{0, 1, 0, 1, 0, 1, 0, 1, 1, 0});
  // recomputed values for the two rows printed as all zero
  CHECK(group_by_label("g3").signature == Signature{0, 1, 1, 0, 0, 1, 0, 0, 0, 1});
  CHECK(group_by_label("g4").signature == Signature{0, 1, 0, 0, 0, 1, 0, 0, 0, 0});
}

TEST_CASE("parity") {
  CHECK(group_by_label("g15").in_A6);
  CHECK_FALSE(group_by_label("g1").in_A6);
  CHECK_FALSE(group_by_label("S6").in_A6);
  std::vector<std::string> even;
  for (const auto& g : transitive_groups())
    if (g.in_A6) even.push_back(g.label);
  CHECK(even == std::vector<std::string>{"g4", "g7", "g9", "g12", "g15"});
  // even groups have no odd cycle types: (2), (2)^3, (3)(2), (4), (6)
  for (const auto& g : transitive_groups())
    if (g.in_A6)
      for (int c : {0, 2, 4, 6, 9}) CHECK(g.signature[c] == 0);
}

TEST_CASE("candidates") {
  auto six = candidates({{6}}, {1, 1, 1, 1, 1, 1}, std::nullopt);
  std::vector<std::string> expect;
  for (const auto& g : transitive_groups()) {
    bool has6 = std::any_of(g.elements.begin(), g.elements.end(),
                            [](const Permutation& p) { return p.cycle_type() == CycleType{6}; });
    if (has6) expect.push_back(g.label);
  }
  CHECK(six == expect);
  CHECK(candidates({}, {1, 1, 1, 1, 1, 1}, std::nullopt).size() == 16);
  CHECK(candidates({{5, 1}}, {1, 1, 1, 1, 1, 1}, std::nullopt) ==
        std::vector<std::string>{"g12", "g14", "g15", "S6"});
  CHECK(candidates({{5, 1}}, {1, 1, 1, 1, 1, 1}, true) == std::vector<std::string>{"g12", "g15"});
  CHECK(candidates({}, {2, 2, 2}, std::nullopt).size() == 11);
  try {
    candidates({{5, 1}, {6}}, {1, 1, 1, 1, 1, 1}, true);
    FAIL("expected inconsistent evidence");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InconsistentEvidence);
  }
}

TEST_CASE("lattice") {
  const auto& lat = group_lattice();
  const auto& gs = transitive_groups();
  int n = static_cast<int>(gs.size()), containments = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (lat.contains[i][j]) {
        ++containments;
        CHECK_FALSE(lat.contains[j][i]);
        for (int c = 0; c < kSignatureClasses; ++c) CHECK(gs[i].signature[c] <= gs[j].signature[c]);
      }
  CHECK(containments == 52);
  CHECK(lat.edges.size() == 28);
  // S6 is the unique maximal node
  for (int i = 0; i < n; ++i) {
    bool maximal = true;
    for (int j = 0; j < n; ++j) maximal = maximal && !lat.contains[i][j];
    CHECK(maximal == (gs[i].label == "S6"));
  }
  std::vector<std::pair<std::string, std::string>> edges;
  for (auto [a, b] : lat.edges) edges.emplace_back(gs[a].label, gs[b].label);
  std::sort(edges.begin(), edges.end());
  std::vector<std::pair<std::string, std::string>> expect = {
      {"g1", "g3"},   {"g1", "g5"},   {"g1", "g6"},   {"g10", "g13"}, {"g11", "S6"},  {"g12", "g14"},
      {"g12", "g15"}, {"g13", "S6"},  {"g14", "S6"},  {"g15", "S6"},  {"g2", "g3"},   {"g2", "g5"},
      {"g2", "g8"},   {"g3", "g10"},  {"g3", "g11"},  {"g3", "g14"},  {"g4", "g12"},  {"g4", "g6"},
      {"g4", "g7"},   {"g4", "g8"},   {"g5", "g10"},  {"g6", "g11"},  {"g7", "g11"},  {"g7", "g15"},
      {"g8", "g11"},  {"g8", "g14"},  {"g9", "g13"},  {"g9", "g15"}};
  CHECK(edges == expect);
}

TEST_CASE("conjugates and coset actions") {
  CHECK(conjugates(group_by_label("g15").members).size() == 1);
  CHECK(conjugates(group_by_label("g14").members).size() == 6);
  CHECK(conjugates(group_by_label("g13").members).size() == 10);
  CHECK(conjugates(group_by_label("g11").members).size() == 15);

  const auto& s6 = group_by_label("S6");
  // point stabiliser of 1: six cosets, S6 acts transitively and oddly
  ElementSet stab;
  for (const auto& e : s6.elements)
    if (e(0) == 0) stab.set(e.rank());
  CosetSpace cs(s6.elements, stab);
  CHECK(cs.size() == 6);
  CHECK(cs.orbit_lengths(s6.generators) == std::vector<int>{6});
  auto orbs = cs.orbits(s6.generators);
  CHECK_FALSE(orbs[0].even);
  CHECK(cs.orbits(group_by_label("g15").generators)[0].even);
  CHECK(cs.orbit_lengths({}) == std::vector<int>(6, 1));
}

TEST_CASE("json export") {
  auto js = groups_json();
  CHECK(js.find("\"label\": \"g1\"") != std::string::npos);
  CHECK(js.find("(1,2,3,4,5,6)") != std::string::npos);
  CHECK(js.find("\"in_A6\"") != std::string::npos);
}
