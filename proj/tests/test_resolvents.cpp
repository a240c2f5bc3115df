// Copyright 2026 The galois6 Authors.
// SPDX-License-Identifier: Apache-2.0

#include <random>

#include "doctest.h"
#include "galois/ffactor.hpp"
#include "galois/numeric.hpp"
#include "galois/polycore.hpp"
#include "galois/resolvents.hpp"
#include "oracles.hpp"
#include "table3.hpp"

using namespace galois;

namespace {
IntPolynomial P(std::initializer_list<long> c) {
  std::vector<Integer> v;
  for (long x : c) v.emplace_back(x);
  return IntPolynomial(std::move(v));
}
IntPolynomial desc(std::initializer_list<long> c) {
  std::vector<Integer> v(c.begin(), c.end());
  std::reverse(v.begin(), v.end());
  return IntPolynomial(std::move(v));
}
}  // namespace

TEST_CASE("complex roots") {
  auto r = numeric::complex_roots(P({1, 0, 1}), 128);
  REQUIRE(r.roots.size() == 2);
  CHECK(r.isolated);
  for (const auto& z : r.roots) {
    CHECK(std::fabs(z.re.to_double()) < 1e-30);
    CHECK(std::fabs(std::fabs(z.im.to_double()) - 1.0) < 1e-30);
  }
  auto s = numeric::complex_roots(P({1, 0, 0, -1, 0, 0, 1}), 256);
  CHECK(s.isolated);
  for (const auto& rad : s.radii) CHECK(rad.exponent() < -200);
}

TEST_CASE("invariant polynomial text format") {
  auto F = InvariantPoly::parse("x1*x2 + x3*x4 + x5*x6");
  CHECK(F.to_string() == "x1*x2 + x3*x4 + x5*x6");
  CHECK(F.total_degree() == 2);
  auto G = InvariantPoly::parse("2*x1^3 - x2 + 5");
  CHECK(G.to_string() == "2*x1^3 - x2 + 5");
  CHECK(InvariantPoly::parse(G.to_string()) == G);
  CHECK_THROWS_AS(InvariantPoly::parse("x7"), Error);
  CHECK_THROWS_AS(InvariantPoly::parse("x1 x2"), Error);
  CHECK_THROWS_AS(InvariantPoly::parse("3"), Error);
  CHECK_THROWS_AS(InvariantPoly::parse(""), Error);
  auto sigma = Permutation::parse("(1,3)(2,4)");
  CHECK(F.permuted(sigma) == F);
  CHECK(InvariantPoly::parse("x1").permuted(Permutation::parse("(1,2)")) == InvariantPoly::parse("x2"));
}

TEST_CASE("stabilizer index") {
  const auto& s6 = group_by_label("S6");
  CHECK(stabilizer(InvariantPoly::parse("x1+x2+x3+x4+x5+x6"), s6).index == 1);
  CHECK(stabilizer(InvariantPoly::parse("x1"), s6).index == 6);
  CHECK(stabilizer(pairing_invariant(), s6).index == 15);
  CHECK(stabilizer(triple_invariant(), s6).index == 10);
  auto st = stabilizer(pairing_invariant(), s6);
  CHECK(static_cast<int>(st.subgroup.count()) * st.index == 720);
}

TEST_CASE("trivial resolvents") {
  const auto& s6 = group_by_label("S6");
  auto f = P({3, -1, 0, 2, 0, 1, 1});
  auto r = resolvent(InvariantPoly::parse("x1"), s6, f);
  CHECK(r.resolvent == f);
  CHECK(r.index == 6);
  auto s = resolvent(InvariantPoly::parse("x1+x2+x3+x4+x5+x6"), s6, f);
  CHECK(s.resolvent == P({1, 1}));  // x + a5
}

TEST_CASE("pairing and triple resolvents match an independent evaluation") {
  const auto& s6 = group_by_label("S6");
  auto f = P({1, 0, 0, -1, 0, 0, 1});
  auto a = resolvent(pairing_invariant(), s6, f);
  CHECK(a.resolvent == desc({1, 0, 0, -45, 0, 0, 513, 0, 0, -702, 0, 0, -729, 0, 0, 0}));
  CHECK_FALSE(a.squarefree);
  auto b = resolvent(pairing_invariant(), s6, f, {.min_precision = 1024});
  CHECK(b.precision >= 1024);
  CHECK(a.resolvent == b.resolvent);
  auto t = resolvent(triple_invariant(), s6, f);
  CHECK(t.resolvent == desc({1, -1, -9, 6, 30, -9, -42, -3, 18, 8, 1}));

  auto g = P({-1, -1, 0, 0, 0, 0, 1});
  auto c = resolvent(pairing_invariant(), s6, g);
  CHECK(c.resolvent == desc({1, 0, 0, 42, 0, -21, 453, 0, -288, 1232, -353, -96, -1728, -792, -1296, 32}));
  CHECK(c.squarefree);
  CHECK(c.factor_degrees == DegreePattern{15});
  CHECK(orbit_length_check(c, s6, pairing_invariant(), "S6"));
  CHECK(resolvent(triple_invariant(), s6, g).resolvent == desc({1, 0, 9, 0, 27, -2, 27, -9, 0, -8, 1}));

  auto h = P({2, 0, 0, 0, 0, 0, 1});
  CHECK(resolvent(pairing_invariant(), s6, h).resolvent ==
        desc({1, 0, 0, -84, 0, 0, 1812, 0, 0, -9856, 0, 0, -27648, 0, 0, 0}));
  CHECK(resolvent(triple_invariant(), s6, h).resolvent == desc({1, 0, -18, 0, 108, 0, -216, 0, 0, 0, 0}));
}

TEST_CASE("precision ceiling") {
  const auto& s6 = group_by_label("S6");
  try {
    resolvent(pairing_invariant(), s6, P({1, 0, 0, -1, 0, 0, 1}), {.min_precision = 0, .max_precision = 32});
    FAIL("expected precision failure");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PrecisionFailure);
  }
}

TEST_CASE("tschirnhausen") {
  auto f = P({1, 0, 0, -1, 0, 0, 1});
  CHECK(tschirnhausen(f, IntPolynomial::x()) == f);
  CHECK(tschirnhausen(P({1, 0, 1}), P({1, 1})) == P({2, -2, 1}));
  std::mt19937_64 rng(17);
  for (int i = 0; i < 20; ++i) {
    auto base = oracle::random_poly(rng, 6, 3);
    base = monic_associate(base);
    if (!is_irreducible(base)) continue;
    auto g = tschirnhausen(base, static_cast<std::uint64_t>(i));
    CHECK(g.degree() == 6);
    CHECK(g.is_monic());
    CHECK(is_irreducible(g));
    // disc(g) = disc(f) * (index)^2, so the square class is preserved
    Rational q(discriminant(g), discriminant(base));
    q.canonicalize();
    CHECK(mpz_perfect_square_p(q.get_num().get_mpz_t()));
    CHECK(mpz_perfect_square_p(q.get_den().get_mpz_t()));
  }
}

TEST_CASE("resolvent degree and orbit lengths on the cyclic sextics") {
  const auto& s6 = group_by_label("S6");
  for (const auto& row : testdata::cyclic_sextics()) {
    auto f = monic_associate(testdata::to_poly(row.coeffs));
    for (const InvariantPoly* F : {&pairing_invariant(), &triple_invariant()}) {
      auto r = resolvent(*F, s6, f);
      std::uint64_t seed = 1;
      IntPolynomial g = f;
      while (!r.squarefree) {
        g = tschirnhausen(f, seed++);
        r = resolvent(*F, s6, g);
      }
      CHECK(r.resolvent.degree() == r.index);
      CHECK(orbit_length_check(r, s6, *F, "g1"));
    }
  }
}

TEST_CASE("orbit length check needs a squarefree resolvent") {
  const auto& s6 = group_by_label("S6");
  auto r = resolvent(pairing_invariant(), s6, P({1, 0, 0, -1, 0, 0, 1}));
  CHECK_THROWS_AS(orbit_length_check(r, s6, pairing_invariant(), "g1"), Error);
}
