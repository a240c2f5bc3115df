// Copyright 2026 The galois6 Authors.
// SPDX-License-Identifier: Apache-2.0

#include "doctest.h"
#include "galois/polycore.hpp"
#include "oracles.hpp"

using namespace galois;

namespace {
IntPolynomial P(std::initializer_list<long> c) {
  std::vector<Integer> v;
  for (long x : c) v.emplace_back(x);
  return IntPolynomial(std::move(v));
}
}  // namespace

TEST_CASE("height") {
  CHECK(height(P({1, 0, 0, -1, 0, 0, 1})).value == 1);
  CHECK(height(P({1, 3, 6, 6, 0, 0, 3})).value == 6);
  CHECK(height(P({0, 0, 0, 0, 0, 0, 1})).value == 1);
  CHECK(height(-P({1, -7, 2})).value == height(P({1, -7, 2})).value);
  CHECK_THROWS_AS(height(IntPolynomial{}), Error);
}

TEST_CASE("monic associate") {
  CHECK(monic_associate(P({1, 1, 0, 0, 0, 0, 1})) == P({1, 1, 0, 0, 0, 0, 1}));
  CHECK(monic_associate(P({1, 1, 2})) == P({2, 1, 1}));
  auto g = monic_associate(P({1, 3, 6, 6, 0, 0, 3}));
  CHECK(g.degree() == 6);
  CHECK(g.is_monic());
}

TEST_CASE("homogenization") {
  auto form = homogenize(P({1, 0, 1}), 2);
  CHECK(form.coeffs() == std::vector<Integer>{1, 0, 1});
  CHECK(dehomogenize(BinaryForm({1, 0, 0, 0, 0, 0, 1})) == P({1, 0, 0, 0, 0, 0, 1}));
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    auto f = oracle::random_poly(rng, 6, 9);
    CHECK(dehomogenize(homogenize(f, 6)) == f);
    auto form6 = homogenize(f, 6);
    CHECK(form6.primitive() == form6.primitive().primitive());
  }
  // a form with a6 = 0 keeps its formal degree
  auto low = homogenize(P({1, 2}), 6);
  CHECK(low.degree() == 6);
}

TEST_CASE("primitive binary form has canonical sign") {
  BinaryForm f({0, -2, 4, 0, 0, 0, -6});
  auto p = f.primitive();
  CHECK(p.coeffs() == std::vector<Integer>{0, 1, -2, 0, 0, 0, 3});
  CHECK(p.is_primitive());
}

TEST_CASE("resultant") {
  CHECK(resultant(P({-1, 1}), P({-2, 1})) == -1);
  CHECK(resultant(P({1, 0, 1}), P({0, 1})) == 1);
  auto f = P({1, 0, 0, -1, 0, 0, 1});
  Integer v = resultant(f, f.derivative());
  CHECK(v == oracle::laplace_determinant(oracle::sylvester(f, f.derivative())));
  CHECK(discriminant(f) == -v);  // monic, (-1)^15
  CHECK_THROWS_AS(resultant(IntPolynomial{}, P({1, 1})), Error);
}

TEST_CASE("resultant is multiplicative") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    auto f = oracle::random_poly(rng, 1 + i % 4, 5);
    auto g = oracle::random_poly(rng, 1 + i % 3, 5);
    auto h = oracle::random_poly(rng, 1 + i % 2, 5);
    CHECK(resultant(f, g * h) == resultant(f, g) * resultant(f, h));
  }
}

TEST_CASE("discriminant") {
  CHECK(discriminant(P({-1, 0, 1})) == 4);
  CHECK(discriminant(P({1, -2, 1})) == 0);
  auto f = P({1, 0, 0, -1, 0, 0, 1});
  CHECK(discriminant(f) == -19683);  // -3^9
  CHECK_THROWS_AS(discriminant(P({1, 1})), Error);
}

TEST_CASE("discriminant vanishes exactly on repeated factors") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 60; ++i) {
    auto g = oracle::random_poly(rng, 1 + i % 2, 4);
    auto h = oracle::random_poly(rng, 2, 4);
    auto f = g * g * h;
    CHECK(discriminant(f) == 0);
    CHECK(gcd(f, f.derivative()).degree() >= 1);
    auto sf = g * h;
    CHECK((discriminant(sf) == 0) == (gcd(sf, sf.derivative()).degree() >= 1));
  }
}

TEST_CASE("sturm real roots") {
  CHECK(sturm_real_roots(P({1, 0, 0, 0, 0, 0, 1})) == 0);
  CHECK(sturm_real_roots(P({-2, 0, 0, 0, 0, 0, 1})) == 2);
  IntPolynomial f = P({1});
  for (long r = 1; r <= 6; ++r) f = f * P({-r, 1});
  CHECK(sturm_real_roots(f) == 6);
  CHECK(sturm_real_roots(P({1, -2, 1})) == 1);  // repeated root counted once
  CHECK_THROWS_AS(sturm_real_roots(IntPolynomial{}), Error);
}

TEST_CASE("sturm agrees with grid bisection and non-real count is even") {
  std::mt19937_64 rng(2026);
  int checked = 0;
  for (int i = 0; i < 10000; ++i) {
    auto f = oracle::random_poly(rng, 6, 20);
    int r = sturm_real_roots(f);
    REQUIRE(r == oracle::grid_real_roots(f));
    CHECK((squarefree_part(f).degree() - r) % 2 == 0);
    ++checked;
  }
  CHECK(checked == 10000);
}

TEST_CASE("coefficient text format") {
  auto f = parse_coefficients("1, 0,0,-1,0,0,+1");
  CHECK(f == P({1, 0, 0, -1, 0, 0, 1}));
  CHECK(format_coefficients(f) == "1,0,0,-1,0,0,1");
  CHECK(to_string(f) == "x^6 - x^3 + 1");
  auto big = parse_coefficients("123456789012345678901234567890,1");
  CHECK(big[0] == Integer("123456789012345678901234567890"));
  CHECK_THROWS_AS(parse_coefficients("1,,2"), Error);
  CHECK_THROWS_AS(parse_coefficients("1,x"), Error);
}

TEST_CASE("binary form substitution") {
  BinaryForm f = homogenize(P({1, 0, 0, -1, 0, 0, 1}), 6);
  CHECK(f.substitute(1, 0, 0, 1) == f);
  CHECK(f.substitute(0, 1, 1, 0) == f.swapped());
  // F(x + y, y) dehomogenizes to f(x + 1)
  CHECK(dehomogenize(f.substitute(1, 1, 0, 1)) == taylor_shift(dehomogenize(f), 1));
}
