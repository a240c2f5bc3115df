// Copyright 2026 The galois6 Authors.
// SPDX-License-Identifier: Apache-2.0

// The twenty sextics of height at most 6 with cyclic Galois group, grouped in
// blocks of GL2-equivalent forms, with the block's invariants [J2, J4, J6, J10].

#ifndef GALOIS_TESTS_TABLE3_HPP
#define GALOIS_TESTS_TABLE3_HPP

#include <array>
#include <vector>

#include "galois/polynomial.hpp"

namespace galois::testdata {

struct CyclicSextic {
  int block;
  std::array<long, 7> coeffs;  // a0..a6
};

inline const std::vector<CyclicSextic>& cyclic_sextics() {
  static const std::vector<CyclicSextic> rows = {
      {0, {1, 0, 0, -1, 0, 0, 1}},     {0, {1, 0, 0, 1, 0, 0, 1}},      {1, {1, -1, 1, -1, 1, -1, 1}},
      {1, {1, 1, 1, 1, 1, 1, 1}},      {2, {1, 1, 3, 0, 5, 2, 1}},      {2, {1, -1, 3, 0, 5, -2, 1}},
      {2, {1, 2, 5, 0, 3, 1, 1}},      {2, {1, -2, 5, 0, 3, -1, 1}},    {3, {1, -3, 2, 1, 4, 2, 1}},
      {3, {1, 3, 2, -1, 4, -2, 1}},    {3, {1, -2, 4, -1, 2, 3, 1}},    {3, {1, 2, 4, 1, 2, -3, 1}},
      {4, {1, 0, 6, 0, 5, 0, 1}},      {4, {1, 0, 5, 0, 6, 0, 1}},      {5, {1, -3, -6, 4, 5, -1, -1}},
      {5, {1, 3, -6, -4, 5, 1, -1}},   {5, {1, -1, -5, 4, 6, -3, -1}},  {5, {1, 1, -5, -4, 6, 3, -1}},
      {6, {1, -3, 6, -6, 0, 0, 3}},    {6, {1, 3, 6, 6, 0, 0, 3}},
  };
  return rows;
}

inline const std::array<std::array<long, 4>, 7>& block_invariants() {
  static const std::array<std::array<long, 4>, 7> v = {{
      {-234, 1944, -129762, -19683},
      {-210, 1176, -76146, -16807},
      {-400, 6076, -315952, -10955763},
      {-602, 14896, -2453136, -1075648},
      {-720, 6468, -1435896, -153664},
      {936, 10140, 2926404, 371293},
      {-504, 22356, -3327156, -26946027},
  }};
  return v;
}

inline IntPolynomial to_poly(const std::array<long, 7>& c) {
  std::vector<Integer> v;
  for (long x : c) v.emplace_back(x);
  return IntPolynomial(std::move(v));
}

}  // namespace galois::testdata

#endif  // GALOIS_TESTS_TABLE3_HPP
