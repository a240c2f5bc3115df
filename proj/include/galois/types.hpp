// Copyright 2026 The galois6 Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef GALOIS_TYPES_HPP
#define GALOIS_TYPES_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace galois {

using Integer = mpz_class;
using Rational = mpq_class;

/// Cycle lengths of a permutation, or factor degrees of a polynomial, sorted
/// in non-increasing order.
using Partition = std::vector<int>;

enum class ErrorKind {
  DegenerateInput,
  RamifiedPrime,
  NotIrreducible,
  NotSquarefree,
  InconsistentEvidence,
  PrecisionFailure,
  ContractViolation,
  InternalConsistency,
  Configuration,
  Parse,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline void require(bool cond, const char* what) {
  if (!cond) fail(ErrorKind::ContractViolation, what);
}

}  // namespace galois

#endif  // GALOIS_TYPES_HPP
