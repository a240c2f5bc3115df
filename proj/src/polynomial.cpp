// Copyright 2026 The galois6 Authors.
// SPDX-License-Identifier: Apache-2.0

#include "galois/polynomial.hpp"

#include <sstream>

namespace galois {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DegenerateInput: return "degenerate input";
    case ErrorKind::RamifiedPrime: return "ramified prime";
    case ErrorKind::NotIrreducible: return "reducible";
    case ErrorKind::NotSquarefree: return "not squarefree";
    case ErrorKind::InconsistentEvidence: return "inconsistent evidence";
    case ErrorKind::PrecisionFailure: return "precision failure";
    case ErrorKind::ContractViolation: return "contract violation";
    case ErrorKind::InternalConsistency: return "internal consistency";
    case ErrorKind::Configuration: return "configuration";
    case ErrorKind::Parse: return "parse error";
  }
  return "unknown";
}

RatPolynomial to_rational(const IntPolynomial& f) {
  std::vector<Rational> v;
  v.reserve(f.size());
  for (const auto& a : f.coeffs()) v.emplace_back(a);
  return RatPolynomial(std::move(v));
}

IntPolynomial primitive_from_rational(const RatPolynomial& f) {
  if (f.is_zero()) return {};
  Integer den = 1;
  for (const auto& a : f.coeffs()) den = lcm(den, Integer(a.get_den()));
  std::vector<Integer> v;
  v.reserve(f.size());
  for (const auto& a : f.coeffs()) v.emplace_back(Integer(a.get_num() * (den / a.get_den())));
  return primitive_part(IntPolynomial(std::move(v)));
}

Integer content(const IntPolynomial& f) {
  Integer g = 0;
  for (const auto& a : f.coeffs()) {
    g = gcd(g, a);
    if (g == 1) break;
  }
  return g;
}

IntPolynomial primitive_part(const IntPolynomial& f) {
  if (f.is_zero()) return f;
  Integer c = content(f);
  if (f.leading() < 0) c = -c;
  std::vector<Integer> v(f.vec());
  for (auto& a : v) mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), c.get_mpz_t());
  return IntPolynomial(std::move(v));
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  // Primitive remainder sequence; pseudo-division keeps everything in Z.
  if (a.is_zero()) return primitive_part(b);
  if (b.is_zero()) return primitive_part(a);
  IntPolynomial u = primitive_part(a), v = primitive_part(b);
  if (u.degree() < v.degree()) std::swap(u, v);
  while (!v.is_zero()) {
    // pseudo-remainder of u by v
    std::vector<Integer> r(u.vec());
    const int dv = v.degree();
    const Integer& lv = v.leading();
    for (int i = u.degree(); i >= dv; --i) {
      Integer t = r[i];
      if (t == 0) continue;
      for (auto& x : r) x *= lv;
      for (int j = 0; j <= dv; ++j) r[i - dv + j] -= t * v[j];
    }
    IntPolynomial rem(std::move(r));
    u = std::move(v);
    v = primitive_part(rem);
  }
  return primitive_part(u);
}

std::optional<IntPolynomial> exact_divide(const IntPolynomial& a, const IntPolynomial& b) {
  require(!b.is_zero(), "exact_divide by zero");
  if (a.is_zero()) return IntPolynomial{};
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<Integer> r(a.vec());
  const int db = b.degree();
  std::vector<Integer> q(static_cast<std::size_t>(a.degree() - db) + 1);
  const Integer& lb = b.leading();
  for (int i = a.degree(); i >= db; --i) {
    if (r[i] == 0) continue;
    if (!mpz_divisible_p(r[i].get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
    Integer t = r[i] / lb;
    q[i - db] = t;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= t * b[j];
  }
  for (const auto& x : r)
    if (x != 0) return std::nullopt;
  return IntPolynomial(std::move(q));
}

IntPolynomial taylor_shift(const IntPolynomial& f, const Integer& c) {
  return f.compose(IntPolynomial({c, Integer(1)}));
}

IntPolynomial parse_coefficients(const std::string& text) {
  std::vector<Integer> v;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    auto b = tok.find_first_not_of(" \t");
    auto e = tok.find_last_not_of(" \t");
    if (b == std::string::npos) fail(ErrorKind::Parse, "empty coefficient in '" + text + "'");
    tok = tok.substr(b, e - b + 1);
    if (tok[0] == '+') tok.erase(0, 1);
    Integer a;
    if (tok.empty() || a.set_str(tok, 10) != 0)
      fail(ErrorKind::Parse, "bad coefficient '" + tok + "'");
    v.push_back(a);
  }
  if (v.empty()) fail(ErrorKind::Parse, "no coefficients");
  return IntPolynomial(std::move(v));
}

std::string format_coefficients(const IntPolynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) out += ',';
    out += f.coeffs()[i].get_str();
  }
  return out;
}

std::string to_string(const IntPolynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (int i = f.degree(); i >= 0; --i) {
    const Integer& a = f[i];
    if (a == 0) continue;
    Integer mag = abs(a);
    if (out.empty()) {
      if (a < 0) out += "-";
    } else {
      out += a < 0 ? " - " : " + ";
    }
    if (mag != 1 || i == 0) out += mag.get_str();
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace galois
