// Copyright 2026 The galois6 Authors.
// SPDX-License-Identifier: Apache-2.0

#include "galois/polycore.hpp"

#include <utility>

namespace galois {

namespace {

void require_nonzero(const IntPolynomial& f, const char* op) {
  if (f.is_zero()) fail(ErrorKind::DegenerateInput, std::string(op) + ": zero polynomial");
}

// (u x + v y)^k as coefficients of x^i y^(k-i).
std::vector<Integer> linear_power(const Integer& u, const Integer& v, int k) {
  std::vector<Integer> p{Integer(1)};
  for (int s = 0; s < k; ++s) {
    std::vector<Integer> q(p.size() + 1, Integer(0));
    for (std::size_t i = 0; i < p.size(); ++i) {
      q[i + 1] += p[i] * u;
      q[i] += p[i] * v;
    }
    p = std::move(q);
  }
  return p;
}

int sign_variations(const std::vector<int>& signs) {
  int count = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

}  // namespace

BinaryForm::BinaryForm(std::vector<Integer> coeffs) : a_(std::move(coeffs)) {}

bool BinaryForm::is_zero() const {
  for (const auto& a : a_)
    if (a != 0) return false;
  return true;
}

BinaryForm BinaryForm::primitive() const {
  if (is_zero()) return *this;
  Integer g = 0;
  for (const auto& a : a_) g = gcd(g, a);
  for (const auto& a : a_) {
    if (a == 0) continue;
    if (a < 0) g = -g;
    break;
  }
  std::vector<Integer> v(a_);
  for (auto& a : v) mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
  return BinaryForm(std::move(v));
}

bool BinaryForm::is_primitive() const { return !is_zero() && primitive() == *this; }

BinaryForm BinaryForm::substitute(const Integer& a, const Integer& b, const Integer& c,
                                  const Integer& d) const {
  const int n = degree();
  std::vector<Integer> out(a_.size(), Integer(0));
  for (int i = 0; i <= n; ++i) {
    if (a_[i] == 0) continue;
    auto p = linear_power(a, b, i);
    auto q = linear_power(c, d, n - i);
    for (std::size_t s = 0; s < p.size(); ++s)
      for (std::size_t t = 0; t < q.size(); ++t) out[s + t] += a_[i] * p[s] * q[t];
  }
  return BinaryForm(std::move(out));
}

BinaryForm BinaryForm::swapped() const {
  return BinaryForm(std::vector<Integer>(a_.rbegin(), a_.rend()));
}

Height height(const IntPolynomial& f) {
  require_nonzero(f, "height");
  Integer h = 0;
  for (const auto& a : f.coeffs())
    if (abs(a) > h) h = abs(a);
  return {h};
}

Height height(const BinaryForm& f) {
  if (f.is_zero()) fail(ErrorKind::DegenerateInput, "height: zero form");
  Integer h = 0;
  for (const auto& a : f.coeffs())
    if (abs(a) > h) h = abs(a);
  return {h};
}

IntPolynomial monic_associate(const IntPolynomial& f) {
  require_nonzero(f, "monic_associate");
  if (f.degree() < 1) fail(ErrorKind::DegenerateInput, "monic_associate: constant polynomial");
  if (f.is_monic()) return f;
  const int n = f.degree();
  const Integer& lead = f.leading();
  std::vector<Integer> g(static_cast<std::size_t>(n) + 1);
  Integer scale = 1;  // lead^(n-1-i), built from i = n-1 downwards
  g[n] = 1;
  for (int i = n - 1; i >= 0; --i) {
    g[i] = f[i] * scale;
    scale *= lead;
  }
  return IntPolynomial(std::move(g));
}

BinaryForm homogenize(const IntPolynomial& f, int n) {
  require(f.degree() <= n, "homogenize: degree exceeds form degree");
  std::vector<Integer> v(static_cast<std::size_t>(n) + 1, Integer(0));
  for (int i = 0; i <= f.degree(); ++i) v[i] = f[i];
  return BinaryForm(std::move(v));
}

IntPolynomial dehomogenize(const BinaryForm& form) { return IntPolynomial(form.coeffs()); }

Integer determinant(std::vector<std::vector<Integer>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  Integer d = m[n - 1][n - 1];
  return sign > 0 ? d : Integer(-d);
}

Integer resultant(const IntPolynomial& f, const IntPolynomial& g) {
  require_nonzero(f, "resultant");
  require_nonzero(g, "resultant");
  const int m = f.degree(), n = g.degree();
  const std::size_t size = static_cast<std::size_t>(m + n);
  std::vector<std::vector<Integer>> s(size, std::vector<Integer>(size, Integer(0)));
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= m; ++i) s[r][r + i] = f[m - i];
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= n; ++i) s[n + r][r + i] = g[n - i];
  return determinant(std::move(s));
}

Integer discriminant(const IntPolynomial& f) {
  if (f.degree() < 2) fail(ErrorKind::DegenerateInput, "discriminant: degree < 2");
  const long n = f.degree();
  Integer r = resultant(f, f.derivative());
  mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), f.leading().get_mpz_t());
  if ((n * (n - 1) / 2) % 2 == 1) r = -r;
  return r;
}

IntPolynomial squarefree_part(const IntPolynomial& f) {
  require_nonzero(f, "squarefree_part");
  if (f.degree() < 1) return IntPolynomial({Integer(1)});
  IntPolynomial g = gcd(f, f.derivative());
  if (g.degree() == 0) return primitive_part(f);
  return primitive_part(*exact_divide(primitive_part(f), g));
}

int sturm_real_roots(const IntPolynomial& f) {
  require_nonzero(f, "sturm_real_roots");
  if (f.degree() < 1) return 0;
  // Sturm sequence of the squarefree part. Remainders are replaced by
  // positive multiples, which leaves every sign unchanged.
  std::vector<IntPolynomial> seq;
  seq.push_back(squarefree_part(f));
  seq.push_back(seq.back().derivative());
  while (seq.back().degree() > 0) {
    const IntPolynomial& u = seq[seq.size() - 2];
    const IntPolynomial& v = seq.back();
    std::vector<Integer> r(u.vec());
    const int dv = v.degree();
    Integer lv = abs(v.leading());
    const int lead_sign = sgn(v.leading());
    for (int i = u.degree(); i >= dv; --i) {
      if (r[i] == 0) continue;
      Integer t = r[i] * lead_sign;
      for (auto& x : r) x *= lv;
      for (int j = 0; j <= dv; ++j) r[i - dv + j] -= t * v[j];
    }
    IntPolynomial rem(std::move(r));
    if (rem.is_zero()) break;
    Integer c = content(rem);
    std::vector<Integer> w(rem.vec());
    for (auto& x : w) {
      mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
      x = -x;
    }
    seq.emplace_back(std::move(w));
  }
  std::vector<int> at_pos, at_neg;
  for (const auto& p : seq) {
    const int s = sgn(p.leading());
    at_pos.push_back(s);
    at_neg.push_back(p.degree() % 2 == 0 ? s : -s);
  }
  return sign_variations(at_neg) - sign_variations(at_pos);
}

}  // namespace galois
