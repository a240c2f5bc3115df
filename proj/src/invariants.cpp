// Copyright 2026 The galois6 Authors.
// SPDX-License-Identifier: Apache-2.0

#include "galois/invariants.hpp"

#include <map>

namespace galois {

namespace {

Integer factorial(int n) {
  Integer r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

Integer binomial(int n, int k) { return factorial(n) / (factorial(k) * factorial(n - k)); }

int degree_of(const RationalForm& f) { return static_cast<int>(f.size()) - 1; }

// d^(p+q) f / dx^p dy^q
RationalForm partial(const RationalForm& f, int p, int q) {
  const int m = degree_of(f);
  RationalForm out(static_cast<std::size_t>(m - p - q + 1), Rational(0));
  for (int i = p; i <= m - q; ++i) {
    if (f[i] == 0) continue;
    Integer c = 1;
    for (int t = 0; t < p; ++t) c *= i - t;
    for (int t = 0; t < q; ++t) c *= m - i - t;
    out[i - p] += f[i] * c;
  }
  return out;
}

RationalForm multiply(const RationalForm& f, const RationalForm& g) {
  RationalForm out(f.size() + g.size() - 1, Rational(0));
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0) continue;
    for (std::size_t j = 0; j < g.size(); ++j) out[i + j] += f[i] * g[j];
  }
  return out;
}

Rational constant(const RationalForm& f) {
  if (f.size() != 1) fail(ErrorKind::InternalConsistency, "transvectant: expected a constant");
  return f[0];
}

Rational power(const Rational& q, int e) {
  Rational r = 1;
  for (int i = 0; i < e; ++i) r *= q;
  return r;
}

}  // namespace

RationalForm transvectant(const RationalForm& f, const RationalForm& g, int k) {
  const int m = degree_of(f), n = degree_of(g);
  require(k >= 0 && k <= m && k <= n, "transvectant: order exceeds a degree");
  RationalForm sum(static_cast<std::size_t>(m + n - 2 * k + 1), Rational(0));
  for (int i = 0; i <= k; ++i) {
    RationalForm term = multiply(partial(f, k - i, i), partial(g, i, k - i));
    Integer c = binomial(k, i);
    if (i % 2) c = -c;
    for (std::size_t s = 0; s < sum.size(); ++s) sum[s] += term[s] * c;
  }
  Rational scale(factorial(m - k) * factorial(n - k), factorial(m) * factorial(n));
  scale.canonicalize();
  for (auto& c : sum) c *= scale;
  return sum;
}

IgusaTuple igusa(const BinaryForm& form) {
  require(form.degree() == 6, "igusa: expected a sextic form");
  if (form.is_zero()) fail(ErrorKind::DegenerateInput, "igusa: zero form");
  RationalForm f;
  for (const auto& a : form.coeffs()) f.emplace_back(a);

  RationalForm i = transvectant(f, f, 4);
  RationalForm delta = transvectant(i, i, 2);
  RationalForm y1 = transvectant(f, i, 4);
  RationalForm y2 = transvectant(i, y1, 2);
  RationalForm y3 = transvectant(i, y2, 2);
  Rational A = constant(transvectant(f, f, 6));
  Rational B = constant(transvectant(i, i, 4));
  Rational C = constant(transvectant(i, delta, 4));
  Rational D = constant(transvectant(y3, y1, 2));

  IgusaTuple j;
  j.J2 = -120 * A;
  j.J4 = -720 * A * A + 6750 * B;
  j.J6 = 8640 * A * A * A - 108000 * A * B + 202500 * C;
  j.J10 = -62208 * power(A, 5) + 972000 * power(A, 3) * B + 1620000 * A * A * C -
          3037500 * A * B * B - 6075000 * B * C - 4556250 * D;
  return j;
}

AbsoluteTriple absolute(const IgusaTuple& j) {
  if (j.J10 == 0) fail(ErrorKind::NotSquarefree, "absolute invariants: J10 = 0");
  return {power(j.J2, 5) / j.J10, power(j.J4, 5) / power(j.J10, 2),
          power(j.J6, 5) / power(j.J10, 3)};
}

std::vector<std::vector<std::size_t>> equivalence_classes(const std::vector<BinaryForm>& forms) {
  std::map<AbsoluteTriple, std::size_t> slot;
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t k = 0; k < forms.size(); ++k) {
    IgusaTuple j = igusa(forms[k]);
    if (j.J10 == 0)
      fail(ErrorKind::NotSquarefree, "equivalence_classes: form " + std::to_string(k) + " is not squarefree");
    auto [it, fresh] = slot.emplace(absolute(j), classes.size());
    if (fresh) classes.emplace_back();
    classes[it->second].push_back(k);
  }
  return classes;
}

std::string rational_string(const Rational& value) {
  Rational q = value;
  q.canonicalize();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace galois
