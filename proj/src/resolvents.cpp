// Copyright 2026 The galois6 Authors.
// SPDX-License-Identifier: Apache-2.0

#include "galois/resolvents.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <random>

#include "galois/numeric.hpp"
#include "galois/polycore.hpp"

namespace galois {

InvariantPoly::InvariantPoly(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.exps < b.exps; });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().exps == t.exps)
      terms_.back().coeff += t.coeff;
    else
      terms_.push_back(std::move(t));
  }
  std::erase_if(terms_, [](const Term& t) { return t.coeff == 0; });
}

InvariantPoly InvariantPoly::parse(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) fail(ErrorKind::Parse, "empty invariant polynomial");
  std::vector<Term> terms;
  std::size_t i = 0;
  auto number = [&]() -> long {
    std::size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == i) fail(ErrorKind::Parse, "expected a number in: " + text);
    long v = std::stol(s.substr(i, j - i));
    i = j;
    return v;
  };
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      if (s[i] == '-') sign = -1;
      ++i;
    } else if (!terms.empty()) {
      fail(ErrorKind::Parse, "expected '+' or '-' in: " + text);
    }
    Term t;
    t.coeff = sign;
    for (bool first = true;; first = false) {
      if (!first) {
        if (i >= s.size() || s[i] != '*') break;
        ++i;
      }
      if (i < s.size() && s[i] == 'x') {
        ++i;
        long v = number();
        if (v < 1 || v > Permutation::kPoints) fail(ErrorKind::Parse, "variable index out of range in: " + text);
        long e = 1;
        if (i < s.size() && s[i] == '^') {
          ++i;
          e = number();
        }
        t.exps[v - 1] += static_cast<int>(e);
      } else {
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j == i) fail(ErrorKind::Parse, "bad term in: " + text);
        t.coeff *= Integer(s.substr(i, j - i));
        i = j;
      }
    }
    terms.push_back(std::move(t));
  }
  InvariantPoly F(std::move(terms));
  if (F.total_degree() < 1) fail(ErrorKind::Parse, "invariant polynomial must have positive degree");
  return F;
}

int InvariantPoly::total_degree() const {
  int d = 0;
  for (const auto& t : terms_) {
    int s = 0;
    for (int e : t.exps) s += e;
    d = std::max(d, s);
  }
  return d;
}

InvariantPoly InvariantPoly::permuted(const Permutation& sigma) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Term u;
    u.coeff = t.coeff;
    for (int i = 0; i < Permutation::kPoints; ++i) u.exps[sigma(i)] = t.exps[i];
    out.push_back(std::move(u));
  }
  return InvariantPoly(std::move(out));
}

std::string InvariantPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  // highest exponent vectors first reads naturally: x1*x2 + x3*x4 + ...
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Integer c = it->coeff;
    bool neg = c < 0;
    if (neg) c = -c;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    std::string body;
    for (int i = 0; i < Permutation::kPoints; ++i) {
      if (it->exps[i] == 0) continue;
      if (!body.empty()) body += '*';
      body += "x" + std::to_string(i + 1);
      if (it->exps[i] > 1) body += "^" + std::to_string(it->exps[i]);
    }
    if (c != 1 || body.empty()) body = c.get_str() + (body.empty() ? "" : "*" + body);
    out += body;
  }
  return out;
}

const InvariantPoly& pairing_invariant() {
  static const InvariantPoly F = InvariantPoly::parse("x1*x2 + x3*x4 + x5*x6");
  return F;
}

const InvariantPoly& triple_invariant() {
  static const InvariantPoly F = InvariantPoly::parse("x1*x2*x3 + x4*x5*x6");
  return F;
}

Stabilizer stabilizer(const InvariantPoly& F, const TransitiveGroup& G) {
  Stabilizer st;
  for (const auto& s : G.elements)
    if (F.permuted(s) == F) st.subgroup.set(s.rank());
  CosetSpace cs(G.elements, st.subgroup);
  st.coset_reps = cs.representatives();
  st.index = cs.size();
  return st;
}

namespace {

using numeric::BigFloat;
using numeric::Complex;

// Upper bound on log2 of the resolvent coefficients.
double coefficient_bound_log2(const InvariantPoly& F, const IntPolynomial& f, int m) {
  double b = std::max(0.0, numeric::root_bound_log2(f));
  double theta = 0.0;
  for (const auto& t : F.terms()) {
    int d = 0;
    for (int e : t.exps) d += e;
    double c = std::log2(std::fabs(mpz_get_d(t.coeff.get_mpz_t())) + 1.0);
    theta = std::max(theta, c + d * b) + 1.0;  // crude union over terms
  }
  return m * (theta + 1.0) + 8.0;
}

std::vector<Complex> resolvent_roots(const InvariantPoly& F, const std::vector<Permutation>& reps,
                                     const std::vector<Complex>& alpha, long prec) {
  int maxe = 1;
  for (const auto& t : F.terms())
    for (int e : t.exps) maxe = std::max(maxe, e);
  // powers[i][e] = alpha_i^e
  std::vector<std::vector<Complex>> powers(alpha.size());
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    powers[i].push_back(Complex(BigFloat(prec, 1), BigFloat(prec)));
    for (int e = 1; e <= maxe; ++e) powers[i].push_back(powers[i].back() * alpha[i]);
  }
  std::vector<Complex> out;
  for (const auto& s : reps) {
    Complex v(prec);
    for (const auto& t : F.terms()) {
      Complex term(BigFloat(prec, t.coeff), BigFloat(prec));
      for (int i = 0; i < Permutation::kPoints; ++i)
        if (t.exps[i]) term *= powers[s(i)][t.exps[i]];
      v += term;
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

ResolventResult resolvent(const InvariantPoly& F, const TransitiveGroup& G, const IntPolynomial& f,
                          const ResolventOptions& options) {
  require(f.degree() == Permutation::kPoints && f.is_monic(), "resolvent needs a monic sextic");
  Stabilizer st = stabilizer(F, G);
  const int m = st.index;
  long prec = std::max(64L, options.min_precision);
  while (prec < coefficient_bound_log2(F, f, m) + 64) prec *= 2;

  for (; prec <= options.max_precision; prec *= 2) {
    auto roots = numeric::complex_roots(f, 2 * prec);
    if (!roots.isolated) continue;
    std::vector<Complex> lo;
    for (const auto& z : roots.roots) {
      Complex w(z);
      mpfr_prec_round(w.re.get(), prec, MPFR_RNDN);
      mpfr_prec_round(w.im.get(), prec, MPFR_RNDN);
      lo.push_back(std::move(w));
    }
    auto a = numeric::round_to_integers(numeric::poly_from_roots(resolvent_roots(F, st.coset_reps, lo, prec), prec));
    if (!a) continue;
    auto b = numeric::round_to_integers(
        numeric::poly_from_roots(resolvent_roots(F, st.coset_reps, roots.roots, 2 * prec), 2 * prec));
    if (!b || *a != *b) continue;

    ResolventResult r;
    r.resolvent = IntPolynomial(std::move(*b));
    r.index = m;
    r.precision = prec;
    r.squarefree = gcd(r.resolvent, r.resolvent.derivative()).degree() == 0;
    if (r.squarefree) {
      for (auto& [g, mult] : factor_over_z(r.resolvent).factors) {
        r.factor_degrees.push_back(g.degree());
        r.factors.push_back(g);
      }
      std::sort(r.factor_degrees.rbegin(), r.factor_degrees.rend());
    }
    return r;
  }
  fail(ErrorKind::PrecisionFailure, "resolvent coefficients did not stabilise below the precision ceiling");
}

IntPolynomial tschirnhausen(const IntPolynomial& f, const IntPolynomial& T) {
  const int n = f.degree();
  require(n >= 1 && f.is_monic(), "tschirnhausen needs a monic polynomial");
  require(T.degree() >= 1, "tschirnhausen transform must be nonconstant");
  // values of prod (x0 - T(alpha_i)) at x0 = 0..n, then exact interpolation
  std::vector<Rational> xs, ys;
  for (int k = 0; k <= n; ++k) {
    IntPolynomial g = IntPolynomial::constant(Integer(k)) - T;
    Integer r = resultant(f, g);
    // res(f, g) = lc(f)^deg g prod g(alpha_i) = prod g(alpha_i) for monic f
    xs.emplace_back(k);
    ys.emplace_back(r);
  }
  // Newton divided differences
  std::vector<Rational> dd = ys;
  for (int j = 1; j <= n; ++j)
    for (int i = n; i >= j; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
  RatPolynomial p = RatPolynomial::constant(dd[n]);
  for (int i = n - 1; i >= 0; --i)
    p = p * RatPolynomial({-xs[i], Rational(1)}) + RatPolynomial::constant(dd[i]);
  std::vector<Integer> c;
  for (const auto& q : p.coeffs()) {
    if (q.get_den() != 1) fail(ErrorKind::InternalConsistency, "characteristic polynomial is not integral");
    c.push_back(q.get_num());
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial tschirnhausen(const IntPolynomial& f, std::uint64_t seed) {
  const int n = f.degree();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (int attempt = 0; attempt < 100; ++attempt) {
    std::vector<Integer> t(static_cast<std::size_t>(std::min(n - 1, 2 + attempt / 10)) + 1);
    for (auto& x : t) x = coef(rng);
    IntPolynomial T(std::move(t));
    if (T.degree() < 1) continue;
    IntPolynomial g = tschirnhausen(f, T);
    if (gcd(g, g.derivative()).degree() == 0) return g;
  }
  fail(ErrorKind::PrecisionFailure, "no squarefree Tschirnhausen transform found");
}

bool orbit_length_check(const ResolventResult& R, const TransitiveGroup& G, const InvariantPoly& F,
                        const std::string& gal_label) {
  require(R.squarefree, "orbit length check needs a squarefree resolvent");
  Stabilizer st = stabilizer(F, G);
  CosetSpace cs(G.elements, st.subgroup);
  auto lengths = cs.orbit_lengths(group_by_label(gal_label).generators);
  DegreePattern degs = R.factor_degrees;
  std::sort(degs.begin(), degs.end());
  return lengths == degs;
}

}  // namespace galois
