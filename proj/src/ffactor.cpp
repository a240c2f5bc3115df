// Copyright 2026 The galois6 Authors.
// SPDX-License-Identifier: Apache-2.0

#include "galois/ffactor.hpp"

#include <algorithm>
#include <bitset>
#include <random>

#include "galois/polycore.hpp"

namespace galois {

using modp::Field;
using modp::Poly;

namespace {

bool poly_less(const Poly& a, const Poly& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

bool int_poly_less(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

Poly pth_root(const Poly& f, const Field& k) {
  Poly r;
  for (std::size_t i = 0; i < f.size(); i += k.p()) r.push_back(f[i]);
  modp::trim(r);
  return r;
}

// Squarefree decomposition of a monic polynomial over F_p.
void squarefree_decomposition(const Poly& f, const Field& k, int mult,
                              std::vector<std::pair<Poly, int>>& out) {
  Poly df = modp::derivative(f, k);
  Poly c = modp::gcd(f, df, k);
  Poly w = modp::quot(f, c, k);
  int i = 1;
  while (modp::degree(w) > 0) {
    Poly y = modp::gcd(w, c, k);
    Poly z = modp::quot(w, y, k);
    if (modp::degree(z) > 0) out.emplace_back(z, i * mult);
    ++i;
    w = std::move(y);
    c = modp::quot(c, w, k);
  }
  if (modp::degree(c) > 0) squarefree_decomposition(pth_root(c, k), k, mult * static_cast<int>(k.p()), out);
}

// Products of all irreducible factors of each degree d.
std::vector<std::pair<Poly, int>> distinct_degree(const Poly& f, const Field& k) {
  std::vector<std::pair<Poly, int>> out;
  Poly rest = f;
  const Poly x{0, 1};
  Poly h = modp::rem(x, rest, k);
  for (int d = 1; 2 * d <= modp::degree(rest); ++d) {
    h = modp::powmod(h, k.p(), rest, k);
    Poly g = modp::gcd(rest, modp::sub(h, x, k), k);
    if (modp::degree(g) > 0) {
      out.emplace_back(g, d);
      rest = modp::quot(rest, g, k);
      h = modp::rem(h, rest, k);
    }
  }
  if (modp::degree(rest) > 0) out.emplace_back(rest, modp::degree(rest));
  return out;
}

void equal_degree(const Poly& g, int d, const Field& k, std::mt19937_64& rng, std::vector<Poly>& out) {
  const int n = modp::degree(g);
  if (n == d) {
    out.push_back(g);
    return;
  }
  Integer half_exp;
  if (k.p() != 2) {
    Integer q;
    mpz_ui_pow_ui(q.get_mpz_t(), k.p(), static_cast<unsigned long>(d));
    half_exp = (q - 1) / 2;
  }
  std::uniform_int_distribution<std::uint64_t> coeff(0, k.p() - 1);
  for (;;) {
    Poly a(static_cast<std::size_t>(n));
    for (auto& c : a) c = coeff(rng);
    modp::trim(a);
    if (modp::degree(a) < 1) continue;
    Poly b;
    if (k.p() == 2) {
      // trace map F_{2^d} -> F_2
      Poly t = modp::rem(a, g, k);
      b = t;
      for (int i = 1; i < d; ++i) {
        t = modp::rem(modp::mul(t, t, k), g, k);
        b = modp::add(b, t, k);
      }
    } else {
      b = modp::sub(modp::powmod(a, half_exp, g, k), Poly{1}, k);
    }
    Poly h = modp::gcd(g, b, k);
    if (modp::degree(h) > 0 && modp::degree(h) < n) {
      equal_degree(h, d, k, rng, out);
      equal_degree(modp::quot(g, h, k), d, k, rng, out);
      return;
    }
  }
}

Integer sym_mod(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  if (2 * r > m) r -= m;
  return r;
}

IntPolynomial mul_mod(const IntPolynomial& a, const IntPolynomial& b, const Integer& m) {
  IntPolynomial prod = a * b;
  std::vector<Integer> v(prod.vec());
  for (auto& c : v) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  return IntPolynomial(std::move(v));
}

// Possible degrees of a proper factor, given a mod-p pattern.
std::bitset<64> subset_degrees(const DegreePattern& pattern) {
  std::bitset<64> reach;
  reach[0] = true;
  for (int d : pattern) reach |= reach << static_cast<std::size_t>(d);
  return reach;
}

struct GoodPrimeScan {
  std::uint64_t best_prime = 0;
  std::size_t best_count = 0;
  bool irreducible = false;
};

// Looks at up to `wanted` primes p not dividing lc(f) with f squarefree mod
// p, among the first `limit` primes.
GoodPrimeScan scan_good_primes(const IntPolynomial& f, int wanted, std::size_t limit) {
  GoodPrimeScan scan;
  const int n = f.degree();
  std::bitset<64> common;
  common.set();
  int found = 0;
  const auto& primes = modp::small_primes();
  for (std::size_t i = 0; i < std::min(limit, primes.size()); ++i) {
    const std::uint32_t p = primes[i];
    auto pattern = unramified_pattern(f, p);
    if (!pattern) continue;
    ++found;
    if (scan.best_prime == 0 || pattern->size() < scan.best_count) {
      scan.best_prime = p;
      scan.best_count = pattern->size();
    }
    common &= subset_degrees(*pattern);
    bool only_trivial = true;
    for (int d = 1; d < n; ++d)
      if (common[static_cast<std::size_t>(d)]) only_trivial = false;
    if (only_trivial) {
      scan.irreducible = true;
      return scan;
    }
    if (found >= wanted) break;
  }
  return scan;
}

}  // namespace

modp::Poly ModPFactorization::product() const {
  Field k(p);
  Poly r{leading};
  for (const auto& f : factors)
    for (int i = 0; i < f.multiplicity; ++i) r = modp::mul(r, f.poly, k);
  return r;
}

DegreePattern ModPFactorization::pattern() const {
  DegreePattern out;
  for (const auto& f : factors)
    for (int i = 0; i < f.multiplicity; ++i) out.push_back(modp::degree(f.poly));
  std::sort(out.rbegin(), out.rend());
  return out;
}

ModPFactorization factor_mod_p(const IntPolynomial& f, std::uint64_t p, std::uint64_t seed) {
  Field k(p);
  Poly fp = modp::reduce(f, k);
  if (fp.empty()) fail(ErrorKind::DegenerateInput, "factor_mod_p: f is zero mod p");
  ModPFactorization out;
  out.p = p;
  out.leading = fp.back();
  if (modp::degree(fp) == 0) return out;
  Poly monic = modp::monic(fp, k);
  std::mt19937_64 rng(seed);
  std::vector<std::pair<Poly, int>> sqf;
  squarefree_decomposition(monic, k, 1, sqf);
  for (const auto& [part, mult] : sqf) {
    for (const auto& [block, d] : distinct_degree(part, k)) {
      std::vector<Poly> irreducibles;
      equal_degree(block, d, k, rng, irreducibles);
      for (auto& g : irreducibles) out.factors.push_back({std::move(g), mult});
    }
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const ModPFactor& a, const ModPFactor& b) {
    if (a.poly != b.poly) return poly_less(a.poly, b.poly);
    return a.multiplicity < b.multiplicity;
  });
  return out;
}

std::optional<DegreePattern> unramified_pattern(const IntPolynomial& f, std::uint64_t p) {
  Field k(p);
  Poly fp = modp::reduce(f, k);
  if (modp::degree(fp) != f.degree()) return std::nullopt;
  fp = modp::monic(fp, k);
  if (modp::degree(modp::gcd(fp, modp::derivative(fp, k), k)) != 0) return std::nullopt;
  return modp::ddf_pattern(fp, k);
}

DegreePattern degree_pattern(const IntPolynomial& f, std::uint64_t p) {
  return degree_pattern(f, p, discriminant(f));
}

DegreePattern degree_pattern(const IntPolynomial& f, std::uint64_t p, const Integer& disc) {
  require(f.is_monic(), "degree_pattern: f must be monic");
  if (mpz_divisible_ui_p(disc.get_mpz_t(), p))
    fail(ErrorKind::RamifiedPrime, "degree_pattern: p = " + std::to_string(p) + " divides the discriminant");
  Field k(p);
  Poly fp = modp::reduce(f, k);
  if (modp::degree(modp::gcd(fp, modp::derivative(fp, k), k)) != 0)
    fail(ErrorKind::InternalConsistency, "f not squarefree mod an unramified prime");
  return modp::ddf_pattern(fp, k);
}

IntPolynomial IntFactorization::product() const {
  IntPolynomial r = IntPolynomial::constant(content);
  for (const auto& [g, m] : factors)
    for (int i = 0; i < m; ++i) r = r * g;
  return r;
}

Integer factor_coefficient_bound(const IntPolynomial& f) {
  Integer norm2 = 0;
  for (const auto& a : f.coeffs()) norm2 += a * a;
  Integer norm = sqrt(norm2) + 1;
  Integer b = norm * abs(f.leading());
  mpz_mul_2exp(b.get_mpz_t(), b.get_mpz_t(), static_cast<mp_bitcnt_t>(f.degree()));
  return b;
}

HenselLift hensel_lift(const IntPolynomial& f, const std::vector<Poly>& factors, std::uint64_t p,
                       const Integer& bound) {
  Field k(p);
  const std::size_t r = factors.size();
  require(r >= 1, "hensel_lift: no factors");
  const Integer lc = f.leading();
  const modp::Coeff lc_inv = k.inv(k.reduce(lc));

  // a_i with sum a_i prod_{j != i} u_j = 1 mod p
  std::vector<Poly> bezout(r);
  for (std::size_t i = 0; i < r; ++i) {
    Poly others{1};
    for (std::size_t j = 0; j < r; ++j)
      if (j != i) others = modp::mul(others, factors[j], k);
    Poly s, t;
    Poly g = modp::xgcd(factors[i], others, k, &s, &t);
    if (g != Poly{1}) fail(ErrorKind::InternalConsistency, "hensel_lift: factors not coprime mod p");
    bezout[i] = modp::rem(t, factors[i], k);
  }

  HenselLift out;
  out.p = p;
  std::vector<IntPolynomial> cur;
  for (const auto& u : factors) {
    std::vector<Integer> v(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) v[i] = Integer(static_cast<unsigned long>(u[i]));
    cur.emplace_back(std::move(v));
  }
  Integer m = p;
  out.chain.push_back(cur);
  while (m <= bound) {
    Integer next = m * p;
    IntPolynomial prod = IntPolynomial::constant(lc);
    for (const auto& u : cur) prod = mul_mod(prod, u, next);
    std::vector<Integer> e((f - prod).vec());
    Poly err(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
      mpz_fdiv_r(e[i].get_mpz_t(), e[i].get_mpz_t(), next.get_mpz_t());
      mpz_divexact(e[i].get_mpz_t(), e[i].get_mpz_t(), m.get_mpz_t());
      err[i] = k.mul(e[i].get_ui(), lc_inv);
    }
    modp::trim(err);
    for (std::size_t i = 0; i < r; ++i) {
      Poly delta = modp::rem(modp::mul(err, bezout[i], k), factors[i], k);
      std::vector<Integer> v(cur[i].vec());
      for (std::size_t j = 0; j < delta.size(); ++j) v[j] += m * static_cast<unsigned long>(delta[j]);
      cur[i] = IntPolynomial(std::move(v));
    }
    m = next;
    out.chain.push_back(cur);
  }
  out.modulus = m;
  return out;
}

std::vector<IntPolynomial> factor_squarefree(const IntPolynomial& f) {
  if (f.degree() <= 1) return {f};
  GoodPrimeScan scan = scan_good_primes(f, 6, modp::small_primes().size());
  if (scan.best_prime == 0) fail(ErrorKind::NotSquarefree, "factor_squarefree: no good prime");
  if (scan.irreducible) return {f};
  const std::uint64_t p = scan.best_prime;
  ModPFactorization mod = factor_mod_p(f, p);
  if (mod.factors.size() == 1) return {f};
  std::vector<Poly> us;
  for (const auto& fac : mod.factors) us.push_back(fac.poly);

  const Integer bound = 2 * factor_coefficient_bound(f);
  HenselLift lift = hensel_lift(f, us, p, bound);
  const Integer& modulus = lift.modulus;
  std::vector<IntPolynomial> remaining = lift.chain.back();

  std::vector<IntPolynomial> result;
  IntPolynomial rest = f;
  std::size_t s = 1;
  while (2 * s <= remaining.size()) {
    bool found = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    for (;;) {
      // leading-coefficient-scaled candidate; constant-term check first
      Integer lc = rest.leading();
      Integer c0 = lc;
      for (std::size_t i : idx) c0 = sym_mod(c0 * remaining[i][0], modulus);
      bool plausible = c0 == 0 ? rest[0] == 0 : mpz_divisible_p(Integer(lc * rest[0]).get_mpz_t(), c0.get_mpz_t()) != 0;
      if (plausible) {
        IntPolynomial g = IntPolynomial::constant(lc);
        for (std::size_t i : idx) g = mul_mod(g, remaining[i], modulus);
        std::vector<Integer> v(g.vec());
        for (auto& c : v) c = sym_mod(c, modulus);
        IntPolynomial cand = primitive_part(IntPolynomial(std::move(v)));
        if (auto q = exact_divide(rest, cand)) {
          result.push_back(cand);
          rest = *q;
          std::vector<IntPolynomial> keep;
          for (std::size_t i = 0; i < remaining.size(); ++i)
            if (std::find(idx.begin(), idx.end(), i) == idx.end()) keep.push_back(remaining[i]);
          remaining = std::move(keep);
          found = true;
          break;
        }
      }
      // next combination
      std::size_t pos = s;
      while (pos > 0 && idx[pos - 1] == remaining.size() - s + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t i = pos; i < s; ++i) idx[i] = idx[i - 1] + 1;
    }
    if (!found) ++s;
  }
  if (rest.degree() > 0) result.push_back(primitive_part(rest));
  std::sort(result.begin(), result.end(), int_poly_less);
  return result;
}

IntFactorization factor_over_z(const IntPolynomial& f) {
  if (f.is_zero()) fail(ErrorKind::DegenerateInput, "factor_over_z: zero polynomial");
  IntFactorization out;
  out.content = content(f);
  if (f.leading() < 0) out.content = -out.content;
  if (f.degree() == 0) return out;
  IntPolynomial rest = primitive_part(f);
  for (const auto& g : factor_squarefree(squarefree_part(rest))) {
    int mult = 0;
    while (auto q = exact_divide(rest, g)) {
      rest = *q;
      ++mult;
    }
    out.factors.emplace_back(g, mult);
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) { return int_poly_less(a.first, b.first); });
  return out;
}

bool is_irreducible(const IntPolynomial& f) {
  require(f.degree() >= 1, "is_irreducible: degree < 1");
  if (content(f) != 1) return false;
  if (f.degree() == 1) return true;
  if (f[0] == 0) return false;
  // A good prime certifies squarefreeness; without one, fall back to gcd.
  auto scan = scan_good_primes(f, 8, 200);
  if (scan.irreducible) return true;
  if (scan.best_prime == 0 && gcd(f, f.derivative()).degree() > 0) return false;
  return factor_squarefree(primitive_part(f)).size() == 1;
}

}  // namespace galois
