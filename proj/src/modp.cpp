// Copyright 2026 The galois6 Authors.
// SPDX-License-Identifier: Apache-2.0

#include "galois/modp.hpp"

#include <algorithm>

namespace galois::modp {

Coeff Field::pow(Coeff a, std::uint64_t e) const noexcept {
  Coeff r = 1 % p_;
  a %= p_;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Coeff Field::inv(Coeff a) const {
  a %= p_;
  if (a == 0) fail(ErrorKind::ContractViolation, "inverse of zero in F_p");
  // extended Euclid on signed 128-bit values
  __int128 r0 = p_, r1 = a, t0 = 0, t1 = 1;
  while (r1 != 0) {
    __int128 q = r0 / r1;
    __int128 r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    __int128 t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (t0 < 0) t0 += p_;
  return static_cast<Coeff>(t0);
}

Coeff Field::reduce(const Integer& a) const {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), a.get_mpz_t(), p_);
  return r.get_ui();
}

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly reduce(const IntPolynomial& f, const Field& k) {
  Poly r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    const Integer& a = f.coeffs()[i];
    if (a.fits_slong_p()) {
      long v = a.get_si() % static_cast<long>(k.p());
      r[i] = static_cast<Coeff>(v < 0 ? v + static_cast<long>(k.p()) : v);
    } else {
      r[i] = k.reduce(a);
    }
  }
  trim(r);
  return r;
}

IntPolynomial lift(const Poly& f, const Field& k) {
  std::vector<Integer> v(f.size());
  const Coeff half = k.p() / 2;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] > half)
      v[i] = -Integer(static_cast<unsigned long>(k.p() - f[i]));
    else
      v[i] = Integer(static_cast<unsigned long>(f[i]));
  }
  return IntPolynomial(std::move(v));
}

Poly add(const Poly& a, const Poly& b, const Field& k) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = k.add(r[i], b[i]);
  trim(r);
  return r;
}

Poly sub(const Poly& a, const Poly& b, const Field& k) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = k.sub(r[i], b[i]);
  trim(r);
  return r;
}

Poly mul(const Poly& a, const Poly& b, const Field& k) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = k.add(r[i + j], k.mul(a[i], b[j]));
  }
  trim(r);
  return r;
}

Poly scale(const Poly& a, Coeff c, const Field& k) {
  Poly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = k.mul(a[i], c);
  trim(r);
  return r;
}

Poly derivative(const Poly& a, const Field& k) {
  if (a.size() <= 1) return {};
  Poly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = k.mul(a[i], i % k.p());
  trim(r);
  return r;
}

void divmod(const Poly& a, const Poly& b, const Field& k, Poly* q, Poly* r) {
  require(!b.empty(), "F_p division by zero polynomial");
  Poly rr = a;
  const int db = degree(b);
  const Coeff inv_lead = k.inv(b.back());
  Poly qq;
  if (degree(a) >= db) qq.assign(static_cast<std::size_t>(degree(a) - db) + 1, 0);
  for (int i = degree(a); i >= db; --i) {
    Coeff c = rr[i];
    if (c == 0) continue;
    c = k.mul(c, inv_lead);
    qq[i - db] = c;
    for (int j = 0; j <= db; ++j) rr[i - db + j] = k.sub(rr[i - db + j], k.mul(c, b[j]));
  }
  trim(rr);
  trim(qq);
  if (q) *q = std::move(qq);
  if (r) *r = std::move(rr);
}

Poly rem(const Poly& a, const Poly& b, const Field& k) {
  Poly r;
  divmod(a, b, k, nullptr, &r);
  return r;
}

Poly quot(const Poly& a, const Poly& b, const Field& k) {
  Poly q;
  divmod(a, b, k, &q, nullptr);
  return q;
}

Poly monic(const Poly& a, const Field& k) {
  if (a.empty() || a.back() == 1) return a;
  return scale(a, k.inv(a.back()), k);
}

Poly gcd(Poly a, Poly b, const Field& k) {
  while (!b.empty()) {
    Poly r = rem(a, b, k);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, k);
}

Poly xgcd(const Poly& a, const Poly& b, const Field& k, Poly* s, Poly* t) {
  Poly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    Poly q, r;
    divmod(r0, r1, k, &q, &r);
    Poly s2 = sub(s0, mul(q, s1, k), k);
    Poly t2 = sub(t0, mul(q, t1, k), k);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (!r0.empty() && r0.back() != 1) {
    Coeff c = k.inv(r0.back());
    r0 = scale(r0, c, k);
    s0 = scale(s0, c, k);
    t0 = scale(t0, c, k);
  }
  if (s) *s = std::move(s0);
  if (t) *t = std::move(t0);
  return r0;
}

Poly powmod(const Poly& base, const Integer& e, const Poly& m, const Field& k) {
  Poly result{1};
  result = rem(result, m, k);
  Poly b = rem(base, m, k);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = rem(mul(result, result, k), m, k);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(mul(result, b, k), m, k);
  }
  return result;
}

Poly powmod(const Poly& base, std::uint64_t e, const Poly& m, const Field& k) {
  Poly result = rem(Poly{1}, m, k);
  Poly b = rem(base, m, k);
  while (e) {
    if (e & 1) result = rem(mul(result, b, k), m, k);
    e >>= 1;
    if (e) b = rem(mul(b, b, k), m, k);
  }
  return result;
}

Partition ddf_pattern(const Poly& f, const Field& k) {
  Partition out;
  Poly rest = monic(f, k);
  const Poly x{0, 1};
  Poly h = rem(x, rest, k);
  for (int d = 1; 2 * d <= degree(rest); ++d) {
    h = powmod(h, k.p(), rest, k);
    Poly g = gcd(rest, sub(h, x, k), k);
    if (degree(g) > 0) {
      for (int i = 0; i < degree(g) / d; ++i) out.push_back(d);
      rest = quot(rest, g, k);
      h = rem(h, rest, k);
    }
  }
  if (degree(rest) > 0) out.push_back(degree(rest));
  std::sort(out.rbegin(), out.rend());
  return out;
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t bound) {
  std::vector<std::uint32_t> out;
  if (bound < 2) return out;
  std::vector<bool> composite(bound + 1, false);
  for (std::uint32_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = static_cast<std::uint64_t>(i) * i; j <= bound; j += i) composite[j] = true;
  }
  return out;
}

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = primes_up_to(200000);
  return primes;
}

}  // namespace galois::modp
