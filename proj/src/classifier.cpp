// Copyright 2026 The galois6 Authors.
// SPDX-License-Identifier: Apache-2.0

#include "galois/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <mutex>
#include <random>

#include <nlohmann/json.hpp>

#include "galois/numeric.hpp"
#include "galois/polycore.hpp"
#include "galois/resolvents.hpp"

namespace galois {

bool is_square(const Integer& d) {
  require(d != 0, "square test of zero");
  if (d < 0) return false;
  return mpz_perfect_square_p(d.get_mpz_t()) != 0;
}

NrBound nr_bound(int r) {
  require(r >= 0 && r % 2 == 0, "the number of non-real roots is even");
  NrBound b;
  b.r = r;
  b.s = r / 2;
  if (b.s > 0) {
    double s = b.s, ls = std::log(s);
    b.N = s * (s * ls + 2.0 * ls + 3.0);
  }
  return b;
}

std::optional<int> prime_degree_threshold(int r) {
  switch (r) {
    case 4: return 7;
    case 6: return 13;
    case 8: return 23;
    case 10: return 37;
    default: return std::nullopt;
  }
}

bool forces_alternating_or_symmetric(int p, int r) {
  auto t = prime_degree_threshold(r);
  if (!t) return false;
  if (p < 2) return false;
  for (int q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return p > *t;
}

namespace {

CycleType conjugation_type(int nonreal) {
  CycleType t(static_cast<std::size_t>(nonreal / 2), 2);
  t.resize(static_cast<std::size_t>(6 - nonreal / 2), 1);
  return t;
}

// Pattern sampling with candidate tracking for the early stop.
std::set<DegreePattern> sample(const IntPolynomial& g, const Integer& disc, const PrimeBudget& budget,
                               const CycleType& conj, std::optional<bool> parity,
                               std::vector<PrimeObservation>* log) {
  std::set<DegreePattern> seen;
  std::vector<std::string> last;
  int stable = 0, good = 0, tried = 0;
  for (std::uint32_t p : modp::small_primes()) {
    if (p > budget.max_prime) break;
    ++tried;
    if (mpz_divisible_ui_p(disc.get_mpz_t(), p)) continue;
    ++good;
    DegreePattern pat = degree_pattern(g, p, disc);
    if (log) log->push_back({p, pat});
    seen.insert(pat);
    if (budget.stable_stop <= 0) continue;
    auto cand = candidates(seen, conj, parity);
    if (cand.size() == 1) break;
    stable = cand == last ? stable + 1 : 0;
    last = std::move(cand);
    if (stable >= budget.stable_stop) break;
  }
  if (tried > 0 && good == 0) fail(ErrorKind::Configuration, "no good prime below the prime budget");
  return seen;
}

using OrbitData = std::vector<std::pair<int, bool>>;

OrbitData observed_data(const ResolventResult& r, std::vector<bool>* squares) {
  OrbitData out;
  for (const auto& g : r.factors) {
    bool sq = g.degree() == 1 || is_square(discriminant(g));
    out.emplace_back(g.degree(), sq);
  }
  std::sort(out.begin(), out.end());
  if (squares) {
    squares->clear();
    for (auto [d, s] : out) squares->push_back(s);
  }
  return out;
}

}  // namespace

std::set<DegreePattern> sample_patterns(const IntPolynomial& f, const PrimeBudget& budget,
                                        std::vector<PrimeObservation>* log) {
  require(f.degree() == 6 && f.is_monic(), "pattern sampling needs a monic sextic");
  Integer disc = discriminant(f);
  require(disc != 0, "pattern sampling needs a squarefree polynomial");
  return sample(f, disc, budget, CycleType(6, 1), std::nullopt, log);
}

std::vector<std::pair<int, bool>> resolvent_orbit_data(const InvariantPoly& F, const TransitiveGroup& group) {
  static std::mutex mu;
  static std::map<std::pair<std::string, std::string>, OrbitData> cache;
  auto key = std::make_pair(F.to_string(), group.label);
  {
    std::lock_guard lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  const auto& s6 = group_by_label("S6");
  Stabilizer st = stabilizer(F, s6);
  CosetSpace cs(s6.elements, st.subgroup);
  OrbitData out;
  for (const auto& o : cs.orbits(group.generators)) out.emplace_back(static_cast<int>(o.cosets.size()), o.even);
  std::sort(out.begin(), out.end());
  std::lock_guard lock(mu);
  cache.emplace(key, out);
  return out;
}

Classification classify(const IntPolynomial& f, const ClassifyOptions& options) {
  if (f.degree() != 6) fail(ErrorKind::DegenerateInput, "classification needs a sextic");
  ClassificationCertificate cert;
  cert.input = f;
  if (!is_irreducible(primitive_part(f))) fail(ErrorKind::NotIrreducible, "polynomial is reducible over Q");

  IntPolynomial g = monic_associate(f);
  cert.monic = g;
  cert.discriminant = discriminant(g);
  cert.disc_square = is_square(cert.discriminant);
  int real = sturm_real_roots(f);
  cert.real_roots = real;
  cert.conj_type = conjugation_type(6 - real);

  std::vector<std::string> all;
  for (const auto& grp : transitive_groups()) all.push_back(grp.label);
  cert.trace.push_back(all);
  cert.trace.push_back(candidates({}, cert.conj_type, cert.disc_square));

  cert.patterns = sample(g, cert.discriminant, options.budget, cert.conj_type, cert.disc_square, &cert.primes);
  auto cand = candidates(cert.patterns, cert.conj_type, cert.disc_square);
  cert.trace.push_back(cand);

  ResolventOptions ropt;
  ropt.max_precision = options.max_precision;
  for (const InvariantPoly* F : {&pairing_invariant(), &triple_invariant()}) {
    if (cand.size() <= 1) break;
    const auto& s6 = group_by_label("S6");
    IntPolynomial h = g;
    ResolventResult r = resolvent(*F, s6, h, ropt);
    for (std::uint64_t seed = 1; !r.squarefree; ++seed) {
      if (seed > 50) fail(ErrorKind::PrecisionFailure, "no squarefree resolvent after Tschirnhausen retries");
      h = tschirnhausen(g, seed);
      r = resolvent(*F, s6, h, ropt);
    }
    ResolventEvidence ev;
    ev.invariant = F->to_string();
    ev.index = r.index;
    ev.polynomial = h;
    ev.resolvent = r.resolvent;
    OrbitData seen = observed_data(r, &ev.factor_square_disc);
    for (auto [d, s] : seen) ev.factor_degrees.push_back(d);
    std::vector<std::string> next;
    for (const auto& label : cand)
      if (resolvent_orbit_data(*F, group_by_label(label)) == seen) next.push_back(label);
    if (next.empty()) fail(ErrorKind::InconsistentEvidence, "resolvent factorization matches no candidate");
    cand = next;
    ev.survivors = next;
    cert.resolvents.push_back(std::move(ev));
    cert.trace.push_back(cand);
  }
  if (cand.size() != 1) fail(ErrorKind::InternalConsistency, "resolvents left more than one candidate");
  cert.label = cand[0];
  return {cert.label, std::move(cert)};
}

std::string ClassificationCertificate::to_json(int indent) const {
  nlohmann::json j;
  j["input"] = format_coefficients(input);
  j["monic"] = format_coefficients(monic);
  j["discriminant"] = discriminant.get_str();
  nlohmann::json primes_j = nlohmann::json::array();
  for (const auto& o : primes) primes_j.push_back({{"p", o.p}, {"pattern", o.pattern}});
  j["primes"] = primes_j;
  nlohmann::json pats = nlohmann::json::array();
  for (const auto& p : patterns) pats.push_back(p);
  j["patterns"] = pats;
  j["real_roots"] = real_roots;
  j["conjugation_type"] = conj_type;
  j["disc_square"] = disc_square;
  nlohmann::json res = nlohmann::json::array();
  for (const auto& r : resolvents)
    res.push_back({{"invariant", r.invariant},
                   {"index", r.index},
                   {"polynomial", format_coefficients(r.polynomial)},
                   {"resolvent", format_coefficients(r.resolvent)},
                   {"factor_degrees", r.factor_degrees},
                   {"factor_square_disc", r.factor_square_disc},
                   {"survivors", r.survivors}});
  j["resolvents"] = res;
  j["trace"] = trace;
  j["label"] = label;
  return j.dump(indent);
}

// ---------------------------------------------------------------------------
// Order oracle

namespace {

struct ConcreteGroup {
  ElementSet members;
  int order = 0;
  std::set<CycleType> types;
};

const std::vector<ConcreteGroup>& concrete_transitive_groups() {
  static const std::vector<ConcreteGroup> all = [] {
    std::vector<ConcreteGroup> out;
    for (const auto& g : transitive_groups()) {
      std::set<CycleType> types;
      for (const auto& e : g.elements) types.insert(e.cycle_type());
      for (const auto& c : conjugates(g.members)) out.push_back({c, g.order, types});
    }
    return out;
  }();
  return all;
}

bool subset_of(const ElementSet& a, const ElementSet& b) { return (a & ~b).none(); }

class LinearFormTest {
 public:
  LinearFormTest(const IntPolynomial& g, std::uint64_t seed) : g_(g) {
    std::mt19937_64 rng(seed);
    auto approx = numeric::complex_roots(g_, 128);
    std::vector<std::complex<double>> a;
    for (const auto& z : approx.roots) a.emplace_back(z.re.to_double(), z.im.to_double());
    // small coefficients first; roots with many linear relations need a wider range
    for (int attempt = 0; attempt < 400; ++attempt) {
      int range = 12 << std::min(attempt / 20, 12);
      std::uniform_int_distribution<int> dist(-range, range);
      for (auto& c : c_) c = dist(rng);
      std::array<int, 6> sorted = c_;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
      if (separating(a)) return;
    }
    fail(ErrorKind::PrecisionFailure, "no separating linear form found");
  }

  /// True when prod_{s in K} (x - V_s) has integer coefficients.
  bool contained_in(const ElementSet& k) {
    auto perms = elements_of(k);
    double lb = std::max(0.0, numeric::root_bound_log2(g_));
    double vmax = 0;
    for (int c : c_) vmax += std::abs(c);
    double bits = static_cast<double>(perms.size()) * (std::log2(vmax + 1.0) + lb + 1.0) + 64.0;
    long prec = 64;
    while (prec < bits) prec *= 2;
    for (; prec <= (1L << 16); prec *= 2) {
      const auto& roots = roots_at(prec + 128);
      if (!roots.isolated) continue;
      auto a = numeric::round_to_integers(numeric::poly_from_roots(values(perms, roots.roots, prec), prec));
      auto b = numeric::round_to_integers(
          numeric::poly_from_roots(values(perms, roots.roots, prec + 128), prec + 128));
      if (!a && !b) return false;
      if (a && b && *a == *b) return true;
    }
    fail(ErrorKind::PrecisionFailure, "containment test did not settle below the precision ceiling");
  }

 private:
  bool separating(const std::vector<std::complex<double>>& a) const {
    std::vector<std::complex<double>> v;
    double scale = 1.0;
    for (int r = 0; r < 720; ++r) {
      auto s = Permutation::unrank(r);
      std::complex<double> x = 0;
      for (int i = 0; i < 6; ++i) x += static_cast<double>(c_[i]) * a[s(i)];
      v.push_back(x);
      scale = std::max(scale, std::abs(x));
    }
    std::sort(v.begin(), v.end(), [](auto& p, auto& q) { return p.real() < q.real(); });
    const double eps = 1e-9 * scale;
    for (std::size_t i = 0; i < v.size(); ++i)
      for (std::size_t j = i + 1; j < v.size() && v[j].real() - v[i].real() < eps; ++j)
        if (std::abs(v[j] - v[i]) < eps) return false;
    return true;
  }

  std::vector<numeric::Complex> values(const std::vector<Permutation>& perms,
                                       const std::vector<numeric::Complex>& roots, long prec) const {
    std::vector<numeric::Complex> alpha;
    for (const auto& z : roots) {
      numeric::Complex w(z);
      mpfr_prec_round(w.re.get(), prec, MPFR_RNDN);
      mpfr_prec_round(w.im.get(), prec, MPFR_RNDN);
      alpha.push_back(std::move(w));
    }
    std::vector<numeric::Complex> out;
    for (const auto& s : perms) {
      numeric::Complex v(prec);
      for (int i = 0; i < 6; ++i) {
        if (c_[i] == 0) continue;
        numeric::Complex t = alpha[s(i)];
        t.scale(numeric::BigFloat(prec, static_cast<long>(c_[i])));
        v += t;
      }
      out.push_back(std::move(v));
    }
    return out;
  }

  const numeric::RootApproximation& roots_at(long prec) {
    auto it = roots_.find(prec);
    if (it == roots_.end()) it = roots_.emplace(prec, numeric::complex_roots(g_, prec)).first;
    return it->second;
  }

  IntPolynomial g_;
  std::array<int, 6> c_{};
  std::map<long, numeric::RootApproximation> roots_;
};

}  // namespace

int oracle_order(const IntPolynomial& f, std::uint64_t seed) {
  require(f.degree() == 6, "order oracle needs a sextic");
  IntPolynomial g = monic_associate(f);
  require(is_irreducible(g), "order oracle needs an irreducible polynomial");
  Integer disc = discriminant(g);
  bool square = is_square(disc);

  // Frobenius cycle types rule out subgroups without numerics.
  std::set<CycleType> types;
  for (std::uint32_t p : modp::small_primes()) {
    if (p > 211) break;
    if (mpz_divisible_ui_p(disc.get_mpz_t(), p)) continue;
    types.insert(factor_mod_p(g, p).pattern());
  }

  const auto& all = concrete_transitive_groups();
  const auto& a6 = group_by_label("g15").members;
  std::optional<LinearFormTest> test;
  ElementSet current = group_by_label("S6").members;
  int order = 720;
  for (;;) {
    std::vector<const ConcreteGroup*> below;
    for (const auto& k : all)
      if (k.order < order && subset_of(k.members, current)) below.push_back(&k);
    std::vector<const ConcreteGroup*> maximal;
    for (const auto* k : below) {
      bool is_max = std::none_of(below.begin(), below.end(), [&](const ConcreteGroup* m) {
        return m->order > k->order && subset_of(k->members, m->members);
      });
      if (is_max) maximal.push_back(k);
    }
    std::vector<const ConcreteGroup*> passing;
    for (const auto* k : maximal) {
      bool even = subset_of(k->members, a6);
      if (even && !square) continue;
      if (!std::includes(k->types.begin(), k->types.end(), types.begin(), types.end())) continue;
      bool inside;
      if (k->members == a6) {
        inside = square;
      } else {
        if (!test) test.emplace(g, seed);
        inside = test->contained_in(k->members);
      }
      if (inside) passing.push_back(k);
    }
    if (passing.empty()) return order;
    ElementSet meet = passing[0]->members;
    for (const auto* k : passing) meet &= k->members;
    auto it = std::find_if(all.begin(), all.end(), [&](const ConcreteGroup& k) { return k.members == meet; });
    if (it == all.end()) fail(ErrorKind::InternalConsistency, "intersection of containing groups is not transitive");
    current = it->members;
    order = it->order;
  }
}

}  // namespace galois
