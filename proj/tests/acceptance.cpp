// Copyright 2026 The galois6 Authors.
// SPDX-License-Identifier: Apache-2.0

// Acceptance gate. Prints one PASS or FAIL line per criterion and exits
// nonzero when any selected criterion fails.
//
//   acceptance [--data-dir DIR] [--long] [criterion ...]
//
// Criteria 1-7 run by default. Criterion 8 (full height-6 census) runs with
// --long or GALOIS6_LONG_TESTS=1. Census results are cached under DIR and
// resumed on the next run.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "galois/census.hpp"
#include "galois/classifier.hpp"
#include "galois/ffactor.hpp"
#include "galois/groups.hpp"
#include "galois/invariants.hpp"
#include "galois/modp.hpp"
#include "galois/neurosym.hpp"
#include "galois/polycore.hpp"
#include "galois/resolvents.hpp"
#include "oracles.hpp"
#include "table3.hpp"

using namespace galois;
namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fixed(double x, int digits = 1) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(digits);
  out << x;
  return out.str();
}

IntPolynomial poly_of(const std::vector<long>& c) {
  std::vector<Integer> v;
  for (long x : c) v.emplace_back(x);
  return IntPolynomial(std::move(v));
}

IntPolynomial poly_of(const Coeffs& c) { return poly_of(std::vector<long>(c.begin(), c.end())); }

Rational power(const Rational& q, int e) {
  Rational r = 1;
  for (int i = 0; i < e; ++i) r *= q;
  return r;
}

long height_of(const Coeffs& c) {
  long h = 0;
  for (long x : c) h = std::max(h, std::labs(x));
  return h;
}

// Calls visit on every irreducible sextic (a6 != 0) of height <= h, one per sign pair.
void for_each_irreducible(int h, const std::function<void(const IntPolynomial&)>& visit) {
  enumerate_points(h, 7, [&](std::uint64_t, const std::vector<long>& v) {
    if (v[6] == 0) return;
    IntPolynomial f = poly_of(v);
    if (is_irreducible(f)) visit(f);
  });
}

std::string data_dir;

CensusSummary cached_census(int height, const std::string& name) {
  CensusConfig cfg;
  cfg.height = height;
  cfg.out_dir = (fs::path(data_dir) / name).string();
  cfg.resume = true;
  cfg.records = RecordFilter::NonS6;
  Stopwatch t;
  CensusRun run = run_census(cfg, [&](std::size_t done, std::size_t total) {
    if (done % 10 == 0 || done == total)
      std::cerr << "  census H=" << height << ": " << done << "/" << total << " chunks, " << fixed(t.seconds())
                << " s\n";
  });
  return run.summary;
}

std::vector<CensusRecord> read_records(const std::string& name) {
  std::vector<CensusRecord> out;
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(fs::path(data_dir) / name / "records")) files.push_back(e.path());
  std::sort(files.begin(), files.end());
  for (const auto& p : files) {
    std::ifstream in(p);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      json j = json::parse(line);
      if (!j.at("irreducible").get<bool>()) continue;
      CensusRecord r;
      r.index = j.at("index").get<std::uint64_t>();
      r.coeffs = j.at("coeffs").get<Coeffs>();
      r.height = j.at("height").get<long>();
      r.irreducible = true;
      r.label = j.at("label").get<std::string>();
      out.push_back(std::move(r));
    }
  }
  return out;
}

// 1. The cyclic sextics: classification and the restricted height-6 census.
Outcome table3_reproduction() {
  Stopwatch t;
  int cyclic = 0;
  for (const auto& row : testdata::cyclic_sextics())
    if (classify(testdata::to_poly(row.coeffs)).label == "g1") ++cyclic;
  double classify_s = t.seconds();

  auto restricted = [](bool monic) {
    CensusConfig cfg;
    cfg.height = 6;
    cfg.restrict_label = "g1";
    cfg.monic_only = monic;
    cfg.collect_records = true;
    std::set<Coeffs> got;
    for (const auto& r : run_census(cfg).records) got.insert(r.coeffs);
    return got;
  };
  // x^6 f(1/x), sign-normalized like census points
  auto reversed = [](Coeffs c) {
    std::reverse(c.begin(), c.end());
    auto lead = std::find_if(c.begin(), c.end(), [](long x) { return x != 0; });
    if (*lead < 0)
      for (auto& x : c) x = -x;
    return c;
  };
  Stopwatch tc;
  std::set<Coeffs> want, want_reversed;
  for (const auto& row : testdata::cyclic_sextics()) {
    want.insert(row.coeffs);
    want_reversed.insert(reversed(row.coeffs));
  }
  std::set<Coeffs> got = restricted(false);
  std::vector<Coeffs> missing, extra;
  std::set_difference(want.begin(), want.end(), got.begin(), got.end(), std::back_inserter(missing));
  std::set_difference(got.begin(), got.end(), want.begin(), want.end(), std::back_inserter(extra));
  int extra_reversals = 0;
  for (const auto& c : extra) extra_reversals += want_reversed.count(c) ? 1 : 0;
  std::set<Coeffs> monic = restricted(true);

  Outcome o;
  o.pass = cyclic == 20 && classify_s < 10.0 && got == want;
  o.detail = std::to_string(cyclic) + "/20 classified g1 in " + fixed(classify_s, 2) +
             " s; restricted H=6 census found " + std::to_string(got.size()) + ": " +
             std::to_string(want.size() - missing.size()) + " listed, " + std::to_string(extra.size()) +
             " unlisted of which " + std::to_string(extra_reversals) +
             " are reversals of listed rows; monic-only census found " + std::to_string(monic.size()) +
             (monic == want_reversed ? ", exactly the list read leading coefficient first" : "") + "; " +
             fixed(tc.seconds()) + " s";
  for (const auto& c : extra) o.detail += "; unlisted " + format_coefficients(poly_of(c));
  return o;
}

// 2. Per-label census counts at height 4 against the published column.
Outcome table2_height4() {
  Stopwatch t;
  CensusSummary s = cached_census(4, "h4");
  auto rows = errata_diff(s);
  bool all = std::all_of(rows.begin(), rows.end(), [](const ErrataRow& r) { return r.match(); });
  int table3_h4 = 0;
  for (const auto& row : testdata::cyclic_sextics())
    if (height_of(row.coeffs) <= 4) ++table3_h4;

  std::cout << "  errata diff (height 4):\n";
  std::istringstream diff(errata_json(rows));
  for (std::string line; std::getline(diff, line);) std::cout << "    " << line << "\n";

  int mismatched = 0;
  for (const auto& r : rows) mismatched += r.match() ? 0 : 1;
  Outcome o;
  o.pass = all;
  o.detail = std::to_string(mismatched) + " of " + std::to_string(rows.size()) +
             " rows differ; non-S6 computed " + std::to_string(s.non_s6()) + " vs published 14255; g1 computed " +
             std::to_string(s.counts["g1"]) + ", cyclic list has " + std::to_string(table3_h4) +
             " entries of height <= 4; " + std::to_string(s.enumerated) + " points in " + fixed(t.seconds()) + " s";
  return o;
}

// 3. Absolute invariants partition the cyclic sextics into seven blocks.
Outcome invariant_partition() {
  std::vector<BinaryForm> forms;
  std::vector<int> blocks;
  for (const auto& row : testdata::cyclic_sextics()) {
    forms.push_back(homogenize(testdata::to_poly(row.coeffs), 6));
    blocks.push_back(row.block);
  }
  auto classes = equivalence_classes(forms);
  bool ok = classes.size() == 7;
  for (const auto& cls : classes)
    for (std::size_t i : cls) ok = ok && blocks[i] == blocks[cls.front()];
  std::set<int> firsts;
  for (const auto& cls : classes) firsts.insert(blocks[cls.front()]);
  ok = ok && firsts.size() == classes.size();
  return {ok, std::to_string(classes.size()) + " classes, " + (ok ? "one per block" : "not aligned with the blocks")};
}

// 4. Signatures recomputed from generators against the printed column.
Outcome signatures() {
  const std::vector<Signature> printed = {
      {0, 0, 1, 0, 0, 1, 0, 0, 0, 1}, {0, 0, 1, 0, 0, 1, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
      {0, 0, 0, 0, 0, 0, 0, 0, 0, 0}, {0, 0, 1, 1, 0, 1, 0, 0, 0, 1}, {1, 1, 1, 0, 0, 1, 0, 0, 0, 1},
      {0, 1, 0, 0, 0, 1, 0, 1, 0, 0}, {0, 1, 1, 0, 0, 1, 1, 0, 0, 0}, {0, 1, 0, 1, 0, 1, 0, 1, 0, 0},
      {0, 1, 1, 1, 0, 1, 0, 0, 0, 1}, {1, 1, 1, 0, 0, 1, 1, 1, 0, 1}, {0, 1, 0, 0, 0, 1, 0, 0, 1, 0},
      {1, 1, 1, 1, 1, 1, 0, 1, 0, 1}, {0, 1, 1, 0, 0, 1, 1, 0, 1, 1}, {0, 1, 0, 1, 0, 1, 0, 1, 1, 0},
  };
  auto fmt = [](const Signature& s) {
    std::string out = "[";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
    return out + "]";
  };
  bool ok = true;
  std::string errata;
  for (int i = 0; i < 15; ++i) {
    const auto& g = transitive_groups()[i];
    if (i == 2 || i == 3) {
      bool nonzero = std::any_of(g.signature.begin(), g.signature.end(), [](auto b) { return b != 0; });
      ok = ok && nonzero;
      errata += " " + g.label + " printed all-zero, recomputed " + fmt(g.signature) + ";";
      continue;
    }
    if (g.signature != printed[i]) {
      ok = false;
      errata += " " + g.label + " mismatch " + fmt(g.signature) + " vs " + fmt(printed[i]) + ";";
    }
  }
  return {ok, "13 rows compared exactly; errata:" + errata};
}

// 5. classify against the independent order oracle on every irreducible of height <= 2.
Outcome oracle_equivalence() {
  Stopwatch t;
  int n = 0, bad = 0;
  std::map<std::string, int> seen;
  for_each_irreducible(2, [&](const IntPolynomial& f) {
    ++n;
    auto label = classify(f).label;
    ++seen[label];
    if (group_by_label(label).order != oracle_order(f)) {
      ++bad;
      std::cout << "  mismatch: " << format_coefficients(f) << " classified " << label << "\n";
    }
  });
  return {bad == 0 && n > 0, std::to_string(n) + " irreducible sextics, " + std::to_string(bad) + " mismatches, " +
                                 std::to_string(seen.size()) + " distinct groups, " + fixed(t.seconds()) + " s"};
}

// 6. Property suites.
Outcome property_suites() {
  Stopwatch t;
  std::vector<std::string> failed;
  std::mt19937_64 rng(2026);

  // Sturm against grid bisection
  for (int i = 0; i < 10000; ++i) {
    auto f = oracle::random_poly(rng, 6, 20);
    if (sturm_real_roots(f) != oracle::grid_real_roots(f)) {
      failed.push_back("sturm " + format_coefficients(f));
      break;
    }
  }
  double sturm_s = t.seconds();

  // factorization over Z reconstructs; mod-p patterns match brute force and reduce back
  for (int i = 0; i < 10000; ++i) {
    auto f = oracle::random_poly(rng, 1 + i % 3, 9) * oracle::random_poly(rng, 1 + i % 4, 9);
    auto fac = factor_over_z(f);
    if (fac.product() != f) {
      failed.push_back("reconstruction " + format_coefficients(f));
      break;
    }
    unsigned p = std::vector<unsigned>{2, 3, 5, 7}[i % 4];
    if (mpz_divisible_ui_p(f.leading().get_mpz_t(), p)) continue;
    auto fp = factor_mod_p(f, p, static_cast<std::uint64_t>(i));
    if (fp.product() != modp::reduce(f, modp::Field(p)) || fp.pattern() != oracle::brute_force_pattern(f, p)) {
      failed.push_back("mod " + std::to_string(p) + " " + format_coefficients(f));
      break;
    }
  }
  double factor_s = t.seconds() - sturm_s;

  // resolvent degree and orbit lengths on height <= 2: every non-S6 sextic and a share of S6 ones
  int resolvents = 0, s6_taken = 0;
  const auto& s6 = group_by_label("S6");
  for_each_irreducible(2, [&](const IntPolynomial& f) {
    auto label = classify(f).label;
    if (label == "S6" && (s6_taken++ % 50) != 0) return;
    auto g = monic_associate(f);
    for (const InvariantPoly* F : {&pairing_invariant(), &triple_invariant()}) {
      auto r = resolvent(*F, s6, g);
      std::uint64_t seed = 1;
      while (!r.squarefree) r = resolvent(*F, s6, tschirnhausen(g, seed++));
      ++resolvents;
      if (r.resolvent.degree() != r.index || !orbit_length_check(r, s6, *F, label))
        failed.push_back("resolvent " + format_coefficients(f));
    }
  });
  double resolvent_s = t.seconds() - sturm_s - factor_s;

  // Igusa weight law
  std::uniform_int_distribution<long> e(-3, 3), c(-3, 3);
  for (int done = 0; done < 100;) {
    long a = e(rng), b = e(rng), cc = e(rng), d = e(rng);
    long det = a * d - b * cc;
    if (det == 0) continue;
    std::vector<Integer> v;
    for (int i = 0; i < 7; ++i) v.emplace_back(c(rng));
    if (v[6] == 0) v[6] = 1;
    BinaryForm f(std::move(v));
    IgusaTuple j = igusa(f), jm = igusa(f.substitute(a, b, cc, d));
    Rational D(det);
    if (jm.J2 != power(D, 6) * j.J2 || jm.J4 != power(D, 12) * j.J4 || jm.J6 != power(D, 18) * j.J6 ||
        jm.J10 != power(D, 30) * j.J10)
      failed.push_back("weight law");
    ++done;
  }

  // Moebius point counts
  for (int h = 1; h <= 3; ++h) {
    std::uint64_t n = 0;
    enumerate_points(h, 7, [&](std::uint64_t, const std::vector<long>&) { ++n; });
    if (Integer(static_cast<unsigned long>(n)) != mobius_point_count(h)) failed.push_back("moebius H=" + std::to_string(h));
  }

  std::string detail = "sturm " + fixed(sturm_s) + " s, factorization " + fixed(factor_s) + " s, " +
                       std::to_string(resolvents) + " resolvents " + fixed(resolvent_s) + " s, weight law 100, moebius H=1..3";
  for (const auto& f : failed) detail += "; failed " + f;
  return {failed.empty(), detail};
}

// 7. Neuro-symbolic model.
Outcome neurosym_properties() {
  using namespace galois::neurosym;
  Stopwatch t;
  std::vector<std::string> failed;

  // gradient check
  std::mt19937_64 rng(99);
  double worst = 0;
  for (int config = 0; config < 20; ++config) {
    const int dim = config % 2 ? 19 : 7;
    MlpParams p = MlpParams::init(dim, rng());
    Eigen::VectorXd theta = p.flatten();
    std::normal_distribution<double> nd(0.0, 1.0);
    for (Eigen::Index i = 0; i < theta.size(); ++i) theta[i] += 0.05 * nd(rng);
    p.assign(theta);
    const int batch = 1 + config % 4;
    Eigen::MatrixXd X(dim, batch);
    std::vector<int> y;
    for (int j = 0; j < batch; ++j) {
      for (int i = 0; i < dim; ++i) X(i, j) = nd(rng);
      y.push_back(static_cast<int>(rng() % kClasses));
    }
    Eigen::VectorXd g;
    loss(p, X, y, &g);
    const double h = 1e-5;
    Eigen::VectorXd ga(80), gn(80);
    for (int s = 0; s < 80; ++s) {
      auto i = static_cast<Eigen::Index>(rng() % theta.size());
      MlpParams q = p;
      Eigen::VectorXd u = theta;
      u[i] += h;
      q.assign(u);
      double up = loss(q, X, y);
      u[i] -= 2 * h;
      q.assign(u);
      gn[s] = (up - loss(q, X, y)) / (2 * h);
      ga[s] = g[i];
    }
    worst = std::max(worst, (ga - gn).norm() / std::max(1e-12, ga.norm() + gn.norm()));
  }
  if (!(worst < 1e-4)) failed.push_back("gradient check " + std::to_string(worst));

  // mask soundness, exhaustive at height <= 3
  std::size_t sound = 0, unsound = 0;
  for_each_irreducible(3, [&](const IntPolynomial& f) {
    auto label = classify(f).label;
    CandidateMask m = symbolic_mask(f);
    if (m[class_index(label)]) {
      ++sound;
    } else {
      ++unsound;
      if (unsound <= 5) failed.push_back("mask drops " + label + " for " + format_coefficients(f));
    }
  });
  double mask_s = t.seconds();

  // dataset: every non-S6 sextic of height <= 4 plus a sample of S6 ones
  cached_census(4, "h4");
  std::vector<IntPolynomial> polys;
  std::vector<int> labels;
  for (const auto& r : read_records("h4")) {
    polys.push_back(poly_of(r.coeffs));
    labels.push_back(class_index(r.label));
  }
  const std::size_t non_s6 = polys.size();
  std::uniform_int_distribution<long> coef(-4, 4);
  std::mt19937_64 srng(11);
  for (int taken = 0; taken < 2000;) {
    std::vector<long> c(7);
    for (auto& x : c) x = coef(srng);
    if (c[6] == 0) continue;
    IntPolynomial f = poly_of(c);
    if (content(f) != 1 || !is_irreducible(f) || classify(f).label != "S6") continue;
    polys.push_back(f);
    labels.push_back(class_index("S6"));
    ++taken;
  }
  std::vector<Sample> full, coeffs_only;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    FeatureVector v = featurize(polys[i]);
    full.push_back({v.encode(FeatureMode::Full), labels[i]});
    coeffs_only.push_back({v.encode(FeatureMode::CoefficientsOnly), labels[i]});
  }
  TrainConfig cfg;
  cfg.epochs = 30;
  cfg.seed = 1;
  TrainResult model = train(full, cfg);
  TrainResult baseline = train(coeffs_only, cfg);

  std::size_t masked_right = 0, unmasked_right = 0, zero_violations = 0;
  const auto& val = model.metrics.val_indices;
  for (std::size_t i : val) {
    Prediction p = predict(model.params, polys[i]);
    for (int k = 0; k < kClasses; ++k)
      if (!p.mask[k] && p.probabilities[k] != 0.0) ++zero_violations;
    if (class_index(p.label) == labels[i]) ++masked_right;
    Eigen::VectorXd u = forward(model.params, full[i].x);
    Eigen::Index arg;
    u.maxCoeff(&arg);
    if (arg == labels[i]) ++unmasked_right;
  }
  if (zero_violations) failed.push_back(std::to_string(zero_violations) + " masked labels with nonzero probability");
  double masked_acc = static_cast<double>(masked_right) / static_cast<double>(val.size());
  double unmasked_acc = static_cast<double>(unmasked_right) / static_cast<double>(val.size());
  double base_acc = baseline.metrics.val_accuracy.back();
  if (!(masked_acc > base_acc)) failed.push_back("masked accuracy does not exceed the baseline");

  int table3_g1 = 0;
  for (const auto& row : testdata::cyclic_sextics())
    if (predict(model.params, testdata::to_poly(row.coeffs)).label == "g1") ++table3_g1;

  std::string detail = "gradient rel err " + fixed(worst * 1e9, 2) + "e-9; mask sound on " + std::to_string(sound) +
                       " irreducibles of height <= 3 (" + fixed(mask_s) + " s); dataset " + std::to_string(non_s6) +
                       " non-S6 + " + std::to_string(polys.size() - non_s6) + " S6, " + std::to_string(val.size()) +
                       " held out; validation accuracy masked " + fixed(100 * masked_acc, 2) + "%, unmasked " +
                       fixed(100 * unmasked_acc, 2) + "%, coefficients-only " + fixed(100 * base_acc, 2) +
                       "%; cyclic list predicted g1 " + std::to_string(table3_g1) + "/20; " + fixed(t.seconds()) + " s";
  for (const auto& f : failed) detail += "; failed " + f;
  return {failed.empty(), detail};
}

// 8. Full height-6 census.
Outcome height6_census() {
  Stopwatch t;
  CensusSummary s = cached_census(6, "h6");
  auto rows = errata_diff(s);
  std::cout << "  errata diff (height 6):\n";
  std::istringstream diff(errata_json(rows));
  for (std::string line; std::getline(diff, line);) std::cout << "    " << line << "\n";
  std::uint64_t published_sum = 0;
  for (const auto& [label, n] : *published_counts(6))
    if (label != "non_S6_total") published_sum += n;
  std::uint64_t classes = s.moduli_classes();
  Outcome o;
  o.pass = s.non_s6() == 53972 && classes == 25853;
  o.detail = "non-S6 " + std::to_string(s.non_s6()) + " vs 53972 (column sum " + std::to_string(published_sum) +
             "), moduli classes " + std::to_string(classes) + " vs 25853, " + fixed(t.seconds()) + " s";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::map<int, std::pair<std::string, std::function<Outcome()>>> criteria = {
      {1, {"cyclic sextic reproduction", table3_reproduction}},
      {2, {"height-4 census counts", table2_height4}},
      {3, {"invariant partition", invariant_partition}},
      {4, {"signature recomputation", signatures}},
      {5, {"order oracle equivalence at height <= 2", oracle_equivalence}},
      {6, {"property suites", property_suites}},
      {7, {"neuro-symbolic properties", neurosym_properties}},
      {8, {"height-6 census totals", height6_census}},
  };

  data_dir = (fs::temp_directory_path() / "galois6_acceptance").string();
  bool long_run = false;
  if (const char* env = std::getenv("GALOIS6_LONG_TESTS")) long_run = std::string(env) == "1" || std::string(env) == "ON";
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--long") {
      long_run = true;
    } else if (a == "--data-dir" && i + 1 < argc) {
      data_dir = argv[++i];
    } else if (!a.empty() && std::all_of(a.begin(), a.end(), ::isdigit) && criteria.count(std::stoi(a))) {
      selected.push_back(std::stoi(a));
    } else {
      std::cerr << "usage: acceptance [--data-dir DIR] [--long] [criterion ...]\n";
      return 2;
    }
  }
  if (selected.empty())
    for (int i = 1; i <= 8; ++i) selected.push_back(i);
  fs::create_directories(data_dir);

  bool all = true;
  for (int id : selected) {
    if (id == 8 && !long_run) {
      std::cout << "SKIP criterion 8: " << criteria.at(8).first << " (needs --long or GALOIS6_LONG_TESTS=1)\n";
      continue;
    }
    Outcome o;
    try {
      o = criteria.at(id).second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all = all && o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << criteria.at(id).first << " -- "
              << o.detail << std::endl;
  }
  return all ? 0 : 1;
}
