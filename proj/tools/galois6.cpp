// Copyright 2026 The galois6 Authors.
// SPDX-License-Identifier: Apache-2.0

// galois6: Galois groups of integer sextics from the command line.
//
// Exit codes: 0 success, 1 domain error (reducible, degenerate, ...),
// 2 usage or input error, 3 internal or precision failure.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "galois/census.hpp"
#include "galois/classifier.hpp"
#include "galois/ffactor.hpp"
#include "galois/groups.hpp"
#include "galois/invariants.hpp"
#include "galois/neurosym.hpp"
#include "galois/polycore.hpp"
#include "galois/resolvents.hpp"

using namespace galois;
using nlohmann::json;

namespace {

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::DegenerateInput:
    case ErrorKind::RamifiedPrime:
    case ErrorKind::NotIrreducible:
    case ErrorKind::NotSquarefree:
    case ErrorKind::InconsistentEvidence:
      return 1;
    case ErrorKind::Parse:
    case ErrorKind::Configuration:
      return 2;
    case ErrorKind::PrecisionFailure:
    case ErrorKind::ContractViolation:
    case ErrorKind::InternalConsistency:
      return 3;
  }
  return 3;
}

// Plain key=value lines; '#' starts a comment.
std::map<std::string, std::string> read_config(const std::string& path) {
  std::map<std::string, std::string> out;
  if (path.empty()) return out;
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Configuration, "cannot read config file " + path);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      auto b = s.find_first_not_of(" \t\r");
      auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    out[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return out;
}

std::string normalize_minus(std::string s) {
  const std::string minus = "\xE2\x88\x92";  // U+2212
  for (auto pos = s.find(minus); pos != std::string::npos; pos = s.find(minus)) s.replace(pos, minus.size(), "-");
  return s;
}

IntPolynomial read_poly(const std::string& text, bool desc) {
  IntPolynomial f = parse_coefficients(normalize_minus(text));
  if (!desc) return f;
  std::vector<Integer> v(f.coeffs().rbegin(), f.coeffs().rend());
  return IntPolynomial(std::move(v));
}

json gap_json(const GapId& g) { return json::array({g.order, g.index}); }

std::vector<neurosym::Sample> load_dataset(const std::vector<std::string>& files, neurosym::FeatureMode mode,
                                           const PrimeBudget& budget, std::vector<IntPolynomial>* polys) {
  std::vector<neurosym::Sample> data;
  for (const auto& path : files) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::Configuration, "cannot read " + path);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      json j;
      try {
        j = json::parse(line);
      } catch (const json::exception& e) {
        fail(ErrorKind::Parse, "bad record in " + path + ": " + e.what());
      }
      if (j.value("label", json()).is_null()) continue;
      std::vector<Integer> c;
      for (long x : j.at("coeffs").get<std::vector<long>>()) c.emplace_back(x);
      IntPolynomial f(std::move(c));
      data.push_back({neurosym::featurize(f, budget).encode(mode),
                      neurosym::class_index(j.at("label").get<std::string>())});
      if (polys) polys->push_back(f);
    }
  }
  return data;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Galois groups of integer sextics"};
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path, "key=value file with max_prime, stable_stop, max_precision, jobs, chunk_size");

  // shared knobs; the config file fills whatever the command line leaves unset
  std::uint64_t max_prime = 211;
  int stable_stop = 10;
  long max_precision = 1L << 16;
  bool as_json = false, desc = false;
  std::string coeffs;

  auto add_poly = [&](CLI::App* sub) {
    sub->add_option("coeffs", coeffs, "comma-separated coefficients a0,...,an (ascending)")->required();
    sub->add_flag("--desc", desc, "coefficients are given from the leading one down");
    sub->add_flag("--json", as_json, "emit one JSON document");
  };

  auto* classify_cmd = app.add_subcommand("classify", "Galois group of an irreducible sextic");
  add_poly(classify_cmd);
  bool certificate = false;
  auto* primes_opt = classify_cmd->add_option("--primes", max_prime, "largest prime sampled");
  classify_cmd->add_flag("--certificate", certificate, "print the full certificate");

  auto* factor_cmd = app.add_subcommand("factor", "factorization over Z, or mod p");
  add_poly(factor_cmd);
  std::uint64_t mod_p = 0;
  factor_cmd->add_option("--mod", mod_p, "factor modulo this prime instead");

  auto* inv_cmd = app.add_subcommand("invariants", "Igusa-Clebsch and absolute invariants of a binary sextic");
  add_poly(inv_cmd);

  auto* res_cmd = app.add_subcommand("resolvent", "resolvent polynomial of a monic sextic");
  add_poly(res_cmd);
  std::string invariant = "pairing", group_label = "S6";
  res_cmd->add_option("--invariant", invariant, "pairing, triple, or a polynomial in x1..x6");
  res_cmd->add_option("--group", group_label, "ambient group label");

  auto* census_cmd = app.add_subcommand("census", "bounded-height census");
  CensusConfig ccfg;
  std::string records = "nonS6";
  std::string label_only;
  census_cmd->add_option("--height", ccfg.height, "height bound H")->required();
  census_cmd->add_option("--out", ccfg.out_dir, "output directory for records and checkpoints");
  census_cmd->add_flag("--resume", ccfg.resume, "continue from the checkpoint in --out");
  auto* jobs_opt = census_cmd->add_option("--jobs", ccfg.jobs, "worker threads");
  auto* chunk_opt = census_cmd->add_option("--chunk-size", ccfg.chunk_size, "raw indices per chunk");
  census_cmd->add_flag("--monic-only", ccfg.monic_only, "only points with a6 = +-1");
  census_cmd->add_option("--label", label_only, "count only this group label");
  census_cmd->add_option("--records", records, "none, labeled, nonS6 or all");
  census_cmd->add_flag("--all-invariants", ccfg.invariants_for_s6, "absolute invariants for S6 records too");
  census_cmd->add_flag("--json", as_json, "emit the summary and the comparison as JSON");
  census_cmd->add_flag("--progress", [](std::int64_t) {}, "report chunk progress on stderr");

  auto* train_cmd = app.add_subcommand("train", "train the network on census records");
  std::vector<std::string> data_files;
  neurosym::TrainConfig tcfg;
  std::string params_out = "params.bin", metrics_out;
  bool coefficients_only = false;
  train_cmd->add_option("--data", data_files, "JSON Lines census records")->required();
  train_cmd->add_option("--seed", tcfg.seed, "random seed");
  train_cmd->add_option("--epochs", tcfg.epochs, "epochs");
  train_cmd->add_option("--batch", tcfg.batch_size, "batch size");
  train_cmd->add_option("--lr", tcfg.learning_rate, "Adam step size");
  train_cmd->add_option("--split", tcfg.validation_split, "validation fraction");
  train_cmd->add_option("--out", params_out, "parameter file to write");
  train_cmd->add_option("--metrics", metrics_out, "JSON file for per-epoch losses");
  train_cmd->add_flag("--coefficients-only", coefficients_only, "use the 7 normalized coefficients alone");

  auto* eval_cmd = app.add_subcommand("eval", "accuracy of a parameter file, with and without masking");
  std::string params_in;
  eval_cmd->add_option("--params", params_in, "parameter file")->required();
  eval_cmd->add_option("--data", data_files, "JSON Lines census records")->required();
  eval_cmd->add_flag("--json", as_json, "emit one JSON document");

  auto* groups_cmd = app.add_subcommand("groups", "the transitive subgroups of S6");
  std::string export_path;
  groups_cmd->add_option("--export", export_path, "write the group table as JSON to this file");
  groups_cmd->add_flag("--json", as_json, "emit one JSON document");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    auto cfg = read_config(config_path);
    auto num = [&](const char* key, auto& target, CLI::Option* opt) {
      auto it = cfg.find(key);
      if (it == cfg.end() || (opt && opt->count() > 0)) return;
      try {
        target = static_cast<std::decay_t<decltype(target)>>(std::stoll(it->second));
      } catch (const std::exception&) {
        fail(ErrorKind::Configuration, std::string("bad value for ") + key);
      }
    };
    num("max_prime", max_prime, primes_opt);
    num("stable_stop", stable_stop, nullptr);
    num("max_precision", max_precision, nullptr);
    num("jobs", ccfg.jobs, jobs_opt);
    num("chunk_size", ccfg.chunk_size, chunk_opt);
    PrimeBudget budget{max_prime, stable_stop};
    ClassifyOptions copt{budget, max_precision};

    if (*classify_cmd) {
      IntPolynomial f = read_poly(coeffs, desc);
      if (f.size() != 7) fail(ErrorKind::DegenerateInput, "classification needs exactly 7 coefficients");
      Classification c = classify(f, copt);
      const auto& g = group_by_label(c.label);
      if (as_json) {
        json j{{"label", c.label}, {"gap_id", gap_json(g.gap_id)}, {"name", g.name}, {"order", g.order}};
        if (certificate) j["certificate"] = json::parse(c.certificate.to_json());
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << c.label << " [" << g.gap_id.order << "," << g.gap_id.index << "] " << g.name << "\n";
        if (certificate) std::cout << c.certificate.to_json(2) << "\n";
      }
    } else if (*factor_cmd) {
      IntPolynomial f = read_poly(coeffs, desc);
      if (mod_p) {
        ModPFactorization fac = factor_mod_p(f, mod_p);
        json arr = json::array();
        modp::Field k(mod_p);
        for (const auto& fa : fac.factors)
          arr.push_back({{"factor", format_coefficients(modp::lift(fa.poly, k))}, {"multiplicity", fa.multiplicity}});
        if (as_json) {
          std::cout << json{{"p", mod_p}, {"leading", fac.leading}, {"factors", arr}}.dump(2) << "\n";
        } else {
          std::cout << "leading " << fac.leading << " mod " << mod_p << "\n";
          for (const auto& fa : fac.factors)
            std::cout << to_string(modp::lift(fa.poly, k)) << "  ^" << fa.multiplicity << "\n";
        }
      } else {
        IntFactorization fac = factor_over_z(f);
        if (as_json) {
          json arr = json::array();
          for (const auto& [g, m] : fac.factors)
            arr.push_back({{"factor", format_coefficients(g)}, {"multiplicity", m}});
          std::cout << json{{"content", fac.content.get_str()}, {"factors", arr}}.dump(2) << "\n";
        } else {
          std::cout << "content " << fac.content.get_str() << "\n";
          for (const auto& [g, m] : fac.factors) std::cout << to_string(g) << "  ^" << m << "\n";
        }
      }
    } else if (*inv_cmd) {
      IntPolynomial f = read_poly(coeffs, desc);
      if (f.size() > 7) fail(ErrorKind::DegenerateInput, "a binary sextic has at most 7 coefficients");
      std::vector<Integer> a(f.coeffs().begin(), f.coeffs().end());
      a.resize(7, Integer(0));
      IgusaTuple J = igusa(BinaryForm(a));
      json j{{"J2", rational_string(J.J2)}, {"J4", rational_string(J.J4)}, {"J6", rational_string(J.J6)},
             {"J10", rational_string(J.J10)}};
      if (J.J10 != 0) {
        AbsoluteTriple t = absolute(J);
        j["t1"] = rational_string(t.t1);
        j["t2"] = rational_string(t.t2);
        j["t3"] = rational_string(t.t3);
      }
      if (as_json) {
        std::cout << j.dump(2) << "\n";
      } else {
        for (const char* k : {"J2", "J4", "J6", "J10", "t1", "t2", "t3"})
          if (j.contains(k)) std::cout << k << " " << j[k].get<std::string>() << "\n";
        if (J.J10 == 0) std::cout << "not squarefree: no absolute invariants\n";
      }
    } else if (*res_cmd) {
      IntPolynomial f = read_poly(coeffs, desc);
      InvariantPoly F = invariant == "pairing" ? pairing_invariant()
                        : invariant == "triple" ? triple_invariant()
                                                : InvariantPoly::parse(invariant);
      ResolventOptions ropt;
      ropt.max_precision = max_precision;
      ResolventResult r = resolvent(F, group_by_label(group_label), f, ropt);
      if (as_json) {
        std::cout << json{{"invariant", F.to_string()},
                          {"index", r.index},
                          {"resolvent", format_coefficients(r.resolvent)},
                          {"squarefree", r.squarefree},
                          {"factor_degrees", r.factor_degrees},
                          {"precision", r.precision}}
                         .dump(2)
                  << "\n";
      } else {
        std::cout << to_string(r.resolvent) << "\nindex " << r.index << (r.squarefree ? "" : " (not squarefree)")
                  << "\nfactor degrees";
        for (int d : r.factor_degrees) std::cout << " " << d;
        std::cout << "\n";
      }
    } else if (*census_cmd) {
      ccfg.classify = copt;
      if (!label_only.empty()) {
        if (!group_index(label_only)) fail(ErrorKind::Configuration, "unknown label " + label_only);
        ccfg.restrict_label = label_only;
      }
      static const std::map<std::string, RecordFilter> filters{{"none", RecordFilter::None},
                                                               {"labeled", RecordFilter::Labeled},
                                                               {"nonS6", RecordFilter::NonS6},
                                                               {"all", RecordFilter::All}};
      auto it = filters.find(records);
      if (it == filters.end()) fail(ErrorKind::Configuration, "unknown record filter " + records);
      ccfg.records = it->second;
      bool progress = census_cmd->count("--progress") > 0;
      CensusRun run = run_census(ccfg, [&](std::uint64_t done, std::uint64_t total) {
        if (progress) std::cerr << "chunks " << done << "/" << total << "\n";
      });
      auto diff = errata_diff(run.summary);
      if (as_json) {
        json j{{"summary", json::parse(run.summary.to_json())}, {"comparison", json::parse(errata_json(diff))}};
        j["summary"].erase("triples");
        j["summary"]["moduli_classes"] = run.summary.moduli_classes();
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << run.summary.to_csv();
        if (!ccfg.restrict_label)
          for (const auto& r : diff)
            if (r.published && !r.match())
              std::cerr << "differs from published count: " << r.label << " " << r.computed << " vs "
                        << *r.published << "\n";
      }
    } else if (*train_cmd) {
      auto mode = coefficients_only ? neurosym::FeatureMode::CoefficientsOnly : neurosym::FeatureMode::Full;
      auto data = load_dataset(data_files, mode, budget, nullptr);
      neurosym::TrainResult r = neurosym::train(data, tcfg);
      r.params.save(params_out);
      if (!metrics_out.empty()) {
        std::ofstream m(metrics_out);
        if (!m) fail(ErrorKind::Configuration, "cannot write " + metrics_out);
        m << r.metrics.to_json() << "\n";
      }
      std::cerr << "trained " << data.size() << " samples, final validation accuracy "
                << r.metrics.val_accuracy.back() << "\n";
    } else if (*eval_cmd) {
      neurosym::MlpParams params = neurosym::MlpParams::load(params_in);
      auto mode = params.input_dim == neurosym::feature_dim(neurosym::FeatureMode::Full)
                      ? neurosym::FeatureMode::Full
                      : neurosym::FeatureMode::CoefficientsOnly;
      std::vector<IntPolynomial> polys;
      auto data = load_dataset(data_files, mode, budget, &polys);
      std::size_t raw = 0, masked = 0;
      neurosym::MaskBudget mb{budget, true, true};
      for (std::size_t i = 0; i < data.size(); ++i) {
        Eigen::VectorXd p = neurosym::forward(params, data[i].x);
        Eigen::Index arg;
        p.maxCoeff(&arg);
        raw += arg == data[i].label;
        auto pred = neurosym::apply_mask(p, neurosym::symbolic_mask(polys[i], mb));
        masked += neurosym::class_index(pred.label) == data[i].label;
      }
      double n = data.empty() ? 1.0 : static_cast<double>(data.size());
      if (as_json)
        std::cout << json{{"samples", data.size()}, {"accuracy", raw / n}, {"masked_accuracy", masked / n}}.dump(2)
                  << "\n";
      else
        std::cout << "samples " << data.size() << "\naccuracy " << raw / n << "\nmasked_accuracy " << masked / n
                  << "\n";
    } else if (*groups_cmd) {
      std::string table = groups_json();
      if (!export_path.empty()) {
        std::ofstream out(export_path);
        if (!out) fail(ErrorKind::Configuration, "cannot write " + export_path);
        out << table << "\n";
      }
      if (as_json) {
        std::cout << json::parse(table).dump(2) << "\n";
      } else {
        for (const auto& g : transitive_groups()) {
          std::cout << g.label << "\t[" << g.gap_id.order << "," << g.gap_id.index << "]\t" << g.name << "\t"
                    << g.order << "\t[";
          for (int i = 0; i < kSignatureClasses; ++i) std::cout << (i ? "," : "") << g.signature[i];
          std::cout << "]" << (g.in_A6 ? "\teven" : "") << "\n";
        }
      }
    }
  } catch (const Error& e) {
    std::cerr << "error: " << (e.kind() == ErrorKind::NotIrreducible ? "reducible: " : "") << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
