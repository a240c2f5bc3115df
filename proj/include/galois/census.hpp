// Copyright 2026 The galois6 Authors.
// SPDX-License-Identifier: Apache-2.0

// Bounded-height enumeration of primitive sextic forms and aggregation of
// Galois group counts.

#ifndef GALOIS_CENSUS_HPP
#define GALOIS_CENSUS_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "galois/classifier.hpp"
#include "galois/invariants.hpp"

namespace galois {

/// a0..a6, the coefficient of x^i y^(6-i).
using Coeffs = std::array<long, 7>;

/// Number of primitive integer k-tuples with max |a_i| <= H, counted up to
/// sign, by Moebius inversion over the common divisor.
Integer mobius_point_count(int height, int k = 7);

/// Streams every primitive k-tuple (gcd 1, first nonzero entry positive)
/// with max |a_i| <= H. Tuples are visited in lexicographic order of their
/// raw index, the base-(2H+1) number with digits a_0 + H, ..., a_(k-1) + H
/// (a_0 most significant). Only raw indices in [begin, end) are visited.
void enumerate_points(int height, int k,
                      const std::function<void(std::uint64_t index, const std::vector<long>&)>& visit,
                      std::uint64_t begin = 0, std::uint64_t end = UINT64_MAX);

/// (2H+1)^k.
std::uint64_t raw_index_count(int height, int k = 7);

struct CensusRecord {
  std::uint64_t index = 0;
  Coeffs coeffs{};
  long height = 0;
  bool irreducible = false;
  std::string label;  // empty when reducible
  GapId gap_id;
  Integer disc;
  int real_roots = 0;
  std::optional<IgusaTuple> igusa;
  std::optional<AbsoluteTriple> triple;
  std::string certificate;  // "H<h>:<index>", enough to regenerate it

  IntPolynomial polynomial() const;
  std::string to_jsonl() const;
};

enum class RecordFilter { None, Labeled, NonS6, All };

struct CensusConfig {
  int height = 1;
  std::uint64_t chunk_size = 100000;
  int jobs = 1;
  bool monic_only = false;             // keep only points with a6 = +-1
  /// Classify only points whose mod-p patterns fit this group; counts and
  /// records then cover this label alone.
  std::optional<std::string> restrict_label;
  bool invariants_for_s6 = false;      // absolute invariants are otherwise computed for non-S6 labels only
  RecordFilter records = RecordFilter::NonS6;
  std::string out_dir;                 // empty: nothing is written
  bool resume = false;
  bool collect_records = false;        // keep records in memory
  int max_retries = 2;
  std::uint64_t spot_check_every = 100;  // soundness-check every k-th labeled record, 0 disables
  ClassifyOptions classify;
};

struct CensusSummary {
  int height = 0;
  bool monic_only = false;
  std::optional<std::string> restrict_label;
  std::uint64_t enumerated = 0;
  std::uint64_t leading_zero = 0;  // a6 = 0: counted as reducible
  std::uint64_t reducible = 0;     // a6 != 0 and reducible over Q
  std::uint64_t irreducible = 0;
  std::uint64_t skipped = 0;       // rejected by the restriction prefilter
  std::uint64_t spot_checked = 0;
  std::map<std::string, std::uint64_t> counts;
  std::map<std::string, std::set<AbsoluteTriple>> triples;

  /// Irreducible count with group different from S6.
  std::uint64_t non_s6() const;
  std::size_t moduli_classes() const;
  std::size_t moduli_classes(const std::string& label) const;

  void merge(const CensusSummary& other);
  std::string to_csv() const;
  std::string to_json() const;
  static CensusSummary from_json(const std::string& text);
};

struct CensusRun {
  CensusSummary summary;
  std::vector<CensusRecord> records;  // filled when collect_records is set
};

/// Enumerates, filters, classifies and tallies. With out_dir set, each chunk
/// writes records/chunk_NNNNNN.jsonl and chunks/chunk_NNNNNN.json, and
/// checkpoint.txt lists the completed chunks; summary.csv is written once
/// every chunk is done. A failing chunk is retried max_retries times.
CensusRun run_census(const CensusConfig& config,
                     const std::function<void(std::uint64_t done, std::uint64_t total)>& progress = {});

/// Published per-label counts E6(H) for H = 4 and H = 6, nullopt otherwise.
std::optional<std::map<std::string, std::uint64_t>> published_counts(int height);

struct ErrataRow {
  std::string label;  // a group label or "non_S6_total"
  std::optional<std::uint64_t> published;
  std::uint64_t computed = 0;
  bool match() const { return published && *published == computed; }
};

/// Row per label plus the non-S6 total, comparing against published_counts.
std::vector<ErrataRow> errata_diff(const CensusSummary& summary);
std::string errata_json(const std::vector<ErrataRow>& rows);

struct DensityRow {
  std::string label;
  int order = 0;
  Rational delta;             // |G| / 720 = 1 / [S6 : G]
  double reference_exponent;  // 5 + delta
  std::vector<std::pair<int, std::uint64_t>> counts;  // (height, count)
  std::optional<double> slope;  // least-squares slope of log count against log H
};

/// Needs summaries at two or more distinct heights (Configuration error otherwise).
std::vector<DensityRow> density_report(const std::vector<CensusSummary>& summaries);
std::string density_csv(const std::vector<DensityRow>& rows);

}  // namespace galois

#endif  // GALOIS_CENSUS_HPP
