// Copyright 2026 The galois6 Authors.
// SPDX-License-Identifier: Apache-2.0

#include "galois/census.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "galois/ffactor.hpp"
#include "galois/modp.hpp"
#include "galois/polycore.hpp"

namespace galois {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

int moebius(int n) {
  int m = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    m = -m;
  }
  return n > 1 ? -m : m;
}

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

// ---- restriction prefilter -------------------------------------------------

const std::vector<Partition>& partitions6() {
  static const std::vector<Partition> all = [] {
    std::vector<Partition> out;
    std::function<void(int, int, Partition&)> rec = [&](int left, int max, Partition& cur) {
      if (left == 0) {
        out.push_back(cur);
        return;
      }
      for (int k = std::min(left, max); k >= 1; --k) {
        cur.push_back(k);
        rec(left - k, k, cur);
        cur.pop_back();
      }
    };
    Partition cur;
    rec(6, 6, cur);
    return out;
  }();
  return all;
}

int partition_code(const Partition& p) {
  const auto& all = partitions6();
  auto it = std::find(all.begin(), all.end(), p);
  if (it == all.end()) fail(ErrorKind::InternalConsistency, "unexpected factor degree pattern");
  return static_cast<int>(it - all.begin());
}

constexpr std::uint8_t kRamified = 0xFF;

// Pattern code of a monic sextic mod p, or kRamified when it is not squarefree.
std::uint8_t pattern_code_mod_p(const modp::Poly& monic, const modp::Field& k) {
  modp::Poly g = modp::gcd(monic, modp::derivative(monic, k), k);
  if (modp::degree(g) > 0) return kRamified;
  return static_cast<std::uint8_t>(partition_code(modp::ddf_pattern(monic, k)));
}

// Codes for every monic sextic over F_p, indexed by sum c_i p^i over c_0..c_5.
struct PatternTable {
  std::uint32_t p;
  std::vector<std::uint8_t> code;
  explicit PatternTable(std::uint32_t prime) : p(prime) {
    modp::Field k(p);
    const std::uint64_t n = ipow(p, 6);
    code.resize(n);
    modp::Poly f(7, 0);
    f[6] = 1;
    for (std::uint64_t idx = 0; idx < n; ++idx) {
      std::uint64_t r = idx;
      for (int i = 0; i < 6; ++i) {
        f[i] = r % p;
        r /= p;
      }
      code[idx] = pattern_code_mod_p(f, k);
    }
  }
};

class Prefilter {
 public:
  explicit Prefilter(const TransitiveGroup& g) {
    for (const auto& e : g.elements) allowed_ |= 1u << partition_code(e.cycle_type());
    for (std::uint32_t p : {3u, 5u, 7u}) tables_.emplace_back(p);
    for (std::uint32_t p : modp::primes_up_to(97))
      if (p > 7) extra_.push_back(p);
  }

  // False when some unramified prime has a factor pattern outside the group.
  bool admits(const Coeffs& a) const {
    for (const auto& t : tables_) {
      std::uint8_t c = lookup(t, a);
      if (c != kRamified && !(allowed_ >> c & 1u)) return false;
    }
    for (std::uint32_t p : extra_) {
      modp::Field k(p);
      modp::Poly f(7);
      for (int i = 0; i < 7; ++i) f[i] = reduce(a[i], p);
      if (f[6] == 0) continue;
      f = modp::monic(f, k);
      std::uint8_t c = pattern_code_mod_p(f, k);
      if (c != kRamified && !(allowed_ >> c & 1u)) return false;
    }
    return true;
  }

 private:
  static std::uint64_t reduce(long v, std::uint32_t p) {
    long r = v % static_cast<long>(p);
    return static_cast<std::uint64_t>(r < 0 ? r + p : r);
  }

  std::uint8_t lookup(const PatternTable& t, const Coeffs& a) const {
    const std::uint32_t p = t.p;
    std::uint64_t lead = reduce(a[6], p);
    if (lead == 0) return kRamified;
    std::uint64_t inv = 1;
    for (std::uint64_t x = 1; x < p; ++x)
      if (x * lead % p == 1) inv = x;
    std::uint64_t idx = 0;
    for (int i = 5; i >= 0; --i) idx = idx * p + reduce(a[i], p) * inv % p;
    return t.code[idx];
  }

  std::uint32_t allowed_ = 0;
  std::vector<PatternTable> tables_;
  std::vector<std::uint32_t> extra_;
};

// ---- per-record work -------------------------------------------------------

void spot_check(const Classification& c) {
  const auto& g = group_by_label(c.label);
  std::set<CycleType> types;
  for (const auto& e : g.elements) types.insert(e.cycle_type());
  const auto& cert = c.certificate;
  bool ok = g.in_A6 == cert.disc_square && types.count(cert.conj_type) == 1;
  for (const auto& p : cert.patterns) ok = ok && types.count(p) == 1;
  if (!ok) fail(ErrorKind::InternalConsistency, "census spot check failed for " + to_string(cert.input));
}

bool wanted(RecordFilter filter, const CensusRecord& r) {
  switch (filter) {
    case RecordFilter::None: return false;
    case RecordFilter::Labeled: return r.irreducible;
    case RecordFilter::NonS6: return r.irreducible && r.label != "S6";
    case RecordFilter::All: return true;
  }
  return false;
}

struct ChunkResult {
  CensusSummary summary;
  std::vector<CensusRecord> records;
};

ChunkResult process_chunk(const CensusConfig& cfg, const Prefilter* prefilter, std::uint64_t begin,
                          std::uint64_t end) {
  ChunkResult out;
  out.summary.height = cfg.height;
  out.summary.monic_only = cfg.monic_only;
  out.summary.restrict_label = cfg.restrict_label;
  auto& s = out.summary;
  const bool keep = cfg.collect_records || !cfg.out_dir.empty();

  enumerate_points(cfg.height, 7, [&](std::uint64_t index, const std::vector<long>& v) {
    Coeffs a;
    std::copy(v.begin(), v.end(), a.begin());
    if (cfg.monic_only && a[6] != 1 && a[6] != -1) return;
    ++s.enumerated;
    CensusRecord r;
    r.index = index;
    r.coeffs = a;
    r.height = 0;
    for (long x : a) r.height = std::max(r.height, std::labs(x));
    r.certificate = "H" + std::to_string(cfg.height) + ":" + std::to_string(index);

    if (a[6] == 0) {
      ++s.leading_zero;
      if (keep && wanted(cfg.records, r)) out.records.push_back(std::move(r));
      return;
    }
    if (prefilter && !prefilter->admits(a)) {
      ++s.skipped;
      return;
    }
    IntPolynomial f = r.polynomial();
    if (!is_irreducible(f)) {
      ++s.reducible;
      if (keep && wanted(cfg.records, r)) out.records.push_back(std::move(r));
      return;
    }
    ++s.irreducible;
    Classification c = classify(f, cfg.classify);
    if (cfg.spot_check_every && index % cfg.spot_check_every == 0) {
      spot_check(c);
      ++s.spot_checked;
    }
    if (cfg.restrict_label && c.label != *cfg.restrict_label) return;
    r.irreducible = true;
    r.label = c.label;
    r.gap_id = group_by_label(c.label).gap_id;
    r.disc = discriminant(f);
    r.real_roots = c.certificate.real_roots;
    ++s.counts[r.label];
    if (r.label != "S6" || cfg.invariants_for_s6) {
      r.igusa = igusa(BinaryForm(std::vector<Integer>(a.begin(), a.end())));
      r.triple = absolute(*r.igusa);
      s.triples[r.label].insert(*r.triple);
    }
    if (keep && wanted(cfg.records, r)) out.records.push_back(std::move(r));
  }, begin, end);
  return out;
}

// ---- persistence -----------------------------------------------------------

std::string chunk_name(std::uint64_t k) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "chunk_%06llu", static_cast<unsigned long long>(k));
  return buf;
}

void write_atomically(const fs::path& path, const std::string& text) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) fail(ErrorKind::Configuration, "cannot write " + tmp.string());
    out << text;
    out.flush();
    if (!out) fail(ErrorKind::Configuration, "write failed for " + tmp.string());
  }
  fs::rename(tmp, path);
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::Configuration, "cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Checkpoint {
  int height = 0;
  std::uint64_t chunk_size = 0;
  bool monic_only = false;
  std::string restrict_label;
  std::set<std::uint64_t> completed;

  std::string text() const {
    std::ostringstream o;
    o << "height=" << height << "\nchunk_size=" << chunk_size << "\nmonic_only=" << (monic_only ? 1 : 0)
      << "\nrestrict_label=" << restrict_label << "\ncompleted_chunks=";
    bool first = true;
    for (auto k : completed) {
      o << (first ? "" : ",") << k;
      first = false;
    }
    o << "\n";
    return o.str();
  }

  static Checkpoint parse(const std::string& text) {
    Checkpoint c;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
      auto eq = line.find('=');
      if (eq == std::string::npos) continue;
      std::string key = line.substr(0, eq), val = line.substr(eq + 1);
      if (key == "height") c.height = std::stoi(val);
      else if (key == "chunk_size") c.chunk_size = std::stoull(val);
      else if (key == "monic_only") c.monic_only = val == "1";
      else if (key == "restrict_label") c.restrict_label = val;
      else if (key == "completed_chunks") {
        std::istringstream items(val);
        std::string item;
        while (std::getline(items, item, ','))
          if (!item.empty()) c.completed.insert(std::stoull(item));
      }
    }
    return c;
  }
};

json triple_json(const AbsoluteTriple& t) {
  return json::array({rational_string(t.t1), rational_string(t.t2), rational_string(t.t3)});
}

Rational parse_rational(const std::string& s) {
  Rational q(s);
  q.canonicalize();
  return q;
}

}  // namespace

// ---- enumeration -----------------------------------------------------------

Integer mobius_point_count(int height, int k) {
  require(height >= 1 && k >= 1, "mobius_point_count: bad arguments");
  Integer total = 0;
  for (int d = 1; d <= height; ++d) {
    int mu = moebius(d);
    if (mu == 0) continue;
    Integer side = 2 * (height / d) + 1, all;
    mpz_pow_ui(all.get_mpz_t(), side.get_mpz_t(), static_cast<unsigned long>(k));
    total += mu * (all - 1) / 2;
  }
  return total;
}

std::uint64_t raw_index_count(int height, int k) { return ipow(static_cast<std::uint64_t>(2 * height + 1), k); }

void enumerate_points(int height, int k,
                      const std::function<void(std::uint64_t, const std::vector<long>&)>& visit,
                      std::uint64_t begin, std::uint64_t end) {
  require(height >= 1 && k >= 1, "enumerate_points: bad arguments");
  const std::uint64_t total = raw_index_count(height, k);
  end = std::min(end, total);
  if (begin >= end) return;
  const long base = 2L * height + 1;
  std::vector<long> a(static_cast<std::size_t>(k));
  std::uint64_t r = begin;
  for (int i = k - 1; i >= 0; --i) {
    a[i] = static_cast<long>(r % base) - height;
    r /= base;
  }
  for (std::uint64_t index = begin; index < end; ++index) {
    int first = 0;
    while (first < k && a[first] == 0) ++first;
    if (first < k && a[first] > 0) {
      long g = 0;
      for (int i = first; i < k && g != 1; ++i) g = std::gcd(g, a[i]);
      if (g == 1) visit(index, a);
    }
    for (int i = k - 1; i >= 0; --i) {  // increment the mixed-radix counter
      if (a[i] < height) {
        ++a[i];
        break;
      }
      a[i] = -height;
    }
  }
}

// ---- records and summaries -------------------------------------------------

IntPolynomial CensusRecord::polynomial() const {
  return IntPolynomial(std::vector<Integer>(coeffs.begin(), coeffs.end()));
}

std::string CensusRecord::to_jsonl() const {
  json j;
  j["index"] = index;
  j["coeffs"] = coeffs;
  j["height"] = height;
  j["irreducible"] = irreducible;
  if (irreducible) {
    j["label"] = label;
    j["gap_id"] = {gap_id.order, gap_id.index};
    j["disc"] = disc.get_str();
    j["real_roots"] = real_roots;
  } else {
    j["label"] = nullptr;
    j["gap_id"] = nullptr;
    j["disc"] = nullptr;
    j["real_roots"] = nullptr;
  }
  if (igusa)
    j["igusa"] = {rational_string(igusa->J2), rational_string(igusa->J4), rational_string(igusa->J6),
                  rational_string(igusa->J10)};
  else
    j["igusa"] = nullptr;
  j["invariants"] = triple ? triple_json(*triple) : json(nullptr);
  j["certificate"] = certificate;
  return j.dump();
}

std::uint64_t CensusSummary::non_s6() const {
  std::uint64_t n = 0;
  for (const auto& [label, c] : counts)
    if (label != "S6") n += c;
  return n;
}

std::size_t CensusSummary::moduli_classes() const {
  std::set<AbsoluteTriple> all;
  for (const auto& [label, set] : triples) all.insert(set.begin(), set.end());
  return all.size();
}

std::size_t CensusSummary::moduli_classes(const std::string& label) const {
  auto it = triples.find(label);
  return it == triples.end() ? 0 : it->second.size();
}

void CensusSummary::merge(const CensusSummary& o) {
  enumerated += o.enumerated;
  leading_zero += o.leading_zero;
  reducible += o.reducible;
  irreducible += o.irreducible;
  skipped += o.skipped;
  spot_checked += o.spot_checked;
  for (const auto& [label, c] : o.counts) counts[label] += c;
  for (const auto& [label, set] : o.triples) triples[label].insert(set.begin(), set.end());
}

std::string CensusSummary::to_csv() const {
  std::ostringstream o;
  o << "label,gap_id,order,count,moduli_classes\n";
  bool any_s6_triples = triples.count("S6") > 0;
  for (const auto& g : transitive_groups()) {
    if (restrict_label && g.label != *restrict_label) continue;
    auto it = counts.find(g.label);
    o << g.label << ",\"[" << g.gap_id.order << "," << g.gap_id.index << "]\"," << g.order << ","
      << (it == counts.end() ? 0 : it->second) << ",";
    if (g.label != "S6" || any_s6_triples) o << moduli_classes(g.label);
    o << "\n";
  }
  if (!restrict_label) {
    std::set<AbsoluteTriple> non;
    for (const auto& [label, set] : triples)
      if (label != "S6") non.insert(set.begin(), set.end());
    o << "non_S6_total,,," << non_s6() << "," << non.size() << "\n";
    o << "irreducible_total,,," << irreducible << ",";
    if (any_s6_triples) o << moduli_classes();
    o << "\n";
  }
  return o.str();
}

std::string CensusSummary::to_json() const {
  json j;
  j["height"] = height;
  j["monic_only"] = monic_only;
  j["restrict_label"] = restrict_label ? json(*restrict_label) : json(nullptr);
  j["enumerated"] = enumerated;
  j["leading_zero"] = leading_zero;
  j["reducible"] = reducible;
  j["irreducible"] = irreducible;
  j["skipped"] = skipped;
  j["spot_checked"] = spot_checked;
  j["counts"] = counts;
  json t = json::object();
  for (const auto& [label, set] : triples) {
    json arr = json::array();
    for (const auto& x : set) arr.push_back(triple_json(x));
    t[label] = arr;
  }
  j["triples"] = t;
  return j.dump();
}

CensusSummary CensusSummary::from_json(const std::string& text) {
  json j = json::parse(text);
  CensusSummary s;
  s.height = j.at("height");
  s.monic_only = j.at("monic_only");
  if (!j.at("restrict_label").is_null()) s.restrict_label = j.at("restrict_label").get<std::string>();
  s.enumerated = j.at("enumerated");
  s.leading_zero = j.at("leading_zero");
  s.reducible = j.at("reducible");
  s.irreducible = j.at("irreducible");
  s.skipped = j.at("skipped");
  s.spot_checked = j.at("spot_checked");
  s.counts = j.at("counts").get<std::map<std::string, std::uint64_t>>();
  for (const auto& [label, arr] : j.at("triples").items())
    for (const auto& x : arr)
      s.triples[label].insert(
          {parse_rational(x.at(0)), parse_rational(x.at(1)), parse_rational(x.at(2))});
  return s;
}

// ---- driver ----------------------------------------------------------------

CensusRun run_census(const CensusConfig& cfg,
                     const std::function<void(std::uint64_t, std::uint64_t)>& progress) {
  if (cfg.height < 1) fail(ErrorKind::Configuration, "census height must be at least 1");
  if (cfg.chunk_size == 0) fail(ErrorKind::Configuration, "chunk size must be positive");
  if (cfg.jobs < 1) fail(ErrorKind::Configuration, "jobs must be at least 1");

  std::unique_ptr<Prefilter> prefilter;
  if (cfg.restrict_label) prefilter = std::make_unique<Prefilter>(group_by_label(*cfg.restrict_label));

  const std::uint64_t total = raw_index_count(cfg.height, 7);
  const std::uint64_t nchunks = (total + cfg.chunk_size - 1) / cfg.chunk_size;

  Checkpoint ckpt{cfg.height, cfg.chunk_size, cfg.monic_only, cfg.restrict_label.value_or(""), {}};
  const bool persist = !cfg.out_dir.empty();
  fs::path root(cfg.out_dir);
  if (persist) {
    fs::create_directories(root / "records");
    fs::create_directories(root / "chunks");
    if (fs::exists(root / "checkpoint.txt")) {
      if (!cfg.resume)
        fail(ErrorKind::Configuration, "output directory already holds a census; resume or pick another");
      Checkpoint old = Checkpoint::parse(read_file(root / "checkpoint.txt"));
      if (old.height != ckpt.height || old.chunk_size != ckpt.chunk_size ||
          old.monic_only != ckpt.monic_only || old.restrict_label != ckpt.restrict_label)
        fail(ErrorKind::Configuration, "checkpoint was written with a different configuration");
      ckpt.completed = old.completed;
    }
    write_atomically(root / "checkpoint.txt", ckpt.text());
  }

  std::vector<std::optional<CensusSummary>> partial(nchunks);
  std::vector<std::vector<CensusRecord>> kept(nchunks);
  for (auto k : ckpt.completed)
    if (k < nchunks) partial[k] = CensusSummary::from_json(read_file(root / "chunks" / (chunk_name(k) + ".json")));

  std::vector<std::uint64_t> todo;
  for (std::uint64_t k = 0; k < nchunks; ++k)
    if (!partial[k]) todo.push_back(k);

  std::atomic<std::size_t> next{0};
  std::atomic<bool> abort{false};
  std::mutex mu;
  std::exception_ptr failure;
  std::uint64_t done = nchunks - todo.size();

  auto worker = [&] {
    for (;;) {
      if (abort) return;
      std::size_t t = next++;
      if (t >= todo.size()) return;
      const std::uint64_t k = todo[t];
      const std::uint64_t begin = k * cfg.chunk_size, end = std::min(total, begin + cfg.chunk_size);
      ChunkResult res;
      for (int attempt = 0;; ++attempt) {
        try {
          res = process_chunk(cfg, prefilter.get(), begin, end);
          break;
        } catch (...) {
          if (attempt >= cfg.max_retries) {
            std::lock_guard<std::mutex> lock(mu);
            if (!failure) failure = std::current_exception();
            abort = true;
            return;
          }
        }
      }
      if (persist) {
        std::string lines;
        for (const auto& r : res.records) lines += r.to_jsonl() + "\n";
        write_atomically(root / "records" / (chunk_name(k) + ".jsonl"), lines);
        write_atomically(root / "chunks" / (chunk_name(k) + ".json"), res.summary.to_json());
      }
      std::lock_guard<std::mutex> lock(mu);
      partial[k] = std::move(res.summary);
      if (cfg.collect_records) kept[k] = std::move(res.records);
      if (persist) {
        ckpt.completed.insert(k);
        write_atomically(root / "checkpoint.txt", ckpt.text());
      }
      ++done;
      if (progress) progress(done, nchunks);
    }
  };

  if (cfg.jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < cfg.jobs; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  CensusRun run;
  run.summary.height = cfg.height;
  run.summary.monic_only = cfg.monic_only;
  run.summary.restrict_label = cfg.restrict_label;
  for (std::uint64_t k = 0; k < nchunks; ++k) {
    run.summary.merge(*partial[k]);
    for (auto& r : kept[k]) run.records.push_back(std::move(r));
  }
  if (persist) {
    write_atomically(root / "summary.csv", run.summary.to_csv());
    write_atomically(root / "summary.json", run.summary.to_json());
  }
  return run;
}

// ---- comparison and density ------------------------------------------------

std::optional<std::map<std::string, std::uint64_t>> published_counts(int height) {
  if (height == 4)
    return std::map<std::string, std::uint64_t>{
        {"g1", 12},   {"g2", 25},   {"g3", 402},  {"g4", 18},    {"g5", 124},
        {"g6", 192},  {"g7", 581},  {"g8", 42},   {"g9", 170},   {"g10", 18},
        {"g11", 4367}, {"g12", 264}, {"g13", 7616}, {"g14", 160}, {"g15", 264}};
  if (height == 6)
    return std::map<std::string, std::uint64_t>{
        {"g1", 20},     {"g2", 43},   {"g3", 1185},   {"g4", 34},   {"g5", 222},
        {"g6", 394},    {"g7", 2608}, {"g8", 128},    {"g9", 648},  {"g10", 58},
        {"g11", 20236}, {"g12", 706}, {"g13", 26024}, {"g14", 534}, {"g15", 1092}};
  return std::nullopt;
}

std::vector<ErrataRow> errata_diff(const CensusSummary& s) {
  auto pub = published_counts(s.height);
  std::vector<ErrataRow> rows;
  for (const auto& g : transitive_groups()) {
    if (g.label == "S6") continue;
    ErrataRow r;
    r.label = g.label;
    auto it = s.counts.find(g.label);
    r.computed = it == s.counts.end() ? 0 : it->second;
    if (pub) r.published = pub->at(g.label);
    rows.push_back(r);
  }
  ErrataRow tot;
  tot.label = "non_S6_total";
  tot.computed = s.non_s6();
  // stated totals; the H = 6 column itself sums to 53932
  if (s.height == 4) tot.published = 14255;
  if (s.height == 6) tot.published = 53972;
  rows.push_back(tot);
  return rows;
}

std::string errata_json(const std::vector<ErrataRow>& rows) {
  json arr = json::array();
  for (const auto& r : rows) {
    json j;
    j["label"] = r.label;
    j["published"] = r.published ? json(*r.published) : json(nullptr);
    j["computed"] = r.computed;
    j["match"] = r.match();
    if (r.published)
      j["difference"] = static_cast<long long>(r.computed) - static_cast<long long>(*r.published);
    arr.push_back(j);
  }
  return arr.dump(2);
}

std::vector<DensityRow> density_report(const std::vector<CensusSummary>& summaries) {
  std::map<int, const CensusSummary*> by_height;
  for (const auto& s : summaries) by_height[s.height] = &s;
  if (by_height.size() < 2) fail(ErrorKind::Configuration, "density report needs at least two heights");
  std::vector<DensityRow> rows;
  for (const auto& g : transitive_groups()) {
    DensityRow r;
    r.label = g.label;
    r.order = g.order;
    r.delta = Rational(g.order, 720);
    r.delta.canonicalize();
    r.reference_exponent = 5.0 + r.delta.get_d();
    std::vector<std::pair<double, double>> pts;
    for (const auto& [h, s] : by_height) {
      auto it = s->counts.find(g.label);
      std::uint64_t c = it == s->counts.end() ? 0 : it->second;
      r.counts.emplace_back(h, c);
      if (c > 0) pts.emplace_back(std::log(static_cast<double>(h)), std::log(static_cast<double>(c)));
    }
    if (pts.size() >= 2) {
      double mx = 0, my = 0;
      for (auto [x, y] : pts) mx += x, my += y;
      mx /= pts.size();
      my /= pts.size();
      double sxy = 0, sxx = 0;
      for (auto [x, y] : pts) sxy += (x - mx) * (y - my), sxx += (x - mx) * (x - mx);
      r.slope = sxy / sxx;
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

std::string density_csv(const std::vector<DensityRow>& rows) {
  std::ostringstream o;
  o << "label,order,delta,reference_exponent,counts,slope\n";
  for (const auto& r : rows) {
    o << r.label << "," << r.order << "," << rational_string(r.delta) << "," << r.reference_exponent << ",\"";
    for (std::size_t i = 0; i < r.counts.size(); ++i)
      o << (i ? " " : "") << "H" << r.counts[i].first << ":" << r.counts[i].second;
    o << "\",";
    if (r.slope) o << *r.slope;
    o << "\n";
  }
  return o.str();
}

}  // namespace galois
