// Copyright 2026 The galois6 Authors.
// SPDX-License-Identifier: Apache-2.0

#include "galois/groups.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

namespace galois {

Permutation::Permutation() { std::iota(image_.begin(), image_.end(), 0); }

Permutation::Permutation(const std::array<std::uint8_t, kPoints>& image) : image_(image) {
  std::array<bool, kPoints> hit{};
  for (auto v : image_) {
    require(v < kPoints && !hit[v], "permutation image is not a bijection");
    hit[v] = true;
  }
}

Permutation Permutation::from_cycles(const std::vector<std::vector<int>>& cycles) {
  std::array<std::uint8_t, kPoints> img;
  std::iota(img.begin(), img.end(), 0);
  std::array<bool, kPoints> used{};
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      int a = c[i], b = c[(i + 1) % c.size()];
      if (a < 1 || a > kPoints || used[a - 1])
        fail(ErrorKind::Parse, "bad cycle point " + std::to_string(a));
      used[a - 1] = true;
      img[a - 1] = static_cast<std::uint8_t>(b - 1);
    }
  }
  return Permutation(img);
}

Permutation Permutation::parse(const std::string& text) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  while (i < text.size()) {
    if (text[i] != '(') fail(ErrorKind::Parse, "expected '(' in cycle notation: " + text);
    ++i;
    std::vector<int> cycle;
    for (;;) {
      skip();
      if (i >= text.size()) fail(ErrorKind::Parse, "unterminated cycle: " + text);
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        fail(ErrorKind::Parse, "bad character in cycle notation: " + text);
      cycle.push_back(text[i] - '0');
      ++i;
    }
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    skip();
  }
  return from_cycles(cycles);
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  std::array<std::uint8_t, Permutation::kPoints> img;
  for (int i = 0; i < Permutation::kPoints; ++i) img[i] = a.image_[b.image_[i]];
  Permutation r;
  r.image_ = img;
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r;
  for (int i = 0; i < kPoints; ++i) r.image_[image_[i]] = static_cast<std::uint8_t>(i);
  return r;
}

bool Permutation::is_identity() const { return *this == Permutation(); }

Partition Permutation::cycle_type() const {
  Partition t;
  std::array<bool, kPoints> seen{};
  for (int i = 0; i < kPoints; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = image_[j]) {
      seen[j] = true;
      ++len;
    }
    t.push_back(len);
  }
  std::sort(t.rbegin(), t.rend());
  return t;
}

bool Permutation::is_even() const {
  int s = 0;
  for (int len : cycle_type()) s += len - 1;
  return s % 2 == 0;
}

int Permutation::rank() const {
  int r = 0;
  for (int i = 0; i < kPoints; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < kPoints; ++j)
      if (image_[j] < image_[i]) ++smaller;
    r = r * (kPoints - i) + smaller;
  }
  return r;
}

Permutation Permutation::unrank(int r) {
  require(r >= 0 && r < 720, "permutation rank out of range");
  std::array<int, kPoints> digits;
  for (int i = kPoints - 1; i >= 0; --i) {
    digits[i] = r % (kPoints - i);
    r /= kPoints - i;
  }
  std::vector<std::uint8_t> pool = {0, 1, 2, 3, 4, 5};
  Permutation p;
  for (int i = 0; i < kPoints; ++i) {
    p.image_[i] = pool[digits[i]];
    pool.erase(pool.begin() + digits[i]);
  }
  return p;
}

std::string Permutation::to_string() const {
  std::string out;
  std::array<bool, kPoints> seen{};
  for (int i = 0; i < kPoints; ++i) {
    if (seen[i] || image_[i] == i) continue;
    out += '(';
    for (int j = i; !seen[j]; j = image_[j]) {
      seen[j] = true;
      if (j != i) out += ',';
      out += static_cast<char>('1' + j);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

const std::array<CycleType, kSignatureClasses>& signature_classes() {
  static const std::array<CycleType, kSignatureClasses> classes = {{
      {2, 1, 1, 1, 1},
      {2, 2, 1, 1},
      {2, 2, 2},
      {3, 1, 1, 1},
      {3, 2, 1},
      {3, 3},
      {4, 1, 1},
      {4, 2},
      {5, 1},
      {6},
  }};
  return classes;
}

int signature_class(const CycleType& t) {
  const auto& cls = signature_classes();
  for (int i = 0; i < kSignatureClasses; ++i)
    if (cls[i] == t) return i;
  return -1;
}

std::vector<Permutation> expand(const std::vector<Permutation>& generators) {
  ElementSet seen;
  std::vector<Permutation> out{Permutation()};
  seen.set(out[0].rank());
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& g : generators) {
      Permutation y = g * out[i];
      int r = y.rank();
      if (!seen.test(r)) {
        seen.set(r);
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

ElementSet element_set(const std::vector<Permutation>& elements) {
  ElementSet s;
  for (const auto& e : elements) s.set(e.rank());
  return s;
}

std::vector<Permutation> elements_of(const ElementSet& set) {
  std::vector<Permutation> out;
  for (int r = 0; r < 720; ++r)
    if (set.test(r)) out.push_back(Permutation::unrank(r));
  std::sort(out.begin(), out.end());
  return out;
}

bool TransitiveGroup::is_transitive() const {
  std::array<bool, Permutation::kPoints> hit{};
  for (const auto& e : elements) hit[e(0)] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

Signature signature(const std::vector<Permutation>& elements) {
  Signature s{};
  for (const auto& e : elements) {
    int c = signature_class(e.cycle_type());
    if (c >= 0) s[c] = 1;
  }
  return s;
}

bool in_A6(const std::vector<Permutation>& elements) {
  return std::all_of(elements.begin(), elements.end(), [](const Permutation& e) { return e.is_even(); });
}

namespace {

struct GroupSpec {
  const char* label;
  const char* name;
  int t;
  GapId gap;
  std::vector<const char*> gens;
};

// Labels follow the signature column of the group table; g9 is the even group
// 3^2:4 and g10 is S3 x S3.
const std::vector<GroupSpec>& specs() {
  static const std::vector<GroupSpec> s = {
      {"g1", "C(6)", 1, {6, 2}, {"(1,2,3,4,5,6)"}},
      {"g2", "D_6(6)", 2, {6, 1}, {"(1,3,5)(2,4,6)", "(1,4)(2,3)(5,6)"}},
      {"g3", "D(6)", 3, {12, 4}, {"(1,2,3,4,5,6)", "(1,4)(2,3)(5,6)"}},
      {"g4", "A_4(6)", 4, {12, 3}, {"(1,4)(2,5)", "(1,3,5)(2,4,6)"}},
      {"g5", "F_18(6)", 5, {18, 3}, {"(2,4,6)", "(1,4)(2,5)(3,6)"}},
      {"g6", "2A_4(6)", 6, {24, 13}, {"(3,6)", "(1,3,5)(2,4,6)"}},
      {"g7", "S_4(6d)", 7, {24, 12}, {"(1,4)(2,5)", "(1,3,5)(2,4,6)", "(1,5)(2,4)"}},
      {"g8", "S_4(6c)", 8, {24, 12}, {"(1,4)(2,5)", "(1,3,5)(2,4,6)", "(1,5)(2,4)(3,6)"}},
      {"g9", "F_36(6)", 10, {36, 9}, {"(2,4,6)", "(1,5)(2,4)", "(1,4,5,2)(3,6)"}},
      {"g10", "F_18(6):2", 9, {36, 10}, {"(2,4,6)", "(1,5)(2,4)", "(1,4)(2,5)(3,6)"}},
      {"g11", "2 wr S(3)", 11, {48, 48}, {"(3,6)", "(1,3,5)(2,4,6)", "(1,5)(2,4)"}},
      {"g12", "PSL(2,5)", 12, {60, 5}, {"(1,2,3,4,6)", "(1,4)(5,6)"}},
      {"g13", "S(3) wr 2", 13, {72, 40}, {"(2,4,6)", "(2,4)", "(1,4)(2,5)(3,6)"}},
      {"g14", "PGL(2,5)", 14, {120, 34}, {"(1,2,3,4,6)", "(1,2)(3,4)(5,6)"}},
      {"g15", "A_6", 15, {360, 118}, {"(1,2,3,4,5)", "(4,5,6)"}},
      {"S6", "S_6", 16, {720, 763}, {"(1,2)", "(1,2,3,4,5,6)"}},
  };
  return s;
}

std::vector<TransitiveGroup> build_groups() {
  std::vector<TransitiveGroup> out;
  for (const auto& sp : specs()) {
    TransitiveGroup g;
    g.label = sp.label;
    g.name = sp.name;
    g.transitive_id = sp.t;
    g.gap_id = sp.gap;
    for (const char* c : sp.gens) g.generators.push_back(Permutation::parse(c));
    g.elements = expand(g.generators);
    g.members = element_set(g.elements);
    g.order = static_cast<int>(g.elements.size());
    g.signature = signature(g.elements);
    g.in_A6 = in_A6(g.elements);
    if (g.order != g.gap_id.order)
      fail(ErrorKind::InternalConsistency, "group " + g.label + " has the wrong order");
    if (!g.is_transitive())
      fail(ErrorKind::InternalConsistency, "group " + g.label + " is not transitive");
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace

const std::vector<TransitiveGroup>& transitive_groups() {
  static const std::vector<TransitiveGroup> groups = build_groups();
  return groups;
}

std::optional<std::size_t> group_index(const std::string& label) {
  const auto& gs = transitive_groups();
  for (std::size_t i = 0; i < gs.size(); ++i)
    if (gs[i].label == label) return i;
  return std::nullopt;
}

const TransitiveGroup& group_by_label(const std::string& label) {
  auto i = group_index(label);
  if (!i) fail(ErrorKind::Parse, "unknown group label: " + label);
  return transitive_groups()[*i];
}

std::vector<std::string> candidates(const std::set<CycleType>& observed, const CycleType& conj_type,
                                    std::optional<bool> parity) {
  std::vector<int> needed;
  auto add = [&](const CycleType& t) {
    int s = 0;
    for (int x : t) s += x;
    require(s == Permutation::kPoints, "cycle type is not a partition of 6");
    int c = signature_class(t);
    if (c >= 0) needed.push_back(c);
  };
  for (const auto& t : observed) add(t);
  add(conj_type);
  std::vector<std::string> out;
  for (const auto& g : transitive_groups()) {
    if (parity && *parity != g.in_A6) continue;
    bool ok = std::all_of(needed.begin(), needed.end(), [&](int c) { return g.signature[c] == 1; });
    if (ok) out.push_back(g.label);
  }
  if (out.empty()) fail(ErrorKind::InconsistentEvidence, "no transitive group admits the observed cycle types");
  return out;
}

std::vector<ElementSet> conjugates(const ElementSet& group) {
  std::vector<ElementSet> out;
  auto elems = elements_of(group);
  for (int r = 0; r < 720; ++r) {
    Permutation s = Permutation::unrank(r), si = s.inverse();
    ElementSet c;
    for (const auto& e : elems) c.set((s * e * si).rank());
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
  }
  return out;
}

bool conjugate_contained(const TransitiveGroup& a, const TransitiveGroup& b) {
  if (b.order % a.order != 0) return false;
  for (int r = 0; r < 720; ++r) {
    Permutation s = Permutation::unrank(r), si = s.inverse();
    bool inside = std::all_of(a.generators.begin(), a.generators.end(),
                              [&](const Permutation& g) { return b.contains(s * g * si); });
    if (inside) return true;
  }
  return false;
}

namespace {
GroupLattice build_lattice() {
  const auto& gs = transitive_groups();
  const int n = static_cast<int>(gs.size());
  GroupLattice lat;
  lat.contains.assign(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && gs[i].order < gs[j].order) lat.contains[i][j] = conjugate_contained(gs[i], gs[j]);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!lat.contains[i][j]) continue;
      bool cover = true;
      for (int k = 0; k < n && cover; ++k)
        if (lat.contains[i][k] && lat.contains[k][j]) cover = false;
      if (cover) lat.edges.emplace_back(i, j);
    }
  return lat;
}
}  // namespace

const GroupLattice& group_lattice() {
  static const GroupLattice lat = build_lattice();
  return lat;
}

CosetSpace::CosetSpace(const std::vector<Permutation>& g, const ElementSet& h) {
  coset_.fill(-1);
  auto hs = elements_of(h);
  for (const auto& s : g) {
    if (coset_[s.rank()] >= 0) continue;
    int id = static_cast<int>(reps_.size());
    reps_.push_back(s);
    for (const auto& x : hs) coset_[(s * x).rank()] = id;
  }
}

int CosetSpace::coset_of(const Permutation& s) const {
  int c = coset_[s.rank()];
  require(c >= 0, "permutation lies outside the coset space");
  return c;
}

std::vector<int> CosetSpace::action(const Permutation& tau) const {
  std::vector<int> img(reps_.size());
  for (std::size_t i = 0; i < reps_.size(); ++i) img[i] = coset_of(tau * reps_[i]);
  return img;
}

namespace {
bool even_on(const std::vector<int>& img, const std::vector<int>& orbit) {
  std::vector<bool> seen(img.size(), false);
  int transpositions = 0;
  for (int start : orbit) {
    if (seen[start]) continue;
    int len = 0;
    for (int j = start; !seen[j]; j = img[j]) {
      seen[j] = true;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0;
}
}  // namespace

std::vector<CosetSpace::Orbit> CosetSpace::orbits(const std::vector<Permutation>& gens) const {
  std::vector<std::vector<int>> acts;
  for (const auto& g : gens) acts.push_back(action(g));
  std::vector<int> which(reps_.size(), -1);
  std::vector<Orbit> out;
  for (int s = 0; s < size(); ++s) {
    if (which[s] >= 0) continue;
    Orbit o;
    o.cosets.push_back(s);
    which[s] = static_cast<int>(out.size());
    for (std::size_t i = 0; i < o.cosets.size(); ++i)
      for (const auto& a : acts) {
        int t = a[o.cosets[i]];
        if (which[t] < 0) {
          which[t] = which[s];
          o.cosets.push_back(t);
        }
      }
    std::sort(o.cosets.begin(), o.cosets.end());
    for (const auto& a : acts) o.even = o.even && even_on(a, o.cosets);
    out.push_back(std::move(o));
  }
  return out;
}

std::vector<int> CosetSpace::orbit_lengths(const std::vector<Permutation>& gens) const {
  std::vector<int> out;
  for (const auto& o : orbits(gens)) out.push_back(static_cast<int>(o.cosets.size()));
  std::sort(out.begin(), out.end());
  return out;
}

std::string format_cycle_type(const CycleType& t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(t[i]);
  }
  return out + ")";
}

std::string groups_json() {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& g : transitive_groups()) {
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& p : g.generators) gens.push_back(p.to_string());
    arr.push_back({{"label", g.label},
                   {"name", g.name},
                   {"gap_id", {g.gap_id.order, g.gap_id.index}},
                   {"transitive_id", g.transitive_id},
                   {"order", g.order},
                   {"generators", gens},
                   {"signature", g.signature},
                   {"in_A6", g.in_A6}});
  }
  return arr.dump(2);
}

}  // namespace galois
