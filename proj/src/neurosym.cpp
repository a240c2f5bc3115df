// Copyright 2026 The galois6 Authors.
// SPDX-License-Identifier: Apache-2.0

#include "galois/neurosym.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <map>
#include <numeric>
#include <random>

#include <nlohmann/json.hpp>

#include "galois/ffactor.hpp"
#include "galois/polycore.hpp"

namespace galois::neurosym {

namespace {

constexpr char kMagic[8] = {'G', '6', 'M', 'L', 'P', '\0', '\0', '\0'};
constexpr std::uint32_t kVersion = 1;

std::array<int, 5> layer_dims(int input_dim) { return {input_dim, kHidden, kHidden, kHidden, kClasses}; }

CycleType conjugation_type(int real_roots) {
  CycleType t(static_cast<std::size_t>((6 - real_roots) / 2), 2);
  t.resize(static_cast<std::size_t>(6 - (6 - real_roots) / 2), 1);
  return t;
}

void require_sextic_irreducible(const IntPolynomial& f) {
  if (f.degree() != 6) fail(ErrorKind::DegenerateInput, "expected a sextic");
  if (!is_irreducible(primitive_part(f))) fail(ErrorKind::NotIrreducible, "polynomial is reducible over Q");
}

Eigen::MatrixXd softmax_cols(const Eigen::MatrixXd& z) {
  Eigen::MatrixXd p(z.rows(), z.cols());
  for (Eigen::Index j = 0; j < z.cols(); ++j) {
    Eigen::VectorXd c = z.col(j).array() - z.col(j).maxCoeff();
    c = c.array().exp();
    p.col(j) = c / c.sum();
  }
  return p;
}

Eigen::MatrixXd relu(const Eigen::MatrixXd& z) { return z.cwiseMax(0.0); }

void require_dims(const MlpParams& p, Eigen::Index rows) {
  if (p.input_dim <= 0 || rows != p.input_dim)
    fail(ErrorKind::ContractViolation, "feature dimension does not match the network");
}

template <typename T>
void put(std::ofstream& out, const T& v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof v);
}

template <typename T>
T get(std::ifstream& in) {
  T v{};
  in.read(reinterpret_cast<char*>(&v), sizeof v);
  if (!in) fail(ErrorKind::Parse, "truncated parameter file");
  return v;
}

}  // namespace

int feature_dim(FeatureMode mode) { return mode == FeatureMode::Full ? 7 + 2 + kSignatureClasses : 7; }

Eigen::VectorXd FeatureVector::encode(FeatureMode mode) const {
  Eigen::VectorXd x(feature_dim(mode));
  for (int i = 0; i < 7; ++i) x[i] = coeffs[i];
  if (mode == FeatureMode::CoefficientsOnly) return x;
  x[7] = real_roots;
  x[8] = disc_square ? 1.0 : 0.0;
  for (int i = 0; i < kSignatureClasses; ++i) x[9 + i] = seen[i] ? 1.0 : 0.0;
  return x;
}

FeatureVector featurize(const IntPolynomial& f, const PrimeBudget& budget) {
  require_sextic_irreducible(f);
  FeatureVector v;
  Integer h = height(f).value;
  for (int i = 0; i < 7; ++i) v.coeffs[i] = Rational(f[i], h).get_d();
  IntPolynomial g = monic_associate(f);
  v.disc_square = is_square(discriminant(g));
  v.real_roots = sturm_real_roots(f);
  for (const auto& pat : sample_patterns(g, budget)) {
    int c = signature_class(pat);
    if (c >= 0) v.seen[c] = true;
  }
  return v;
}

CandidateMask symbolic_mask(const IntPolynomial& f, const MaskBudget& budget) {
  require_sextic_irreducible(f);
  IntPolynomial g = monic_associate(f);
  std::optional<bool> parity;
  if (budget.use_parity) parity = is_square(discriminant(g));
  CycleType conj = budget.use_real_roots ? conjugation_type(sturm_real_roots(f)) : CycleType(6, 1);
  std::set<DegreePattern> seen = sample_patterns(g, budget.primes);
  CandidateMask mask{};
  for (const auto& label : candidates(seen, conj, parity)) mask[class_index(label)] = true;
  return mask;
}

std::vector<std::string> mask_labels(const CandidateMask& mask) {
  std::vector<std::string> out;
  for (int i = 0; i < kClasses; ++i)
    if (mask[i]) out.push_back(class_label(i));
  return out;
}

int class_index(const std::string& label) {
  auto i = group_index(label);
  if (!i) fail(ErrorKind::Parse, "unknown group label " + label);
  return static_cast<int>(*i);
}

const std::string& class_label(int index) {
  require(index >= 0 && index < kClasses, "class index out of range");
  return transitive_groups()[static_cast<std::size_t>(index)].label;
}

// ---- parameters ------------------------------------------------------------

MlpParams MlpParams::zeros(int input_dim) {
  require(input_dim > 0, "input dimension must be positive");
  MlpParams p;
  p.input_dim = input_dim;
  auto d = layer_dims(input_dim);
  for (int l = 0; l < 4; ++l) {
    p.W[l] = Eigen::MatrixXd::Zero(d[l + 1], d[l]);
    p.b[l] = Eigen::VectorXd::Zero(d[l + 1]);
  }
  return p;
}

MlpParams MlpParams::init(int input_dim, std::uint64_t seed) {
  MlpParams p = zeros(input_dim);
  p.seed = seed;
  std::mt19937_64 rng(seed);
  for (int l = 0; l < 4; ++l) {
    const double limit = std::sqrt(6.0 / static_cast<double>(p.W[l].cols()));
    for (Eigen::Index i = 0; i < p.W[l].rows(); ++i)
      for (Eigen::Index j = 0; j < p.W[l].cols(); ++j) {
        double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;  // [0, 1)
        p.W[l](i, j) = (2.0 * u - 1.0) * limit;
      }
  }
  return p;
}

std::size_t MlpParams::parameter_count() const {
  std::size_t n = 0;
  for (int l = 0; l < 4; ++l) n += static_cast<std::size_t>(W[l].size() + b[l].size());
  return n;
}

Eigen::VectorXd MlpParams::flatten() const {
  Eigen::VectorXd flat(static_cast<Eigen::Index>(parameter_count()));
  Eigen::Index k = 0;
  for (int l = 0; l < 4; ++l) {
    for (Eigen::Index i = 0; i < W[l].rows(); ++i)
      for (Eigen::Index j = 0; j < W[l].cols(); ++j) flat[k++] = W[l](i, j);
    for (Eigen::Index i = 0; i < b[l].size(); ++i) flat[k++] = b[l][i];
  }
  return flat;
}

void MlpParams::assign(const Eigen::VectorXd& flat) {
  require(static_cast<std::size_t>(flat.size()) == parameter_count(), "parameter vector has the wrong size");
  Eigen::Index k = 0;
  for (int l = 0; l < 4; ++l) {
    for (Eigen::Index i = 0; i < W[l].rows(); ++i)
      for (Eigen::Index j = 0; j < W[l].cols(); ++j) W[l](i, j) = flat[k++];
    for (Eigen::Index i = 0; i < b[l].size(); ++i) b[l][i] = flat[k++];
  }
}

void MlpParams::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorKind::Configuration, "cannot write " + path);
  out.write(kMagic, sizeof kMagic);
  put(out, kVersion);
  for (int d : layer_dims(input_dim)) put(out, static_cast<std::uint32_t>(d));
  put(out, seed);
  put(out, static_cast<std::uint32_t>(epochs));
  Eigen::VectorXd flat = flatten();
  for (Eigen::Index i = 0; i < flat.size(); ++i) put(out, flat[i]);
  if (!out) fail(ErrorKind::Configuration, "write failed for " + path);
}

MlpParams MlpParams::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::Configuration, "cannot read " + path);
  char magic[8];
  in.read(magic, sizeof magic);
  if (!in || std::memcmp(magic, kMagic, sizeof kMagic) != 0) fail(ErrorKind::Parse, "not a parameter file");
  if (get<std::uint32_t>(in) != kVersion) fail(ErrorKind::Parse, "unsupported parameter file version");
  std::array<int, 5> dims;
  for (auto& d : dims) d = static_cast<int>(get<std::uint32_t>(in));
  if (dims[0] <= 0 || dims != layer_dims(dims[0])) fail(ErrorKind::Parse, "unexpected network shape");
  MlpParams p = zeros(dims[0]);
  p.seed = get<std::uint64_t>(in);
  p.epochs = static_cast<int>(get<std::uint32_t>(in));
  Eigen::VectorXd flat(static_cast<Eigen::Index>(p.parameter_count()));
  for (Eigen::Index i = 0; i < flat.size(); ++i) flat[i] = get<double>(in);
  p.assign(flat);
  return p;
}

// ---- network ---------------------------------------------------------------

Eigen::VectorXd forward(const MlpParams& p, const Eigen::VectorXd& x) {
  require_dims(p, x.size());
  Eigen::MatrixXd a = x;
  for (int l = 0; l < 3; ++l) a = relu((p.W[l] * a).colwise() + p.b[l]);
  Eigen::MatrixXd z = (p.W[3] * a).colwise() + p.b[3];
  return softmax_cols(z).col(0);
}

double loss(const MlpParams& p, const Eigen::MatrixXd& X, const std::vector<int>& y, Eigen::VectorXd* grad) {
  require_dims(p, X.rows());
  require(static_cast<std::size_t>(X.cols()) == y.size() && !y.empty(), "labels do not match the batch");
  const double n = static_cast<double>(y.size());
  std::array<Eigen::MatrixXd, 4> z;
  std::array<Eigen::MatrixXd, 5> a;
  a[0] = X;
  for (int l = 0; l < 4; ++l) {
    z[l] = (p.W[l] * a[l]).colwise() + p.b[l];
    a[l + 1] = l < 3 ? relu(z[l]) : softmax_cols(z[l]);
  }
  double total = 0.0;
  for (std::size_t j = 0; j < y.size(); ++j)
    total -= std::log(std::max(a[4](y[j], static_cast<Eigen::Index>(j)), 1e-300));
  if (!grad) return total / n;

  std::array<Eigen::MatrixXd, 4> dW;
  std::array<Eigen::VectorXd, 4> db;
  Eigen::MatrixXd dz = a[4];
  for (std::size_t j = 0; j < y.size(); ++j) dz(y[j], static_cast<Eigen::Index>(j)) -= 1.0;
  dz /= n;
  for (int l = 3; l >= 0; --l) {
    dW[l] = dz * a[l].transpose();
    db[l] = dz.rowwise().sum();
    if (l == 0) break;
    Eigen::MatrixXd da = p.W[l].transpose() * dz;
    dz = da.array() * (z[l - 1].array() > 0.0).cast<double>();
  }
  MlpParams g;
  g.input_dim = p.input_dim;
  g.W = dW;
  g.b = db;
  *grad = g.flatten();
  return total / n;
}

// ---- training --------------------------------------------------------------

std::pair<std::vector<std::size_t>, std::vector<std::size_t>> stratified_split(const std::vector<Sample>& data,
                                                                               double split,
                                                                               std::uint64_t seed) {
  require(split > 0.0 && split < 1.0, "validation split must lie in (0, 1)");
  std::map<int, std::vector<std::size_t>> by_label;
  for (std::size_t i = 0; i < data.size(); ++i) by_label[data[i].label].push_back(i);
  std::mt19937_64 rng(seed ^ 0x5eed5eedULL);
  std::vector<std::size_t> tr, va;
  for (auto& [label, idx] : by_label) {
    std::shuffle(idx.begin(), idx.end(), rng);
    std::size_t nv = idx.size() >= 2 ? static_cast<std::size_t>(std::ceil(split * idx.size())) : 0;
    nv = std::min(nv, idx.size() - 1);
    va.insert(va.end(), idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(nv));
    tr.insert(tr.end(), idx.begin() + static_cast<std::ptrdiff_t>(nv), idx.end());
  }
  std::sort(tr.begin(), tr.end());
  std::sort(va.begin(), va.end());
  return {tr, va};
}

namespace {

void gather(const std::vector<Sample>& data, const std::vector<std::size_t>& idx, std::size_t from,
            std::size_t to, Eigen::MatrixXd& X, std::vector<int>& y) {
  const Eigen::Index dim = data[idx[from]].x.size();
  X.resize(dim, static_cast<Eigen::Index>(to - from));
  y.resize(to - from);
  for (std::size_t k = from; k < to; ++k) {
    X.col(static_cast<Eigen::Index>(k - from)) = data[idx[k]].x;
    y[k - from] = data[idx[k]].label;
  }
}

double accuracy_of(const MlpParams& p, const std::vector<Sample>& data, const std::vector<std::size_t>& idx) {
  if (idx.empty()) return 0.0;
  std::size_t hit = 0;
  for (auto i : idx) {
    Eigen::VectorXd pr = forward(p, data[i].x);
    Eigen::Index arg;
    pr.maxCoeff(&arg);
    hit += arg == data[i].label;
  }
  return static_cast<double>(hit) / static_cast<double>(idx.size());
}

}  // namespace

TrainResult train(const std::vector<Sample>& data, const TrainConfig& cfg) {
  if (cfg.epochs < 1) fail(ErrorKind::Configuration, "epochs must be at least 1");
  if (cfg.batch_size < 1) fail(ErrorKind::Configuration, "batch size must be positive");
  std::set<int> labels;
  for (const auto& s : data) labels.insert(s.label);
  if (labels.size() < 2) fail(ErrorKind::DegenerateInput, "training needs at least two distinct labels");
  const int dim = static_cast<int>(data[0].x.size());
  for (const auto& s : data) {
    require(s.x.size() == dim, "inconsistent feature dimensions");
    require(s.label >= 0 && s.label < kClasses, "label out of range");
  }

  TrainResult out;
  auto [tr, va] = stratified_split(data, cfg.validation_split, cfg.seed);
  out.metrics.train_indices = tr;
  out.metrics.val_indices = va;
  MlpParams p = MlpParams::init(dim, cfg.seed);

  Eigen::MatrixXd Xtr, Xva;
  std::vector<int> ytr, yva;
  gather(data, tr, 0, tr.size(), Xtr, ytr);
  if (!va.empty()) gather(data, va, 0, va.size(), Xva, yva);
  auto record = [&] {
    out.metrics.train_loss.push_back(loss(p, Xtr, ytr));
    out.metrics.val_loss.push_back(va.empty() ? 0.0 : loss(p, Xva, yva));
    out.metrics.val_accuracy.push_back(accuracy_of(p, data, va));
  };
  record();

  Eigen::VectorXd theta = p.flatten();
  Eigen::VectorXd m = Eigen::VectorXd::Zero(theta.size()), v = m, grad;
  std::mt19937_64 rng(cfg.seed);
  std::vector<std::size_t> order = tr;
  long step = 0;
  Eigen::MatrixXd X;
  std::vector<int> y;
  for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t from = 0; from < order.size(); from += static_cast<std::size_t>(cfg.batch_size)) {
      std::size_t to = std::min(order.size(), from + static_cast<std::size_t>(cfg.batch_size));
      gather(data, order, from, to, X, y);
      loss(p, X, y, &grad);
      ++step;
      m = cfg.beta1 * m + (1.0 - cfg.beta1) * grad;
      v = cfg.beta2 * v + (1.0 - cfg.beta2) * grad.cwiseProduct(grad);
      const double c1 = 1.0 - std::pow(cfg.beta1, static_cast<double>(step));
      const double c2 = 1.0 - std::pow(cfg.beta2, static_cast<double>(step));
      theta -= (cfg.learning_rate * (m / c1).array() / ((v / c2).array().sqrt() + cfg.epsilon)).matrix();
      p.assign(theta);
    }
    p.epochs = epoch + 1;
    record();
  }
  out.params = std::move(p);
  return out;
}

std::string TrainMetrics::to_json() const {
  nlohmann::json j;
  j["train_loss"] = train_loss;
  j["val_loss"] = val_loss;
  j["val_accuracy"] = val_accuracy;
  j["train_size"] = train_indices.size();
  j["val_size"] = val_indices.size();
  return j.dump(2);
}

// ---- prediction ------------------------------------------------------------

Prediction apply_mask(const Eigen::VectorXd& probabilities, const CandidateMask& mask) {
  require(probabilities.size() == kClasses, "expected one probability per class");
  Prediction out;
  out.mask = mask;
  int allowed = 0, only = -1;
  double total = 0.0;
  for (int i = 0; i < kClasses; ++i)
    if (mask[i]) {
      ++allowed;
      only = i;
      total += probabilities[i];
    }
  if (allowed == 0) fail(ErrorKind::InconsistentEvidence, "empty candidate mask");
  for (int i = 0; i < kClasses; ++i) {
    if (!mask[i]) continue;
    out.probabilities[i] = total > 0.0 ? probabilities[i] / total : 1.0 / allowed;
  }
  int best = only;
  if (allowed > 1) {
    best = -1;
    for (int i = 0; i < kClasses; ++i)
      if (mask[i] && (best < 0 || out.probabilities[i] > out.probabilities[best])) best = i;
  }
  out.label = class_label(best);
  return out;
}

Prediction predict(const MlpParams& params, const IntPolynomial& f, const MaskBudget& budget) {
  CandidateMask mask = symbolic_mask(f, budget);
  FeatureMode mode = params.input_dim == feature_dim(FeatureMode::Full) ? FeatureMode::Full
                                                                         : FeatureMode::CoefficientsOnly;
  Eigen::VectorXd x = featurize(f, budget.primes).encode(mode);
  return apply_mask(forward(params, x), mask);
}

}  // namespace galois::neurosym
