// Copyright 2026 The galois6 Authors.
// SPDX-License-Identifier: Apache-2.0

// A small dense network over polynomial features, wrapped by symbolic
// candidate masking.

#ifndef GALOIS_NEUROSYM_HPP
#define GALOIS_NEUROSYM_HPP

#include <Eigen/Dense>

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "galois/classifier.hpp"

namespace galois::neurosym {

constexpr int kClasses = 16;  // g1..g15, S6 in transitive_groups() order
constexpr int kHidden = 64;

enum class FeatureMode { Full, CoefficientsOnly };

/// Input width of the network for a feature mode: 19 or 7.
int feature_dim(FeatureMode mode);

struct FeatureVector {
  std::array<double, 7> coeffs{};  // a_i / height, ascending
  int real_roots = 0;
  bool disc_square = false;
  std::array<bool, kSignatureClasses> seen{};  // nontrivial cycle types met at sampled primes

  Eigen::VectorXd encode(FeatureMode mode = FeatureMode::Full) const;
};

/// Throws NotIrreducible for reducible input.
FeatureVector featurize(const IntPolynomial& f, const PrimeBudget& budget = {});

using CandidateMask = std::array<bool, kClasses>;

struct MaskBudget {
  PrimeBudget primes;  // max_prime < 2 samples nothing
  bool use_parity = true;
  bool use_real_roots = true;
};

/// Candidate set after the real-root, discriminant and signature layers.
CandidateMask symbolic_mask(const IntPolynomial& f, const MaskBudget& budget = {});
std::vector<std::string> mask_labels(const CandidateMask& mask);

struct MlpParams {
  int input_dim = 0;
  std::array<Eigen::MatrixXd, 4> W;  // 64 x in, 64 x 64, 64 x 64, 16 x 64
  std::array<Eigen::VectorXd, 4> b;
  std::uint64_t seed = 0;
  int epochs = 0;

  /// He-uniform weights, zero biases.
  static MlpParams init(int input_dim, std::uint64_t seed);
  static MlpParams zeros(int input_dim);

  std::size_t parameter_count() const;
  /// Flat view used by the optimizer and the gradient check.
  Eigen::VectorXd flatten() const;
  void assign(const Eigen::VectorXd& flat);

  /// Versioned binary format: header with dims, seed and epochs, then
  /// row-major weight blocks and biases as little-endian doubles.
  void save(const std::string& path) const;
  static MlpParams load(const std::string& path);
};

/// Softmax probabilities. Throws ContractViolation on a dimension mismatch.
Eigen::VectorXd forward(const MlpParams& params, const Eigen::VectorXd& x);

/// Mean cross-entropy over the columns of X, and its gradient in the
/// flatten() layout when grad is given.
double loss(const MlpParams& params, const Eigen::MatrixXd& X, const std::vector<int>& y,
            Eigen::VectorXd* grad = nullptr);

struct Sample {
  Eigen::VectorXd x;
  int label = 0;  // class index
};

struct TrainConfig {
  double learning_rate = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
  int batch_size = 64;
  int epochs = 100;
  std::uint64_t seed = 1;
  double validation_split = 0.1;  // stratified by label
};

struct TrainMetrics {
  std::vector<double> train_loss;  // per epoch, entry 0 is before training
  std::vector<double> val_loss;
  std::vector<double> val_accuracy;
  std::vector<std::size_t> train_indices, val_indices;
  std::string to_json() const;
};

struct TrainResult {
  MlpParams params;
  TrainMetrics metrics;
};

/// Adam on mini-batches. Deterministic for a given seed and dataset.
/// Throws DegenerateInput with fewer than two distinct labels.
TrainResult train(const std::vector<Sample>& data, const TrainConfig& config);

/// Stratified split used by train(): (train, validation) indices.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> stratified_split(
    const std::vector<Sample>& data, double validation_split, std::uint64_t seed);

struct Prediction {
  std::string label;
  std::array<double, kClasses> probabilities{};
  CandidateMask mask{};
};

/// Zeroes masked labels and renormalizes; argmax with ties to the lowest
/// index; a singleton mask wins outright.
Prediction apply_mask(const Eigen::VectorXd& probabilities, const CandidateMask& mask);

Prediction predict(const MlpParams& params, const IntPolynomial& f, const MaskBudget& budget = {});

int class_index(const std::string& label);
const std::string& class_label(int index);

}  // namespace galois::neurosym

#endif  // GALOIS_NEUROSYM_HPP
