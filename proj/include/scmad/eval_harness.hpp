// Copyright 2026 The SC-MAD Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SCMAD_EVAL_HARNESS_HPP
#define SCMAD_EVAL_HARNESS_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "scmad/dataset_io.hpp"
#include "scmad/pipeline.hpp"
#include "scmad/simplicial_complex.hpp"

namespace scmad {

// Fixed ordered bank of small reference complexes: node, edge, 2-path,
// hollow triangle, filled triangle, two filled triangles sharing an edge.
struct MotifBank {
  std::vector<std::string> names;
  std::vector<SimplicialComplex> motifs;

  static MotifBank standard();
};

// Vector of homomorphism densities t(F, K), one entry per motif.
std::vector<double> featurize(const SimplicialComplex& k,
                              const MotifBank& bank);

struct ClassifierConfig {
  double learning_rate = 5.0;
  int iterations = 4000;
  double l2_penalty = 1e-6;
};

// Multinomial linear model trained against soft targets by full-batch
// gradient descent on the cross-entropy loss plus an L2 penalty.
class SoftClassifier {
 public:
  // weights_[c] has one coefficient per feature plus a bias term.
  SoftClassifier(int num_features, int num_classes);

  // Returns the final loss. Throws DomainError if fewer than 2 classes
  // carry mass in the targets. The loss trajectory is non-increasing by
  // construction (backtracking halves the step on any increase).
  double train(const std::vector<std::vector<double>>& features,
               const std::vector<std::vector<double>>& targets,
               const ClassifierConfig& config);

  std::vector<double> predict_proba(const std::vector<double>& features) const;
  int predict(const std::vector<double>& features) const;

  double loss(const std::vector<std::vector<double>>& features,
              const std::vector<std::vector<double>>& targets,
              double l2_penalty) const;
  // Flattened analytic gradient at the current weights (for testing).
  std::vector<double> loss_gradient(
      const std::vector<std::vector<double>>& features,
      const std::vector<std::vector<double>>& targets,
      double l2_penalty) const;

  std::vector<std::vector<double>>& weights() { return weights_; }

 private:
  int num_features_;
  int num_classes_;
  std::vector<std::vector<double>> weights_;
};

double hard_accuracy(const SoftClassifier& model,
                     const std::vector<std::vector<double>>& features,
                     const std::vector<std::vector<double>>& targets);

struct SynthVrConfig {
  int n_per_class = 50;
  int points_per_complex = 40;
  double eps = 0.0;      // <= 0 selects calibration to target_edge_density
  double noise = 0.05;   // Gaussian noise sigma
  double target_edge_density = 0.25;
  int max_dim = 2;
};

// Two classes of Vietoris-Rips complexes: class 0 from a noisy unit
// circle, class 1 from a noisy figure eight (lemniscate), one-hot labels.
Dataset synth_vr_dataset(const SynthVrConfig& config, std::uint64_t seed);

// eps value whose pooled pairwise-distance quantile hits the target mean
// edge density for the given point clouds.
double calibrate_eps(const std::vector<std::vector<Point2>>& clouds,
                     double target_edge_density);

struct ExperimentRow {
  std::string data_scheme;
  std::string label_scheme;
  std::uint64_t seed = 0;
  double baseline_acc = 0.0;
  double augmented_acc = 0.0;
};

struct ExperimentConfig {
  std::vector<std::pair<std::string, std::string>> scheme_pairs;
  int num_seeds = 10;
  std::uint64_t master_seed = 0;
  double split_ratio = 0.5;  // train fraction
  int t_prime = -1;          // synthetic samples; -1 = train-set size
  AugmentConfig augment;
  ClassifierConfig classifier;
  int threads = 1;
};

struct ExperimentResult {
  std::vector<ExperimentRow> rows;
  // mean/std per (data_scheme, label_scheme), baseline included as
  // ("none", "none").
  std::string summary_json;
  std::string csv;
};

// Per seed: split, train on the original train set (baseline) and on the
// train set plus t_prime synthetic samples (augmented), report test
// accuracies. Fully deterministic given the seeds.
ExperimentResult run_experiment(const Dataset& dataset,
                                const ExperimentConfig& config);

}  // namespace scmad

#endif  // SCMAD_EVAL_HARNESS_HPP
