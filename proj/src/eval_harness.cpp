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

#include "scmad/eval_harness.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

#include "json.hpp"
#include "scmad/rng.hpp"
#include "scmad/util.hpp"

namespace scmad {

MotifBank MotifBank::standard() {
  MotifBank bank;
  auto push = [&bank](const std::string& name, int nodes,
                      const std::vector<Simplex>& simplices) {
    SimplicialComplex k(nodes);
    for (const Simplex& s : simplices) k.add(s);
    bank.names.push_back(name);
    bank.motifs.push_back(std::move(k));
  };
  push("node", 1, {});
  push("edge", 2, {{0, 1}});
  push("path2", 3, {{0, 1}, {1, 2}});
  push("triangle_hollow", 3, {{0, 1}, {0, 2}, {1, 2}});
  push("triangle_filled", 3, {{0, 1}, {0, 2}, {1, 2}, {0, 1, 2}});
  push("triangles_shared_edge", 4,
       {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {0, 1, 2}, {1, 2, 3}});
  return bank;
}

std::vector<double> featurize(const SimplicialComplex& k,
                              const MotifBank& bank) {
  std::vector<double> features;
  features.reserve(bank.motifs.size());
  for (const SimplicialComplex& motif : bank.motifs) {
    features.push_back(homomorphism_density(motif, k));
  }
  return features;
}

SoftClassifier::SoftClassifier(int num_features, int num_classes)
    : num_features_(num_features), num_classes_(num_classes) {
  if (num_features < 1 || num_classes < 2)
    throw DomainError("classifier needs >= 1 feature and >= 2 classes");
  weights_.assign(num_classes, std::vector<double>(num_features + 1, 0.0));
}

namespace {

std::vector<double> softmax(const std::vector<double>& logits) {
  const double max_logit = *std::max_element(logits.begin(), logits.end());
  std::vector<double> probs(logits.size());
  double sum = 0.0;
  for (std::size_t c = 0; c < logits.size(); ++c) {
    probs[c] = std::exp(logits[c] - max_logit);
    sum += probs[c];
  }
  for (double& p : probs) p /= sum;
  return probs;
}

}  // namespace

std::vector<double> SoftClassifier::predict_proba(
    const std::vector<double>& features) const {
  std::vector<double> logits(num_classes_, 0.0);
  for (int c = 0; c < num_classes_; ++c) {
    const std::vector<double>& w = weights_[c];
    double z = w[num_features_];  // bias
    for (int f = 0; f < num_features_; ++f) z += w[f] * features[f];
    logits[c] = z;
  }
  return softmax(logits);
}

int SoftClassifier::predict(const std::vector<double>& features) const {
  const std::vector<double> probs = predict_proba(features);
  return static_cast<int>(std::max_element(probs.begin(), probs.end()) -
                          probs.begin());
}

double SoftClassifier::loss(const std::vector<std::vector<double>>& features,
                            const std::vector<std::vector<double>>& targets,
                            double l2_penalty) const {
  double total = 0.0;
  for (std::size_t i = 0; i < features.size(); ++i) {
    const std::vector<double> probs = predict_proba(features[i]);
    for (int c = 0; c < num_classes_; ++c) {
      if (targets[i][c] > 0.0) {
        total -= targets[i][c] * std::log(std::max(probs[c], 1e-300));
      }
    }
  }
  total /= static_cast<double>(features.size());
  double reg = 0.0;
  for (const auto& w : weights_) {
    for (double v : w) reg += v * v;
  }
  return total + 0.5 * l2_penalty * reg;
}

std::vector<double> SoftClassifier::loss_gradient(
    const std::vector<std::vector<double>>& features,
    const std::vector<std::vector<double>>& targets,
    double l2_penalty) const {
  const int stride = num_features_ + 1;
  std::vector<double> gradient(num_classes_ * stride, 0.0);
  for (std::size_t i = 0; i < features.size(); ++i) {
    const std::vector<double> probs = predict_proba(features[i]);
    for (int c = 0; c < num_classes_; ++c) {
      const double delta = probs[c] - targets[i][c];
      for (int f = 0; f < num_features_; ++f) {
        gradient[c * stride + f] += delta * features[i][f];
      }
      gradient[c * stride + num_features_] += delta;  // bias
    }
  }
  const double inv_n = 1.0 / static_cast<double>(features.size());
  for (int c = 0; c < num_classes_; ++c) {
    for (int f = 0; f < stride; ++f) {
      gradient[c * stride + f] =
          gradient[c * stride + f] * inv_n + l2_penalty * weights_[c][f];
    }
  }
  return gradient;
}

double SoftClassifier::train(const std::vector<std::vector<double>>& features,
                             const std::vector<std::vector<double>>& targets,
                             const ClassifierConfig& config) {
  if (features.empty() || features.size() != targets.size())
    throw DomainError("features and targets must match and be nonempty");
  std::vector<double> class_mass(num_classes_, 0.0);
  for (const auto& target : targets) {
    for (int c = 0; c < num_classes_; ++c) class_mass[c] += target[c];
  }
  const int classes_present = static_cast<int>(
      std::count_if(class_mass.begin(), class_mass.end(),
                    [](double m) { return m > 0.0; }));
  if (classes_present < 2)
    throw DomainError("training targets carry a single class");

  const int stride = num_features_ + 1;
  double current = loss(features, targets, config.l2_penalty);
  double step = config.learning_rate;
  for (int iter = 0; iter < config.iterations; ++iter) {
    const std::vector<double> gradient =
        loss_gradient(features, targets, config.l2_penalty);
    const std::vector<std::vector<double>> saved = weights_;
    // Backtracking keeps the loss trajectory non-increasing.
    for (;;) {
      for (int c = 0; c < num_classes_; ++c) {
        for (int f = 0; f < stride; ++f) {
          weights_[c][f] = saved[c][f] - step * gradient[c * stride + f];
        }
      }
      const double candidate = loss(features, targets, config.l2_penalty);
      if (candidate <= current || step < 1e-12) {
        current = candidate;
        break;
      }
      weights_ = saved;
      step *= 0.5;
    }
  }
  return current;
}

double hard_accuracy(const SoftClassifier& model,
                     const std::vector<std::vector<double>>& features,
                     const std::vector<std::vector<double>>& targets) {
  if (features.empty()) return 0.0;
  int correct = 0;
  for (std::size_t i = 0; i < features.size(); ++i) {
    const int truth = static_cast<int>(
        std::max_element(targets[i].begin(), targets[i].end()) -
        targets[i].begin());
    if (model.predict(features[i]) == truth) ++correct;
  }
  return static_cast<double>(correct) / features.size();
}

double calibrate_eps(const std::vector<std::vector<Point2>>& clouds,
                     double target_edge_density) {
  std::vector<double> distances;
  for (const auto& points : clouds) {
    for (std::size_t i = 0; i < points.size(); ++i) {
      for (std::size_t j = i + 1; j < points.size(); ++j) {
        const double dx = points[i][0] - points[j][0];
        const double dy = points[i][1] - points[j][1];
        distances.push_back(std::sqrt(dx * dx + dy * dy));
      }
    }
  }
  if (distances.empty()) throw DomainError("no pairwise distances");
  std::sort(distances.begin(), distances.end());
  const std::size_t rank = std::min(
      distances.size() - 1,
      static_cast<std::size_t>(target_edge_density * distances.size()));
  return distances[rank];
}

Dataset synth_vr_dataset(const SynthVrConfig& config, std::uint64_t seed) {
  Dataset dataset;
  if (config.n_per_class == 0) return dataset;
  if (config.n_per_class < 0 || config.points_per_complex < 2)
    throw DomainError("invalid synth-vr sizes");

  const double pi = std::acos(-1.0);
  std::vector<std::vector<Point2>> clouds;
  std::vector<int> classes;
  for (int cls = 0; cls < 2; ++cls) {
    for (int s = 0; s < config.n_per_class; ++s) {
      Rng rng = make_rng(derive_seed(seed, cls * config.n_per_class + s));
      std::uniform_real_distribution<double> angle(0.0, 2.0 * pi);
      std::normal_distribution<double> noise(0.0, config.noise);
      std::vector<Point2> points(config.points_per_complex);
      for (Point2& p : points) {
        const double t = angle(rng);
        if (cls == 0) {
          // Unit-diameter circle with radial noise.
          const double r = 0.5 + noise(rng);
          p = {r * std::cos(t), r * std::sin(t)};
        } else {
          // Lemniscate (cos t, sin t cos t) at unit diameter, isotropic
          // noise (radial noise degenerates at the self-intersection).
          p = {0.5 * std::cos(t) + noise(rng),
               0.5 * std::sin(t) * std::cos(t) + noise(rng)};
        }
      }
      clouds.push_back(std::move(points));
      classes.push_back(cls);
    }
  }

  const double eps = config.eps > 0.0
                         ? config.eps
                         : calibrate_eps(clouds, config.target_edge_density);
  for (std::size_t i = 0; i < clouds.size(); ++i) {
    LabeledSample sample;
    sample.id = (classes[i] == 0 ? "circle-" : "eight-") +
                std::to_string(i % config.n_per_class);
    sample.complex = vietoris_rips(clouds[i], eps, config.max_dim);
    sample.label = classes[i] == 0 ? std::vector<double>{1.0, 0.0}
                                   : std::vector<double>{0.0, 1.0};
    dataset.samples.push_back(std::move(sample));
  }
  dataset.provenance["eps"] = std::to_string(eps);
  dataset.provenance["seed"] = std::to_string(seed);
  return dataset;
}

namespace {

struct Split {
  std::vector<int> train;
  std::vector<int> test;
};

Split make_split(int count, double train_fraction, Rng& rng) {
  std::vector<int> order(count);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  const int train_count = std::max(
      1, std::min(count - 1,
                  static_cast<int>(std::lround(train_fraction * count))));
  Split split;
  split.train.assign(order.begin(), order.begin() + train_count);
  split.test.assign(order.begin() + train_count, order.end());
  std::sort(split.train.begin(), split.train.end());
  std::sort(split.test.begin(), split.test.end());
  return split;
}

}  // namespace

ExperimentResult run_experiment(const Dataset& dataset,
                                const ExperimentConfig& config) {
  if (dataset.samples.empty()) throw DomainError("empty dataset");
  const int count = static_cast<int>(dataset.samples.size());
  const int num_classes =
      static_cast<int>(dataset.samples.front().label.size());
  const MotifBank bank = MotifBank::standard();

  // Motif features of the original samples are shared across seeds.
  std::vector<std::vector<double>> all_features(count);
  parallel_for(count, config.threads, [&](int i) {
    all_features[i] = featurize(dataset.samples[i].complex, bank);
  });

  ExperimentResult result;
  std::ostringstream csv;
  csv << "data_scheme,label_scheme,seed,baseline_acc,augmented_acc\n";

  for (int s = 0; s < config.num_seeds; ++s) {
    const std::uint64_t seed = derive_seed(config.master_seed, s);
    Rng rng = make_rng(seed);
    const Split split = make_split(count, config.split_ratio, rng);

    auto gather = [&](const std::vector<int>& indices,
                      std::vector<std::vector<double>>& features,
                      std::vector<std::vector<double>>& targets) {
      for (int i : indices) {
        features.push_back(all_features[i]);
        targets.push_back(dataset.samples[i].label);
      }
    };
    std::vector<std::vector<double>> train_x, train_y, test_x, test_y;
    gather(split.train, train_x, train_y);
    gather(split.test, test_x, test_y);

    SoftClassifier baseline(static_cast<int>(bank.motifs.size()), num_classes);
    baseline.train(train_x, train_y, config.classifier);
    const double baseline_acc = hard_accuracy(baseline, test_x, test_y);

    Dataset train_set;
    for (int i : split.train) train_set.samples.push_back(dataset.samples[i]);
    const int t_prime = config.t_prime >= 0
                            ? config.t_prime
                            : static_cast<int>(split.train.size());

    for (const auto& [data_name, label_name] : config.scheme_pairs) {
      double augmented_acc = baseline_acc;
      if (data_scheme_from_string(data_name) != DataScheme::kNone &&
          t_prime > 0) {
        AugmentConfig augment = config.augment;
        augment.data_scheme = data_scheme_from_string(data_name);
        augment.label_scheme = label_scheme_from_string(label_name);
        augment.threads = config.threads;
        const AugmentContext context =
            build_augment_context(train_set, augment);
        const std::vector<LabeledSample> synthetic =
            augment_samples(context, augment, t_prime, derive_seed(seed, 17));

        std::vector<std::vector<double>> aug_x = train_x;
        std::vector<std::vector<double>> aug_y = train_y;
        for (const LabeledSample& sample : synthetic) {
          aug_x.push_back(featurize(sample.complex, bank));
          aug_y.push_back(sample.label);
        }
        SoftClassifier augmented_model(static_cast<int>(bank.motifs.size()),
                                       num_classes);
        augmented_model.train(aug_x, aug_y, config.classifier);
        augmented_acc = hard_accuracy(augmented_model, test_x, test_y);
      }

      ExperimentRow row;
      row.data_scheme = data_name;
      row.label_scheme = label_name;
      row.seed = seed;
      row.baseline_acc = baseline_acc;
      row.augmented_acc = augmented_acc;
      csv << data_name << "," << label_name << "," << seed << ","
          << baseline_acc << "," << augmented_acc << "\n";
      result.rows.push_back(std::move(row));
    }
  }

  // Summary: mean and sample std per scheme pair, baseline as
  // ("none", "none").
  nlohmann::json summary = nlohmann::json::object();
  auto stats = [](const std::vector<double>& values) {
    nlohmann::json entry;
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= values.size();
    double var = 0.0;
    for (double v : values) var += (v - mean) * (v - mean);
    entry["mean"] = mean;
    entry["std"] =
        values.size() > 1 ? std::sqrt(var / (values.size() - 1)) : 0.0;
    entry["count"] = values.size();
    return entry;
  };
  {
    std::vector<double> baseline_values;
    std::map<std::string, std::vector<double>> per_pair;
    for (const ExperimentRow& row : result.rows) {
      per_pair[row.data_scheme + "/" + row.label_scheme].push_back(
          row.augmented_acc);
    }
    for (int s = 0; s < config.num_seeds; ++s) {
      // One baseline value per seed, shared across scheme pairs.
      const std::size_t stride = config.scheme_pairs.size();
      if (!result.rows.empty() && stride > 0) {
        baseline_values.push_back(result.rows[s * stride].baseline_acc);
      }
    }
    if (!baseline_values.empty()) summary["none/none"] = stats(baseline_values);
    for (const auto& [key, values] : per_pair) summary[key] = stats(values);
  }
  result.summary_json = summary.dump();
  result.csv = csv.str();
  return result;
}

}  // namespace scmad
