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

#include "scmad/pipeline.hpp"

#include <algorithm>
#include <cmath>

#include "scmad/estimation.hpp"
#include "scmad/rng.hpp"
#include "scmad/sampling.hpp"
#include "scmad/util.hpp"

namespace scmad {

DataScheme data_scheme_from_string(const std::string& name) {
  if (name == "none") return DataScheme::kNone;
  if (name == "linear") return DataScheme::kLinear;
  if (name == "cvx" || name == "cvx-cluster") return DataScheme::kConvexCluster;
  throw DomainError("unknown data scheme: " + name);
}

std::string data_scheme_name(DataScheme scheme) {
  switch (scheme) {
    case DataScheme::kNone:
      return "none";
    case DataScheme::kLinear:
      return "linear";
    case DataScheme::kConvexCluster:
      return "cvx";
  }
  return "unknown";
}

std::vector<StepComplexon> harmonize(const std::vector<StepComplexon>& ws,
                                     int grid_n) {
  if (ws.empty()) return {};
  if (grid_n <= 0) {
    double mean = 0.0;
    for (const StepComplexon& w : ws) mean += w.resolution();
    grid_n = std::max(1, static_cast<int>(std::lround(mean / ws.size())));
  }
  int d_max = 1;
  for (const StepComplexon& w : ws) d_max = std::max(d_max, w.max_dim());

  std::vector<StepComplexon> out;
  out.reserve(ws.size());
  for (const StepComplexon& w : ws) {
    StepComplexon resampled = resample(w, grid_n);
    if (resampled.max_dim() == d_max) {
      out.push_back(std::move(resampled));
      continue;
    }
    // Pad missing levels with zeros.
    StepComplexon padded(grid_n, d_max);
    for (int c = 1; c <= resampled.max_dim(); ++c) {
      padded.mutable_level(c) = resampled.level(c);
    }
    out.push_back(std::move(padded));
  }
  return out;
}

std::string complexon_hash(const StepComplexon& w) {
  return to_hex(fnv1a64(complexon_to_json(w)));
}

AugmentContext build_augment_context(const Dataset& dataset,
                                     const AugmentConfig& config) {
  if (dataset.samples.empty()) throw DomainError("empty dataset");
  AugmentContext context;
  const int count = static_cast<int>(dataset.samples.size());

  std::vector<StepComplexon> raw(count);
  parallel_for(count, config.threads, [&](int i) {
    raw[i] = estimate_complexon(dataset.samples[i].complex, config.tau,
                                config.h);
  });
  context.estimates = harmonize(raw, config.grid_n);

  context.labels.reserve(count);
  for (const LabeledSample& sample : dataset.samples) {
    if (sample.label.size() != dataset.samples.front().label.size())
      throw DataError("samples disagree on the number of classes");
    context.labels.push_back(sample.label);
  }
  context.mean_label.assign(context.labels.front().size(), 0.0);
  for (const auto& label : context.labels) {
    for (std::size_t c = 0; c < label.size(); ++c) {
      context.mean_label[c] += label[c];
    }
  }
  for (double& v : context.mean_label) v /= count;

  double mean_nodes = 0.0;
  for (const LabeledSample& sample : dataset.samples) {
    mean_nodes += sample.complex.num_nodes();
  }
  context.n_sample = config.n_sample > 0
                         ? config.n_sample
                         : std::max(1, static_cast<int>(
                                           std::lround(mean_nodes / count)));

  const bool needs_path =
      config.data_scheme == DataScheme::kConvexCluster ||
      config.label_scheme == LabelScheme::kConvexCluster;
  if (needs_path) {
    const auto weights =
        class_weights(context.labels, config.mixup.epsilon_crossclass);
    const auto grid = make_lambda_grid(config.mixup.lambda_grid_size);
    context.path = solve_clusterpath(context.estimates, weights, grid,
                                     config.mixup);
  }
  return context;
}

namespace {

// Class-discordant index pairs in deterministic order.
std::vector<std::pair<int, int>> discordant_pairs(
    const std::vector<std::vector<double>>& labels) {
  auto argmax = [](const std::vector<double>& y) {
    return static_cast<int>(std::max_element(y.begin(), y.end()) - y.begin());
  };
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = i + 1; j < labels.size(); ++j) {
      if (argmax(labels[i]) != argmax(labels[j])) {
        pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  return pairs;
}

}  // namespace

std::vector<LabeledSample> augment_samples(const AugmentContext& context,
                                           const AugmentConfig& config,
                                           int count, std::uint64_t seed) {
  if (count < 0) throw DomainError("count must be >= 0");
  if (count == 0) return {};
  if (config.data_scheme == DataScheme::kNone)
    throw DomainError("data scheme 'none' cannot generate samples");

  std::vector<std::pair<int, int>> pairs;
  if (config.data_scheme == DataScheme::kLinear) {
    pairs = discordant_pairs(context.labels);
    if (pairs.empty())
      throw DomainError("linear mixup needs at least two classes");
  }
  const int t_count = static_cast<int>(context.estimates.size());

  std::vector<LabeledSample> synthetic(count);
  for (int k = 0; k < count; ++k) {
    const std::uint64_t draw_seed = derive_seed(seed, k);
    Rng rng = make_rng(draw_seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    const double lambda = unif(rng);

    StepComplexon mixture;
    std::vector<double> label;
    double lambda_used = lambda;

    if (config.data_scheme == DataScheme::kLinear) {
      std::uniform_int_distribution<std::size_t> pick(0, pairs.size() - 1);
      const auto [i, j] = pairs[pick(rng)];
      mixture = linear_mixup(context.estimates[i], context.estimates[j],
                             lambda);
      if (config.label_scheme == LabelScheme::kConvexCluster) {
        label = clusterpath_labels(*context.path, context.labels, lambda, i);
      } else {
        label = mix_labels(context.labels[i], context.labels[j], lambda,
                           config.label_scheme, config.mixup.sharpness_a);
      }
    } else {
      std::uniform_int_distribution<int> pick(0, t_count - 1);
      const int i = pick(rng);
      const MixtureSelection selection =
          select_mixture(*context.path, lambda, i);
      mixture = *selection.complexon;
      lambda_used = selection.lambda_used;
      if (config.label_scheme == LabelScheme::kConvexCluster) {
        label = clusterpath_labels(*context.path, context.labels, lambda, i);
      } else {
        // Analytic schemes over a multi-way mixture: blend the anchor's
        // label with the dataset mean, the clusterpath's lambda = 1 limit.
        label = mix_labels(context.labels[i], context.mean_label, lambda,
                           config.label_scheme, config.mixup.sharpness_a);
      }
    }

    LabeledSample sample;
    sample.id = "syn-" + std::to_string(k);
    sample.complex =
        sample_complex(mixture, context.n_sample, derive_seed(draw_seed, 1))
            .complex;
    sample.label = std::move(label);
    sample.provenance["lambda"] = std::to_string(lambda_used);
    sample.provenance["data_scheme"] = data_scheme_name(config.data_scheme);
    sample.provenance["label_scheme"] = label_scheme_name(config.label_scheme);
    sample.provenance["seed"] = std::to_string(draw_seed);
    sample.provenance["source_complexon"] = complexon_hash(mixture);
    synthetic[k] = std::move(sample);
  }
  return synthetic;
}

Dataset augment_dataset(const Dataset& dataset, const AugmentConfig& config,
                        int count, std::uint64_t seed) {
  const AugmentContext context = build_augment_context(dataset, config);
  Dataset augmented = dataset;
  for (LabeledSample& sample : augment_samples(context, config, count, seed)) {
    augmented.samples.push_back(std::move(sample));
  }
  return augmented;
}

}  // namespace scmad
