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

#ifndef SCMAD_PIPELINE_HPP
#define SCMAD_PIPELINE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "scmad/complexon.hpp"
#include "scmad/dataset_io.hpp"
#include "scmad/mixup.hpp"

namespace scmad {

enum class DataScheme { kNone, kLinear, kConvexCluster };

DataScheme data_scheme_from_string(const std::string& name);
std::string data_scheme_name(DataScheme scheme);

struct AugmentConfig {
  DataScheme data_scheme = DataScheme::kConvexCluster;
  LabelScheme label_scheme = LabelScheme::kConvexCluster;
  double tau = 0.5;
  int h = 0;       // histogram bin size; 0 = ceil(sqrt(N)) per sample
  int grid_n = 0;  // common resolution; 0 = rounded mean of estimates
  int n_sample = 0;  // nodes per synthetic complex; 0 = mean of train set
  MixupConfig mixup;
  int threads = 1;
};

// Resamples all complexons to a common resolution and pads missing levels
// with zeros up to the common max dimension.
std::vector<StepComplexon> harmonize(const std::vector<StepComplexon>& ws,
                                     int grid_n);

// Estimation + harmonization for a whole dataset, plus the clusterpath
// when either scheme needs it. Built once and reused across draws.
struct AugmentContext {
  std::vector<StepComplexon> estimates;  // harmonized, one per sample
  std::vector<std::vector<double>> labels;
  std::vector<double> mean_label;
  std::optional<Clusterpath> path;
  int n_sample = 0;
};

AugmentContext build_augment_context(const Dataset& dataset,
                                     const AugmentConfig& config);

// Draws count synthetic labeled samples. Draw k derives its randomness
// from derive_seed(seed, k): lambda ~ Unif[0,1); linear mixup picks a
// class-discordant pair uniformly, clusterpath mixup picks an anchor
// index uniformly. Each synthetic complex records lambda, schemes, seed,
// and the source-mixture hash in its provenance.
std::vector<LabeledSample> augment_samples(const AugmentContext& context,
                                           const AugmentConfig& config,
                                           int count, std::uint64_t seed);

// Convenience wrapper: context build + augment + append to the dataset.
Dataset augment_dataset(const Dataset& dataset, const AugmentConfig& config,
                        int count, std::uint64_t seed);

// FNV-1a hash of a complexon's canonical JSON, hex-encoded (provenance).
std::string complexon_hash(const StepComplexon& w);

}  // namespace scmad

#endif  // SCMAD_PIPELINE_HPP
