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

// Command-line front end for the SC-MAD shared library. Talks to the core
// exclusively through the C API in scmad.h.

#include <cstdint>
#include <iostream>
#include <memory>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "scmad.h"

namespace {

struct ConfigHandle {
  scmad_config* ptr = scmad_config_new();
  ~ConfigHandle() { scmad_config_free(ptr); }
};

struct DatasetHandle {
  scmad_dataset* ptr = nullptr;
  ~DatasetHandle() { scmad_dataset_free(ptr); }
};

struct ComplexonSetHandle {
  scmad_complexon_set* ptr = nullptr;
  ~ComplexonSetHandle() { scmad_complexon_set_free(ptr); }
};

int fail(int status) {
  std::cerr << "error: " << scmad_last_error() << "\n";
  return status;
}

// Common per-subcommand state: seed, config file, and key=value overrides
// collected from flags. Explicit flags win over config-file values, so
// overrides are applied before the file is loaded.
struct Common {
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::string config_path;
  std::vector<std::pair<std::string, std::string>> overrides;

  void attach(CLI::App* cmd) {
    cmd->add_option("--seed", seed, "Master RNG seed (default: entropy)")
        ->each([this](const std::string&) { seed_given = true; });
    cmd->add_option("--config", config_path,
                    "Flat key=value config file (flags take precedence)");
    cmd->add_option_function<std::vector<std::string>>(
        "--set",
        [this](const std::vector<std::string>& items) {
          for (const std::string& item : items) {
            const auto eq = item.find('=');
            if (eq == std::string::npos) {
              throw CLI::ValidationError("--set expects key=value");
            }
            overrides.emplace_back(item.substr(0, eq), item.substr(eq + 1));
          }
        },
        "Config override key=value (repeatable)");
  }

  void add_key_flag(CLI::App* cmd, const std::string& flag,
                    const std::string& key, const std::string& help) {
    cmd->add_option_function<std::string>(
        flag,
        [this, key](const std::string& value) {
          overrides.emplace_back(key, value);
        },
        help);
  }

  int build(scmad_config* config) {
    for (const auto& [key, value] : overrides) {
      if (int rc = scmad_config_set(config, key.c_str(), value.c_str())) {
        return rc;
      }
    }
    if (!config_path.empty()) {
      if (int rc = scmad_config_load(config, config_path.c_str())) return rc;
    }
    if (!seed_given) {
      std::random_device entropy;
      seed = (static_cast<std::uint64_t>(entropy()) << 32) ^ entropy();
      std::cerr << "note: no --seed given, using " << seed << "\n";
    }
    // The seed participates in provenance stamping.
    return scmad_config_set(config, "seed", std::to_string(seed).c_str());
  }
};

void add_augment_flags(CLI::App* cmd, Common& common) {
  common.add_key_flag(cmd, "--data-scheme", "data_scheme",
                      "Data mixup scheme: linear|cvx");
  common.add_key_flag(cmd, "--label-scheme", "label_scheme",
                      "Label mixup scheme: linear|sigmoid|logit|cvx");
  common.add_key_flag(cmd, "--tau", "tau", "Degree-sum dimension decay");
  common.add_key_flag(cmd, "--bin-size", "h",
                      "Histogram bin size (0 = sqrt rule)");
  common.add_key_flag(cmd, "--grid", "grid",
                      "Common complexon grid size (0 = mean resolution)");
  common.add_key_flag(cmd, "--n-sample", "n_sample",
                      "Nodes per synthetic complex (0 = dataset mean)");
  common.add_key_flag(cmd, "--epsilon", "epsilon",
                      "Cross-class fusion weight");
  common.add_key_flag(cmd, "--eps-fuse", "eps_fuse", "Fusion threshold");
  common.add_key_flag(cmd, "--lambda-grid", "lambda_grid",
                      "Clusterpath lambda grid size");
  common.add_key_flag(cmd, "--solver-tol", "solver_tol",
                      "ADMM residual tolerance");
  common.add_key_flag(cmd, "--max-iter", "max_iter",
                      "ADMM iteration cap per lambda");
  common.add_key_flag(cmd, "--sharpness", "sharpness",
                      "Sigmoid/logit sharpness a");
  common.add_key_flag(cmd, "--threads", "threads", "Worker thread count");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simplicial complex data augmentation via complexon mixup"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(scmad_version()));

  // synth-vr
  auto* synth = app.add_subcommand(
      "synth-vr", "Generate the synthetic Vietoris-Rips dataset");
  Common synth_common;
  synth_common.attach(synth);
  std::string synth_out;
  synth->add_option("--out", synth_out, "Output JSON-lines dataset")
      ->required();
  synth_common.add_key_flag(synth, "--n-per-class", "n_per_class",
                            "Complexes per class");
  synth_common.add_key_flag(synth, "--points", "points",
                            "Points per complex");
  synth_common.add_key_flag(synth, "--eps", "eps",
                            "VR radius (0 = calibrate)");
  synth_common.add_key_flag(synth, "--noise", "noise", "Point noise sigma");
  synth_common.add_key_flag(synth, "--target-edge-density",
                            "target_edge_density",
                            "Edge density target for calibration");
  synth_common.add_key_flag(synth, "--max-dim", "max_dim",
                            "Top simplex dimension");

  // estimate
  auto* estimate = app.add_subcommand(
      "estimate", "Estimate one complexon per dataset sample");
  Common est_common;
  est_common.attach(estimate);
  std::string est_in, est_dir, est_prefix = "w";
  estimate->add_option("--in", est_in, "Input JSON-lines dataset")
      ->required();
  estimate->add_option("--out-dir", est_dir, "Output directory")->required();
  estimate->add_option("--prefix", est_prefix, "Output file prefix");
  est_common.add_key_flag(estimate, "--tau", "tau",
                          "Degree-sum dimension decay");
  est_common.add_key_flag(estimate, "--bin-size", "h",
                          "Histogram bin size (0 = sqrt rule)");
  est_common.add_key_flag(estimate, "--grid", "grid",
                          "Resample estimates to this grid size");
  est_common.add_key_flag(estimate, "--threads", "threads",
                          "Worker thread count");

  // mixup
  auto* mixup = app.add_subcommand(
      "mixup", "Draw complexon mixtures from a complexon set");
  Common mix_common;
  mix_common.attach(mixup);
  std::vector<std::string> mix_in;
  std::string mix_dir, mix_prefix = "mix", mix_path_out;
  int mix_count = 1;
  mixup->add_option("--in", mix_in, "Input complexon JSON files (>= 2)")
      ->required()
      ->expected(-2);
  mixup->add_option("--out-dir", mix_dir, "Output directory")->required();
  mixup->add_option("--prefix", mix_prefix, "Output file prefix");
  mixup->add_option("--count", mix_count, "Number of mixtures");
  mixup->add_option("--clusterpath-out", mix_path_out,
                    "Clusterpath export JSON path");
  add_augment_flags(mixup, mix_common);

  // sample
  auto* sample = app.add_subcommand(
      "sample", "Sample complexes from complexons");
  Common sample_common;
  sample_common.attach(sample);
  std::vector<std::string> sample_in;
  std::string sample_out;
  int sample_nodes = 0, sample_count = 1;
  sample->add_option("--in", sample_in, "Input complexon JSON files")
      ->required()
      ->expected(-1);
  sample->add_option("--out", sample_out, "Output JSON-lines dataset")
      ->required();
  sample->add_option("--n-nodes", sample_nodes,
                     "Nodes per complex (0 = complexon resolution)");
  sample->add_option("--count", sample_count, "Complexes per complexon");
  sample_common.add_key_flag(sample, "--threads", "threads",
                             "Worker thread count");

  // augment
  auto* augment = app.add_subcommand(
      "augment", "Append synthetic samples to a dataset end to end");
  Common aug_common;
  aug_common.attach(augment);
  std::string aug_in, aug_out;
  int aug_count = 0;
  augment->add_option("--in", aug_in, "Input JSON-lines dataset")->required();
  augment->add_option("--out", aug_out, "Output JSON-lines dataset")
      ->required();
  augment->add_option("--count", aug_count, "Synthetic samples to add")
      ->required();
  add_augment_flags(augment, aug_common);

  // eval
  auto* eval = app.add_subcommand(
      "eval", "Baseline vs augmented classification experiment");
  Common eval_common;
  eval_common.attach(eval);
  std::string eval_in, eval_csv, eval_json;
  eval->add_option("--in", eval_in, "Input JSON-lines dataset")->required();
  eval->add_option("--csv", eval_csv, "Per-seed metrics CSV path");
  eval->add_option("--json", eval_json, "Summary JSON path");
  eval_common.add_key_flag(eval, "--seeds", "seeds", "Number of seeds");
  eval_common.add_key_flag(eval, "--split", "split", "Train fraction");
  eval_common.add_key_flag(eval, "--t-prime", "t_prime",
                           "Synthetic samples per run (-1 = train size)");
  eval_common.add_key_flag(eval, "--schemes", "schemes",
                           "Comma list of data:label pairs, or 'all'");
  eval_common.add_key_flag(eval, "--learning-rate", "learning_rate",
                           "Classifier step size");
  eval_common.add_key_flag(eval, "--train-iter", "train_iter",
                           "Classifier iterations");
  eval_common.add_key_flag(eval, "--l2-penalty", "l2_penalty",
                           "Classifier L2 penalty");
  add_augment_flags(eval, eval_common);

  // check-bound
  auto* check = app.add_subcommand(
      "check-bound", "Check the structural-preservation bound on mixtures");
  Common check_common;
  check_common.attach(check);
  std::vector<std::string> check_in;
  std::string check_report;
  int check_draws = 100;
  check->add_option("--in", check_in, "Input complexon JSON files (>= 2)")
      ->required()
      ->expected(-2);
  check->add_option("--draws", check_draws, "Random mixtures to test");
  check->add_option("--report", check_report, "JSON report path");
  check_common.add_key_flag(check, "--check-resolution", "check_resolution",
                            "Grid coarsening cap for density evaluation");

  // homdensity
  auto* homdensity = app.add_subcommand(
      "homdensity", "Homomorphism density table (motifs x complexes)");
  std::string hom_in, hom_out;
  homdensity->add_option("--in", hom_in, "Input JSON-lines dataset")
      ->required();
  homdensity->add_option("--out", hom_out, "Output CSV path")->required();

  CLI11_PARSE(app, argc, argv);

  auto paths_of = [](const std::vector<std::string>& items) {
    std::vector<const char*> out;
    out.reserve(items.size());
    for (const std::string& item : items) out.push_back(item.c_str());
    return out;
  };

  if (*synth) {
    ConfigHandle config;
    if (int rc = synth_common.build(config.ptr)) return fail(rc);
    DatasetHandle dataset;
    if (int rc = scmad_synth_vr(config.ptr, synth_common.seed, &dataset.ptr))
      return fail(rc);
    if (int rc = scmad_dataset_write(dataset.ptr, synth_out.c_str()))
      return fail(rc);
    return 0;
  }

  if (*estimate) {
    ConfigHandle config;
    if (int rc = est_common.build(config.ptr)) return fail(rc);
    DatasetHandle dataset;
    if (int rc = scmad_dataset_read(est_in.c_str(), &dataset.ptr))
      return fail(rc);
    ComplexonSetHandle set;
    if (int rc = scmad_estimate(dataset.ptr, config.ptr, &set.ptr))
      return fail(rc);
    if (int rc = scmad_complexon_set_write(set.ptr, est_dir.c_str(),
                                           est_prefix.c_str()))
      return fail(rc);
    return 0;
  }

  if (*mixup) {
    ConfigHandle config;
    if (int rc = mix_common.build(config.ptr)) return fail(rc);
    ComplexonSetHandle set;
    const auto paths = paths_of(mix_in);
    if (int rc = scmad_complexon_set_read(
            paths.data(), static_cast<int>(paths.size()), &set.ptr))
      return fail(rc);
    ComplexonSetHandle mixtures;
    if (int rc = scmad_mixup(
            set.ptr, config.ptr, mix_common.seed, mix_count,
            mix_path_out.empty() ? nullptr : mix_path_out.c_str(),
            &mixtures.ptr))
      return fail(rc);
    if (int rc = scmad_complexon_set_write(mixtures.ptr, mix_dir.c_str(),
                                           mix_prefix.c_str()))
      return fail(rc);
    return 0;
  }

  if (*sample) {
    ConfigHandle config;
    if (int rc = sample_common.build(config.ptr)) return fail(rc);
    ComplexonSetHandle set;
    const auto paths = paths_of(sample_in);
    if (int rc = scmad_complexon_set_read(
            paths.data(), static_cast<int>(paths.size()), &set.ptr))
      return fail(rc);
    DatasetHandle dataset;
    if (int rc = scmad_sample(set.ptr, config.ptr, sample_common.seed,
                              sample_nodes, sample_count, &dataset.ptr))
      return fail(rc);
    if (int rc = scmad_dataset_write(dataset.ptr, sample_out.c_str()))
      return fail(rc);
    return 0;
  }

  if (*augment) {
    ConfigHandle config;
    if (int rc = aug_common.build(config.ptr)) return fail(rc);
    DatasetHandle dataset;
    if (int rc = scmad_dataset_read(aug_in.c_str(), &dataset.ptr))
      return fail(rc);
    DatasetHandle augmented;
    if (int rc = scmad_augment(dataset.ptr, config.ptr, aug_common.seed,
                               aug_count, &augmented.ptr))
      return fail(rc);
    if (int rc = scmad_dataset_write(augmented.ptr, aug_out.c_str()))
      return fail(rc);
    return 0;
  }

  if (*eval) {
    ConfigHandle config;
    if (int rc = eval_common.build(config.ptr)) return fail(rc);
    DatasetHandle dataset;
    if (int rc = scmad_dataset_read(eval_in.c_str(), &dataset.ptr))
      return fail(rc);
    if (int rc = scmad_eval(dataset.ptr, config.ptr,
                            eval_csv.empty() ? nullptr : eval_csv.c_str(),
                            eval_json.empty() ? nullptr : eval_json.c_str()))
      return fail(rc);
    return 0;
  }

  if (*check) {
    ConfigHandle config;
    if (int rc = check_common.build(config.ptr)) return fail(rc);
    ComplexonSetHandle set;
    const auto paths = paths_of(check_in);
    if (int rc = scmad_complexon_set_read(
            paths.data(), static_cast<int>(paths.size()), &set.ptr))
      return fail(rc);
    if (int rc = scmad_check_bound(
            set.ptr, config.ptr, check_common.seed, check_draws,
            check_report.empty() ? nullptr : check_report.c_str()))
      return fail(rc);
    return 0;
  }

  if (*homdensity) {
    DatasetHandle dataset;
    if (int rc = scmad_dataset_read(hom_in.c_str(), &dataset.ptr))
      return fail(rc);
    if (int rc = scmad_homdensity(dataset.ptr, hom_out.c_str()))
      return fail(rc);
    return 0;
  }

  return SCMAD_ERR_USAGE;
}
