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

#include "scmad.h"

#include <algorithm>
#include <filesystem>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "scmad/complexon.hpp"
#include "scmad/config.hpp"
#include "scmad/dataset_io.hpp"
#include "scmad/errors.hpp"
#include "scmad/estimation.hpp"
#include "scmad/eval_harness.hpp"
#include "scmad/mixup.hpp"
#include "scmad/pipeline.hpp"
#include "scmad/rng.hpp"
#include "scmad/sampling.hpp"
#include "scmad/util.hpp"

struct scmad_config {
  scmad::Config config;
};

struct scmad_dataset {
  scmad::Dataset dataset;
};

struct scmad_complexon_set {
  std::vector<scmad::StepComplexon> complexons;
  std::vector<std::string> ids;
  // Labels are optional; either empty or one per complexon.
  std::vector<std::vector<double>> labels;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& message) { g_last_error = message; }

template <typename Fn>
int wrap(Fn&& fn) {
  try {
    fn();
    return SCMAD_OK;
  } catch (const scmad::SolverError& e) {
    set_error(e.what());
    return SCMAD_ERR_SOLVER;
  } catch (const scmad::DataError& e) {
    set_error(e.what());
    return SCMAD_ERR_DATA;
  } catch (const std::invalid_argument& e) {  // Domain/Shape errors
    set_error(e.what());
    return SCMAD_ERR_USAGE;
  } catch (const std::length_error& e) {  // Capability errors
    set_error(e.what());
    return SCMAD_ERR_USAGE;
  } catch (const std::exception& e) {
    set_error(e.what());
    return SCMAD_ERR_INTERNAL;
  }
}

std::string config_string(const scmad::Config& config) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, value] : config.entries()) {
    if (!first) out << " ";
    out << key << "=" << value;
    first = false;
  }
  return out.str();
}

scmad::MixupConfig mixup_config_from(const scmad::Config& config) {
  scmad::MixupConfig mixup;
  mixup.epsilon_crossclass = config.get_double("epsilon", 0.1);
  mixup.lambda_grid_size = config.get_int("lambda_grid", 50);
  mixup.solver_tol = config.get_double("solver_tol", 1e-6);
  mixup.max_iterations = config.get_int("max_iter", 5000);
  mixup.eps_fuse = config.get_double("eps_fuse", 1e-5);
  mixup.sharpness_a = config.get_double("sharpness", 1.0);
  mixup.scheme =
      scmad::label_scheme_from_string(config.get("label_scheme", "cvx"));
  return mixup;
}

scmad::AugmentConfig augment_config_from(const scmad::Config& config) {
  scmad::AugmentConfig augment;
  augment.data_scheme =
      scmad::data_scheme_from_string(config.get("data_scheme", "cvx"));
  augment.label_scheme =
      scmad::label_scheme_from_string(config.get("label_scheme", "cvx"));
  augment.tau = config.get_double("tau", 0.5);
  augment.h = config.get_int("h", 0);
  augment.grid_n = config.get_int("grid", 0);
  augment.n_sample = config.get_int("n_sample", 0);
  augment.mixup = mixup_config_from(config);
  augment.mixup.scheme = augment.label_scheme;
  augment.threads = config.get_int("threads", 1);
  return augment;
}

void stamp_provenance(scmad::Dataset& dataset, const scmad::Config& config,
                      std::uint64_t seed) {
  dataset.provenance["tool_version"] = scmad::kVersion;
  dataset.provenance["config"] = config_string(config);
  dataset.provenance["seed"] = std::to_string(seed);
}

nlohmann::json labeled_complexon_json(const scmad_complexon_set& set,
                                      int index) {
  nlohmann::json obj =
      nlohmann::json::parse(scmad::complexon_to_json(set.complexons[index]));
  if (!set.ids.empty()) obj["id"] = set.ids[index];
  if (!set.labels.empty()) obj["label"] = set.labels[index];
  return obj;
}

}  // namespace

extern "C" {

const char* scmad_version(void) { return scmad::kVersion; }

const char* scmad_last_error(void) { return g_last_error.c_str(); }

scmad_config* scmad_config_new(void) { return new scmad_config(); }

void scmad_config_free(scmad_config* config) { delete config; }

int scmad_config_load(scmad_config* config, const char* path) {
  if (!config || !path) {
    set_error("null argument");
    return SCMAD_ERR_USAGE;
  }
  return wrap([&] { config->config.load_file(path); });
}

int scmad_config_set(scmad_config* config, const char* key,
                     const char* value) {
  if (!config || !key || !value) {
    set_error("null argument");
    return SCMAD_ERR_USAGE;
  }
  return wrap([&] { config->config.set(key, value); });
}

int scmad_dataset_read(const char* path, scmad_dataset** out) {
  if (!path || !out) {
    set_error("null argument");
    return SCMAD_ERR_USAGE;
  }
  return wrap([&] {
    auto dataset = std::make_unique<scmad_dataset>();
    dataset->dataset = scmad::read_dataset_jsonl(path);
    *out = dataset.release();
  });
}

int scmad_dataset_write(const scmad_dataset* dataset, const char* path) {
  if (!dataset || !path) {
    set_error("null argument");
    return SCMAD_ERR_USAGE;
  }
  return wrap([&] { scmad::write_dataset_jsonl(dataset->dataset, path); });
}

int scmad_dataset_size(const scmad_dataset* dataset, int* out) {
  if (!dataset || !out) {
    set_error("null argument");
    return SCMAD_ERR_USAGE;
  }
  *out = static_cast<int>(dataset->dataset.samples.size());
  return SCMAD_OK;
}

void scmad_dataset_free(scmad_dataset* dataset) { delete dataset; }

int scmad_synth_vr(const scmad_config* config, uint64_t seed,
                   scmad_dataset** out) {
  if (!config || !out) {
    set_error("null argument");
    return SCMAD_ERR_USAGE;
  }
  return wrap([&] {
    scmad::SynthVrConfig vr;
    vr.n_per_class = config->config.get_int("n_per_class", 50);
    vr.points_per_complex = config->config.get_int("points", 40);
    vr.eps = config->config.get_double("eps", 0.0);
    vr.noise = config->config.get_double("noise", 0.05);
    vr.target_edge_density =
        config->config.get_double("target_edge_density", 0.25);
    vr.max_dim = config->config.get_int("max_dim", 2);
    auto dataset = std::make_unique<scmad_dataset>();
    dataset->dataset = scmad::synth_vr_dataset(vr, seed);
    stamp_provenance(dataset->dataset, config->config, seed);
    *out = dataset.release();
  });
}

int scmad_complexon_set_read(const char* const* paths, int count,
                             scmad_complexon_set** out) {
  if (!paths || count < 1 || !out) {
    set_error("null or empty path list");
    return SCMAD_ERR_USAGE;
  }
  return wrap([&] {
    auto set = std::make_unique<scmad_complexon_set>();
    bool any_label = false;
    std::vector<std::optional<std::vector<double>>> labels;
    for (int i = 0; i < count; ++i) {
      const std::string text = scmad::read_text_file(paths[i]);
      set->complexons.push_back(scmad::complexon_from_json(text));
      set->ids.push_back(
          std::filesystem::path(paths[i]).stem().string());
      const nlohmann::json obj = nlohmann::json::parse(text);
      if (obj.contains("label")) {
        auto label = obj["label"].get<std::vector<double>>();
        scmad::validate_label(label);
        labels.emplace_back(std::move(label));
        any_label = true;
      } else {
        labels.emplace_back(std::nullopt);
      }
    }
    if (any_label) {
      for (int i = 0; i < count; ++i) {
        if (!labels[i]) {
          throw scmad::DataError(std::string("missing label in ") + paths[i]);
        }
        set->labels.push_back(*labels[i]);
      }
    }
    *out = set.release();
  });
}

int scmad_complexon_set_write(const scmad_complexon_set* set, const char* dir,
                              const char* prefix) {
  if (!set || !dir || !prefix) {
    set_error("null argument");
    return SCMAD_ERR_USAGE;
  }
  return wrap([&] {
    std::filesystem::create_directories(dir);
    for (std::size_t i = 0; i < set->complexons.size(); ++i) {
      const nlohmann::json obj =
          labeled_complexon_json(*set, static_cast<int>(i));
      const std::string path = (std::filesystem::path(dir) /
                                (std::string(prefix) + std::to_string(i) +
                                 ".json"))
                                   .string();
      scmad::write_text_file(path, obj.dump() + "\n");
    }
  });
}

int scmad_complexon_set_size(const scmad_complexon_set* set, int* out) {
  if (!set || !out) {
    set_error("null argument");
    return SCMAD_ERR_USAGE;
  }
  *out = static_cast<int>(set->complexons.size());
  return SCMAD_OK;
}

void scmad_complexon_set_free(scmad_complexon_set* set) { delete set; }

int scmad_estimate(const scmad_dataset* dataset, const scmad_config* config,
                   scmad_complexon_set** out) {
  if (!dataset || !config || !out) {
    set_error("null argument");
    return SCMAD_ERR_USAGE;
  }
  return wrap([&] {
    const double tau = config->config.get_double("tau", 0.5);
    const int h = config->config.get_int("h", 0);
    const int grid = config->config.get_int("grid", 0);
    const int threads = config->config.get_int("threads", 1);
    const auto& samples = dataset->dataset.samples;
    auto set = std::make_unique<scmad_complexon_set>();
    set->complexons.resize(samples.size());
    scmad::parallel_for(
        static_cast<int>(samples.size()), threads, [&](int i) {
          set->complexons[i] =
              scmad::estimate_complexon(samples[i].complex, tau, h);
        });
    if (grid > 0) set->complexons = scmad::harmonize(set->complexons, grid);
    for (const auto& sample : samples) {
      set->ids.push_back(sample.id);
      set->labels.push_back(sample.label);
    }
    *out = set.release();
  });
}

int scmad_mixup(const scmad_complexon_set* set, const scmad_config* config,
                uint64_t seed, int count, const char* clusterpath_json_path,
                scmad_complexon_set** mixtures) {
  if (!set || !config || !mixtures) {
    set_error("null argument");
    return SCMAD_ERR_USAGE;
  }
  return wrap([&] {
    if (set->complexons.size() < 2)
      throw scmad::DomainError("mixup needs >= 2 complexons");
    if (count < 1) throw scmad::DomainError("count must be >= 1");
    const auto data_scheme = scmad::data_scheme_from_string(
        config->config.get("data_scheme", "cvx"));
    if (data_scheme == scmad::DataScheme::kNone)
      throw scmad::DomainError("data scheme 'none' cannot produce mixtures");
    const scmad::MixupConfig mixup = mixup_config_from(config->config);
    const bool has_labels = !set->labels.empty();

    const std::vector<scmad::StepComplexon> ws =
        scmad::harmonize(set->complexons, config->config.get_int("grid", 0));

    std::optional<scmad::Clusterpath> path;
    const bool needs_path =
        data_scheme == scmad::DataScheme::kConvexCluster ||
        (has_labels && mixup.scheme == scmad::LabelScheme::kConvexCluster);
    if (needs_path) {
      std::vector<std::vector<double>> weights;
      if (has_labels) {
        weights = scmad::class_weights(set->labels, mixup.epsilon_crossclass);
      } else {
        weights.assign(ws.size(), std::vector<double>(ws.size(), 1.0));
      }
      path = scmad::solve_clusterpath(
          ws, weights, scmad::make_lambda_grid(mixup.lambda_grid_size), mixup);
      if (clusterpath_json_path) {
        const bool full =
            config->config.get("clusterpath_solutions", "false") == "true";
        scmad::write_text_file(clusterpath_json_path,
                               scmad::clusterpath_to_json(*path, full) + "\n");
      }
    }

    // Pair choices mirror the augmentation pipeline: discordant pairs for
    // linear mixup when labels are known, otherwise arbitrary pairs.
    std::vector<std::pair<int, int>> pairs;
    if (data_scheme == scmad::DataScheme::kLinear) {
      auto argmax = [](const std::vector<double>& y) {
        return static_cast<int>(std::max_element(y.begin(), y.end()) -
                                y.begin());
      };
      for (std::size_t i = 0; i < ws.size(); ++i) {
        for (std::size_t j = i + 1; j < ws.size(); ++j) {
          if (!has_labels ||
              argmax(set->labels[i]) != argmax(set->labels[j])) {
            pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
          }
        }
      }
      if (pairs.empty())
        throw scmad::DomainError("linear mixup needs discordant pairs");
    }

    auto result = std::make_unique<scmad_complexon_set>();
    for (int k = 0; k < count; ++k) {
      scmad::Rng rng = scmad::make_rng(scmad::derive_seed(seed, k));
      std::uniform_real_distribution<double> unif(0.0, 1.0);
      const double lambda = unif(rng);
      scmad::StepComplexon mixture;
      std::vector<double> label;
      if (data_scheme == scmad::DataScheme::kLinear) {
        std::uniform_int_distribution<std::size_t> pick(0, pairs.size() - 1);
        const auto [i, j] = pairs[pick(rng)];
        mixture = scmad::linear_mixup(ws[i], ws[j], lambda);
        if (has_labels) {
          label = mixup.scheme == scmad::LabelScheme::kConvexCluster
                      ? scmad::clusterpath_labels(*path, set->labels, lambda,
                                                  i)
                      : scmad::mix_labels(set->labels[i], set->labels[j],
                                          lambda, mixup.scheme,
                                          mixup.sharpness_a);
        }
      } else {
        std::uniform_int_distribution<int> pick(
            0, static_cast<int>(ws.size()) - 1);
        const int i = pick(rng);
        const auto selection = scmad::select_mixture(*path, lambda, i);
        mixture = *selection.complexon;
        if (has_labels) {
          label = scmad::clusterpath_labels(*path, set->labels, lambda, i);
        }
      }
      result->complexons.push_back(std::move(mixture));
      result->ids.push_back("mix-" + std::to_string(k));
      if (has_labels) result->labels.push_back(std::move(label));
    }
    *mixtures = result.release();
  });
}

int scmad_sample(const scmad_complexon_set* set, const scmad_config* config,
                 uint64_t seed, int n_nodes, int count_per_complexon,
                 scmad_dataset** out) {
  if (!set || !config || !out) {
    set_error("null argument");
    return SCMAD_ERR_USAGE;
  }
  return wrap([&] {
    if (count_per_complexon < 1)
      throw scmad::DomainError("count must be >= 1");
    const int threads = config->config.get_int("threads", 1);
    auto dataset = std::make_unique<scmad_dataset>();
    for (std::size_t i = 0; i < set->complexons.size(); ++i) {
      const scmad::StepComplexon& w = set->complexons[i];
      const int nodes = n_nodes > 0 ? n_nodes : w.resolution();
      const std::uint64_t item_seed = scmad::derive_seed(seed, i);
      const auto batch = scmad::sample_batch(w, nodes, count_per_complexon,
                                             item_seed, threads);
      const std::string hash = scmad::complexon_hash(w);
      for (int k = 0; k < count_per_complexon; ++k) {
        scmad::LabeledSample sample;
        sample.id = (set->ids.empty() ? "w" + std::to_string(i)
                                      : set->ids[i]) +
                    "-" + std::to_string(k);
        sample.complex = batch[k].complex;
        sample.label = set->labels.empty() ? std::vector<double>{1.0}
                                           : set->labels[i];
        sample.provenance["source_complexon"] = hash;
        sample.provenance["seed"] =
            std::to_string(scmad::derive_seed(item_seed, k));
        dataset->dataset.samples.push_back(std::move(sample));
      }
    }
    stamp_provenance(dataset->dataset, config->config, seed);
    *out = dataset.release();
  });
}

int scmad_augment(const scmad_dataset* dataset, const scmad_config* config,
                  uint64_t seed, int count, scmad_dataset** out) {
  if (!dataset || !config || !out) {
    set_error("null argument");
    return SCMAD_ERR_USAGE;
  }
  return wrap([&] {
    const scmad::AugmentConfig augment = augment_config_from(config->config);
    auto result = std::make_unique<scmad_dataset>();
    result->dataset =
        scmad::augment_dataset(dataset->dataset, augment, count, seed);
    stamp_provenance(result->dataset, config->config, seed);
    *out = result.release();
  });
}

int scmad_eval(const scmad_dataset* dataset, const scmad_config* config,
               const char* csv_path, const char* json_path) {
  if (!dataset || !config) {
    set_error("null argument");
    return SCMAD_ERR_USAGE;
  }
  return wrap([&] {
    scmad::ExperimentConfig experiment;
    experiment.num_seeds = config->config.get_int("seeds", 10);
    experiment.master_seed = config->config.get_u64("seed", 0);
    experiment.split_ratio = config->config.get_double("split", 0.5);
    experiment.t_prime = config->config.get_int("t_prime", -1);
    experiment.augment = augment_config_from(config->config);
    experiment.threads = config->config.get_int("threads", 1);
    experiment.classifier.learning_rate =
        config->config.get_double("learning_rate", 0.5);
    experiment.classifier.iterations = config->config.get_int("train_iter",
                                                              400);
    experiment.classifier.l2_penalty =
        config->config.get_double("l2_penalty", 1e-3);

    const std::string schemes = config->config.get("schemes", "");
    if (schemes.empty()) {
      experiment.scheme_pairs.emplace_back(
          config->config.get("data_scheme", "cvx"),
          config->config.get("label_scheme", "cvx"));
    } else if (schemes == "all") {
      for (const std::string& data : {"linear", "cvx"}) {
        for (const std::string& label :
             {"linear", "sigmoid", "logit", "cvx"}) {
          experiment.scheme_pairs.emplace_back(data, label);
        }
      }
    } else {
      std::istringstream in(schemes);
      std::string token;
      while (std::getline(in, token, ',')) {
        const auto colon = token.find(':');
        if (colon == std::string::npos)
          throw scmad::DomainError("schemes entries must be data:label");
        experiment.scheme_pairs.emplace_back(token.substr(0, colon),
                                             token.substr(colon + 1));
      }
    }

    const scmad::ExperimentResult result =
        scmad::run_experiment(dataset->dataset, experiment);
    if (csv_path) {
      std::string csv = "# tool_version=" + std::string(scmad::kVersion) +
                        " config=" + config_string(config->config) + "\n" +
                        result.csv;
      scmad::write_text_file(csv_path, csv);
    }
    if (json_path) {
      nlohmann::json obj = nlohmann::json::parse(result.summary_json);
      nlohmann::json wrapped;
      wrapped["provenance"] = {{"tool_version", scmad::kVersion},
                               {"config", config_string(config->config)}};
      wrapped["summary"] = obj;
      scmad::write_text_file(json_path, wrapped.dump(2) + "\n");
    }
  });
}

int scmad_check_bound(const scmad_complexon_set* set,
                      const scmad_config* config, uint64_t seed, int draws,
                      const char* report_path) {
  if (!set || !config) {
    set_error("null argument");
    return SCMAD_ERR_USAGE;
  }
  bool violated = false;
  const int rc = wrap([&] {
    if (set->complexons.size() < 2)
      throw scmad::DomainError("bound check needs >= 2 complexons");
    if (draws < 1) throw scmad::DomainError("draws must be >= 1");

    // Density evaluation is exponential in motif size, so very fine grids
    // are coarsened for the check (the bound is re-checked on the
    // coarsened set, which is itself a valid instance).
    const int max_resolution = config->config.get_int("check_resolution", 12);
    std::vector<scmad::StepComplexon> ws =
        scmad::harmonize(set->complexons, 0);
    if (ws.front().resolution() > max_resolution) {
      ws = scmad::harmonize(ws, max_resolution);
    }

    const scmad::MotifBank bank = scmad::MotifBank::standard();
    std::vector<int> usable;
    for (std::size_t m = 0; m < bank.motifs.size(); ++m) {
      if (bank.motifs[m].max_dim() >= 1 &&
          bank.motifs[m].max_dim() <= ws.front().max_dim()) {
        usable.push_back(static_cast<int>(m));
      }
    }
    if (usable.empty())
      throw scmad::DomainError("no motif fits the complexon dimension");

    nlohmann::json rows = nlohmann::json::array();
    double min_slack = 0.0;
    bool first = true;
    for (int draw = 0; draw < draws; ++draw) {
      scmad::Rng rng = scmad::make_rng(scmad::derive_seed(seed, draw));
      std::uniform_int_distribution<int> pick_motif(
          0, static_cast<int>(usable.size()) - 1);
      std::uniform_int_distribution<int> pick_j(
          0, static_cast<int>(ws.size()) - 1);
      std::exponential_distribution<double> expo(1.0);
      std::vector<double> gammas(ws.size());
      double total = 0.0;
      for (double& g : gammas) {
        g = expo(rng);
        total += g;
      }
      for (double& g : gammas) g /= total;
      const int j = pick_j(rng);
      const int motif = usable[pick_motif(rng)];

      const scmad::DensityBoundReport report =
          scmad::check_density_bound(ws, gammas, j, bank.motifs[motif]);
      const double slack = report.rhs - report.lhs;
      if (first || slack < min_slack) min_slack = slack;
      first = false;
      if (!report.holds) violated = true;

      nlohmann::json row;
      row["draw"] = draw;
      row["motif"] = bank.names[motif];
      row["j"] = j;
      row["lhs"] = report.lhs;
      row["rhs"] = report.rhs;
      row["holds"] = report.holds;
      rows.push_back(row);
    }
    if (report_path) {
      nlohmann::json obj;
      obj["provenance"] = {{"tool_version", scmad::kVersion},
                           {"seed", std::to_string(seed)},
                           {"config", config_string(config->config)}};
      obj["draws"] = rows;
      obj["min_slack"] = min_slack;
      obj["violations"] = violated;
      scmad::write_text_file(report_path, obj.dump(2) + "\n");
    }
  });
  if (rc != SCMAD_OK) return rc;
  if (violated) {
    set_error("density bound violated");
    return SCMAD_ERR_BOUND;
  }
  return SCMAD_OK;
}

int scmad_homdensity(const scmad_dataset* dataset, const char* csv_path) {
  if (!dataset || !csv_path) {
    set_error("null argument");
    return SCMAD_ERR_USAGE;
  }
  return wrap([&] {
    const scmad::MotifBank bank = scmad::MotifBank::standard();
    std::ostringstream csv;
    csv << "id";
    for (const std::string& name : bank.names) csv << "," << name;
    csv << "\n";
    for (const scmad::LabeledSample& sample : dataset->dataset.samples) {
      csv << sample.id;
      for (double value : scmad::featurize(sample.complex, bank)) {
        csv << "," << value;
      }
      csv << "\n";
    }
    scmad::write_text_file(csv_path, csv.str());
  });
}

}  // extern "C"
