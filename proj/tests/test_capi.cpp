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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "scmad.h"

namespace {

// Scratch directory fixture; removed on destruction.
struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("scmad_capi_" + std::to_string(::getpid()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string file(const std::string& name) const {
    return (path / name).string();
  }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

}  // namespace

TEST_CASE("version and null-argument handling") {
  CHECK(std::string(scmad_version()) == "0.1.0");
  CHECK(scmad_dataset_read(nullptr, nullptr) == SCMAD_ERR_USAGE);
  CHECK(std::string(scmad_last_error()).size() > 0);
  CHECK(scmad_config_set(nullptr, "a", "b") == SCMAD_ERR_USAGE);
}

TEST_CASE("data errors carry the data status code") {
  TempDir dir;
  const std::string bad = dir.file("bad.jsonl");
  std::ofstream(bad) << "{\"id\":\"x\",\"n\":3,\"simplices\":[[0,1,2]],"
                        "\"label\":[1.0]}\n";
  scmad_dataset* dataset = nullptr;
  CHECK(scmad_dataset_read(bad.c_str(), &dataset) == SCMAD_ERR_DATA);
  CHECK(std::string(scmad_last_error()).find("line 1") != std::string::npos);

  CHECK(scmad_dataset_read(dir.file("missing.jsonl").c_str(), &dataset) ==
        SCMAD_ERR_DATA);
}

TEST_CASE("end-to-end pipeline through the C API") {
  TempDir dir;
  scmad_config* config = scmad_config_new();
  REQUIRE(scmad_config_set(config, "n_per_class", "6") == SCMAD_OK);
  REQUIRE(scmad_config_set(config, "points", "15") == SCMAD_OK);

  scmad_dataset* dataset = nullptr;
  REQUIRE(scmad_synth_vr(config, 42, &dataset) == SCMAD_OK);
  int size = 0;
  REQUIRE(scmad_dataset_size(dataset, &size) == SCMAD_OK);
  CHECK(size == 12);

  const std::string ds_path = dir.file("data.jsonl");
  REQUIRE(scmad_dataset_write(dataset, ds_path.c_str()) == SCMAD_OK);
  scmad_dataset* reread = nullptr;
  REQUIRE(scmad_dataset_read(ds_path.c_str(), &reread) == SCMAD_OK);

  scmad_complexon_set* estimates = nullptr;
  REQUIRE(scmad_estimate(reread, config, &estimates) == SCMAD_OK);
  int est_count = 0;
  REQUIRE(scmad_complexon_set_size(estimates, &est_count) == SCMAD_OK);
  CHECK(est_count == 12);
  REQUIRE(scmad_complexon_set_write(estimates, dir.file("w").c_str(), "w") ==
          SCMAD_OK);

  std::vector<std::string> west;
  std::vector<const char*> west_ptrs;
  for (int i = 0; i < 4; ++i) {
    west.push_back(dir.file("w") + "/w" + std::to_string(i) + ".json");
  }
  for (const std::string& p : west) west_ptrs.push_back(p.c_str());

  scmad_complexon_set* set = nullptr;
  REQUIRE(scmad_complexon_set_read(west_ptrs.data(), 4, &set) == SCMAD_OK);

  scmad_config* mix_config = scmad_config_new();
  REQUIRE(scmad_config_set(mix_config, "lambda_grid", "8") == SCMAD_OK);
  scmad_complexon_set* mixtures = nullptr;
  const std::string cp_path = dir.file("cp.json");
  REQUIRE(scmad_mixup(set, mix_config, 7, 3, cp_path.c_str(), &mixtures) ==
          SCMAD_OK);
  int mix_count = 0;
  REQUIRE(scmad_complexon_set_size(mixtures, &mix_count) == SCMAD_OK);
  CHECK(mix_count == 3);
  CHECK(slurp(cp_path).find("lambda_grid") != std::string::npos);

  scmad_dataset* sampled = nullptr;
  REQUIRE(scmad_sample(mixtures, mix_config, 9, 10, 2, &sampled) == SCMAD_OK);
  int sampled_count = 0;
  REQUIRE(scmad_dataset_size(sampled, &sampled_count) == SCMAD_OK);
  CHECK(sampled_count == 6);

  CHECK(scmad_check_bound(set, mix_config, 5, 25,
                          dir.file("report.json").c_str()) == SCMAD_OK);
  CHECK(slurp(dir.file("report.json")).find("\"violations\": false") !=
        std::string::npos);

  scmad_dataset* augmented = nullptr;
  scmad_config* aug_config = scmad_config_new();
  REQUIRE(scmad_config_set(aug_config, "lambda_grid", "8") == SCMAD_OK);
  REQUIRE(scmad_augment(reread, aug_config, 13, 4, &augmented) == SCMAD_OK);
  int aug_count = 0;
  REQUIRE(scmad_dataset_size(augmented, &aug_count) == SCMAD_OK);
  CHECK(aug_count == 16);

  const std::string hd_path = dir.file("hd.csv");
  REQUIRE(scmad_homdensity(reread, hd_path.c_str()) == SCMAD_OK);
  CHECK(slurp(hd_path).find("triangle_filled") != std::string::npos);

  scmad_dataset_free(dataset);
  scmad_dataset_free(reread);
  scmad_dataset_free(sampled);
  scmad_dataset_free(augmented);
  scmad_complexon_set_free(estimates);
  scmad_complexon_set_free(set);
  scmad_complexon_set_free(mixtures);
  scmad_config_free(config);
  scmad_config_free(mix_config);
  scmad_config_free(aug_config);
}

TEST_CASE("usage errors from bad configuration") {
  scmad_config* config = scmad_config_new();
  REQUIRE(scmad_config_set(config, "data_scheme", "bogus") == SCMAD_OK);
  scmad_config* vr_config = scmad_config_new();
  scmad_dataset* dataset = nullptr;
  REQUIRE(scmad_config_set(vr_config, "n_per_class", "3") == SCMAD_OK);
  REQUIRE(scmad_config_set(vr_config, "points", "10") == SCMAD_OK);
  REQUIRE(scmad_synth_vr(vr_config, 1, &dataset) == SCMAD_OK);

  scmad_dataset* out = nullptr;
  CHECK(scmad_augment(dataset, config, 1, 2, &out) == SCMAD_ERR_USAGE);
  CHECK(std::string(scmad_last_error()).find("bogus") != std::string::npos);

  scmad_dataset_free(dataset);
  scmad_config_free(config);
  scmad_config_free(vr_config);
}
