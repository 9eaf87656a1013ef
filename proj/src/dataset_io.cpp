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

#include "scmad/dataset_io.hpp"

#include <cmath>
#include <sstream>

#include "json.hpp"
#include "scmad/util.hpp"

namespace scmad {

void validate_label(const std::vector<double>& label) {
  if (label.empty()) throw DataError("label vector is empty");
  double sum = 0.0;
  for (double v : label) {
    if (v < 0.0) throw DataError("label entries must be nonnegative");
    sum += v;
  }
  if (std::abs(sum - 1.0) > 1e-9) throw DataError("label must sum to 1");
}

namespace {

LabeledSample sample_from_json(const nlohmann::json& obj, int line_number) {
  const std::string where = " (line " + std::to_string(line_number) + ")";
  if (!obj.contains("n") || !obj.contains("simplices") ||
      !obj.contains("label")) {
    throw DataError("sample missing n/simplices/label" + where);
  }
  LabeledSample sample;
  sample.id = obj.value("id", std::string("line-") +
                                  std::to_string(line_number));
  const int n = obj["n"].get<int>();
  if (n < 0) throw DataError("negative node count" + where);
  sample.complex = SimplicialComplex(n);
  try {
    for (const auto& entry : obj["simplices"]) {
      sample.complex.add(entry.get<Simplex>());
    }
  } catch (const DomainError& e) {
    throw DataError(std::string(e.what()) + where);
  }
  if (!validate_closure(sample.complex)) {
    throw DataError("complex is not closed under restriction" + where);
  }
  sample.label = obj["label"].get<std::vector<double>>();
  try {
    validate_label(sample.label);
  } catch (const DataError& e) {
    throw DataError(std::string(e.what()) + where);
  }
  if (obj.contains("provenance")) {
    for (const auto& [key, value] : obj["provenance"].items()) {
      sample.provenance[key] =
          value.is_string() ? value.get<std::string>() : value.dump();
    }
  }
  return sample;
}

}  // namespace

Dataset dataset_from_jsonl_text(const std::string& text) {
  Dataset dataset;
  std::istringstream in(text);
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    nlohmann::json obj;
    try {
      obj = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw DataError("JSON parse error (line " +
                      std::to_string(line_number) + "): " + e.what());
    }
    if (line_number == 1 && obj.contains("provenance") && !obj.contains("n")) {
      for (const auto& [key, value] : obj["provenance"].items()) {
        dataset.provenance[key] =
            value.is_string() ? value.get<std::string>() : value.dump();
      }
      continue;
    }
    dataset.samples.push_back(sample_from_json(obj, line_number));
  }
  return dataset;
}

Dataset read_dataset_jsonl(const std::string& path) {
  return dataset_from_jsonl_text(read_text_file(path));
}

std::string dataset_to_jsonl_text(const Dataset& dataset) {
  std::ostringstream out;
  if (!dataset.provenance.empty()) {
    nlohmann::json header;
    header["provenance"] = dataset.provenance;
    out << header.dump() << "\n";
  }
  for (const LabeledSample& sample : dataset.samples) {
    nlohmann::json obj;
    obj["id"] = sample.id;
    obj["n"] = sample.complex.num_nodes();
    nlohmann::json simplices = nlohmann::json::array();
    for (int d = 1; d <= sample.complex.max_dim(); ++d) {
      for (const Simplex& s : sample.complex.sorted_level(d)) {
        simplices.push_back(s);
      }
    }
    obj["simplices"] = simplices;
    obj["label"] = sample.label;
    if (!sample.provenance.empty()) obj["provenance"] = sample.provenance;
    out << obj.dump() << "\n";
  }
  return out.str();
}

void write_dataset_jsonl(const Dataset& dataset, const std::string& path) {
  write_text_file(path, dataset_to_jsonl_text(dataset));
}

}  // namespace scmad
