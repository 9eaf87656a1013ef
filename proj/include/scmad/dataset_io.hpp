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

#ifndef SCMAD_DATASET_IO_HPP
#define SCMAD_DATASET_IO_HPP

#include <map>
#include <string>
#include <vector>

#include "scmad/simplicial_complex.hpp"

namespace scmad {

// A labeled complex. The label is a probability vector over classes
// (entries >= 0, summing to 1 within 1e-9).
struct LabeledSample {
  std::string id;
  SimplicialComplex complex;
  std::vector<double> label;
  // Optional per-sample provenance (lambda, scheme, seed, source hash)
  // carried through JSON-lines round trips.
  std::map<std::string, std::string> provenance;
};

void validate_label(const std::vector<double>& label);

struct Dataset {
  std::vector<LabeledSample> samples;
  // Effective config / seed / input hash echoed into outputs.
  std::map<std::string, std::string> provenance;
};

// JSON-lines format, one object per line:
//   {"id": "...", "n": <nodes>, "simplices": [[0,1],[0,1,2]], "label": [..]}
// Simplices are listed for dimensions >= 1 only. An optional leading
// {"provenance": {...}} line is written by the tools and skipped on read.
// The reader validates closure and labels, throwing DataError with the
// offending line number.
Dataset read_dataset_jsonl(const std::string& path);
Dataset dataset_from_jsonl_text(const std::string& text);
std::string dataset_to_jsonl_text(const Dataset& dataset);
void write_dataset_jsonl(const Dataset& dataset, const std::string& path);

}  // namespace scmad

#endif  // SCMAD_DATASET_IO_HPP
