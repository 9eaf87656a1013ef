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

#ifndef SCMAD_SAMPLING_HPP
#define SCMAD_SAMPLING_HPP

#include <cstdint>
#include <vector>

#include "scmad/complexon.hpp"
#include "scmad/simplicial_complex.hpp"

namespace scmad {

struct SampledComplex {
  SimplicialComplex complex;
  std::vector<double> zetas;  // latent coordinates, kept for calibration
};

// Draws zeta_i ~ Unif[0,1] per node, includes each edge with probability
// W^(1)(zeta_i, zeta_j), then for d >= 2 includes each candidate simplex
// (all proper faces already present) with probability W^(d)(zeta_sigma).
// The result satisfies closure under restriction by construction.
SampledComplex sample_complex(const StepComplexon& w, int num_nodes,
                              std::uint64_t seed);

// Same, with the latent coordinates fixed by the caller (test hook).
SampledComplex sample_complex_with_zetas(const StepComplexon& w,
                                         const std::vector<double>& zetas,
                                         std::uint64_t seed);

// count independent draws; item k uses derive_seed(master_seed, k), so the
// batch is reproducible and order-independent. threads <= 1 runs serially.
std::vector<SampledComplex> sample_batch(const StepComplexon& w, int num_nodes,
                                         int count, std::uint64_t master_seed,
                                         int threads = 1);

}  // namespace scmad

#endif  // SCMAD_SAMPLING_HPP
