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

#include "scmad/sampling.hpp"

#include <algorithm>

#include "scmad/rng.hpp"
#include "scmad/util.hpp"

namespace scmad {

namespace {

SampledComplex sample_impl(const StepComplexon& w,
                           std::vector<double> zetas, Rng rng) {
  const int n = static_cast<int>(zetas.size());
  SampledComplex out;
  out.complex = SimplicialComplex(n);
  out.zetas = std::move(zetas);

  std::uniform_real_distribution<double> unif(0.0, 1.0);

  // Edges first, then each higher dimension conditioned on the full
  // presence of all proper faces (clique-style extension of the previous
  // level, in deterministic lexicographic order).
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double p = w.evaluate(1, {out.zetas[i], out.zetas[j]});
      if (unif(rng) < p) out.complex.add({i, j});
    }
  }

  for (int d = 2; d <= w.max_dim(); ++d) {
    const std::vector<Simplex> previous = out.complex.sorted_level(d - 1);
    std::vector<Simplex> accepted;
    for (const Simplex& s : previous) {
      for (int v = s.back() + 1; v < n; ++v) {
        Simplex candidate = s;
        candidate.push_back(v);
        // All codimension-1 faces must already be present. By induction
        // on d that implies all proper faces are present.
        bool faces_present = true;
        Simplex face(candidate.size() - 1);
        for (std::size_t skip = 0; skip + 1 < candidate.size(); ++skip) {
          std::size_t f = 0;
          for (std::size_t i = 0; i < candidate.size(); ++i) {
            if (i != skip) face[f++] = candidate[i];
          }
          if (!out.complex.contains(face)) {
            faces_present = false;
            break;
          }
        }
        if (!faces_present) continue;
        std::vector<double> zeta_sigma;
        zeta_sigma.reserve(candidate.size());
        for (int u : candidate) zeta_sigma.push_back(out.zetas[u]);
        const double p = w.evaluate(d, zeta_sigma);
        if (unif(rng) < p) accepted.push_back(std::move(candidate));
      }
    }
    for (Simplex& s : accepted) out.complex.add(std::move(s));
  }
  return out;
}

}  // namespace

SampledComplex sample_complex(const StepComplexon& w, int num_nodes,
                              std::uint64_t seed) {
  if (num_nodes < 1) throw DomainError("num_nodes must be >= 1");
  Rng rng = make_rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<double> zetas(num_nodes);
  for (double& z : zetas) z = unif(rng);
  return sample_impl(w, std::move(zetas), std::move(rng));
}

SampledComplex sample_complex_with_zetas(const StepComplexon& w,
                                         const std::vector<double>& zetas,
                                         std::uint64_t seed) {
  if (zetas.empty()) throw DomainError("zetas must be nonempty");
  return sample_impl(w, zetas, make_rng(seed));
}

std::vector<SampledComplex> sample_batch(const StepComplexon& w, int num_nodes,
                                         int count, std::uint64_t master_seed,
                                         int threads) {
  if (count < 1) throw DomainError("count must be >= 1");
  std::vector<SampledComplex> batch(count);
  parallel_for(count, threads, [&](int k) {
    batch[k] = sample_complex(w, num_nodes, derive_seed(master_seed, k));
  });
  return batch;
}

}  // namespace scmad
