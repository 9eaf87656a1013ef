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

#ifndef SCMAD_ESTIMATION_HPP
#define SCMAD_ESTIMATION_HPP

#include <vector>

#include "scmad/complexon.hpp"
#include "scmad/simplicial_complex.hpp"

namespace scmad {

// Degree-sum scores D_i = sum_{c=1..max_dim} tau^c * degree(K, i, c) for
// every node. tau must lie in (0,1).
std::vector<double> degree_sum(const SimplicialComplex& k, double tau);

// Relabels nodes so degree sums are non-increasing; ties broken by
// original node index ascending.
SimplicialComplex sort_nodes(const SimplicialComplex& k, double tau);

// Histogram estimate with bins of h nodes: m = floor(N/h) bins, trailing
// nodes dropped. Entry at a bin multi-index is the fraction of ordered
// node tuples from those bins that form a simplex (repeated-node tuples
// count as non-simplices). Approximates the faceted complexon.
StepComplexon histogram_estimate(const SimplicialComplex& k_sorted, int h);

// Divides each level-c entry (c >= 2) by the product of the lower-level
// entries over all proper coordinate subsets of cardinality >= 2,
// converting facet frequencies to conditional probabilities. A zero
// factor yields 0; quotients are clamped to [0,1]. Dimension 1 passes
// through unchanged.
StepComplexon facet_correction(const StepComplexon& faceted);

// Default bin size when h is unspecified: ceil(sqrt(N)).
int default_bin_size(int num_nodes);

// facet_correction(histogram_estimate(sort_nodes(K, tau), h)).
// h <= 0 selects default_bin_size(N).
StepComplexon estimate_complexon(const SimplicialComplex& k, double tau,
                                 int h);

}  // namespace scmad

#endif  // SCMAD_ESTIMATION_HPP
