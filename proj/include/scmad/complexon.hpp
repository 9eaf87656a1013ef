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

#ifndef SCMAD_COMPLEXON_HPP
#define SCMAD_COMPLEXON_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "scmad/simplicial_complex.hpp"

namespace scmad {

// Piecewise-constant complexon on a uniform grid with n bins per axis.
// Level c (1 <= c <= max_dim) is a dense symmetric array of shape
// n^(c+1) stored flat in row-major order, entries in [0,1]. Dimension 0
// is implicitly the constant 1. Immutable after construction in normal
// use; mutation is confined to builders (at()).
class StepComplexon {
 public:
  StepComplexon() = default;

  // All-zero levels.
  StepComplexon(int resolution, int max_dim);

  // Constant value per level; level_values[c-1] is the value of W^(c).
  static StepComplexon constant(int resolution,
                                const std::vector<double>& level_values);

  int resolution() const { return n_; }
  int max_dim() const { return max_dim_; }

  const std::vector<double>& level(int c) const;
  std::vector<double>& mutable_level(int c);

  // Entry at a multi-index (c+1 bin indices, each in [0,n)).
  double at(int c, const std::vector<int>& idx) const;
  double& at(int c, const std::vector<int>& idx);

  // Value of the grid cell containing zeta in [0,1]^{c+1}; coordinate 1.0
  // maps to the last bin.
  double evaluate(int c, const std::vector<double>& zeta) const;

  bool is_symmetric(double tol) const;

  // Averages each entry over the permutation orbit of its multi-index.
  void symmetrize();

  // Clamps all entries to [0,1].
  void clamp01();

  bool same_shape(const StepComplexon& other) const {
    return n_ == other.n_ && max_dim_ == other.max_dim_;
  }

  std::size_t total_cells() const;

  // Flat row-major offset of a multi-index at level c.
  std::size_t flat_index(int c, const int* idx) const;

 private:
  int n_ = 0;
  int max_dim_ = 0;
  std::vector<std::vector<double>> levels_;  // levels_[c-1]
};

// Entrywise weighted average. Inputs must share (n, max_dim); gammas must
// be nonnegative and sum to 1 within 1e-9.
StepComplexon convex_combination(const std::vector<StepComplexon>& ws,
                                 const std::vector<double>& gammas);

// Regrids to n_target bins; each target cell takes the volume-weighted
// average of the source step function over the cell. Exact when n_target
// is a multiple of the source resolution.
StepComplexon resample(const StepComplexon& w, int n_target);

// Step-function embedding of a complex: one node per bin, entry 1 iff the
// multi-index has all-distinct entries whose set is a simplex of K.
// Diagonal cells (repeated indices) are 0.
StepComplexon induce_from_complex(const SimplicialComplex& k);

// t(F, W): exact integral of the product of W over F's simplices, summed
// over all n^{|F^(0)|} bin assignments. Requires |F^(0)| <= 6 and
// max_dim(F) <= max_dim(W).
double hom_density(const SimplicialComplex& f, const StepComplexon& w);

// Exact L1 distance between levels c: sum of |difference| times cell
// volume n^{-(c+1)}.
double l1_distance(const StepComplexon& w1, const StepComplexon& w2, int c);

// Sum over dimensions of betas[c-1] * L1(W1^(c), W2^(c)). An upper bound
// for any beta-weighted combination of per-dimension cut norms.
double cut_distance_surrogate(const StepComplexon& w1, const StepComplexon& w2,
                              const std::vector<double>& betas);

// Exact cut norm of (W1 - W2)^(1) over step functions: maximum over bin
// subsets S, T of |sum of differences over S x T| / n^2. Enumerates 2^n
// subsets; requires n <= 14.
double cut_norm_dim1_exact(const StepComplexon& w1, const StepComplexon& w2);

struct DensityBoundReport {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
};

// Checks |t(F, sum_i gamma_i W_i) - t(F, W_j)| <=
// sum_{i != j} gamma_i * surrogate(W_i, W_j; beta) with beta^(c) = |F^(c)|.
DensityBoundReport check_density_bound(const std::vector<StepComplexon>& ws,
                              const std::vector<double>& gammas, int j,
                              const SimplicialComplex& f);

// JSON (de)serialization:
// {"n": bins, "max_dim": D, "levels": {"1": [...], "2": [...]}}
// The writer emits full arrays; the reader verifies symmetry within 1e-9
// and range [0,1], throwing DataError otherwise. Extra fields are kept
// out of the complexon itself (see dataset_io for labeled files).
std::string complexon_to_json(const StepComplexon& w);
StepComplexon complexon_from_json(const std::string& text);
void write_complexon_file(const StepComplexon& w, const std::string& path);
StepComplexon read_complexon_file(const std::string& path);

}  // namespace scmad

#endif  // SCMAD_COMPLEXON_HPP
