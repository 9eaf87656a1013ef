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

#ifndef SCMAD_MIXUP_HPP
#define SCMAD_MIXUP_HPP

#include <string>
#include <vector>

#include "scmad/complexon.hpp"

namespace scmad {

enum class LabelScheme { kLinear, kSigmoid, kLogit, kConvexCluster };

LabelScheme label_scheme_from_string(const std::string& name);
std::string label_scheme_name(LabelScheme scheme);

struct MixupConfig {
  double epsilon_crossclass = 0.1;  // cross-class fusion weight
  int lambda_grid_size = 50;
  double solver_tol = 1e-6;  // relative primal/dual residual target
  int max_iterations = 5000;
  double eps_fuse = 1e-5;  // fusion threshold on volume-weighted L1
  LabelScheme scheme = LabelScheme::kLinear;
  double sharpness_a = 1.0;  // sigmoid/logit sharpness
};

// (1 - lambda) * Wi + lambda * Wj entrywise; shapes must match.
StepComplexon linear_mixup(const StepComplexon& wi, const StepComplexon& wj,
                           double lambda);

// w_ij = 1 when argmax(y_i) == argmax(y_j), epsilon otherwise. Returns a
// T x T symmetric matrix; the diagonal is unused (set to 0).
std::vector<std::vector<double>> class_weights(
    const std::vector<std::vector<double>>& labels, double epsilon);

// Grid of lambda values: 0, then geometric spacing of t = lambda/(1-lambda)
// up to lambda = 0.999. size >= 2.
std::vector<double> make_lambda_grid(int size);

struct ClusterpathPoint {
  double lambda = 0.0;
  std::vector<StepComplexon> solutions;  // U_i(lambda), one per input
  std::vector<int> group_of;             // fused-group id per input
  int num_groups = 0;
  double mean_abs_dev = 0.0;  // mean volume-weighted L1 to the inputs
};

struct Clusterpath {
  std::vector<double> lambda_grid;
  std::vector<ClusterpathPoint> points;
  StepComplexon mean_complexon;  // analytic limit at lambda = 1
};

// Solves the convex clustering problem over the lambda grid: for each
// lambda, minimize sum_i ||U_i - W_i||_2^2 + (lambda/(1-lambda)) *
// sum_{i<j} w_ij ||U_i - U_j||_1, with both norms volume-weighted
// per-dimension integrals. The objective separates per grid cell, so the
// whole path is solved as a matrix-valued ADMM with pairwise difference
// variables, warm-started along the grid. Throws SolverError if any grid
// point fails to converge within config.max_iterations.
Clusterpath solve_clusterpath(const std::vector<StepComplexon>& ws,
                              const std::vector<std::vector<double>>& weights,
                              const std::vector<double>& lambda_grid,
                              const MixupConfig& config);

// Volume-weighted objective value of a candidate solution set at lambda:
// sum_i rho_fid(U_i, W_i) + (lambda/(1-lambda)) sum_{i<j} w_ij
// rho_fus(U_i, U_j).
double clusterpath_objective(const std::vector<StepComplexon>& ws,
                             const std::vector<std::vector<double>>& weights,
                             double lambda,
                             const std::vector<StepComplexon>& us);

// Nearest grid point to lambda (lambda >= midpoint of the last grid value
// and 1 selects the analytic mean). Returns the solution for input i and
// the indices of i's fused group.
struct MixtureSelection {
  const StepComplexon* complexon = nullptr;
  double lambda_used = 0.0;
  std::vector<int> fused_group;
};
MixtureSelection select_mixture(const Clusterpath& path, double lambda, int i);

// g(lambda) per scheme: linear lambda; sigmoid 1/(1+exp(-a(2*lambda-1)));
// logit log(lambda/(1-lambda))/(2a) + 1/2 clamped to [0,1].
double label_mix_coefficient(LabelScheme scheme, double lambda, double a);

// y_new = (1 - g(lambda)) y_i + g(lambda) y_j.
std::vector<double> mix_labels(const std::vector<double>& yi,
                               const std::vector<double>& yj, double lambda,
                               LabelScheme scheme, double a);

// Uniform average of the labels of i's fused group at lambda.
std::vector<double> clusterpath_labels(
    const Clusterpath& path, const std::vector<std::vector<double>>& labels,
    double lambda, int i);

// Clusterpath export: lambda grid, per-lambda fusion partition, and mean
// absolute deviation from the inputs (the data behind clusterpath plots).
std::string clusterpath_to_json(const Clusterpath& path,
                                bool include_solutions);

}  // namespace scmad

#endif  // SCMAD_MIXUP_HPP
