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

#include "scmad/mixup.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "json.hpp"
#include "scmad/errors.hpp"

namespace scmad {

LabelScheme label_scheme_from_string(const std::string& name) {
  if (name == "linear") return LabelScheme::kLinear;
  if (name == "sigmoid") return LabelScheme::kSigmoid;
  if (name == "logit") return LabelScheme::kLogit;
  if (name == "cvx" || name == "cvx-cluster") return LabelScheme::kConvexCluster;
  throw DomainError("unknown label scheme: " + name);
}

std::string label_scheme_name(LabelScheme scheme) {
  switch (scheme) {
    case LabelScheme::kLinear:
      return "linear";
    case LabelScheme::kSigmoid:
      return "sigmoid";
    case LabelScheme::kLogit:
      return "logit";
    case LabelScheme::kConvexCluster:
      return "cvx";
  }
  return "unknown";
}

StepComplexon linear_mixup(const StepComplexon& wi, const StepComplexon& wj,
                           double lambda) {
  if (lambda < 0.0 || lambda > 1.0) throw DomainError("lambda outside [0,1]");
  return convex_combination({wi, wj}, {1.0 - lambda, lambda});
}

std::vector<std::vector<double>> class_weights(
    const std::vector<std::vector<double>>& labels, double epsilon) {
  if (epsilon <= 0.0) throw DomainError("epsilon must be positive");
  const int t = static_cast<int>(labels.size());
  auto argmax = [](const std::vector<double>& y) {
    return static_cast<int>(std::max_element(y.begin(), y.end()) - y.begin());
  };
  std::vector<std::vector<double>> w(t, std::vector<double>(t, 0.0));
  for (int i = 0; i < t; ++i) {
    for (int j = i + 1; j < t; ++j) {
      const double value = argmax(labels[i]) == argmax(labels[j]) ? 1.0
                                                                  : epsilon;
      w[i][j] = w[j][i] = value;
    }
  }
  return w;
}

std::vector<double> make_lambda_grid(int size) {
  if (size < 2) throw DomainError("lambda grid needs >= 2 points");
  // t = lambda/(1-lambda) spans orders of magnitude, so the grid is
  // geometric in t from 1e-3 up to 999 (lambda = 0.999), prefixed by 0.
  std::vector<double> grid;
  grid.reserve(size);
  grid.push_back(0.0);
  const double t_min = 1e-3;
  const double t_max = 999.0;
  const int points = size - 1;
  for (int k = 0; k < points; ++k) {
    const double exponent =
        points == 1 ? 1.0 : static_cast<double>(k) / (points - 1);
    const double t = t_min * std::pow(t_max / t_min, exponent);
    grid.push_back(t / (1.0 + t));
  }
  grid.back() = 0.999;
  return grid;
}

namespace {

struct Pair {
  int i;
  int j;
  double weight;
};

using Matrix = std::vector<std::vector<double>>;  // row-major list of rows

Matrix flatten(const std::vector<StepComplexon>& ws) {
  Matrix m(ws.size());
  for (std::size_t i = 0; i < ws.size(); ++i) {
    m[i].reserve(ws[i].total_cells());
    for (int c = 1; c <= ws[i].max_dim(); ++c) {
      const std::vector<double>& level = ws[i].level(c);
      m[i].insert(m[i].end(), level.begin(), level.end());
    }
  }
  return m;
}

StepComplexon unflatten(const std::vector<double>& row, int n, int d) {
  StepComplexon w(n, d);
  std::size_t offset = 0;
  for (int c = 1; c <= d; ++c) {
    std::vector<double>& level = w.mutable_level(c);
    std::copy(row.begin() + offset, row.begin() + offset + level.size(),
              level.begin());
    offset += level.size();
  }
  return w;
}

std::vector<double> cell_volumes(const StepComplexon& w) {
  std::vector<double> vol;
  vol.reserve(w.total_cells());
  for (int c = 1; c <= w.max_dim(); ++c) {
    const double v = 1.0 / static_cast<double>(w.level(c).size());
    vol.insert(vol.end(), w.level(c).size(), v);
  }
  return vol;
}

double weighted_l1(const std::vector<double>& a, const std::vector<double>& b,
                   const std::vector<double>& vol) {
  double sum = 0.0;
  for (std::size_t m = 0; m < a.size(); ++m) {
    sum += vol[m] * std::abs(a[m] - b[m]);
  }
  return sum;
}

double frob(const Matrix& m) {
  double sum = 0.0;
  for (const auto& row : m) {
    for (double v : row) sum += v * v;
  }
  return std::sqrt(sum);
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

// ADMM state for min sum_i ||u_i - w_i||^2 + t sum_p w_p |d_p| subject to
// d_p = u_i(p) - u_j(p), run jointly over all grid cells (columns). The
// per-cell volume weight multiplies both terms and cancels.
class ClusterpathSolver {
 public:
  ClusterpathSolver(const Matrix& w, std::vector<Pair> pairs, int max_iter,
                    double tol)
      : w_(w),
        pairs_(std::move(pairs)),
        t_count_(static_cast<int>(w.size())),
        m_count_(static_cast<int>(w.front().size())),
        max_iter_(max_iter),
        tol_(tol) {
    u_ = w_;
    d_.assign(pairs_.size(), std::vector<double>(m_count_, 0.0));
    y_ = d_;
    for (std::size_t p = 0; p < pairs_.size(); ++p) {
      for (int m = 0; m < m_count_; ++m) {
        d_[p][m] = u_[pairs_[p].i][m] - u_[pairs_[p].j][m];
      }
    }
    double mean_w = 0.0;
    for (const Pair& p : pairs_) mean_w += p.weight;
    mean_w_ = pairs_.empty() ? 1.0 : mean_w / pairs_.size();
  }

  // Solves at fusion strength t, warm-starting from the previous state.
  const Matrix& solve(double t) {
    if (t <= 0.0) {
      u_ = w_;
      return u_;
    }
    const double rho_new = std::clamp(t * mean_w_, 1e-3, 1e6);
    if (!have_dual_) {
      for (auto& row : y_) std::fill(row.begin(), row.end(), 0.0);
      have_dual_ = true;
    } else {
      // y is the scaled dual (dual / rho); rescale when rho changes.
      const double scale = rho_ / rho_new;
      for (auto& row : y_) {
        for (double& v : row) v *= scale;
      }
    }
    rho_ = rho_new;

    Matrix d_prev = d_;
    for (int iter = 0; iter < max_iter_; ++iter) {
      update_u();
      d_prev = d_;
      const double pri = update_d_and_y(t);
      const double dual = dual_residual(d_prev);
      if (converged(pri, dual)) return u_;
      maybe_rescale_rho(pri, dual);
    }
    throw SolverError("clusterpath ADMM did not converge", last_pri_,
                      last_dual_);
  }

 private:
  void update_u() {
    // Solve (2I + rho A^T A) U = 2W + rho A^T (D - Y) in closed form:
    // A^T A = T I - J for the complete pair graph.
    Matrix b = w_;
    for (auto& row : b) {
      for (double& v : row) v *= 2.0;
    }
    for (std::size_t p = 0; p < pairs_.size(); ++p) {
      const int i = pairs_[p].i;
      const int j = pairs_[p].j;
      for (int m = 0; m < m_count_; ++m) {
        const double v = rho_ * (d_[p][m] - y_[p][m]);
        b[i][m] += v;
        b[j][m] -= v;
      }
    }
    const double alpha = 2.0 + rho_ * t_count_;
    std::vector<double> column_sum(m_count_, 0.0);
    for (const auto& row : b) {
      for (int m = 0; m < m_count_; ++m) column_sum[m] += row[m];
    }
    const double mix = rho_ / (2.0 * alpha);
    for (int i = 0; i < t_count_; ++i) {
      for (int m = 0; m < m_count_; ++m) {
        u_[i][m] = b[i][m] / alpha + mix * column_sum[m];
      }
    }
  }

  // Soft-thresholds D, updates the scaled dual, returns the primal
  // residual ||AU - D||_F.
  double update_d_and_y(double t) {
    double pri_sq = 0.0;
    norm_e_ = 0.0;
    for (std::size_t p = 0; p < pairs_.size(); ++p) {
      const int i = pairs_[p].i;
      const int j = pairs_[p].j;
      const double threshold = t * pairs_[p].weight / rho_;
      for (int m = 0; m < m_count_; ++m) {
        const double e = u_[i][m] - u_[j][m];
        norm_e_ += e * e;
        const double v = e + y_[p][m];
        double d = 0.0;
        if (v > threshold) d = v - threshold;
        if (v < -threshold) d = v + threshold;
        d_[p][m] = d;
        const double r = e - d;
        y_[p][m] += r;
        pri_sq += r * r;
      }
    }
    norm_e_ = std::sqrt(norm_e_);
    return std::sqrt(pri_sq);
  }

  double dual_residual(const Matrix& d_prev) {
    // rho * ||A^T (D - D_prev)||_F
    Matrix at(t_count_, std::vector<double>(m_count_, 0.0));
    for (std::size_t p = 0; p < pairs_.size(); ++p) {
      for (int m = 0; m < m_count_; ++m) {
        const double delta = d_[p][m] - d_prev[p][m];
        at[pairs_[p].i][m] += delta;
        at[pairs_[p].j][m] -= delta;
      }
    }
    return rho_ * frob(at);
  }

  bool converged(double pri, double dual) {
    last_pri_ = pri;
    last_dual_ = dual;
    const double eps_abs = 1e-10;
    const std::size_t pm = pairs_.size() * m_count_;
    const double eps_pri = std::sqrt(static_cast<double>(pm)) * eps_abs +
                           tol_ * std::max(norm_e_, frob(d_));
    Matrix aty(t_count_, std::vector<double>(m_count_, 0.0));
    for (std::size_t p = 0; p < pairs_.size(); ++p) {
      for (int m = 0; m < m_count_; ++m) {
        aty[pairs_[p].i][m] += y_[p][m];
        aty[pairs_[p].j][m] -= y_[p][m];
      }
    }
    const double eps_dual =
        std::sqrt(static_cast<double>(t_count_) * m_count_) * eps_abs +
        tol_ * rho_ * frob(aty);
    return pri <= eps_pri && dual <= eps_dual;
  }

  void maybe_rescale_rho(double pri, double dual) {
    if (pri > 10.0 * dual && rho_ < 1e10) {
      rho_ *= 2.0;
      for (auto& row : y_) {
        for (double& v : row) v *= 0.5;
      }
    } else if (dual > 10.0 * pri && rho_ > 1e-8) {
      rho_ *= 0.5;
      for (auto& row : y_) {
        for (double& v : row) v *= 2.0;
      }
    }
  }

  Matrix w_;
  std::vector<Pair> pairs_;
  int t_count_;
  int m_count_;
  int max_iter_;
  double tol_;
  double rho_ = 1.0;
  double mean_w_ = 1.0;
  bool have_dual_ = false;
  double norm_e_ = 0.0;
  double last_pri_ = 0.0;
  double last_dual_ = 0.0;
  Matrix u_;
  Matrix d_;
  Matrix y_;
};

}  // namespace

Clusterpath solve_clusterpath(const std::vector<StepComplexon>& ws,
                              const std::vector<std::vector<double>>& weights,
                              const std::vector<double>& lambda_grid,
                              const MixupConfig& config) {
  const int t_count = static_cast<int>(ws.size());
  if (t_count < 2) throw DomainError("clusterpath needs >= 2 complexons");
  for (const StepComplexon& w : ws) {
    if (!w.same_shape(ws.front()))
      throw ShapeError("clusterpath inputs must share a grid");
  }
  if (static_cast<int>(weights.size()) != t_count)
    throw DomainError("weight matrix size must match input count");
  for (double lambda : lambda_grid) {
    if (lambda < 0.0 || lambda >= 1.0)
      throw DomainError("lambda grid must lie in [0,1)");
  }

  std::vector<Pair> pairs;
  pairs.reserve(t_count * (t_count - 1) / 2);
  for (int i = 0; i < t_count; ++i) {
    for (int j = i + 1; j < t_count; ++j) {
      if (weights[i][j] < 0.0) throw DomainError("weights must be >= 0");
      pairs.push_back({i, j, weights[i][j]});
    }
  }

  const Matrix w_flat = flatten(ws);
  const std::vector<double> vol = cell_volumes(ws.front());
  const int n = ws.front().resolution();
  const int d = ws.front().max_dim();

  // Per-column envelope of the inputs; the exact solution is known to lie
  // inside it, and projecting the iterate onto it is non-expansive.
  const int m_count = static_cast<int>(w_flat.front().size());
  std::vector<double> lo(m_count, 1.0), hi(m_count, 0.0);
  for (const auto& row : w_flat) {
    for (int m = 0; m < m_count; ++m) {
      lo[m] = std::min(lo[m], row[m]);
      hi[m] = std::max(hi[m], row[m]);
    }
  }

  ClusterpathSolver solver(w_flat, pairs, config.max_iterations,
                           config.solver_tol);

  Clusterpath path;
  path.lambda_grid.assign(lambda_grid.begin(), lambda_grid.end());
  {
    std::vector<double> uniform(t_count, 1.0 / t_count);
    path.mean_complexon = convex_combination(ws, uniform);
  }

  for (double lambda : lambda_grid) {
    const double t = lambda / (1.0 - lambda);
    Matrix solution = solver.solve(t);
    for (auto& row : solution) {
      for (int m = 0; m < m_count; ++m) {
        row[m] = std::clamp(row[m], lo[m], hi[m]);
      }
    }

    ClusterpathPoint point;
    point.lambda = lambda;
    point.solutions.reserve(t_count);
    double dev = 0.0;
    for (int i = 0; i < t_count; ++i) {
      point.solutions.push_back(unflatten(solution[i], n, d));
      dev += weighted_l1(solution[i], w_flat[i], vol);
    }
    point.mean_abs_dev = dev / t_count;

    UnionFind uf(t_count);
    for (int i = 0; i < t_count; ++i) {
      for (int j = i + 1; j < t_count; ++j) {
        if (weighted_l1(solution[i], solution[j], vol) < config.eps_fuse) {
          uf.unite(i, j);
        }
      }
    }
    point.group_of.resize(t_count);
    std::vector<int> group_id(t_count, -1);
    int groups = 0;
    for (int i = 0; i < t_count; ++i) {
      const int root = uf.find(i);
      if (group_id[root] < 0) group_id[root] = groups++;
      point.group_of[i] = group_id[root];
    }
    point.num_groups = groups;
    path.points.push_back(std::move(point));
  }
  return path;
}

double clusterpath_objective(const std::vector<StepComplexon>& ws,
                             const std::vector<std::vector<double>>& weights,
                             double lambda,
                             const std::vector<StepComplexon>& us) {
  if (lambda < 0.0 || lambda >= 1.0) throw DomainError("lambda outside [0,1)");
  double fid = 0.0;
  for (std::size_t i = 0; i < ws.size(); ++i) {
    for (int c = 1; c <= ws[i].max_dim(); ++c) {
      const std::vector<double>& a = us[i].level(c);
      const std::vector<double>& b = ws[i].level(c);
      const double vol = 1.0 / static_cast<double>(a.size());
      for (std::size_t m = 0; m < a.size(); ++m) {
        fid += vol * (a[m] - b[m]) * (a[m] - b[m]);
      }
    }
  }
  double fus = 0.0;
  for (std::size_t i = 0; i < us.size(); ++i) {
    for (std::size_t j = i + 1; j < us.size(); ++j) {
      double l1 = 0.0;
      for (int c = 1; c <= us[i].max_dim(); ++c) {
        l1 += l1_distance(us[i], us[j], c);
      }
      fus += weights[i][j] * l1;
    }
  }
  return fid + lambda / (1.0 - lambda) * fus;
}

MixtureSelection select_mixture(const Clusterpath& path, double lambda, int i) {
  if (path.points.empty()) throw DomainError("empty clusterpath");
  const int t_count = static_cast<int>(path.points.front().solutions.size());
  if (i < 0 || i >= t_count) throw DomainError("index out of range");
  if (lambda < 0.0 || lambda > 1.0) throw DomainError("lambda outside [0,1]");

  // Nearest grid point, with the analytic lambda = 1 endpoint included.
  std::size_t best = 0;
  double best_dist = std::abs(lambda - path.lambda_grid[0]);
  for (std::size_t g = 1; g < path.lambda_grid.size(); ++g) {
    const double dist = std::abs(lambda - path.lambda_grid[g]);
    if (dist < best_dist) {
      best = g;
      best_dist = dist;
    }
  }
  MixtureSelection selection;
  if (std::abs(lambda - 1.0) < best_dist) {
    selection.complexon = &path.mean_complexon;
    selection.lambda_used = 1.0;
    selection.fused_group.resize(t_count);
    std::iota(selection.fused_group.begin(), selection.fused_group.end(), 0);
    return selection;
  }
  const ClusterpathPoint& point = path.points[best];
  selection.complexon = &point.solutions[i];
  selection.lambda_used = point.lambda;
  for (int j = 0; j < t_count; ++j) {
    if (point.group_of[j] == point.group_of[i])
      selection.fused_group.push_back(j);
  }
  return selection;
}

double label_mix_coefficient(LabelScheme scheme, double lambda, double a) {
  if (lambda < 0.0 || lambda > 1.0) throw DomainError("lambda outside [0,1]");
  switch (scheme) {
    case LabelScheme::kLinear:
      return lambda;
    case LabelScheme::kSigmoid: {
      if (a <= 0.0) throw DomainError("sharpness a must be positive");
      return 1.0 / (1.0 + std::exp(-a * (2.0 * lambda - 1.0)));
    }
    case LabelScheme::kLogit: {
      if (a <= 0.0) throw DomainError("sharpness a must be positive");
      const double interior = std::clamp(lambda, 1e-300, 1.0 - 1e-16);
      const double g =
          std::log(interior / (1.0 - interior)) / (2.0 * a) + 0.5;
      return std::clamp(g, 0.0, 1.0);
    }
    case LabelScheme::kConvexCluster:
      throw DomainError("cvx label scheme has no analytic coefficient");
  }
  throw DomainError("unknown label scheme");
}

std::vector<double> mix_labels(const std::vector<double>& yi,
                               const std::vector<double>& yj, double lambda,
                               LabelScheme scheme, double a) {
  if (yi.size() != yj.size()) throw DomainError("label sizes must match");
  const double g = label_mix_coefficient(scheme, lambda, a);
  std::vector<double> mixed(yi.size());
  for (std::size_t c = 0; c < yi.size(); ++c) {
    mixed[c] = (1.0 - g) * yi[c] + g * yj[c];
  }
  return mixed;
}

std::vector<double> clusterpath_labels(
    const Clusterpath& path, const std::vector<std::vector<double>>& labels,
    double lambda, int i) {
  const MixtureSelection selection = select_mixture(path, lambda, i);
  std::vector<double> mean(labels.front().size(), 0.0);
  for (int member : selection.fused_group) {
    for (std::size_t c = 0; c < mean.size(); ++c) {
      mean[c] += labels[member][c];
    }
  }
  for (double& v : mean) v /= selection.fused_group.size();
  return mean;
}

std::string clusterpath_to_json(const Clusterpath& path,
                                bool include_solutions) {
  nlohmann::json obj;
  obj["lambda_grid"] = path.lambda_grid;
  nlohmann::json points = nlohmann::json::array();
  for (const ClusterpathPoint& point : path.points) {
    nlohmann::json entry;
    entry["lambda"] = point.lambda;
    entry["groups"] = point.group_of;
    entry["num_groups"] = point.num_groups;
    entry["mean_abs_dev"] = point.mean_abs_dev;
    if (include_solutions) {
      nlohmann::json solutions = nlohmann::json::array();
      for (const StepComplexon& u : point.solutions) {
        solutions.push_back(nlohmann::json::parse(complexon_to_json(u)));
      }
      entry["solutions"] = solutions;
    }
    points.push_back(entry);
  }
  obj["points"] = points;
  obj["mean_complexon"] =
      nlohmann::json::parse(complexon_to_json(path.mean_complexon));
  return obj.dump();
}

}  // namespace scmad
