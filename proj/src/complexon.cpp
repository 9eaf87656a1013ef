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

#include "scmad/complexon.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>

#include "json.hpp"
#include "scmad/util.hpp"

namespace scmad {

namespace {

std::size_t ipow(std::size_t base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

// Advances a multi-index in [0,n)^k; returns false after the last one.
bool next_index(std::vector<int>& idx, int n) {
  for (int pos = static_cast<int>(idx.size()) - 1; pos >= 0; --pos) {
    if (++idx[pos] < n) return true;
    idx[pos] = 0;
  }
  return false;
}

int bin_of(double zeta, int n) {
  const int b = static_cast<int>(std::ceil(zeta * n)) - 1;
  return std::clamp(b, 0, n - 1);
}

}  // namespace

StepComplexon::StepComplexon(int resolution, int max_dim)
    : n_(resolution), max_dim_(max_dim) {
  if (resolution < 1) throw DomainError("resolution must be >= 1");
  if (max_dim < 1) throw DomainError("max_dim must be >= 1");
  levels_.resize(max_dim);
  for (int c = 1; c <= max_dim; ++c) {
    levels_[c - 1].assign(ipow(static_cast<std::size_t>(n_), c + 1), 0.0);
  }
}

StepComplexon StepComplexon::constant(int resolution,
                                      const std::vector<double>& level_values) {
  StepComplexon w(resolution, static_cast<int>(level_values.size()));
  for (int c = 1; c <= w.max_dim_; ++c) {
    std::fill(w.levels_[c - 1].begin(), w.levels_[c - 1].end(),
              level_values[c - 1]);
  }
  return w;
}

const std::vector<double>& StepComplexon::level(int c) const {
  if (c < 1 || c > max_dim_) throw DomainError("level out of range");
  return levels_[c - 1];
}

std::vector<double>& StepComplexon::mutable_level(int c) {
  if (c < 1 || c > max_dim_) throw DomainError("level out of range");
  return levels_[c - 1];
}

std::size_t StepComplexon::flat_index(int c, const int* idx) const {
  std::size_t flat = 0;
  for (int i = 0; i <= c; ++i) {
    flat = flat * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(idx[i]);
  }
  return flat;
}

double StepComplexon::at(int c, const std::vector<int>& idx) const {
  return level(c)[flat_index(c, idx.data())];
}

double& StepComplexon::at(int c, const std::vector<int>& idx) {
  return mutable_level(c)[flat_index(c, idx.data())];
}

double StepComplexon::evaluate(int c, const std::vector<double>& zeta) const {
  if (c < 1 || c > max_dim_) throw DomainError("dimension out of range");
  if (static_cast<int>(zeta.size()) != c + 1)
    throw DomainError("zeta must have c+1 coordinates");
  std::vector<int> idx(zeta.size());
  for (std::size_t i = 0; i < zeta.size(); ++i) {
    if (zeta[i] < 0.0 || zeta[i] > 1.0)
      throw DomainError("zeta coordinate outside [0,1]");
    idx[i] = bin_of(zeta[i], n_);
  }
  return at(c, idx);
}

bool StepComplexon::is_symmetric(double tol) const {
  for (int c = 1; c <= max_dim_; ++c) {
    std::vector<int> idx(c + 1, 0);
    do {
      std::vector<int> sorted = idx;
      std::sort(sorted.begin(), sorted.end());
      if (std::abs(at(c, idx) - at(c, sorted)) > tol) return false;
    } while (next_index(idx, n_));
  }
  return true;
}

void StepComplexon::symmetrize() {
  for (int c = 1; c <= max_dim_; ++c) {
    std::vector<double>& data = levels_[c - 1];
    std::vector<int> idx(c + 1, 0);
    // First pass accumulates orbit sums into the canonical (sorted) cell,
    // second pass writes the average back to every orbit member.
    std::vector<double> sums(data.size(), 0.0);
    std::vector<int> counts(data.size(), 0);
    do {
      std::vector<int> sorted = idx;
      std::sort(sorted.begin(), sorted.end());
      const std::size_t canon = flat_index(c, sorted.data());
      sums[canon] += data[flat_index(c, idx.data())];
      counts[canon] += 1;
    } while (next_index(idx, n_));
    std::fill(idx.begin(), idx.end(), 0);
    do {
      std::vector<int> sorted = idx;
      std::sort(sorted.begin(), sorted.end());
      const std::size_t canon = flat_index(c, sorted.data());
      data[flat_index(c, idx.data())] = sums[canon] / counts[canon];
    } while (next_index(idx, n_));
  }
}

void StepComplexon::clamp01() {
  for (auto& level : levels_) {
    for (double& v : level) v = std::clamp(v, 0.0, 1.0);
  }
}

std::size_t StepComplexon::total_cells() const {
  std::size_t total = 0;
  for (const auto& level : levels_) total += level.size();
  return total;
}

StepComplexon convex_combination(const std::vector<StepComplexon>& ws,
                                 const std::vector<double>& gammas) {
  if (ws.empty() || ws.size() != gammas.size())
    throw DomainError("inputs and weights must match and be nonempty");
  double sum = 0.0;
  for (double g : gammas) {
    if (g < 0.0) throw DomainError("weights must be nonnegative");
    sum += g;
  }
  if (std::abs(sum - 1.0) > 1e-9) throw DomainError("weights must sum to 1");
  for (const StepComplexon& w : ws) {
    if (!w.same_shape(ws.front()))
      throw ShapeError("complexon shapes must match");
  }

  StepComplexon out(ws.front().resolution(), ws.front().max_dim());
  for (int c = 1; c <= out.max_dim(); ++c) {
    std::vector<double>& target = out.mutable_level(c);
    for (std::size_t i = 0; i < ws.size(); ++i) {
      const std::vector<double>& source = ws[i].level(c);
      for (std::size_t cell = 0; cell < target.size(); ++cell) {
        target[cell] += gammas[i] * source[cell];
      }
    }
  }
  out.clamp01();
  return out;
}

namespace {

// Row-stochastic overlap matrix between m target and n source bins.
std::vector<std::vector<double>> overlap_matrix(int m, int n) {
  std::vector<std::vector<double>> p(m, std::vector<double>(n, 0.0));
  for (int j = 0; j < m; ++j) {
    const double lo = static_cast<double>(j) / m;
    const double hi = static_cast<double>(j + 1) / m;
    for (int i = 0; i < n; ++i) {
      const double slo = static_cast<double>(i) / n;
      const double shi = static_cast<double>(i + 1) / n;
      const double overlap =
          std::max(0.0, std::min(hi, shi) - std::max(lo, slo));
      p[j][i] = overlap * m;
    }
  }
  return p;
}

// Applies the overlap operator along one axis of a k-dimensional array.
std::vector<double> contract_axis(const std::vector<double>& src, int k,
                                  int axis, int n_src, int n_dst,
                                  const std::vector<std::vector<double>>& p) {
  std::size_t pre = 1, post = 1;
  for (int a = 0; a < axis; ++a) pre *= n_dst;  // already-transformed axes
  for (int a = axis + 1; a < k; ++a) post *= n_src;
  std::vector<double> dst(pre * n_dst * post, 0.0);
  for (std::size_t a = 0; a < pre; ++a) {
    for (int j = 0; j < n_dst; ++j) {
      for (int i = 0; i < n_src; ++i) {
        const double weight = p[j][i];
        if (weight == 0.0) continue;
        const std::size_t src_base = (a * n_src + i) * post;
        const std::size_t dst_base = (a * n_dst + j) * post;
        for (std::size_t b = 0; b < post; ++b) {
          dst[dst_base + b] += weight * src[src_base + b];
        }
      }
    }
  }
  return dst;
}

}  // namespace

StepComplexon resample(const StepComplexon& w, int n_target) {
  if (n_target < 1) throw DomainError("n_target must be >= 1");
  if (n_target == w.resolution()) return w;
  const auto p = overlap_matrix(n_target, w.resolution());
  StepComplexon out(n_target, w.max_dim());
  for (int c = 1; c <= w.max_dim(); ++c) {
    std::vector<double> data = w.level(c);
    for (int axis = 0; axis <= c; ++axis) {
      data = contract_axis(data, c + 1, axis, w.resolution(), n_target, p);
    }
    out.mutable_level(c) = std::move(data);
  }
  out.clamp01();
  return out;
}

StepComplexon induce_from_complex(const SimplicialComplex& k) {
  if (k.num_nodes() < 1) throw DomainError("complex has no nodes");
  const int n = k.num_nodes();
  const int d_max = std::max(1, k.max_dim());
  StepComplexon w(n, d_max);
  for (int c = 1; c <= d_max; ++c) {
    std::vector<double>& data = w.mutable_level(c);
    std::vector<int> idx(c + 1, 0);
    do {
      Simplex sorted(idx.begin(), idx.end());
      std::sort(sorted.begin(), sorted.end());
      bool distinct = true;
      for (std::size_t i = 1; i < sorted.size(); ++i) {
        if (sorted[i] == sorted[i - 1]) {
          distinct = false;
          break;
        }
      }
      if (distinct && k.contains(sorted)) {
        data[w.flat_index(c, idx.data())] = 1.0;
      }
    } while (next_index(idx, n));
  }
  return w;
}

double hom_density(const SimplicialComplex& f, const StepComplexon& w) {
  if (f.num_nodes() > 6)
    throw CapabilityError("hom_density pattern capped at 6 nodes");
  if (f.num_nodes() == 0) throw DomainError("pattern has no nodes");
  if (f.max_dim() > w.max_dim())
    throw DomainError("pattern dimension exceeds complexon dimension");

  struct PatternSimplex {
    int dim;
    std::vector<int> vertices;
  };
  std::vector<PatternSimplex> simplices;
  for (int d = 1; d <= f.max_dim(); ++d) {
    for (const Simplex& s : f.sorted_level(d)) {
      simplices.push_back({d, s});
    }
  }

  const int nf = f.num_nodes();
  const int n = w.resolution();
  std::vector<int> assignment(nf, 0);
  std::vector<int> cell;
  double total = 0.0;
  do {
    double product = 1.0;
    for (const PatternSimplex& s : simplices) {
      cell.clear();
      for (int v : s.vertices) cell.push_back(assignment[v]);
      product *= w.level(s.dim)[w.flat_index(s.dim, cell.data())];
      if (product == 0.0) break;
    }
    total += product;
  } while (next_index(assignment, n));
  return total / static_cast<double>(ipow(n, nf));
}

double l1_distance(const StepComplexon& w1, const StepComplexon& w2, int c) {
  if (!w1.same_shape(w2)) throw ShapeError("complexon shapes must match");
  const std::vector<double>& a = w1.level(c);
  const std::vector<double>& b = w2.level(c);
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += std::abs(a[i] - b[i]);
  return sum / static_cast<double>(a.size());
}

double cut_distance_surrogate(const StepComplexon& w1, const StepComplexon& w2,
                              const std::vector<double>& betas) {
  if (!w1.same_shape(w2)) throw ShapeError("complexon shapes must match");
  if (static_cast<int>(betas.size()) != w1.max_dim())
    throw DomainError("betas must have one entry per dimension");
  double total = 0.0;
  for (int c = 1; c <= w1.max_dim(); ++c) {
    if (betas[c - 1] < 0.0) throw DomainError("betas must be nonnegative");
    total += betas[c - 1] * l1_distance(w1, w2, c);
  }
  return total;
}

double cut_norm_dim1_exact(const StepComplexon& w1, const StepComplexon& w2) {
  if (!w1.same_shape(w2)) throw ShapeError("complexon shapes must match");
  const int n = w1.resolution();
  if (n > 14) throw CapabilityError("exact cut norm capped at 14 bins");
  const std::vector<double>& a = w1.level(1);
  const std::vector<double>& b = w2.level(1);

  // For fixed S the optimal T takes all columns whose restricted sum has
  // one sign, so only S needs enumeration.
  double best = 0.0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<double> column_sums(n, 0.0);
    for (int s = 0; s < n; ++s) {
      if (!(mask & (1u << s))) continue;
      for (int t = 0; t < n; ++t) {
        column_sums[t] += a[static_cast<std::size_t>(s) * n + t] -
                          b[static_cast<std::size_t>(s) * n + t];
      }
    }
    double positive = 0.0, negative = 0.0;
    for (double v : column_sums) {
      if (v > 0) positive += v;
      if (v < 0) negative -= v;
    }
    best = std::max({best, positive, negative});
  }
  return best / (static_cast<double>(n) * n);
}

DensityBoundReport check_density_bound(const std::vector<StepComplexon>& ws,
                              const std::vector<double>& gammas, int j,
                              const SimplicialComplex& f) {
  if (j < 0 || j >= static_cast<int>(ws.size()))
    throw DomainError("index out of range");
  const StepComplexon mixture = convex_combination(ws, gammas);

  std::vector<double> betas(ws.front().max_dim(), 0.0);
  for (int c = 1; c <= ws.front().max_dim(); ++c) {
    betas[c - 1] = static_cast<double>(f.count(c));
  }

  DensityBoundReport report;
  report.lhs = std::abs(hom_density(f, mixture) - hom_density(f, ws[j]));
  report.rhs = 0.0;
  for (std::size_t i = 0; i < ws.size(); ++i) {
    if (static_cast<int>(i) == j) continue;
    report.rhs += gammas[i] * cut_distance_surrogate(ws[i], ws[j], betas);
  }
  report.holds = report.lhs <= report.rhs + 1e-12;
  return report;
}

std::string complexon_to_json(const StepComplexon& w) {
  nlohmann::json obj;
  obj["n"] = w.resolution();
  obj["max_dim"] = w.max_dim();
  nlohmann::json levels = nlohmann::json::object();
  for (int c = 1; c <= w.max_dim(); ++c) {
    levels[std::to_string(c)] = w.level(c);
  }
  obj["levels"] = levels;
  return obj.dump();
}

StepComplexon complexon_from_json(const std::string& text) {
  nlohmann::json obj;
  try {
    obj = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("complexon JSON parse error: ") + e.what());
  }
  if (!obj.contains("n") || !obj.contains("max_dim") || !obj.contains("levels"))
    throw DataError("complexon JSON missing n/max_dim/levels");
  const int n = obj["n"].get<int>();
  const int d = obj["max_dim"].get<int>();
  if (n < 1 || d < 1) throw DataError("complexon JSON has invalid shape");
  StepComplexon w(n, d);
  for (int c = 1; c <= d; ++c) {
    const std::string key = std::to_string(c);
    if (!obj["levels"].contains(key))
      throw DataError("complexon JSON missing level " + key);
    std::vector<double> data = obj["levels"][key].get<std::vector<double>>();
    if (data.size() != w.level(c).size())
      throw DataError("complexon JSON level " + key + " has wrong size");
    for (double v : data) {
      if (!(v >= 0.0 && v <= 1.0))
        throw DataError("complexon JSON entry outside [0,1]");
    }
    w.mutable_level(c) = std::move(data);
  }
  if (!w.is_symmetric(1e-9)) throw DataError("complexon JSON not symmetric");
  return w;
}

void write_complexon_file(const StepComplexon& w, const std::string& path) {
  write_text_file(path, complexon_to_json(w) + "\n");
}

StepComplexon read_complexon_file(const std::string& path) {
  return complexon_from_json(read_text_file(path));
}

}  // namespace scmad
