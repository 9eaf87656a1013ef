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

// Shared helpers for the test binaries. Oracles here are written
// independently of the library internals: plain exhaustive enumeration,
// no reuse of the code paths under test.

#ifndef SCMAD_TESTS_TEST_SUPPORT_HPP
#define SCMAD_TESTS_TEST_SUPPORT_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "scmad/complexon.hpp"
#include "scmad/simplicial_complex.hpp"

namespace scmad_test {

inline scmad::SimplicialComplex full_2simplex() {
  scmad::SimplicialComplex k(3);
  k.add_with_faces({0, 1, 2});
  return k;
}

// Random complex on n nodes, closed under restriction: edges with
// probability p_edge, then each triangle whose edges are all present with
// probability p_tri.
inline scmad::SimplicialComplex random_complex(int n, double p_edge,
                                               double p_tri,
                                               std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  scmad::SimplicialComplex k(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (unif(rng) < p_edge) k.add({i, j});
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int l = j + 1; l < n; ++l) {
        if (k.contains({i, j}) && k.contains({i, l}) && k.contains({j, l}) &&
            unif(rng) < p_tri) {
          k.add({i, j, l});
        }
      }
    }
  }
  return k;
}

// Exhaustive homomorphism count: iterates every map from F's nodes to K's
// nodes with an odometer and checks every simplex of F directly.
inline long long brute_force_hom_count(const scmad::SimplicialComplex& f,
                                       const scmad::SimplicialComplex& k) {
  const int nf = f.num_nodes();
  const int nk = k.num_nodes();
  std::vector<int> map(nf, 0);
  long long total = 0;
  while (true) {
    bool ok = true;
    for (int d = 1; d <= f.max_dim() && ok; ++d) {
      for (const scmad::Simplex& s : f.sorted_level(d)) {
        std::vector<int> image;
        for (int v : s) image.push_back(map[v]);
        std::sort(image.begin(), image.end());
        if (std::adjacent_find(image.begin(), image.end()) != image.end()) {
          ok = false;
          break;
        }
        if (!k.contains(image)) {
          ok = false;
          break;
        }
      }
    }
    if (ok) ++total;
    int pos = nf - 1;
    while (pos >= 0 && map[pos] == nk - 1) map[pos--] = 0;
    if (pos < 0) break;
    ++map[pos];
  }
  return total;
}

// Exact cut norm of (w1 - w2)^(1) by full enumeration of both subset
// sides (2^n x 2^n pairs).
inline double brute_force_cut_norm(const scmad::StepComplexon& w1,
                                   const scmad::StepComplexon& w2) {
  const int n = w1.resolution();
  double best = 0.0;
  for (int s = 0; s < (1 << n); ++s) {
    for (int t = 0; t < (1 << n); ++t) {
      double sum = 0.0;
      for (int a = 0; a < n; ++a) {
        if (!((s >> a) & 1)) continue;
        for (int b = 0; b < n; ++b) {
          if (!((t >> b) & 1)) continue;
          sum += w1.at(1, {a, b}) - w2.at(1, {a, b});
        }
      }
      best = std::max(best, std::abs(sum));
    }
  }
  return best / (static_cast<double>(n) * n);
}

// Random symmetric step complexon with entries in [0,1].
inline scmad::StepComplexon random_complexon(int n, int max_dim,
                                             std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  scmad::StepComplexon w(n, max_dim);
  for (int c = 1; c <= max_dim; ++c) {
    for (double& v : w.mutable_level(c)) v = unif(rng);
  }
  w.symmetrize();
  return w;
}

// Fits a polynomial of the given degree through points (xs, ys) by solving
// the Vandermonde system with Gaussian elimination; evaluates it at x.
inline double poly_fit_eval(const std::vector<double>& xs,
                            const std::vector<double>& ys, double x) {
  const int n = static_cast<int>(xs.size());
  std::vector<std::vector<double>> a(n, std::vector<double>(n + 1, 0.0));
  for (int i = 0; i < n; ++i) {
    double p = 1.0;
    for (int j = 0; j < n; ++j) {
      a[i][j] = p;
      p *= xs[i];
    }
    a[i][n] = ys[i];
  }
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    }
    std::swap(a[col], a[pivot]);
    if (std::abs(a[col][col]) < 1e-14) {
      throw std::runtime_error("singular Vandermonde system");
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const double factor = a[r][col] / a[col][col];
      for (int c = col; c <= n; ++c) a[r][c] -= factor * a[col][c];
    }
  }
  double value = 0.0;
  double p = 1.0;
  for (int j = 0; j < n; ++j) {
    value += (a[j][n] / a[j][j]) * p;
    p *= x;
  }
  return value;
}

}  // namespace scmad_test

#endif  // SCMAD_TESTS_TEST_SUPPORT_HPP
