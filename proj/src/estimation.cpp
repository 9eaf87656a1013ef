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

#include "scmad/estimation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace scmad {

std::vector<double> degree_sum(const SimplicialComplex& k, double tau) {
  if (tau <= 0.0 || tau >= 1.0) throw DomainError("tau must be in (0,1)");
  std::vector<double> scores(k.num_nodes(), 0.0);
  double factor = tau;
  for (int c = 1; c <= k.max_dim(); ++c, factor *= tau) {
    for (const Simplex& s : k.level(c)) {
      for (int v : s) scores[v] += factor;
    }
  }
  return scores;
}

SimplicialComplex sort_nodes(const SimplicialComplex& k, double tau) {
  const std::vector<double> scores = degree_sum(k, tau);
  std::vector<int> order(k.num_nodes());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&scores](int a, int b) {
    if (scores[a] != scores[b]) return scores[a] > scores[b];
    return a < b;  // ties by original index
  });
  std::vector<int> new_label(k.num_nodes());
  for (int rank = 0; rank < static_cast<int>(order.size()); ++rank) {
    new_label[order[rank]] = rank;
  }

  SimplicialComplex sorted(k.num_nodes());
  for (int d = 1; d <= k.max_dim(); ++d) {
    for (const Simplex& s : k.level(d)) {
      Simplex relabeled;
      relabeled.reserve(s.size());
      for (int v : s) relabeled.push_back(new_label[v]);
      std::sort(relabeled.begin(), relabeled.end());
      sorted.add(std::move(relabeled));
    }
  }
  return sorted;
}

StepComplexon histogram_estimate(const SimplicialComplex& k_sorted, int h) {
  const int num_nodes = k_sorted.num_nodes();
  if (h < 1 || h > num_nodes) throw DomainError("bin size h out of range");
  const int m = num_nodes / h;  // trailing N mod h nodes are dropped
  const int d_max = std::max(1, k_sorted.max_dim());
  StepComplexon w(m, d_max);

  // Each simplex with all nodes below m*h contributes one ordered tuple
  // per permutation of its vertices; repeated-index tuples are never
  // simplices, so iterating simplices covers every nonzero indicator in
  // the histogram sum.
  for (int c = 1; c <= k_sorted.max_dim(); ++c) {
    std::vector<double>& data = w.mutable_level(c);
    const double normalizer = std::pow(static_cast<double>(h), c + 1);
    std::vector<int> bins(c + 1);
    for (const Simplex& s : k_sorted.level(c)) {
      if (s.back() >= m * h) continue;
      Simplex perm = s;  // permute vertices: one ordered tuple each
      do {
        for (std::size_t i = 0; i < perm.size(); ++i) bins[i] = perm[i] / h;
        data[w.flat_index(c, bins.data())] += 1.0 / normalizer;
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
  return w;
}

namespace {

bool next_index(std::vector<int>& idx, int n) {
  for (int pos = static_cast<int>(idx.size()) - 1; pos >= 0; --pos) {
    if (++idx[pos] < n) return true;
    idx[pos] = 0;
  }
  return false;
}

// Product of lower-level entries over all proper coordinate subsets of
// cardinality >= 2 of the cell multi-index.
double face_product(const StepComplexon& w, const std::vector<int>& idx) {
  const int k = static_cast<int>(idx.size());
  double product = 1.0;
  std::vector<int> subset;
  for (std::uint32_t mask = 1; mask + 1 < (1u << k); ++mask) {
    const int bits = __builtin_popcount(mask);
    if (bits < 2) continue;
    subset.clear();
    for (int i = 0; i < k; ++i) {
      if (mask & (1u << i)) subset.push_back(idx[i]);
    }
    product *= w.at(bits - 1, subset);
    if (product == 0.0) return 0.0;
  }
  return product;
}

}  // namespace

StepComplexon facet_correction(const StepComplexon& faceted) {
  StepComplexon w = faceted;
  for (int c = 2; c <= w.max_dim(); ++c) {
    std::vector<double>& data = w.mutable_level(c);
    std::vector<int> idx(c + 1, 0);
    do {
      const std::size_t cell = w.flat_index(c, idx.data());
      const double denom = face_product(faceted, idx);
      if (denom == 0.0) {
        data[cell] = 0.0;
      } else {
        data[cell] = std::clamp(faceted.level(c)[cell] / denom, 0.0, 1.0);
      }
    } while (next_index(idx, w.resolution()));
  }
  return w;
}

int default_bin_size(int num_nodes) {
  return static_cast<int>(std::ceil(std::sqrt(static_cast<double>(num_nodes))));
}

StepComplexon estimate_complexon(const SimplicialComplex& k, double tau,
                                 int h) {
  if (h <= 0) h = default_bin_size(k.num_nodes());
  return facet_correction(histogram_estimate(sort_nodes(k, tau), h));
}

}  // namespace scmad
