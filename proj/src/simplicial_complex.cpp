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

#include "scmad/simplicial_complex.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace scmad {

namespace {
const SimplexSet kEmptyLevel;

bool is_canonical(const Simplex& s) {
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i] <= s[i - 1]) return false;
  }
  return true;
}
}  // namespace

SimplicialComplex::SimplicialComplex(int num_nodes) : num_nodes_(num_nodes) {
  if (num_nodes < 0) throw DomainError("num_nodes must be nonnegative");
}

int SimplicialComplex::max_dim() const {
  for (int d = static_cast<int>(levels_.size()); d >= 1; --d) {
    if (!levels_[d - 1].empty()) return d;
  }
  return 0;
}

void SimplicialComplex::add(Simplex s) {
  if (s.size() < 2) throw DomainError("simplex must have dimension >= 1");
  if (!is_canonical(s))
    throw DomainError("simplex vertices must be strictly increasing");
  if (s.front() < 0 || s.back() >= num_nodes_)
    throw DomainError("simplex vertex out of range");
  const int d = static_cast<int>(s.size()) - 1;
  if (static_cast<int>(levels_.size()) < d) levels_.resize(d);
  levels_[d - 1].insert(std::move(s));
}

void SimplicialComplex::add_with_faces(const Simplex& s) {
  add(s);
  if (s.size() == 2) return;
  Simplex face(s.size() - 1);
  for (std::size_t skip = 0; skip < s.size(); ++skip) {
    std::size_t j = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i != skip) face[j++] = s[i];
    }
    if (!contains(face)) add_with_faces(face);
  }
}

bool SimplicialComplex::contains(const Simplex& s) const {
  const int d = static_cast<int>(s.size()) - 1;
  if (d < 1 || d > static_cast<int>(levels_.size())) return false;
  return levels_[d - 1].count(s) > 0;
}

std::size_t SimplicialComplex::count(int dim) const {
  return level(dim).size();
}

const SimplexSet& SimplicialComplex::level(int dim) const {
  if (dim < 1 || dim > static_cast<int>(levels_.size())) return kEmptyLevel;
  return levels_[dim - 1];
}

std::vector<Simplex> SimplicialComplex::sorted_level(int dim) const {
  const SimplexSet& set = level(dim);
  std::vector<Simplex> out(set.begin(), set.end());
  std::sort(out.begin(), out.end());
  return out;
}

int SimplicialComplex::degree(int node, int dim) const {
  if (node < 0 || node >= num_nodes_) throw DomainError("node out of range");
  if (dim < 1) throw DomainError("dimension must be >= 1");
  int count = 0;
  for (const Simplex& s : level(dim)) {
    if (std::binary_search(s.begin(), s.end(), node)) ++count;
  }
  return count;
}

bool SimplicialComplex::operator==(const SimplicialComplex& other) const {
  if (num_nodes_ != other.num_nodes_) return false;
  const int d_max = std::max(max_dim(), other.max_dim());
  for (int d = 1; d <= d_max; ++d) {
    if (level(d) != other.level(d)) return false;
  }
  return true;
}

bool validate_closure(const SimplicialComplex& k) {
  for (int d = 2; d <= k.max_dim(); ++d) {
    for (const Simplex& s : k.level(d)) {
      Simplex face(s.size() - 1);
      for (std::size_t skip = 0; skip < s.size(); ++skip) {
        std::size_t j = 0;
        for (std::size_t i = 0; i < s.size(); ++i) {
          if (i != skip) face[j++] = s[i];
        }
        if (!k.contains(face)) return false;
      }
    }
  }
  return true;
}

SimplicialComplex vietoris_rips(const std::vector<Point2>& points, double eps,
                                int max_dim) {
  if (points.size() < 2) throw DomainError("vietoris_rips needs >= 2 points");
  if (eps <= 0.0) throw DomainError("eps must be positive");
  if (max_dim < 1) throw DomainError("max_dim must be >= 1");

  const int n = static_cast<int>(points.size());
  SimplicialComplex k(n);
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double dx = points[i][0] - points[j][0];
      const double dy = points[i][1] - points[j][1];
      if (std::sqrt(dx * dx + dy * dy) <= eps) {
        adj[i][j] = adj[j][i] = true;
        k.add({i, j});
      }
    }
  }

  // Clique rule: extend each (d-1)-simplex by a larger vertex adjacent to
  // all of its vertices.
  for (int d = 2; d <= max_dim; ++d) {
    std::vector<Simplex> previous = k.sorted_level(d - 1);
    for (const Simplex& s : previous) {
      for (int v = s.back() + 1; v < n; ++v) {
        bool all_adjacent = true;
        for (int u : s) {
          if (!adj[u][v]) {
            all_adjacent = false;
            break;
          }
        }
        if (all_adjacent) {
          Simplex extended = s;
          extended.push_back(v);
          k.add(std::move(extended));
        }
      }
    }
  }
  return k;
}

namespace {

struct HomSearch {
  const SimplicialComplex* f = nullptr;
  const SimplicialComplex* k = nullptr;
  int nf = 0;
  int nk = 0;
  // Simplices of F grouped by the largest vertex they contain, so each is
  // checked as soon as its last vertex is assigned.
  std::vector<std::vector<Simplex>> by_last_vertex;
  std::vector<int> assignment;
  long long count = 0;

  bool check(const Simplex& simplex) const {
    Simplex image;
    image.reserve(simplex.size());
    for (int v : simplex) image.push_back(assignment[v]);
    std::sort(image.begin(), image.end());
    for (std::size_t i = 1; i < image.size(); ++i) {
      if (image[i] == image[i - 1]) return false;  // collapsed simplex
    }
    return k->contains(image);
  }

  void search(int vertex) {
    if (vertex == nf) {
      ++count;
      return;
    }
    for (int target = 0; target < nk; ++target) {
      assignment[vertex] = target;
      bool feasible = true;
      for (const Simplex& s : by_last_vertex[vertex]) {
        if (!check(s)) {
          feasible = false;
          break;
        }
      }
      if (feasible) search(vertex + 1);
    }
  }
};

}  // namespace

long long homomorphism_count(const SimplicialComplex& f,
                             const SimplicialComplex& k) {
  if (f.num_nodes() > 6)
    throw CapabilityError("homomorphism pattern capped at 6 nodes");
  if (f.num_nodes() == 0 || k.num_nodes() == 0)
    throw DomainError("empty node set");

  HomSearch search;
  search.f = &f;
  search.k = &k;
  search.nf = f.num_nodes();
  search.nk = k.num_nodes();
  search.by_last_vertex.resize(search.nf);
  for (int d = 1; d <= f.max_dim(); ++d) {
    for (const Simplex& s : f.level(d)) {
      search.by_last_vertex[s.back()].push_back(s);
    }
  }
  search.assignment.assign(search.nf, 0);
  search.search(0);
  return search.count;
}

double homomorphism_density(const SimplicialComplex& f,
                            const SimplicialComplex& k) {
  const long long hom = homomorphism_count(f, k);
  return static_cast<double>(hom) /
         std::pow(static_cast<double>(k.num_nodes()), f.num_nodes());
}

}  // namespace scmad
