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

#ifndef SCMAD_SIMPLICIAL_COMPLEX_HPP
#define SCMAD_SIMPLICIAL_COMPLEX_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <unordered_set>
#include <vector>

#include "scmad/errors.hpp"

namespace scmad {

// A simplex in canonical form: strictly increasing vertex ids.
using Simplex = std::vector<int>;

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (int v : s) {
      h ^= static_cast<std::uint64_t>(v) + 0x100000001B3ULL;
      h *= 0x100000001B3ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

using SimplexSet = std::unordered_set<Simplex, SimplexHash>;

// Finite simplicial complex on nodes 0..num_nodes-1. Dimension 0 is
// implicit (every node is present); levels store simplices of dimension
// >= 1. Closure under restriction is *not* enforced on insertion; use
// add_with_faces or validate_closure where it matters.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  explicit SimplicialComplex(int num_nodes);

  int num_nodes() const { return num_nodes_; }

  // Largest dimension with a nonempty level; 0 when only nodes exist.
  int max_dim() const;

  // Inserts a simplex of dimension >= 1. Must be strictly increasing with
  // vertices in range; throws DomainError otherwise.
  void add(Simplex s);

  // Inserts a simplex together with all of its proper faces.
  void add_with_faces(const Simplex& s);

  bool contains(const Simplex& s) const;

  std::size_t count(int dim) const;

  // Simplices of the given dimension (>= 1); empty set if none.
  const SimplexSet& level(int dim) const;

  // Level contents in lexicographic order; deterministic for output.
  std::vector<Simplex> sorted_level(int dim) const;

  // |{sigma in K^(d) : node in sigma}|. Throws DomainError on
  // out-of-range node or dim < 1.
  int degree(int node, int dim) const;

  bool operator==(const SimplicialComplex& other) const;

 private:
  int num_nodes_ = 0;
  std::vector<SimplexSet> levels_;  // levels_[d-1] holds dimension d
};

// True iff every codimension-1 face of every simplex is present.
bool validate_closure(const SimplicialComplex& k);

using Point2 = std::array<double, 2>;

// Vietoris-Rips complex: edge (i,j) iff the Euclidean distance is <= eps;
// higher simplices by the clique rule up to max_dim. Throws DomainError
// for fewer than 2 points, eps <= 0, or max_dim < 1.
SimplicialComplex vietoris_rips(const std::vector<Point2>& points, double eps,
                                int max_dim);

// Number of maps from the nodes of F to the nodes of K such that every
// simplex of F maps onto a simplex of K of the same cardinality (no
// collapsing within a simplex). Brute force; requires |F^(0)| <= 6.
long long homomorphism_count(const SimplicialComplex& f,
                             const SimplicialComplex& k);

// hom(F,K) normalized by the number of all vertex maps, |K^(0)|^{|F^(0)|}.
double homomorphism_density(const SimplicialComplex& f,
                            const SimplicialComplex& k);

}  // namespace scmad

#endif  // SCMAD_SIMPLICIAL_COMPLEX_HPP
