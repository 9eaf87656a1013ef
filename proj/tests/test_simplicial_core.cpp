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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "scmad/rng.hpp"
#include "scmad/simplicial_complex.hpp"
#include "test_support.hpp"

using namespace scmad;
using scmad_test::brute_force_hom_count;
using scmad_test::full_2simplex;
using scmad_test::random_complex;

TEST_CASE("validate_closure") {
  SimplicialComplex full = full_2simplex();
  CHECK(validate_closure(full));

  SimplicialComplex broken(3);
  broken.add({0, 1});
  broken.add({0, 1, 2});
  CHECK_FALSE(validate_closure(broken));

  SimplicialComplex empty(3);
  CHECK(validate_closure(empty));
}

TEST_CASE("degree") {
  SimplicialComplex full = full_2simplex();
  CHECK(full.degree(0, 1) == 2);
  CHECK(full.degree(0, 2) == 1);

  SimplicialComplex empty(3);
  CHECK(empty.degree(1, 1) == 0);

  CHECK_THROWS_AS(full.degree(3, 1), DomainError);
  CHECK_THROWS_AS(full.degree(0, 0), DomainError);
}

TEST_CASE("degree at dim 1 matches adjacency count") {
  SimplicialComplex k = random_complex(7, 0.5, 0.5, 123);
  for (int i = 0; i < k.num_nodes(); ++i) {
    int adj = 0;
    for (int j = 0; j < k.num_nodes(); ++j) {
      if (j == i) continue;
      Simplex e = {std::min(i, j), std::max(i, j)};
      if (k.contains(e)) ++adj;
    }
    CHECK(k.degree(i, 1) == adj);
  }
}

TEST_CASE("vietoris_rips triangle examples") {
  std::vector<Point2> pts = {{0, 0}, {1, 0}, {0, 1}};

  SimplicialComplex wide = vietoris_rips(pts, 1.5, 2);
  CHECK(wide == full_2simplex());

  SimplicialComplex narrow = vietoris_rips(pts, 1.2, 2);
  CHECK(narrow.count(1) == 2);
  CHECK(narrow.contains({0, 1}));
  CHECK(narrow.contains({0, 2}));
  CHECK(narrow.count(2) == 0);

  CHECK_THROWS_AS(vietoris_rips({{0, 0}}, 1.0, 2), DomainError);
  CHECK_THROWS_AS(vietoris_rips(pts, 0.0, 2), DomainError);
}

TEST_CASE("vietoris_rips on circle points matches brute-force enumeration") {
  Rng rng = make_rng(42);
  std::uniform_real_distribution<double> angle(0.0, 2 * 3.14159265358979);
  std::vector<Point2> pts;
  for (int i = 0; i < 40; ++i) {
    const double a = angle(rng);
    pts.push_back({std::cos(a), std::sin(a)});
  }
  const double eps = 0.5;
  SimplicialComplex k = vietoris_rips(pts, eps, 2);
  CHECK(validate_closure(k));

  auto dist = [&](int i, int j) {
    const double dx = pts[i][0] - pts[j][0];
    const double dy = pts[i][1] - pts[j][1];
    return std::sqrt(dx * dx + dy * dy);
  };
  std::size_t edges = 0, triangles = 0;
  for (int i = 0; i < 40; ++i) {
    for (int j = i + 1; j < 40; ++j) {
      if (dist(i, j) <= eps) {
        ++edges;
        CHECK(k.contains({i, j}));
      }
      for (int l = j + 1; l < 40; ++l) {
        if (dist(i, j) <= eps && dist(i, l) <= eps && dist(j, l) <= eps) {
          ++triangles;
        }
      }
    }
  }
  CHECK(k.count(1) == edges);
  CHECK(k.count(2) == triangles);
}

TEST_CASE("vietoris_rips is monotone in eps") {
  Rng rng = make_rng(7);
  std::uniform_real_distribution<double> coord(0.0, 1.0);
  std::vector<Point2> pts;
  for (int i = 0; i < 15; ++i) pts.push_back({coord(rng), coord(rng)});
  SimplicialComplex small = vietoris_rips(pts, 0.3, 2);
  SimplicialComplex big = vietoris_rips(pts, 0.6, 2);
  for (int d = 1; d <= 2; ++d) {
    for (const Simplex& s : small.sorted_level(d)) CHECK(big.contains(s));
  }
}

TEST_CASE("homomorphism_count examples") {
  SimplicialComplex edge(2);
  edge.add({0, 1});
  CHECK(homomorphism_count(edge, full_2simplex()) == 6);

  SimplicialComplex node(1);
  CHECK(homomorphism_count(node, node) == 1);

  SimplicialComplex hollow(3);
  hollow.add({0, 1});
  hollow.add({0, 2});
  hollow.add({1, 2});
  CHECK(homomorphism_count(full_2simplex(), hollow) == 0);
}

TEST_CASE("homomorphism_count rejects large patterns") {
  SimplicialComplex big(7);
  big.add({0, 1});
  CHECK_THROWS_AS(homomorphism_count(big, full_2simplex()), CapabilityError);
}

TEST_CASE("homomorphism_count matches all-maps oracle on random complexes") {
  std::vector<SimplicialComplex> patterns;
  SimplicialComplex edge(2);
  edge.add({0, 1});
  patterns.push_back(edge);
  SimplicialComplex path(3);
  path.add({0, 1});
  path.add({1, 2});
  patterns.push_back(path);
  patterns.push_back(full_2simplex());
  SimplicialComplex pair(4);
  pair.add_with_faces({0, 1, 2});
  pair.add_with_faces({1, 2, 3});
  patterns.push_back(pair);

  for (int trial = 0; trial < 12; ++trial) {
    SimplicialComplex k = random_complex(5, 0.6, 0.6, 1000 + trial);
    for (const SimplicialComplex& f : patterns) {
      CHECK(homomorphism_count(f, k) == brute_force_hom_count(f, k));
    }
  }
}

TEST_CASE("homomorphism_density examples and range") {
  SimplicialComplex edge(2);
  edge.add({0, 1});
  SimplicialComplex node(1);
  SimplicialComplex full = full_2simplex();

  CHECK(homomorphism_density(edge, full) == doctest::Approx(2.0 / 3.0));
  CHECK(homomorphism_density(node, full) == doctest::Approx(1.0));
  CHECK(homomorphism_density(full, full) == doctest::Approx(6.0 / 27.0));

  for (int trial = 0; trial < 8; ++trial) {
    SimplicialComplex k = random_complex(6, 0.5, 0.5, 500 + trial);
    const double t = homomorphism_density(full, k);
    CHECK(t >= 0.0);
    CHECK(t <= 1.0);
  }
}

TEST_CASE("add enforces canonical form") {
  SimplicialComplex k(3);
  CHECK_THROWS_AS(k.add({1, 0}), DomainError);
  CHECK_THROWS_AS(k.add({0, 0}), DomainError);
  CHECK_THROWS_AS(k.add({0, 3}), DomainError);
  CHECK_THROWS_AS(k.add({0}), DomainError);
}

TEST_CASE("add_with_faces restores closure") {
  SimplicialComplex k(4);
  k.add_with_faces({0, 1, 3});
  CHECK(validate_closure(k));
  CHECK(k.count(1) == 3);
  CHECK(k.count(2) == 1);
}
