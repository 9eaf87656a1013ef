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
#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "doctest.h"
#include "scmad/complexon.hpp"
#include "scmad/estimation.hpp"
#include "scmad/rng.hpp"
#include "scmad/sampling.hpp"
#include "test_support.hpp"

using namespace scmad;
using scmad_test::full_2simplex;
using scmad_test::random_complex;

TEST_CASE("degree_sum examples") {
  std::vector<double> full = degree_sum(full_2simplex(), 0.5);
  for (double v : full) CHECK(v == doctest::Approx(1.25));

  SimplicialComplex path(3);
  path.add({0, 1});
  path.add({1, 2});
  std::vector<double> scores = degree_sum(path, 0.5);
  CHECK(scores[0] == doctest::Approx(0.5));
  CHECK(scores[1] == doctest::Approx(1.0));
  CHECK(scores[2] == doctest::Approx(0.5));

  SimplicialComplex empty(4);
  for (double v : degree_sum(empty, 0.5)) CHECK(v == 0.0);

  CHECK_THROWS_AS(degree_sum(path, 0.0), DomainError);
  CHECK_THROWS_AS(degree_sum(path, 1.0), DomainError);
}

TEST_CASE("sort_nodes examples") {
  SimplicialComplex path(3);
  path.add({0, 1});
  path.add({1, 2});
  SimplicialComplex sorted = sort_nodes(path, 0.5);
  // Node 1 has the unique maximal score, so it becomes node 0.
  CHECK(sorted.degree(0, 1) == 2);

  // A star centered at node 0 is already sorted (ties by index keep the
  // leaves in place).
  SimplicialComplex star(4);
  star.add({0, 1});
  star.add({0, 2});
  star.add({0, 3});
  CHECK(sort_nodes(star, 0.5) == star);
}

TEST_CASE("sort_nodes preserves isomorphism invariants") {
  for (int trial = 0; trial < 20; ++trial) {
    SimplicialComplex k = random_complex(8, 0.5, 0.5, 300 + trial);
    SimplicialComplex sorted = sort_nodes(k, 0.5);
    CHECK(validate_closure(sorted) == validate_closure(k));
    for (int d = 1; d <= 2; ++d) CHECK(sorted.count(d) == k.count(d));

    std::vector<double> before = degree_sum(k, 0.5);
    std::vector<double> after = degree_sum(sorted, 0.5);
    std::sort(before.begin(), before.end());
    std::sort(after.begin(), after.end());
    for (std::size_t i = 0; i < before.size(); ++i) {
      CHECK(after[i] == doctest::Approx(before[i]));
    }
    const std::vector<double> sorted_scores = degree_sum(sorted, 0.5);
    CHECK(std::is_sorted(sorted_scores.rbegin(), sorted_scores.rend()));
  }
}

TEST_CASE("histogram_estimate with h=1 equals the induced complexon") {
  SimplicialComplex full = full_2simplex();
  StepComplexon hist = histogram_estimate(full, 1);
  StepComplexon induced = induce_from_complex(full);
  for (int c = 1; c <= 2; ++c) CHECK(hist.level(c) == induced.level(c));
}

TEST_CASE("histogram_estimate drops trailing nodes") {
  SimplicialComplex k(10);
  k.add({8, 9});  // node 9 falls outside the 3 bins of 3
  StepComplexon hist = histogram_estimate(k, 3);
  CHECK(hist.resolution() == 3);
  for (double v : hist.level(1)) CHECK(v == 0.0);
  CHECK_THROWS_AS(histogram_estimate(k, 11), DomainError);
}

TEST_CASE("histogram_estimate concentrates on a constant complexon") {
  StepComplexon half = StepComplexon::constant(1, {0.5});
  SampledComplex sample = sample_complex(half, 200, 12345);
  StepComplexon hist = histogram_estimate(sort_nodes(sample.complex, 0.5), 20);
  CHECK(hist.resolution() == 10);
  for (double v : hist.level(1)) {
    CHECK(std::abs(v - 0.5) <= 0.15);
  }
}

TEST_CASE("histogram cell counts ordered tuples within a bin") {
  // Two nodes in one bin joined by an edge: of the 4 ordered pairs, the
  // two with distinct nodes are the edge, so the cell value is 2/4.
  SimplicialComplex k(2);
  k.add({0, 1});
  StepComplexon hist = histogram_estimate(k, 2);
  CHECK(hist.resolution() == 1);
  CHECK(hist.at(1, {0, 0}) == doctest::Approx(0.5));
}

TEST_CASE("facet_correction examples") {
  StepComplexon faceted(2, 2);
  for (double& v : faceted.mutable_level(1)) v = 0.8;
  for (double& v : faceted.mutable_level(2)) v = 0.8 * 0.8 * 0.8 * 0.4;
  StepComplexon corrected = facet_correction(faceted);
  CHECK(corrected.at(1, {0, 1}) == doctest::Approx(0.8));
  CHECK(corrected.at(2, {0, 1, 1}) == doctest::Approx(0.4));

  StepComplexon with_zero(2, 2);
  for (double& v : with_zero.mutable_level(2)) v = 0.3;
  StepComplexon zeroed = facet_correction(with_zero);
  for (double v : zeroed.level(2)) CHECK(v == 0.0);

  StepComplexon noisy(1, 2);
  noisy.mutable_level(1)[0] = 0.5;
  noisy.mutable_level(2)[0] = 0.5 * 0.5 * 0.5 * 1.3;
  StepComplexon clamped = facet_correction(noisy);
  CHECK(clamped.at(2, {0, 0, 0}) == doctest::Approx(1.0));
}

TEST_CASE("estimate_complexon trivial cases") {
  StepComplexon full = estimate_complexon(full_2simplex(), 0.5, 1);
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      for (int c = 0; c < 3; ++c) {
        const bool distinct = a != b && a != c && b != c;
        CHECK(full.at(2, {a, b, c}) == (distinct ? 1.0 : 0.0));
      }
    }
  }

  SimplicialComplex empty(9);
  StepComplexon zero = estimate_complexon(empty, 0.5, 3);
  for (double v : zero.level(1)) CHECK(v == 0.0);
}

TEST_CASE("estimates are symmetric and in range") {
  for (int trial = 0; trial < 5; ++trial) {
    SimplicialComplex k = random_complex(20, 0.4, 0.5, 400 + trial);
    StepComplexon w = estimate_complexon(k, 0.5, 4);
    CHECK(w.is_symmetric(1e-12));
    for (int c = 1; c <= w.max_dim(); ++c) {
      for (double v : w.level(c)) {
        CHECK(v >= 0.0);
        CHECK(v <= 1.0);
      }
    }
  }
}

TEST_CASE("permutation invariance with distinct degree sums") {
  // A complex whose degree sums are all distinct sorts identically from
  // any input labeling.
  SimplicialComplex k(5);
  k.add({0, 1});
  k.add({0, 2});
  k.add({0, 3});
  k.add({0, 4});
  k.add({1, 2});
  k.add({1, 3});
  k.add({2, 3});
  k.add_with_faces({0, 1, 2});

  std::vector<int> perm = {3, 0, 4, 1, 2};
  SimplicialComplex relabeled(5);
  for (int d = 1; d <= k.max_dim(); ++d) {
    for (const Simplex& s : k.sorted_level(d)) {
      Simplex image;
      for (int v : s) image.push_back(perm[v]);
      std::sort(image.begin(), image.end());
      relabeled.add(image);
    }
  }
  StepComplexon wa = estimate_complexon(k, 0.5, 1);
  StepComplexon wb = estimate_complexon(relabeled, 0.5, 1);
  for (int c = 1; c <= wa.max_dim(); ++c) {
    CHECK(wa.level(c) == wb.level(c));
  }
}

TEST_CASE("default bin size is the square-root rule") {
  CHECK(default_bin_size(100) == 10);
  CHECK(default_bin_size(101) == 11);
  CHECK(default_bin_size(1) == 1);
}

TEST_CASE("estimation recovers a degree-separable 2-block complexon") {
  // Two blocks with different expected degrees so degree-sum sorting can
  // tell them apart; symmetric blocks share a degree and are not
  // identifiable this way.
  StepComplexon truth(2, 2);
  truth.at(1, {0, 0}) = 0.9;
  truth.at(1, {0, 1}) = 0.2;
  truth.at(1, {1, 0}) = 0.2;
  truth.at(1, {1, 1}) = 0.3;
  for (double& v : truth.mutable_level(2)) v = 0.5;

  const int n_nodes = 300;
  double err1 = 0.0, err2 = 0.0;
  const int trials = 10;
  for (int trial = 0; trial < trials; ++trial) {
    SampledComplex sample = sample_complex(truth, n_nodes, 7000 + trial);
    StepComplexon est = estimate_complexon(sample.complex, 0.5, 30);
    StepComplexon coarse = resample(est, 2);
    err1 += l1_distance(coarse, truth, 1);
    err2 += l1_distance(coarse, truth, 2);
  }
  CHECK(err1 / trials <= 0.2);
  CHECK(err2 / trials <= 0.2);
}
