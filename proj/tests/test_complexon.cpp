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
#include "scmad/complexon.hpp"
#include "scmad/eval_harness.hpp"
#include "scmad/rng.hpp"
#include "test_support.hpp"

using namespace scmad;
using scmad_test::brute_force_cut_norm;
using scmad_test::full_2simplex;
using scmad_test::poly_fit_eval;
using scmad_test::random_complex;
using scmad_test::random_complexon;

namespace {

StepComplexon two_by_two() {
  StepComplexon w(2, 1);
  w.at(1, {0, 0}) = 0.1;
  w.at(1, {0, 1}) = 0.3;
  w.at(1, {1, 0}) = 0.3;
  w.at(1, {1, 1}) = 0.8;
  return w;
}

}  // namespace

TEST_CASE("evaluate picks the containing cell") {
  StepComplexon w = two_by_two();
  CHECK(w.evaluate(1, {0.25, 0.75}) == doctest::Approx(0.3));
  CHECK(w.evaluate(1, {1.0, 1.0}) == doctest::Approx(0.8));
  CHECK(w.evaluate(1, {0.75, 0.25}) == w.evaluate(1, {0.25, 0.75}));
  CHECK_THROWS_AS(w.evaluate(2, {0.1, 0.1, 0.1}), DomainError);
}

TEST_CASE("convex_combination examples") {
  StepComplexon a = StepComplexon::constant(2, {0.2});
  StepComplexon b = StepComplexon::constant(2, {0.6});

  StepComplexon first = convex_combination({a, b}, {1.0, 0.0});
  CHECK(first.at(1, {0, 1}) == doctest::Approx(0.2));

  StepComplexon mid = convex_combination({a, b}, {0.5, 0.5});
  CHECK(mid.at(1, {0, 0}) == doctest::Approx(0.4));

  StepComplexon c0 = StepComplexon::constant(2, {0.0});
  StepComplexon c3 = StepComplexon::constant(2, {0.3});
  StepComplexon c9 = StepComplexon::constant(2, {0.9});
  StepComplexon avg =
      convex_combination({c0, c3, c9}, {1.0 / 3, 1.0 / 3, 1.0 / 3});
  CHECK(avg.at(1, {1, 0}) == doctest::Approx(0.4));

  CHECK_THROWS_AS(convex_combination({a, b}, {0.7, 0.7}), DomainError);
  StepComplexon other(3, 1);
  CHECK_THROWS_AS(convex_combination({a, other}, {0.5, 0.5}), ShapeError);
}

TEST_CASE("convex_combination preserves symmetry and range") {
  StepComplexon a = random_complexon(3, 2, 11);
  StepComplexon b = random_complexon(3, 2, 12);
  StepComplexon mix = convex_combination({a, b}, {0.3, 0.7});
  CHECK(mix.is_symmetric(1e-12));
  for (int c = 1; c <= 2; ++c) {
    for (double v : mix.level(c)) {
      CHECK(v >= 0.0);
      CHECK(v <= 1.0);
    }
  }
}

TEST_CASE("resample examples") {
  StepComplexon w = two_by_two();

  StepComplexon same = resample(w, 2);
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      CHECK(same.at(1, {a, b}) == doctest::Approx(w.at(1, {a, b})));
    }
  }

  StepComplexon coarse = resample(w, 1);
  CHECK(coarse.at(1, {0, 0}) == doctest::Approx((0.1 + 0.3 + 0.3 + 0.8) / 4));

  StepComplexon fine = resample(StepComplexon::constant(1, {0.5}), 4);
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      CHECK(fine.at(1, {a, b}) == doctest::Approx(0.5));
    }
  }
}

TEST_CASE("hom_density closed forms") {
  SimplicialComplex edge(2);
  edge.add({0, 1});
  StepComplexon wp = StepComplexon::constant(3, {0.4});
  CHECK(hom_density(edge, wp) == doctest::Approx(0.4));

  StepComplexon wpq = StepComplexon::constant(2, {0.7, 0.3});
  CHECK(hom_density(full_2simplex(), wpq) ==
        doctest::Approx(0.7 * 0.7 * 0.7 * 0.3));
}

TEST_CASE("induce_from_complex examples") {
  SimplicialComplex edge(2);
  edge.add({0, 1});
  StepComplexon we = induce_from_complex(edge);
  CHECK(we.at(1, {0, 0}) == 0.0);
  CHECK(we.at(1, {0, 1}) == 1.0);
  CHECK(we.at(1, {1, 0}) == 1.0);
  CHECK(we.at(1, {1, 1}) == 0.0);

  StepComplexon wf = induce_from_complex(full_2simplex());
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      CHECK(wf.at(1, {a, b}) == (a == b ? 0.0 : 1.0));
      for (int c = 0; c < 3; ++c) {
        const bool distinct = a != b && a != c && b != c;
        CHECK(wf.at(2, {a, b, c}) == (distinct ? 1.0 : 0.0));
      }
    }
  }
}

TEST_CASE("oracle equivalence: density in induced complexon equals "
          "density in the complex") {
  const MotifBank bank = MotifBank::standard();
  for (int trial = 0; trial < 20; ++trial) {
    SimplicialComplex k = random_complex(3 + trial % 4, 0.6, 0.6, 900 + trial);
    StepComplexon w = induce_from_complex(k);
    for (const SimplicialComplex& f : bank.motifs) {
      if (f.max_dim() > w.max_dim()) continue;
      const double via_w = hom_density(f, w);
      const double via_k = homomorphism_density(f, k);
      CHECK(std::abs(via_w - via_k) <= 1e-12);
    }
  }
}

TEST_CASE("multilinearity: density along a linear mix is a polynomial") {
  StepComplexon w1 = random_complexon(3, 2, 21);
  StepComplexon w2 = random_complexon(3, 2, 22);
  SimplicialComplex f = full_2simplex();
  const int num_simplices = 4;  // three edges and one triangle

  std::vector<double> xs, ys;
  for (int i = 0; i <= num_simplices; ++i) {
    const double lam = static_cast<double>(i) / (num_simplices + 1);
    xs.push_back(lam);
    ys.push_back(hom_density(f, convex_combination({w1, w2},
                                                   {1 - lam, lam})));
  }
  const double held_out = 0.83;
  const double predicted = poly_fit_eval(xs, ys, held_out);
  const double actual =
      hom_density(f, convex_combination({w1, w2}, {1 - held_out, held_out}));
  CHECK(std::abs(predicted - actual) <= 1e-9);
}

TEST_CASE("cut_distance_surrogate examples") {
  StepComplexon a = random_complexon(4, 1, 31);
  CHECK(cut_distance_surrogate(a, a, {1.0}) == doctest::Approx(0.0));

  StepComplexon p = StepComplexon::constant(3, {0.7});
  StepComplexon q = StepComplexon::constant(3, {0.2});
  CHECK(cut_distance_surrogate(p, q, {1.0}) == doctest::Approx(0.5));

  StepComplexon u = StepComplexon::constant(2, {0.5, 0.4});
  StepComplexon v = StepComplexon::constant(2, {0.3, 0.3});
  CHECK(cut_distance_surrogate(u, v, {3.0, 1.0}) == doctest::Approx(0.7));
}

TEST_CASE("cut_norm_dim1_exact examples and oracle") {
  StepComplexon a = random_complexon(4, 1, 41);
  CHECK(cut_norm_dim1_exact(a, a) == doctest::Approx(0.0));

  StepComplexon p = StepComplexon::constant(3, {0.7});
  StepComplexon q = StepComplexon::constant(3, {0.2});
  CHECK(cut_norm_dim1_exact(p, q) == doctest::Approx(0.5));

  for (int trial = 0; trial < 10; ++trial) {
    StepComplexon w1 = random_complexon(4, 1, 60 + 2 * trial);
    StepComplexon w2 = random_complexon(4, 1, 61 + 2 * trial);
    const double exact = cut_norm_dim1_exact(w1, w2);
    CHECK(exact == doctest::Approx(brute_force_cut_norm(w1, w2)));
    CHECK(exact <= l1_distance(w1, w2, 1) + 1e-12);
  }
}

TEST_CASE("check_density_bound degenerate cases") {
  StepComplexon w1 = random_complexon(3, 2, 71);
  StepComplexon w2 = random_complexon(3, 2, 72);
  SimplicialComplex f = full_2simplex();

  DensityBoundReport one_hot = check_density_bound({w1, w2}, {0.0, 1.0}, 1, f);
  CHECK(one_hot.lhs == doctest::Approx(0.0));
  CHECK(one_hot.rhs == doctest::Approx(0.0));
  CHECK(one_hot.holds);

  DensityBoundReport same = check_density_bound({w1, w1}, {0.5, 0.5}, 0, f);
  CHECK(same.lhs == doctest::Approx(0.0));
  CHECK(same.holds);
}

TEST_CASE("check_density_bound pairwise dimension-1 reduction holds on random "
          "draws") {
  SimplicialComplex edge(2);
  edge.add({0, 1});
  SimplicialComplex path(3);
  path.add({0, 1});
  path.add({1, 2});

  Rng rng = make_rng(99);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    StepComplexon w1 = random_complexon(4, 1, 200 + 2 * trial);
    StepComplexon w2 = random_complexon(4, 1, 201 + 2 * trial);
    const double lam = unif(rng);
    const SimplicialComplex& f = trial % 2 == 0 ? edge : path;
    DensityBoundReport report = check_density_bound({w1, w2}, {lam, 1 - lam}, 0, f);
    CHECK(report.holds);
  }
}

TEST_CASE("complexon JSON round trip and validation") {
  StepComplexon w = random_complexon(3, 2, 81);
  StepComplexon back = complexon_from_json(complexon_to_json(w));
  CHECK(back.resolution() == 3);
  CHECK(back.max_dim() == 2);
  for (int c = 1; c <= 2; ++c) {
    CHECK(back.level(c) == w.level(c));
  }

  CHECK_THROWS_AS(complexon_from_json("{\"n\":1}"), DataError);
  CHECK_THROWS_AS(
      complexon_from_json(
          "{\"n\":2,\"max_dim\":1,\"levels\":{\"1\":[0.1,0.2,0.3,0.4]}}"),
      DataError);  // asymmetric
  CHECK_THROWS_AS(
      complexon_from_json(
          "{\"n\":2,\"max_dim\":1,\"levels\":{\"1\":[0.1,1.2,1.2,0.4]}}"),
      DataError);  // out of range
}
