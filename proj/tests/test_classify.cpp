#include "doctest.h"

#include <algorithm>
#include <random>

#include "weightlab/admissible.hpp"
#include "weightlab/classify.hpp"

using namespace weightlab;
using namespace weightlab::classify;
using evaluation::Factor;
using weightmod::WeightModuleDescriptor;

namespace {

Rational Q(int num, int den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

const auto kA1 = std::make_shared<const rootsys::RootSystem>(rootsys::build_root_system("A1"));
const DenseSL2 kW{0, Rational(-1, 4)};

WeightModuleDescriptor fd(int n) { return weightmod::finite_dim(kA1, {n}); }

EvaluationDescriptor desc(std::vector<std::pair<int, WeightModuleDescriptor>> fs) {
  std::vector<Factor> factors;
  for (auto& [p, m] : fs) factors.push_back({Point{{Q(p)}}, m});
  return evaluation::make_descriptor(evaluation::make_ring({"t"}, {}), kA1, std::move(factors));
}

}  // namespace

TEST_CASE("canonical form examples") {
  auto sorted = canonical_form(desc({{2, fd(2)}, {1, fd(4)}}));
  REQUIRE(sorted.support.size() == 2);
  CHECK(sorted.support[0].point.coords[0] == 1);
  CHECK(sorted.support[0].label == IsoClassLabel{FiniteLabel{{4}}});
  CHECK(sorted.support[1].label == IsoClassLabel{FiniteLabel{{2}}});

  auto dense = canonical_form(desc({{0, DenseSL2{Q(2), Q(-9, 4)}}}));
  REQUIRE(dense.support.size() == 1);
  CHECK(dense.support[0].label == IsoClassLabel{DenseClass{Q(0), Q(-1, 2)}});
  CHECK(to_string(dense.support[0].label) == "DenseClass(0,-1/2)");

  CHECK(canonical_form(desc({{0, weightmod::Trivial{}}})).support.empty());
  CHECK(dense_class({Q(-1, 2), Q(0)}).coset == Q(3, 2));
}

TEST_CASE("isomorphism examples") {
  CHECK(is_isomorphic(desc({{1, fd(2)}, {2, kW}}), desc({{2, kW}, {1, fd(2)}})));
  CHECK(is_isomorphic(desc({{0, kW}}), desc({{0, DenseSL2{Q(2), Q(-9, 4)}}})));
  CHECK_FALSE(is_isomorphic(desc({{0, fd(2)}}), desc({{1, fd(2)}})));
  CHECK_FALSE(is_isomorphic(desc({{0, kW}}), desc({{0, DenseSL2{Q(1), Q(-2)}}})));
  auto other_ring = evaluation::make_descriptor(evaluation::make_ring({"u"}, {}), kA1, {});
  CHECK_THROWS_AS(is_isomorphic(desc({}), other_ring), InvalidArgument);
  auto a2 = std::make_shared<const rootsys::RootSystem>(rootsys::build_root_system("A2"));
  auto other_g = evaluation::make_descriptor(evaluation::make_ring({"t"}, {}), a2, {});
  CHECK_THROWS_AS(is_isomorphic(desc({}), other_g), InvalidArgument);
}

TEST_CASE("dense isomorphism oracle examples") {
  CHECK(dense_iso_oracle(kW, {Q(2), Q(-9, 4)}, 5) == 1);
  CHECK(dense_iso_oracle(kW, kW, 5) == 0);
  CHECK_FALSE(dense_iso_oracle(kW, {Q(1), Q(-2)}, 5));
}

TEST_CASE("dense oracle agrees with label equality") {
  std::mt19937 rng(61);
  std::uniform_int_distribution<int> num(-6, 6), den(1, 3), shift(-10, 10), coin(0, 1);
  int agreements = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const DenseSL2 a{Q(num(rng), den(rng)), Q(num(rng), den(rng))};
    // Half the pairs are shifted copies, the rest independent or perturbed.
    DenseSL2 b = weightmod::shift_dense(a, shift(rng));
    if (coin(rng)) b = DenseSL2{b.mu + (coin(rng) ? Q(0) : Q(1, 2)), b.tau0 + Q(num(rng), 4)};
    b.mu.canonicalize();
    b.tau0.canonicalize();
    const bool labels = dense_class(a) == dense_class(b);
    const bool oracle = dense_iso_oracle(a, b, 10).has_value();
    CHECK(labels == oracle);
    agreements += labels;
  }
  CHECK(agreements > 50);
}

TEST_CASE("canonical form is invariant under permutations") {
  std::mt19937 rng(67);
  std::vector<std::pair<int, WeightModuleDescriptor>> fs = {
      {3, fd(2)}, {-1, kW}, {0, weightmod::Trivial{}}, {7, fd(1)}, {2, DenseSL2{Q(1, 3), Q(5)}}};
  const auto base = canonical_form(desc(fs));
  CHECK(base.support.size() == 4);
  for (int trial = 0; trial < 30; ++trial) {
    std::shuffle(fs.begin(), fs.end(), rng);
    CHECK(canonical_form(desc(fs)) == base);
  }
}

TEST_CASE("isomorphism is an equivalence on a small battery") {
  std::vector<EvaluationDescriptor> battery = {
      desc({{0, kW}}),          desc({{0, DenseSL2{Q(2), Q(-9, 4)}}}), desc({{0, DenseSL2{Q(-2), Q(-1, 4)}}}),
      desc({{1, fd(2)}}),       desc({{0, fd(2)}}),                     desc({{0, fd(2)}, {1, kW}}),
      desc({{1, kW}, {0, fd(2)}}), desc({})};
  for (const auto& a : battery) {
    CHECK(is_isomorphic(a, a));
    for (const auto& b : battery) {
      CHECK(is_isomorphic(a, b) == is_isomorphic(b, a));
      for (const auto& c : battery) {
        if (is_isomorphic(a, b) && is_isomorphic(b, c)) CHECK(is_isomorphic(a, c));
      }
    }
  }
  CHECK(is_isomorphic(battery[0], battery[2]));
}

TEST_CASE("admissible descriptors have at most one dense label") {
  std::vector<EvaluationDescriptor> battery = {desc({{0, kW}, {1, fd(3)}}), desc({{0, kW}, {1, kW}}),
                                               desc({{0, fd(1)}, {1, fd(1)}}), desc({})};
  for (const auto& d : battery) {
    if (admissible::classify_admissible(d, 2).admissible) CHECK(canonical_form(d).dense_count() <= 1);
  }
}
