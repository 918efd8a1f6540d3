#include "doctest.h"

#include <random>
#include <thread>

#include "weightlab/weightmod.hpp"

using namespace weightlab;
using namespace weightlab::weightmod;

namespace {

Weight W(std::initializer_list<int> c) {
  Weight w;
  for (int x : c) w.emplace_back(x);
  return w;
}

Rational Q(int num, int den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::shared_ptr<const RootSystem> sys(const char* name) {
  return std::make_shared<const RootSystem>(rootsys::build_root_system(name));
}

// Weyl dimension evaluated independently from the Gram matrix of the simple roots:
// Π (λ+ρ, α^∨)/(ρ, α^∨), with α^∨ pairings computed as 2(·,α)/(α,α) through positive roots.
Rational weyl_dimension_oracle(const RootSystem& rs, const DynkinLabels& lambda) {
  const auto& c = rs.cartan();
  const auto& d = rs.symmetrizer();
  const std::size_t n = lambda.size();
  Rational dim = 1;
  for (const auto& r : rs.positive()) {
    // (α, α) = Σ r_i r_j d_i c_ij; (ω_k, α) = r_k d_k.
    Rational len = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) len += r[i] * r[j] * d[i] * c[i][j];
    Rational top = 0, bottom = 0;
    for (std::size_t k = 0; k < n; ++k) {
      top += Rational(2 * (lambda[k] + 1) * r[k] * d[k]) / len;
      bottom += Rational(2 * r[k] * d[k]) / len;
    }
    dim *= top / bottom;
  }
  return dim;
}

}  // namespace

TEST_CASE("Freudenthal on A1") {
  const auto a1 = rootsys::build_root_system("A1");
  auto m = freudenthal(a1, {2});
  CHECK(m.entries.size() == 3);
  for (int w : {-2, 0, 2}) CHECK(m.at(W({w})) == 1);
  auto trivial = freudenthal(a1, {0});
  CHECK(trivial.entries.size() == 1);
  CHECK(trivial.at(W({0})) == 1);
  CHECK_THROWS_AS(freudenthal(a1, {-1}), InvalidArgument);
  CHECK_THROWS_AS(freudenthal(a1, {1, 1}), InvalidArgument);
}

TEST_CASE("Freudenthal on the adjoint module of A2") {
  const auto a2 = rootsys::build_root_system("A2");
  auto m = freudenthal(a2, {1, 1});
  CHECK(m.at(W({0, 0})) == 2);
  CHECK(m.total() == 8);
  CHECK(m.entries.size() == 7);
  CHECK(m.at(W({2, -1})) == 1);
}

TEST_CASE("Weyl dimension examples") {
  CHECK(weyl_dimension(rootsys::build_root_system("A1"), {2}) == 3);
  CHECK(weyl_dimension(rootsys::build_root_system("A2"), {1, 1}) == 8);
  CHECK(weyl_dimension(rootsys::build_root_system("C3"), {1, 0, 0}) == 6);
  CHECK(weyl_dimension(rootsys::build_root_system("B3"), {0, 0, 1}) == 8);
  CHECK(weyl_dimension(rootsys::build_root_system("G2"), {1, 0}) == 7);
  CHECK(weyl_dimension(rootsys::build_root_system("F4"), {0, 0, 0, 1}) == 26);
  CHECK(weyl_dimension(rootsys::build_root_system("E8"), {0, 0, 0, 0, 0, 0, 0, 1}) == 248);
}

TEST_CASE("Freudenthal total equals the Weyl dimension for random dominant weights") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> coord(0, 4);
  for (const char* name : {"A1", "A2", "B2", "G2", "A3", "B3", "C3"}) {
    const auto rs = rootsys::build_root_system(name);
    for (int trial = 0; trial < 20; ++trial) {
      DynkinLabels lambda(static_cast<std::size_t>(rs.rank()));
      for (auto& x : lambda) x = coord(rng);
      const auto m = freudenthal(rs, lambda);
      INFO(name << " trial " << trial);
      CHECK(Rational(m.total()) == weyl_dimension_oracle(rs, lambda));
      CHECK(Integer(m.total()) == weyl_dimension(rs, lambda));
    }
  }
}

TEST_CASE("Freudenthal multiplicities are invariant under simple reflections") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> coord(0, 3);
  for (const char* name : {"A2", "B2", "G2", "A3", "C3"}) {
    const auto rs = rootsys::build_root_system(name);
    const auto& c = rs.cartan();
    for (int trial = 0; trial < 5; ++trial) {
      DynkinLabels lambda(static_cast<std::size_t>(rs.rank()));
      for (auto& x : lambda) x = coord(rng);
      const auto m = freudenthal(rs, lambda);
      for (const auto& [mu, mult] : m.entries) {
        for (std::size_t j = 0; j < mu.size(); ++j) {
          // s_j μ = μ − μ_j α_j, with α_j = column j of the Cartan matrix.
          Weight image = mu;
          for (std::size_t i = 0; i < mu.size(); ++i) image[i] -= mu[j] * c[i][j];
          CHECK(m.at(image) == mult);
        }
      }
    }
  }
}

TEST_CASE("cache returns the same table from many threads") {
  auto rs = rootsys::build_root_system("B2");
  FreudenthalCache cache;
  std::vector<std::int64_t> totals(8);
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < totals.size(); ++t) {
      pool.emplace_back([&, t] { totals[t] = cache.get(rs, {2, 1}).total(); });
    }
  }
  for (auto x : totals) CHECK(Integer(x) == weyl_dimension(rs, {2, 1}));
}

TEST_CASE("dense action on W(0,-1/4)") {
  const Rational mu = 0, tau0 = Rational(-1, 4);
  auto e1 = dense_action(mu, tau0, Generator::e, 1);
  CHECK(e1.coefficient == Rational(-9, 4));
  CHECK(e1.index == 2);
  auto f5 = dense_action(mu, tau0, Generator::f, 5);
  CHECK(f5.coefficient == 1);
  CHECK(f5.index == 4);
  auto h0 = dense_action(Rational(3, 2), 7, Generator::h, 0);
  CHECK(h0.coefficient == Rational(3, 2));
  CHECK(h0.index == 0);
  for (int i = -20; i <= 20; ++i) {
    CHECK(dense_tau(mu, tau0, i) == -Rational((2 * i + 1) * (2 * i + 1), 4));
  }
}

TEST_CASE("simplicity of dense modules") {
  CHECK(is_simple_dense(0, Rational(-1, 4)));
  CHECK_FALSE(is_simple_dense(0, 0));
  CHECK(is_simple_dense(1, -2));
  CHECK_THROWS_AS(simple_dense(0, 0), InvalidArgument);
  // Brute force: τ_i vanishes for some |i| ≤ 40 exactly when the test fails.
  std::mt19937 rng(9);
  std::uniform_int_distribution<int> num(-12, 12);
  std::uniform_int_distribution<int> den(1, 4);
  for (int trial = 0; trial < 300; ++trial) {
    const Rational mu = Q(num(rng), den(rng));
    Rational tau0 = Q(num(rng), den(rng));
    if (trial % 3 == 0) {
      // force a root at a small integer
      const int k = num(rng) / 2;
      tau0 = Rational(k) * mu + Rational(k * (k + 1));
    }
    bool vanishes = false;
    for (int i = -40; i <= 40; ++i) vanishes |= dense_tau(mu, tau0, i) == 0;
    INFO(to_string(mu) << " " << to_string(tau0));
    CHECK(is_simple_dense(mu, tau0) == !vanishes);
  }
}

TEST_CASE("multiplicity by descriptor kind") {
  WeightModuleDescriptor w = DenseSL2{0, Rational(-1, 4)};
  CHECK(multiplicity(w, W({6})) == 1);
  CHECK(multiplicity(w, W({3})) == 0);
  CHECK(multiplicity(w, W({-4})) == 1);
  WeightModuleDescriptor adj = finite_dim(sys("A2"), {1, 1});
  CHECK(multiplicity(adj, W({0, 0})) == 2);
  CHECK_THROWS_AS(multiplicity(adj, W({0})), InvalidArgument);
  CHECK_THROWS_AS(multiplicity(w, W({0, 0})), InvalidArgument);
  CHECK(multiplicity(Trivial{}, W({0})) == 1);
  CHECK(multiplicity(Trivial{}, W({2})) == 0);
  CHECK(is_trivial(finite_dim(sys("A2"), {0, 0})));
  CHECK_FALSE(is_trivial(adj));
  CHECK_THROWS_AS(finite_dim(sys("A2"), {1}), InvalidArgument);
}

TEST_CASE("sl2 relations on the dense family") {
  CHECK(verify_sl2_relations(0, Rational(-1, 4), 50));
  CHECK(verify_sl2_relations(Rational(3, 2), 7, 50));
  CHECK(verify_sl2_relations(0, 0, 10));
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> num(-50, 50);
  std::uniform_int_distribution<int> den(1, 9);
  for (int trial = 0; trial < 100; ++trial) {
    CHECK(verify_sl2_relations(Q(num(rng), den(rng)), Q(num(rng), den(rng)), 50));
  }
  CHECK_THROWS_AS(verify_sl2_relations(0, 0, 0), InvalidArgument);
}

TEST_CASE("finite sl2 string basis satisfies the relations") {
  for (int n = 0; n <= 6; ++n) {
    for (int k = 0; k <= n; ++k) {
      // [e,f] w_k = h w_k
      Rational ef = 0, fe = 0;
      if (auto f = finite_sl2_action(n, Generator::f, k)) {
        if (auto e = finite_sl2_action(n, Generator::e, f->index)) ef = f->coefficient * e->coefficient;
      }
      if (auto e = finite_sl2_action(n, Generator::e, k)) {
        if (auto f = finite_sl2_action(n, Generator::f, e->index)) fe = e->coefficient * f->coefficient;
      }
      CHECK(ef - fe == finite_sl2_action(n, Generator::h, k)->coefficient);
    }
  }
}

TEST_CASE("Casimir invariant") {
  CHECK(casimir_invariant(0, Rational(-1, 4)) == Rational(-1, 2));
  CHECK(casimir_invariant(0, 0) == 0);
  CHECK(casimir_invariant(2, Rational(-9, 4)) == Rational(-1, 2));
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> num(-30, 30);
  std::uniform_int_distribution<int> den(1, 6);
  std::uniform_int_distribution<int> shift(-10, 10);
  for (int trial = 0; trial < 100; ++trial) {
    const Rational mu = Q(num(rng), den(rng)), tau0 = Q(num(rng), den(rng));
    const int s = shift(rng);
    const Rational c = casimir_invariant(mu, tau0);
    const auto moved = shift_dense({mu, tau0}, s);
    CHECK(casimir_invariant(moved.mu, moved.tau0) == c);
    // ef + fe + h²/2 acts on every v_i by the same scalar.
    const int i = shift(rng);
    const Rational h = mu + 2 * i;
    CHECK(dense_tau(mu, tau0, i - 1) + dense_tau(mu, tau0, i) + h * h / 2 == c);
  }
  const auto moved = shift_dense({0, Rational(-1, 4)}, 1);
  CHECK(moved.mu == 2);
  CHECK(moved.tau0 == Rational(-9, 4));
}
