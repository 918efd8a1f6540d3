// Acceptance suite: one PASS/FAIL line per criterion. All comparisons are exact
// (rational or integer equality); the only numeric tolerances are the runtime caps.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <string>

#include "weightlab/admissible.hpp"
#include "weightlab/oracles.hpp"
#include "weightlab/verify.hpp"

using namespace weightlab;

namespace {

constexpr double kGammaSeconds = 60;
constexpr double kEnumerationSeconds = 300;

Rational Q(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational weyl_dimension_oracle(const rootsys::RootSystem& rs, const weightmod::DynkinLabels& lambda) {
  const auto& c = rs.cartan();
  const auto& d = rs.symmetrizer();
  const std::size_t n = lambda.size();
  Rational dim = 1;
  for (const auto& r : rs.positive()) {
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

struct Outcome {
  bool pass = true;
  std::string note;
  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      note += (note.empty() ? "" : "; ") + what;
    }
  }
};

bool freudenthal_oracle() {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coord(0, 4);
  for (const char* name : {"A1", "A2", "A3", "B2", "B3", "C2", "C3", "G2"}) {
    const auto rs = rootsys::build_root_system(name);
    for (int trial = 0; trial < 20; ++trial) {
      weightmod::DynkinLabels lambda(static_cast<std::size_t>(rs.rank()));
      for (auto& x : lambda) x = coord(rng);
      if (Rational(weightmod::freudenthal(rs, lambda).total()) != weyl_dimension_oracle(rs, lambda)) return false;
    }
  }
  const auto a2 = rootsys::build_root_system("A2");
  return weightmod::freudenthal(a2, {1, 1}).at({Q(0), Q(0)}) == 2;
}

bool tau_recurrence() {
  // τ_{i−1} − τ_i = μ + 2i from τ_0, independent of the closed form.
  const Rational mu = 0, tau0 = Q(-1, 4);
  Rational tau = tau0;
  for (int i = 1; i <= 10; ++i) {
    tau -= mu + 2 * i;
    tau.canonicalize();
    const auto a = weightmod::dense_action(mu, tau0, weightmod::Generator::e, i);
    if (a.coefficient != tau) return false;
    if (tau != Q(-(2 * i + 1) * (2 * i + 1), 4)) return false;
  }
  return true;
}

bool opposite_count_oracle() {
  // Pairs (i, j) with |i|, |j| ≤ n and weight (0 + 2i) + (0 + 2j) = 0.
  const auto a1 = std::make_shared<const rootsys::RootSystem>(rootsys::build_root_system("A1"));
  const weightmod::DenseSL2 w{0, Q(-1, 4)};
  const auto ww = evaluation::make_descriptor(evaluation::make_ring({"t"}, {}), a1,
                                              {{evaluation::Point{{Q(0)}}, w}, {evaluation::Point{{Q(1)}}, w}});
  for (int n : {5, 10, 20, 40}) {
    std::int64_t pairs = 0;
    for (int i = -n; i <= n; ++i)
      for (int j = -n; j <= n; ++j) pairs += (i + j == 0);
    const auto m = evaluation::tensor_multiplicity(ww, {Q(0)}, n);
    if (pairs != 2 * n + 1 || m.count != pairs || !m.infinite) return false;
  }
  const auto v = admissible::classify_admissible(ww, 30);
  return !v.admissible && v.reason == admissible::Reason::OppositeDirections;
}

bool same_direction_oracle() {
  const weightmod::DenseSL2 w{0, Q(-1, 4)};
  for (int n = 0; n <= 30; ++n) {
    std::int64_t splits = 0;
    for (int l = 0; l <= n; ++l)
      splits += weightmod::multiplicity(w, {Q(2 * l)}) * weightmod::multiplicity(w, {Q(2 * (n - l))});
    if (splits != n + 1 || admissible::growth_witness_same(w, w, n).second < splits) return false;
  }
  return true;
}

bool kahler_oracle() {
  for (int m = 1; m <= 6; ++m)
    if (oracles::kahler_quotient_dim(ucext::truncated_polynomial(m)) != 0) return false;
  for (int m = 1; m <= 4; ++m)
    if (oracles::kahler_quotient_dim(ucext::split_product(m)) != 0) return false;
  return oracles::kahler_quotient_dim(ucext::square_zero_plane()) == 1;
}

}  // namespace

int main() {
  verify::VerifyConfig config;
  const auto start = std::chrono::steady_clock::now();
  const auto report = verify::verify_all(config);
  std::map<std::string, verify::CheckResult> by_name;
  for (const auto& c : report.checks) by_name[c.name] = c;

  std::vector<Outcome> outcomes(10);
  for (std::size_t k = 0; k < 10; ++k) {
    const auto& c = by_name.at(verify::check_names()[k]);
    outcomes[k].expect(c.status == verify::Status::Pass,
                       c.name + " " + verify::to_string(c.status) + (c.counterexample ? ": " + *c.counterexample : ""));
  }
  outcomes[0].expect(by_name.at("01_gamma_ideal").seconds < kGammaSeconds, "over 60 s");
  outcomes[1].expect(by_name.at("02_sum_not_root").seconds < kEnumerationSeconds, "over 300 s");
  outcomes[2].expect(freudenthal_oracle(), "independent Weyl dimension oracle disagrees");
  outcomes[3].expect(tau_recurrence(), "e v_i coefficients disagree with the recurrence");
  outcomes[4].expect(opposite_count_oracle(), "pair count disagrees");
  outcomes[5].expect(same_direction_oracle(), "split count exceeds the witness");
  outcomes[6].expect(verify::descriptor_battery(1, 60).size() >= 50, "battery smaller than 50");
  outcomes[8].expect(kahler_oracle(), "Kahler oracle disagrees");

  const char* titles[10] = {
      "gamma in the ideal generated by -alpha (A1-A4, B2-B4, C2-C4, D4, G2, F4)",
      "alpha+beta not a root over all filtered convex T (A1, A2, A3, B2, B3, C3, G2)",
      "Freudenthal total equals Weyl dimension; A2 adjoint zero weight = 2",
      "dense module W(0,-1/4): sl2 relations on |i| <= 50, e v_1 = -9/4 v_2",
      "W(x)W: count 2n+1 at weight 0 for n = 5, 10, 20, 40; NotAdmissible(OppositeDirections)",
      "same-direction growth >= n+1 for n <= 30",
      "admissibility verdict matches window doubling on 60 descriptors",
      "canonical form permutation invariance, isomorphism, dense oracle on 200 pairs",
      "central extension: zero center, Jacobi, trace identity",
      "convolution equals basis-tuple enumeration (total dim <= 200)",
  };
  bool all = true;
  for (std::size_t k = 0; k < 10; ++k) {
    const auto& o = outcomes[k];
    std::printf("%s criterion %2zu: %s [tolerance: exact]%s%s\n", o.pass ? "PASS" : "FAIL", k + 1, titles[k],
                o.note.empty() ? "" : " -- ", o.note.c_str());
    all = all && o.pass;
  }
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("seed %llu, %.2f s\n", static_cast<unsigned long long>(report.seed), total);
  return all ? 0 : 1;
}
