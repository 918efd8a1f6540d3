#include "weightlab/admissible.hpp"

#include <algorithm>

namespace weightlab::admissible {

std::string to_string(Reason r) {
  switch (r) {
    case Reason::OppositeDirections: return "OppositeDirections";
    case Reason::SameDirection: return "SameDirection";
    case Reason::TwoInfiniteFactors: return "TwoInfiniteFactors";
  }
  return "?";
}

bool GrowthWitness::holds() const {
  return std::all_of(points.begin(), points.end(),
                     [](const WitnessPoint& p) { return p.observed >= p.lower_bound; });
}

namespace {

void require_simple(const EvaluationDescriptor& d) {
  for (const auto& f : d.factors) {
    if (const auto* m = std::get_if<DenseSL2>(&f.module)) {
      if (!weightmod::is_simple_dense(m->mu, m->tau0)) {
        throw InvalidArgument("dense factor (" + weightlab::to_string(m->mu) + ", " +
                              weightlab::to_string(m->tau0) + ") is not simple");
      }
    }
  }
}

evaluation::EvaluationDescriptor dense_pair(const DenseSL2& d1, const DenseSL2& d2) {
  auto a1 = std::make_shared<const rootsys::RootSystem>(rootsys::build_root_system('A', 1));
  return evaluation::make_descriptor(evaluation::make_ring({"t"}, {}), a1,
                                     {{evaluation::Point{{Rational(0)}}, d1}, {evaluation::Point{{Rational(1)}}, d2}});
}

}  // namespace

Verdict classify_admissible(const EvaluationDescriptor& d, int check_window) {
  if (check_window < 0) throw InvalidArgument("window must be nonnegative");
  require_simple(d);
  Verdict v;
  const std::size_t dense = d.dense_count();
  if (dense <= 1) {
    v.admissible = true;
    if (d.factors.empty()) {
      v.bound = 1;
    } else if (dense == 0) {
      const auto all = evaluation::tensor_multiplicities(d);
      for (const auto& [w, m] : all.entries) v.bound = std::max(v.bound, m);
    } else {
      // The dense factor has multiplicity one on a full coset, so every weight of
      // the product collects one vector from each tuple of finite-factor weights.
      EvaluationDescriptor finite = d;
      finite.factors.erase(std::remove_if(finite.factors.begin(), finite.factors.end(),
                                          [](const auto& f) { return weightmod::is_dense(f.module); }),
                           finite.factors.end());
      v.bound = evaluation::tensor_multiplicities(finite).total();
    }
    return v;
  }

  v.admissible = false;
  v.reason = Reason::OppositeDirections;
  // v_i ⊗ v_{−i} in the first two dense factors, every other factor at its index-0 vector.
  Rational weight = 0;
  for (const auto& f : d.factors) {
    if (const auto* m = std::get_if<DenseSL2>(&f.module)) {
      weight += m->mu;
    } else {
      weight += weightmod::sl2_highest_weight(f.module);
    }
  }
  weight.canonicalize();
  v.witness.checked_up_to = check_window;
  for (int n = 0; n <= check_window; ++n) {
    const auto count = evaluation::tensor_multiplicity(d, Weight{weight}, n);
    v.witness.points.push_back({n, Weight{weight}, 2 * n + 1, count.count, count.infinite});
  }
  return v;
}

GrowthWitness growth_witness_opposite(const DenseSL2& d1, const DenseSL2& d2, int window) {
  if (window < 0) throw InvalidArgument("window must be nonnegative");
  const auto d = dense_pair(d1, d2);
  require_simple(d);
  Rational weight = d1.mu + d2.mu;
  weight.canonicalize();
  const auto count = evaluation::tensor_multiplicity(d, Weight{weight}, window);
  GrowthWitness w;
  w.checked_up_to = window;
  w.points.push_back({window, Weight{weight}, 2 * static_cast<std::int64_t>(window) + 1, count.count, count.infinite});
  return w;
}

std::pair<Weight, std::int64_t> growth_witness_same(const DenseSL2& d1, const DenseSL2& d2, int n) {
  if (n < 0) throw InvalidArgument("n must be nonnegative");
  require_simple(dense_pair(d1, d2));
  const WeightModuleDescriptor m1 = d1, m2 = d2;
  Rational weight = d1.mu + d2.mu + 2 * n;
  weight.canonicalize();
  std::int64_t count = 0;
  for (int l = 0; l <= n; ++l) {
    Rational a = d1.mu + 2 * l, b = d2.mu + 2 * (n - l);
    a.canonicalize();
    b.canonicalize();
    count += weightmod::multiplicity(m1, Weight{a}) * weightmod::multiplicity(m2, Weight{b});
  }
  return {Weight{weight}, count};
}

std::pair<Weight, std::int64_t> empirical_max_multiplicity(const EvaluationDescriptor& d, int window) {
  if (window < 0) throw InvalidArgument("window must be nonnegative");
  const auto all = evaluation::tensor_multiplicities(d, window);
  std::pair<Weight, std::int64_t> best{Weight(static_cast<std::size_t>(d.g->rank()), Rational(0)), 0};
  for (const auto& [w, m] : all.entries) {
    if (m > best.second) best = {w, m};
  }
  return best;
}

}  // namespace weightlab::admissible
