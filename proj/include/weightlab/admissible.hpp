#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "weightlab/evaluation.hpp"

namespace weightlab::admissible {

using evaluation::EvaluationDescriptor;
using weightmod::DenseSL2;
using weightmod::Weight;
using weightmod::WeightModuleDescriptor;

enum class Reason { OppositeDirections, SameDirection, TwoInfiniteFactors };

std::string to_string(Reason r);

struct WitnessPoint {
  int n = 0;
  Weight weight;
  std::int64_t lower_bound = 0;  // claimed dim V_weight ≥ lower_bound
  std::int64_t observed = 0;     // windowed count found by enumeration
  bool infinite = false;
};

struct GrowthWitness {
  std::vector<WitnessPoint> points;
  int checked_up_to = 0;

  /// observed ≥ lower_bound at every point.
  bool holds() const;
};

struct Verdict {
  bool admissible = false;
  std::int64_t bound = 0;  // when admissible
  Reason reason = Reason::OppositeDirections;  // when not
  GrowthWitness witness;                       // when not
};

/**
 * A tensor product of simple evaluation modules is admissible exactly when
 * at most one factor is infinite-dimensional. The bound is the exact maximum
 * multiplicity; otherwise the witness records windowed counts 2n+1 at a fixed
 * weight for n = 0..check_window. Dense factors must be simple.
 */
Verdict classify_admissible(const EvaluationDescriptor& d, int check_window);

/// Weight μ₁+μ₂ where v_i ⊗ v_{−i}, |i| ≤ window, give 2·window+1 vectors.
GrowthWitness growth_witness_opposite(const DenseSL2& d1, const DenseSL2& d2, int window);

/**
 * Weight μ₁+μ₂+2n and the dimension of Σ_{ℓ=0}^{n} W_{1,μ₁+2ℓ} ⊗ W_{2,μ₂+2(n−ℓ)},
 * counted by enumerating ℓ.
 */
std::pair<Weight, std::int64_t> growth_witness_same(const DenseSL2& d1, const DenseSL2& d2, int n);

/// Largest windowed multiplicity and the lexicographically first weight attaining it.
std::pair<Weight, std::int64_t> empirical_max_multiplicity(const EvaluationDescriptor& d, int window);

}  // namespace weightlab::admissible
