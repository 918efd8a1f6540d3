#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <variant>
#include <vector>

#include "weightlab/rational.hpp"
#include "weightlab/rootsys.hpp"

namespace weightlab::weightmod {

using rootsys::RootSystem;

/// Weights in fundamental-weight (Dynkin) coordinates.
using Weight = RationalVector;
using DynkinLabels = std::vector<int>;

struct Trivial {
  bool operator==(const Trivial&) const = default;
};

/// Simple finite-dimensional module L(λ), λ dominant integral.
struct FiniteDim {
  std::shared_ptr<const RootSystem> system;
  DynkinLabels lambda;
};

/**
 * The dense sl₂ family with basis v_i, i ∈ Z:
 * h v_i = (μ+2i) v_i, f v_i = v_{i−1}, e v_i = τ_i v_{i+1}, τ_i = τ₀ − iμ − i(i+1).
 */
struct DenseSL2 {
  Rational mu;
  Rational tau0;
};

using WeightModuleDescriptor = std::variant<Trivial, FiniteDim, DenseSL2>;

/// Validates λ (length = rank, entries ≥ 0).
FiniteDim finite_dim(std::shared_ptr<const RootSystem> system, DynkinLabels lambda);

/// A simple dense module; throws InvalidArgument when some τ_i vanishes.
DenseSL2 simple_dense(const Rational& mu, const Rational& tau0);

/// Trivial, or FiniteDim with λ = 0.
bool is_trivial(const WeightModuleDescriptor& d);
bool is_dense(const WeightModuleDescriptor& d);

/// Highest weight label of a finite-dimensional sl₂ factor; 0 for the trivial module.
int sl2_highest_weight(const WeightModuleDescriptor& d);

struct MultiplicityFunction {
  Weight coset;  // representative of the weight coset carrying the support
  std::map<Weight, std::int64_t, RationalVectorLess> entries;
  bool infinite = false;       // entries are a truncation of an infinite support
  std::optional<int> window;  // present whenever infinite is set

  std::int64_t at(const Weight& w) const;
  std::int64_t total() const;
};

/// Exact multiplicities of L(λ). Throws InvalidArgument if λ is not dominant integral.
MultiplicityFunction freudenthal(const RootSystem& rs, const DynkinLabels& lambda);

/// Π_{α>0} (λ+ρ,α)/(ρ,α).
Integer weyl_dimension(const RootSystem& rs, const DynkinLabels& lambda);

/// Thread-safe memo for freudenthal keyed by (Cartan matrix, λ).
class FreudenthalCache {
public:
  const MultiplicityFunction& get(const RootSystem& rs, const DynkinLabels& lambda);
  static FreudenthalCache& global();

private:
  using Key = std::pair<rootsys::CartanMatrix, DynkinLabels>;
  std::shared_mutex mutex_;
  std::map<Key, std::unique_ptr<MultiplicityFunction>> table_;
};

enum class Generator { e, h, f };

struct Action {
  Rational coefficient;
  std::int64_t index;
};

Rational dense_tau(const Rational& mu, const Rational& tau0, std::int64_t i);

/// Generator applied to v_i: coefficient and target index.
Action dense_action(const Rational& mu, const Rational& tau0, Generator g, std::int64_t i);

/**
 * Action on the string basis w_0..w_n of the sl₂ module L(n):
 * h w_k = (n−2k) w_k, f w_k = w_{k+1}, e w_k = k(n−k+1) w_{k−1}.
 * Returns nullopt when the image is zero.
 */
std::optional<Action> finite_sl2_action(int n, Generator g, std::int64_t k);

/// True iff τ_i ≠ 0 for every integer i.
bool is_simple_dense(const Rational& mu, const Rational& tau0);

/// dim V_weight; throws InvalidArgument on a dimension mismatch.
std::int64_t multiplicity(const WeightModuleDescriptor& d, const Weight& weight);

/// Checks [h,e]=2e, [h,f]=−2f, [e,f]=h on v_i for |i| ≤ window.
bool verify_sl2_relations(const Rational& mu, const Rational& tau0, int window);

/// Scalar c = 2τ₀ + μ + μ²/2 of ef + fe + h²/2.
Rational casimir_invariant(const Rational& mu, const Rational& tau0);

/// Parameters of the same module re-indexed by v'_i = v_{i+s}.
DenseSL2 shift_dense(const DenseSL2& d, std::int64_t s);

}  // namespace weightlab::weightmod
