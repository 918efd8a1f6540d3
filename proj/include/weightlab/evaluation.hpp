#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "weightlab/polynomial.hpp"
#include "weightlab/weightmod.hpp"

namespace weightlab::evaluation {

using weightmod::Generator;
using weightmod::Weight;
using weightmod::WeightModuleDescriptor;

/// k[x_1..x_n]/(ideal), presented by generators.
struct CoordinateRing {
  std::vector<std::string> vars;
  std::vector<Polynomial> ideal;

  std::size_t num_vars() const { return vars.size(); }
  bool operator==(const CoordinateRing& o) const { return vars == o.vars && ideal == o.ideal; }
};

/// Parses each generator with the ring's variable names.
CoordinateRing make_ring(std::vector<std::string> vars, const std::vector<std::string>& ideal);

/// A rational point of the variety of the ring, standing in for a maximal ideal.
struct Point {
  RationalVector coords;
  bool operator==(const Point& o) const { return coords == o.coords; }
  bool operator<(const Point& o) const { return lex_less(coords, o.coords); }
};

/// Throws InvalidArgument naming the first generator that does not vanish and its value.
Point validate_point(const CoordinateRing& ring, const RationalVector& coords);

Rational eval_at(const CoordinateRing& ring, const Polynomial& s, const Point& p);

inline constexpr int kDefaultIdempotentDegreeCap = 8;

/**
 * Polynomials s_i with s_i(p_j) = δ_ij, of the least total degree for which
 * the interpolation system is solvable. Throws ResourceLimit past the cap.
 */
std::vector<Polynomial> crt_idempotents(const CoordinateRing& ring, const std::vector<Point>& points,
                                        int degree_cap = kDefaultIdempotentDegreeCap);

struct Factor {
  Point point;
  WeightModuleDescriptor module;
};

/// V(M, W) = W_1^{M_1} ⊗ … ⊗ W_r^{M_r} for the current algebra 𝔤 ⊗ S.
struct EvaluationDescriptor {
  CoordinateRing ring;
  std::shared_ptr<const rootsys::RootSystem> g;
  std::vector<Factor> factors;  // trivial factors already removed

  std::size_t dense_count() const;
  bool is_sl2() const;
};

inline constexpr std::size_t kMaxFactors = 6;

/**
 * Validates the points (on the variety, pairwise distinct), drops trivial
 * factors and checks that every module is over g. Dense sl₂ factors need
 * g = A1; any other infinite-dimensional request raises NotSupported.
 */
EvaluationDescriptor make_descriptor(CoordinateRing ring, std::shared_ptr<const rootsys::RootSystem> g,
                                     std::vector<Factor> factors);

/// Basis index per factor: v_i for dense factors, w_k (0 ≤ k ≤ n) for L(n).
using BasisTuple = std::vector<std::int64_t>;
using Combination = std::map<BasisTuple, Rational>;

/// Weight of a basis tuple of an sl₂ descriptor.
Rational tuple_weight(const EvaluationDescriptor& d, const BasisTuple& t);

/// (x ⊗ s).(w_1 ⊗ … ⊗ w_r) = Σ_i s(M_i) w_1 ⊗ … ⊗ x w_i ⊗ … ⊗ w_r. sl₂ only.
Combination evaluation_action(const EvaluationDescriptor& d, Generator x, const Polynomial& s, const BasisTuple& t);

/// Linear extension of evaluation_action.
Combination evaluation_action(const EvaluationDescriptor& d, Generator x, const Polynomial& s, const Combination& v);

struct TensorMultiplicity {
  bool infinite = false;
  std::int64_t count = 0;  // exact, or the windowed count when infinite
  /// For an infinite weight space: index pairs (i, j − i) of the first two dense factors.
  std::vector<std::pair<std::int64_t, std::int64_t>> witness;
};

/**
 * dim V_weight by convolution of the factor multiplicities. Dense factors
 * contribute v_i with |i| ≤ window, so a window is required when one is
 * present. With two or more dense factors every weight of the support has
 * an infinite weight space; the count is then the windowed one.
 */
TensorMultiplicity tensor_multiplicity(const EvaluationDescriptor& d, const Weight& weight,
                                       std::optional<int> window = std::nullopt);

/// Windowed multiplicity function of the whole tensor product.
weightmod::MultiplicityFunction tensor_multiplicities(const EvaluationDescriptor& d,
                                                      std::optional<int> window = std::nullopt);

}  // namespace weightlab::evaluation
