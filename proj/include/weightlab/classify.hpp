#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "weightlab/evaluation.hpp"

namespace weightlab::classify {

using evaluation::EvaluationDescriptor;
using evaluation::Point;
using weightmod::DenseSL2;

struct FiniteLabel {
  weightmod::DynkinLabels lambda;
  bool operator==(const FiniteLabel&) const = default;
};

/// Dense sl₂ class: weight coset μ mod 2 in [0, 2) and the Casimir scalar.
struct DenseClass {
  Rational coset;
  Rational casimir;
  bool operator==(const DenseClass&) const = default;
};

using IsoClassLabel = std::variant<FiniteLabel, DenseClass>;

struct PsiEntry {
  Point point;
  IsoClassLabel label;
  bool operator==(const PsiEntry&) const = default;
};

/// Finitely supported function Max S → iso classes; support sorted by point.
struct PsiMap {
  std::vector<PsiEntry> support;
  bool operator==(const PsiMap&) const = default;

  std::size_t dense_count() const;
};

DenseClass dense_class(const DenseSL2& d);

PsiMap canonical_form(const EvaluationDescriptor& d);

/// Throws InvalidArgument when the rings or Lie algebras differ.
bool is_isomorphic(const EvaluationDescriptor& a, const EvaluationDescriptor& b);

/**
 * Searches shifts |s| ≤ window for a basis map v'_i ↦ c·v_{i+s} from d2 to d1
 * that intertwines e, f, h on |i| ≤ window. Returns the shift found.
 */
std::optional<std::int64_t> dense_iso_oracle(const DenseSL2& d1, const DenseSL2& d2, int window);

std::string to_string(const IsoClassLabel& label);

}  // namespace weightlab::classify
