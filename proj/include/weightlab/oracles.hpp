#pragma once

#include <cstdint>
#include <vector>

#include "weightlab/evaluation.hpp"
#include "weightlab/ucext.hpp"

/// Slow independent computations used to cross-check the library.
namespace weightlab::oracles {

/**
 * dim Ω_S / dS, with Ω_S spanned by a·db modulo a·d(bc) − ab·dc − ac·db.
 * For finite-dimensional S this equals the dimension of ⟨S,S⟩.
 */
std::size_t kahler_quotient_dim(const ucext::FiniteAlgebra& a);

/// Counts basis tuples of an all-finite tensor product with the given weight.
std::int64_t basis_tuple_count(const evaluation::EvaluationDescriptor& d, const weightmod::Weight& weight);

struct DoublingResult {
  std::vector<std::int64_t> maxima;  // empirical maximum at each window
  bool stable = false;               // unchanged across every doubling
  bool strictly_increasing = false;
};

/// Empirical maximum multiplicity at windows w, 2w, 4w, ….
DoublingResult window_doubling(const evaluation::EvaluationDescriptor& d, int first_window, int doublings);

}  // namespace weightlab::oracles
