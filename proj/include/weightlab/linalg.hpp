#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "weightlab/rational.hpp"

namespace weightlab::linalg {

/// Dense row-major matrix over Q. Every row has the same length.
using Matrix = std::vector<RationalVector>;

Matrix from_integers(const std::vector<std::vector<int>>& rows);

/// Reduced row echelon form together with its pivot columns.
struct RowEchelon {
  Matrix rows;                      // nonzero rows only, pivot entries equal 1
  std::vector<std::size_t> pivots;  // pivots[r] is the pivot column of rows[r]
  std::size_t cols = 0;

  std::size_t rank() const { return rows.size(); }

  /// Remainder of v after eliminating every pivot coordinate; zero on all pivot columns.
  RationalVector reduce(RationalVector v) const;

  /// Columns that carry no pivot, in increasing order.
  std::vector<std::size_t> free_columns() const;
};

RowEchelon row_echelon(Matrix m, std::size_t cols);

std::size_t rank(const Matrix& m);

/// Some x with a·x = b (free variables set to zero), or nullopt if inconsistent.
std::optional<RationalVector> solve(const Matrix& a, const RationalVector& b);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<Matrix> inverse(const Matrix& a);

Matrix transpose(const Matrix& a);

RationalVector multiply(const Matrix& a, const RationalVector& x);

/**
 * Exact feasibility of target = Σ c_k generators[k] with every c_k >= 0.
 *
 * Phase-one simplex over Q with Bland's rule, so it terminates without
 * cycling. Returns one nonnegative coefficient vector when feasible.
 */
std::optional<RationalVector> cone_combination(const std::vector<RationalVector>& generators,
                                               const RationalVector& target);

}  // namespace weightlab::linalg
