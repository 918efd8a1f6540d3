#include "weightlab/linalg.hpp"

#include <algorithm>

namespace weightlab::linalg {

Matrix from_integers(const std::vector<std::vector<int>>& rows) {
  Matrix out;
  out.reserve(rows.size());
  for (const auto& r : rows) {
    RationalVector row;
    row.reserve(r.size());
    for (int v : r) row.emplace_back(v);
    out.push_back(std::move(row));
  }
  return out;
}

RationalVector RowEchelon::reduce(RationalVector v) const {
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const Rational factor = v[pivots[r]];
    if (factor == 0) continue;
    for (std::size_t c = 0; c < cols; ++c) {
      if (rows[r][c] != 0) v[c] -= factor * rows[r][c];
    }
  }
  return v;
}

std::vector<std::size_t> RowEchelon::free_columns() const {
  std::vector<std::size_t> out;
  std::size_t next = 0;
  for (std::size_t c = 0; c < cols; ++c) {
    if (next < pivots.size() && pivots[next] == c) {
      ++next;
    } else {
      out.push_back(c);
    }
  }
  return out;
}

RowEchelon row_echelon(Matrix m, std::size_t cols) {
  RowEchelon out;
  out.cols = cols;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < m.size(); ++c) {
    std::size_t pivot = lead;
    while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[lead], m[pivot]);
    const Rational inv = 1 / m[lead][c];
    for (auto& x : m[lead]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == lead || m[r][c] == 0) continue;
      const Rational factor = m[r][c];
      for (std::size_t k = c; k < cols; ++k) {
        if (m[lead][k] != 0) m[r][k] -= factor * m[lead][k];
      }
    }
    out.pivots.push_back(c);
    ++lead;
  }
  m.resize(lead);
  out.rows = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) {
  if (m.empty()) return 0;
  return row_echelon(m, m.front().size()).rank();
}

std::optional<RationalVector> solve(const Matrix& a, const RationalVector& b) {
  const std::size_t n = a.empty() ? 0 : a.front().size();
  Matrix augmented = a;
  for (std::size_t r = 0; r < augmented.size(); ++r) augmented[r].push_back(b[r]);
  const RowEchelon ech = row_echelon(std::move(augmented), n + 1);
  RationalVector x(n, Rational(0));
  for (std::size_t r = 0; r < ech.rank(); ++r) {
    if (ech.pivots[r] == n) return std::nullopt;
    x[ech.pivots[r]] = ech.rows[r][n];
  }
  return x;
}

std::optional<Matrix> inverse(const Matrix& a) {
  const std::size_t n = a.size();
  Matrix augmented = a;
  for (std::size_t r = 0; r < n; ++r) {
    augmented[r].resize(2 * n, Rational(0));
    augmented[r][n + r] = 1;
  }
  const RowEchelon ech = row_echelon(std::move(augmented), 2 * n);
  if (ech.rank() < n || ech.pivots[n - 1] >= n) return std::nullopt;
  Matrix out(n, RationalVector(n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) out[r][c] = ech.rows[r][n + c];
  }
  return out;
}

Matrix transpose(const Matrix& a) {
  if (a.empty()) return {};
  Matrix out(a.front().size(), RationalVector(a.size()));
  for (std::size_t r = 0; r < a.size(); ++r) {
    for (std::size_t c = 0; c < a[r].size(); ++c) out[c][r] = a[r][c];
  }
  return out;
}

RationalVector multiply(const Matrix& a, const RationalVector& x) {
  RationalVector out(a.size(), Rational(0));
  for (std::size_t r = 0; r < a.size(); ++r) {
    for (std::size_t c = 0; c < x.size(); ++c) out[r] += a[r][c] * x[c];
  }
  return out;
}

std::optional<RationalVector> cone_combination(const std::vector<RationalVector>& generators,
                                               const RationalVector& target) {
  const std::size_t m = target.size();
  const std::size_t n = generators.size();
  // Tableau columns: n structural, m artificial, then the right-hand side.
  const std::size_t width = n + m + 1;
  Matrix tab(m + 1, RationalVector(width, Rational(0)));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = target[i] < 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (generators[j].size() != m) throw InvalidArgument("cone generator has wrong dimension");
      tab[i][j] = flip ? Rational(-generators[j][i]) : generators[j][i];
    }
    tab[i][n + i] = 1;
    tab[i][n + m] = flip ? Rational(-target[i]) : target[i];
    basis[i] = n + i;
  }
  // Objective row holds reduced costs of w = Σ artificials.
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) tab[m][j] -= tab[i][j];
    tab[m][n + m] -= tab[i][n + m];
  }

  while (true) {
    std::size_t entering = width;
    for (std::size_t j = 0; j + 1 < width; ++j) {
      if (tab[m][j] < 0) {
        entering = j;
        break;
      }
    }
    if (entering == width) break;

    std::size_t leaving = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (tab[i][entering] <= 0) continue;
      Rational ratio = tab[i][n + m] / tab[i][entering];
      if (leaving == m || ratio < best || (ratio == best && basis[i] < basis[leaving])) {
        leaving = i;
        best = ratio;
      }
    }
    if (leaving == m) break;  // unbounded direction; cannot happen for a phase-one objective bounded below

    const Rational inv = 1 / tab[leaving][entering];
    for (auto& x : tab[leaving]) x *= inv;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == leaving || tab[i][entering] == 0) continue;
      const Rational factor = tab[i][entering];
      for (std::size_t k = 0; k < width; ++k) {
        if (tab[leaving][k] != 0) tab[i][k] -= factor * tab[leaving][k];
      }
    }
    basis[leaving] = entering;
  }

  if (tab[m][n + m] != 0) return std::nullopt;
  RationalVector coeffs(n, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < n) coeffs[basis[i]] = tab[i][n + m];
  }
  return coeffs;
}

}  // namespace weightlab::linalg
