#include "weightlab/oracles.hpp"

#include "weightlab/admissible.hpp"
#include "weightlab/linalg.hpp"

namespace weightlab::oracles {

std::size_t kahler_quotient_dim(const ucext::FiniteAlgebra& a) {
  const std::size_t d = a.dim();
  // Coordinates on S ⊗ dS: index k·d + j for b_k db_j.
  auto at = [d](std::size_t k, std::size_t j) { return k * d + j; };
  linalg::Matrix rel;
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        // b_k·d(b_i b_j) − (b_k b_i)·db_j − (b_k b_j)·db_i
        RationalVector v(d * d, Rational(0));
        for (std::size_t l = 0; l < d; ++l) v[at(k, l)] += a.mult[i][j][l];
        for (std::size_t p = 0; p < d; ++p) {
          v[at(p, j)] -= a.mult[k][i][p];
          v[at(p, i)] -= a.mult[k][j][p];
        }
        rel.push_back(std::move(v));
      }
    }
  }
  // Exact forms 1·db_j.
  for (std::size_t j = 0; j < d; ++j) {
    RationalVector v(d * d, Rational(0));
    for (std::size_t p = 0; p < d; ++p) v[at(p, j)] = a.unit[p];
    rel.push_back(std::move(v));
  }
  return d * d - linalg::rank(rel);
}

std::int64_t basis_tuple_count(const evaluation::EvaluationDescriptor& d, const weightmod::Weight& weight) {
  std::vector<std::vector<weightmod::Weight>> bases;
  for (const auto& f : d.factors) {
    const auto* fd = std::get_if<weightmod::FiniteDim>(&f.module);
    if (!fd) throw InvalidArgument("basis enumeration needs finite-dimensional factors");
    const auto m = weightmod::freudenthal(*d.g, fd->lambda);
    std::vector<weightmod::Weight> basis;
    for (const auto& [w, k] : m.entries)
      for (std::int64_t c = 0; c < k; ++c) basis.push_back(w);
    bases.push_back(std::move(basis));
  }
  std::int64_t count = 0;
  std::vector<std::size_t> idx(bases.size(), 0);
  while (true) {
    weightmod::Weight sum(weight.size(), Rational(0));
    for (std::size_t i = 0; i < bases.size(); ++i)
      for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += bases[i][idx[i]][k];
    for (auto& x : sum) x.canonicalize();
    if (sum == weight) ++count;
    std::size_t i = 0;
    while (i < bases.size() && ++idx[i] == bases[i].size()) idx[i++] = 0;
    if (i == bases.size()) break;
  }
  return count;
}

DoublingResult window_doubling(const evaluation::EvaluationDescriptor& d, int first_window, int doublings) {
  DoublingResult out;
  int w = first_window;
  for (int k = 0; k <= doublings; ++k, w *= 2) out.maxima.push_back(admissible::empirical_max_multiplicity(d, w).second);
  out.stable = true;
  out.strictly_increasing = true;
  for (std::size_t k = 1; k < out.maxima.size(); ++k) {
    if (out.maxima[k] != out.maxima[k - 1]) out.stable = false;
    if (out.maxima[k] <= out.maxima[k - 1]) out.strictly_increasing = false;
  }
  return out;
}

}  // namespace weightlab::oracles
