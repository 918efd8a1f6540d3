#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "weightlab/evaluation.hpp"
#include "weightlab/linalg.hpp"

namespace weightlab::ucext {

/// Finite-dimensional algebra given by structure constants in a basis b_0..b_{d−1}.
struct FiniteAlgebra {
  std::vector<std::string> labels;
  std::vector<std::vector<RationalVector>> mult;  // mult[i][j] = coordinates of b_i b_j
  RationalVector unit;

  std::size_t dim() const { return labels.size(); }
  RationalVector basis(std::size_t i) const;
  RationalVector multiply(const RationalVector& a, const RationalVector& b) const;

  /// Shape, commutativity, associativity on all basis triples, and the unit. Throws InvalidArgument.
  void validate() const;
};

/// k[t]/(t^m) with basis 1, t, …, t^{m−1}.
FiniteAlgebra truncated_polynomial(int m);
/// k^m with the primitive idempotents as basis.
FiniteAlgebra split_product(int m);
/// k[x]/(f) for monic f = x^m + c_{m−1}x^{m−1} + … + c_0; coeffs are c_0..c_{m−1}.
FiniteAlgebra monogenic(const std::vector<Rational>& coeffs);
/// k[x,y]/(x², xy, y²) with basis 1, x, y.
FiniteAlgebra square_zero_plane();

/// ⟨S,S⟩ = (S⊗S)/Q with coordinates on S⊗S indexed i·d + j for b_i ⊗ b_j.
class CentralSpace {
public:
  const std::vector<RationalVector>& q_relations() const { return relations_; }
  std::size_t quotient_dim() const { return free_.size(); }
  std::size_t algebra_dim() const { return d_; }

  /// Quotient coordinates of a vector of S⊗S.
  RationalVector project(const RationalVector& tensor) const;
  /// ⟨r, s⟩ in quotient coordinates.
  RationalVector pair(const RationalVector& r, const RationalVector& s) const;

private:
  friend CentralSpace central_space_unchecked(const FiniteAlgebra& a);
  std::size_t d_ = 0;
  std::vector<RationalVector> relations_;
  linalg::RowEchelon echelon_;
  std::vector<std::size_t> free_;
};

/// Validates the algebra, then spans Q by r⊗s + s⊗r and rs⊗t + st⊗r + tr⊗s over basis elements.
CentralSpace central_space(const FiniteAlgebra& a);
/// Same construction without validating the algebra.
CentralSpace central_space_unchecked(const FiniteAlgebra& a);

/// sl₂ basis order e, h, f.
enum class Sl2 { e = 0, h = 1, f = 2 };

/// (x|y) = tr(ad x ad y) on sl₂, computed from the adjoint representation.
const std::array<std::array<Rational, 3>, 3>& sl2_killing_form();

/// Element Σ x ⊗ a_x + z of 𝓛̃ = (sl₂ ⊗ S) ⊕ ⟨S,S⟩.
struct ExtendedElement {
  std::array<RationalVector, 3> current;  // a_e, a_h, a_f in S-coordinates
  RationalVector central;

  bool operator==(const ExtendedElement&) const = default;
  bool is_zero() const;
};

class ExtendedAlgebra {
public:
  explicit ExtendedAlgebra(FiniteAlgebra a);

  const FiniteAlgebra& algebra() const { return a_; }
  const CentralSpace& center() const { return z_; }

  ExtendedElement zero() const;
  ExtendedElement current(Sl2 x, const RationalVector& a) const;
  ExtendedElement central(const RationalVector& z) const;

  ExtendedElement add(const ExtendedElement& u, const ExtendedElement& v) const;
  /// [x⊗a + z, y⊗b + z'] = [x,y]⊗ab + (x|y)⟨a,b⟩.
  ExtendedElement bracket(const ExtendedElement& u, const ExtendedElement& v) const;

private:
  friend struct JacobiAccess;
  ExtendedAlgebra(FiniteAlgebra a, CentralSpace z);

  FiniteAlgebra a_;
  CentralSpace z_;
};

struct JacobiReport {
  bool pass = true;
  std::size_t checked = 0;
  std::optional<std::string> witness;  // the first failing triple
};

/// Jacobi identity on `samples` random basis triples of 𝓛̃. The algebra is not validated.
JacobiReport verify_jacobi(const FiniteAlgebra& a, std::size_t samples, std::uint64_t seed);

struct TraceReport {
  std::size_t weight_space_dim = 0;
  Rational trace = 0;
  bool pass() const { return trace == 0; }
};

/**
 * Matrix of (h⊗r)(h⊗s) − (h⊗s)(h⊗r) on V_ν through the evaluation action and
 * its trace. Dense factors are indexed within |i| ≤ window. Throws
 * InvalidArgument when V_ν is infinite-dimensional.
 */
TraceReport trace_identity_check(const evaluation::EvaluationDescriptor& d, const Polynomial& r, const Polynomial& s,
                                 const Rational& nu, int window);

}  // namespace weightlab::ucext
