#include "weightlab/classify.hpp"

#include <algorithm>

namespace weightlab::classify {

using weightmod::Generator;

std::size_t PsiMap::dense_count() const {
  return static_cast<std::size_t>(std::count_if(support.begin(), support.end(), [](const PsiEntry& e) {
    return std::holds_alternative<DenseClass>(e.label);
  }));
}

DenseClass dense_class(const DenseSL2& d) {
  return DenseClass{mod(d.mu, 2), weightmod::casimir_invariant(d.mu, d.tau0)};
}

PsiMap canonical_form(const EvaluationDescriptor& d) {
  PsiMap out;
  for (const auto& f : d.factors) {
    if (weightmod::is_trivial(f.module)) continue;
    if (const auto* dense = std::get_if<DenseSL2>(&f.module)) {
      out.support.push_back({f.point, dense_class(*dense)});
    } else {
      out.support.push_back({f.point, FiniteLabel{std::get<weightmod::FiniteDim>(f.module).lambda}});
    }
  }
  std::sort(out.support.begin(), out.support.end(),
            [](const PsiEntry& a, const PsiEntry& b) { return a.point < b.point; });
  return out;
}

bool is_isomorphic(const EvaluationDescriptor& a, const EvaluationDescriptor& b) {
  if (!(a.ring == b.ring)) throw InvalidArgument("descriptors are over different rings");
  if (a.g->cartan() != b.g->cartan()) throw InvalidArgument("descriptors are over different Lie algebras");
  return canonical_form(a) == canonical_form(b);
}

std::optional<std::int64_t> dense_iso_oracle(const DenseSL2& d1, const DenseSL2& d2, int window) {
  if (window < 0) throw InvalidArgument("window must be nonnegative");
  for (std::int64_t s = -window; s <= window; ++s) {
    bool ok = true;
    for (std::int64_t i = -window; i <= window && ok; ++i) {
      // v'_i ↦ v_{i+s}; every generator must map the image of v'_i to the image of x v'_i.
      for (Generator x : {Generator::e, Generator::f, Generator::h}) {
        const auto lhs = weightmod::dense_action(d2.mu, d2.tau0, x, i);
        const auto rhs = weightmod::dense_action(d1.mu, d1.tau0, x, i + s);
        if (lhs.index + s != rhs.index || lhs.coefficient != rhs.coefficient) {
          ok = false;
          break;
        }
      }
    }
    if (ok) return s;
  }
  return std::nullopt;
}

std::string to_string(const IsoClassLabel& label) {
  if (const auto* f = std::get_if<FiniteLabel>(&label)) {
    std::string out = "FiniteDim(";
    for (std::size_t i = 0; i < f->lambda.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(f->lambda[i]);
    }
    return out + ")";
  }
  const auto& d = std::get<DenseClass>(label);
  return "DenseClass(" + weightlab::to_string(d.coset) + "," + weightlab::to_string(d.casimir) + ")";
}

}  // namespace weightlab::classify
