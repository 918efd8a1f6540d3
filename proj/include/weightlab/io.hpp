#pragma once

#include <string>

#include "json.hpp"
#include "weightlab/classify.hpp"
#include "weightlab/evaluation.hpp"
#include "weightlab/ucext.hpp"

namespace weightlab::io {

using Json = nlohmann::json;

/// Unreadable files and malformed documents.
class IoError : public Error {
public:
  using Error::Error;
};

Json read_json_file(const std::string& path);

/**
 * {"ring": {"vars": n | [names], "ideal": [polys]}, "g": "A1",
 *  "factors": [{"point": [rationals], "module": {...}}]}
 * with modules {"kind": "dense", "mu", "tau0"}, {"kind": "finite", "lambda": [..]}
 * or {"kind": "trivial"}; dense modules must be simple. Rationals are "p/q" strings or integers.
 */
evaluation::EvaluationDescriptor descriptor_from_json(const Json& j);
Json descriptor_to_json(const evaluation::EvaluationDescriptor& d);
evaluation::EvaluationDescriptor load_descriptor(const std::string& path);

/// {"labels": [...], "mult_table": d×d×d rationals, "unit": [...]}; unit defaults to the first basis vector.
ucext::FiniteAlgebra algebra_from_json(const Json& j);
Json algebra_to_json(const ucext::FiniteAlgebra& a);
ucext::FiniteAlgebra load_algebra(const std::string& path);

Json psi_map_to_json(const classify::PsiMap& psi);

Rational rational_from_json(const Json& j);
Json rational_to_json(const Rational& q);

}  // namespace weightlab::io
