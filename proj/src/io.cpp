#include "weightlab/io.hpp"

#include <fstream>

namespace weightlab::io {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw IoError(std::string("missing field '") + key + "'");
  return j.at(key);
}

RationalVector rationals_from_json(const Json& j) {
  if (!j.is_array()) throw IoError("expected an array of rationals");
  RationalVector out;
  for (const auto& x : j) out.push_back(rational_from_json(x));
  return out;
}

Json rationals_to_json(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(rational_to_json(x));
  return out;
}

weightmod::WeightModuleDescriptor module_from_json(const Json& j,
                                                   const std::shared_ptr<const rootsys::RootSystem>& g) {
  const std::string kind = field(j, "kind").get<std::string>();
  if (kind == "trivial") return weightmod::Trivial{};
  if (kind == "dense") return weightmod::simple_dense(rational_from_json(field(j, "mu")), rational_from_json(field(j, "tau0")));
  if (kind == "finite") {
    const auto& lam = field(j, "lambda");
    weightmod::DynkinLabels lambda;
    if (lam.is_number_integer()) {
      lambda.push_back(lam.get<int>());
    } else if (lam.is_array()) {
      for (const auto& x : lam) lambda.push_back(x.get<int>());
    } else {
      throw IoError("lambda must be an integer or an array of integers");
    }
    return weightmod::finite_dim(g, lambda);
  }
  throw IoError("unknown module kind '" + kind + "'");
}

Json module_to_json(const weightmod::WeightModuleDescriptor& m) {
  if (std::holds_alternative<weightmod::Trivial>(m)) return {{"kind", "trivial"}};
  if (const auto* d = std::get_if<weightmod::DenseSL2>(&m)) {
    return {{"kind", "dense"}, {"mu", rational_to_json(d->mu)}, {"tau0", rational_to_json(d->tau0)}};
  }
  return {{"kind", "finite"}, {"lambda", std::get<weightmod::FiniteDim>(m).lambda}};
}

}  // namespace

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw IoError("expected a rational as a \"p/q\" string or an integer, got " + j.dump());
}

Json rational_to_json(const Rational& q) { return to_string(q); }

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw IoError("'" + path + "' is not valid JSON: " + e.what());
  }
}

evaluation::EvaluationDescriptor descriptor_from_json(const Json& j) {
  try {
    const auto& ring_j = field(j, "ring");
    const auto& vars_j = field(ring_j, "vars");
    std::vector<std::string> vars;
    if (vars_j.is_number_integer()) {
      const int n = vars_j.get<int>();
      if (n < 0) throw IoError("vars must be nonnegative");
      vars = default_variable_names(static_cast<std::size_t>(n));
    } else {
      vars = vars_j.get<std::vector<std::string>>();
    }
    std::vector<std::string> ideal;
    if (ring_j.contains("ideal")) ideal = ring_j.at("ideal").get<std::vector<std::string>>();
    auto ring = evaluation::make_ring(vars, ideal);

    auto g = std::make_shared<const rootsys::RootSystem>(rootsys::build_root_system(field(j, "g").get<std::string>()));
    std::vector<evaluation::Factor> factors;
    if (j.contains("factors")) {
      for (const auto& f : j.at("factors")) {
        factors.push_back({evaluation::Point{rationals_from_json(field(f, "point"))}, module_from_json(field(f, "module"), g)});
      }
    }
    return evaluation::make_descriptor(std::move(ring), std::move(g), std::move(factors));
  } catch (const Json::exception& e) {
    throw IoError(std::string("malformed descriptor: ") + e.what());
  }
}

Json descriptor_to_json(const evaluation::EvaluationDescriptor& d) {
  Json ideal = Json::array();
  for (const auto& p : d.ring.ideal) ideal.push_back(p.to_string(d.ring.vars));
  Json factors = Json::array();
  for (const auto& f : d.factors) {
    factors.push_back({{"point", rationals_to_json(f.point.coords)}, {"module", module_to_json(f.module)}});
  }
  return {{"ring", {{"vars", d.ring.vars}, {"ideal", ideal}}}, {"g", d.g->name()}, {"factors", factors}};
}

evaluation::EvaluationDescriptor load_descriptor(const std::string& path) {
  return descriptor_from_json(read_json_file(path));
}

ucext::FiniteAlgebra algebra_from_json(const Json& j) {
  try {
    ucext::FiniteAlgebra a;
    a.labels = field(j, "labels").get<std::vector<std::string>>();
    const auto& table = field(j, "mult_table");
    if (!table.is_array()) throw IoError("mult_table must be an array");
    for (const auto& row : table) {
      if (!row.is_array()) throw IoError("mult_table rows must be arrays");
      std::vector<RationalVector> r;
      for (const auto& entry : row) r.push_back(rationals_from_json(entry));
      a.mult.push_back(std::move(r));
    }
    if (j.contains("unit")) {
      a.unit = rationals_from_json(j.at("unit"));
    } else {
      a.unit.assign(a.labels.size(), Rational(0));
      if (!a.unit.empty()) a.unit[0] = 1;
    }
    return a;
  } catch (const Json::exception& e) {
    throw IoError(std::string("malformed algebra: ") + e.what());
  }
}

Json algebra_to_json(const ucext::FiniteAlgebra& a) {
  Json table = Json::array();
  for (const auto& row : a.mult) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(rationals_to_json(v));
    table.push_back(r);
  }
  return {{"labels", a.labels}, {"mult_table", table}, {"unit", rationals_to_json(a.unit)}};
}

ucext::FiniteAlgebra load_algebra(const std::string& path) { return algebra_from_json(read_json_file(path)); }

Json psi_map_to_json(const classify::PsiMap& psi) {
  Json support = Json::array();
  for (const auto& e : psi.support) {
    Json label;
    if (const auto* f = std::get_if<classify::FiniteLabel>(&e.label)) {
      label = {{"kind", "finite"}, {"lambda", f->lambda}};
    } else {
      const auto& d = std::get<classify::DenseClass>(e.label);
      label = {{"kind", "dense"}, {"coset", rational_to_json(d.coset)}, {"casimir", rational_to_json(d.casimir)}};
    }
    support.push_back({{"point", rationals_to_json(e.point.coords)}, {"label", label}});
  }
  return {{"support", support}};
}

}  // namespace weightlab::io
