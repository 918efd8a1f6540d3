#include "weightlab/evaluation.hpp"

#include <algorithm>
#include <set>

#include "weightlab/linalg.hpp"

namespace weightlab::evaluation {

using weightmod::DenseSL2;
using weightmod::FiniteDim;

CoordinateRing make_ring(std::vector<std::string> vars, const std::vector<std::string>& ideal) {
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (!seen.insert(v).second) throw InvalidArgument("duplicate variable name '" + v + "'");
  }
  CoordinateRing ring{std::move(vars), {}};
  for (const auto& g : ideal) ring.ideal.push_back(parse_polynomial(g, ring.vars));
  return ring;
}

Point validate_point(const CoordinateRing& ring, const RationalVector& coords) {
  if (coords.size() != ring.num_vars()) {
    throw InvalidArgument("point has " + std::to_string(coords.size()) + " coordinates, ring has " +
                          std::to_string(ring.num_vars()) + " variables");
  }
  Point p{coords};
  for (auto& x : p.coords) x.canonicalize();
  for (const auto& g : ring.ideal) {
    const Rational v = g.evaluate(p.coords);
    if (v != 0) {
      throw InvalidArgument("generator " + g.to_string(ring.vars) + " takes the value " + to_string(v) + " at " +
                            to_string(p.coords));
    }
  }
  return p;
}

Rational eval_at(const CoordinateRing& ring, const Polynomial& s, const Point& p) {
  if (s.num_vars() != ring.num_vars()) throw InvalidArgument("polynomial is not over this ring");
  return s.evaluate(p.coords);
}

std::vector<Polynomial> crt_idempotents(const CoordinateRing& ring, const std::vector<Point>& points, int degree_cap) {
  const std::size_t r = points.size();
  for (std::size_t i = 0; i < r; ++i) {
    validate_point(ring, points[i].coords);
    for (std::size_t j = 0; j < i; ++j) {
      if (points[i] == points[j]) throw InvalidArgument("points must be pairwise distinct");
    }
  }
  if (r == 0) return {};
  const std::size_t n = ring.num_vars();
  for (int deg = 0; deg <= degree_cap; ++deg) {
    const auto monos = monomials_up_to(n, deg);
    linalg::Matrix e(r, RationalVector(monos.size()));
    for (std::size_t j = 0; j < r; ++j) {
      for (std::size_t m = 0; m < monos.size(); ++m) {
        Polynomial mono(n);
        mono.add_term(monos[m], 1);
        e[j][m] = mono.evaluate(points[j].coords);
      }
    }
    if (linalg::rank(e) < r) continue;
    std::vector<Polynomial> out;
    for (std::size_t i = 0; i < r; ++i) {
      RationalVector delta(r, Rational(0));
      delta[i] = 1;
      const auto coeffs = linalg::solve(e, delta);
      Polynomial s(n);
      for (std::size_t m = 0; m < monos.size(); ++m) s.add_term(monos[m], (*coeffs)[m]);
      out.push_back(std::move(s));
    }
    return out;
  }
  throw ResourceLimit("no interpolating idempotents of degree at most " + std::to_string(degree_cap));
}

std::size_t EvaluationDescriptor::dense_count() const {
  return static_cast<std::size_t>(
      std::count_if(factors.begin(), factors.end(), [](const Factor& f) { return weightmod::is_dense(f.module); }));
}

bool EvaluationDescriptor::is_sl2() const { return g->rank() == 1; }

EvaluationDescriptor make_descriptor(CoordinateRing ring, std::shared_ptr<const rootsys::RootSystem> g,
                                     std::vector<Factor> factors) {
  if (!g) throw InvalidArgument("descriptor needs a Lie algebra");
  if (factors.size() > kMaxFactors) {
    throw ResourceLimit("at most " + std::to_string(kMaxFactors) + " tensor factors are supported");
  }
  EvaluationDescriptor d{std::move(ring), std::move(g), {}};
  for (std::size_t i = 0; i < factors.size(); ++i) {
    factors[i].point = validate_point(d.ring, factors[i].point.coords);
    for (std::size_t j = 0; j < i; ++j) {
      if (factors[i].point == factors[j].point) {
        throw InvalidArgument("points must be pairwise distinct; " + to_string(factors[i].point.coords) +
                              " repeats");
      }
    }
  }
  for (auto& f : factors) {
    if (const auto* fd = std::get_if<FiniteDim>(&f.module)) {
      if (!fd->system || fd->system->cartan() != d.g->cartan()) {
        throw InvalidArgument("factor module is not over " + d.g->name());
      }
      weightmod::finite_dim(fd->system, fd->lambda);
    } else if (auto* dense = std::get_if<DenseSL2>(&f.module)) {
      if (d.g->rank() != 1) {
        throw NotSupported("infinite-dimensional factors are only constructed for A1, not " + d.g->name());
      }
      dense->mu.canonicalize();
      dense->tau0.canonicalize();
    }
    if (!weightmod::is_trivial(f.module)) d.factors.push_back(std::move(f));
  }
  return d;
}

namespace {

void require_sl2(const EvaluationDescriptor& d) {
  if (!d.is_sl2()) throw NotSupported("explicit actions are only available for A1, not " + d.g->name());
}

void check_tuple(const EvaluationDescriptor& d, const BasisTuple& t) {
  if (t.size() != d.factors.size()) throw InvalidArgument("basis tuple has the wrong length");
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!weightmod::is_dense(d.factors[i].module)) {
      const int n = weightmod::sl2_highest_weight(d.factors[i].module);
      if (t[i] < 0 || t[i] > n) throw InvalidArgument("basis index out of range");
    }
  }
}

std::optional<weightmod::Action> factor_action(const WeightModuleDescriptor& m, Generator x, std::int64_t idx) {
  if (const auto* dense = std::get_if<DenseSL2>(&m)) return weightmod::dense_action(dense->mu, dense->tau0, x, idx);
  return weightmod::finite_sl2_action(weightmod::sl2_highest_weight(m), x, idx);
}

using WeightMap = std::map<Weight, std::int64_t, RationalVectorLess>;

WeightMap factor_weights(const EvaluationDescriptor& d, const Factor& f, std::optional<int> window) {
  if (const auto* dense = std::get_if<DenseSL2>(&f.module)) {
    if (!window) throw InvalidArgument("a window is required for infinite-dimensional factors");
    WeightMap out;
    for (std::int64_t i = -*window; i <= *window; ++i) {
      out.emplace(Weight{weightmod::dense_action(dense->mu, dense->tau0, Generator::h, i).coefficient}, 1);
    }
    return out;
  }
  const auto& fd = std::get<FiniteDim>(f.module);
  const auto& table = weightmod::FreudenthalCache::global().get(*d.g, fd.lambda);
  return WeightMap(table.entries.begin(), table.entries.end());
}

WeightMap convolve(const WeightMap& a, const WeightMap& b) {
  WeightMap out;
  for (const auto& [wa, ma] : a) {
    for (const auto& [wb, mb] : b) {
      Weight w(wa.size());
      for (std::size_t i = 0; i < w.size(); ++i) {
        w[i] = wa[i] + wb[i];
        w[i].canonicalize();
      }
      out[w] += ma * mb;
    }
  }
  return out;
}

WeightMap convolve_factors(const EvaluationDescriptor& d, std::size_t count, std::optional<int> window) {
  WeightMap acc{{Weight(static_cast<std::size_t>(d.g->rank()), Rational(0)), 1}};
  for (std::size_t i = 0; i < count; ++i) acc = convolve(acc, factor_weights(d, d.factors[i], window));
  return acc;
}

}  // namespace

Rational tuple_weight(const EvaluationDescriptor& d, const BasisTuple& t) {
  require_sl2(d);
  check_tuple(d, t);
  Rational w = 0;
  for (std::size_t i = 0; i < t.size(); ++i) w += factor_action(d.factors[i].module, Generator::h, t[i])->coefficient;
  w.canonicalize();
  return w;
}

Combination evaluation_action(const EvaluationDescriptor& d, Generator x, const Polynomial& s, const BasisTuple& t) {
  require_sl2(d);
  check_tuple(d, t);
  Combination out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const Rational r = eval_at(d.ring, s, d.factors[i].point);
    if (r == 0) continue;
    const auto a = factor_action(d.factors[i].module, x, t[i]);
    if (!a || a->coefficient == 0) continue;
    BasisTuple image = t;
    image[i] = a->index;
    Rational& slot = out[image];
    slot += r * a->coefficient;
    slot.canonicalize();
    if (slot == 0) out.erase(image);
  }
  return out;
}

Combination evaluation_action(const EvaluationDescriptor& d, Generator x, const Polynomial& s, const Combination& v) {
  Combination out;
  for (const auto& [t, c] : v) {
    for (const auto& [image, coef] : evaluation_action(d, x, s, t)) {
      Rational& slot = out[image];
      slot += c * coef;
      slot.canonicalize();
      if (slot == 0) out.erase(image);
    }
  }
  return out;
}

TensorMultiplicity tensor_multiplicity(const EvaluationDescriptor& d, const Weight& weight, std::optional<int> window) {
  if (weight.size() != static_cast<std::size_t>(d.g->rank())) {
    throw InvalidArgument("weight has " + std::to_string(weight.size()) + " coordinates, " + d.g->name() +
                          " needs " + std::to_string(d.g->rank()));
  }
  if (window && *window < 0) throw InvalidArgument("window must be nonnegative");
  if (d.dense_count() > 0 && !window) throw InvalidArgument("a window is required for infinite-dimensional factors");
  TensorMultiplicity out;
  if (d.factors.empty()) {
    out.count = std::all_of(weight.begin(), weight.end(), [](const Rational& x) { return x == 0; }) ? 1 : 0;
    return out;
  }
  const auto head = convolve_factors(d, d.factors.size() - 1, window);
  const auto last = factor_weights(d, d.factors.back(), window);
  for (const auto& [w, m] : head) {
    Weight rest(weight.size());
    for (std::size_t i = 0; i < rest.size(); ++i) {
      rest[i] = weight[i] - w[i];
      rest[i].canonicalize();
    }
    auto it = last.find(rest);
    if (it != last.end()) out.count += m * it->second;
  }

  if (d.dense_count() >= 2) {
    // Every dense and finite sl₂ factor has support in a single class mod 2.
    std::vector<std::size_t> dense;
    Rational offset = 0;
    for (std::size_t i = 0; i < d.factors.size(); ++i) {
      if (const auto* m = std::get_if<DenseSL2>(&d.factors[i].module)) {
        dense.push_back(i);
        offset += m->mu;
      } else {
        offset += weightmod::sl2_highest_weight(d.factors[i].module);
      }
    }
    const Rational steps = (weight[0] - offset) / 2;
    if (is_integer(steps)) {
      out.infinite = true;
      const std::int64_t j = to_int64(steps);
      for (std::int64_t i = -*window; i <= *window; ++i) {
        if (j - i >= -*window && j - i <= *window) out.witness.emplace_back(i, j - i);
      }
    }
  }
  return out;
}

weightmod::MultiplicityFunction tensor_multiplicities(const EvaluationDescriptor& d, std::optional<int> window) {
  if (d.dense_count() > 0 && !window) throw InvalidArgument("a window is required for infinite-dimensional factors");
  weightmod::MultiplicityFunction out;
  const auto all = convolve_factors(d, d.factors.size(), window);
  out.entries.insert(all.begin(), all.end());
  out.coset = Weight(static_cast<std::size_t>(d.g->rank()), Rational(0));
  if (d.is_sl2()) {
    Rational offset = 0;
    for (const auto& f : d.factors) {
      if (const auto* m = std::get_if<DenseSL2>(&f.module)) {
        offset += m->mu;
      } else {
        offset += weightmod::sl2_highest_weight(f.module);
      }
    }
    out.coset = Weight{mod(offset, 2)};
  }
  if (d.dense_count() > 0) {
    out.infinite = true;
    out.window = window;
  }
  return out;
}

}  // namespace weightlab::evaluation
