#include "weightlab/ucext.hpp"

#include <random>
#include <sstream>

namespace weightlab::ucext {

RationalVector FiniteAlgebra::basis(std::size_t i) const {
  RationalVector v(dim(), Rational(0));
  v.at(i) = 1;
  return v;
}

RationalVector FiniteAlgebra::multiply(const RationalVector& a, const RationalVector& b) const {
  const std::size_t d = dim();
  RationalVector out(d, Rational(0));
  for (std::size_t i = 0; i < d; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (b[j] == 0) continue;
      const Rational c = a[i] * b[j];
      for (std::size_t k = 0; k < d; ++k) out[k] += c * mult[i][j][k];
    }
  }
  for (auto& x : out) x.canonicalize();
  return out;
}

void FiniteAlgebra::validate() const {
  const std::size_t d = dim();
  if (d == 0) throw InvalidArgument("algebra must have positive dimension");
  if (mult.size() != d || unit.size() != d) throw InvalidArgument("multiplication table has the wrong shape");
  for (const auto& row : mult) {
    if (row.size() != d) throw InvalidArgument("multiplication table has the wrong shape");
    for (const auto& v : row)
      if (v.size() != d) throw InvalidArgument("multiplication table has the wrong shape");
  }
  for (std::size_t i = 0; i < d; ++i) {
    if (multiply(unit, basis(i)) != basis(i)) throw InvalidArgument("unit does not act as identity on " + labels[i]);
    for (std::size_t j = 0; j < d; ++j) {
      if (mult[i][j] != mult[j][i]) throw InvalidArgument("not commutative: " + labels[i] + "*" + labels[j]);
      for (std::size_t k = 0; k < d; ++k) {
        if (multiply(mult[i][j], basis(k)) != multiply(basis(i), mult[j][k])) {
          throw InvalidArgument("not associative on (" + labels[i] + ", " + labels[j] + ", " + labels[k] + ")");
        }
      }
    }
  }
}

namespace {

FiniteAlgebra empty_algebra(std::vector<std::string> labels) {
  const std::size_t d = labels.size();
  FiniteAlgebra a{std::move(labels), {}, RationalVector(d, Rational(0))};
  a.mult.assign(d, std::vector<RationalVector>(d, RationalVector(d, Rational(0))));
  return a;
}

}  // namespace

FiniteAlgebra truncated_polynomial(int m) {
  if (m < 1) throw InvalidArgument("truncation order must be positive");
  return monogenic(std::vector<Rational>(static_cast<std::size_t>(m), Rational(0)));
}

FiniteAlgebra split_product(int m) {
  if (m < 1) throw InvalidArgument("number of factors must be positive");
  std::vector<std::string> labels;
  for (int i = 1; i <= m; ++i) labels.push_back("e" + std::to_string(i));
  auto a = empty_algebra(labels);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    a.mult[i][i][i] = 1;
    a.unit[i] = 1;
  }
  return a;
}

FiniteAlgebra monogenic(const std::vector<Rational>& coeffs) {
  const std::size_t m = coeffs.size();
  if (m == 0) throw InvalidArgument("polynomial must have positive degree");
  std::vector<std::string> labels{"1"};
  for (std::size_t k = 1; k < m; ++k) labels.push_back(k == 1 ? "x" : "x^" + std::to_string(k));
  auto a = empty_algebra(labels);
  a.unit[0] = 1;
  // Coordinates of x^k for k < 2m − 1, reducing with x^m = −Σ c_j x^j.
  std::vector<RationalVector> power;
  for (std::size_t k = 0; k < 2 * m - 1; ++k) {
    RationalVector v(m, Rational(0));
    if (k < m) {
      v[k] = 1;
    } else {
      // x^k = x · x^{k−1}
      const auto& prev = power[k - 1];
      for (std::size_t j = 0; j + 1 < m; ++j) v[j + 1] = prev[j];
      for (std::size_t j = 0; j < m; ++j) v[j] -= prev[m - 1] * coeffs[j];
      for (auto& x : v) x.canonicalize();
    }
    power.push_back(v);
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) a.mult[i][j] = power[i + j];
  return a;
}

FiniteAlgebra square_zero_plane() {
  auto a = empty_algebra({"1", "x", "y"});
  a.unit[0] = 1;
  for (std::size_t i = 0; i < 3; ++i) {
    a.mult[0][i][i] = 1;
    a.mult[i][0][i] = 1;
  }
  return a;
}

CentralSpace central_space_unchecked(const FiniteAlgebra& a) {
  const std::size_t d = a.dim();
  CentralSpace z;
  z.d_ = d;
  auto at = [d](std::size_t i, std::size_t j) { return i * d + j; };
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t s = 0; s < d; ++s) {
      RationalVector v(d * d, Rational(0));
      v[at(r, s)] += 1;
      v[at(s, r)] += 1;
      z.relations_.push_back(std::move(v));
    }
  }
  // rs⊗t + st⊗r + tr⊗s, with products expanded in the basis.
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t s = 0; s < d; ++s) {
      for (std::size_t t = 0; t < d; ++t) {
        RationalVector v(d * d, Rational(0));
        for (std::size_t k = 0; k < d; ++k) {
          v[at(k, t)] += a.mult[r][s][k];
          v[at(k, r)] += a.mult[s][t][k];
          v[at(k, s)] += a.mult[t][r][k];
        }
        z.relations_.push_back(std::move(v));
      }
    }
  }
  z.echelon_ = linalg::row_echelon(z.relations_, d * d);
  z.free_ = z.echelon_.free_columns();
  return z;
}

CentralSpace central_space(const FiniteAlgebra& a) {
  a.validate();
  return central_space_unchecked(a);
}

RationalVector CentralSpace::project(const RationalVector& tensor) const {
  if (tensor.size() != d_ * d_) throw InvalidArgument("tensor has the wrong dimension");
  const auto rem = echelon_.reduce(tensor);
  RationalVector out;
  out.reserve(free_.size());
  for (auto c : free_) out.push_back(rem[c]);
  return out;
}

RationalVector CentralSpace::pair(const RationalVector& r, const RationalVector& s) const {
  RationalVector t(d_ * d_, Rational(0));
  for (std::size_t i = 0; i < d_; ++i) {
    if (r[i] == 0) continue;
    for (std::size_t j = 0; j < d_; ++j) t[i * d_ + j] = r[i] * s[j];
  }
  return project(t);
}

namespace {

// [b_x, b_y] = Σ_z c[x][y][z] b_z in the basis e, h, f.
using Structure = std::array<std::array<std::array<Rational, 3>, 3>, 3>;

const Structure& sl2_structure() {
  static const Structure c = [] {
    Structure s{};
    const int e = 0, h = 1, f = 2;
    s[e][f][h] = 1;
    s[f][e][h] = -1;
    s[h][e][e] = 2;
    s[e][h][e] = -2;
    s[h][f][f] = -2;
    s[f][h][f] = 2;
    return s;
  }();
  return c;
}

}  // namespace

const std::array<std::array<Rational, 3>, 3>& sl2_killing_form() {
  static const std::array<std::array<Rational, 3>, 3> kappa = [] {
    const auto& c = sl2_structure();
    std::array<std::array<Rational, 3>, 3> k{};
    // (ad x)_{zw} = c[x][w][z]; tr(ad x ad y) = Σ_{z,w} c[x][w][z] c[y][z][w].
    for (int x = 0; x < 3; ++x)
      for (int y = 0; y < 3; ++y)
        for (int z = 0; z < 3; ++z)
          for (int w = 0; w < 3; ++w) k[x][y] += c[x][w][z] * c[y][z][w];
    if (k[0][2] != 4 || k[1][1] != 8 || k[0][0] != 0 || k[1][0] != 0) {
      throw Error("sl2 Killing form does not have the expected values");
    }
    return k;
  }();
  return kappa;
}

bool ExtendedElement::is_zero() const {
  for (const auto& part : current)
    for (const auto& x : part)
      if (x != 0) return false;
  for (const auto& x : central)
    if (x != 0) return false;
  return true;
}

ExtendedAlgebra::ExtendedAlgebra(FiniteAlgebra a) : a_(std::move(a)), z_(central_space(a_)) {}

ExtendedAlgebra::ExtendedAlgebra(FiniteAlgebra a, CentralSpace z) : a_(std::move(a)), z_(std::move(z)) {}

ExtendedElement ExtendedAlgebra::zero() const {
  ExtendedElement out;
  for (auto& part : out.current) part.assign(a_.dim(), Rational(0));
  out.central.assign(z_.quotient_dim(), Rational(0));
  return out;
}

ExtendedElement ExtendedAlgebra::current(Sl2 x, const RationalVector& a) const {
  if (a.size() != a_.dim()) throw InvalidArgument("algebra element has the wrong dimension");
  ExtendedElement out = zero();
  out.current[static_cast<std::size_t>(x)] = a;
  return out;
}

ExtendedElement ExtendedAlgebra::central(const RationalVector& z) const {
  if (z.size() != z_.quotient_dim()) throw InvalidArgument("central element has the wrong dimension");
  ExtendedElement out = zero();
  out.central = z;
  return out;
}

ExtendedElement ExtendedAlgebra::add(const ExtendedElement& u, const ExtendedElement& v) const {
  ExtendedElement out = u;
  for (std::size_t x = 0; x < 3; ++x)
    for (std::size_t i = 0; i < a_.dim(); ++i) {
      out.current[x][i] += v.current[x][i];
      out.current[x][i].canonicalize();
    }
  for (std::size_t k = 0; k < out.central.size(); ++k) {
    out.central[k] += v.central[k];
    out.central[k].canonicalize();
  }
  return out;
}

ExtendedElement ExtendedAlgebra::bracket(const ExtendedElement& u, const ExtendedElement& v) const {
  const auto& c = sl2_structure();
  const auto& kappa = sl2_killing_form();
  ExtendedElement out = zero();
  for (std::size_t x = 0; x < 3; ++x) {
    for (std::size_t y = 0; y < 3; ++y) {
      const auto ab = a_.multiply(u.current[x], v.current[y]);
      for (std::size_t z = 0; z < 3; ++z) {
        if (c[x][y][z] == 0) continue;
        for (std::size_t i = 0; i < a_.dim(); ++i) out.current[z][i] += c[x][y][z] * ab[i];
      }
      if (kappa[x][y] != 0) {
        const auto pr = z_.pair(u.current[x], v.current[y]);
        for (std::size_t k = 0; k < pr.size(); ++k) out.central[k] += kappa[x][y] * pr[k];
      }
    }
  }
  for (auto& part : out.current)
    for (auto& q : part) q.canonicalize();
  for (auto& q : out.central) q.canonicalize();
  return out;
}

struct JacobiAccess {
  static ExtendedAlgebra make(const FiniteAlgebra& a) { return ExtendedAlgebra(a, central_space_unchecked(a)); }
};

JacobiReport verify_jacobi(const FiniteAlgebra& a, std::size_t samples, std::uint64_t seed) {
  const ExtendedAlgebra ext = JacobiAccess::make(a);
  const std::size_t d = a.dim();
  const std::size_t q = ext.center().quotient_dim();
  const char* names[] = {"e", "h", "f"};
  auto element = [&](std::size_t k) {
    if (k < 3 * d) return ext.current(static_cast<Sl2>(k / d), a.basis(k % d));
    RationalVector z(q, Rational(0));
    z[k - 3 * d] = 1;
    return ext.central(z);
  };
  auto label = [&](std::size_t k) {
    if (k < 3 * d) return std::string(names[k / d]) + "⊗" + a.labels[k % d];
    return "z" + std::to_string(k - 3 * d);
  };
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, 3 * d + q - 1);
  JacobiReport report;
  for (std::size_t n = 0; n < samples; ++n) {
    const std::size_t i = pick(rng), j = pick(rng), k = pick(rng);
    const auto x = element(i), y = element(j), z = element(k);
    const auto sum = ext.add(ext.add(ext.bracket(x, ext.bracket(y, z)), ext.bracket(y, ext.bracket(z, x))),
                             ext.bracket(z, ext.bracket(x, y)));
    ++report.checked;
    if (!sum.is_zero()) {
      report.pass = false;
      report.witness = "(" + label(i) + ", " + label(j) + ", " + label(k) + ")";
      return report;
    }
  }
  return report;
}

TraceReport trace_identity_check(const evaluation::EvaluationDescriptor& d, const Polynomial& r, const Polynomial& s,
                                 const Rational& nu, int window) {
  if (!d.is_sl2()) throw NotSupported("trace check needs A1");
  if (window < 0) throw InvalidArgument("window must be nonnegative");
  using evaluation::BasisTuple;
  const auto dims = evaluation::tensor_multiplicity(d, {nu}, window);
  if (dims.infinite) throw InvalidArgument("weight space at " + to_string(nu) + " is infinite-dimensional");

  // Basis of V_ν: finite indices enumerated, the single dense index (if any) solved from the weight.
  std::vector<BasisTuple> basis;
  const std::size_t r_count = d.factors.size();
  std::size_t dense_pos = r_count;
  std::vector<int> top(r_count, 0);
  for (std::size_t i = 0; i < r_count; ++i) {
    if (weightmod::is_dense(d.factors[i].module)) {
      dense_pos = i;
    } else {
      top[i] = weightmod::sl2_highest_weight(d.factors[i].module);
    }
  }
  BasisTuple t(r_count, 0);
  while (true) {
    bool ok = true;
    if (dense_pos < r_count) {
      t[dense_pos] = 0;
      const Rational rest = nu - evaluation::tuple_weight(d, t);
      const Rational idx = rest / 2;
      if (is_integer(idx) && abs(idx) <= window) {
        t[dense_pos] = to_int64(idx);
      } else {
        ok = false;
      }
    }
    if (ok && evaluation::tuple_weight(d, t) == nu) basis.push_back(t);
    std::size_t i = 0;
    while (i < r_count && (i == dense_pos || t[i] == top[i])) {
      if (i != dense_pos) t[i] = 0;
      ++i;
    }
    if (i == r_count) break;
    ++t[i];
  }

  TraceReport report;
  report.weight_space_dim = basis.size();
  for (const auto& b : basis) {
    evaluation::Combination start{{b, Rational(1)}};
    auto rs = evaluation::evaluation_action(d, weightmod::Generator::h, r,
                                            evaluation::evaluation_action(d, weightmod::Generator::h, s, start));
    auto sr = evaluation::evaluation_action(d, weightmod::Generator::h, s,
                                            evaluation::evaluation_action(d, weightmod::Generator::h, r, start));
    Rational diag = 0;
    if (auto it = rs.find(b); it != rs.end()) diag += it->second;
    if (auto it = sr.find(b); it != sr.end()) diag -= it->second;
    report.trace += diag;
  }
  report.trace.canonicalize();
  return report;
}

}  // namespace weightlab::ucext
