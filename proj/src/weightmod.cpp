#include "weightlab/weightmod.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <set>

#include "weightlab/linalg.hpp"

namespace weightlab::weightmod {

namespace {

using IntWeight = std::vector<std::int64_t>;

void require_dominant(const RootSystem& rs, const DynkinLabels& lambda) {
  if (lambda.size() != static_cast<std::size_t>(rs.rank())) {
    throw InvalidArgument("highest weight has " + std::to_string(lambda.size()) + " labels, " + rs.name() +
                          " needs " + std::to_string(rs.rank()));
  }
  for (int x : lambda) {
    if (x < 0) throw InvalidArgument("highest weight is not dominant");
  }
}

// Integer data for the invariant form in Dynkin coordinates, scaled by a common factor.
struct FormData {
  std::vector<std::vector<std::int64_t>> omega;  // scale·(ω_i, ω_j)
  std::int64_t scale = 1;
  std::vector<IntWeight> positive_dynkin;  // positive roots in Dynkin coordinates
  std::vector<rootsys::Coords> positive_root;
  std::vector<int> d;

  explicit FormData(const RootSystem& rs) : d(rs.symmetrizer()) {
    const auto n = static_cast<std::size_t>(rs.rank());
    const auto& c = rs.cartan();
    linalg::Matrix gram(n, RationalVector(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) gram[i][j] = d[i] * c[i][j];
    const auto inv = linalg::inverse(gram);
    if (!inv) throw InvalidArgument("degenerate Cartan matrix");
    Integer l = 1;
    for (const auto& row : *inv)
      for (const auto& x : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    scale = l.get_si();
    omega.assign(n, std::vector<std::int64_t>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) omega[i][j] = to_int64(Rational(d[i] * d[j]) * (*inv)[i][j] * l);
    for (const auto& r : rs.positive()) {
      positive_root.push_back(r.coords());
      IntWeight v(n, 0);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) v[i] += c[i][j] * r[j];
      positive_dynkin.push_back(v);
    }
  }

  std::int64_t norm(const IntWeight& a) const {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < a.size(); ++j) s += a[i] * omega[i][j] * a[j];
    return s;
  }

  // scale·(μ, α) for the k-th positive root.
  std::int64_t with_root(const IntWeight& mu, std::size_t k) const {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < mu.size(); ++j) s += mu[j] * positive_root[k][j] * d[j];
    return s * scale;
  }
};

Weight to_weight(const IntWeight& w) { return Weight(w.begin(), w.end()); }

}  // namespace

FiniteDim finite_dim(std::shared_ptr<const RootSystem> system, DynkinLabels lambda) {
  if (!system) throw InvalidArgument("finite-dimensional module needs a root system");
  require_dominant(*system, lambda);
  return FiniteDim{std::move(system), std::move(lambda)};
}

DenseSL2 simple_dense(const Rational& mu, const Rational& tau0) {
  if (!is_simple_dense(mu, tau0)) {
    throw InvalidArgument("dense module (" + to_string(mu) + ", " + to_string(tau0) + ") is not simple");
  }
  return DenseSL2{mu, tau0};
}

bool is_trivial(const WeightModuleDescriptor& d) {
  if (std::holds_alternative<Trivial>(d)) return true;
  if (const auto* f = std::get_if<FiniteDim>(&d)) {
    return std::all_of(f->lambda.begin(), f->lambda.end(), [](int x) { return x == 0; });
  }
  return false;
}

bool is_dense(const WeightModuleDescriptor& d) { return std::holds_alternative<DenseSL2>(d); }

int sl2_highest_weight(const WeightModuleDescriptor& d) {
  if (std::holds_alternative<Trivial>(d)) return 0;
  const auto* f = std::get_if<FiniteDim>(&d);
  if (!f || f->system->rank() != 1) throw InvalidArgument("not a finite-dimensional sl2 module");
  return f->lambda[0];
}

std::int64_t MultiplicityFunction::at(const Weight& w) const {
  auto it = entries.find(w);
  return it == entries.end() ? 0 : it->second;
}

std::int64_t MultiplicityFunction::total() const {
  std::int64_t s = 0;
  for (const auto& [w, m] : entries) s += m;
  return s;
}

MultiplicityFunction freudenthal(const RootSystem& rs, const DynkinLabels& lambda) {
  require_dominant(rs, lambda);
  const FormData form(rs);
  const auto n = static_cast<std::size_t>(rs.rank());
  const auto& c = rs.cartan();

  IntWeight top(lambda.begin(), lambda.end());
  IntWeight top_rho = top;
  for (auto& x : top_rho) x += 1;
  const std::int64_t top_norm = form.norm(top_rho);

  std::vector<int> heights;
  for (const auto& r : form.positive_root) heights.push_back(std::accumulate(r.begin(), r.end(), 0));

  std::map<IntWeight, std::int64_t> mult{{top, 1}};
  std::vector<IntWeight> layer{top};
  for (int level = 1; !layer.empty(); ++level) {
    std::set<IntWeight> candidates;
    for (const auto& mu : layer) {
      for (std::size_t j = 0; j < n; ++j) {
        IntWeight next = mu;
        for (std::size_t i = 0; i < n; ++i) next[i] -= c[i][j];
        candidates.insert(next);
      }
    }
    layer.clear();
    for (const auto& mu : candidates) {
      IntWeight mu_rho = mu;
      for (auto& x : mu_rho) x += 1;
      const std::int64_t denom = top_norm - form.norm(mu_rho);
      if (denom <= 0) continue;
      std::int64_t numer = 0;
      for (std::size_t k = 0; k < form.positive_dynkin.size(); ++k) {
        IntWeight shifted = mu;
        for (int step = 1; step * heights[k] <= level; ++step) {
          for (std::size_t i = 0; i < n; ++i) shifted[i] += form.positive_dynkin[k][i];
          auto it = mult.find(shifted);
          if (it != mult.end()) numer += it->second * form.with_root(shifted, k);
        }
      }
      numer *= 2;
      if (numer % denom != 0) throw Error("Freudenthal recursion produced a non-integral multiplicity");
      const std::int64_t m = numer / denom;
      if (m > 0) {
        mult.emplace(mu, m);
        layer.push_back(mu);
      }
    }
  }

  MultiplicityFunction out;
  out.coset = Weight(n, Rational(0));
  for (const auto& [w, m] : mult) out.entries.emplace(to_weight(w), m);
  return out;
}

Integer weyl_dimension(const RootSystem& rs, const DynkinLabels& lambda) {
  require_dominant(rs, lambda);
  const auto& d = rs.symmetrizer();
  Rational dim = 1;
  for (const auto& r : rs.positive()) {
    long num = 0, den = 0;
    for (std::size_t j = 0; j < lambda.size(); ++j) {
      num += static_cast<long>(lambda[j] + 1) * r[j] * d[j];
      den += static_cast<long>(r[j]) * d[j];
    }
    dim *= Rational(num, den);
  }
  dim.canonicalize();
  return dim.get_num();
}

const MultiplicityFunction& FreudenthalCache::get(const RootSystem& rs, const DynkinLabels& lambda) {
  Key key{rs.cartan(), lambda};
  {
    std::shared_lock lock(mutex_);
    auto it = table_.find(key);
    if (it != table_.end()) return *it->second;
  }
  auto value = std::make_unique<MultiplicityFunction>(freudenthal(rs, lambda));
  std::unique_lock lock(mutex_);
  return *table_.emplace(std::move(key), std::move(value)).first->second;
}

FreudenthalCache& FreudenthalCache::global() {
  static FreudenthalCache cache;
  return cache;
}

Rational dense_tau(const Rational& mu, const Rational& tau0, std::int64_t i) {
  const Rational r(static_cast<long>(i));
  Rational t = tau0 - r * mu - r * (r + 1);
  t.canonicalize();
  return t;
}

Action dense_action(const Rational& mu, const Rational& tau0, Generator g, std::int64_t i) {
  switch (g) {
    case Generator::h: {
      Rational w = mu + 2 * Rational(static_cast<long>(i));
      w.canonicalize();
      return {w, i};
    }
    case Generator::e: return {dense_tau(mu, tau0, i), i + 1};
    case Generator::f: return {Rational(1), i - 1};
  }
  throw InvalidArgument("unknown generator");
}

std::optional<Action> finite_sl2_action(int n, Generator g, std::int64_t k) {
  if (k < 0 || k > n) throw InvalidArgument("basis index out of range for L(" + std::to_string(n) + ")");
  switch (g) {
    case Generator::h: return Action{Rational(n - 2 * k), k};
    case Generator::f:
      if (k == n) return std::nullopt;
      return Action{Rational(1), k + 1};
    case Generator::e:
      if (k == 0) return std::nullopt;
      return Action{Rational(k * (n - k + 1)), k - 1};
  }
  throw InvalidArgument("unknown generator");
}

bool is_simple_dense(const Rational& mu, const Rational& tau0) {
  // τ_i = 0 ⇔ i² + (1+μ)i − τ₀ = 0.
  const Rational b = 1 + mu;
  Rational disc = b * b + 4 * tau0;
  disc.canonicalize();
  Rational root;
  if (!rational_sqrt(disc, root)) return true;
  for (const Rational& i : {Rational((-b + root) / 2), Rational((-b - root) / 2)}) {
    if (is_integer(i)) return false;
  }
  return true;
}

std::int64_t multiplicity(const WeightModuleDescriptor& d, const Weight& weight) {
  if (std::holds_alternative<Trivial>(d)) {
    return std::all_of(weight.begin(), weight.end(), [](const Rational& x) { return x == 0; }) ? 1 : 0;
  }
  if (const auto* f = std::get_if<FiniteDim>(&d)) {
    if (weight.size() != f->lambda.size()) {
      throw InvalidArgument("weight has " + std::to_string(weight.size()) + " coordinates, module needs " +
                            std::to_string(f->lambda.size()));
    }
    return FreudenthalCache::global().get(*f->system, f->lambda).at(weight);
  }
  const auto& dense = std::get<DenseSL2>(d);
  if (weight.size() != 1) throw InvalidArgument("dense sl2 weights have one coordinate");
  return is_integer((weight[0] - dense.mu) / 2) ? 1 : 0;
}

bool verify_sl2_relations(const Rational& mu, const Rational& tau0, int window) {
  if (window < 1) throw InvalidArgument("window must be at least 1");
  auto coef = [&](Generator g, std::int64_t i) { return dense_action(mu, tau0, g, i).coefficient; };
  auto h = [&](std::int64_t i) { return coef(Generator::h, i); };
  for (std::int64_t i = -window; i <= window; ++i) {
    // [h,e] v_i = 2 e v_i, both sides multiples of v_{i+1}.
    if (h(i + 1) * coef(Generator::e, i) - coef(Generator::e, i) * h(i) != 2 * coef(Generator::e, i)) return false;
    // [h,f] v_i = −2 f v_i, multiples of v_{i−1}.
    if (h(i - 1) * coef(Generator::f, i) - coef(Generator::f, i) * h(i) != -2 * coef(Generator::f, i)) return false;
    // [e,f] v_i = h v_i, multiples of v_i.
    const Rational ef = coef(Generator::e, i - 1) * coef(Generator::f, i);
    const Rational fe = coef(Generator::f, i + 1) * coef(Generator::e, i);
    if (ef - fe != h(i)) return false;
  }
  return true;
}

Rational casimir_invariant(const Rational& mu, const Rational& tau0) {
  Rational c = 2 * tau0 + mu + mu * mu / 2;
  c.canonicalize();
  return c;
}

DenseSL2 shift_dense(const DenseSL2& d, std::int64_t s) {
  Rational mu = d.mu + 2 * Rational(static_cast<long>(s));
  mu.canonicalize();
  return DenseSL2{mu, dense_tau(d.mu, d.tau0, s)};
}

}  // namespace weightlab::weightmod
