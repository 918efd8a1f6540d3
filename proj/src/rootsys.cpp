#include "weightlab/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <set>

namespace weightlab::rootsys {

// ---------------------------------------------------------------------------
// Root

bool Root::is_positive() const {
  return std::all_of(coords_.begin(), coords_.end(), [](int c) { return c >= 0; });
}

int Root::height() const { return std::accumulate(coords_.begin(), coords_.end(), 0); }

Root Root::operator-() const {
  Coords out(coords_.size());
  std::transform(coords_.begin(), coords_.end(), out.begin(), [](int c) { return -c; });
  return Root(std::move(out));
}

Root operator+(const Root& a, const Root& b) {
  Coords out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return Root(std::move(out));
}

std::string to_string(const Root& r) {
  std::string out = "(";
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(r[i]);
  }
  return out + ")";
}

// ---------------------------------------------------------------------------
// Cartan data

std::size_t classical_root_count(char type_letter, int rank) {
  const char t = static_cast<char>(std::toupper(static_cast<unsigned char>(type_letter)));
  const auto n = static_cast<std::size_t>(rank);
  switch (t) {
    case 'A':
      if (rank >= 1) return n * (n + 1);
      break;
    case 'B':
    case 'C':
      if (rank >= 2) return 2 * n * n;
      break;
    case 'D':
      if (rank >= 4) return 2 * n * (n - 1);
      break;
    case 'E':
      if (rank == 6) return 72;
      if (rank == 7) return 126;
      if (rank == 8) return 240;
      break;
    case 'F':
      if (rank == 4) return 48;
      break;
    case 'G':
      if (rank == 2) return 12;
      break;
    default:
      break;
  }
  throw InvalidArgument(std::string("no irreducible root system of type ") + type_letter + std::to_string(rank));
}

namespace {

// Gram matrix (α_i, α_j) with short roots of squared length 2.
std::vector<std::vector<int>> reference_gram(char t, int n) {
  std::vector<std::vector<int>> g(n, std::vector<int>(n, 0));
  auto link = [&](int i, int j, int v) { g[i][j] = g[j][i] = v; };
  switch (t) {
    case 'A':
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case 'B':  // α_n short
      for (int i = 0; i < n; ++i) g[i][i] = (i == n - 1) ? 2 : 4;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -2);
      break;
    case 'C':  // α_n long
      for (int i = 0; i < n; ++i) g[i][i] = (i == n - 1) ? 4 : 2;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, (i + 1 == n - 1) ? -2 : -1);
      break;
    case 'D':
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      link(n - 3, n - 1, -1);
      break;
    case 'E':  // Bourbaki: 1-3-4-5-6-7-8 with 2 attached to 4
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      link(0, 2, -1);
      link(1, 3, -1);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case 'F':  // α₁, α₂ long
      g[0][0] = g[1][1] = 4;
      g[2][2] = g[3][3] = 2;
      link(0, 1, -2);
      link(1, 2, -2);
      link(2, 3, -1);
      break;
    case 'G':  // α₁ short, α₂ long
      g[0][0] = 2;
      g[1][1] = 6;
      link(0, 1, -3);
      break;
    default:
      break;
  }
  return g;
}

char normalize_letter(char type_letter) {
  return static_cast<char>(std::toupper(static_cast<unsigned char>(type_letter)));
}

}  // namespace

CartanMatrix cartan_matrix(char type_letter, int rank) {
  const char t = normalize_letter(type_letter);
  classical_root_count(t, rank);  // validates the pair
  if (rank > kMaxRank) throw InvalidArgument("rank " + std::to_string(rank) + " exceeds cap " + std::to_string(kMaxRank));
  const auto g = reference_gram(t, rank);
  CartanMatrix c(rank, std::vector<int>(rank));
  for (int i = 0; i < rank; ++i) {
    for (int j = 0; j < rank; ++j) c[i][j] = 2 * g[i][j] / g[i][i];
  }
  return c;
}

// ---------------------------------------------------------------------------
// RootSystem

std::string RootSystem::name() const { return std::string(1, letter_) + std::to_string(rank_); }

std::vector<Root> RootSystem::positive() const {
  return {roots_.begin(), roots_.begin() + static_cast<std::ptrdiff_t>(positive_count())};
}

std::vector<Root> RootSystem::simple_roots() const {
  return {roots_.begin(), roots_.begin() + rank_};
}

std::optional<std::size_t> RootSystem::index_of(const Coords& v) const {
  auto it = index_.find(v);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t RootSystem::index_of(const Root& r) const {
  auto it = index_.find(r.coords());
  if (it == index_.end()) throw InvalidArgument("not a root of " + name() + ": " + to_string(r));
  return it->second;
}

std::size_t RootSystem::negation(std::size_t index) const {
  const std::size_t p = positive_count();
  return index < p ? index + p : index - p;
}

long RootSystem::form(const Coords& a, const Coords& b) const {
  long out = 0;
  for (int i = 0; i < rank_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < rank_; ++j) out += static_cast<long>(a[i]) * gram_[i][j] * b[j];
  }
  return out;
}

int RootSystem::coroot_pairing(const Coords& v, std::size_t i) const {
  int out = 0;
  for (int j = 0; j < rank_; ++j) out += v[j] * cartan_[i][j];
  return out;
}

RootSet RootSystem::make_set(const std::vector<Root>& members) const {
  RootSet out = empty_set();
  for (const auto& r : members) out.set(index_of(r));
  return out;
}

std::vector<Root> RootSystem::members(const RootSet& set) const {
  std::vector<Root> out;
  for (auto k = set.find_first(); k != RootSet::npos; k = set.find_next(k)) out.push_back(roots_[k]);
  return out;
}

RootSet RootSystem::negate(const RootSet& set) const {
  RootSet out = empty_set();
  for (auto k = set.find_first(); k != RootSet::npos; k = set.find_next(k)) out.set(negation(k));
  return out;
}

RootSystem build_root_system_from_cartan(char label, const CartanMatrix& cartan, std::size_t max_roots) {
  const std::size_t n = cartan.size();
  if (n == 0) throw InvalidArgument("empty Cartan matrix");
  for (const auto& row : cartan) {
    if (row.size() != n) throw InvalidArgument("Cartan matrix is not square");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (cartan[i][i] != 2) throw InvalidArgument("Cartan diagonal must be 2");
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && (cartan[i][j] > 0 || (cartan[i][j] == 0) != (cartan[j][i] == 0))) {
        throw InvalidArgument("Cartan matrix violates the sign or zero pattern");
      }
    }
  }

  // Symmetrizer by propagation along the Dynkin graph: d_i a_ij = d_j a_ji.
  std::vector<Rational> d(n, Rational(0));
  d[0] = 1;
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t i = queue.front();
    queue.pop_front();
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || cartan[i][j] == 0) continue;
      Rational dj = d[i] * cartan[i][j] / cartan[j][i];
      if (d[j] == 0) {
        d[j] = dj;
        queue.push_back(j);
      } else if (d[j] != dj) {
        throw InvalidArgument("Cartan matrix is not symmetrizable");
      }
    }
  }
  if (std::any_of(d.begin(), d.end(), [](const Rational& x) { return x == 0; })) {
    throw InvalidArgument("Dynkin diagram is disconnected; system is not irreducible");
  }
  const Rational dmin = *std::min_element(d.begin(), d.end());
  std::vector<int> sym(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational v = d[i] / dmin;
    if (!is_integer(v)) throw InvalidArgument("root length ratio is not integral");
    sym[i] = static_cast<int>(to_int64(v));
  }

  RootSystem rs;
  rs.letter_ = normalize_letter(label);
  rs.rank_ = static_cast<int>(n);
  rs.cartan_ = cartan;
  rs.symmetrizer_ = sym;
  rs.gram_.assign(n, std::vector<long>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) rs.gram_[i][j] = static_cast<long>(sym[i]) * cartan[i][j];
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (rs.gram_[i][j] != rs.gram_[j][i]) throw InvalidArgument("symmetrized Cartan matrix is not symmetric");
    }
  }
  // Sylvester's criterion on the Gram matrix.
  for (std::size_t k = 1; k <= n; ++k) {
    linalg::Matrix minor(k, RationalVector(k));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) minor[i][j] = Rational(rs.gram_[i][j]);
    }
    linalg::Matrix& m = minor;
    Rational det = 1;
    for (std::size_t c = 0; c < k; ++c) {
      std::size_t p = c;
      while (p < k && m[p][c] == 0) ++p;
      if (p == k) {
        det = 0;
        break;
      }
      if (p != c) {
        std::swap(m[p], m[c]);
        det = -det;
      }
      det *= m[c][c];
      for (std::size_t r = c + 1; r < k; ++r) {
        const Rational f = m[r][c] / m[c][c];
        for (std::size_t q = c; q < k; ++q) m[r][q] -= f * m[c][q];
      }
    }
    if (det <= 0) throw InvalidArgument("invariant form is not positive definite");
  }

  // Positive roots level by level via α-strings: β + α_i ∈ Φ iff p − <β,α_i^∨> > 0.
  std::set<Coords> known;
  std::vector<std::vector<Coords>> levels(1);
  for (std::size_t i = 0; i < n; ++i) {
    Coords e(n, 0);
    e[i] = 1;
    levels[0].push_back(e);
    known.insert(e);
  }
  while (!levels.back().empty()) {
    std::set<Coords> next;
    for (const auto& beta : levels.back()) {
      for (std::size_t i = 0; i < n; ++i) {
        int p = 0;
        Coords down = beta;
        while (true) {
          down[i] -= 1;
          if (!known.count(down)) break;
          ++p;
        }
        const int q = p - rs.coroot_pairing(beta, i);
        if (q > 0) {
          Coords up = beta;
          up[i] += 1;
          next.insert(up);
        }
      }
    }
    for (const auto& c : next) known.insert(c);
    if (2 * known.size() > max_roots) {
      throw ResourceLimit("root closure exceeded " + std::to_string(max_roots) + " roots");
    }
    levels.emplace_back(next.begin(), next.end());
  }

  std::vector<Coords> pos(known.begin(), known.end());
  std::sort(pos.begin(), pos.end(), [](const Coords& a, const Coords& b) {
    const int ha = std::accumulate(a.begin(), a.end(), 0);
    const int hb = std::accumulate(b.begin(), b.end(), 0);
    if (ha != hb) return ha < hb;
    return a > b;
  });
  // The highest root must be the unique root of maximal height.
  if (pos.size() >= 2) {
    const int top = std::accumulate(pos.back().begin(), pos.back().end(), 0);
    const auto& prev = pos[pos.size() - 2];
    if (std::accumulate(prev.begin(), prev.end(), 0) == top) {
      throw InvalidArgument("no unique highest root; system is not irreducible");
    }
  }
  for (const auto& c : pos) rs.roots_.emplace_back(c);
  for (const auto& c : pos) rs.roots_.push_back(-Root(c));
  for (std::size_t k = 0; k < rs.roots_.size(); ++k) rs.index_[rs.roots_[k].coords()] = k;

  const std::size_t total = rs.roots_.size();
  rs.reflections_.assign(n, std::vector<std::size_t>(total));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < total; ++k) {
      Coords v = rs.roots_[k].coords();
      v[i] -= rs.coroot_pairing(v, i);
      auto idx = rs.index_of(v);
      if (!idx) throw InvalidArgument("root set is not reflection invariant");
      rs.reflections_[i][k] = *idx;
    }
  }
  rs.sums_.assign(total * total, -1);
  for (std::size_t a = 0; a < total; ++a) {
    for (std::size_t b = 0; b < total; ++b) {
      Coords v(n);
      for (std::size_t i = 0; i < n; ++i) v[i] = rs.roots_[a][i] + rs.roots_[b][i];
      if (auto idx = rs.index_of(v)) rs.sums_[a * total + b] = static_cast<std::ptrdiff_t>(*idx);
    }
  }
  return rs;
}

RootSystem build_root_system(char type_letter, int rank) {
  const char t = normalize_letter(type_letter);
  const std::size_t expected = classical_root_count(t, rank);
  RootSystem rs = build_root_system_from_cartan(t, cartan_matrix(t, rank));
  if (rs.size() != expected) {
    throw InvalidArgument(rs.name() + " closure produced " + std::to_string(rs.size()) + " roots, expected " +
                          std::to_string(expected));
  }
  return rs;
}

RootSystem build_root_system(const std::string& type_and_rank) {
  if (type_and_rank.size() < 2 || !std::isalpha(static_cast<unsigned char>(type_and_rank[0]))) {
    throw InvalidArgument("expected a type such as A2, got '" + type_and_rank + "'");
  }
  const std::string digits = type_and_rank.substr(1);
  if (!std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw InvalidArgument("expected a type such as A2, got '" + type_and_rank + "'");
  }
  return build_root_system(type_and_rank[0], std::stoi(digits));
}

bool is_root(const RootSystem& rs, const Coords& v) {
  if (v.size() != static_cast<std::size_t>(rs.rank())) throw InvalidArgument("vector length differs from rank");
  return rs.index_of(v).has_value();
}

Rational inner_product(const RootSystem& rs, const Root& a, const Root& b) {
  return Rational(rs.form(a.coords(), b.coords()));
}

// ---------------------------------------------------------------------------
// Bases

bool Base::contains(const Root& r) const { return std::find(simples.begin(), simples.end(), r) != simples.end(); }

Base reference_base(const RootSystem& rs) { return Base{rs.simple_roots()}; }

BaseCoordinates::BaseCoordinates(const RootSystem& rs, const Base& base) : rs_(&rs) {
  const auto n = static_cast<std::size_t>(rs.rank());
  if (base.simples.size() != n) throw InvalidArgument("base has the wrong number of simple roots");
  linalg::Matrix m(n, RationalVector(n));
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t r = 0; r < n; ++r) m[r][c] = base.simples[c][r];
  }
  auto inv = linalg::inverse(m);
  if (!inv) throw InvalidArgument("simple roots are linearly dependent");
  inverse_ = std::move(*inv);
  all_.reserve(rs.size());
  for (const auto& r : rs.roots()) all_.push_back(coords(r));
}

Coords BaseCoordinates::coords(const Root& r) const {
  const std::size_t n = r.size();
  Coords out(n);
  bool pos = false;
  bool neg = false;
  for (std::size_t i = 0; i < n; ++i) {
    Rational v = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (r[j] != 0) v += inverse_[i][j] * r[j];
    }
    if (!is_integer(v)) throw InvalidArgument("not a base: non-integral coordinates for " + to_string(r));
    out[i] = static_cast<int>(to_int64(v));
    pos |= out[i] > 0;
    neg |= out[i] < 0;
  }
  if (pos && neg) throw InvalidArgument("not a base: mixed-sign coordinates for " + to_string(r));
  return out;
}

RootSet BaseCoordinates::positive() const {
  RootSet out = rs_->empty_set();
  for (std::size_t k = 0; k < all_.size(); ++k) {
    if (std::all_of(all_[k].begin(), all_[k].end(), [](int c) { return c >= 0; })) out.set(k);
  }
  return out;
}

RootSet BaseCoordinates::negative() const { return rs_->negate(positive()); }

Root BaseCoordinates::highest() const {
  std::size_t best = 0;
  int best_height = -1;
  for (std::size_t k = 0; k < all_.size(); ++k) {
    const int h = std::accumulate(all_[k].begin(), all_[k].end(), 0);
    if (h > best_height) {
      best_height = h;
      best = k;
    }
  }
  return rs_->roots()[best];
}

std::vector<Base> enumerate_bases(const RootSystem& rs, std::size_t max_bases) {
  using Tuple = std::vector<std::size_t>;
  const auto n = static_cast<std::size_t>(rs.rank());
  Tuple start(n);
  std::iota(start.begin(), start.end(), 0);
  std::set<Tuple> seen{start};
  std::vector<Tuple> order{start};
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (std::size_t j = 0; j < n; ++j) {
      Tuple next(n);
      for (std::size_t i = 0; i < n; ++i) next[i] = rs.reflect(j, order[head][i]);
      if (seen.insert(next).second) {
        if (order.size() >= max_bases) {
          throw ResourceLimit("Weyl group of " + rs.name() + " exceeds the configured limit of " +
                              std::to_string(max_bases) + " bases");
        }
        order.push_back(std::move(next));
      }
    }
  }
  std::vector<Base> out;
  out.reserve(order.size());
  for (const auto& t : order) {
    Base b;
    for (auto k : t) b.simples.push_back(rs.roots()[k]);
    out.push_back(std::move(b));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Convexity and ideals

std::optional<Root> convexity_witness(const RootSystem& rs, const RootSet& T) {
  std::vector<RationalVector> gens;
  for (auto k = T.find_first(); k != RootSet::npos; k = T.find_next(k)) {
    const auto& c = rs.roots()[k].coords();
    gens.emplace_back(c.begin(), c.end());
  }
  if (gens.empty()) return std::nullopt;
  for (std::size_t k = 0; k < rs.size(); ++k) {
    if (T.test(k)) continue;
    const auto& c = rs.roots()[k].coords();
    if (linalg::cone_combination(gens, RationalVector(c.begin(), c.end()))) return rs.roots()[k];
  }
  return std::nullopt;
}

bool is_convex(const RootSystem& rs, const RootSet& T) { return !convexity_witness(rs, T).has_value(); }

bool is_ideal(const RootSystem& rs, const RootSet& X, const RootSet& Xp) {
  for (auto a = X.find_first(); a != RootSet::npos; a = X.find_next(a)) {
    for (auto b = Xp.find_first(); b != RootSet::npos; b = Xp.find_next(b)) {
      const auto s = rs.sum_index(a, b);
      if (s >= 0 && !X.test(static_cast<std::size_t>(s))) return false;
    }
  }
  return true;
}

RootSet ideal_closure(const RootSystem& rs, const RootSet& generators, const RootSet& ambient) {
  RootSet out = generators;
  bool grew = true;
  while (grew) {
    grew = false;
    for (auto a = out.find_first(); a != RootSet::npos; a = out.find_next(a)) {
      for (auto b = ambient.find_first(); b != RootSet::npos; b = ambient.find_next(b)) {
        const auto s = rs.sum_index(a, b);
        if (s >= 0 && !out.test(static_cast<std::size_t>(s))) {
          out.set(static_cast<std::size_t>(s));
          grew = true;
        }
      }
    }
  }
  return out;
}

namespace {

std::size_t position_in_base(const Base& base, const Root& alpha) {
  auto it = std::find(base.simples.begin(), base.simples.end(), alpha);
  if (it == base.simples.end()) throw InvalidArgument("root " + to_string(alpha) + " is not simple in the given base");
  return static_cast<std::size_t>(it - base.simples.begin());
}

RootSet negative_coordinate_set(const RootSystem& rs, const BaseCoordinates& bc, std::size_t p) {
  RootSet out = rs.empty_set();
  const auto& all = bc.all();
  for (std::size_t k = 0; k < all.size(); ++k) {
    if (all[k][p] < 0) out.set(k);
  }
  return out;
}

}  // namespace

RootSet minus_alpha_ideal(const RootSystem& rs, const Base& base, const Root& alpha) {
  const std::size_t p = position_in_base(base, alpha);
  return negative_coordinate_set(rs, BaseCoordinates(rs, base), p);
}

std::vector<Root> chain_to_highest_root(const RootSystem& rs, const Base& base, const Root& alpha) {
  position_in_base(base, alpha);
  const Root top = BaseCoordinates(rs, base).highest();
  std::vector<Root> chain{alpha};
  while (chain.back() != top) {
    bool stepped = false;
    for (const auto& s : base.simples) {
      Root next = chain.back() + s;
      if (rs.index_of(next.coords())) {
        chain.push_back(std::move(next));
        stepped = true;
        break;
      }
    }
    if (!stepped) throw Error("chain search stalled below the highest root at " + to_string(chain.back()));
  }
  return chain;
}

GammaReport verify_gamma_lemma(const RootSystem& rs, std::size_t max_bases) {
  GammaReport report;
  const auto bases = enumerate_bases(rs, max_bases);
  report.bases = bases.size();
  for (const auto& base : bases) {
    const BaseCoordinates bc(rs, base);
    for (std::size_t p = 0; p < base.simples.size(); ++p) {
      const RootSet ideal = negative_coordinate_set(rs, bc, p);
      const RootSet excluded = ideal | rs.negate(ideal);
      for (std::size_t beta = 0; beta < rs.size(); ++beta) {
        if (excluded.test(beta)) continue;
        ++report.checks;
        bool found = false;
        for (auto gamma = ideal.find_first(); gamma != RootSet::npos && !found; gamma = ideal.find_next(gamma)) {
          const auto s = rs.sum_index(beta, gamma);
          found = s >= 0 && ideal.test(static_cast<std::size_t>(s));
        }
        if (!found) {
          report.pass = false;
          report.counterexample = GammaCounterexample{base, base.simples[p], rs.roots()[beta]};
          return report;
        }
      }
    }
  }
  return report;
}

}  // namespace weightlab::rootsys
