#include "weightlab/shadow.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <thread>

namespace weightlab::shadow {

using rootsys::BaseCoordinates;

TNPartition::TNPartition(const RootSystem& rs, const RootSet& T) : rs_(&rs), t_(T) {
  if (T.size() != rs.size()) throw InvalidArgument("root set does not match the root system");
  n_ = ~t_;
  ts_ = t_ & rs.negate(t_);
  ta_ = t_ - ts_;
  ns_ = n_ & rs.negate(n_);
  na_ = n_ - ns_;
}

TNPartition make_partition(const RootSystem& rs, const RootSet& T) {
  if (T.size() != rs.size()) throw InvalidArgument("root set does not match the root system");
  if (auto w = rootsys::convexity_witness(rs, T)) {
    throw NonConvexError("T is not convex: " + rootsys::to_string(*w) + " lies in its cone", *w);
  }
  return TNPartition(rs, T);
}

TNPartition partition_of_convex(const RootSystem& rs, const RootSet& T) { return TNPartition(rs, T); }

bool is_root_subsystem(const RootSystem& rs, const RootSet& X) {
  return X == rs.negate(X) && rootsys::is_ideal(rs, X, X);
}

namespace {

struct BaseEntry {
  Base base;
  RootSet positive;
  RootSet negative;
  std::vector<rootsys::Coords> coords;
};

std::vector<BaseEntry> tabulate(const RootSystem& rs, const std::vector<Base>& bases) {
  std::vector<BaseEntry> out;
  out.reserve(bases.size());
  for (const auto& b : bases) {
    BaseCoordinates bc(rs, b);
    out.push_back({b, bc.positive(), bc.negative(), bc.all()});
  }
  return out;
}

BblReport bbl_report(const TNPartition& p, const BaseEntry& e) {
  const RootSystem& rs = p.system();
  BblReport r;
  r.t_s_subsystem = is_root_subsystem(rs, p.T_s());
  r.n_s_subsystem = is_root_subsystem(rs, p.N_s());
  r.n_a_ideal_of_positive = p.N_a().is_subset_of(e.positive) && rootsys::is_ideal(rs, p.N_a(), e.positive);
  r.t_a_ideal_of_negative = p.T_a().is_subset_of(e.negative) && rootsys::is_ideal(rs, p.T_a(), e.negative);
  std::vector<bool> in_ts(e.base.simples.size());
  for (std::size_t i = 0; i < in_ts.size(); ++i) in_ts[i] = p.T_s().test(rs.index_of(e.base.simples[i]));
  r.base_of_t_s = true;
  for (auto k = p.T_s().find_first(); k != RootSet::npos && r.base_of_t_s; k = p.T_s().find_next(k)) {
    for (std::size_t i = 0; i < in_ts.size(); ++i) {
      if (e.coords[k][i] != 0 && !in_ts[i]) {
        r.base_of_t_s = false;
        break;
      }
    }
  }
  return r;
}

bool filters(const TNPartition& p, const std::vector<BaseEntry>& table) {
  const RootSystem& rs = p.system();
  if (!is_root_subsystem(rs, p.T_s()) || !is_root_subsystem(rs, p.N_s())) return false;
  bool any = false;
  for (const auto& e : table) {
    if (!p.N_a().is_subset_of(e.positive)) continue;
    any = true;
    if (!bbl_report(p, e).all()) return false;
  }
  return any;
}

}  // namespace

std::optional<Base> find_positive_base(const TNPartition& p, const std::vector<Base>& bases) {
  for (const auto& b : bases) {
    if (p.N_a().is_subset_of(BaseCoordinates(p.system(), b).positive())) return b;
  }
  return std::nullopt;
}

std::optional<Base> find_positive_base(const TNPartition& p) {
  return find_positive_base(p, rootsys::enumerate_bases(p.system()));
}

BblReport check_bbl_properties(const TNPartition& p, const Base& base) {
  BaseCoordinates bc(p.system(), base);
  return bbl_report(p, BaseEntry{base, bc.positive(), bc.negative(), bc.all()});
}

std::optional<SumWitness> verify_sum_not_root(const TNPartition& p) {
  const RootSystem& rs = p.system();
  for (auto a = p.N_s().find_first(); a != RootSet::npos; a = p.N_s().find_next(a)) {
    for (auto b = p.T_s().find_first(); b != RootSet::npos; b = p.T_s().find_next(b)) {
      if (rs.sum_index(a, b) >= 0) return SumWitness{rs.roots()[a], rs.roots()[b]};
    }
  }
  return std::nullopt;
}

bool passes_filters(const TNPartition& p, const std::vector<Base>& bases) {
  return filters(p, tabulate(p.system(), bases));
}

std::string EnumerationSummary::summary_line() const {
  std::ostringstream os;
  os << "total=" << total << ", filtered=" << filtered << ", counterexamples=" << counterexamples;
  return os.str();
}

// ---------------------------------------------------------------------------
// Convexity certificates

ConvexityTable::ConvexityTable(const RootSystem& rs) {
  const std::size_t m = rs.size();
  if (m > 32) throw ResourceLimit("convexity table supports at most 32 roots");
  const auto n = static_cast<std::size_t>(rs.rank());
  certificates_.resize(m);
  for (std::size_t rho = 0; rho < m; ++rho) {
    const auto& target_coords = rs.roots()[rho].coords();
    const RationalVector target(target_coords.begin(), target_coords.end());
    std::vector<std::uint32_t> found;
    // Subsets of size ≤ rank, smallest first, so minimal certificates are met first.
    std::vector<std::size_t> pick;
    for (std::size_t k = 1; k <= n; ++k) {
      pick.assign(k, 0);
      for (std::size_t i = 0; i < k; ++i) pick[i] = i;
      while (true) {
        std::uint32_t mask = 0;
        bool skip = false;
        for (auto i : pick) {
          if (i == rho) skip = true;
          mask |= std::uint32_t{1} << i;
        }
        if (!skip && std::none_of(found.begin(), found.end(), [&](std::uint32_t f) { return (f & ~mask) == 0; })) {
          linalg::Matrix a(n, RationalVector(k));
          for (std::size_t c = 0; c < k; ++c) {
            for (std::size_t r = 0; r < n; ++r) a[r][c] = rs.roots()[pick[c]][r];
          }
          if (linalg::rank(a) == k) {
            if (auto x = linalg::solve(a, target)) {
              if (std::all_of(x->begin(), x->end(), [](const Rational& v) { return v > 0; })) found.push_back(mask);
            }
          }
        }
        // next k-combination of {0..m-1}
        std::size_t i = k;
        while (i > 0 && pick[i - 1] == m - k + i - 1) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
      }
    }
    certificates_[rho] = std::move(found);
  }
}

bool ConvexityTable::is_convex(std::uint32_t mask) const {
  for (std::size_t rho = 0; rho < certificates_.size(); ++rho) {
    if (mask & (std::uint32_t{1} << rho)) continue;
    for (auto c : certificates_[rho]) {
      if ((c & ~mask) == 0) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

struct Tally {
  EnumerationSummary summary;
  std::uint64_t first_key = ~std::uint64_t{0};
};

void examine(const RootSystem& rs, const RootSet& T, std::uint64_t key, const std::vector<BaseEntry>& table,
             Tally& tally) {
  ++tally.summary.total;
  const TNPartition p = partition_of_convex(rs, T);
  std::string reason;
  if (p.N_a() != rs.negate(p.T_a())) {
    reason = "N_a differs from -T_a";
  } else if (filters(p, table)) {
    ++tally.summary.filtered;
    if (auto w = verify_sum_not_root(p)) {
      reason = "N_s root " + rootsys::to_string(w->alpha) + " plus T_s root " + rootsys::to_string(w->beta) +
               " is a root";
    } else {
      ++tally.summary.verified;
    }
  }
  if (!reason.empty()) {
    ++tally.summary.counterexamples;
    if (key < tally.first_key) {
      tally.first_key = key;
      tally.summary.first_counterexample = PartitionCounterexample{rs.members(T), reason};
    }
  }
}

void merge(Tally& into, const Tally& from) {
  into.summary.subsets += from.summary.subsets;
  into.summary.total += from.summary.total;
  into.summary.filtered += from.summary.filtered;
  into.summary.verified += from.summary.verified;
  into.summary.counterexamples += from.summary.counterexamples;
  if (from.first_key < into.first_key) {
    into.first_key = from.first_key;
    into.summary.first_counterexample = from.summary.first_counterexample;
  }
}

unsigned resolve_threads(unsigned threads) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  return threads;
}

}  // namespace

EnumerationSummary enumerate_and_verify(const RootSystem& rs, unsigned threads, std::size_t max_roots) {
  if (rs.size() > max_roots || rs.size() > 32) {
    throw ResourceLimit(rs.name() + " has " + std::to_string(rs.size()) + " roots; enumeration is capped at " +
                        std::to_string(std::min<std::size_t>(max_roots, 32)));
  }
  const ConvexityTable convex(rs);
  const auto table = tabulate(rs, rootsys::enumerate_bases(rs));
  const std::uint64_t subsets = std::uint64_t{1} << rs.size();
  threads = static_cast<unsigned>(std::min<std::uint64_t>(resolve_threads(threads), subsets));

  std::vector<Tally> partial(threads);
  auto work = [&](unsigned w) {
    Tally& t = partial[w];
    for (std::uint64_t mask = w; mask < subsets; mask += threads) {
      ++t.summary.subsets;
      if (!convex.is_convex(static_cast<std::uint32_t>(mask))) continue;
      examine(rs, RootSet(rs.size(), static_cast<unsigned long>(mask)), mask, table, t);
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
  }
  Tally total;
  for (const auto& t : partial) merge(total, t);
  return total.summary;
}

EnumerationSummary sample_and_verify(const RootSystem& rs, std::size_t samples, std::uint64_t seed) {
  const auto table = tabulate(rs, rootsys::enumerate_bases(rs));
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick_root(0, rs.size() - 1);
  std::uniform_int_distribution<int> pick_size(1, rs.rank() + 1);
  Tally tally;
  for (std::size_t s = 0; s < samples; ++s) {
    ++tally.summary.subsets;
    std::vector<RationalVector> gens;
    RootSet T = rs.empty_set();
    const int size = pick_size(rng);
    for (int i = 0; i < size; ++i) {
      const std::size_t k = pick_root(rng);
      if (T.test(k)) continue;
      T.set(k);
      const auto& c = rs.roots()[k].coords();
      gens.emplace_back(c.begin(), c.end());
    }
    for (std::size_t k = 0; k < rs.size(); ++k) {
      if (T.test(k)) continue;
      const auto& c = rs.roots()[k].coords();
      if (linalg::cone_combination(gens, RationalVector(c.begin(), c.end()))) T.set(k);
    }
    examine(rs, T, s, table, tally);
  }
  return tally.summary;
}

}  // namespace weightlab::shadow
