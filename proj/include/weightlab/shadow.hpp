#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "weightlab/rootsys.hpp"

namespace weightlab::shadow {

using rootsys::Base;
using rootsys::Root;
using rootsys::RootSet;
using rootsys::RootSystem;

/// Raised by make_partition when T is not convex; carries a root of cone(T) ∩ Φ outside T.
class NonConvexError : public InvalidArgument {
public:
  NonConvexError(const std::string& what, Root witness) : InvalidArgument(what), witness_(std::move(witness)) {}
  const Root& witness() const { return witness_; }

private:
  Root witness_;
};

/**
 * Φ = T ∪ N with T ∩ N = ∅ and the derived pieces
 * T_s = T ∩ (−T), T_a = T \ T_s, N_s = N ∩ (−N), N_a = N \ N_s.
 *
 * Borrows the root system, which must outlive the partition.
 */
class TNPartition {
public:
  const RootSystem& system() const { return *rs_; }
  const RootSet& T() const { return t_; }
  const RootSet& N() const { return n_; }
  const RootSet& T_s() const { return ts_; }
  const RootSet& T_a() const { return ta_; }
  const RootSet& N_s() const { return ns_; }
  const RootSet& N_a() const { return na_; }

private:
  friend TNPartition make_partition(const RootSystem&, const RootSet&);
  friend TNPartition partition_of_convex(const RootSystem&, const RootSet&);
  TNPartition(const RootSystem& rs, const RootSet& T);

  const RootSystem* rs_;
  RootSet t_, n_, ts_, ta_, ns_, na_;
};

/// Builds the partition with N = Φ \ T. Throws NonConvexError if T is not convex.
TNPartition make_partition(const RootSystem& rs, const RootSet& T);

/// Same as make_partition for a T already known to be convex; no cone test is run.
TNPartition partition_of_convex(const RootSystem& rs, const RootSet& T);

/// First base in enumerate_bases order with N_a ⊆ Φ_B⁺.
std::optional<Base> find_positive_base(const TNPartition& p);
std::optional<Base> find_positive_base(const TNPartition& p, const std::vector<Base>& bases);

struct BblReport {
  bool t_s_subsystem = false;  // closed under negation and root addition
  bool n_s_subsystem = false;
  bool n_a_ideal_of_positive = false;
  bool t_a_ideal_of_negative = false;
  bool base_of_t_s = false;  // B ∩ T_s is a base of T_s

  bool all() const {
    return t_s_subsystem && n_s_subsystem && n_a_ideal_of_positive && t_a_ideal_of_negative && base_of_t_s;
  }
};

/// True iff X = −X and α, β ∈ X with α + β ∈ Φ imply α + β ∈ X.
bool is_root_subsystem(const RootSystem& rs, const RootSet& X);

BblReport check_bbl_properties(const TNPartition& p, const Base& base);

struct SumWitness {
  Root alpha;  // in N_s
  Root beta;   // in T_s
};

/// Checks α + β ∉ Φ for all α ∈ N_s, β ∈ T_s; returns the first offending pair.
std::optional<SumWitness> verify_sum_not_root(const TNPartition& p);

/**
 * Whether a partition satisfies every hypothesis the sum lemma is stated
 * under: T_s and N_s are root subsystems, some base has N_a ⊆ Φ_B⁺, and
 * every such base passes the ideal and sub-base conditions.
 */
bool passes_filters(const TNPartition& p, const std::vector<Base>& bases);

struct PartitionCounterexample {
  std::vector<Root> T;
  std::string reason;
};

struct EnumerationSummary {
  std::size_t subsets = 0;   // subsets of Φ examined
  std::size_t total = 0;     // convex T among them
  std::size_t filtered = 0;  // partitions passing every hypothesis
  std::size_t verified = 0;  // filtered partitions satisfying the lemma
  std::size_t counterexamples = 0;
  std::optional<PartitionCounterexample> first_counterexample;

  bool pass() const { return counterexamples == 0; }
  /// "total=…, filtered=…, counterexamples=…"
  std::string summary_line() const;
};

/// Largest |Φ| accepted by enumerate_and_verify (2^|Φ| subsets).
inline constexpr std::size_t kMaxEnumerationRoots = 18;

/**
 * Enumerates every convex T ⊆ Φ, keeps the partitions passing the
 * hypotheses, and checks the sum lemma on each. N_a = −T_a is also checked
 * on every convex T; a failure there counts as a counterexample.
 *
 * Work is split over `threads` workers (0 means hardware concurrency);
 * the result does not depend on the thread count.
 */
EnumerationSummary enumerate_and_verify(const RootSystem& rs, unsigned threads = 0,
                                        std::size_t max_roots = kMaxEnumerationRoots);

/**
 * Random variant for systems too large to enumerate: each sample is the
 * convex hull cone(S) ∩ Φ of a random set S of at most rank+1 roots.
 */
EnumerationSummary sample_and_verify(const RootSystem& rs, std::size_t samples, std::uint64_t seed);

/**
 * Convexity of every subset of Φ (|Φ| ≤ 32) as a bitmask predicate, decided
 * from minimal Carathéodory certificates: ρ ∈ cone(T) iff ρ lies in the cone
 * of a linearly independent subset of T.
 */
class ConvexityTable {
public:
  explicit ConvexityTable(const RootSystem& rs);
  bool is_convex(std::uint32_t mask) const;

private:
  std::vector<std::vector<std::uint32_t>> certificates_;
};

}  // namespace weightlab::shadow
