#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "weightlab/linalg.hpp"
#include "weightlab/rational.hpp"

namespace weightlab::rootsys {

using Coords = std::vector<int>;
using CartanMatrix = std::vector<std::vector<int>>;

/// A root, written in simple-root coordinates of the reference base.
class Root {
public:
  Root() = default;
  explicit Root(Coords coords) : coords_(std::move(coords)) {}

  const Coords& coords() const { return coords_; }
  std::size_t size() const { return coords_.size(); }
  int operator[](std::size_t i) const { return coords_[i]; }

  bool is_positive() const;
  int height() const;

  Root operator-() const;
  friend Root operator+(const Root& a, const Root& b);
  friend Root operator-(const Root& a, const Root& b) { return a + (-b); }

  friend auto operator<=>(const Root&, const Root&) = default;
  friend bool operator==(const Root&, const Root&) = default;

private:
  Coords coords_;
};

std::string to_string(const Root& r);

/// Bitset over the indices of RootSystem::roots().
using RootSet = boost::dynamic_bitset<>;

/**
 * An irreducible reduced root system.
 *
 * Immutable after construction. Positive roots come first, ordered by
 * height with ties in decreasing lexicographic order (so roots()[i] = α_i
 * for i < rank and the highest root is last), followed by their negatives
 * in the same order: the negative of roots()[k] is roots()[k ± |Φ⁺|].
 *
 * Cartan convention: cartan()[i][j] = <α_j, α_i^∨> = 2(α_i,α_j)/(α_i,α_i).
 * The invariant form is normalized so that short roots have (α,α) = 2.
 */
class RootSystem {
public:
  char type_letter() const { return letter_; }
  int rank() const { return rank_; }
  std::string name() const;

  const CartanMatrix& cartan() const { return cartan_; }
  /// d_i = (α_i,α_i)/2, so that diag(d)·cartan is symmetric.
  const std::vector<int>& symmetrizer() const { return symmetrizer_; }

  const std::vector<Root>& roots() const { return roots_; }
  std::size_t size() const { return roots_.size(); }
  std::size_t positive_count() const { return roots_.size() / 2; }
  std::vector<Root> positive() const;
  const Root& highest() const { return roots_[positive_count() - 1]; }
  /// Reference base Δ as roots.
  std::vector<Root> simple_roots() const;

  std::optional<std::size_t> index_of(const Coords& v) const;
  std::size_t index_of(const Root& r) const;
  std::size_t negation(std::size_t index) const;

  /// Integer-valued invariant form on the root lattice.
  long form(const Coords& a, const Coords& b) const;
  /// <v, α_i^∨> for a root-lattice vector v.
  int coroot_pairing(const Coords& v, std::size_t i) const;
  /// Index of s_i(roots()[index]) where s_i is the reflection in the reference simple root α_i.
  std::size_t reflect(std::size_t simple, std::size_t index) const { return reflections_[simple][index]; }
  /// Index of roots()[a] + roots()[b], or -1 when the sum is not a root.
  std::ptrdiff_t sum_index(std::size_t a, std::size_t b) const { return sums_[a * roots_.size() + b]; }

  RootSet empty_set() const { return RootSet(size()); }
  RootSet full_set() const { return RootSet(size()).set(); }
  RootSet make_set(const std::vector<Root>& members) const;
  std::vector<Root> members(const RootSet& set) const;
  RootSet negate(const RootSet& set) const;

private:
  friend RootSystem build_root_system_from_cartan(char, const CartanMatrix&, std::size_t);

  char letter_ = '?';
  int rank_ = 0;
  CartanMatrix cartan_;
  std::vector<int> symmetrizer_;
  std::vector<std::vector<long>> gram_;
  std::vector<Root> roots_;
  std::map<Coords, std::size_t> index_;
  std::vector<std::vector<std::size_t>> reflections_;
  std::vector<std::ptrdiff_t> sums_;
};

/// Number of roots of the irreducible system (type, rank); throws InvalidArgument for an invalid pair.
std::size_t classical_root_count(char type_letter, int rank);

/// Largest rank accepted by build_root_system.
inline constexpr int kMaxRank = 10;

/// Reference Cartan matrix of an irreducible type, Bourbaki numbering (G2: α₁ short).
CartanMatrix cartan_matrix(char type_letter, int rank);

/**
 * Constructs the root system of type (letter, rank) by closure from its
 * Cartan matrix and checks the classical root count.
 */
RootSystem build_root_system(char type_letter, int rank);

/// Parses "A2", "g2", "E8" and builds the system.
RootSystem build_root_system(const std::string& type_and_rank);

/**
 * Root closure from an arbitrary Cartan matrix. Used directly for fault
 * injection; rejects non-symmetrizable matrices, indefinite forms, and
 * closures larger than max_roots.
 */
RootSystem build_root_system_from_cartan(char label, const CartanMatrix& cartan, std::size_t max_roots = 20000);

bool is_root(const RootSystem& rs, const Coords& v);

/// Symmetrized Cartan pairing; short roots have squared length 2.
Rational inner_product(const RootSystem& rs, const Root& a, const Root& b);

/// A base w(Δ); simples[i] is the image of the reference simple root α_i.
struct Base {
  std::vector<Root> simples;

  bool contains(const Root& r) const;
  friend bool operator==(const Base&, const Base&) = default;
};

Base reference_base(const RootSystem& rs);

/// Coordinates of roots in the simple-root basis of a fixed base B.
class BaseCoordinates {
public:
  BaseCoordinates(const RootSystem& rs, const Base& base);

  Coords coords(const Root& r) const;
  /// Coordinates of every root of rs, indexed like rs.roots().
  const std::vector<Coords>& all() const { return all_; }
  RootSet positive() const;
  RootSet negative() const;
  /// Highest root with respect to B.
  Root highest() const;

private:
  const RootSystem* rs_;
  linalg::Matrix inverse_;
  std::vector<Coords> all_;
};

/// Default guard on the Weyl group order for enumerate_bases.
inline constexpr std::size_t kDefaultMaxBases = 60000;

/// All bases w(Δ), w ∈ W, without duplicates; the reference base comes first.
std::vector<Base> enumerate_bases(const RootSystem& rs, std::size_t max_bases = kDefaultMaxBases);

/// Some root outside T that is a nonnegative rational combination of T, or nullopt if T is convex.
std::optional<Root> convexity_witness(const RootSystem& rs, const RootSet& T);

bool is_convex(const RootSystem& rs, const RootSet& T);

/// X ⊆ Xp; true iff α∈X, β∈Xp, α+β∈Φ imply α+β∈X.
bool is_ideal(const RootSystem& rs, const RootSet& X, const RootSet& Xp);

/// Smallest ideal of ambient containing generators.
RootSet ideal_closure(const RootSystem& rs, const RootSet& generators, const RootSet& ambient);

/// ⟨−α⟩ = {τ ∈ Φ | n_α^τ < 0} in coordinates relative to B. Throws if α ∉ B.
RootSet minus_alpha_ideal(const RootSystem& rs, const Base& base, const Root& alpha);

/**
 * α = μ₀ ≺ μ₁ ≺ … ≺ μ_r = θ_B with every step a simple root of B.
 * At each step the first simple root of B (in base order) that keeps the
 * partial sum a root is added, which yields the lexicographically first chain.
 */
std::vector<Root> chain_to_highest_root(const RootSystem& rs, const Base& base, const Root& alpha);

struct GammaCounterexample {
  Base base;
  Root alpha;
  Root beta;
};

struct GammaReport {
  bool pass = true;
  std::size_t bases = 0;
  std::size_t checks = 0;  // (B, α, β) triples examined
  std::optional<GammaCounterexample> counterexample;
};

/**
 * For every base B, simple α ∈ B and β ∈ Φ \ ±⟨−α⟩, searches for
 * γ ∈ ⟨−α⟩ with β + γ ∈ ⟨−α⟩. Stops at the first failure.
 */
GammaReport verify_gamma_lemma(const RootSystem& rs, std::size_t max_bases = kDefaultMaxBases);

}  // namespace weightlab::rootsys
