#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gluecat/error.hpp"

namespace gluecat {

/// Finite poset over named elements. The relation is stored as the full
/// reflexive-transitive closure, so every leq query is a table lookup.
class Poset {
 public:
  Poset() = default;

  /// Builds a poset from generating pairs; the closure is computed here and
  /// antisymmetry violations are rejected (CycleDetected).
  static Poset validate(std::vector<std::string> elements,
                        const std::vector<std::pair<std::string, std::string>>& pairs);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int e) const { return names_[static_cast<size_t>(e)]; }
  const std::vector<std::string>& names() const { return names_; }

  /// Index of a named element; throws UnknownElement.
  int index(std::string_view name) const;
  std::optional<int> find(std::string_view name) const;

  bool leq(int a, int b) const { return leq_[static_cast<size_t>(a * size() + b)] != 0; }
  bool lt(int a, int b) const { return a != b && leq(a, b); }

  /// Hasse covering relation (a covered by b).
  std::vector<std::pair<int, int>> covers() const;

  std::vector<int> elements_leq(int x) const;    // P_{/x}
  std::vector<int> elements_geq(int x) const;    // P_{x/}
  std::vector<int> minimal_elements() const;
  std::vector<int> maximal_elements() const;

  std::optional<int> meet(int x, int y) const;   // greatest lower bound
  std::optional<int> join(int x, int y) const;   // least upper bound

  bool is_lattice() const;
  bool is_distributive_lattice() const;

  /// Full sub-poset on the given elements; names are preserved.
  Poset restrict_to(const std::vector<int>& elems) const;

  /// Product poset; element names are "(a,b)" built from factor names.
  static Poset product(const Poset& p, const Poset& q,
                       std::vector<std::pair<int, int>>* coords = nullptr);

  bool operator==(const Poset& other) const {
    return names_ == other.names_ && leq_ == other.leq_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<char> leq_;  // row-major size x size closure matrix
};

using PosetPtr = std::shared_ptr<const Poset>;

/// Chain poset 0 < 1 < ... < n with names "0".."n".
Poset chain_poset(int n);

/// Grid poset [n] x [n] with product order; element (i,j) is named "(i,j)".
Poset grid_poset(int n);
int grid_index(int n, int row, int col);

struct LatticeOpsResult {
  std::optional<int> meet;
  std::optional<int> join;
  bool distributive_witness = false;
};

/// Meet/join of x,y; when `check_distributivity`, also reports whether the
/// distributive law holds over every triple of P.
LatticeOpsResult lattice_ops(const Poset& p, int x, int y, bool check_distributivity = false);

/// Sub-poset {z : x <= z <= y}; empty when x is not below y.
Poset interval(const Poset& p, int x, int y);
std::vector<int> interval_elements(const Poset& p, int x, int y);

/// A square a <= b, a <= c, b <= d, c <= d in a poset.
struct PosetSquare {
  int a, b, c, d;
};

/// True iff the square is simultaneously a pullback (a is the universal
/// lower bound of b,c) and a pushout (d is the universal upper bound).
bool is_exact_square(const Poset& p, const PosetSquare& sq);

// ---------------------------------------------------------------------------
// Up-sets

/// An up-closed subset of a base poset, stored as a bitmask (base size <= 64).
struct UpSet {
  PosetPtr base;
  std::uint64_t mask = 0;

  bool contains(int e) const { return (mask >> e) & 1u; }
  int count() const;
  std::vector<int> members() const;
  bool empty() const { return mask == 0; }
};

bool is_up_closed(const Poset& p, std::uint64_t mask);
std::uint64_t principal_up_set(const Poset& p, int e);  // P_{e/}

/// The poset of up-sets of `base` ordered by inverse inclusion, together with
/// the embedding p -> P_{p/}. By default only non-empty up-sets are kept;
/// `include_empty` adds the empty up-set as the top element.
struct UpSetLattice {
  PosetPtr base;
  Poset lattice;                      // elements are up-sets, inverse inclusion
  std::vector<std::uint64_t> mask_of; // lattice index -> member mask
  std::vector<int> embed;             // base element -> lattice index of P_{p/}

  int index_of_mask(std::uint64_t mask) const;  // throws UnknownElement
  std::optional<int> find_mask(std::uint64_t mask) const;
  int meet(int x, int y) const { return index_of_mask(mask_of[static_cast<size_t>(x)] | mask_of[static_cast<size_t>(y)]); }
  std::optional<int> join(int x, int y) const;
};

UpSetLattice upset_lattice(const Poset& p, bool include_empty = false, int size_budget = 20);

/// Canonical display name of an up-set: "b<i><j>"-style principal names come
/// from the base element names; non-principal sets are meets of principals
/// over their minimal elements, e.g. "s(0,1)^s(1,0)".
std::string upset_name(const Poset& base, std::uint64_t mask);

// ---------------------------------------------------------------------------
// Exact-pullback factorization

struct FactorStep {
  int removed;                 // x_j, the element removed at this step
  std::uint64_t q_before;      // Q_j
  std::uint64_t q_after;       // Q_{j+1}
  std::uint64_t principal;     // P_{x_j/}
  std::uint64_t principal_minus;  // P_{x_j/} - {x_j}; may be empty
};

/// Factors Q -> Q' in U(P) (Q >= Q' as sets) into single-element removals,
/// each of which is an exact pullback of a principal up-set morphism. The
/// element removed at each step is the lexicographically least member of
/// Q - Q' that is minimal in Q.
std::vector<FactorStep> factor_exact_pullbacks(const Poset& base, std::uint64_t q,
                                               std::uint64_t q_prime);

}  // namespace gluecat
