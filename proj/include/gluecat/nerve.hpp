#pragma once

#include <set>
#include <vector>

#include "gluecat/poset.hpp"

namespace gluecat {

/// A non-degenerate simplex of N(P): a strictly increasing chain of elements.
using Chain = std::vector<int>;

/// A face-closed set of chains in a poset, i.e. a simplicial subset of the
/// nerve N(P). Degenerate simplices are never stored.
class SubNerve {
 public:
  SubNerve() = default;
  explicit SubNerve(PosetPtr base) : base_(std::move(base)) {}

  /// Builds from arbitrary chains, inserting all faces.
  static SubNerve from_chains(PosetPtr base, const std::vector<Chain>& chains);

  const PosetPtr& base() const { return base_; }
  const std::set<Chain>& chains() const { return chains_; }
  bool contains(const Chain& c) const { return chains_.count(c) > 0; }
  bool empty() const { return chains_.empty(); }
  int size() const { return static_cast<int>(chains_.size()); }
  int dimension() const;

  /// Inserts a chain together with all of its faces.
  void insert_closed(const Chain& c);
  /// Inserts a single chain with no closure (caller maintains the invariant).
  void insert_raw(const Chain& c) { check_chain(c); chains_.insert(c); }

  bool face_closed() const;
  bool subcomplex_of(const SubNerve& other) const;
  std::vector<Chain> maximal_chains() const;

  bool operator==(const SubNerve& other) const;

 private:
  void check_chain(const Chain& c) const;

  PosetPtr base_;
  std::set<Chain> chains_;
};

/// All chains of P of length <= dim_cap+1 (dim_cap < 0 means unbounded).
SubNerve nerve(PosetPtr p, int dim_cap = -1, long long chain_budget = 20'000'000);

/// The non-degenerate m-simplices of K.
std::vector<Chain> simplices(const SubNerve& k, int m);

enum class CombineMode { Union, Intersection };
SubNerve combine(const SubNerve& k1, const SubNerve& k2, CombineMode mode);

/// Standard shapes over the chain poset [n].
enum class ShapeKind { Simplex, Boundary, InnerHorn };
SubNerve standard_shape(int n, ShapeKind kind, int horn_k = -1);

/// k-th face of a chain (drop vertex k).
Chain chain_face(const Chain& c, int k);

}  // namespace gluecat
