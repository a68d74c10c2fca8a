#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "gluecat/fincat.hpp"

namespace gluecat {

/// How the unit squares of a grid are constrained: plain commutativity,
/// pullback squares, or squares whose gap morphism is at most i-truncated.
/// Trunc(-2) coincides with Cart.
struct TilingDiscipline {
  enum Kind { Comm, Cart, Trunc } kind = Comm;
  int level = -2;

  static TilingDiscipline comm() { return {Comm, 0}; }
  static TilingDiscipline cart() { return {Cart, -2}; }
  static TilingDiscipline trunc(int i) {
    if (i == -2) return cart();
    return {Trunc, i};
  }
  bool operator==(const TilingDiscipline&) const = default;
};

/// An m-simplex of the grid nerve: a functor from the product poset
/// [m] x [m] into C, stored by its objects and unit arrows. Row arrows
/// (second index moves) are the direction-2 edges, column arrows (first
/// index moves) the direction-1 edges.
class GridSimplex {
 public:
  GridSimplex() = default;
  GridSimplex(FinCategoryPtr cat, int m, std::vector<int> objects, std::vector<int> right,
              std::vector<int> down);

  int dim() const { return m_; }
  const FinCategoryPtr& category() const { return cat_; }
  int object(int r, int c) const { return objects_[static_cast<size_t>(r * (m_ + 1) + c)]; }
  /// Unit arrow (r,c) -> (r,c+1).
  int right(int r, int c) const { return right_[static_cast<size_t>(r * m_ + c)]; }
  /// Unit arrow (r,c) -> (r+1,c).
  int down(int r, int c) const { return down_[static_cast<size_t>(r * (m_ + 1) + c)]; }
  /// Composite arrow (r,c) -> (r2,c2) for r <= r2, c <= c2.
  int arrow(int r, int c, int r2, int c2) const;

  /// Simplicial face: delete row k and column k.
  GridSimplex face(int k) const;

  bool operator==(const GridSimplex&) const = default;

 private:
  FinCategoryPtr cat_;
  int m_ = 0;
  std::vector<int> objects_;  // (m+1) x (m+1)
  std::vector<int> right_;    // (m+1) x m
  std::vector<int> down_;     // m x (m+1)
};

/// Validates functoriality (unit squares commute), edge-class membership of
/// every row/column span, and the tiling discipline on unit squares.
GridSimplex grid_simplex(FinCategoryPtr cat, int m, const std::vector<int>& objects,
                         const std::vector<int>& right, const std::vector<int>& down,
                         const EdgeClass& e1, const EdgeClass& e2,
                         const TilingDiscipline& discipline);

/// Checks classes/tiling of an already-functorial grid; returns the reason a
/// grid fails instead of throwing.
bool grid_valid(const GridSimplex& g, const EdgeClass& e1, const EdgeClass& e2,
                const TilingDiscipline& discipline, std::string* reason = nullptr);

/// The gap morphism of a unit square (rows in E2, columns in E1): pull back
/// the cospan into the bottom-right corner and mediate from the top-left.
/// Returns the truncation level of the gap; -2 iff the square is already a
/// pullback.
TruncationLevel tiling_level(const FinCategory& c, int top_right_down, int bottom_left_right,
                             int top_left_right, int top_left_down, const EdgeClass& e1,
                             const EdgeClass& e2, int cap = 8);

/// All valid grid m-simplices over (C, E1, E2) under the discipline, in
/// canonical enumeration order.
std::vector<GridSimplex> enumerate_grid_simplices(FinCategoryPtr cat, const EdgeClass& e1,
                                                  const EdgeClass& e2, int m,
                                                  const TilingDiscipline& discipline,
                                                  long long budget = 50'000'000);

// ---------------------------------------------------------------------------
// Bisimplicial samples and reshaping

/// A (n1,n2)-shaped assignment into C: a functor from [n1] x [n2].
/// `rev1`/`rev2` record formally reversed directions (partial opposites);
/// a reversed direction stores its unit arrows against the displayed order.
struct BisimplexSample {
  FinCategoryPtr cat;
  int n1 = 0, n2 = 0;
  std::vector<int> objects;  // (n1+1) x (n2+1), row-major
  std::vector<int> right;    // (n1+1) x n2, arrows along direction 2
  std::vector<int> down;     // n1 x (n2+1), arrows along direction 1
  bool rev1 = false, rev2 = false;

  int object(int r, int c) const { return objects[static_cast<size_t>(r * (n2 + 1) + c)]; }
};

BisimplexSample sample_from_grid(const GridSimplex& g);

/// A chain of composable morphisms in C (simplicial data of one direction).
struct ChainInCat {
  FinCategoryPtr cat;
  std::vector<int> objects;
  std::vector<int> arrows;  // objects.size()-1 entries
};

struct ReshapeAction {
  enum Kind { Diagonal, Restrict, PartialOp } kind = Diagonal;
  int direction = 1;            // for Restrict
  std::vector<int> directions;  // for PartialOp
};

using ReshapeResult = std::variant<ChainInCat, BisimplexSample, int /*object*/>;

/// diagonal: collapse (n,n)-data to n-data; restrict(j): first row/column;
/// partial_op(J): reverse the listed directions.
ReshapeResult reshape(const BisimplexSample& sample, const ReshapeAction& action);

}  // namespace gluecat
