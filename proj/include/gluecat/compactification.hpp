#pragma once

#include <map>
#include <vector>

#include "gluecat/grid.hpp"
#include "gluecat/nerve.hpp"

namespace gluecat {

/// The compactification poset on {(i,j) : 0 <= i <= j <= n} with the product
/// order; element (i,j) is named a<i><j>.
Poset build_cpt(int n);
int cpt_element_index(const Poset& cpt, int n, int i, int j);
std::pair<int, int> cpt_coords(const Poset& cpt, int elem);

/// The pieces of the box: elements of the interval (0,i)//(i,n) for each i.
std::vector<std::vector<int>> box_pieces(int n);

/// The union of interval nerves inside N(Cpt^n).
SubNerve build_box(int n);
SubNerve cpt_nerve(int n);

/// A diagonal simplex in C: objects x_0..x_n with arrows t_i: x_i -> x_{i+1}.
struct DiagonalSimplex {
  std::vector<int> objects;
  std::vector<int> arrows;

  int n() const { return static_cast<int>(objects.size()) - 1; }
};

DiagonalSimplex diagonal_from_morphisms(const FinCategory& c, const std::vector<int>& arrows);

/// A functor Cpt^n -> C restricting to a given diagonal, with row arrows in
/// E2 and column arrows in E1.
struct Compactification {
  FinCategoryPtr cat;
  int n = 0;
  std::map<std::pair<int, int>, int> value;       // (i,j) -> object
  std::map<std::pair<int, int>, int> horizontal;  // (i,j) -> arrow (i,j)->(i,j+1)
  std::map<std::pair<int, int>, int> vertical;    // (i,j) -> arrow (i,j)->(i+1,j)

  /// Composite arrow (i,j) -> (k,l), i <= k, j <= l.
  int arrow(int i, int j, int k, int l) const;
};

/// The category of compactifications of tau: objects as above, morphisms the
/// natural transformations with every component in E1.
struct KptCategory {
  FinCategory category;
  std::vector<Compactification> objects;
  std::vector<std::vector<int>> transformation_components;  // per morphism, per cpt element
  std::vector<std::pair<int, int>> cpt_order;               // element order used for components
};

KptCategory enumerate_kpt(FinCategoryPtr cat, const EdgeClass& e1, const EdgeClass& e2,
                          const DiagonalSimplex& tau, long long budget = 5'000'000);

/// One entry of the alpha_comm family: the grid simplex attached to a chain
/// of the i-th box piece.
struct AlphaCommEntry {
  int piece;
  Chain chain;  // chain in the Cpt poset, inside the piece
  GridSimplex grid;
};

/// For every non-degenerate chain of every box piece, the commutative grid
/// with entries sigma(a_row, b_col); its diagonal restricts to sigma on the
/// chain.
std::vector<AlphaCommEntry> alpha_comm(const Compactification& sigma);

/// Pointwise extension of alpha_comm to a morphism of Kpt(tau): the two
/// grids plus the E1 components connecting them cellwise.
struct AlphaCommEdge {
  int piece;
  Chain chain;
  GridSimplex src, dst;
  std::vector<int> components;  // (m+1)^2 entries, row-major
};

std::vector<AlphaCommEdge> alpha_comm_edge(const Compactification& from,
                                           const Compactification& to,
                                           const std::vector<int>& components,
                                           const std::vector<std::pair<int, int>>& cpt_order);

}  // namespace gluecat
