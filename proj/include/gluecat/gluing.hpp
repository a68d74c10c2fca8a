#pragma once

#include <array>
#include <map>

#include "gluecat/grid.hpp"

namespace gluecat {

/// A morphism of grid complexes into a target category D, given on objects
/// and on grid 1-simplices (keyed by the four unit arrows of the square),
/// with 2-simplex coherence checked rather than assumed. Degenerate squares
/// implicitly map to identities.
struct GridFunctorData {
  TilingDiscipline discipline;
  FinCategoryPtr source;
  EdgeClass e1, e2;
  FinCategoryPtr target;
  std::vector<int> object_value;                 // per object of C
  std::map<std::array<int, 4>, int> edge_value;  // (right00, down00, down01, right10) -> morphism

  static std::array<int, 4> edge_key(const GridSimplex& g) {
    return {g.right(0, 0), g.down(0, 0), g.down(0, 1), g.right(1, 0)};
  }

  /// Value on a 1-simplex; degenerate squares yield identities.
  int value_of(const GridSimplex& g) const;
  bool has(const GridSimplex& g) const;
};

/// The tautological grid functor induced by an honest functor C -> D:
/// every grid simplex maps to the image of its diagonal composite.
GridFunctorData grid_functor_from_functor(FinCategoryPtr source, const EdgeClass& e1,
                                          const EdgeClass& e2, const TilingDiscipline& discipline,
                                          FinCategoryPtr target, const std::vector<int>& object_map,
                                          const std::vector<int>& morphism_map);

/// Functoriality of g on the enumerated grid complex up to dimension 2.
Report validate_grid_functor(const GridFunctorData& g);

struct ExtendedFunctor {
  std::vector<int> object_value;  // per object of C
  std::vector<int> mor_value;     // per morphism of C
  Report report;
};

/// Theorem A shadow: extend g (discipline Comm) to a functor C -> D by
/// choosing, per morphism, the first compactification in enumeration order
/// and composing the two induced grid values. The report verifies
/// functoriality, choice independence, and g' ∘ p_comm = g up to dim 2.
ExtendedFunctor extend_comm(const GridFunctorData& g);

struct CartExtension {
  GridFunctorData comm_data;  // discipline Comm
  Report report;
};

/// Theorem B shadow: extend g (discipline Cart) to all commutative grids by
/// splitting each square through the pullback of its cospan and recursing on
/// the gap square, whose own gap is one level less truncated.
CartExtension extend_cart(const GridFunctorData& g, int i_max);

/// extend_comm ∘ extend_cart, with the diagonal compatibility check.
ExtendedFunctor extend_full(const GridFunctorData& g_cart, int i_max);

/// The compactification choices available for a morphism f: every (q, p)
/// with q in E2, p in E1 and p∘q = f, in enumeration order.
std::vector<std::pair<int, int>> compactification_choices(const FinCategory& c,
                                                          const EdgeClass& e1, const EdgeClass& e2,
                                                          int f);

}  // namespace gluecat
