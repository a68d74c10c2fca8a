#pragma once

#include <memory>
#include <vector>

#include "gluecat/grid.hpp"
#include "gluecat/nerve.hpp"

namespace gluecat {

struct GridPoint {
  int row = 0, col = 0;
  bool operator==(const GridPoint&) const = default;
};

/// Cart^n: the non-empty up-sets of [n] x [n] under inverse inclusion,
/// together with the structure maps. Principal up-sets are named b<i><j>;
/// other elements are meets of principals over their minimal members
/// (e.g. "b01^b10").
class CartLattice {
 public:
  explicit CartLattice(int n, int budget = 4);

  int n() const { return n_; }
  const Poset& lattice() const { return lattice_; }
  const Poset& grid() const { return *grid_; }
  const PosetPtr& grid_ptr() const { return grid_; }
  int size() const { return lattice_.size(); }
  std::uint64_t mask(int idx) const { return masks_[static_cast<size_t>(idx)]; }
  int index_of_mask(std::uint64_t m) const;

  int sigma(int p, int q) const;              // principal up-set at (p,q)
  GridPoint pi(int idx) const;                // coordinate-wise minimum
  int xi(int p, int q) const;                 // sigma(p,0) ∧ sigma(0,q)
  int eta(int p, int q) const;                // sigma(p,n) ∧ sigma(n,q)
  int meet(int x, int y) const;               // union of members
  std::optional<int> join(int x, int y) const;  // intersection, absent if empty

  /// Construction 5.17-style operators; lattice meets are unions and joins
  /// intersections of member sets.
  int lambda(int p, int x, int y) const;  // (sigma(pi1(y) v p, 0) v x) ^ y
  int mu(int q, int x, int y) const;      // (sigma(0, q v pi2(y)) v x) ^ y

 private:
  void check_point(int p, int q) const;
  std::uint64_t sigma_mask(int p, int q) const;

  int n_ = 0;
  PosetPtr grid_;
  Poset lattice_;
  std::vector<std::uint64_t> masks_;
};

using CartLatticePtr = std::shared_ptr<const CartLattice>;

CartLatticePtr build_cart(int n, int budget = 4);

enum class BoxplusKind { At, Full, Cart };

/// Interval nerves inside N(Cart^n): a single piece at (p,q), the union over
/// all grid points, or the cartesian union over (p,n).
SubNerve build_boxplus(const CartLattice& cart, BoxplusKind kind, int p = 0, int q = 0);

/// The p/q chains for the inner-anodyne certificate of boxplus_cart.
void boxplus_cart_chains(const CartLattice& cart, std::vector<int>* p_list,
                         std::vector<int>* q_list);

/// The epsilon grid of a chain x_0 <= ... <= x_m: entry (a,b) is
/// Lambda_0(x_b, x_a) below the diagonal and mu_0(x_a, x_b) above it,
/// realized over PosetCat(Cart^n).
struct EpsilonGrid {
  FinCategoryPtr cart_cat;             // poset category of the lattice
  std::vector<int> lattice_entries;    // (m+1)^2 lattice indices, row-major
  GridSimplex grid;
};

EpsilonGrid epsilon(const CartLattice& cart, const std::vector<int>& chain);

/// Marked edge classes F1/F2 on PosetCat(Cart^n): edges whose pi-image is
/// constant in the second/first coordinate.
EdgeClass cart_marking(const CartLattice& cart, const FinCategory& cart_cat, int direction);

// ---------------------------------------------------------------------------

/// A right Kan extension of a grid tau: [n] x [n] -> C along sigma^n: the
/// value at an up-set Q is the limit of tau over the members of Q.
struct KartExtension {
  CartLatticePtr cart;
  FinCategoryPtr cat;
  std::vector<int> value;               // per lattice element
  std::vector<std::vector<int>> legs;   // per lattice element, per member (ascending grid index)

  /// Mediating morphism value(Q) -> value(Q') for Q <= Q'.
  int arrow(const FinCategory& c, int q_idx, int q2_idx) const;
};

/// tau is a (n,n) bisimplicial sample over C. Limits are computed by
/// exhaustive cone search; principal up-sets take the member minimum as the
/// canonical limit, which makes restriction along sigma strict.
KartExtension kart_extension(CartLatticePtr cart, const BisimplexSample& tau,
                             bool reverse_enumeration = false);

/// Every exact square of Cart^n must land on a pullback square of C.
Report kart_check(const KartExtension& ext, const BisimplexSample& tau);

}  // namespace gluecat
