#include "gluecat/cartesianization.hpp"

#include <algorithm>
#include <bit>

namespace gluecat {

namespace {

std::string cart_upset_name(int n, std::uint64_t mask) {
  // Named by the minimal members: b<i><j> when principal, meets otherwise.
  std::vector<std::pair<int, int>> mins;
  auto in = [&](int i, int j) {
    return i >= 0 && i <= n && j >= 0 && j <= n && ((mask >> (i * (n + 1) + j)) & 1u);
  };
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      if (!in(i, j)) continue;
      if (in(i - 1, j) || in(i, j - 1)) continue;  // not minimal
      mins.emplace_back(i, j);
    }
  std::string out;
  for (size_t k = 0; k < mins.size(); ++k) {
    if (k) out += "^";
    out += "b" + std::to_string(mins[k].first) + std::to_string(mins[k].second);
  }
  return out;
}

}  // namespace

CartLattice::CartLattice(int n, int budget) : n_(n) {
  if (n < 0) fail(ErrorCode::OutOfRange, "n must be >= 0");
  if (n > budget)
    fail(ErrorCode::SizeBudgetExceeded,
         "Cart^" + std::to_string(n) + " exceeds budget n <= " + std::to_string(budget));
  grid_ = std::make_shared<Poset>(grid_poset(n));
  // Up-sets of [n] x [n] are monotone row thresholds t_0 >= t_1 >= ... >= t_n,
  // row i holding columns >= t_i (t = n+1 for an empty row).
  std::vector<int> t(static_cast<size_t>(n + 1), 0);
  std::vector<std::uint64_t> masks;
  auto emit = [&]() {
    std::uint64_t m = 0;
    for (int i = 0; i <= n; ++i)
      for (int j = t[static_cast<size_t>(i)]; j <= n; ++j) m |= (1ull << grid_index(n, i, j));
    if (m != 0) masks.push_back(m);
  };
  auto rec = [&](auto&& self, int row, int hi) -> void {
    if (row > n) {
      emit();
      return;
    }
    for (int v = 0; v <= hi; ++v) {
      t[static_cast<size_t>(row)] = v;
      self(self, row + 1, v);
    }
  };
  rec(rec, 0, n + 1);
  std::sort(masks.begin(), masks.end(), [](std::uint64_t a, std::uint64_t b) {
    int ca = std::popcount(a), cb = std::popcount(b);
    if (ca != cb) return ca > cb;
    return a < b;
  });
  masks_ = masks;
  std::vector<std::string> names;
  for (auto m : masks) names.push_back(cart_upset_name(n, m));
  std::vector<std::pair<std::string, std::string>> pairs;
  for (size_t i = 0; i < masks.size(); ++i)
    for (size_t j = 0; j < masks.size(); ++j)
      if (i != j && (masks[i] & masks[j]) == masks[j]) pairs.emplace_back(names[i], names[j]);
  lattice_ = Poset::validate(names, pairs);
}

CartLatticePtr build_cart(int n, int budget) { return std::make_shared<CartLattice>(n, budget); }

void CartLattice::check_point(int p, int q) const {
  if (p < 0 || p > n_ || q < 0 || q > n_) fail(ErrorCode::OutOfRange, "grid point out of range");
}

std::uint64_t CartLattice::sigma_mask(int p, int q) const {
  std::uint64_t m = 0;
  for (int i = p; i <= n_; ++i)
    for (int j = q; j <= n_; ++j) m |= (1ull << grid_index(n_, i, j));
  return m;
}

int CartLattice::index_of_mask(std::uint64_t m) const {
  for (size_t i = 0; i < masks_.size(); ++i)
    if (masks_[i] == m) return static_cast<int>(i);
  fail(ErrorCode::UnknownElement, "up-set not in Cart lattice");
}

int CartLattice::sigma(int p, int q) const {
  check_point(p, q);
  return index_of_mask(sigma_mask(p, q));
}

GridPoint CartLattice::pi(int idx) const {
  std::uint64_t m = mask(idx);
  int mi = n_ + 1, mj = n_ + 1;
  for (int i = 0; i <= n_; ++i)
    for (int j = 0; j <= n_; ++j)
      if ((m >> grid_index(n_, i, j)) & 1u) {
        mi = std::min(mi, i);
        mj = std::min(mj, j);
      }
  return {mi, mj};
}

int CartLattice::xi(int p, int q) const {
  check_point(p, q);
  return index_of_mask(sigma_mask(p, 0) | sigma_mask(0, q));
}

int CartLattice::eta(int p, int q) const {
  check_point(p, q);
  return index_of_mask(sigma_mask(p, n_) | sigma_mask(n_, q));
}

int CartLattice::meet(int x, int y) const { return index_of_mask(mask(x) | mask(y)); }

std::optional<int> CartLattice::join(int x, int y) const {
  std::uint64_t m = mask(x) & mask(y);
  if (m == 0) return std::nullopt;
  return index_of_mask(m);
}

int CartLattice::lambda(int p, int x, int y) const {
  if (p < 0 || p > n_) fail(ErrorCode::OutOfRange, "p out of range");
  GridPoint py = pi(y);
  std::uint64_t m = (sigma_mask(std::max(py.row, p), 0) & mask(x)) | mask(y);
  return index_of_mask(m);
}

int CartLattice::mu(int q, int x, int y) const {
  if (q < 0 || q > n_) fail(ErrorCode::OutOfRange, "q out of range");
  GridPoint py = pi(y);
  std::uint64_t m = (sigma_mask(0, std::max(py.col, q)) & mask(x)) | mask(y);
  return index_of_mask(m);
}

SubNerve build_boxplus(const CartLattice& cart, BoxplusKind kind, int p, int q) {
  auto base = std::make_shared<Poset>(cart.lattice());
  std::vector<std::pair<int, int>> points;
  const int n = cart.n();
  switch (kind) {
    case BoxplusKind::At:
      points.emplace_back(p, q);
      break;
    case BoxplusKind::Full:
      for (int a = 0; a <= n; ++a)
        for (int b = 0; b <= n; ++b) points.emplace_back(a, b);
      break;
    case BoxplusKind::Cart:
      for (int a = 0; a <= n; ++a) points.emplace_back(a, n);
      break;
  }
  SubNerve out(base);
  for (auto [a, b] : points) {
    std::vector<int> elems = interval_elements(*base, cart.xi(a, b), cart.eta(a, b));
    Poset sub = base->restrict_to(elems);
    SubNerve local = nerve(std::make_shared<Poset>(sub));
    for (const auto& ch : local.chains()) {
      Chain lifted;
      for (int e : ch) lifted.push_back(base->index(sub.name(e)));
      out.insert_raw(lifted);
    }
  }
  return out;
}

void boxplus_cart_chains(const CartLattice& cart, std::vector<int>* p_list,
                         std::vector<int>* q_list) {
  p_list->clear();
  q_list->clear();
  for (int p = 0; p <= cart.n(); ++p) {
    p_list->push_back(cart.xi(p, cart.n()));
    q_list->push_back(cart.eta(p, cart.n()));
  }
}

EpsilonGrid epsilon(const CartLattice& cart, const std::vector<int>& chain) {
  if (chain.empty()) fail(ErrorCode::NotAChain, "empty chain");
  for (size_t i = 0; i + 1 < chain.size(); ++i)
    if (!cart.lattice().leq(chain[i], chain[i + 1])) fail(ErrorCode::NotAChain);
  const int m = static_cast<int>(chain.size()) - 1;
  EpsilonGrid out;
  out.cart_cat = std::make_shared<FinCategory>(poset_category(cart.lattice()));
  std::vector<int> entries(static_cast<size_t>((m + 1) * (m + 1)));
  for (int a = 0; a <= m; ++a)
    for (int b = 0; b <= m; ++b) {
      int x = chain[static_cast<size_t>(std::min(a, b))];
      int y = chain[static_cast<size_t>(std::max(a, b))];
      entries[static_cast<size_t>(a * (m + 1) + b)] =
          a >= b ? cart.lambda(0, x, y) : cart.mu(0, x, y);
    }
  const FinCategory& cc = *out.cart_cat;
  const Poset& lat = cart.lattice();
  auto hom_of = [&](int src, int tgt) {
    if (!lat.leq(src, tgt)) fail(ErrorCode::NotAChain, "epsilon grid not monotone");
    return cc.mor_index(lat.name(src) + "->" + lat.name(tgt));
  };
  std::vector<int> rgt(static_cast<size_t>((m + 1) * m));
  std::vector<int> dwn(static_cast<size_t>(m * (m + 1)));
  for (int a = 0; a <= m; ++a)
    for (int b = 0; b < m; ++b)
      rgt[static_cast<size_t>(a * m + b)] = hom_of(entries[static_cast<size_t>(a * (m + 1) + b)],
                                                   entries[static_cast<size_t>(a * (m + 1) + b + 1)]);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b <= m; ++b)
      dwn[static_cast<size_t>(a * (m + 1) + b)] = hom_of(entries[static_cast<size_t>(a * (m + 1) + b)],
                                                         entries[static_cast<size_t>((a + 1) * (m + 1) + b)]);
  out.grid = GridSimplex(out.cart_cat, m, entries, std::move(rgt), std::move(dwn));
  out.lattice_entries = std::move(entries);
  return out;
}

EdgeClass cart_marking(const CartLattice& cart, const FinCategory& cart_cat, int direction) {
  std::vector<int> members;
  for (int f = 0; f < cart_cat.num_morphisms(); ++f) {
    int src = cart_cat.mor(f).src;
    int tgt = cart_cat.mor(f).tgt;
    GridPoint ps = cart.pi(src), pt = cart.pi(tgt);
    if (direction == 1 && ps.col == pt.col) members.push_back(f);
    if (direction == 2 && ps.row == pt.row) members.push_back(f);
  }
  return EdgeClass(cart_cat, std::move(members));
}

int KartExtension::arrow(const FinCategory& c, int q_idx, int q2_idx) const {
  const Poset& lat = cart->lattice();
  if (!lat.leq(q_idx, q2_idx)) fail(ErrorCode::NotComparable);
  // Restrict the Q-cone to the members of Q' and mediate into the Q'-limit.
  std::uint64_t m2 = cart->mask(q2_idx);
  std::uint64_t m1 = cart->mask(q_idx);
  std::vector<int> legs_restricted;
  size_t pos = 0;
  for (int e = 0; e < cart->grid().size(); ++e) {
    if ((m1 >> e) & 1u) {
      if ((m2 >> e) & 1u) legs_restricted.push_back(legs[static_cast<size_t>(q_idx)][pos]);
      ++pos;
    }
  }
  // Unique u with legs_{Q'} ∘ u = restricted legs.
  const auto& target_legs = legs[static_cast<size_t>(q2_idx)];
  std::optional<int> found;
  for (int u : c.hom(value[static_cast<size_t>(q_idx)], value[static_cast<size_t>(q2_idx)])) {
    bool match = true;
    for (size_t i = 0; i < target_legs.size() && match; ++i)
      if (c.compose(target_legs[i], u) != legs_restricted[i]) match = false;
    if (match) {
      if (found) fail(ErrorCode::MissingLimit, "mediating morphism not unique");
      found = u;
    }
  }
  if (!found) fail(ErrorCode::MissingLimit, "no mediating morphism");
  return *found;
}

KartExtension kart_extension(CartLatticePtr cart, const BisimplexSample& tau,
                             bool reverse_enumeration) {
  if (tau.n1 != cart->n() || tau.n2 != cart->n()) fail(ErrorCode::ShapeMismatch, "tau shape");
  const FinCategory& c = *tau.cat;
  const int n = cart->n();
  KartExtension ext;
  ext.cart = cart;
  ext.cat = tau.cat;
  ext.value.resize(static_cast<size_t>(cart->size()));
  ext.legs.resize(static_cast<size_t>(cart->size()));

  auto tau_obj = [&](int e) { return tau.object(e / (n + 1), e % (n + 1)); };
  auto tau_arrow = [&](int e1, int e2) {
    int r1 = e1 / (n + 1), c1 = e1 % (n + 1), r2 = e2 / (n + 1), c2 = e2 % (n + 1);
    int cur = c.identity(tau_obj(e1));
    for (int cc = c1; cc < c2; ++cc) cur = c.compose(tau.right[static_cast<size_t>(r1 * n + cc)], cur);
    for (int rr = r1; rr < r2; ++rr) cur = c.compose(tau.down[static_cast<size_t>(rr * (n + 1) + c2)], cur);
    return cur;
  };

  for (int q = 0; q < cart->size(); ++q) {
    std::uint64_t m = cart->mask(q);
    std::vector<int> members;
    for (int e = 0; e < cart->grid().size(); ++e)
      if ((m >> e) & 1u) members.push_back(e);
    // A principal up-set has a minimum; its value is taken on the nose, which
    // makes restriction along sigma the identity.
    GridPoint bottom = cart->pi(q);
    int bottom_elem = grid_index(n, bottom.row, bottom.col);
    if ((m >> bottom_elem) & 1u && cart->mask(cart->sigma(bottom.row, bottom.col)) == m) {
      ext.value[static_cast<size_t>(q)] = tau_obj(bottom_elem);
      std::vector<int> legs;
      for (int e : members) legs.push_back(tau_arrow(bottom_elem, e));
      ext.legs[static_cast<size_t>(q)] = std::move(legs);
      continue;
    }
    std::vector<int> vertices = members;
    if (reverse_enumeration) std::reverse(vertices.begin(), vertices.end());
    std::vector<int> diagram_objects;
    for (int e : vertices) diagram_objects.push_back(tau_obj(e));
    std::vector<DiagramArrow> arrows;
    for (size_t a = 0; a < vertices.size(); ++a)
      for (size_t b = 0; b < vertices.size(); ++b) {
        if (a == b) continue;
        int ea = vertices[a], eb = vertices[b];
        if (cart->grid().leq(ea, eb))
          arrows.push_back({static_cast<int>(a), static_cast<int>(b), tau_arrow(ea, eb)});
      }
    auto lim = finite_limit(c, diagram_objects, arrows);
    if (!lim)
      fail(ErrorCode::MissingLimit, "no limit over " + cart->lattice().name(q));
    ext.value[static_cast<size_t>(q)] = lim->apex;
    // Store legs in ascending member order regardless of enumeration order.
    std::vector<int> legs(members.size());
    for (size_t a = 0; a < vertices.size(); ++a) {
      size_t pos = static_cast<size_t>(std::find(members.begin(), members.end(), vertices[a]) - members.begin());
      legs[pos] = lim->legs[a];
    }
    ext.legs[static_cast<size_t>(q)] = std::move(legs);
  }
  return ext;
}

Report kart_check(const KartExtension& ext, const BisimplexSample& tau) {
  Report rep;
  const CartLattice& cart = *ext.cart;
  const FinCategory& c = *ext.cat;
  const int n = cart.n();
  // Restriction along sigma recovers tau.
  bool restrict_ok = true;
  std::string witness;
  for (int p = 0; p <= n && restrict_ok; ++p)
    for (int q = 0; q <= n && restrict_ok; ++q) {
      int idx = cart.sigma(p, q);
      if (ext.value[static_cast<size_t>(idx)] != tau.object(p, q)) {
        restrict_ok = false;
        witness = "value at sigma(" + std::to_string(p) + "," + std::to_string(q) + ")";
      }
    }
  // Arrows restrict too: sigma(p,q) <= sigma(p',q') maps to tau's arrow.
  for (int p = 0; p <= n && restrict_ok; ++p)
    for (int q = 0; q <= n && restrict_ok; ++q)
      for (int p2 = p; p2 <= n && restrict_ok; ++p2)
        for (int q2 = q; q2 <= n && restrict_ok; ++q2) {
          int a = cart.sigma(p, q), b = cart.sigma(p2, q2);
          int got = ext.arrow(c, a, b);
          int cur = c.identity(tau.object(p, q));
          for (int cc = q; cc < q2; ++cc) cur = c.compose(tau.right[static_cast<size_t>(p * n + cc)], cur);
          for (int rr = p; rr < p2; ++rr) cur = c.compose(tau.down[static_cast<size_t>(rr * (n + 1) + q2)], cur);
          if (got != cur) {
            restrict_ok = false;
            witness = "arrow sigma(" + std::to_string(p) + "," + std::to_string(q) + ")->sigma(" +
                      std::to_string(p2) + "," + std::to_string(q2) + ")";
          }
        }
  rep.add("kart:restriction", restrict_ok, witness);

  // Exact squares map to pullback squares.
  const Poset& lat = cart.lattice();
  bool exact_ok = true;
  std::string exact_witness;
  for (int a = 0; a < lat.size() && exact_ok; ++a)
    for (int b = 0; b < lat.size(); ++b) {
      if (!lat.leq(a, b)) continue;
      for (int cc = 0; cc < lat.size(); ++cc) {
        if (!lat.leq(a, cc)) continue;
        for (int d = 0; d < lat.size(); ++d) {
          if (!lat.leq(b, d) || !lat.leq(cc, d)) continue;
          if (!is_exact_square(lat, {a, b, cc, d})) continue;
          CatSquare sq{ext.arrow(c, a, b), ext.arrow(c, a, cc), ext.arrow(c, b, d),
                       ext.arrow(c, cc, d)};
          if (!is_pullback_square(c, sq)) {
            exact_ok = false;
            exact_witness = "exact square (" + lat.name(a) + ";" + lat.name(b) + "," +
                            lat.name(cc) + ";" + lat.name(d) + ")";
            break;
          }
        }
        if (!exact_ok) break;
      }
      if (!exact_ok) break;
    }
  rep.add("kart:exact-squares", exact_ok, exact_witness);
  return rep;
}

}  // namespace gluecat
