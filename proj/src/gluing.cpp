#include "gluecat/gluing.hpp"

#include <algorithm>

namespace gluecat {

namespace {

bool degenerate_square(const FinCategory& c, const std::array<int, 4>& key) {
  for (int f : key)
    if (!c.is_identity(f)) return false;
  return true;
}

/// The square [[x,w],[x,w]] with rows q and identity columns.
GridSimplex row_square(const FinCategoryPtr& cat, int q) {
  const FinCategory& c = *cat;
  int x = c.mor(q).src, w = c.mor(q).tgt;
  return GridSimplex(cat, 1, {x, w, x, w}, {q, q}, {c.identity(x), c.identity(w)});
}

/// The square [[w,w],[y,y]] with columns p and identity rows.
GridSimplex col_square(const FinCategoryPtr& cat, int p) {
  const FinCategory& c = *cat;
  int w = c.mor(p).src, y = c.mor(p).tgt;
  return GridSimplex(cat, 1, {w, w, y, y}, {c.identity(w), c.identity(y)}, {p, p});
}

}  // namespace

int GridFunctorData::value_of(const GridSimplex& g) const {
  auto key = edge_key(g);
  auto it = edge_value.find(key);
  if (it != edge_value.end()) return it->second;
  if (degenerate_square(*source, key))
    return target->identity(object_value[static_cast<size_t>(g.object(0, 0))]);
  fail(ErrorCode::UnknownObject, "grid 1-simplex outside the functor data");
}

bool GridFunctorData::has(const GridSimplex& g) const {
  return edge_value.count(edge_key(g)) > 0 || degenerate_square(*source, edge_key(g));
}

GridFunctorData grid_functor_from_functor(FinCategoryPtr source, const EdgeClass& e1,
                                          const EdgeClass& e2, const TilingDiscipline& discipline,
                                          FinCategoryPtr target, const std::vector<int>& object_map,
                                          const std::vector<int>& morphism_map) {
  GridFunctorData g;
  g.discipline = discipline;
  g.source = source;
  g.e1 = e1;
  g.e2 = e2;
  g.target = target;
  g.object_value = object_map;
  for (const auto& simplex : enumerate_grid_simplices(source, e1, e2, 1, discipline)) {
    int diag = simplex.arrow(0, 0, 1, 1);
    g.edge_value[GridFunctorData::edge_key(simplex)] = morphism_map[static_cast<size_t>(diag)];
  }
  return g;
}

Report validate_grid_functor(const GridFunctorData& g) {
  Report rep;
  const FinCategory& d = *g.target;
  bool typed = true;
  std::string witness;
  for (const auto& [key, val] : g.edge_value) {
    int src_obj = g.source->mor(key[0]).src;
    int tgt_obj = g.source->mor(key[2]).tgt;
    if (d.mor(val).src != g.object_value[static_cast<size_t>(src_obj)] ||
        d.mor(val).tgt != g.object_value[static_cast<size_t>(tgt_obj)]) {
      typed = false;
      witness = g.source->mor(key[0]).name;
      break;
    }
  }
  rep.add("grid-functor:typing", typed, witness);

  bool coherent = true;
  std::string cw;
  for (const auto& sigma : enumerate_grid_simplices(g.source, g.e1, g.e2, 2, g.discipline)) {
    int v01 = g.value_of(sigma.face(2));  // vertices {0,1}
    int v12 = g.value_of(sigma.face(0));  // vertices {1,2}
    int v02 = g.value_of(sigma.face(1));  // vertices {0,2}
    if (d.compose(v12, v01) != v02) {
      coherent = false;
      cw = "2-simplex at " + g.source->object_name(sigma.object(0, 0));
      break;
    }
  }
  rep.add("grid-functor:coherence", coherent, cw);
  return rep;
}

std::vector<std::pair<int, int>> compactification_choices(const FinCategory& c,
                                                          const EdgeClass& e1, const EdgeClass& e2,
                                                          int f) {
  std::vector<std::pair<int, int>> out;
  const int x = c.mor(f).src;
  const int y = c.mor(f).tgt;
  for (int q = 0; q < c.num_morphisms(); ++q) {
    if (c.mor(q).src != x || !e2.contains(q)) continue;
    for (int p = 0; p < c.num_morphisms(); ++p) {
      if (c.mor(p).src != c.mor(q).tgt || c.mor(p).tgt != y || !e1.contains(p)) continue;
      if (c.compose(p, q) == f) out.emplace_back(q, p);
    }
  }
  return out;
}

ExtendedFunctor extend_comm(const GridFunctorData& g) {
  const FinCategory& c = *g.source;
  const FinCategory& d = *g.target;

  auto adm1 = check_admissible(c, g.e1);
  if (!adm1.ok)
    fail(ErrorCode::HypothesisFailed, "admissibility of E1 (" + adm1.condition + "): " + adm1.witness);
  auto adm2 = check_admissible(c, g.e2);
  if (!adm2.ok)
    fail(ErrorCode::HypothesisFailed, "admissibility of E2 (" + adm2.condition + "): " + adm2.witness);
  for (int f = 0; f < c.num_morphisms(); ++f)
    if (compactification_choices(c, g.e1, g.e2, f).empty())
      fail(ErrorCode::HypothesisFailed, "factorization: " + c.mor(f).name + " has no E2-then-E1 factorization");

  ExtendedFunctor out;
  out.object_value = g.object_value;
  out.mor_value.resize(static_cast<size_t>(c.num_morphisms()));
  for (int f = 0; f < c.num_morphisms(); ++f) {
    auto [q, p] = compactification_choices(c, g.e1, g.e2, f).front();
    out.mor_value[static_cast<size_t>(f)] =
        d.compose(g.value_of(col_square(g.source, p)), g.value_of(row_square(g.source, q)));
  }

  Report& rep = out.report;
  bool functorial = true;
  std::string fw;
  for (int o = 0; o < c.num_objects() && functorial; ++o)
    if (out.mor_value[static_cast<size_t>(c.identity(o))] != d.identity(out.object_value[static_cast<size_t>(o)])) {
      functorial = false;
      fw = "identity on " + c.object_name(o);
    }
  for (int f = 0; f < c.num_morphisms() && functorial; ++f)
    for (int e = 0; e < c.num_morphisms() && functorial; ++e) {
      if (c.mor(e).tgt != c.mor(f).src) continue;
      if (out.mor_value[static_cast<size_t>(c.compose(f, e))] !=
          d.compose(out.mor_value[static_cast<size_t>(f)], out.mor_value[static_cast<size_t>(e)])) {
        functorial = false;
        fw = "triangle (" + c.mor(e).name + ", " + c.mor(f).name + ")";
      }
    }
  rep.add("extend-comm:functorial", functorial, fw);

  bool independent = true;
  std::string iw;
  for (int f = 0; f < c.num_morphisms() && independent; ++f)
    for (auto [q, p] : compactification_choices(c, g.e1, g.e2, f)) {
      int candidate =
          d.compose(g.value_of(col_square(g.source, p)), g.value_of(row_square(g.source, q)));
      if (candidate != out.mor_value[static_cast<size_t>(f)]) {
        independent = false;
        iw = c.mor(f).name + " via (" + c.mor(q).name + ", " + c.mor(p).name + ")";
        break;
      }
    }
  rep.add("extend-comm:choice-independent", independent, iw);

  bool section = true;
  std::string sw;
  for (const auto& simplex : enumerate_grid_simplices(g.source, g.e1, g.e2, 1, g.discipline)) {
    if (g.value_of(simplex) != out.mor_value[static_cast<size_t>(simplex.arrow(0, 0, 1, 1))]) {
      section = false;
      sw = "1-simplex over " + c.mor(simplex.right(0, 0)).name;
      break;
    }
  }
  if (section)
    for (const auto& sigma : enumerate_grid_simplices(g.source, g.e1, g.e2, 2, g.discipline)) {
      int lhs = d.compose(g.value_of(sigma.face(0)), g.value_of(sigma.face(2)));
      if (lhs != out.mor_value[static_cast<size_t>(sigma.arrow(0, 0, 2, 2))]) {
        section = false;
        sw = "2-simplex over " + c.object_name(sigma.object(0, 0));
        break;
      }
    }
  rep.add("extend-comm:g-prime-after-p-comm", section, sw);
  return out;
}

namespace {

struct CartExtender {
  const GridFunctorData& g;
  const FinCategory& c;
  const FinCategory& d;
  int depth_cap;

  int extend(const GridSimplex& sq, int depth) const {
    if (depth > depth_cap) fail(ErrorCode::HypothesisFailed, "truncation: recursion exceeded cap");
    if (is_pullback_square(c, {sq.right(0, 0), sq.down(0, 0), sq.down(0, 1), sq.right(1, 0)}))
      return g.value_of(sq);
    auto pb = pullback(c, sq.down(0, 1), sq.right(1, 0));
    if (!pb) fail(ErrorCode::MissingPullback, "cospan of square over " + c.object_name(sq.object(0, 0)));
    auto gap = mediate(c, pb->to_x, pb->to_y, sq.right(0, 0), sq.down(0, 0));
    if (!gap) fail(ErrorCode::MissingPullback, "gap morphism");
    if (!g.e1.contains(*gap) || !g.e2.contains(*gap))
      fail(ErrorCode::GapNotInBothClasses, c.mor(*gap).name);
    const int x = sq.object(0, 0);
    GridSimplex gap_square(g.source, 1, {x, x, x, pb->apex}, {c.identity(x), *gap},
                           {c.identity(x), *gap});
    GridSimplex cart_square(g.source, 1, {pb->apex, sq.object(0, 1), sq.object(1, 0), sq.object(1, 1)},
                            {pb->to_x, sq.right(1, 0)}, {pb->to_y, sq.down(0, 1)});
    return d.compose(g.value_of(cart_square), extend(gap_square, depth + 1));
  }
};

}  // namespace

CartExtension extend_cart(const GridFunctorData& g, int i_max) {
  const FinCategory& c = *g.source;
  const FinCategory& d = *g.target;
  if (!(g.discipline == TilingDiscipline::cart()))
    fail(ErrorCode::ShapeMismatch, "extend_cart expects Cart discipline data");

  auto adm1 = check_admissible(c, g.e1);
  if (!adm1.ok)
    fail(ErrorCode::HypothesisFailed, "admissibility of E1 (" + adm1.condition + "): " + adm1.witness);
  auto adm2 = check_admissible(c, g.e2);
  if (!adm2.ok)
    fail(ErrorCode::HypothesisFailed, "admissibility of E2 (" + adm2.condition + "): " + adm2.witness);
  for (int f = 0; f < c.num_morphisms(); ++f) {
    if (!g.e1.contains(f) || !g.e2.contains(f)) continue;
    TruncationLevel lvl = truncation_level(c, f, i_max + 2);
    if (!(lvl <= TruncationLevel::bounded(i_max)))
      fail(ErrorCode::HypothesisFailed,
           "truncation: " + c.mor(f).name + " is not " + std::to_string(i_max) + "-truncated");
  }

  CartExtension out;
  out.comm_data.discipline = TilingDiscipline::comm();
  out.comm_data.source = g.source;
  out.comm_data.e1 = g.e1;
  out.comm_data.e2 = g.e2;
  out.comm_data.target = g.target;
  out.comm_data.object_value = g.object_value;

  CartExtender ext{g, c, d, i_max + 3};
  for (const auto& sq : enumerate_grid_simplices(g.source, g.e1, g.e2, 1, TilingDiscipline::comm()))
    out.comm_data.edge_value[GridFunctorData::edge_key(sq)] = ext.extend(sq, 0);

  Report& rep = out.report;
  bool restrict_ok = true;
  std::string rw;
  for (const auto& sq : enumerate_grid_simplices(g.source, g.e1, g.e2, 1, TilingDiscipline::cart()))
    if (out.comm_data.value_of(sq) != g.value_of(sq)) {
      restrict_ok = false;
      rw = "cart square over " + c.object_name(sq.object(0, 0));
      break;
    }
  rep.add("extend-cart:restriction", restrict_ok, rw);

  // Choice independence across every universal pullback cone.
  bool independent = true;
  std::string iw;
  for (const auto& sq : enumerate_grid_simplices(g.source, g.e1, g.e2, 1, TilingDiscipline::comm())) {
    if (!independent) break;
    int reference = out.comm_data.value_of(sq);
    if (is_pullback_square(c, {sq.right(0, 0), sq.down(0, 0), sq.down(0, 1), sq.right(1, 0)}))
      continue;
    for (int w = 0; w < c.num_objects() && independent; ++w)
      for (int fx : c.hom(w, sq.object(0, 1)))
        for (int fy : c.hom(w, sq.object(1, 0))) {
          if (c.compose(sq.down(0, 1), fx) != c.compose(sq.right(1, 0), fy)) continue;
          if (!is_pullback_square(c, {fx, fy, sq.down(0, 1), sq.right(1, 0)})) continue;
          auto gap = mediate(c, fx, fy, sq.right(0, 0), sq.down(0, 0));
          if (!gap || !g.e1.contains(*gap) || !g.e2.contains(*gap)) continue;
          const int x = sq.object(0, 0);
          GridSimplex gap_square(g.source, 1, {x, x, x, w}, {c.identity(x), *gap},
                                 {c.identity(x), *gap});
          GridSimplex cart_square(g.source, 1, {w, sq.object(0, 1), sq.object(1, 0), sq.object(1, 1)},
                                  {fx, sq.right(1, 0)}, {fy, sq.down(0, 1)});
          int candidate = d.compose(g.value_of(cart_square), ext.extend(gap_square, 0));
          if (candidate != reference) {
            independent = false;
            iw = "square over " + c.object_name(x) + " via apex " + c.object_name(w);
            break;
          }
        }
  }
  rep.add("extend-cart:choice-independent", independent, iw);

  Report coherence = validate_grid_functor(out.comm_data);
  for (auto& entry : coherence.checks) rep.add("extend-cart:" + entry.name, entry.ok, entry.witness);
  return out;
}

ExtendedFunctor extend_full(const GridFunctorData& g_cart, int i_max) {
  CartExtension stage1 = extend_cart(g_cart, i_max);
  ExtendedFunctor out = extend_comm(stage1.comm_data);
  Report combined;
  for (auto& e : stage1.report.checks) combined.add("cart:" + e.name, e.ok, e.witness);
  for (auto& e : out.report.checks) combined.add("comm:" + e.name, e.ok, e.witness);

  // Diagonal compatibility: g' after both projections returns g on cart data.
  const FinCategory& c = *g_cart.source;
  bool diag_ok = true;
  std::string dw;
  for (const auto& sq : enumerate_grid_simplices(g_cart.source, g_cart.e1, g_cart.e2, 1,
                                                 TilingDiscipline::cart())) {
    int diag = sq.arrow(0, 0, 1, 1);
    if (out.mor_value[static_cast<size_t>(diag)] != g_cart.value_of(sq)) {
      diag_ok = false;
      dw = "diagonal of square over " + c.object_name(sq.object(0, 0));
      break;
    }
  }
  combined.add("full:diagonal", diag_ok, dw);
  out.report = std::move(combined);
  return out;
}

}  // namespace gluecat
