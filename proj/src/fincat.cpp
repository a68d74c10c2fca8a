#include "gluecat/fincat.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace gluecat {

FinCategory FinCategory::validate(std::vector<std::string> objects, std::vector<Mor> morphisms,
                                  std::vector<int> identities,
                                  const std::vector<std::array<int, 3>>& composites) {
  FinCategory c;
  c.objects_ = std::move(objects);
  c.mors_ = std::move(morphisms);
  c.identity_ = std::move(identities);
  {
    std::set<std::string> seen;
    for (const auto& o : c.objects_)
      if (!seen.insert(o).second) fail(ErrorCode::DuplicateElement, "object " + o);
    seen.clear();
    for (const auto& m : c.mors_)
      if (!seen.insert(m.name).second) fail(ErrorCode::DuplicateElement, "morphism " + m.name);
  }
  const int n = c.num_morphisms();
  if (static_cast<int>(c.identity_.size()) != c.num_objects())
    fail(ErrorCode::MissingIdentity, "identity list size mismatch");
  for (int o = 0; o < c.num_objects(); ++o) {
    int id = c.identity_[static_cast<size_t>(o)];
    if (id < 0 || id >= n || c.mors_[static_cast<size_t>(id)].src != o || c.mors_[static_cast<size_t>(id)].tgt != o)
      fail(ErrorCode::MissingIdentity, "object " + c.objects_[static_cast<size_t>(o)]);
  }
  c.compose_.assign(static_cast<size_t>(n) * static_cast<size_t>(n), -1);
  for (const auto& [g, f, gf] : composites) {
    // entry is "g after f".
    if (g < 0 || f < 0 || gf < 0 || g >= n || f >= n || gf >= n)
      fail(ErrorCode::IllTypedComposite, "composite index out of range");
    const Mor& mf = c.mors_[static_cast<size_t>(f)];
    const Mor& mg = c.mors_[static_cast<size_t>(g)];
    const Mor& mgf = c.mors_[static_cast<size_t>(gf)];
    if (mf.tgt != mg.src || mgf.src != mf.src || mgf.tgt != mg.tgt)
      fail(ErrorCode::IllTypedComposite, mg.name + " after " + mf.name);
    c.compose_[static_cast<size_t>(g) * n + static_cast<size_t>(f)] = gf;
  }
  // Totality on composable pairs.
  for (int f = 0; f < n; ++f)
    for (int g = 0; g < n; ++g) {
      bool composable = c.mors_[static_cast<size_t>(f)].tgt == c.mors_[static_cast<size_t>(g)].src;
      int entry = c.compose_[static_cast<size_t>(g) * n + static_cast<size_t>(f)];
      if (composable && entry < 0)
        fail(ErrorCode::IllTypedComposite,
             "missing composite " + c.mors_[static_cast<size_t>(g)].name + " after " + c.mors_[static_cast<size_t>(f)].name);
    }
  // Unit laws.
  for (int f = 0; f < n; ++f) {
    const Mor& m = c.mors_[static_cast<size_t>(f)];
    if (c.compose(f, c.identity_[static_cast<size_t>(m.src)]) != f ||
        c.compose(c.identity_[static_cast<size_t>(m.tgt)], f) != f)
      fail(ErrorCode::MissingIdentity, "unit law fails for " + m.name);
  }
  // Associativity.
  for (int f = 0; f < n; ++f)
    for (int g = 0; g < n; ++g) {
      if (c.mors_[static_cast<size_t>(f)].tgt != c.mors_[static_cast<size_t>(g)].src) continue;
      int gf = c.compose(g, f);
      for (int h = 0; h < n; ++h) {
        if (c.mors_[static_cast<size_t>(g)].tgt != c.mors_[static_cast<size_t>(h)].src) continue;
        if (c.compose(h, gf) != c.compose(c.compose(h, g), f))
          fail(ErrorCode::NotAssociative, "(" + c.mors_[static_cast<size_t>(h)].name + "," + c.mors_[static_cast<size_t>(g)].name +
                                              "," + c.mors_[static_cast<size_t>(f)].name + ")");
      }
    }
  return c;
}

int FinCategory::object_index(std::string_view name) const {
  auto found = find_object(name);
  if (!found) fail(ErrorCode::UnknownObject, std::string(name));
  return *found;
}

int FinCategory::mor_index(std::string_view name) const {
  auto found = find_mor(name);
  if (!found) fail(ErrorCode::UnknownObject, "morphism " + std::string(name));
  return *found;
}

std::optional<int> FinCategory::find_object(std::string_view name) const {
  for (int i = 0; i < num_objects(); ++i)
    if (objects_[static_cast<size_t>(i)] == name) return i;
  return std::nullopt;
}

std::optional<int> FinCategory::find_mor(std::string_view name) const {
  for (int i = 0; i < num_morphisms(); ++i)
    if (mors_[static_cast<size_t>(i)].name == name) return i;
  return std::nullopt;
}

int FinCategory::compose(int g, int f) const {
  int r = compose_[static_cast<size_t>(g) * num_morphisms() + static_cast<size_t>(f)];
  if (r < 0)
    fail(ErrorCode::IllTypedComposite, mors_[static_cast<size_t>(g)].name + " after " + mors_[static_cast<size_t>(f)].name);
  return r;
}

std::vector<int> FinCategory::hom(int src, int tgt) const {
  std::vector<int> out;
  for (int f = 0; f < num_morphisms(); ++f)
    if (mors_[static_cast<size_t>(f)].src == src && mors_[static_cast<size_t>(f)].tgt == tgt) out.push_back(f);
  return out;
}

bool FinCategory::is_iso(int f) const {
  const Mor& m = mors_[static_cast<size_t>(f)];
  for (int g : hom(m.tgt, m.src))
    if (compose(g, f) == identity(m.src) && compose(f, g) == identity(m.tgt)) return true;
  return false;
}

bool FinCategory::thin() const {
  for (int a = 0; a < num_objects(); ++a)
    for (int b = 0; b < num_objects(); ++b)
      if (hom(a, b).size() > 1) return false;
  return true;
}

FinCategory poset_category(const Poset& p) {
  std::vector<FinCategory::Mor> mors;
  std::vector<int> ids(static_cast<size_t>(p.size()), -1);
  std::map<std::pair<int, int>, int> index;
  for (int a = 0; a < p.size(); ++a)
    for (int b = 0; b < p.size(); ++b)
      if (p.leq(a, b)) {
        index[{a, b}] = static_cast<int>(mors.size());
        mors.push_back({p.name(a) + "->" + p.name(b), a, b});
        if (a == b) ids[static_cast<size_t>(a)] = index[{a, b}];
      }
  std::vector<std::array<int, 3>> comps;
  for (const auto& [ab, f] : index)
    for (const auto& [bc, g] : index)
      if (ab.second == bc.first) comps.push_back({g, f, index.at({ab.first, bc.second})});
  return FinCategory::validate(p.names(), std::move(mors), std::move(ids), comps);
}

FinCategory finset_category(const std::vector<std::pair<std::string, std::vector<std::string>>>& sets,
                            FinSetData* data) {
  std::vector<std::string> objects;
  FinSetData local;
  for (const auto& [name, elems] : sets) {
    objects.push_back(name);
    local.elements.push_back(elems);
  }
  std::vector<FinCategory::Mor> mors;
  std::vector<std::vector<int>> tables;
  std::vector<int> ids(objects.size(), -1);
  const int no = static_cast<int>(objects.size());
  for (int a = 0; a < no; ++a) {
    const size_t ka = local.elements[static_cast<size_t>(a)].size();
    for (int b = 0; b < no; ++b) {
      const size_t kb = local.elements[static_cast<size_t>(b)].size();
      if (ka > 0 && kb == 0) continue;  // no maps from non-empty into empty
      // Enumerate all value tables in lexicographic order.
      std::vector<int> table(ka, 0);
      bool done = false;
      long long counter = 0;
      while (!done) {
        std::string nm = objects[static_cast<size_t>(a)] + "->" + objects[static_cast<size_t>(b)] + "#" + std::to_string(counter++);
        int idx = static_cast<int>(mors.size());
        mors.push_back({nm, a, b});
        tables.push_back(table);
        if (a == b) {
          bool is_id = true;
          for (size_t i = 0; i < ka; ++i)
            if (table[i] != static_cast<int>(i)) is_id = false;
          if (is_id) ids[static_cast<size_t>(a)] = idx;
        }
        // advance
        done = true;
        for (size_t i = 0; i < ka; ++i) {
          if (table[i] + 1 < static_cast<int>(kb)) {
            ++table[i];
            for (size_t j = 0; j < i; ++j) table[j] = 0;
            done = false;
            break;
          }
        }
        if (ka == 0) break;  // single empty map
      }
    }
  }
  std::vector<std::array<int, 3>> comps;
  const int nm = static_cast<int>(mors.size());
  auto table_lookup = [&](int a, int b, const std::vector<int>& t) -> int {
    for (int f = 0; f < nm; ++f)
      if (mors[static_cast<size_t>(f)].src == a && mors[static_cast<size_t>(f)].tgt == b && tables[static_cast<size_t>(f)] == t) return f;
    fail(ErrorCode::IllTypedComposite, "composite table not found");
  };
  for (int f = 0; f < nm; ++f)
    for (int g = 0; g < nm; ++g) {
      if (mors[static_cast<size_t>(f)].tgt != mors[static_cast<size_t>(g)].src) continue;
      std::vector<int> comp(tables[static_cast<size_t>(f)].size());
      for (size_t i = 0; i < comp.size(); ++i)
        comp[i] = tables[static_cast<size_t>(g)][static_cast<size_t>(tables[static_cast<size_t>(f)][i])];
      comps.push_back({g, f, table_lookup(mors[static_cast<size_t>(f)].src, mors[static_cast<size_t>(g)].tgt, comp)});
    }
  local.tables = std::move(tables);
  if (data) *data = local;
  FinCategory out = FinCategory::validate(std::move(objects), std::move(mors), std::move(ids), comps);
  out.attach_finset(std::move(local));
  return out;
}

FinCategory finset_sizes_category(const std::vector<int>& sizes, FinSetData* data) {
  std::vector<std::pair<std::string, std::vector<std::string>>> sets;
  for (int s : sizes) {
    std::vector<std::string> elems;
    for (int i = 0; i < s; ++i) elems.push_back("x" + std::to_string(i));
    sets.emplace_back("S" + std::to_string(s), elems);
  }
  return finset_category(sets, data);
}

FinCategory opposite_category(const FinCategory& c) {
  std::vector<FinCategory::Mor> mors;
  for (const auto& m : c.morphisms()) mors.push_back({m.name, m.tgt, m.src});
  std::vector<int> ids;
  for (int o = 0; o < c.num_objects(); ++o) ids.push_back(c.identity(o));
  std::vector<std::array<int, 3>> comps;
  for (int f = 0; f < c.num_morphisms(); ++f)
    for (int g = 0; g < c.num_morphisms(); ++g)
      if (c.mor(f).tgt == c.mor(g).src)
        comps.push_back({f, g, c.compose(g, f)});  // op: f after g = (g after f)^op
  return FinCategory::validate(c.objects(), std::move(mors), std::move(ids), comps);
}

bool is_pullback_square(const FinCategory& c, const CatSquare& sq) {
  const auto& f = c.mor(sq.f);
  const auto& g = c.mor(sq.g);
  const auto& h = c.mor(sq.h);
  const auto& k = c.mor(sq.k);
  if (f.src != g.src || f.tgt != h.src || g.tgt != k.src || h.tgt != k.tgt)
    fail(ErrorCode::NotCommuting, "square is not well-typed");
  if (c.compose(sq.h, sq.f) != c.compose(sq.k, sq.g))
    fail(ErrorCode::NotCommuting, "square does not commute");
  const int w = f.src;
  for (int wp = 0; wp < c.num_objects(); ++wp)
    for (int fp : c.hom(wp, f.tgt))
      for (int gp : c.hom(wp, g.tgt)) {
        if (c.compose(sq.h, fp) != c.compose(sq.k, gp)) continue;
        int count = 0;
        for (int u : c.hom(wp, w)) {
          if (c.compose(sq.f, u) == fp && c.compose(sq.g, u) == gp) ++count;
          if (count > 1) break;
        }
        if (count != 1) return false;
      }
  return true;
}

std::optional<PullbackResult> pullback(const FinCategory& c, int h, int k) {
  const auto& mh = c.mor(h);
  const auto& mk = c.mor(k);
  if (mh.tgt != mk.tgt) fail(ErrorCode::NotCommuting, "not a cospan");
  if (const FinSetData* sets = c.finset()) {
    // Fiber product: pairs (a, b) with h(a) = k(b), in lex order.
    const auto& th = sets->tables[static_cast<size_t>(h)];
    const auto& tk = sets->tables[static_cast<size_t>(k)];
    std::vector<std::pair<int, int>> fiber;
    for (int a = 0; a < static_cast<int>(th.size()); ++a)
      for (int b = 0; b < static_cast<int>(tk.size()); ++b)
        if (th[static_cast<size_t>(a)] == tk[static_cast<size_t>(b)]) fiber.emplace_back(a, b);
    for (int w = 0; w < c.num_objects(); ++w) {
      if (sets->elements[static_cast<size_t>(w)].size() != fiber.size()) continue;
      std::vector<int> t1(fiber.size()), t2(fiber.size());
      for (size_t i = 0; i < fiber.size(); ++i) {
        t1[i] = fiber[i].first;
        t2[i] = fiber[i].second;
      }
      std::optional<int> f, g;
      for (int m = 0; m < c.num_morphisms(); ++m) {
        if (c.mor(m).src != w) continue;
        if (c.mor(m).tgt == mh.src && sets->tables[static_cast<size_t>(m)] == t1 && !f) f = m;
        if (c.mor(m).tgt == mk.src && sets->tables[static_cast<size_t>(m)] == t2 && !g) g = m;
      }
      if (f && g) return PullbackResult{w, *f, *g};
    }
    // No object of the fiber's size: fall through to the generic search.
  }
  for (int w = 0; w < c.num_objects(); ++w)
    for (int f : c.hom(w, mh.src))
      for (int g : c.hom(w, mk.src)) {
        if (c.compose(h, f) != c.compose(k, g)) continue;
        if (is_pullback_square(c, {f, g, h, k})) return PullbackResult{w, f, g};
      }
  return std::nullopt;
}

std::optional<int> mediate(const FinCategory& c, int f, int g, int f_prime, int g_prime) {
  const int w = c.mor(f).src;
  const int wp = c.mor(f_prime).src;
  std::optional<int> found;
  for (int u : c.hom(wp, w)) {
    if (c.compose(f, u) == f_prime && c.compose(g, u) == g_prime) {
      if (found) return std::nullopt;  // not unique
      found = u;
    }
  }
  return found;
}

OverCategory overcategory(const FinCategory& c, int obj) {
  if (obj < 0 || obj >= c.num_objects()) fail(ErrorCode::UnknownObject);
  OverCategory out;
  std::vector<int> objs;  // morphisms into obj
  for (int f = 0; f < c.num_morphisms(); ++f)
    if (c.mor(f).tgt == obj) objs.push_back(f);
  std::vector<std::string> names;
  for (int f : objs) names.push_back(c.mor(f).name);
  std::vector<FinCategory::Mor> mors;
  std::vector<int> mor_proj;
  std::vector<int> ids(objs.size(), -1);
  std::map<std::pair<int, int>, std::vector<int>> local_index;
  for (size_t a = 0; a < objs.size(); ++a)
    for (size_t b = 0; b < objs.size(); ++b)
      for (int u : c.hom(c.mor(objs[a]).src, c.mor(objs[b]).src)) {
        if (c.compose(objs[b], u) != objs[a]) continue;  // triangle must commute
        int idx = static_cast<int>(mors.size());
        mors.push_back({names[a] + "=>" + names[b] + "[" + c.mor(u).name + "]",
                        static_cast<int>(a), static_cast<int>(b)});
        mor_proj.push_back(u);
        local_index[{static_cast<int>(a), static_cast<int>(b)}].push_back(idx);
        if (a == b && c.is_identity(u)) ids[a] = idx;
      }
  std::vector<std::array<int, 3>> comps;
  for (int f = 0; f < static_cast<int>(mors.size()); ++f)
    for (int g = 0; g < static_cast<int>(mors.size()); ++g) {
      if (mors[static_cast<size_t>(f)].tgt != mors[static_cast<size_t>(g)].src) continue;
      int comp_u = c.compose(mor_proj[static_cast<size_t>(g)], mor_proj[static_cast<size_t>(f)]);
      for (int cand : local_index[{mors[static_cast<size_t>(f)].src, mors[static_cast<size_t>(g)].tgt}])
        if (mor_proj[static_cast<size_t>(cand)] == comp_u) {
          comps.push_back({g, f, cand});
          break;
        }
    }
  out.category = FinCategory::validate(std::move(names), std::move(mors), std::move(ids), comps);
  out.object_mor = objs;
  for (int f : objs) out.projection_obj.push_back(c.mor(f).src);
  out.projection_mor = mor_proj;
  return out;
}

namespace {

std::optional<int> terminal_object(const FinCategory& c) {
  for (int t = 0; t < c.num_objects(); ++t) {
    bool ok = true;
    for (int a = 0; a < c.num_objects() && ok; ++a)
      if (c.hom(a, t).size() != 1) ok = false;
    if (ok) return t;
  }
  return std::nullopt;
}

std::string cospan_witness(const FinCategory& c, int h, int k) {
  return "cospan (" + c.mor(h).name + ", " + c.mor(k).name + ")";
}

}  // namespace

Report check_overcategory_limits(const FinCategory& c, int obj, const FinCategory* c_prime,
                                 const std::vector<int>* functor_obj,
                                 const std::vector<int>* functor_mor) {
  Report rep;
  // Hypothesis: C admits pullbacks.
  bool base_ok = true;
  std::string base_witness;
  for (int h = 0; h < c.num_morphisms() && base_ok; ++h)
    for (int k = 0; k < c.num_morphisms() && base_ok; ++k) {
      if (c.mor(h).tgt != c.mor(k).tgt) continue;
      if (!pullback(c, h, k)) {
        base_ok = false;
        base_witness = cospan_witness(c, h, k);
      }
    }
  rep.add("hypothesis:pullbacks", base_ok, base_witness);
  if (!base_ok) return rep;

  OverCategory over = overcategory(c, obj);
  const FinCategory& d = over.category;

  auto term = terminal_object(d);
  rep.add("overcategory:terminal", term.has_value(),
          term ? "" : "no terminal object over " + c.object_name(obj));

  // Binary products: limits of two-vertex discrete diagrams.
  for (int a = 0; a < d.num_objects(); ++a)
    for (int b = a; b < d.num_objects(); ++b) {
      auto lim = finite_limit(d, {a, b}, {});
      if (!lim)
        rep.add("overcategory:product", false,
                "(" + d.object_name(a) + ", " + d.object_name(b) + ")");
    }
  // Equalizers of parallel pairs.
  for (int f = 0; f < d.num_morphisms(); ++f)
    for (int g = f + 1; g < d.num_morphisms(); ++g) {
      if (d.mor(f).src != d.mor(g).src || d.mor(f).tgt != d.mor(g).tgt) continue;
      auto lim = finite_limit(d, {d.mor(f).src, d.mor(f).tgt},
                              {{0, 1, f}, {0, 1, g}});
      if (!lim) rep.add("overcategory:equalizer", false, d.mor(f).name + " || " + d.mor(g).name);
    }
  // Pullbacks of cospans.
  for (int h = 0; h < d.num_morphisms(); ++h)
    for (int k = 0; k < d.num_morphisms(); ++k) {
      if (d.mor(h).tgt != d.mor(k).tgt) continue;
      if (!pullback(d, h, k)) rep.add("overcategory:pullback", false, cospan_witness(d, h, k));
    }
  rep.add("overcategory:limits", true);

  if (c_prime && functor_obj && functor_mor) {
    // Preservation along the induced functor on overcategories.
    int image = (*functor_obj)[static_cast<size_t>(obj)];
    OverCategory over_p = overcategory(*c_prime, image);
    auto map_over_obj = [&](int od) -> int {
      int f = over.object_mor[static_cast<size_t>(od)];
      int fp = (*functor_mor)[static_cast<size_t>(f)];
      for (size_t i = 0; i < over_p.object_mor.size(); ++i)
        if (over_p.object_mor[i] == fp) return static_cast<int>(i);
      fail(ErrorCode::UnknownObject, "image object missing in target overcategory");
    };
    auto map_over_mor = [&](int md) -> int {
      int u = over.projection_mor[static_cast<size_t>(md)];
      int up = (*functor_mor)[static_cast<size_t>(u)];
      int sa = map_over_obj(d.mor(md).src);
      int sb = map_over_obj(d.mor(md).tgt);
      for (int cand = 0; cand < over_p.category.num_morphisms(); ++cand)
        if (over_p.category.mor(cand).src == sa && over_p.category.mor(cand).tgt == sb &&
            over_p.projection_mor[static_cast<size_t>(cand)] == up)
          return cand;
      fail(ErrorCode::UnknownObject, "image morphism missing in target overcategory");
    };
    if (term) {
      int t_img = map_over_obj(*term);
      auto t_prime = terminal_object(over_p.category);
      rep.add("preservation:terminal", t_prime && *t_prime == t_img);
    }
    for (int a = 0; a < d.num_objects(); ++a)
      for (int b = a; b < d.num_objects(); ++b) {
        auto lim = finite_limit(d, {a, b}, {});
        if (!lim) continue;
        // The image cone must again be universal.
        std::vector<int> img_legs;
        for (int leg : lim->legs) img_legs.push_back(map_over_mor(leg));
        bool universal = true;
        const FinCategory& dp = over_p.category;
        int apex_img = map_over_obj(lim->apex);
        for (int wp = 0; wp < dp.num_objects() && universal; ++wp)
          for (int l0 : dp.hom(wp, map_over_obj(a)))
            for (int l1 : dp.hom(wp, map_over_obj(b))) {
              int count = 0;
              for (int u : dp.hom(wp, apex_img))
                if (dp.compose(img_legs[0], u) == l0 && dp.compose(img_legs[1], u) == l1) ++count;
              if (count != 1) { universal = false; break; }
            }
        if (!universal)
          rep.add("preservation:product", false,
                  "(" + d.object_name(a) + ", " + d.object_name(b) + ")");
      }
    rep.add("preservation:checked", true);
  }
  return rep;
}

TruncationLevel truncation_level(const FinCategory& c, int f, int cap) {
  if (c.is_iso(f)) return TruncationLevel::bounded(-2);
  if (cap < 0) return TruncationLevel::infinite();
  auto pb = pullback(c, f, f);
  if (!pb) fail(ErrorCode::MissingPullback, "pullback of " + c.mor(f).name + " with itself");
  const int x = c.mor(f).src;
  auto diag = mediate(c, pb->to_x, pb->to_y, c.identity(x), c.identity(x));
  if (!diag) fail(ErrorCode::MissingPullback, "no diagonal for " + c.mor(f).name);
  TruncationLevel inner = truncation_level(c, *diag, cap - 1);
  if (inner.unbounded) return inner;
  return TruncationLevel::bounded(inner.level + 1);
}

EdgeClass::EdgeClass(const FinCategory& c, std::vector<int> members) {
  member_.assign(static_cast<size_t>(c.num_morphisms()), 0);
  for (int f : members) member_[static_cast<size_t>(f)] = 1;
  for (int o = 0; o < c.num_objects(); ++o) member_[static_cast<size_t>(c.identity(o))] = 1;
}

EdgeClass EdgeClass::all(const FinCategory& c) {
  std::vector<int> m;
  for (int f = 0; f < c.num_morphisms(); ++f) m.push_back(f);
  return EdgeClass(c, std::move(m));
}

EdgeClass EdgeClass::identities(const FinCategory& c) { return EdgeClass(c, {}); }

EdgeClass EdgeClass::from_names(const FinCategory& c, const std::vector<std::string>& names) {
  std::vector<int> m;
  for (const auto& nm : names) m.push_back(c.mor_index(nm));
  return EdgeClass(c, std::move(m));
}

std::vector<int> EdgeClass::members() const {
  std::vector<int> out;
  for (size_t i = 0; i < member_.size(); ++i)
    if (member_[i]) out.push_back(static_cast<int>(i));
  return out;
}

int EdgeClass::size() const {
  int n = 0;
  for (char m : member_) n += m;
  return n;
}

AdmissibleResult check_admissible(const FinCategory& c, const EdgeClass& e) {
  // (1) identities hold by construction of EdgeClass; re-check anyway.
  for (int o = 0; o < c.num_objects(); ++o)
    if (!e.contains(c.identity(o)))
      return {false, "identities", c.object_name(o)};
  // (2) pullback stability, over cospans whose canonical pullback exists.
  for (int f = 0; f < c.num_morphisms(); ++f) {
    if (!e.contains(f)) continue;
    for (int g = 0; g < c.num_morphisms(); ++g) {
      if (c.mor(f).tgt != c.mor(g).tgt) continue;
      auto pb = pullback(c, f, g);
      if (!pb) continue;
      if (!e.contains(pb->to_y))
        return {false, "pullback-stability",
                c.mor(f).name + " pulled back along " + c.mor(g).name + " gives " +
                    c.mor(pb->to_y).name};
    }
  }
  // (3) right cancellation.
  for (int q = 0; q < c.num_morphisms(); ++q)
    for (int p = 0; p < c.num_morphisms(); ++p) {
      if (c.mor(q).tgt != c.mor(p).src) continue;
      if (!e.contains(p)) continue;
      if (e.contains(c.compose(p, q)) && !e.contains(q))
        return {false, "right-cancellation", c.mor(p).name + " after " + c.mor(q).name};
    }
  return {};
}

CofilteredResult check_cofiltered(const FinCategory& c) {
  if (c.num_objects() == 0) return {false, "category is empty"};
  for (int x = 0; x < c.num_objects(); ++x)
    for (int y = x + 1; y < c.num_objects(); ++y) {
      bool cone = false;
      for (int w = 0; w < c.num_objects() && !cone; ++w)
        if (!c.hom(w, x).empty() && !c.hom(w, y).empty()) cone = true;
      if (!cone)
        return {false, "no common source for (" + c.object_name(x) + ", " + c.object_name(y) + ")"};
    }
  for (int f = 0; f < c.num_morphisms(); ++f)
    for (int g = f + 1; g < c.num_morphisms(); ++g) {
      if (c.mor(f).src != c.mor(g).src || c.mor(f).tgt != c.mor(g).tgt) continue;
      bool equalized = false;
      for (int h = 0; h < c.num_morphisms() && !equalized; ++h) {
        if (c.mor(h).tgt != c.mor(f).src) continue;
        if (c.compose(f, h) == c.compose(g, h)) equalized = true;
      }
      if (!equalized)
        return {false, "parallel pair (" + c.mor(f).name + ", " + c.mor(g).name + ") not equalized"};
    }
  return {};
}

std::optional<LimitCone> finite_limit(const FinCategory& c, const std::vector<int>& vertices,
                                      const std::vector<DiagramArrow>& arrows) {
  const size_t nv = vertices.size();
  std::vector<LimitCone> cones;
  for (int apex = 0; apex < c.num_objects(); ++apex) {
    // Enumerate natural leg tuples.
    std::vector<std::vector<int>> homs;
    bool possible = true;
    for (size_t i = 0; i < nv; ++i) {
      homs.push_back(c.hom(apex, vertices[i]));
      if (homs.back().empty()) { possible = false; break; }
    }
    if (!possible) continue;
    std::vector<size_t> pick(nv, 0);
    while (true) {
      std::vector<int> legs(nv);
      for (size_t i = 0; i < nv; ++i) legs[i] = homs[i][pick[i]];
      bool natural = true;
      for (const auto& ar : arrows)
        if (c.compose(ar.mor, legs[static_cast<size_t>(ar.src)]) != legs[static_cast<size_t>(ar.tgt)]) {
          natural = false;
          break;
        }
      if (natural) cones.push_back({apex, legs});
      size_t i = 0;
      for (; i < nv; ++i) {
        if (++pick[i] < homs[i].size()) break;
        pick[i] = 0;
      }
      if (i == nv) break;
    }
  }
  for (const auto& cone : cones) {
    bool universal = true;
    for (const auto& other : cones) {
      int count = 0;
      for (int u : c.hom(other.apex, cone.apex)) {
        bool match = true;
        for (size_t i = 0; i < nv && match; ++i)
          if (c.compose(cone.legs[i], u) != other.legs[i]) match = false;
        if (match) ++count;
      }
      if (count != 1) { universal = false; break; }
    }
    if (universal) return cone;
  }
  return std::nullopt;
}

}  // namespace gluecat
