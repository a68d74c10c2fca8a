#include "gluecat/compactification.hpp"

#include <algorithm>

namespace gluecat {

namespace {

std::string cpt_name(int i, int j) {
  if (i <= 9 && j <= 9) return "a" + std::to_string(i) + std::to_string(j);
  return "a(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

Poset build_cpt(int n) {
  if (n < 0) fail(ErrorCode::OutOfRange, "n must be >= 0");
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> pairs;
  for (int i = 0; i <= n; ++i)
    for (int j = i; j <= n; ++j) names.push_back(cpt_name(i, j));
  for (int i = 0; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      if (j < n) pairs.emplace_back(cpt_name(i, j), cpt_name(i, j + 1));
      if (i + 1 <= j) pairs.emplace_back(cpt_name(i, j), cpt_name(i + 1, j));
    }
  return Poset::validate(names, pairs);
}

int cpt_element_index(const Poset& cpt, int n, int i, int j) {
  if (i < 0 || j < i || j > n) fail(ErrorCode::OutOfRange, "not a Cpt element");
  return cpt.index(cpt_name(i, j));
}

std::pair<int, int> cpt_coords(const Poset& cpt, int elem) {
  const std::string& nm = cpt.name(elem);
  if (nm.size() == 3 && nm[0] == 'a') return {nm[1] - '0', nm[2] - '0'};
  auto comma = nm.find(',');
  return {std::stoi(nm.substr(2, comma - 2)), std::stoi(nm.substr(comma + 1))};
}

std::vector<std::vector<int>> box_pieces(int n) {
  Poset cpt = build_cpt(n);
  std::vector<std::vector<int>> out;
  for (int i = 0; i <= n; ++i)
    out.push_back(interval_elements(cpt, cpt_element_index(cpt, n, 0, i),
                                    cpt_element_index(cpt, n, i, n)));
  return out;
}

SubNerve cpt_nerve(int n) { return nerve(std::make_shared<Poset>(build_cpt(n))); }

SubNerve build_box(int n) {
  auto base = std::make_shared<Poset>(build_cpt(n));
  SubNerve out(base);
  for (const auto& piece : box_pieces(n)) {
    Poset sub = base->restrict_to(piece);
    SubNerve piece_nerve = nerve(std::make_shared<Poset>(sub));
    for (const auto& c : piece_nerve.chains()) {
      Chain lifted;
      for (int e : c) lifted.push_back(base->index(sub.name(e)));
      out.insert_raw(lifted);
    }
  }
  return out;
}

DiagonalSimplex diagonal_from_morphisms(const FinCategory& c, const std::vector<int>& arrows) {
  DiagonalSimplex tau;
  tau.arrows = arrows;
  if (arrows.empty()) fail(ErrorCode::ShapeMismatch, "need at least one object; use the single-object overload");
  tau.objects.push_back(c.mor(arrows[0]).src);
  for (size_t i = 0; i < arrows.size(); ++i) {
    if (c.mor(arrows[i]).src != tau.objects.back())
      fail(ErrorCode::ShapeMismatch, "arrows do not compose into a chain");
    tau.objects.push_back(c.mor(arrows[i]).tgt);
  }
  return tau;
}

int Compactification::arrow(int i, int j, int k, int l) const {
  if (k < i || l < j) fail(ErrorCode::ShapeMismatch, "arrow direction");
  int cur = cat->identity(value.at({i, j}));
  int jj = j;
  while (jj < l) {
    cur = cat->compose(horizontal.at({i, jj}), cur);
    ++jj;
  }
  int ii = i;
  while (ii < k) {
    cur = cat->compose(vertical.at({ii, l}), cur);
    ++ii;
  }
  return cur;
}

KptCategory enumerate_kpt(FinCategoryPtr cat, const EdgeClass& e1, const EdgeClass& e2,
                          const DiagonalSimplex& tau, long long budget) {
  const FinCategory& c = *cat;
  const int n = tau.n();
  if (n < 0) fail(ErrorCode::ShapeMismatch, "empty diagonal");

  // Row-major element order (i,i), (i,i+1), ..., matching build_cpt.
  std::vector<std::pair<int, int>> order;
  for (int i = 0; i <= n; ++i)
    for (int j = i; j <= n; ++j) order.emplace_back(i, j);

  std::vector<Compactification> objects;
  Compactification cur;
  cur.cat = cat;
  cur.n = n;
  long long visited = 0;

  auto assign = [&](auto&& self, size_t idx) -> void {
    if (++visited > budget) fail(ErrorCode::SizeBudgetExceeded, "kpt enumeration budget");
    if (idx == order.size()) {
      objects.push_back(cur);
      return;
    }
    auto [i, j] = order[idx];
    if (i == j) {
      cur.value[{i, j}] = tau.objects[static_cast<size_t>(i)];
      if (i == 0) {
        self(self, idx + 1);
      } else {
        // The arrow (i-1,i) -> (i,i) must close the diagonal triangle.
        int w = cur.value.at({i - 1, i});
        for (int v = 0; v < c.num_morphisms(); ++v) {
          if (c.mor(v).src != w || c.mor(v).tgt != tau.objects[static_cast<size_t>(i)]) continue;
          if (!e1.contains(v)) continue;
          if (c.compose(v, cur.horizontal.at({i - 1, i - 1})) != tau.arrows[static_cast<size_t>(i - 1)]) continue;
          cur.vertical[{i - 1, j}] = v;
          self(self, idx + 1);
          cur.vertical.erase({i - 1, j});
        }
      }
      cur.value.erase({i, j});
      return;
    }
    // Off-diagonal (i,j), j > i: pick the object together with the incoming
    // horizontal arrow from (i,j-1) and, for i >= 1, the incoming vertical
    // arrow from (i-1,j) subject to the square over (i-1,j-1).
    int left = cur.value.at({i, j - 1});
    for (int h = 0; h < c.num_morphisms(); ++h) {
      if (c.mor(h).src != left || !e2.contains(h)) continue;
      int obj = c.mor(h).tgt;
      if (i == 0) {
        cur.value[{i, j}] = obj;
        cur.horizontal[{i, j - 1}] = h;
        self(self, idx + 1);
        cur.value.erase({i, j});
        cur.horizontal.erase({i, j - 1});
        continue;
      }
      int up = cur.value.at({i - 1, j});
      int lhs = c.compose(h, cur.vertical.at({i - 1, j - 1}));
      for (int v = 0; v < c.num_morphisms(); ++v) {
        if (c.mor(v).src != up || c.mor(v).tgt != obj || !e1.contains(v)) continue;
        if (c.compose(v, cur.horizontal.at({i - 1, j - 1})) != lhs) continue;
        cur.value[{i, j}] = obj;
        cur.horizontal[{i, j - 1}] = h;
        cur.vertical[{i - 1, j}] = v;
        self(self, idx + 1);
        cur.value.erase({i, j});
        cur.horizontal.erase({i, j - 1});
        cur.vertical.erase({i - 1, j});
      }
    }
  };
  assign(assign, 0);

  KptCategory out;
  out.objects = objects;
  out.cpt_order = order;

  // Natural transformations with all components in E1.
  std::vector<FinCategory::Mor> mors;
  std::vector<std::vector<int>> comps;
  std::vector<int> ids(objects.size(), -1);
  auto natural = [&](const Compactification& a, const Compactification& b,
                     const std::vector<int>& comp) {
    for (size_t idx = 0; idx < order.size(); ++idx) {
      auto [i, j] = order[idx];
      auto component_at = [&](int ii, int jj) {
        for (size_t k = 0; k < order.size(); ++k)
          if (order[k] == std::pair{ii, jj}) return comp[k];
        fail(ErrorCode::ShapeMismatch, "component lookup");
      };
      if (j < n) {
        int lhs = c.compose(component_at(i, j + 1), a.horizontal.at({i, j}));
        int rhs = c.compose(b.horizontal.at({i, j}), comp[idx]);
        if (lhs != rhs) return false;
      }
      if (i + 1 <= j) {
        int lhs = c.compose(component_at(i + 1, j), a.vertical.at({i, j}));
        int rhs = c.compose(b.vertical.at({i, j}), comp[idx]);
        if (lhs != rhs) return false;
      }
    }
    return true;
  };
  for (size_t a = 0; a < objects.size(); ++a)
    for (size_t b = 0; b < objects.size(); ++b) {
      // Enumerate component tuples in E1.
      std::vector<std::vector<int>> cand(order.size());
      bool possible = true;
      for (size_t idx = 0; idx < order.size() && possible; ++idx) {
        auto [i, j] = order[idx];
        for (int f : c.hom(objects[a].value.at({i, j}), objects[b].value.at({i, j})))
          if (e1.contains(f)) cand[idx].push_back(f);
        if (cand[idx].empty()) possible = false;
      }
      if (!possible) continue;
      std::vector<size_t> pick(order.size(), 0);
      while (true) {
        if (++visited > budget) fail(ErrorCode::SizeBudgetExceeded, "kpt morphism budget");
        std::vector<int> comp(order.size());
        for (size_t idx = 0; idx < order.size(); ++idx) comp[idx] = cand[idx][pick[idx]];
        if (natural(objects[a], objects[b], comp)) {
          int idx = static_cast<int>(mors.size());
          mors.push_back({"t" + std::to_string(a) + "_" + std::to_string(b) + "#" +
                              std::to_string(comps.size()),
                          static_cast<int>(a), static_cast<int>(b)});
          comps.push_back(comp);
          if (a == b) {
            bool is_id = true;
            for (size_t k = 0; k < order.size(); ++k) {
              auto [i, j] = order[k];
              if (comp[k] != c.identity(objects[a].value.at({i, j}))) is_id = false;
            }
            if (is_id) ids[a] = idx;
          }
        }
        size_t i = 0;
        for (; i < order.size(); ++i) {
          if (++pick[i] < cand[i].size()) break;
          pick[i] = 0;
        }
        if (i == order.size()) break;
      }
    }
  std::vector<std::array<int, 3>> table;
  for (size_t f = 0; f < mors.size(); ++f)
    for (size_t g = 0; g < mors.size(); ++g) {
      if (mors[f].tgt != mors[g].src) continue;
      std::vector<int> comp(order.size());
      for (size_t k = 0; k < order.size(); ++k) comp[k] = c.compose(comps[g][k], comps[f][k]);
      int found = -1;
      for (size_t h = 0; h < mors.size(); ++h)
        if (mors[h].src == mors[f].src && mors[h].tgt == mors[g].tgt && comps[h] == comp)
          found = static_cast<int>(h);
      if (found < 0) fail(ErrorCode::IllTypedComposite, "kpt composition not closed");
      table.push_back({static_cast<int>(g), static_cast<int>(f), found});
    }
  std::vector<std::string> names;
  for (size_t a = 0; a < objects.size(); ++a) names.push_back("c" + std::to_string(a));
  out.category = FinCategory::validate(std::move(names), std::move(mors), std::move(ids), table);
  out.transformation_components = std::move(comps);
  return out;
}

std::vector<AlphaCommEntry> alpha_comm(const Compactification& sigma) {
  const int n = sigma.n;
  Poset cpt = build_cpt(n);
  auto cptp = std::make_shared<Poset>(cpt);
  std::vector<AlphaCommEntry> out;
  for (int piece = 0; piece <= n; ++piece) {
    std::vector<int> elems = interval_elements(cpt, cpt_element_index(cpt, n, 0, piece),
                                               cpt_element_index(cpt, n, piece, n));
    // Every non-degenerate chain of the piece, in lex order.
    SubNerve piece_nerve(cptp);
    {
      Poset sub = cpt.restrict_to(elems);
      SubNerve local = nerve(std::make_shared<Poset>(sub));
      for (const auto& ch : local.chains()) {
        Chain lifted;
        for (int e : ch) lifted.push_back(cpt.index(sub.name(e)));
        piece_nerve.insert_raw(lifted);
      }
    }
    for (const auto& gamma : piece_nerve.chains()) {
      const int m = static_cast<int>(gamma.size()) - 1;
      std::vector<std::pair<int, int>> coords;
      for (int e : gamma) coords.push_back(cpt_coords(cpt, e));
      std::vector<int> objs(static_cast<size_t>((m + 1) * (m + 1)));
      std::vector<int> rgt(static_cast<size_t>((m + 1) * m));
      std::vector<int> dwn(static_cast<size_t>(m * (m + 1)));
      auto entry = [&](int r, int c) {
        // first coordinate from the row chain element, second from the column
        return std::pair{coords[static_cast<size_t>(r)].first, coords[static_cast<size_t>(c)].second};
      };
      for (int r = 0; r <= m; ++r)
        for (int c = 0; c <= m; ++c) objs[static_cast<size_t>(r * (m + 1) + c)] = sigma.value.at(entry(r, c));
      for (int r = 0; r <= m; ++r)
        for (int c = 0; c < m; ++c) {
          auto [i1, j1] = entry(r, c);
          auto [i2, j2] = entry(r, c + 1);
          rgt[static_cast<size_t>(r * m + c)] = sigma.arrow(i1, j1, i2, j2);
        }
      for (int r = 0; r < m; ++r)
        for (int c = 0; c <= m; ++c) {
          auto [i1, j1] = entry(r, c);
          auto [i2, j2] = entry(r + 1, c);
          dwn[static_cast<size_t>(r * (m + 1) + c)] = sigma.arrow(i1, j1, i2, j2);
        }
      out.push_back({piece, gamma, GridSimplex(sigma.cat, m, std::move(objs), std::move(rgt), std::move(dwn))});
    }
  }
  return out;
}

std::vector<AlphaCommEdge> alpha_comm_edge(const Compactification& from,
                                           const Compactification& to,
                                           const std::vector<int>& components,
                                           const std::vector<std::pair<int, int>>& cpt_order) {
  auto src_fam = alpha_comm(from);
  auto dst_fam = alpha_comm(to);
  if (src_fam.size() != dst_fam.size()) fail(ErrorCode::ShapeMismatch, "family size mismatch");
  Poset cpt = build_cpt(from.n);
  auto component_at = [&](int i, int j) {
    for (size_t k = 0; k < cpt_order.size(); ++k)
      if (cpt_order[k] == std::pair{i, j}) return components[k];
    fail(ErrorCode::ShapeMismatch, "component lookup");
  };
  std::vector<AlphaCommEdge> out;
  for (size_t k = 0; k < src_fam.size(); ++k) {
    AlphaCommEdge edge;
    edge.piece = src_fam[k].piece;
    edge.chain = src_fam[k].chain;
    edge.src = src_fam[k].grid;
    edge.dst = dst_fam[k].grid;
    const int m = edge.src.dim();
    std::vector<std::pair<int, int>> coords;
    for (int e : edge.chain) coords.push_back(cpt_coords(cpt, e));
    for (int r = 0; r <= m; ++r)
      for (int c = 0; c <= m; ++c)
        edge.components.push_back(component_at(coords[static_cast<size_t>(r)].first, coords[static_cast<size_t>(c)].second));
    out.push_back(std::move(edge));
  }
  return out;
}

}  // namespace gluecat
