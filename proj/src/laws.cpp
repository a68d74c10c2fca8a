#include "gluecat/laws.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <random>
#include <set>

#include "gluecat/cartesianization.hpp"
#include "gluecat/grid.hpp"
#include "gluecat/nerve.hpp"

namespace gluecat {

Poset random_poset(std::uint64_t seed, int max_elements) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> size_dist(1, max_elements);
  std::uniform_real_distribution<double> prob(0.0, 1.0);
  const int n = size_dist(rng);
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));
  std::vector<std::pair<std::string, std::string>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (prob(rng) < 0.35) pairs.emplace_back(names[static_cast<size_t>(i)], names[static_cast<size_t>(j)]);
  return Poset::validate(names, pairs);
}

Report laws_poset_factorization(int num_posets, int max_elements, std::uint64_t seed) {
  Report rep;
  long long pairs_checked = 0, squares_checked = 0;
  for (int t = 0; t < num_posets; ++t) {
    Poset p = random_poset(seed + static_cast<std::uint64_t>(t), max_elements);
    UpSetLattice full = upset_lattice(p, /*include_empty=*/true);
    std::vector<std::uint64_t> nonempty;
    for (auto m : full.mask_of)
      if (m != 0) nonempty.push_back(m);
    for (auto q : nonempty)
      for (auto q2 : nonempty) {
        if ((q & q2) != q2) continue;  // need q >= q2 as sets
        ++pairs_checked;
        auto steps = factor_exact_pullbacks(p, q, q2);
        if (static_cast<int>(steps.size()) != std::popcount(q ^ q2)) {
          rep.add("factorization:step-count", false,
                  "poset " + std::to_string(t) + " |Q-Q'| mismatch");
          return rep;
        }
        std::uint64_t cur = q;
        for (const auto& st : steps) {
          if (st.q_before != cur || st.q_after != (cur & ~(1ull << st.removed))) {
            rep.add("factorization:chain", false, "poset " + std::to_string(t));
            return rep;
          }
          cur = st.q_after;
          PosetSquare sq{full.index_of_mask(st.q_before), full.index_of_mask(st.q_after),
                         full.index_of_mask(st.principal), full.index_of_mask(st.principal_minus)};
          ++squares_checked;
          if (!is_exact_square(full.lattice, sq)) {
            rep.add("factorization:exact", false,
                    "poset " + std::to_string(t) + " removing " + p.name(st.removed));
            return rep;
          }
        }
        if (cur != q2) {
          rep.add("factorization:target", false, "poset " + std::to_string(t));
          return rep;
        }
      }
  }
  rep.add("factorization", true,
          std::to_string(pairs_checked) + " pairs, " + std::to_string(squares_checked) + " squares");
  return rep;
}

Report laws_cartesianization(int n_struct, int n_laws, int n_epsilon) {
  Report rep;
  for (int n = 0; n <= n_struct; ++n) {
    CartLatticePtr cart = build_cart(n, std::max(n_struct, 4));
    bool ok = true;
    std::string witness;
    for (int p = 0; p <= n && ok; ++p)
      for (int q = 0; q <= n && ok; ++q) {
        int s = cart->sigma(p, q);
        GridPoint back = cart->pi(s);
        if (back.row != p || back.col != q) {
          ok = false;
          witness = "pi(sigma(" + std::to_string(p) + "," + std::to_string(q) + "))";
        }
        const Poset& lat = cart->lattice();
        if (!lat.leq(cart->xi(p, q), s) || !lat.leq(s, cart->eta(p, q))) {
          ok = false;
          witness = "xi <= sigma <= eta at (" + std::to_string(p) + "," + std::to_string(q) + ")";
        }
      }
    rep.add("structure-maps:n=" + std::to_string(n), ok, witness);
  }
  for (int n = 0; n <= n_laws; ++n) {
    CartLatticePtr cart = build_cart(n, std::max(n_laws, 4));
    const Poset& lat = cart->lattice();
    bool ok = true;
    std::string witness;
    // Lambda_p(x,x) = x = mu_q(x,x) for every x and parameter.
    for (int x = 0; x < cart->size() && ok; ++x)
      for (int p = 0; p <= n && ok; ++p)
        if (cart->lambda(p, x, x) != x || cart->mu(p, x, x) != x) {
          ok = false;
          witness = "lambda/mu idempotence at " + lat.name(x);
        }
    // pi of lambda/mu swaps the coordinates of the pair.
    for (int x = 0; x < cart->size() && ok; ++x)
      for (int y = 0; y < cart->size() && ok; ++y) {
        if (!lat.leq(x, y)) continue;
        for (int p = 0; p <= n && ok; ++p) {
          GridPoint pl = cart->pi(cart->lambda(p, x, y));
          GridPoint pm = cart->pi(cart->mu(p, x, y));
          GridPoint px = cart->pi(x), py = cart->pi(y);
          if (pl.row != py.row || pl.col != px.col || pm.row != px.row || pm.col != py.col) {
            ok = false;
            witness = "pi(lambda/mu) at (" + lat.name(x) + "," + lat.name(y) + "), p=" + std::to_string(p);
          }
        }
      }
    rep.add("lambda-mu:n=" + std::to_string(n), ok, witness);

    // Interval identity and coverage.
    ok = true;
    witness.clear();
    std::vector<char> covered(static_cast<size_t>(cart->size()), 0);
    for (int p = 0; p <= n && ok; ++p) {
      int lo = cart->xi(p, n), hi = cart->eta(p, n);
      for (int x = 0; x < cart->size(); ++x) {
        if (!lat.leq(lo, x) || !lat.leq(x, hi)) continue;
        covered[static_cast<size_t>(x)] = 1;
        for (int y = 0; y < cart->size(); ++y) {
          if (!lat.leq(x, y) || !lat.leq(y, hi)) continue;
          if (cart->meet(cart->lambda(0, x, y), cart->mu(0, x, y)) != x) {
            ok = false;
            witness = "lambda ∧ mu != x at (" + lat.name(x) + "," + lat.name(y) + ")";
            break;
          }
        }
        if (!ok) break;
      }
    }
    if (ok)
      for (int x = 0; x < cart->size(); ++x)
        if (!covered[static_cast<size_t>(x)]) {
          ok = false;
          witness = "coverage misses " + lat.name(x);
        }
    rep.add("interval-identity:n=" + std::to_string(n), ok, witness);
  }
  for (int n = 0; n <= n_epsilon; ++n) {
    CartLatticePtr cart = build_cart(n);
    SubNerve full = nerve(std::make_shared<Poset>(cart->lattice()));
    bool ok = true;
    std::string witness;
    for (const auto& chain : full.chains()) {
      if (!ok) break;
      std::vector<int> ch(chain.begin(), chain.end());
      EpsilonGrid grid = epsilon(*cart, ch);
      // Diagonal returns the chain itself.
      for (size_t i = 0; i < ch.size(); ++i)
        if (grid.lattice_entries[i * ch.size() + i] != ch[i]) {
          ok = false;
          witness = "diagonal mismatch";
        }
      // Faces commute with epsilon.
      if (ch.size() >= 2)
        for (size_t k = 0; k < ch.size() && ok; ++k) {
          std::vector<int> face = ch;
          face.erase(face.begin() + static_cast<long>(k));
          EpsilonGrid sub = epsilon(*cart, face);
          if (!(sub.grid == grid.grid.face(static_cast<int>(k)))) {
            ok = false;
            witness = "face " + std::to_string(k) + " mismatch";
          }
        }
    }
    rep.add("epsilon-faces:n=" + std::to_string(n), ok, witness);
  }
  return rep;
}

Report laws_truncation() {
  Report rep;
  FinSetData data;
  FinCategory c = finset_sizes_category({0, 1, 2, 3}, &data);
  auto injective = [&](int f) {
    const auto& t = data.tables[static_cast<size_t>(f)];
    for (size_t a = 0; a < t.size(); ++a)
      for (size_t b = a + 1; b < t.size(); ++b)
        if (t[a] == t[b]) return false;
    return true;
  };
  auto bijective = [&](int f) {
    return injective(f) && data.tables[static_cast<size_t>(f)].size() ==
                               data.elements[static_cast<size_t>(c.mor(f).tgt)].size();
  };
  bool ok = true;
  std::string witness;
  for (int f = 0; f < c.num_morphisms() && ok; ++f) {
    if (!injective(f)) continue;  // diagonal pullbacks may leave the size-3 budget
    TruncationLevel lvl = truncation_level(c, f);
    int expected = bijective(f) ? -2 : -1;
    if (lvl.unbounded || lvl.level != expected) {
      ok = false;
      witness = c.mor(f).name;
    }
  }
  rep.add("truncation:monos", ok, witness);

  // Gap law: for a pullback square over w' and an injective q: w' -> w, the
  // comparison into the pullback over w is an isomorphism.
  ok = true;
  witness.clear();
  long long checked = 0;
  for (int pprime = 0; pprime < c.num_morphisms() && ok; ++pprime)
    for (int hprime = 0; hprime < c.num_morphisms() && ok; ++hprime) {
      if (c.mor(pprime).tgt != c.mor(hprime).tgt) continue;
      auto inner = pullback(c, pprime, hprime);
      if (!inner) continue;
      const int wprime = c.mor(pprime).tgt;
      for (int q = 0; q < c.num_morphisms() && ok; ++q) {
        if (c.mor(q).src != wprime || !injective(q)) continue;
        auto outer = pullback(c, c.compose(q, pprime), c.compose(q, hprime));
        if (!outer) continue;
        auto gap = mediate(c, outer->to_x, outer->to_y, inner->to_x, inner->to_y);
        if (!gap) {
          ok = false;
          witness = "no gap for q=" + c.mor(q).name;
          break;
        }
        ++checked;
        TruncationLevel lvl = truncation_level(c, *gap);
        if (lvl.unbounded || lvl.level != -2) {
          ok = false;
          witness = "gap not iso for q=" + c.mor(q).name + ", square (" + c.mor(pprime).name +
                    "," + c.mor(hprime).name + ")";
        }
      }
    }
  rep.add("truncation:gap-decrease", ok,
          ok ? std::to_string(checked) + " diagrams" : witness);
  return rep;
}

Poset n_poset() {
  return Poset::validate({"p", "q", "r", "s"}, {{"p", "r"}, {"q", "r"}, {"q", "s"}});
}

namespace {

/// All transitively closed subsets of {(i,j) : i < j < n}, i.e. every
/// naturally labeled poset on n elements.
void enumerate_labeled_posets(int n, const std::function<void(const Poset&)>& visit) {
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  const size_t total = 1ull << slots.size();
  for (size_t bits = 0; bits < total; ++bits) {
    std::vector<std::vector<char>> rel(static_cast<size_t>(n), std::vector<char>(static_cast<size_t>(n), 0));
    for (size_t s = 0; s < slots.size(); ++s)
      if ((bits >> s) & 1u) rel[static_cast<size_t>(slots[s].first)][static_cast<size_t>(slots[s].second)] = 1;
    bool transitive = true;
    for (int i = 0; i < n && transitive; ++i)
      for (int j = i + 1; j < n && transitive; ++j) {
        if (!rel[static_cast<size_t>(i)][static_cast<size_t>(j)]) continue;
        for (int k = j + 1; k < n; ++k)
          if (rel[static_cast<size_t>(j)][static_cast<size_t>(k)] && !rel[static_cast<size_t>(i)][static_cast<size_t>(k)]) {
            transitive = false;
            break;
          }
      }
    if (!transitive) continue;
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> pairs;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rel[static_cast<size_t>(i)][static_cast<size_t>(j)]) pairs.emplace_back(names[static_cast<size_t>(i)], names[static_cast<size_t>(j)]);
    visit(Poset::validate(names, pairs));
  }
}

}  // namespace

Report laws_overcat(int max_elements) {
  Report rep;
  long long lattices = 0;
  bool ok = true;
  std::string witness;
  for (int n = 1; n <= max_elements && ok; ++n) {
    enumerate_labeled_posets(n, [&](const Poset& p) {
      if (!ok || !p.is_lattice()) return;
      ++lattices;
      FinCategory c = poset_category(p);
      for (int obj = 0; obj < c.num_objects() && ok; ++obj) {
        Report r = check_overcategory_limits(c, obj);
        if (!r.ok()) {
          ok = false;
          witness = "lattice on " + std::to_string(n) + " elements, object " + p.name(obj);
        }
      }
    });
  }
  rep.add("overcat:lattices", ok,
          ok ? std::to_string(lattices) + " lattices checked" : witness);

  FinCategory nc = poset_category(n_poset());
  Report r = check_overcategory_limits(nc, nc.object_index("r"));
  bool failed_right = !r.ok() && !r.checks.empty() && r.checks.front().name == "hypothesis:pullbacks" &&
                      !r.checks.front().ok && !r.checks.front().witness.empty();
  rep.add("overcat:n-poset-negative", failed_right,
          failed_right ? r.checks.front().witness : "expected pullback failure with witness");
  return rep;
}

Report laws_grids() {
  Report rep;
  struct Instance {
    std::string name;
    FinCategoryPtr cat;
    EdgeClass e1, e2;
    int max_level;
  };
  std::vector<Instance> corpus;
  {
    auto cat = std::make_shared<FinCategory>(poset_category(grid_poset(1)));
    std::vector<int> vertical, horizontal;
    for (int f = 0; f < cat->num_morphisms(); ++f) {
      // coordinate classes: constant column for E1, constant row for E2
      int src = cat->mor(f).src, tgt = cat->mor(f).tgt;
      if (src % 2 == tgt % 2) vertical.push_back(f);
      if (src / 2 == tgt / 2) horizontal.push_back(f);
    }
    corpus.push_back({"posetcat-grid1", cat, EdgeClass(*cat, vertical), EdgeClass(*cat, horizontal), -1});
  }
  {
    auto cat = std::make_shared<FinCategory>(finset_sizes_category({0, 1, 2}));
    corpus.push_back({"finset012-all", cat, EdgeClass::all(*cat), EdgeClass::all(*cat), 0});
  }
  for (const auto& inst : corpus) {
    for (int m = 1; m <= 2; ++m) {
      auto key_set = [&](const std::vector<GridSimplex>& v) {
        std::set<std::vector<int>> keys;
        for (const auto& g : v) {
          std::vector<int> key;
          for (int r = 0; r <= g.dim(); ++r)
            for (int cc = 0; cc <= g.dim(); ++cc) key.push_back(g.object(r, cc));
          for (int r = 0; r <= g.dim(); ++r)
            for (int cc = 0; cc < g.dim(); ++cc) key.push_back(g.right(r, cc));
          for (int r = 0; r < g.dim(); ++r)
            for (int cc = 0; cc <= g.dim(); ++cc) key.push_back(g.down(r, cc));
          keys.insert(std::move(key));
        }
        return keys;
      };
      auto comm = key_set(enumerate_grid_simplices(inst.cat, inst.e1, inst.e2, m, TilingDiscipline::comm()));
      auto cart = key_set(enumerate_grid_simplices(inst.cat, inst.e1, inst.e2, m, TilingDiscipline::cart()));
      auto trunc_m2 = key_set(enumerate_grid_simplices(inst.cat, inst.e1, inst.e2, m, TilingDiscipline::trunc(-2)));
      bool ok = cart == trunc_m2;
      std::string witness = ok ? "" : "Trunc(-2) != Cart";
      std::set<std::vector<int>> prev = cart;
      std::set<std::vector<int>> last;
      for (int lvl = -1; lvl <= inst.max_level && ok; ++lvl) {
        auto cur = key_set(enumerate_grid_simplices(inst.cat, inst.e1, inst.e2, m, TilingDiscipline::trunc(lvl)));
        if (!std::includes(cur.begin(), cur.end(), prev.begin(), prev.end())) {
          ok = false;
          witness = "Trunc(" + std::to_string(lvl) + ") loses simplices";
        }
        prev = cur;
        last = cur;
      }
      if (ok) {
        const auto& top = inst.max_level >= -1 ? last : cart;
        if (!std::includes(comm.begin(), comm.end(), top.begin(), top.end()) || top != comm) {
          ok = false;
          witness = "union of truncations misses Comm";
        }
      }
      rep.add("grids:" + inst.name + ":m=" + std::to_string(m), ok, witness);
    }
  }
  return rep;
}

}  // namespace gluecat
