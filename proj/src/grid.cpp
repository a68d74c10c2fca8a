#include "gluecat/grid.hpp"

#include <algorithm>

namespace gluecat {

GridSimplex::GridSimplex(FinCategoryPtr cat, int m, std::vector<int> objects,
                         std::vector<int> right, std::vector<int> down)
    : cat_(std::move(cat)), m_(m), objects_(std::move(objects)), right_(std::move(right)), down_(std::move(down)) {
  if (static_cast<int>(objects_.size()) != (m_ + 1) * (m_ + 1) ||
      static_cast<int>(right_.size()) != (m_ + 1) * m_ ||
      static_cast<int>(down_.size()) != m_ * (m_ + 1))
    fail(ErrorCode::ShapeMismatch, "grid data sizes");
}

int GridSimplex::arrow(int r, int c, int r2, int c2) const {
  if (r > r2 || c > c2) fail(ErrorCode::ShapeMismatch, "arrow direction");
  // Any staircase path gives the same composite once unit squares commute;
  // walk right first, then down.
  int cur = cat_->identity(object(r, c));
  int cc = c, rr = r;
  while (cc < c2) {
    cur = cat_->compose(right(rr, cc), cur);
    ++cc;
  }
  while (rr < r2) {
    cur = cat_->compose(down(rr, cc), cur);
    ++rr;
  }
  return cur;
}

GridSimplex GridSimplex::face(int k) const {
  if (k < 0 || k > m_) fail(ErrorCode::OutOfRange, "face index");
  if (m_ == 0) fail(ErrorCode::OutOfRange, "0-simplex has no faces");
  const int n = m_ - 1;
  auto keep = [&](int i) { return i < k ? i : i + 1; };
  std::vector<int> objs(static_cast<size_t>((n + 1) * (n + 1)));
  std::vector<int> rgt(static_cast<size_t>((n + 1) * n));
  std::vector<int> dwn(static_cast<size_t>(n * (n + 1)));
  for (int r = 0; r <= n; ++r)
    for (int c = 0; c <= n; ++c) objs[static_cast<size_t>(r * (n + 1) + c)] = object(keep(r), keep(c));
  for (int r = 0; r <= n; ++r)
    for (int c = 0; c < n; ++c)
      rgt[static_cast<size_t>(r * n + c)] = arrow(keep(r), keep(c), keep(r), keep(c + 1));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c <= n; ++c)
      dwn[static_cast<size_t>(r * (n + 1) + c)] = arrow(keep(r), keep(c), keep(r + 1), keep(c));
  return GridSimplex(cat_, n, std::move(objs), std::move(rgt), std::move(dwn));
}

namespace {

bool check_functorial(const GridSimplex& g, std::string* reason) {
  const auto& cat = *g.category();
  const int m = g.dim();
  for (int r = 0; r <= m; ++r)
    for (int c = 0; c < m; ++c) {
      int f = g.right(r, c);
      if (cat.mor(f).src != g.object(r, c) || cat.mor(f).tgt != g.object(r, c + 1)) {
        if (reason) *reason = "ill-typed row arrow";
        return false;
      }
    }
  for (int r = 0; r < m; ++r)
    for (int c = 0; c <= m; ++c) {
      int f = g.down(r, c);
      if (cat.mor(f).src != g.object(r, c) || cat.mor(f).tgt != g.object(r + 1, c)) {
        if (reason) *reason = "ill-typed column arrow";
        return false;
      }
    }
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < m; ++c) {
      int via_right = cat.compose(g.down(r, c + 1), g.right(r, c));
      int via_down = cat.compose(g.right(r + 1, c), g.down(r, c));
      if (via_right != via_down) {
        if (reason)
          *reason = "square (" + std::to_string(r) + "," + std::to_string(c) + ") does not commute";
        return false;
      }
    }
  return true;
}

}  // namespace

TruncationLevel tiling_level(const FinCategory& c, int top_right_down, int bottom_left_right,
                             int top_left_right, int top_left_down, const EdgeClass& e1,
                             const EdgeClass& e2, int cap) {
  auto pb = pullback(c, top_right_down, bottom_left_right);
  if (!pb)
    fail(ErrorCode::MissingPullback,
         "cospan (" + c.mor(top_right_down).name + ", " + c.mor(bottom_left_right).name + ")");
  auto gap = mediate(c, pb->to_x, pb->to_y, top_left_right, top_left_down);
  if (!gap) fail(ErrorCode::MissingPullback, "no gap morphism");
  if (!e1.contains(*gap) || !e2.contains(*gap))
    fail(ErrorCode::GapNotInBothClasses, c.mor(*gap).name);
  return truncation_level(c, *gap, cap);
}

bool grid_valid(const GridSimplex& g, const EdgeClass& e1, const EdgeClass& e2,
                const TilingDiscipline& discipline, std::string* reason) {
  if (!check_functorial(g, reason)) return false;
  const auto& cat = *g.category();
  const int m = g.dim();
  // Row spans in E2, column spans in E1 (composites included).
  for (int r = 0; r <= m; ++r)
    for (int c = 0; c <= m; ++c)
      for (int c2 = c; c2 <= m; ++c2)
        if (!e2.contains(g.arrow(r, c, r, c2))) {
          if (reason) *reason = "row span not in E2: " + cat.mor(g.arrow(r, c, r, c2)).name;
          return false;
        }
  for (int c = 0; c <= m; ++c)
    for (int r = 0; r <= m; ++r)
      for (int r2 = r; r2 <= m; ++r2)
        if (!e1.contains(g.arrow(r, c, r2, c))) {
          if (reason) *reason = "column span not in E1: " + cat.mor(g.arrow(r, c, r2, c)).name;
          return false;
        }
  if (discipline.kind == TilingDiscipline::Comm) return true;
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < m; ++c) {
      if (discipline.kind == TilingDiscipline::Cart) {
        if (!is_pullback_square(cat, {g.right(r, c), g.down(r, c), g.down(r, c + 1), g.right(r + 1, c)})) {
          if (reason)
            *reason = "square (" + std::to_string(r) + "," + std::to_string(c) + ") not a pullback";
          return false;
        }
      } else {
        try {
          TruncationLevel lvl = tiling_level(cat, g.down(r, c + 1), g.right(r + 1, c),
                                             g.right(r, c), g.down(r, c), e1, e2);
          if (!(lvl <= TruncationLevel::bounded(discipline.level))) {
            if (reason)
              *reason = "square (" + std::to_string(r) + "," + std::to_string(c) +
                        ") gap exceeds level " + std::to_string(discipline.level);
            return false;
          }
        } catch (const Error& e) {
          if (reason) *reason = e.what();
          return false;
        }
      }
    }
  return true;
}

GridSimplex grid_simplex(FinCategoryPtr cat, int m, const std::vector<int>& objects,
                         const std::vector<int>& right, const std::vector<int>& down,
                         const EdgeClass& e1, const EdgeClass& e2,
                         const TilingDiscipline& discipline) {
  GridSimplex g(std::move(cat), m, objects, right, down);
  std::string reason;
  if (!check_functorial(g, &reason)) fail(ErrorCode::NotFunctorial, reason);
  if (!grid_valid(g, e1, e2, discipline, &reason)) {
    if (reason.find("not a pullback") != std::string::npos ||
        reason.find("gap") != std::string::npos)
      fail(ErrorCode::TilingViolation, reason);
    fail(ErrorCode::EdgeClassViolation, reason);
  }
  return g;
}

std::vector<GridSimplex> enumerate_grid_simplices(FinCategoryPtr cat, const EdgeClass& e1,
                                                  const EdgeClass& e2, int m,
                                                  const TilingDiscipline& discipline,
                                                  long long budget) {
  const FinCategory& c = *cat;
  std::vector<GridSimplex> out;
  long long visited = 0;

  if (m == 0) {
    for (int o = 0; o < c.num_objects(); ++o)
      out.emplace_back(cat, 0, std::vector<int>{o}, std::vector<int>{}, std::vector<int>{});
    return out;
  }

  const int side = m + 1;
  std::vector<int> objs(static_cast<size_t>(side * side), -1);
  std::vector<int> rgt(static_cast<size_t>(side * m), -1);
  std::vector<int> dwn(static_cast<size_t>(m * side), -1);

  // Fill cells in row-major order; at each interior cell choose the pair of
  // incoming arrows so the unit square commutes.
  auto cell = [&](int idx) { return std::pair{idx / side, idx % side}; };

  auto rec = [&](auto&& self, int idx) -> void {
    if (++visited > budget) fail(ErrorCode::SizeBudgetExceeded, "grid enumeration budget");
    if (idx == side * side) {
      GridSimplex g(cat, m, objs, rgt, dwn);
      if (grid_valid(g, e1, e2, discipline)) out.push_back(g);
      return;
    }
    auto [r, cc] = cell(idx);
    if (r == 0 && cc == 0) {
      for (int o = 0; o < c.num_objects(); ++o) {
        objs[0] = o;
        self(self, idx + 1);
      }
      objs[0] = -1;
      return;
    }
    if (r == 0) {
      int src = objs[static_cast<size_t>(cc - 1)];
      for (int f = 0; f < c.num_morphisms(); ++f) {
        if (c.mor(f).src != src || !e2.contains(f)) continue;
        objs[static_cast<size_t>(cc)] = c.mor(f).tgt;
        rgt[static_cast<size_t>(cc - 1)] = f;
        self(self, idx + 1);
      }
      objs[static_cast<size_t>(cc)] = -1;
      rgt[static_cast<size_t>(cc - 1)] = -1;
      return;
    }
    if (cc == 0) {
      int src = objs[static_cast<size_t>((r - 1) * side)];
      for (int f = 0; f < c.num_morphisms(); ++f) {
        if (c.mor(f).src != src || !e1.contains(f)) continue;
        objs[static_cast<size_t>(r * side)] = c.mor(f).tgt;
        dwn[static_cast<size_t>((r - 1) * side)] = f;
        self(self, idx + 1);
      }
      objs[static_cast<size_t>(r * side)] = -1;
      dwn[static_cast<size_t>((r - 1) * side)] = -1;
      return;
    }
    int left = objs[static_cast<size_t>(r * side + cc - 1)];
    int up = objs[static_cast<size_t>((r - 1) * side + cc)];
    int up_left_right = rgt[static_cast<size_t>((r - 1) * m + cc - 1)];
    int left_up_down = dwn[static_cast<size_t>((r - 1) * side + cc - 1)];
    for (int f = 0; f < c.num_morphisms(); ++f) {  // right arrow from `left`
      if (c.mor(f).src != left || !e2.contains(f)) continue;
      for (int g = 0; g < c.num_morphisms(); ++g) {  // down arrow from `up`
        if (c.mor(g).src != up || !e1.contains(g)) continue;
        if (c.mor(f).tgt != c.mor(g).tgt) continue;
        if (c.compose(f, left_up_down) != c.compose(g, up_left_right)) continue;
        objs[static_cast<size_t>(r * side + cc)] = c.mor(f).tgt;
        rgt[static_cast<size_t>(r * m + cc - 1)] = f;
        dwn[static_cast<size_t>((r - 1) * side + cc)] = g;
        self(self, idx + 1);
      }
    }
    objs[static_cast<size_t>(r * side + cc)] = -1;
    rgt[static_cast<size_t>(r * m + cc - 1)] = -1;
    dwn[static_cast<size_t>((r - 1) * side + cc)] = -1;
  };
  rec(rec, 0);
  return out;
}

BisimplexSample sample_from_grid(const GridSimplex& g) {
  BisimplexSample s;
  s.cat = g.category();
  s.n1 = s.n2 = g.dim();
  const int side = g.dim() + 1;
  for (int r = 0; r < side; ++r)
    for (int c = 0; c < side; ++c) s.objects.push_back(g.object(r, c));
  for (int r = 0; r < side; ++r)
    for (int c = 0; c + 1 < side; ++c) s.right.push_back(g.right(r, c));
  for (int r = 0; r + 1 < side; ++r)
    for (int c = 0; c < side; ++c) s.down.push_back(g.down(r, c));
  return s;
}

ReshapeResult reshape(const BisimplexSample& sample, const ReshapeAction& action) {
  switch (action.kind) {
    case ReshapeAction::Diagonal: {
      if (sample.n1 != sample.n2) fail(ErrorCode::ShapeMismatch, "diagonal needs n1 == n2");
      if (sample.rev1 || sample.rev2)
        fail(ErrorCode::ShapeMismatch, "diagonal of a reversed sample");
      ChainInCat chain;
      chain.cat = sample.cat;
      const int n = sample.n1;
      for (int i = 0; i <= n; ++i) chain.objects.push_back(sample.object(i, i));
      for (int i = 0; i < n; ++i) {
        int step = sample.cat->compose(sample.down[static_cast<size_t>(i * (n + 1) + i + 1)],
                                       sample.right[static_cast<size_t>(i * sample.n2 + i)]);
        chain.arrows.push_back(step);
      }
      return chain;
    }
    case ReshapeAction::Restrict: {
      ChainInCat chain;
      chain.cat = sample.cat;
      if (action.direction == 1) {
        for (int r = 0; r <= sample.n1; ++r) chain.objects.push_back(sample.object(r, 0));
        for (int r = 0; r < sample.n1; ++r)
          chain.arrows.push_back(sample.down[static_cast<size_t>(r * (sample.n2 + 1))]);
      } else if (action.direction == 2) {
        for (int c = 0; c <= sample.n2; ++c) chain.objects.push_back(sample.object(0, c));
        for (int c = 0; c < sample.n2; ++c) chain.arrows.push_back(sample.right[static_cast<size_t>(c)]);
      } else {
        fail(ErrorCode::ShapeMismatch, "direction must be 1 or 2");
      }
      if (chain.objects.size() == 1) return chain.objects[0];
      return chain;
    }
    case ReshapeAction::PartialOp: {
      BisimplexSample out = sample;
      for (int dir : action.directions) {
        if (dir == 1) {
          // Flip the rows; the stored down arrows now read against the order.
          BisimplexSample flipped = out;
          for (int r = 0; r <= out.n1; ++r)
            for (int c = 0; c <= out.n2; ++c)
              flipped.objects[static_cast<size_t>((out.n1 - r) * (out.n2 + 1) + c)] = out.object(r, c);
          for (int r = 0; r < out.n1; ++r)
            for (int c = 0; c <= out.n2; ++c)
              flipped.down[static_cast<size_t>((out.n1 - 1 - r) * (out.n2 + 1) + c)] =
                  out.down[static_cast<size_t>(r * (out.n2 + 1) + c)];
          for (int r = 0; r <= out.n1; ++r)
            for (int c = 0; c < out.n2; ++c)
              flipped.right[static_cast<size_t>((out.n1 - r) * out.n2 + c)] =
                  out.right[static_cast<size_t>(r * out.n2 + c)];
          flipped.rev1 = !out.rev1;
          out = std::move(flipped);
        } else if (dir == 2) {
          BisimplexSample flipped = out;
          for (int r = 0; r <= out.n1; ++r)
            for (int c = 0; c <= out.n2; ++c)
              flipped.objects[static_cast<size_t>(r * (out.n2 + 1) + (out.n2 - c))] = out.object(r, c);
          for (int r = 0; r <= out.n1; ++r)
            for (int c = 0; c < out.n2; ++c)
              flipped.right[static_cast<size_t>(r * out.n2 + (out.n2 - 1 - c))] =
                  out.right[static_cast<size_t>(r * out.n2 + c)];
          for (int r = 0; r < out.n1; ++r)
            for (int c = 0; c <= out.n2; ++c)
              flipped.down[static_cast<size_t>(r * (out.n2 + 1) + (out.n2 - c))] =
                  out.down[static_cast<size_t>(r * (out.n2 + 1) + c)];
          flipped.rev2 = !out.rev2;
          out = std::move(flipped);
        } else {
          fail(ErrorCode::ShapeMismatch, "direction must be 1 or 2");
        }
      }
      return out;
    }
  }
  fail(ErrorCode::ShapeMismatch, "unknown action");
}

}  // namespace gluecat
