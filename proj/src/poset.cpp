#include "gluecat/poset.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

namespace gluecat {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::DuplicateElement: return "DuplicateElement";
    case ErrorCode::UnknownElement: return "UnknownElement";
    case ErrorCode::UnknownObject: return "UnknownObject";
    case ErrorCode::SizeBudgetExceeded: return "SizeBudgetExceeded";
    case ErrorCode::BaseMismatch: return "BaseMismatch";
    case ErrorCode::NotSubcomplex: return "NotSubcomplex";
    case ErrorCode::NotInner: return "NotInner";
    case ErrorCode::MoveInvalid: return "MoveInvalid";
    case ErrorCode::NotComparable: return "NotComparable";
    case ErrorCode::NotAChain: return "NotAChain";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::HypothesisFailed: return "HypothesisFailed";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::MissingIdentity: return "MissingIdentity";
    case ErrorCode::IllTypedComposite: return "IllTypedComposite";
    case ErrorCode::NotCommuting: return "NotCommuting";
    case ErrorCode::MissingPullback: return "MissingPullback";
    case ErrorCode::MissingLimit: return "MissingLimit";
    case ErrorCode::GapNotInBothClasses: return "GapNotInBothClasses";
    case ErrorCode::NotFunctorial: return "NotFunctorial";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::EdgeClassViolation: return "EdgeClassViolation";
    case ErrorCode::TilingViolation: return "TilingViolation";
    case ErrorCode::UnsupportedType: return "UnsupportedType";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "UnknownError";
}

Poset Poset::validate(std::vector<std::string> elements,
                      const std::vector<std::pair<std::string, std::string>>& pairs) {
  Poset p;
  p.names_ = std::move(elements);
  const int n = p.size();
  {
    std::set<std::string> seen;
    for (const auto& name : p.names_) {
      if (!seen.insert(name).second) fail(ErrorCode::DuplicateElement, name);
    }
  }
  p.leq_.assign(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) p.leq_[static_cast<size_t>(i * n + i)] = 1;
  for (const auto& [a, b] : pairs) {
    p.leq_[static_cast<size_t>(p.index(a) * n + p.index(b))] = 1;
  }
  // Floyd-Warshall style transitive closure.
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      if (!p.leq_[static_cast<size_t>(i * n + k)]) continue;
      for (int j = 0; j < n; ++j)
        if (p.leq_[static_cast<size_t>(k * n + j)]) p.leq_[static_cast<size_t>(i * n + j)] = 1;
    }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (p.leq(i, j) && p.leq(j, i))
        fail(ErrorCode::CycleDetected, p.name(i) + " <-> " + p.name(j));
  return p;
}

int Poset::index(std::string_view name) const {
  auto found = find(name);
  if (!found) fail(ErrorCode::UnknownElement, std::string(name));
  return *found;
}

std::optional<int> Poset::find(std::string_view name) const {
  for (int i = 0; i < size(); ++i)
    if (names_[static_cast<size_t>(i)] == name) return i;
  return std::nullopt;
}

std::vector<std::pair<int, int>> Poset::covers() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < size(); ++a)
    for (int b = 0; b < size(); ++b) {
      if (!lt(a, b)) continue;
      bool direct = true;
      for (int z = 0; z < size() && direct; ++z)
        if (z != a && z != b && leq(a, z) && leq(z, b)) direct = false;
      if (direct) out.emplace_back(a, b);
    }
  return out;
}

std::vector<int> Poset::elements_leq(int x) const {
  std::vector<int> out;
  for (int z = 0; z < size(); ++z)
    if (leq(z, x)) out.push_back(z);
  return out;
}

std::vector<int> Poset::elements_geq(int x) const {
  std::vector<int> out;
  for (int z = 0; z < size(); ++z)
    if (leq(x, z)) out.push_back(z);
  return out;
}

std::vector<int> Poset::minimal_elements() const {
  std::vector<int> out;
  for (int x = 0; x < size(); ++x) {
    bool minimal = true;
    for (int z = 0; z < size() && minimal; ++z)
      if (lt(z, x)) minimal = false;
    if (minimal) out.push_back(x);
  }
  return out;
}

std::vector<int> Poset::maximal_elements() const {
  std::vector<int> out;
  for (int x = 0; x < size(); ++x) {
    bool maximal = true;
    for (int z = 0; z < size() && maximal; ++z)
      if (lt(x, z)) maximal = false;
    if (maximal) out.push_back(x);
  }
  return out;
}

std::optional<int> Poset::meet(int x, int y) const {
  std::optional<int> best;
  for (int z = 0; z < size(); ++z) {
    if (!leq(z, x) || !leq(z, y)) continue;
    if (!best || leq(*best, z)) best = z;
  }
  if (!best) return std::nullopt;
  // best must dominate every lower bound, not merely the ones scanned so far.
  for (int z = 0; z < size(); ++z)
    if (leq(z, x) && leq(z, y) && !leq(z, *best)) return std::nullopt;
  return best;
}

std::optional<int> Poset::join(int x, int y) const {
  std::optional<int> best;
  for (int z = 0; z < size(); ++z) {
    if (!leq(x, z) || !leq(y, z)) continue;
    if (!best || leq(z, *best)) best = z;
  }
  if (!best) return std::nullopt;
  for (int z = 0; z < size(); ++z)
    if (leq(x, z) && leq(y, z) && !leq(*best, z)) return std::nullopt;
  return best;
}

bool Poset::is_lattice() const {
  for (int x = 0; x < size(); ++x)
    for (int y = 0; y < size(); ++y)
      if (!meet(x, y) || !join(x, y)) return false;
  return true;
}

bool Poset::is_distributive_lattice() const {
  if (!is_lattice()) return false;
  for (int p = 0; p < size(); ++p)
    for (int q = 0; q < size(); ++q)
      for (int r = 0; r < size(); ++r) {
        int lhs = *join(p, *meet(q, r));
        int rhs = *meet(*join(p, q), *join(p, r));
        if (lhs != rhs) return false;
      }
  return true;
}

Poset Poset::restrict_to(const std::vector<int>& elems) const {
  Poset out;
  for (int e : elems) out.names_.push_back(name(e));
  const int n = static_cast<int>(elems.size());
  out.leq_.assign(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      out.leq_[static_cast<size_t>(i * n + j)] = leq(elems[static_cast<size_t>(i)], elems[static_cast<size_t>(j)]) ? 1 : 0;
  return out;
}

Poset Poset::product(const Poset& p, const Poset& q, std::vector<std::pair<int, int>>* coords) {
  Poset out;
  const int np = p.size(), nq = q.size();
  for (int i = 0; i < np; ++i)
    for (int j = 0; j < nq; ++j) {
      out.names_.push_back("(" + p.name(i) + "," + q.name(j) + ")");
      if (coords) coords->emplace_back(i, j);
    }
  const int n = np * nq;
  out.leq_.assign(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      out.leq_[static_cast<size_t>(i * n + j)] =
          (p.leq(i / nq, j / nq) && q.leq(i % nq, j % nq)) ? 1 : 0;
  return out;
}

Poset chain_poset(int n) {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> pairs;
  for (int i = 0; i <= n; ++i) names.push_back(std::to_string(i));
  for (int i = 0; i < n; ++i) pairs.emplace_back(std::to_string(i), std::to_string(i + 1));
  return Poset::validate(names, pairs);
}

int grid_index(int n, int row, int col) { return row * (n + 1) + col; }

Poset grid_poset(int n) {
  if (n < 0) fail(ErrorCode::OutOfRange, "grid size must be >= 0");
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> pairs;
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      names.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      if (i < n) pairs.emplace_back(names[static_cast<size_t>(grid_index(n, i, j))], names[static_cast<size_t>(grid_index(n, i + 1, j))]);
      if (j < n) pairs.emplace_back(names[static_cast<size_t>(grid_index(n, i, j))], names[static_cast<size_t>(grid_index(n, i, j + 1))]);
    }
  return Poset::validate(names, pairs);
}

LatticeOpsResult lattice_ops(const Poset& p, int x, int y, bool check_distributivity) {
  if (x < 0 || x >= p.size() || y < 0 || y >= p.size()) fail(ErrorCode::UnknownElement);
  LatticeOpsResult r;
  r.meet = p.meet(x, y);
  r.join = p.join(x, y);
  r.distributive_witness = check_distributivity && p.is_distributive_lattice();
  return r;
}

std::vector<int> interval_elements(const Poset& p, int x, int y) {
  if (x < 0 || x >= p.size() || y < 0 || y >= p.size()) fail(ErrorCode::UnknownElement);
  std::vector<int> elems;
  for (int z = 0; z < p.size(); ++z)
    if (p.leq(x, z) && p.leq(z, y)) elems.push_back(z);
  return elems;
}

Poset interval(const Poset& p, int x, int y) { return p.restrict_to(interval_elements(p, x, y)); }

bool is_exact_square(const Poset& p, const PosetSquare& sq) {
  for (int e : {sq.a, sq.b, sq.c, sq.d})
    if (e < 0 || e >= p.size()) fail(ErrorCode::UnknownElement);
  if (!p.leq(sq.a, sq.b) || !p.leq(sq.a, sq.c) || !p.leq(sq.b, sq.d) || !p.leq(sq.c, sq.d))
    return false;
  for (int z = 0; z < p.size(); ++z) {
    if (p.leq(z, sq.b) && p.leq(z, sq.c) && !p.leq(z, sq.a)) return false;  // not a pullback
    if (p.leq(sq.b, z) && p.leq(sq.c, z) && !p.leq(sq.d, z)) return false;  // not a pushout
  }
  return true;
}

int UpSet::count() const { return std::popcount(mask); }

std::vector<int> UpSet::members() const {
  std::vector<int> out;
  for (int e = 0; e < (base ? base->size() : 64); ++e)
    if (contains(e)) out.push_back(e);
  return out;
}

bool is_up_closed(const Poset& p, std::uint64_t mask) {
  for (int q = 0; q < p.size(); ++q) {
    if (!((mask >> q) & 1u)) continue;
    for (int r = 0; r < p.size(); ++r)
      if (p.leq(q, r) && !((mask >> r) & 1u)) return false;
  }
  return true;
}

std::uint64_t principal_up_set(const Poset& p, int e) {
  std::uint64_t m = 0;
  for (int z = 0; z < p.size(); ++z)
    if (p.leq(e, z)) m |= (1ull << z);
  return m;
}

std::string upset_name(const Poset& base, std::uint64_t mask) {
  if (mask == 0) return "empty";
  // Minimal members generate the up-set; a principal one keeps its base name.
  std::vector<int> mins;
  for (int e = 0; e < base.size(); ++e) {
    if (!((mask >> e) & 1u)) continue;
    bool minimal = true;
    for (int z = 0; z < base.size() && minimal; ++z)
      if (z != e && ((mask >> z) & 1u) && base.leq(z, e)) minimal = false;
    if (minimal) mins.push_back(e);
  }
  std::string out;
  for (size_t i = 0; i < mins.size(); ++i) {
    if (i) out += "^";
    out += "s" + base.name(mins[i]);
  }
  return out;
}

UpSetLattice upset_lattice(const Poset& p, bool include_empty, int size_budget) {
  if (p.size() > size_budget)
    fail(ErrorCode::SizeBudgetExceeded,
         "poset has " + std::to_string(p.size()) + " elements, budget " + std::to_string(size_budget));
  if (p.size() > 62) fail(ErrorCode::SizeBudgetExceeded, "bitmask limit");
  UpSetLattice out;
  out.base = std::make_shared<Poset>(p);
  std::vector<std::uint64_t> masks;
  for (std::uint64_t m = 0; m < (1ull << p.size()); ++m) {
    if (m == 0 && !include_empty) continue;
    if (is_up_closed(p, m)) masks.push_back(m);
  }
  // Canonical order: larger sets first (they sit lower under inverse
  // inclusion), ties by mask value.
  std::sort(masks.begin(), masks.end(), [](std::uint64_t a, std::uint64_t b) {
    int ca = std::popcount(a), cb = std::popcount(b);
    if (ca != cb) return ca > cb;
    return a < b;
  });
  out.mask_of = masks;
  std::vector<std::string> names;
  names.reserve(masks.size());
  for (auto m : masks) names.push_back(upset_name(p, m));
  std::vector<std::pair<std::string, std::string>> pairs;
  for (size_t i = 0; i < masks.size(); ++i)
    for (size_t j = 0; j < masks.size(); ++j)
      if (i != j && (masks[i] & masks[j]) == masks[j])  // Q_i >= Q_j as sets: Q_i <= Q_j
        pairs.emplace_back(names[i], names[j]);
  out.lattice = Poset::validate(names, pairs);
  out.embed.resize(static_cast<size_t>(p.size()));
  for (int e = 0; e < p.size(); ++e)
    out.embed[static_cast<size_t>(e)] = out.index_of_mask(principal_up_set(p, e));
  return out;
}

int UpSetLattice::index_of_mask(std::uint64_t mask) const {
  auto found = find_mask(mask);
  if (!found) fail(ErrorCode::UnknownElement, "up-set not in lattice");
  return *found;
}

std::optional<int> UpSetLattice::find_mask(std::uint64_t mask) const {
  for (size_t i = 0; i < mask_of.size(); ++i)
    if (mask_of[i] == mask) return static_cast<int>(i);
  return std::nullopt;
}

std::optional<int> UpSetLattice::join(int x, int y) const {
  return find_mask(mask_of[static_cast<size_t>(x)] & mask_of[static_cast<size_t>(y)]);
}

std::vector<FactorStep> factor_exact_pullbacks(const Poset& base, std::uint64_t q,
                                               std::uint64_t q_prime) {
  if ((q & q_prime) != q_prime)
    fail(ErrorCode::NotComparable, "Q does not contain Q'");
  if (!is_up_closed(base, q) || !is_up_closed(base, q_prime))
    fail(ErrorCode::NotComparable, "inputs must be up-sets");
  std::vector<FactorStep> steps;
  std::uint64_t cur = q;
  while (cur != q_prime) {
    // Lexicographically least element of cur - q_prime that is minimal in cur.
    int pick = -1;
    for (int e = 0; e < base.size(); ++e) {
      if (!((cur >> e) & 1u) || ((q_prime >> e) & 1u)) continue;
      bool minimal = true;
      for (int z = 0; z < base.size() && minimal; ++z)
        if (z != e && ((cur >> z) & 1u) && base.leq(z, e)) minimal = false;
      if (minimal) { pick = e; break; }
    }
    if (pick < 0) fail(ErrorCode::NotComparable, "no removable element");  // unreachable
    FactorStep st;
    st.removed = pick;
    st.q_before = cur;
    st.q_after = cur & ~(1ull << pick);
    st.principal = principal_up_set(base, pick);
    st.principal_minus = st.principal & ~(1ull << pick);
    steps.push_back(st);
    cur = st.q_after;
  }
  return steps;
}

}  // namespace gluecat
