#include "gluecat/anodyne.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace gluecat {

namespace {

std::string chain_str(const Poset& p, const Chain& c) {
  std::string s = "[";
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) s += ",";
    s += p.name(c[i]);
  }
  return s + "]";
}

/// All chains of `ambient` whose vertices lie in `elems`.
std::vector<Chain> chains_within(const Poset& ambient, const std::vector<int>& elems) {
  std::vector<int> sorted = elems;
  std::sort(sorted.begin(), sorted.end());
  std::vector<Chain> out;
  Chain cur;
  auto grow = [&](auto&& self) -> void {
    for (int z : sorted) {
      if (!cur.empty() && !ambient.lt(cur.back(), z)) continue;
      if (!cur.empty() && z < cur.back()) continue;  // keep index order consistent
      cur.push_back(z);
      out.push_back(cur);
      self(self);
      cur.pop_back();
    }
  };
  grow(grow);
  return out;
}

}  // namespace

SubNerve apply_move(const SubNerve& k, const HornMove& move) {
  const auto& c = move.chain;
  const int m = static_cast<int>(c.size()) - 1;
  if (m < 2) fail(ErrorCode::MoveInvalid, "top simplex must have dimension >= 2");
  if (move.face_index <= 0 || move.face_index >= m)
    fail(ErrorCode::MoveInvalid, "horn index must be strictly inner");
  if (k.contains(c)) fail(ErrorCode::MoveInvalid, "top simplex already present");
  Chain missing_face = chain_face(c, move.face_index);
  if (k.contains(missing_face)) fail(ErrorCode::MoveInvalid, "face " + std::to_string(move.face_index) + " already present");
  for (int j = 0; j <= m; ++j) {
    if (j == move.face_index) continue;
    if (!k.contains(chain_face(c, j)))
      fail(ErrorCode::MoveInvalid, "face " + std::to_string(j) + " absent");
  }
  SubNerve out = k;
  out.insert_raw(c);
  out.insert_raw(missing_face);
  return out;
}

bool validate_certificate(const AnodyneCertificate& cert, std::string* reason) {
  SubNerve cur = cert.start;
  if (!cur.face_closed()) {
    if (reason) *reason = "start complex not face-closed";
    return false;
  }
  for (size_t i = 0; i < cert.moves.size(); ++i) {
    try {
      cur = apply_move(cur, cert.moves[i]);
    } catch (const Error& e) {
      if (reason)
        *reason = "move " + std::to_string(i) + " (" + chain_str(*cur.base(), cert.moves[i].chain) +
                  ", k=" + std::to_string(cert.moves[i].face_index) + "): " + e.what();
      return false;
    }
  }
  if (!(cur == cert.target)) {
    if (reason) *reason = "final complex differs from target";
    return false;
  }
  return true;
}

std::optional<AnodyneCertificate> search_certificate(const SubNerve& a, const SubNerve& b,
                                                     long long budget) {
  if (!a.base() || !b.base() || !(*a.base() == *b.base())) fail(ErrorCode::BaseMismatch);
  if (!a.subcomplex_of(b)) fail(ErrorCode::NotSubcomplex);

  std::set<Chain> present(a.chains().begin(), a.chains().end());
  std::vector<Chain> missing;
  for (const auto& c : b.chains())
    if (!present.count(c)) missing.push_back(c);
  std::sort(missing.begin(), missing.end(), [](const Chain& x, const Chain& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  });
  if (missing.empty()) return AnodyneCertificate{a, b, {}};
  if (missing.size() % 2 != 0) return std::nullopt;  // moves add simplices in pairs

  std::set<Chain> absent(missing.begin(), missing.end());
  std::vector<HornMove> moves;
  long long visited = 0;

  // Depth-first: always target the least-dimensional missing simplex and try
  // every top that could attach it as an inner face.
  auto dfs = [&](auto&& self) -> bool {
    if (++visited > budget) return false;
    if (absent.empty()) return true;
    const Chain target = *std::min_element(
        absent.begin(), absent.end(), [](const Chain& x, const Chain& y) {
          if (x.size() != y.size()) return x.size() < y.size();
          return x < y;
        });
    const Poset& base = *b.base();
    for (int v = 0; v < base.size(); ++v) {
      // Build candidate top = target with v inserted; v must slot strictly
      // inside, giving an inner horn.
      size_t pos = 0;
      while (pos < target.size() && target[pos] != v &&
             base.lt(target[pos], v))
        ++pos;
      if (pos < target.size() && target[pos] == v) continue;
      if (pos == 0 || pos == target.size()) continue;  // would be an outer horn
      if (pos < target.size() && !base.lt(v, target[pos])) continue;
      Chain top = target;
      top.insert(top.begin() + static_cast<long>(pos), v);
      if (top.size() < 3) continue;
      if (present.count(top) || !absent.count(top)) continue;
      bool faces_ok = true;
      for (size_t j = 0; j < top.size() && faces_ok; ++j) {
        if (j == pos) continue;
        if (!present.count(chain_face(top, static_cast<int>(j)))) faces_ok = false;
      }
      if (!faces_ok) continue;
      present.insert(top);
      present.insert(target);
      absent.erase(top);
      absent.erase(target);
      moves.push_back({top, static_cast<int>(pos)});
      if (self(self)) return true;
      moves.pop_back();
      present.erase(top);
      present.erase(target);
      absent.insert(top);
      absent.insert(target);
      if (visited > budget) return false;
    }
    return false;
  };

  if (!dfs(dfs)) return std::nullopt;
  return AnodyneCertificate{a, b, std::move(moves)};
}

namespace detail {

std::vector<HornMove> cone_moves(const Poset& ambient, int apex,
                                 const std::vector<int>& a_elems,
                                 const std::vector<int>& b_elems,
                                 const std::vector<int>& retract) {
  std::vector<char> in_a(static_cast<size_t>(ambient.size()), 0);
  for (int e : a_elems) in_a[static_cast<size_t>(e)] = 1;
  std::map<int, int> m;  // b element -> greatest element of A below it
  for (size_t i = 0; i < b_elems.size(); ++i) m[b_elems[i]] = retract[i];

  struct Pair {
    Chain small, big;
    int insert_pos;  // position of the toggled vertex inside `big`
    int non_a;       // vertices of `small` outside A
  };
  std::vector<Pair> pairs;
  for (const Chain& sigma : chains_within(ambient, b_elems)) {
    int j = -1;
    for (size_t i = 0; i < sigma.size(); ++i)
      if (!in_a[static_cast<size_t>(sigma[i])]) { j = static_cast<int>(i); break; }
    if (j < 0) continue;  // inside A: its cone is already present
    const int v = m.at(sigma[static_cast<size_t>(j)]);
    if (std::find(sigma.begin(), sigma.end(), v) != sigma.end()) continue;  // big half
    Pair pr;
    pr.small = sigma;
    pr.big = sigma;
    pr.big.insert(pr.big.begin() + j, v);
    pr.insert_pos = j;
    pr.non_a = 0;
    for (int e : sigma)
      if (!in_a[static_cast<size_t>(e)]) ++pr.non_a;
    pairs.push_back(std::move(pr));
  }
  // Every face a move depends on belongs to a strictly earlier
  // (size, non-A-count) class, so this order makes each move valid.
  std::sort(pairs.begin(), pairs.end(), [](const Pair& x, const Pair& y) {
    if (x.small.size() != y.small.size()) return x.small.size() < y.small.size();
    if (x.non_a != y.non_a) return x.non_a < y.non_a;
    return x.small < y.small;
  });
  std::vector<HornMove> moves;
  moves.reserve(pairs.size());
  for (const auto& pr : pairs) {
    Chain top;
    top.reserve(pr.big.size() + 1);
    top.push_back(apex);
    top.insert(top.end(), pr.big.begin(), pr.big.end());
    moves.push_back({std::move(top), pr.insert_pos + 1});
  }
  return moves;
}

/// Shared peel recursion: ambient poset with current element sets for P, Q
/// and R (as ambient indices); emits cone moves for each peeled minimal
/// element of Q - P.
std::vector<HornMove> peel_certify(const Poset& ambient, const std::vector<int>& p_set,
                                   std::vector<int> q_set, const std::vector<int>& r_set) {
  std::vector<char> in_p(static_cast<size_t>(ambient.size()), 0);
  for (int e : p_set) in_p[static_cast<size_t>(e)] = 1;

  std::vector<HornMove> all;
  // Peel minimal elements of Q - P one at a time; the cone moves for the
  // element peeled first must come last, so collect in reverse.
  std::vector<std::vector<HornMove>> stages;
  while (true) {
    std::vector<int> diff;
    for (int e : q_set)
      if (!in_p[static_cast<size_t>(e)]) diff.push_back(e);
    if (diff.empty()) break;
    int q = -1;
    for (int e : diff) {
      bool minimal = true;
      for (int z : diff)
        if (z != e && ambient.lt(z, e)) { minimal = false; break; }
      if (minimal) { q = e; break; }
    }
    std::vector<int> q_prime;
    for (int e : q_set)
      if (e != q) q_prime.push_back(e);

    std::vector<int> a_elems;
    for (int e : q_prime)
      if (ambient.lt(q, e)) a_elems.push_back(e);
    std::vector<int> b_elems;
    {
      std::set<int> bset;
      for (int e : q_prime)
        if (ambient.lt(q, e)) bset.insert(e);
      for (int e : r_set)
        if (ambient.lt(q, e)) bset.insert(e);
      b_elems.assign(bset.begin(), bset.end());
    }
    std::vector<int> retract;
    retract.reserve(b_elems.size());
    for (int r : b_elems) {
      int best = -1;
      for (int x : a_elems) {
        if (!ambient.leq(x, r)) continue;
        if (best < 0 || ambient.leq(best, x)) best = x;
      }
      if (best < 0)
        fail(ErrorCode::HypothesisFailed,
             "pushouts: no element of P between " + ambient.name(q) + " and " + ambient.name(r));
      for (int x : a_elems)
        if (ambient.leq(x, r) && !ambient.leq(x, best))
          fail(ErrorCode::HypothesisFailed,
               "pushouts: comma poset below " + ambient.name(r) + " has no maximum");
      retract.push_back(best);
    }
    stages.push_back(cone_moves(ambient, q, a_elems, b_elems, retract));
    q_set = std::move(q_prime);
  }
  for (auto it = stages.rbegin(); it != stages.rend(); ++it)
    all.insert(all.end(), it->begin(), it->end());
  return all;
}

}  // namespace detail

Poset poset_pushout(const Poset& q, const Poset& r, const std::vector<std::string>& p_names) {
  std::vector<int> p_in_q, p_in_r;
  for (const auto& nm : p_names) {
    p_in_q.push_back(q.index(nm));
    p_in_r.push_back(r.index(nm));
  }
  for (size_t i = 0; i < p_names.size(); ++i)
    for (size_t j = 0; j < p_names.size(); ++j)
      if (q.leq(p_in_q[i], p_in_q[j]) != r.leq(p_in_r[i], p_in_r[j]))
        fail(ErrorCode::HypothesisFailed,
             "full-inclusion: P carries different orders in Q and R (" + p_names[i] + "," +
                 p_names[j] + ")");
  std::set<std::string> pset(p_names.begin(), p_names.end());
  std::vector<std::string> names = q.names();
  for (const auto& nm : r.names())
    if (!pset.count(nm)) names.push_back(nm);

  auto is_p = [&](const std::string& nm) { return pset.count(nm) > 0; };
  std::vector<std::pair<std::string, std::string>> pairs;
  for (int a = 0; a < q.size(); ++a)
    for (int b = 0; b < q.size(); ++b)
      if (q.lt(a, b)) pairs.emplace_back(q.name(a), q.name(b));
  for (int a = 0; a < r.size(); ++a)
    for (int b = 0; b < r.size(); ++b)
      if (r.lt(a, b)) pairs.emplace_back(r.name(a), r.name(b));
  // Cross relations flow through P only.
  for (int a = 0; a < q.size(); ++a) {
    if (is_p(q.name(a))) continue;
    for (int b = 0; b < r.size(); ++b) {
      if (is_p(r.name(b))) continue;
      bool below = false, above = false;
      for (size_t i = 0; i < p_names.size() && !(below && above); ++i) {
        if (q.leq(a, p_in_q[i]) && r.leq(p_in_r[i], b)) below = true;
        if (r.leq(b, p_in_r[i]) && q.leq(p_in_q[i], a)) above = true;
      }
      if (below) pairs.emplace_back(q.name(a), r.name(b));
      if (above) pairs.emplace_back(r.name(b), q.name(a));
    }
  }
  return Poset::validate(names, pairs);
}

namespace {

void check_pushout_hypotheses(const Poset& ambient, const std::vector<int>& p_set,
                              const std::vector<int>& q_set) {
  std::vector<char> in_p(static_cast<size_t>(ambient.size()), 0), in_q(static_cast<size_t>(ambient.size()), 0);
  for (int e : p_set) in_p[static_cast<size_t>(e)] = 1;
  for (int e : q_set) in_q[static_cast<size_t>(e)] = 1;
  // (3) P is an up-set of Q.
  for (int p : p_set)
    for (int x : q_set)
      if (ambient.leq(p, x) && !in_p[static_cast<size_t>(x)])
        fail(ErrorCode::HypothesisFailed,
             "up-set: " + ambient.name(p) + " <= " + ambient.name(x) + " leaves P");
  // (1) Q admits pushouts and they are preserved in S (= the whole ambient
  // poset here; callers pass S as the ambient).
  for (int a : q_set)
    for (int b : q_set)
      for (int c : q_set) {
        if (!ambient.leq(a, b) || !ambient.leq(a, c)) continue;
        int join = -1;
        for (int z : q_set) {
          if (!ambient.leq(b, z) || !ambient.leq(c, z)) continue;
          if (join < 0 || ambient.leq(z, join)) join = z;
        }
        bool ok = join >= 0;
        for (int z : q_set)
          if (ok && ambient.leq(b, z) && ambient.leq(c, z) && !ambient.leq(join, z)) ok = false;
        if (!ok)
          fail(ErrorCode::HypothesisFailed, "pushouts: span (" + ambient.name(b) + "," +
                                                ambient.name(c) + ") has no pushout in Q");
        // Preservation: join stays least among upper bounds in the ambient.
        for (int z = 0; z < ambient.size(); ++z)
          if (ambient.leq(b, z) && ambient.leq(c, z) && !ambient.leq(join, z))
            fail(ErrorCode::HypothesisFailed,
                 "pushouts: pushout of (" + ambient.name(b) + "," + ambient.name(c) +
                     ") is not preserved in S");
      }
}

SubNerve union_of_nerves(const PosetPtr& base, const std::vector<std::vector<int>>& parts) {
  SubNerve out(base);
  for (const auto& elems : parts)
    for (const auto& c : chains_within(*base, elems)) out.insert_raw(c);
  return out;
}

}  // namespace

AnodyneCertificate certify_poset_pushout(const Poset& q, const Poset& r,
                                         const std::vector<std::string>& p_names) {
  Poset s = poset_pushout(q, r, p_names);
  auto base = std::make_shared<Poset>(std::move(s));
  std::vector<int> p_set, q_set, r_set;
  for (const auto& nm : p_names) p_set.push_back(base->index(nm));
  for (const auto& nm : q.names()) q_set.push_back(base->index(nm));
  for (const auto& nm : r.names()) r_set.push_back(base->index(nm));

  check_pushout_hypotheses(*base, p_set, q_set);

  AnodyneCertificate cert;
  cert.start = union_of_nerves(base, {q_set, r_set});
  cert.target = nerve(base);
  cert.moves = detail::peel_certify(*base, p_set, q_set, r_set);
  return cert;
}

AnodyneCertificate certify_interval_union(const Poset& p, const std::vector<int>& p_list,
                                          const std::vector<int>& q_list) {
  if (p_list.size() != q_list.size() || p_list.empty())
    fail(ErrorCode::HypothesisFailed, "chains: p and q lists must be non-empty and equal length");
  const size_t l = p_list.size();
  for (size_t j = 0; j + 1 < l; ++j) {
    if (!p.leq(p_list[j], p_list[j + 1]))
      fail(ErrorCode::HypothesisFailed, "chains: p list not ascending");
    if (!p.leq(q_list[j], q_list[j + 1]))
      fail(ErrorCode::HypothesisFailed, "chains: q list not ascending");
  }
  for (size_t j = 1; j < l; ++j)
    if (!p.leq(p_list[j], q_list[j - 1]))
      fail(ErrorCode::HypothesisFailed, "chains: p_j <= q_{j-1} fails at j=" + std::to_string(j));

  auto base = std::make_shared<Poset>(p);
  std::vector<std::vector<int>> pieces;
  for (size_t j = 0; j < l; ++j) pieces.push_back(interval_elements(p, p_list[j], q_list[j]));

  AnodyneCertificate cert;
  cert.start = union_of_nerves(base, pieces);
  std::vector<HornMove> moves;

  std::set<int> cur(pieces[0].begin(), pieces[0].end());
  for (size_t k = 1; k < l; ++k) {
    std::vector<int> q_set(cur.begin(), cur.end());
    const std::vector<int>& r_set = pieces[k];
    std::vector<int> p_set;
    for (int e : r_set)
      if (cur.count(e)) p_set.push_back(e);
    // The union carries the pushout order: cross relations must factor
    // through the intersection.
    std::vector<char> in_p(static_cast<size_t>(p.size()), 0);
    for (int e : p_set) in_p[static_cast<size_t>(e)] = 1;
    for (int x : q_set)
      for (int y : r_set) {
        if (in_p[static_cast<size_t>(x)] || in_p[static_cast<size_t>(y)]) continue;
        for (auto [u, v] : {std::pair{x, y}, std::pair{y, x}}) {
          if (!p.leq(u, v)) continue;
          bool through = false;
          for (int w : p_set)
            if (p.leq(u, w) && p.leq(w, v)) { through = true; break; }
          if (!through)
            fail(ErrorCode::HypothesisFailed, "pushout-order: " + p.name(u) + " <= " + p.name(v) +
                                                  " does not factor through the intersection");
        }
      }
    // Hypotheses are stated for Q inside S = Q ∪ R.
    std::set<int> s_set(cur.begin(), cur.end());
    s_set.insert(r_set.begin(), r_set.end());
    {
      std::vector<int> s_elems(s_set.begin(), s_set.end());
      Poset s_poset = p.restrict_to(s_elems);
      std::vector<int> p_local, q_local;
      for (size_t i = 0; i < s_elems.size(); ++i) {
        if (in_p[static_cast<size_t>(s_elems[i])]) p_local.push_back(static_cast<int>(i));
        if (cur.count(s_elems[i])) q_local.push_back(static_cast<int>(i));
      }
      check_pushout_hypotheses(s_poset, p_local, q_local);
    }
    auto stage = detail::peel_certify(p, p_set, q_set, r_set);
    moves.insert(moves.end(), stage.begin(), stage.end());
    cur = std::move(s_set);
  }
  cert.moves = std::move(moves);
  std::vector<int> final_elems(cur.begin(), cur.end());
  cert.target = union_of_nerves(base, {final_elems});
  return cert;
}

}  // namespace gluecat
