#include "gluecat/nerve.hpp"

#include <algorithm>

namespace gluecat {

void SubNerve::check_chain(const Chain& c) const {
  if (c.empty()) fail(ErrorCode::NotAChain, "empty chain");
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i] < 0 || c[i] >= base_->size()) fail(ErrorCode::UnknownElement);
    if (i + 1 < c.size() && !base_->lt(c[i], c[i + 1]))
      fail(ErrorCode::NotAChain, "not strictly increasing");
  }
}

SubNerve SubNerve::from_chains(PosetPtr base, const std::vector<Chain>& chains) {
  SubNerve k(std::move(base));
  for (const auto& c : chains) k.insert_closed(c);
  return k;
}

int SubNerve::dimension() const {
  int d = -1;
  for (const auto& c : chains_) d = std::max(d, static_cast<int>(c.size()) - 1);
  return d;
}

void SubNerve::insert_closed(const Chain& c) {
  check_chain(c);
  // All non-empty subsequences of a chain are chains.
  const size_t n = c.size();
  for (std::uint64_t sub = 1; sub < (1ull << n); ++sub) {
    Chain f;
    for (size_t i = 0; i < n; ++i)
      if ((sub >> i) & 1u) f.push_back(c[i]);
    chains_.insert(std::move(f));
  }
}

bool SubNerve::face_closed() const {
  for (const auto& c : chains_) {
    if (c.size() == 1) continue;
    for (size_t k = 0; k < c.size(); ++k)
      if (!chains_.count(chain_face(c, static_cast<int>(k)))) return false;
  }
  return true;
}

bool SubNerve::subcomplex_of(const SubNerve& other) const {
  if (!base_ || !other.base_ || !(*base_ == *other.base_)) return false;
  return std::includes(other.chains_.begin(), other.chains_.end(), chains_.begin(),
                       chains_.end());
}

std::vector<Chain> SubNerve::maximal_chains() const {
  std::vector<Chain> out;
  for (const auto& c : chains_) {
    bool maximal = true;
    for (const auto& d : chains_) {
      if (d.size() <= c.size() || d == c) continue;
      if (std::includes(d.begin(), d.end(), c.begin(), c.end())) { maximal = false; break; }
    }
    if (maximal) out.push_back(c);
  }
  return out;
}

bool SubNerve::operator==(const SubNerve& other) const {
  return base_ && other.base_ && *base_ == *other.base_ && chains_ == other.chains_;
}

SubNerve nerve(PosetPtr p, int dim_cap, long long chain_budget) {
  SubNerve k(p);
  const int n = p->size();
  const int cap = dim_cap < 0 ? n : dim_cap;
  long long count = 0;
  // Depth-first chain extension: repeatedly append any strictly greater
  // element.
  std::vector<int> chain;
  auto grow = [&](auto&& self) -> void {
    for (int z = 0; z < n; ++z) {
      if (!chain.empty() && !p->lt(chain.back(), z)) continue;
      chain.push_back(z);
      if (static_cast<int>(chain.size()) <= cap + 1) {
        if (++count > chain_budget) fail(ErrorCode::SizeBudgetExceeded, "chain budget");
        k.insert_raw(chain);
        self(self);
      }
      chain.pop_back();
    }
  };
  grow(grow);
  return k;
}

std::vector<Chain> simplices(const SubNerve& k, int m) {
  std::vector<Chain> out;
  for (const auto& c : k.chains())
    if (static_cast<int>(c.size()) == m + 1) out.push_back(c);
  return out;
}

SubNerve combine(const SubNerve& k1, const SubNerve& k2, CombineMode mode) {
  if (!k1.base() || !k2.base() || !(*k1.base() == *k2.base()))
    fail(ErrorCode::BaseMismatch);
  SubNerve out(k1.base());
  if (mode == CombineMode::Union) {
    for (const auto& c : k1.chains()) out.insert_raw(c);
    for (const auto& c : k2.chains()) out.insert_raw(c);
  } else {
    for (const auto& c : k1.chains())
      if (k2.contains(c)) out.insert_raw(c);
  }
  return out;
}

SubNerve standard_shape(int n, ShapeKind kind, int horn_k) {
  auto base = std::make_shared<Poset>(chain_poset(n));
  SubNerve full = nerve(base);
  if (kind == ShapeKind::Simplex) return full;
  Chain top;
  for (int i = 0; i <= n; ++i) top.push_back(i);
  SubNerve out(base);
  if (kind == ShapeKind::Boundary) {
    for (const auto& c : full.chains())
      if (c != top) out.insert_raw(c);
    return out;
  }
  if (horn_k <= 0 || horn_k >= n)
    fail(ErrorCode::NotInner, "inner horn requires 0 < k < n");
  Chain omitted = chain_face(top, horn_k);
  for (const auto& c : full.chains())
    if (c != top && c != omitted) out.insert_raw(c);
  return out;
}

Chain chain_face(const Chain& c, int k) {
  Chain f = c;
  f.erase(f.begin() + k);
  return f;
}

}  // namespace gluecat
