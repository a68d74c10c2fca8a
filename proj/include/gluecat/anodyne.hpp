#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gluecat/nerve.hpp"

namespace gluecat {

/// One inner-horn attachment: the top simplex `chain` (dimension >= 2) is
/// glued along its inner horn at `face_index`. Applying the move adds the
/// chain and its face_index-th face; everything else must already be present.
struct HornMove {
  Chain chain;
  int face_index;
};

/// An explicit witness that start ⊆ target is inner anodyne: replaying the
/// moves from `start` lands exactly on `target`.
struct AnodyneCertificate {
  SubNerve start;
  SubNerve target;
  std::vector<HornMove> moves;
};

/// Applies a single move; MoveInvalid names the violated condition.
SubNerve apply_move(const SubNerve& k, const HornMove& move);

/// Replays every move; returns false (with a reason) instead of throwing.
bool validate_certificate(const AnodyneCertificate& cert, std::string* reason = nullptr);

/// Sound, incomplete backtracking search for an inner-anodyne certificate.
/// NotFound (nullopt) is not a refutation; it only means the budget was
/// exhausted or the move space ran dry.
std::optional<AnodyneCertificate> search_certificate(const SubNerve& a, const SubNerve& b,
                                                     long long budget = 10'000'000);

/// The pushout poset Q ⊔_P R: q <= r iff some p in P has q <= p <= r.
/// `p_names` must name elements present in both Q and R.
Poset poset_pushout(const Poset& q, const Poset& r, const std::vector<std::string>& p_names);

/// Certificate for N(Q) ∪ N(R) ⊆ N(S), S = Q ⊔_P R, built by peeling minimal
/// elements of Q - P and attaching left cones over the comma posets. The
/// hypotheses (Q admits pushouts preserved in S; P an up-set of Q) are
/// checked and reported via HypothesisFailed.
AnodyneCertificate certify_poset_pushout(const Poset& q, const Poset& r,
                                         const std::vector<std::string>& p_names);

/// Certificate for ∪_j N(P_{p_j//q_j}) ⊆ N(∪_j P_{p_j//q_j}) given chains
/// p_1 <= ... <= p_l, q_1 <= ... <= q_l with p_j <= q_{j-1}, assembled by
/// telescoping certify_poset_pushout steps inside the ambient poset.
AnodyneCertificate certify_interval_union(const Poset& p, const std::vector<int>& p_list,
                                          const std::vector<int>& q_list);

namespace detail {
/// Cone-attachment moves for one peeled element: present complex holds all
/// chains of `ambient` lying in `present_elems` (Q or S'), plus cones
/// q*sigma with sigma inside A; emits moves adding q*sigma for every chain
/// sigma of B not contained in A. `retract` maps each element of B to the
/// greatest element of A below it.
std::vector<HornMove> cone_moves(const Poset& ambient, int apex,
                                 const std::vector<int>& a_elems,
                                 const std::vector<int>& b_elems,
                                 const std::vector<int>& retract);
}  // namespace detail

}  // namespace gluecat
