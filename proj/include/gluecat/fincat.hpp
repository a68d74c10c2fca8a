#pragma once

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gluecat/poset.hpp"

namespace gluecat {

/// A category of finite sets: objects carry element lists, morphisms carry
/// value tables. Kept alongside set-backed categories so pullbacks can be
/// computed as fiber products instead of by exhaustive cone search.
struct FinSetData {
  std::vector<std::vector<std::string>> elements;  // per object
  std::vector<std::vector<int>> tables;            // per morphism: element index map
};

/// A finite category: named objects, named morphisms with source/target, a
/// total composition table. Associativity and unit laws are checked at
/// construction.
class FinCategory {
 public:
  struct Mor {
    std::string name;
    int src = -1, tgt = -1;
  };

  FinCategory() = default;

  static FinCategory validate(std::vector<std::string> objects, std::vector<Mor> morphisms,
                              std::vector<int> identities,
                              const std::vector<std::array<int, 3>>& composites);

  int num_objects() const { return static_cast<int>(objects_.size()); }
  int num_morphisms() const { return static_cast<int>(mors_.size()); }
  const std::string& object_name(int o) const { return objects_[static_cast<size_t>(o)]; }
  const Mor& mor(int f) const { return mors_[static_cast<size_t>(f)]; }
  int object_index(std::string_view name) const;
  int mor_index(std::string_view name) const;
  std::optional<int> find_object(std::string_view name) const;
  std::optional<int> find_mor(std::string_view name) const;

  int identity(int obj) const { return identity_[static_cast<size_t>(obj)]; }
  bool is_identity(int f) const { return identity_[static_cast<size_t>(mors_[static_cast<size_t>(f)].src)] == f; }

  /// g after f; IllTypedComposite when tgt(f) != src(g).
  int compose(int g, int f) const;

  std::vector<int> hom(int src, int tgt) const;
  bool is_iso(int f) const;
  bool thin() const;  // at most one morphism per ordered pair of objects

  const std::vector<std::string>& objects() const { return objects_; }
  const std::vector<Mor>& morphisms() const { return mors_; }

  const FinSetData* finset() const { return finset_ ? &*finset_ : nullptr; }
  void attach_finset(FinSetData data) { finset_ = std::move(data); }

 private:
  std::vector<std::string> objects_;
  std::vector<Mor> mors_;
  std::vector<int> identity_;
  std::vector<int> compose_;  // compose_[g * n + f]
  std::optional<FinSetData> finset_;
};

using FinCategoryPtr = std::shared_ptr<const FinCategory>;

/// The poset P as a category: one morphism x->y per x <= y.
FinCategory poset_category(const Poset& p);

FinCategory finset_category(const std::vector<std::pair<std::string, std::vector<std::string>>>& sets,
                            FinSetData* data = nullptr);

/// All finite sets of the given sizes with every function between them.
FinCategory finset_sizes_category(const std::vector<int>& sizes, FinSetData* data = nullptr);

FinCategory opposite_category(const FinCategory& c);

// ---------------------------------------------------------------------------

/// A commuting square: f: w->x, g: w->y, h: x->z, k: y->z with h∘f = k∘g.
struct CatSquare {
  int f, g, h, k;
};

/// True iff (w, f, g) is a universal cone over the cospan (h, k); checked by
/// exhaustive enumeration of competing cones and mediating morphisms.
bool is_pullback_square(const FinCategory& c, const CatSquare& sq);

struct PullbackResult {
  int apex;
  int to_x;  // projection parallel to k
  int to_y;  // projection parallel to h
};

/// Canonical pullback of the cospan x --h--> z <--k-- y: the first universal
/// cone in enumeration order, or nullopt.
std::optional<PullbackResult> pullback(const FinCategory& c, int h, int k);

/// Unique mediating morphism from the cone (apex', f', g') to a pullback
/// cone (apex, f, g); nullopt when none or not unique.
std::optional<int> mediate(const FinCategory& c, int f, int g, int f_prime, int g_prime);

// ---------------------------------------------------------------------------

struct OverCategory {
  FinCategory category;
  std::vector<int> object_mor;     // overcategory object -> morphism into c
  std::vector<int> projection_obj; // overcategory object -> source object in C
  std::vector<int> projection_mor; // overcategory morphism -> morphism in C
};

OverCategory overcategory(const FinCategory& c, int obj);

struct CheckEntry {
  std::string name;
  bool ok;
  std::string witness;
};

struct Report {
  std::vector<CheckEntry> checks;
  bool ok() const {
    for (const auto& e : checks)
      if (!e.ok) return false;
    return true;
  }
  void add(std::string name, bool ok, std::string witness = "") {
    checks.push_back({std::move(name), ok, std::move(witness)});
  }
};

/// Verifies that C_{/c} has a terminal object, binary products, equalizers
/// and pullbacks, and (when `f` maps to another category) that the induced
/// functor to C'_{/f(c)} preserves them. The base-pullback hypothesis is a
/// report entry with a witness cospan when it fails.
Report check_overcategory_limits(const FinCategory& c, int obj,
                                 const FinCategory* c_prime = nullptr,
                                 const std::vector<int>* functor_obj = nullptr,
                                 const std::vector<int>* functor_mor = nullptr);

// ---------------------------------------------------------------------------

/// -2 means equivalence; Unbounded means the cap was reached.
struct TruncationLevel {
  bool unbounded = false;
  int level = -2;

  static TruncationLevel bounded(int n) { return {false, n}; }
  static TruncationLevel infinite() { return {true, 0}; }
  bool operator==(const TruncationLevel&) const = default;
  bool operator<=(const TruncationLevel& o) const {
    if (o.unbounded) return true;
    if (unbounded) return false;
    return level <= o.level;
  }
};

/// Least n >= -2 with f n-truncated, by iterating the diagonal of f until an
/// isomorphism appears; Unbounded once `cap` is passed.
TruncationLevel truncation_level(const FinCategory& c, int f, int cap = 8);

// ---------------------------------------------------------------------------

/// A class of edges of C that always contains every identity.
class EdgeClass {
 public:
  EdgeClass() = default;
  EdgeClass(const FinCategory& c, std::vector<int> members);
  static EdgeClass all(const FinCategory& c);
  static EdgeClass identities(const FinCategory& c);
  static EdgeClass from_names(const FinCategory& c, const std::vector<std::string>& names);

  bool contains(int f) const { return member_[static_cast<size_t>(f)] != 0; }
  std::vector<int> members() const;
  int size() const;

 private:
  std::vector<char> member_;
};

struct AdmissibleResult {
  bool ok = true;
  std::string condition;  // which of the three conditions failed
  std::string witness;
};

/// Checks: identities, stability under (canonical) pullbacks, and right
/// cancellation (p in E and p∘q in E force q in E).
AdmissibleResult check_admissible(const FinCategory& c, const EdgeClass& e);

struct CofilteredResult {
  bool ok = true;
  std::string witness;
};

/// Non-empty, every pair of objects admits a cone, and every parallel pair
/// is equalized by some preceding morphism.
CofilteredResult check_cofiltered(const FinCategory& c);

// ---------------------------------------------------------------------------

/// Limit of a finite diagram in C by exhaustive cone search. The diagram is
/// given by vertex objects and arrows (src vertex, tgt vertex, morphism).
struct DiagramArrow {
  int src, tgt, mor;
};

struct LimitCone {
  int apex;
  std::vector<int> legs;  // one per diagram vertex
};

std::optional<LimitCone> finite_limit(const FinCategory& c, const std::vector<int>& vertices,
                                      const std::vector<DiagramArrow>& arrows);

}  // namespace gluecat
