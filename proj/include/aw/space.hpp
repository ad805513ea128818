#ifndef AW_SPACE_HPP
#define AW_SPACE_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "aw/error.hpp"
#include "aw/subset.hpp"

namespace aw {

// A finite topological space stored as its specialization preorder:
// below(x, y) holds iff x lies in the closure of {y}. Closed sets are
// exactly the down-sets of this relation, so all operations reduce to
// bitmask arithmetic on point closures.
class FiniteSpace {
 public:
  static constexpr int kMaxPoints = 64;
  static constexpr int kOracleCap = 16;

  // Validates reflexivity and transitivity of `below` (below[x][y] means
  // x ∈ Cl{y}); reports the first violated axiom with witnessing points.
  static Result<FiniteSpace> validate(std::vector<std::string> labels,
                                      const std::vector<std::vector<bool>>& below);

  // Trusted constructor from per-point closures; checks the preorder
  // axioms and throws on violation (internal misuse, not user input).
  static FiniteSpace from_point_closures(std::vector<std::string> labels,
                                         std::vector<Subset> closures);

  static FiniteSpace discrete(std::vector<std::string> labels);
  // Chain p0 ∈ Cl{p1} ∈ ... (each point closed below the next).
  static FiniteSpace chain(std::vector<std::string> labels);

  int size() const { return static_cast<int>(closure_of_point_.size()); }
  const std::string& label(int p) const { return labels_[p]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<int> index_of(std::string_view label) const;

  bool below(int x, int y) const { return closure_of_point_[y].contains(x); }
  Subset point_closure(int p) const { return closure_of_point_[p]; }
  // Up-set of p: the points whose closure contains p.
  Subset point_upset(int p) const { return upset_of_point_[p]; }

  Subset all() const { return Subset::first_n(size()); }
  Subset closure(Subset a) const;
  Subset interior(Subset a) const { return all() - closure(all() - a); }
  bool is_closed(Subset a) const { return closure(a) == a; }
  bool is_open(Subset a) const { return is_closed(all() - a); }
  bool is_discrete() const;

  // Same labels in the same order and the same specialization relation.
  friend bool operator==(const FiniteSpace& a, const FiniteSpace& b) {
    return a.labels_ == b.labels_ && a.closure_of_point_ == b.closure_of_point_;
  }
  friend bool operator!=(const FiniteSpace& a, const FiniteSpace& b) { return !(a == b); }

 private:
  FiniteSpace() = default;
  std::vector<std::string> labels_;
  std::vector<Subset> closure_of_point_;
  std::vector<Subset> upset_of_point_;
};

// All closed sets, by filtering every subset through the closure operator.
// Exponential: refuses spaces larger than `cap` points.
std::vector<Subset> enumerate_closed_sets(const FiniteSpace& space,
                                          int cap = FiniteSpace::kOracleCap);

// Maximal connected subsets, connectivity generated by comparability in
// the specialization preorder. Components are labelled by their minimum
// point index and returned in that order.
std::vector<Subset> connected_components(const FiniteSpace& space);

// Subspace on a nonempty subset: the restricted preorder. Closed sets of
// the result are the traces of ambient closed sets.
FiniteSpace subspace(const FiniteSpace& space, Subset a,
                     const std::string& label_prefix = "");

// Product space: points are pairs, specialization is componentwise.
FiniteSpace product(const FiniteSpace& a, const FiniteSpace& b);

// A point map between finite spaces.
class SpaceMap {
 public:
  SpaceMap(FiniteSpace domain, FiniteSpace codomain, std::vector<int> table);

  static SpaceMap identity(const FiniteSpace& space);
  static SpaceMap constant(const FiniteSpace& domain, const FiniteSpace& codomain,
                           int target_point);

  const FiniteSpace& domain() const { return domain_; }
  const FiniteSpace& codomain() const { return codomain_; }
  int operator()(int p) const { return table_[p]; }
  const std::vector<int>& table() const { return table_; }

  Subset image(Subset a) const;
  Subset image_all() const { return image(domain_.all()); }
  Subset preimage(Subset b) const;

  // Continuity of a map of finite spaces is preservation of
  // specialization: below(x, y) implies below(m x, m y).
  bool is_continuous() const;
  bool is_surjective() const { return image_all() == codomain_.all(); }
  bool is_injective() const;
  // Closed map: images of closed sets are closed.
  bool is_closed_map() const;

  SpaceMap then(const SpaceMap& next) const;  // next ∘ this

  friend bool operator==(const SpaceMap& a, const SpaceMap& b) {
    return a.domain_ == b.domain_ && a.codomain_ == b.codomain_ && a.table_ == b.table_;
  }

 private:
  FiniteSpace domain_, codomain_;
  std::vector<int> table_;
};

// True iff `m` preserves specialization; agrees with the preimage-of-closed
// test over enumerate_closed_sets (asserted by the law suite).
bool is_continuous(const SpaceMap& m);

// Permutation-search isomorphism test for small spaces.
bool isomorphic(const FiniteSpace& a, const FiniteSpace& b);

// Isomorphic via the label-matching bijection (labels equal as sets).
bool isomorphic_by_labels(const FiniteSpace& a, const FiniteSpace& b);

}  // namespace aw

#endif
