#ifndef AW_ADMISSIBLE_HPP
#define AW_ADMISSIBLE_HPP

#include <vector>

#include "aw/space.hpp"

namespace aw {

// A union-preserving, ∅-preserving map Closed(X) → Closed(Y), stored by
// its values on point closures. On a finite space every closed set is the
// union of the closures of its points, so a monotone table of closed
// generator values determines the map completely.
class AdmissibleMap {
 public:
  // Accepts iff every gen(x) is closed in the target and the table is
  // monotone along specialization; the report names witnessing points.
  static Result<AdmissibleMap> make(FiniteSpace source, FiniteSpace target,
                                    std::vector<Subset> gen);

  static AdmissibleMap empty_map(FiniteSpace source, FiniteSpace target);
  // gen(x) = Cl{x}: the identity of Closed(X).
  static AdmissibleMap identity(const FiniteSpace& space);

  const FiniteSpace& source() const { return source_; }
  const FiniteSpace& target() const { return target_; }
  Subset gen(int x) const { return gen_[x]; }
  const std::vector<Subset>& gen_table() const { return gen_; }

  // f(A) = ∪_{x∈A} gen(x); requires A closed in the source.
  Subset apply(Subset a) const;
  // f(X): the image of the whole space.
  Subset image_of_all() const;
  bool is_empty_map() const { return image_of_all().empty_set(); }

  // Pointwise containment of generator values (same source and target).
  bool contained_in(const AdmissibleMap& other) const;

  friend bool operator==(const AdmissibleMap& a, const AdmissibleMap& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.gen_ == b.gen_;
  }

 private:
  AdmissibleMap(FiniteSpace s, FiniteSpace t, std::vector<Subset> g)
      : source_(std::move(s)), target_(std::move(t)), gen_(std::move(g)) {}
  FiniteSpace source_, target_;
  std::vector<Subset> gen_;
};

// Admissible maps in opposite directions with g∘f(A) ⊆ A and f∘g(B) ⊆ B.
struct AdmissiblePair {
  AdmissibleMap f;  // X → Y
  AdmissibleMap g;  // Y → X
};

// Validates the two triangle conditions on generators (union preservation
// makes the generator check sufficient); reports the violating point.
Result<AdmissiblePair> check_pair(AdmissibleMap f, AdmissibleMap g);

}  // namespace aw

#endif
