#ifndef AW_COARSE_HPP
#define AW_COARSE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "aw/error.hpp"
#include "aw/subset.hpp"

namespace aw::coarse {

// A relation on a finite ground set, one bitmask row per element:
// rows[x] holds the y with (x, y) in the relation.
class Relation {
 public:
  explicit Relation(int ground_size);
  static Relation diagonal(int ground_size);
  static Relation full(int ground_size);
  static Relation square(int ground_size, Subset block);  // B × B
  static Relation graph_of(int ground_size, const std::vector<int>& f,
                           const std::vector<int>& g);  // {(f(s), g(s))}

  int ground_size() const { return static_cast<int>(rows_.size()); }
  void add(int x, int y) { rows_[x].add(y); }
  bool has(int x, int y) const { return rows_[x].contains(y); }
  Subset row(int x) const { return rows_[x]; }
  bool empty() const;
  int pair_count() const;

  Relation inverse() const;
  // The paper's e' ∘ e with e' = *this: pairs (a, b) with some c where
  // (a, c) ∈ e and (c, b) ∈ *this.
  Relation compose_after(const Relation& e) const;
  friend Relation operator|(const Relation& a, const Relation& b);
  bool subset_of(const Relation& o) const;
  friend bool operator==(const Relation& a, const Relation& b) { return a.rows_ == b.rows_; }
  friend bool operator<(const Relation& a, const Relation& b) { return a.rows_ < b.rows_; }

 private:
  std::vector<Subset> rows_;
};

// A finitely generated coarse structure, stored as the antichain of
// maximal elements of the ∪/∘/⁻¹-closure of the generators plus the
// diagonal. On a finite ground set the closure is finite, so membership
// is domination by a maximal element.
class CoarseStructure {
 public:
  static Result<CoarseStructure> make(std::vector<std::string> ground,
                                      std::vector<Relation> generators,
                                      std::size_t insertion_cap = 10000);

  int ground_size() const { return static_cast<int>(ground_.size()); }
  const std::vector<std::string>& ground() const { return ground_; }
  const std::vector<Relation>& generators() const { return generators_; }
  const std::vector<Relation>& maximal() const { return maximal_; }

  bool controlled(const Relation& e) const;
  // Bounded: B × B is controlled.
  bool bounded(Subset b) const;
  // 𝔅(Y, u) = {x : some y in Y has (x, y) in u}.
  static Subset neighborhood(Subset ys, const Relation& u);
  // a ≼ b: a lies inside a controlled neighborhood of b.
  bool preceq(Subset a, Subset b) const;
  bool sim(Subset a, Subset b) const { return preceq(a, b) && preceq(b, a); }
  // Every singleton pair is controlled.
  bool coarsely_connected() const;

 private:
  CoarseStructure(std::vector<std::string> g, std::vector<Relation> gens,
                  std::vector<Relation> maximal)
      : ground_(std::move(g)), generators_(std::move(gens)), maximal_(std::move(maximal)) {}
  std::vector<std::string> ground_;
  std::vector<Relation> generators_;
  std::vector<Relation> maximal_;
};

// Coarse map: images of controlled sets controlled (the maximal elements
// decide) and preimages of bounded sets bounded. The bounded check is
// exhaustive over target subsets up to `subset_cap` ground points, and
// falls back to the bounded neighborhoods of single points beyond that.
bool is_coarse_map(const CoarseStructure& eps, const CoarseStructure& zeta,
                   const std::vector<int>& f, int subset_cap = 12);

// Two maps into the same coarse space are close when their pairing graph
// is controlled.
bool are_close(const CoarseStructure& target, const std::vector<int>& f,
               const std::vector<int>& g);

// Quasi-inverses: both maps coarse and both round trips close to the
// identities. Reports the failing map when one is not coarse.
Result<bool> is_quasi_inverse(const CoarseStructure& eps, const CoarseStructure& zeta,
                              const std::vector<int>& f, const std::vector<int>& g);

// The structure pulled back along pi: X → Γ: controlled means the image
// under pi × pi is controlled. Generators are the pi-preimages of the
// maximal elements of zeta.
CoarseStructure pullback_coarse(const std::vector<int>& pi, std::vector<std::string> ground_x,
                                const CoarseStructure& zeta);

// The bounded coarse structure of a finite metric space, generated by the
// distance-≤ r pair sets for the chosen radii.
CoarseStructure metric_coarse(std::vector<std::string> ground,
                              const std::vector<std::vector<int>>& distance,
                              const std::vector<int>& radii);

}  // namespace aw::coarse

#endif
