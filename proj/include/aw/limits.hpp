#ifndef AW_LIMITS_HPP
#define AW_LIMITS_HPP

#include <optional>

#include "aw/transport.hpp"

namespace aw {

// A finite diagram of glueings over one shared left half X: objects are
// X+_{f_c}Y_c (second map ∅) and arrows are morphisms id+phi between them.
// The arrow list must be composition-closed: whenever two arrows compose,
// the composite must appear (identity composites are implicit).
class SumDiagram {
 public:
  struct Arrow {
    int from = 0, to = 0;
    std::vector<int> phi;  // remainder point table: right(from) → right(to)
  };

  static Result<SumDiagram> make(FiniteSpace base, std::vector<std::string> names,
                                 std::vector<SumSpace> objects, std::vector<Arrow> arrows);

  const FiniteSpace& base() const { return base_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<SumSpace>& objects() const { return objects_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  int object_count() const { return static_cast<int>(objects_.size()); }

  SpaceMap arrow_phi(const Arrow& a) const;
  SumMap arrow_map(const Arrow& a) const;

 private:
  SumDiagram(FiniteSpace base, std::vector<std::string> names, std::vector<SumSpace> objects,
             std::vector<Arrow> arrows)
      : base_(std::move(base)),
        names_(std::move(names)),
        objects_(std::move(objects)),
        arrows_(std::move(arrows)) {}
  FiniteSpace base_;
  std::vector<std::string> names_;
  std::vector<SumSpace> objects_;
  std::vector<Arrow> arrows_;
};

// The limit of a SumDiagram, computed as matching families: the diagonal
// copy of X together with the remainder threads (one remainder point per
// object, matched along every arrow), carrying the subspace topology of
// the product of the totals. The X-dense limit is the closure of the
// diagonal inside the full limit.
struct SumLimit {
  SumSpace full;                                // X + all matching threads
  std::vector<std::vector<int>> threads;        // thread → remainder point per object
  FiniteSpace dense_space;                      // Cl(X) inside full.total
  std::optional<SumSpace> dense;                // as a glueing, when its remainder is nonempty
  std::vector<SumMap> projections;              // full → objects
};

SumLimit sum_limit(const SumDiagram& d);

// A sequence of finite stages with bonds stage(k+1) → stage(k).
class InverseSystem {
 public:
  static Result<InverseSystem> make(std::vector<std::vector<std::string>> stages,
                                    std::vector<std::vector<int>> bonds);

  int stage_count() const { return static_cast<int>(stages_.size()); }
  const std::vector<std::string>& stage(int k) const { return stages_[k]; }
  // bond(k): maps elements of stage k+1 to elements of stage k.
  const std::vector<int>& bond(int k) const { return bonds_[k]; }
  bool bond_injective(int k) const;
  bool bond_surjective(int k) const;

 private:
  InverseSystem() = default;
  std::vector<std::vector<std::string>> stages_;
  std::vector<std::vector<int>> bonds_;
};

struct StageReport {
  std::vector<std::size_t> sizes;
  std::vector<bool> injective;   // per bond among the reported stages
  std::vector<bool> surjective;
};

// Cardinalities and bond flags for the first `depth` stages.
StageReport system_stages(const InverseSystem& s, int depth);

// Least stage n such that the `window` consecutive bonds starting at n are
// all bijections; nullopt when no such plateau fits in the evaluated
// stages. A larger window never reports an earlier stage.
std::optional<int> detect_stabilization(const InverseSystem& s, int window = 3);

}  // namespace aw

#endif
