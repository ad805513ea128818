#include "aw/sum_space.hpp"

#include <numeric>

#include "aw/fault.hpp"

namespace aw {

SpaceMap SumSpace::embed_left() const {
  std::vector<int> t(left_.size());
  std::iota(t.begin(), t.end(), 0);
  return SpaceMap(left_, total_, std::move(t));
}

SpaceMap SumSpace::embed_right() const {
  std::vector<int> t(right_.size());
  std::iota(t.begin(), t.end(), left_.size());
  return SpaceMap(right_, total_, std::move(t));
}

SumSpace glue(const FiniteSpace& X, const FiniteSpace& Y, const AdmissiblePair& pair) {
  if (pair.f.source() != X || pair.f.target() != Y || pair.g.source() != Y ||
      pair.g.target() != X)
    throw Error("glue: pair does not connect the given spaces");
  const int nx = X.size(), ny = Y.size();
  if (nx + ny > FiniteSpace::kMaxPoints) throw Error("glue: total exceeds capacity");

  std::vector<std::string> labels;
  labels.reserve(nx + ny);
  for (int x = 0; x < nx; ++x) labels.push_back(std::string(SumSpace::kLeftPrefix) + X.label(x));
  for (int y = 0; y < ny; ++y) labels.push_back(std::string(SumSpace::kRightPrefix) + Y.label(y));

  // Monotonicity of the generator tables collapses f(Cl{x}) to gen(x).
  std::vector<Subset> cl(nx + ny);
  for (int x = 0; x < nx; ++x)
    cl[x] = X.point_closure(x) | Subset{pair.f.gen(x).bits << nx};
  for (int y = 0; y < ny; ++y)
    cl[nx + y] = Subset{Y.point_closure(y).bits << nx} | pair.g.gen(y);

  FiniteSpace total = FiniteSpace::from_point_closures(std::move(labels), std::move(cl));
  return SumSpace(X, Y, pair, std::move(total));
}

SumSpace glue(const FiniteSpace& X, const FiniteSpace& Y, const AdmissibleMap& f) {
  auto pair = check_pair(f, AdmissibleMap::empty_map(Y, X));
  if (!pair.ok()) throw Error("glue: " + pair.error());
  return glue(X, Y, pair.value());
}

Result<AdmissiblePair> decompose(const FiniteSpace& Z, Subset xs, SplitRule rule) {
  using R = Result<AdmissiblePair>;
  Subset ys = Z.all() - xs;
  if (xs.empty_set() || ys.empty_set())
    return R::failure("decompose: both parts of the split must be nonempty");
  if (rule == SplitRule::kOpenLeft && !Z.is_open(xs))
    return R::failure("decompose: the left part is not open");

  FiniteSpace X = subspace(Z, xs);
  FiniteSpace Y = subspace(Z, ys);
  const std::vector<int> xpts = xs.elements();
  const std::vector<int> ypts = ys.elements();
  std::vector<int> yindex(Z.size(), -1);
  for (int i = 0; i < static_cast<int>(ypts.size()); ++i) yindex[ypts[i]] = i;
  std::vector<int> xindex(Z.size(), -1);
  for (int i = 0; i < static_cast<int>(xpts.size()); ++i) xindex[xpts[i]] = i;

  // f(Cl_X{x}) = Cl_Z{x} ∩ Y and g(Cl_Y{y}) = Cl_Z{y} ∩ X on generators.
  std::vector<Subset> fg(xpts.size()), gg(ypts.size());
  for (int i = 0; i < static_cast<int>(xpts.size()); ++i)
    for_each_element(Z.point_closure(xpts[i]) & ys, [&](int q) { fg[i].add(yindex[q]); });
  for (int i = 0; i < static_cast<int>(ypts.size()); ++i)
    for_each_element(Z.point_closure(ypts[i]) & xs, [&](int q) { gg[i].add(xindex[q]); });

  auto f = AdmissibleMap::make(X, Y, std::move(fg));
  if (!f.ok()) return R::failure("decompose: " + f.error());
  auto g = AdmissibleMap::make(Y, X, std::move(gg));
  if (!g.ok()) return R::failure("decompose: " + g.error());
  return check_pair(std::move(f.value()), std::move(g.value()));
}

bool is_dense_left(const SumSpace& s) {
  return s.pair().f.image_of_all() == s.right().all();
}

bool is_dense_right(const SumSpace& s) {
  return s.pair().g.image_of_all() == s.left().all();
}

bool glued_closed(const SumSpace& s, Subset d) {
  Subset dx = d & s.left_part();
  Subset dy = s.drop_right(d);
  if (!s.left().is_closed(dx)) return false;
  if (!s.right().is_closed(dy)) return false;
  if (!fault::flags().skip_glue_closed_condition) {
    if (!s.lift_right(s.pair().f.apply(dx)).subset_of(d)) return false;
  }
  if (!s.pair().g.apply(dy).subset_of(d)) return false;
  return true;
}

std::vector<Subset> glued_closed_family(const SumSpace& s, int cap) {
  const int n = s.total().size();
  if (n > cap)
    throw Error("glued_closed_family: total has " + std::to_string(n) +
                " points, oracle cap is " + std::to_string(cap));
  std::vector<Subset> out;
  const std::uint64_t end = std::uint64_t{1} << n;
  for (std::uint64_t m = 0; m < end; ++m)
    if (glued_closed(s, Subset{m})) out.push_back(Subset{m});
  return out;
}

bool hausdorff_criterion(const FiniteSpace& X, const FiniteSpace& Y, const AdmissibleMap& f) {
  if (!X.is_discrete() || !Y.is_discrete())
    throw Error("hausdorff_criterion: requires discrete halves");
  if (f.source() != X || f.target() != Y)
    throw Error("hausdorff_criterion: map does not connect the given spaces");

  // Every closed subset of a finite space is compact, so the first clause
  // asks f to vanish on all of them; the generators decide that.
  if (!f.is_empty_map()) return false;

  // Separation clause: for all a, b in Y there are closed A, B covering X
  // with b ∉ f(A) and a ∉ f(B). With f ≡ ∅ the cover A = B = X works.
  Subset image = f.apply(X.all());
  for (int a = 0; a < Y.size(); ++a)
    for (int b = 0; b < Y.size(); ++b)
      if (image.contains(a) || image.contains(b)) return false;
  return true;
}

}  // namespace aw
