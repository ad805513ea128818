#include "aw/admissible.hpp"

#include "aw/fault.hpp"

namespace aw {

Result<AdmissibleMap> AdmissibleMap::make(FiniteSpace source, FiniteSpace target,
                                          std::vector<Subset> gen) {
  using R = Result<AdmissibleMap>;
  const int n = source.size();
  if (static_cast<int>(gen.size()) != n)
    return R::failure("generator table is not total over the source points");
  for (int x = 0; x < n; ++x) {
    if (!gen[x].subset_of(target.all()))
      return R::failure("gen('" + source.label(x) + "') refers to points outside the target");
    if (!target.is_closed(gen[x]))
      return R::failure("gen('" + source.label(x) + "') is not closed in the target");
  }
  if (!fault::flags().skip_admissible_monotonicity) {
    for (int y = 0; y < n; ++y)
      for (int x : source.point_closure(y).elements())
        if (!gen[x].subset_of(gen[y]))
          return R::failure("not monotone: witness (" + source.label(x) + ", " +
                            source.label(y) + ")");
  }
  return R::success(AdmissibleMap(std::move(source), std::move(target), std::move(gen)));
}

AdmissibleMap AdmissibleMap::empty_map(FiniteSpace source, FiniteSpace target) {
  std::vector<Subset> gen(source.size());
  return AdmissibleMap(std::move(source), std::move(target), std::move(gen));
}

AdmissibleMap AdmissibleMap::identity(const FiniteSpace& space) {
  std::vector<Subset> gen(space.size());
  for (int p = 0; p < space.size(); ++p) gen[p] = space.point_closure(p);
  return AdmissibleMap(space, space, std::move(gen));
}

Subset AdmissibleMap::apply(Subset a) const {
  if (!source_.is_closed(a)) throw Error("apply: input set is not closed in the source");
  Subset out;
  for_each_element(a, [&](int x) { out |= gen_[x]; });
  return out;
}

Subset AdmissibleMap::image_of_all() const {
  Subset out;
  for (Subset g : gen_) out |= g;
  return out;
}

bool AdmissibleMap::contained_in(const AdmissibleMap& other) const {
  if (source_ != other.source_ || target_ != other.target_)
    throw Error("contained_in: maps live on different spaces");
  for (int x = 0; x < source_.size(); ++x)
    if (!gen_[x].subset_of(other.gen_[x])) return false;
  return true;
}

Result<AdmissiblePair> check_pair(AdmissibleMap f, AdmissibleMap g) {
  using R = Result<AdmissiblePair>;
  if (f.source() != g.target() || f.target() != g.source())
    return R::failure("pair does not connect the same two spaces in opposite directions");
  const FiniteSpace& X = f.source();
  const FiniteSpace& Y = f.target();
  for (int x = 0; x < X.size(); ++x)
    if (!g.apply(f.gen(x)).subset_of(X.point_closure(x)))
      return R::failure("g∘f escapes the closure of '" + X.label(x) + "'");
  for (int y = 0; y < Y.size(); ++y)
    if (!f.apply(g.gen(y)).subset_of(Y.point_closure(y)))
      return R::failure("f∘g escapes the closure of '" + Y.label(y) + "'");
  return R::success(AdmissiblePair{std::move(f), std::move(g)});
}

}  // namespace aw
