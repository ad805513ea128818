#include "aw/limits.hpp"

#include <algorithm>

namespace aw {

SpaceMap SumDiagram::arrow_phi(const Arrow& a) const {
  return SpaceMap(objects_[a.from].right(), objects_[a.to].right(), a.phi);
}

SumMap SumDiagram::arrow_map(const Arrow& a) const {
  return SumMap(objects_[a.from], objects_[a.to], SpaceMap::identity(base_), arrow_phi(a));
}

Result<SumDiagram> SumDiagram::make(FiniteSpace base, std::vector<std::string> names,
                                    std::vector<SumSpace> objects,
                                    std::vector<Arrow> arrows) {
  using R = Result<SumDiagram>;
  if (objects.empty()) return R::failure("diagram needs at least one object");
  if (names.size() != objects.size())
    return R::failure("object name list does not match the object list");
  for (std::size_t i = 0; i < objects.size(); ++i) {
    if (objects[i].left() != base)
      return R::failure("object '" + names[i] + "' does not have the shared left half");
    if (!objects[i].pair().g.is_empty_map())
      return R::failure("object '" + names[i] + "' has a nonempty second glueing map");
  }
  SumDiagram d(std::move(base), std::move(names), std::move(objects), std::move(arrows));

  for (const Arrow& a : d.arrows_) {
    if (a.from < 0 || a.from >= d.object_count() || a.to < 0 || a.to >= d.object_count())
      return R::failure("arrow endpoints out of range");
    if (static_cast<int>(a.phi.size()) != d.objects_[a.from].right_size())
      return R::failure("arrow table is not total over the source remainder");
    for (int v : a.phi)
      if (v < 0 || v >= d.objects_[a.to].right_size())
        return R::failure("arrow table hits a point outside the target remainder");
    SpaceMap phi = d.arrow_phi(a);
    if (!phi.is_continuous())
      return R::failure("arrow " + d.names_[a.from] + " → " + d.names_[a.to] +
                        ": remainder map is not continuous");
    if (!diagram_continuity(d.arrow_map(a)))
      return R::failure("arrow " + d.names_[a.from] + " → " + d.names_[a.to] +
                        " is not a morphism of glueings");
  }

  // Composition closure: every composite of listed arrows is listed
  // (identity composites are implicit).
  for (const Arrow& a : d.arrows_)
    for (const Arrow& b : d.arrows_) {
      if (a.to != b.from) continue;
      std::vector<int> comp(a.phi.size());
      for (std::size_t i = 0; i < a.phi.size(); ++i) comp[i] = b.phi[a.phi[i]];
      bool is_identity = false;
      if (a.from == b.to) {
        is_identity = true;
        for (std::size_t i = 0; i < comp.size(); ++i)
          if (comp[i] != static_cast<int>(i)) is_identity = false;
      }
      if (is_identity) continue;
      bool found = false;
      for (const Arrow& c : d.arrows_)
        if (c.from == a.from && c.to == b.to && c.phi == comp) found = true;
      if (!found)
        return R::failure("diagram is not composition-closed: missing " + d.names_[a.from] +
                          " → " + d.names_[b.to]);
    }
  return R::success(std::move(d));
}

SumLimit sum_limit(const SumDiagram& d) {
  const int k = d.object_count();
  const FiniteSpace& X = d.base();

  double tuple_count = 1;
  for (const SumSpace& o : d.objects()) tuple_count *= o.right_size();
  if (tuple_count > 200000) throw Error("sum_limit: remainder tuple space too large");

  // Matching families of remainder points.
  std::vector<std::vector<int>> threads;
  std::vector<int> pick(k, 0);
  while (true) {
    bool match = true;
    for (const SumDiagram::Arrow& a : d.arrows())
      if (a.phi[pick[a.from]] != pick[a.to]) {
        match = false;
        break;
      }
    if (match) threads.push_back(pick);
    int i = 0;
    while (i < k && ++pick[i] == d.objects()[i].right_size()) pick[i++] = 0;
    if (i == k) break;
  }

  const int t = static_cast<int>(threads.size());
  if (X.size() + t > FiniteSpace::kMaxPoints)
    throw Error("sum_limit: limit exceeds the 64-point capacity");

  // The thread space: componentwise specialization from the remainders.
  std::vector<std::string> tlabels;
  std::vector<Subset> tcl(t);
  for (int i = 0; i < t; ++i) {
    std::string l = "(";
    for (int c = 0; c < k; ++c) {
      if (c) l += "|";
      l += d.objects()[c].right().label(threads[i][c]);
    }
    tlabels.push_back(l + ")");
    for (int j = 0; j < t; ++j) {
      bool below_all = true;
      for (int c = 0; c < k && below_all; ++c)
        if (!d.objects()[c].right().below(threads[j][c], threads[i][c])) below_all = false;
      if (below_all) tcl[i].add(j);
    }
  }

  if (t == 0)
    throw Error("sum_limit: no matching families; the limit has an empty remainder");
  FiniteSpace threads_space = FiniteSpace::from_point_closures(tlabels, tcl);

  // The induced glueing map: x reaches every thread whose coordinates all
  // lie in the corresponding generator value.
  std::vector<Subset> gen(X.size());
  for (int x = 0; x < X.size(); ++x)
    for (int i = 0; i < t; ++i) {
      bool inside = true;
      for (int c = 0; c < k && inside; ++c)
        if (!d.objects()[c].pair().f.gen(x).contains(threads[i][c])) inside = false;
      if (inside) gen[x].add(i);
    }
  auto f = AdmissibleMap::make(X, threads_space, std::move(gen));
  if (!f.ok()) throw Error("sum_limit: induced map invalid: " + f.error());
  SumSpace full = glue(X, threads_space, f.value());

  // Projections commute with the arrows by construction of the threads.
  std::vector<SumMap> projections;
  for (int c = 0; c < k; ++c) {
    std::vector<int> tbl(t);
    for (int i = 0; i < t; ++i) tbl[i] = threads[i][c];
    projections.emplace_back(full, d.objects()[c], SpaceMap::identity(X),
                             SpaceMap(threads_space, d.objects()[c].right(), tbl));
  }

  // The X-dense limit: closure of the diagonal copy of X.
  Subset reached = full.pair().f.image_of_all();
  FiniteSpace dense_space =
      subspace(full.total(), full.left_part() | full.lift_right(reached));
  std::optional<SumSpace> dense;
  if (!reached.empty_set()) {
    FiniteSpace dense_threads = subspace(threads_space, reached);
    std::vector<int> reindex(threads_space.size(), -1);
    {
      int next = 0;
      for (int i : reached.elements()) reindex[i] = next++;
    }
    std::vector<Subset> dgen(X.size());
    for (int x = 0; x < X.size(); ++x)
      for (int i : (full.pair().f.gen(x) & reached).elements()) dgen[x].add(reindex[i]);
    auto df = AdmissibleMap::make(X, dense_threads, std::move(dgen));
    if (!df.ok()) throw Error("sum_limit: dense restriction invalid: " + df.error());
    dense = glue(X, dense_threads, df.value());
  }
  return SumLimit{std::move(full), std::move(threads), std::move(dense_space),
                  std::move(dense), std::move(projections)};
}

Result<InverseSystem> InverseSystem::make(std::vector<std::vector<std::string>> stages,
                                          std::vector<std::vector<int>> bonds) {
  using R = Result<InverseSystem>;
  if (stages.empty()) return R::failure("system needs at least one stage");
  if (bonds.size() + 1 != stages.size())
    return R::failure("system needs exactly one bond between consecutive stages");
  for (std::size_t kk = 0; kk < bonds.size(); ++kk) {
    if (bonds[kk].size() != stages[kk + 1].size())
      return R::failure("bond " + std::to_string(kk) + " is not total over stage " +
                        std::to_string(kk + 1));
    for (int v : bonds[kk])
      if (v < 0 || v >= static_cast<int>(stages[kk].size()))
        return R::failure("bond " + std::to_string(kk) + " hits a point outside stage " +
                          std::to_string(kk));
  }
  InverseSystem s;
  s.stages_ = std::move(stages);
  s.bonds_ = std::move(bonds);
  return R::success(std::move(s));
}

bool InverseSystem::bond_injective(int k) const {
  std::vector<bool> seen(stages_[k].size(), false);
  for (int v : bonds_[k]) {
    if (seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

bool InverseSystem::bond_surjective(int k) const {
  std::vector<bool> seen(stages_[k].size(), false);
  for (int v : bonds_[k]) seen[v] = true;
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

StageReport system_stages(const InverseSystem& s, int depth) {
  if (depth < 1 || depth > s.stage_count())
    throw Error("system_stages: depth exceeds the available stages");
  StageReport r;
  for (int k = 0; k < depth; ++k) r.sizes.push_back(s.stage(k).size());
  for (int k = 0; k + 1 < depth; ++k) {
    r.injective.push_back(s.bond_injective(k));
    r.surjective.push_back(s.bond_surjective(k));
  }
  return r;
}

std::optional<int> detect_stabilization(const InverseSystem& s, int window) {
  if (window < 1) throw Error("detect_stabilization: window must be at least 1");
  for (int n = 0; n + window <= s.stage_count() - 1; ++n) {
    bool plateau = true;
    for (int k = n; k < n + window && plateau; ++k)
      if (!s.bond_injective(k) || !s.bond_surjective(k)) plateau = false;
    if (plateau) return n;
  }
  return std::nullopt;
}

}  // namespace aw
