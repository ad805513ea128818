#include "aw/coarse.hpp"

#include <algorithm>

namespace aw::coarse {

Relation::Relation(int ground_size) : rows_(ground_size) {
  if (ground_size < 1 || ground_size > 64) throw Error("Relation: bad ground size");
}

Relation Relation::diagonal(int ground_size) {
  Relation r(ground_size);
  for (int x = 0; x < ground_size; ++x) r.add(x, x);
  return r;
}

Relation Relation::full(int ground_size) {
  Relation r(ground_size);
  for (int x = 0; x < ground_size; ++x) r.rows_[x] = Subset::first_n(ground_size);
  return r;
}

Relation Relation::square(int ground_size, Subset block) {
  Relation r(ground_size);
  for_each_element(block, [&](int x) { r.rows_[x] = block; });
  return r;
}

Relation Relation::graph_of(int ground_size, const std::vector<int>& f,
                            const std::vector<int>& g) {
  if (f.size() != g.size()) throw Error("graph_of: maps have different domains");
  Relation r(ground_size);
  for (std::size_t s = 0; s < f.size(); ++s) r.add(f[s], g[s]);
  return r;
}

bool Relation::empty() const {
  for (const Subset& row : rows_)
    if (!row.empty_set()) return false;
  return true;
}

int Relation::pair_count() const {
  int n = 0;
  for (const Subset& row : rows_) n += row.count();
  return n;
}

Relation Relation::inverse() const {
  Relation r(ground_size());
  for (int x = 0; x < ground_size(); ++x)
    for_each_element(rows_[x], [&](int y) { r.add(y, x); });
  return r;
}

Relation Relation::compose_after(const Relation& e) const {
  if (ground_size() != e.ground_size()) throw Error("compose_after: ground mismatch");
  Relation r(ground_size());
  for (int a = 0; a < ground_size(); ++a)
    for_each_element(e.rows_[a], [&](int c) { r.rows_[a] |= rows_[c]; });
  return r;
}

Relation operator|(const Relation& a, const Relation& b) {
  if (a.ground_size() != b.ground_size()) throw Error("Relation union: ground mismatch");
  Relation r(a.ground_size());
  for (int x = 0; x < a.ground_size(); ++x) r.rows_[x] = a.rows_[x] | b.rows_[x];
  return r;
}

bool Relation::subset_of(const Relation& o) const {
  if (ground_size() != o.ground_size()) throw Error("subset_of: ground mismatch");
  for (int x = 0; x < ground_size(); ++x)
    if (!rows_[x].subset_of(o.rows_[x])) return false;
  return true;
}

Result<CoarseStructure> CoarseStructure::make(std::vector<std::string> ground,
                                              std::vector<Relation> generators,
                                              std::size_t insertion_cap) {
  using R = Result<CoarseStructure>;
  const int n = static_cast<int>(ground.size());
  if (n < 1 || n > 64) return R::failure("ground set must have 1..64 elements");
  for (const Relation& g : generators)
    if (g.ground_size() != n) return R::failure("generator on a different ground set");

  // Worklist fixpoint over ∪ / ∘ / ⁻¹ with subsumption pruning, keeping
  // only the maximal elements. The union axiom makes the family directed,
  // so this usually collapses quickly; the cap guards pathological input.
  std::vector<Relation> antichain;
  std::size_t insertions = 0;
  auto insert = [&](const Relation& r) -> int {  // 1 inserted, 0 subsumed, -1 overflow
    for (const Relation& m : antichain)
      if (r.subset_of(m)) return 0;
    if (++insertions > insertion_cap) return -1;
    std::erase_if(antichain, [&](const Relation& m) { return m.subset_of(r); });
    antichain.push_back(r);
    return 1;
  };

  if (insert(Relation::diagonal(n)) < 0) return R::failure("saturation overflow");
  for (const Relation& g : generators)
    if (insert(g) < 0) return R::failure("saturation overflow");

  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Relation> snapshot = antichain;
    for (const Relation& a : snapshot)
      for (const Relation& b : snapshot) {
        for (const Relation& cand :
             {a | b, a.compose_after(b), b.compose_after(a), a.inverse()}) {
          int rc = insert(cand);
          if (rc < 0) return R::failure("saturation overflow");
          if (rc > 0) changed = true;
        }
      }
  }
  std::sort(antichain.begin(), antichain.end());
  return R::success(CoarseStructure(std::move(ground), std::move(generators),
                                    std::move(antichain)));
}

bool CoarseStructure::controlled(const Relation& e) const {
  if (e.ground_size() != ground_size())
    throw Error("controlled: relation lives on a different ground set");
  for (const Relation& m : maximal_)
    if (e.subset_of(m)) return true;
  return false;
}

bool CoarseStructure::bounded(Subset b) const {
  if (!b.subset_of(Subset::first_n(ground_size())))
    throw Error("bounded: subset outside the ground set");
  return controlled(Relation::square(ground_size(), b));
}

Subset CoarseStructure::neighborhood(Subset ys, const Relation& u) {
  Subset out;
  for (int x = 0; x < u.ground_size(); ++x)
    if (u.row(x).intersects(ys)) out.add(x);
  return out;
}

bool CoarseStructure::preceq(Subset a, Subset b) const {
  for (const Relation& m : maximal_)
    if (a.subset_of(neighborhood(b, m))) return true;
  return false;
}

bool CoarseStructure::coarsely_connected() const {
  for (int x = 0; x < ground_size(); ++x)
    for (int y = 0; y < ground_size(); ++y) {
      Relation e(ground_size());
      e.add(x, y);
      if (!controlled(e)) return false;
    }
  return true;
}

bool is_coarse_map(const CoarseStructure& eps, const CoarseStructure& zeta,
                   const std::vector<int>& f, int subset_cap) {
  if (static_cast<int>(f.size()) != eps.ground_size())
    throw Error("is_coarse_map: map is not total over the source ground");
  for (int v : f)
    if (v < 0 || v >= zeta.ground_size()) throw Error("is_coarse_map: value out of range");

  // Images of controlled sets: the maximal elements decide by
  // monotonicity of the image.
  for (const Relation& m : eps.maximal()) {
    Relation image(zeta.ground_size());
    for (int x = 0; x < eps.ground_size(); ++x)
      for_each_element(m.row(x), [&](int y) { image.add(f[x], f[y]); });
    if (!zeta.controlled(image)) return false;
  }

  auto preimage = [&](Subset s) {
    Subset out;
    for (int x = 0; x < eps.ground_size(); ++x)
      if (s.contains(f[x])) out.add(x);
    return out;
  };
  if (zeta.ground_size() <= subset_cap) {
    const std::uint64_t end = std::uint64_t{1} << zeta.ground_size();
    for (std::uint64_t m = 0; m < end; ++m) {
      Subset s{m};
      if (zeta.bounded(s) && !eps.bounded(preimage(s))) return false;
    }
  } else {
    // Bounded sets are dominated by bounded neighborhoods of single
    // points, and preimages are monotone, so the witnesses suffice.
    for (int y = 0; y < zeta.ground_size(); ++y) {
      if (!eps.bounded(preimage(Subset::single(y)))) return false;
      for (const Relation& m : zeta.maximal()) {
        Subset block = CoarseStructure::neighborhood(Subset::single(y), m);
        if (zeta.bounded(block) && !eps.bounded(preimage(block))) return false;
      }
    }
  }
  return true;
}

bool are_close(const CoarseStructure& target, const std::vector<int>& f,
               const std::vector<int>& g) {
  if (f.size() != g.size()) throw Error("are_close: maps have different domains");
  for (int v : f)
    if (v < 0 || v >= target.ground_size()) throw Error("are_close: value out of range");
  for (int v : g)
    if (v < 0 || v >= target.ground_size()) throw Error("are_close: value out of range");
  return target.controlled(Relation::graph_of(target.ground_size(), f, g));
}

Result<bool> is_quasi_inverse(const CoarseStructure& eps, const CoarseStructure& zeta,
                              const std::vector<int>& f, const std::vector<int>& g) {
  using R = Result<bool>;
  if (!is_coarse_map(eps, zeta, f)) return R::failure("the forward map is not coarse");
  if (!is_coarse_map(zeta, eps, g)) return R::failure("the backward map is not coarse");
  std::vector<int> fg(zeta.ground_size()), id_y(zeta.ground_size());
  for (int y = 0; y < zeta.ground_size(); ++y) {
    fg[y] = f[g[y]];
    id_y[y] = y;
  }
  std::vector<int> gf(eps.ground_size()), id_x(eps.ground_size());
  for (int x = 0; x < eps.ground_size(); ++x) {
    gf[x] = g[f[x]];
    id_x[x] = x;
  }
  return R::success(are_close(zeta, fg, id_y) && are_close(eps, gf, id_x));
}

CoarseStructure pullback_coarse(const std::vector<int>& pi, std::vector<std::string> ground_x,
                                const CoarseStructure& zeta) {
  const int n = static_cast<int>(ground_x.size());
  if (static_cast<int>(pi.size()) != n)
    throw Error("pullback_coarse: map is not total over the new ground");
  for (int v : pi)
    if (v < 0 || v >= zeta.ground_size()) throw Error("pullback_coarse: value out of range");

  std::vector<Relation> gens;
  for (const Relation& s : zeta.maximal()) {
    Relation pre(n);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (s.has(pi[x], pi[y])) pre.add(x, y);
    gens.push_back(std::move(pre));
  }
  auto r = CoarseStructure::make(std::move(ground_x), std::move(gens));
  if (!r.ok()) throw Error("pullback_coarse: " + r.error());
  return std::move(r.value());
}

CoarseStructure metric_coarse(std::vector<std::string> ground,
                              const std::vector<std::vector<int>>& distance,
                              const std::vector<int>& radii) {
  const int n = static_cast<int>(ground.size());
  if (static_cast<int>(distance.size()) != n)
    throw Error("metric_coarse: distance matrix is not square");
  for (const auto& row : distance)
    if (static_cast<int>(row.size()) != n)
      throw Error("metric_coarse: distance matrix is not square");
  std::vector<Relation> gens;
  for (int r : radii) {
    Relation e(n);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (distance[x][y] <= r) e.add(x, y);
    gens.push_back(std::move(e));
  }
  auto res = CoarseStructure::make(std::move(ground), std::move(gens));
  if (!res.ok()) throw Error("metric_coarse: " + res.error());
  return std::move(res.value());
}

}  // namespace aw::coarse
