#include "aw/space.hpp"

#include <algorithm>
#include <numeric>

namespace aw {

namespace {

std::string duplicate_label_check(const std::vector<std::string>& labels) {
  std::vector<std::string> sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  auto it = std::adjacent_find(sorted.begin(), sorted.end());
  if (it != sorted.end()) return *it;
  return {};
}

}  // namespace

Result<FiniteSpace> FiniteSpace::validate(std::vector<std::string> labels,
                                          const std::vector<std::vector<bool>>& below) {
  const int n = static_cast<int>(labels.size());
  if (n == 0) return Result<FiniteSpace>::failure("space must have at least one point");
  if (n > kMaxPoints)
    return Result<FiniteSpace>::failure("space exceeds capacity of 64 points");
  if (static_cast<int>(below.size()) != n)
    return Result<FiniteSpace>::failure("below matrix is not square over the point list");
  for (const auto& row : below)
    if (static_cast<int>(row.size()) != n)
      return Result<FiniteSpace>::failure("below matrix is not square over the point list");
  if (std::string dup = duplicate_label_check(labels); !dup.empty())
    return Result<FiniteSpace>::failure("duplicate point label '" + dup + "'");

  for (int x = 0; x < n; ++x)
    if (!below[x][x])
      return Result<FiniteSpace>::failure("below is not reflexive at point '" + labels[x] + "'");

  // Transitivity: below(x,y) and below(y,z) force below(x,z).
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (!below[x][y]) continue;
      for (int z = 0; z < n; ++z)
        if (below[y][z] && !below[x][z])
          return Result<FiniteSpace>::failure(
              "below is not transitive: witness (" + labels[x] + ", " + labels[y] + ", " +
              labels[z] + ")");
    }

  FiniteSpace s;
  s.labels_ = std::move(labels);
  s.closure_of_point_.assign(n, Subset{});
  s.upset_of_point_.assign(n, Subset{});
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x)
      if (below[x][y]) s.closure_of_point_[y].add(x);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      if (s.closure_of_point_[q].contains(p)) s.upset_of_point_[p].add(q);
  return Result<FiniteSpace>::success(std::move(s));
}

FiniteSpace FiniteSpace::from_point_closures(std::vector<std::string> labels,
                                             std::vector<Subset> closures) {
  const int n = static_cast<int>(labels.size());
  if (n == 0 || n > kMaxPoints) throw Error("from_point_closures: bad point count");
  if (static_cast<int>(closures.size()) != n)
    throw Error("from_point_closures: closure table size mismatch");
  std::vector<std::vector<bool>> below(n, std::vector<bool>(n, false));
  for (int y = 0; y < n; ++y)
    for_each_element(closures[y], [&](int x) { below[x][y] = true; });
  auto r = validate(std::move(labels), below);
  if (!r.ok()) throw Error("from_point_closures: " + r.error());
  return std::move(r.value());
}

FiniteSpace FiniteSpace::discrete(std::vector<std::string> labels) {
  std::vector<Subset> cl(labels.size());
  for (int p = 0; p < static_cast<int>(labels.size()); ++p) cl[p] = Subset::single(p);
  return from_point_closures(std::move(labels), std::move(cl));
}

FiniteSpace FiniteSpace::chain(std::vector<std::string> labels) {
  std::vector<Subset> cl(labels.size());
  for (int p = 0; p < static_cast<int>(labels.size()); ++p) cl[p] = Subset::first_n(p + 1);
  return from_point_closures(std::move(labels), std::move(cl));
}

std::optional<int> FiniteSpace::index_of(std::string_view label) const {
  for (int p = 0; p < size(); ++p)
    if (labels_[p] == label) return p;
  return std::nullopt;
}

Subset FiniteSpace::closure(Subset a) const {
  if (!a.subset_of(all())) throw Error("closure: subset refers to points outside the space");
  Subset out;
  for_each_element(a, [&](int p) { out |= closure_of_point_[p]; });
  return out;
}

bool FiniteSpace::is_discrete() const {
  for (int p = 0; p < size(); ++p)
    if (closure_of_point_[p] != Subset::single(p)) return false;
  return true;
}

std::vector<Subset> enumerate_closed_sets(const FiniteSpace& space, int cap) {
  const int n = space.size();
  if (n > cap)
    throw Error("enumerate_closed_sets: space has " + std::to_string(n) +
                " points, oracle cap is " + std::to_string(cap));
  std::vector<Subset> out;
  const std::uint64_t end = std::uint64_t{1} << n;
  for (std::uint64_t m = 0; m < end; ++m) {
    Subset a{m};
    if (space.closure(a) == a) out.push_back(a);
  }
  return out;
}

std::vector<Subset> connected_components(const FiniteSpace& space) {
  const int n = space.size();
  std::vector<Subset> reach(n);
  for (int p = 0; p < n; ++p) reach[p] = space.point_closure(p) | space.point_upset(p);
  std::vector<bool> seen(n, false);
  std::vector<Subset> out;
  for (int p = 0; p < n; ++p) {
    if (seen[p]) continue;
    Subset comp = Subset::single(p);
    Subset frontier = comp;
    while (!frontier.empty_set()) {
      Subset next;
      for_each_element(frontier, [&](int q) { next |= reach[q]; });
      frontier = next - comp;
      comp |= next;
    }
    for_each_element(comp, [&](int q) { seen[q] = true; });
    out.push_back(comp);
  }
  // Discovery order from index 0 already sorts components by minimum point.
  return out;
}

FiniteSpace subspace(const FiniteSpace& space, Subset a, const std::string& label_prefix) {
  if (a.empty_set()) throw Error("subspace: empty subset (empty spaces are excluded)");
  if (!a.subset_of(space.all())) throw Error("subspace: subset outside the space");
  const std::vector<int> pts = a.elements();
  std::vector<int> new_index(space.size(), -1);
  for (int i = 0; i < static_cast<int>(pts.size()); ++i) new_index[pts[i]] = i;
  std::vector<std::string> labels;
  std::vector<Subset> cl(pts.size());
  labels.reserve(pts.size());
  for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
    labels.push_back(label_prefix + space.label(pts[i]));
    for_each_element(space.point_closure(pts[i]) & a,
                     [&](int q) { cl[i].add(new_index[q]); });
  }
  return FiniteSpace::from_point_closures(std::move(labels), std::move(cl));
}

FiniteSpace product(const FiniteSpace& a, const FiniteSpace& b) {
  const int na = a.size(), nb = b.size();
  if (na * nb > FiniteSpace::kMaxPoints)
    throw Error("product: " + std::to_string(na * nb) + " points exceeds capacity");
  std::vector<std::string> labels;
  std::vector<Subset> cl(na * nb);
  labels.reserve(na * nb);
  for (int x = 0; x < na; ++x)
    for (int y = 0; y < nb; ++y) {
      labels.push_back("(" + a.label(x) + "," + b.label(y) + ")");
      Subset c;
      for_each_element(a.point_closure(x), [&](int xa) {
        for_each_element(b.point_closure(y), [&](int yb) { c.add(xa * nb + yb); });
      });
      cl[x * nb + y] = c;
    }
  return FiniteSpace::from_point_closures(std::move(labels), std::move(cl));
}

SpaceMap::SpaceMap(FiniteSpace domain, FiniteSpace codomain, std::vector<int> table)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), table_(std::move(table)) {
  if (static_cast<int>(table_.size()) != domain_.size())
    throw Error("SpaceMap: table is not total over the domain");
  for (int v : table_)
    if (v < 0 || v >= codomain_.size()) throw Error("SpaceMap: image point out of range");
}

SpaceMap SpaceMap::identity(const FiniteSpace& space) {
  std::vector<int> t(space.size());
  std::iota(t.begin(), t.end(), 0);
  return SpaceMap(space, space, std::move(t));
}

SpaceMap SpaceMap::constant(const FiniteSpace& domain, const FiniteSpace& codomain,
                            int target_point) {
  return SpaceMap(domain, codomain, std::vector<int>(domain.size(), target_point));
}

Subset SpaceMap::image(Subset a) const {
  Subset out;
  for_each_element(a, [&](int p) { out.add(table_[p]); });
  return out;
}

Subset SpaceMap::preimage(Subset b) const {
  Subset out;
  for (int p = 0; p < domain_.size(); ++p)
    if (b.contains(table_[p])) out.add(p);
  return out;
}

bool SpaceMap::is_continuous() const {
  for (int y = 0; y < domain_.size(); ++y) {
    Subset target = codomain_.point_closure(table_[y]);
    bool ok = true;
    for_each_element(domain_.point_closure(y), [&](int x) {
      if (!target.contains(table_[x])) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

bool SpaceMap::is_injective() const {
  Subset seen;
  for (int v : table_) {
    if (seen.contains(v)) return false;
    seen.add(v);
  }
  return true;
}

bool SpaceMap::is_closed_map() const {
  if (domain_.size() > FiniteSpace::kOracleCap)
    throw Error("is_closed_map: domain exceeds the oracle cap");
  for (Subset c : enumerate_closed_sets(domain_))
    if (!codomain_.is_closed(image(c))) return false;
  return true;
}

SpaceMap SpaceMap::then(const SpaceMap& next) const {
  if (codomain_ != next.domain_) throw Error("SpaceMap::then: space chain mismatch");
  std::vector<int> t(table_.size());
  for (std::size_t i = 0; i < table_.size(); ++i) t[i] = next.table_[table_[i]];
  return SpaceMap(domain_, next.codomain_, std::move(t));
}

bool is_continuous(const SpaceMap& m) { return m.is_continuous(); }

namespace {

bool iso_extend(const FiniteSpace& a, const FiniteSpace& b, std::vector<int>& perm,
                Subset used, int next) {
  const int n = a.size();
  if (next == n) return true;
  for (int cand = 0; cand < n; ++cand) {
    if (used.contains(cand)) continue;
    if (a.point_closure(next).count() != b.point_closure(cand).count()) continue;
    bool ok = true;
    for (int prev = 0; prev < next && ok; ++prev) {
      if (a.below(prev, next) != b.below(perm[prev], cand)) ok = false;
      if (a.below(next, prev) != b.below(cand, perm[prev])) ok = false;
    }
    if (!ok) continue;
    perm[next] = cand;
    Subset u = used;
    u.add(cand);
    if (iso_extend(a, b, perm, u, next + 1)) return true;
  }
  return false;
}

}  // namespace

bool isomorphic(const FiniteSpace& a, const FiniteSpace& b) {
  if (a.size() != b.size()) return false;
  std::vector<int> perm(a.size(), -1);
  return iso_extend(a, b, perm, Subset{}, 0);
}

bool isomorphic_by_labels(const FiniteSpace& a, const FiniteSpace& b) {
  if (a.size() != b.size()) return false;
  std::vector<int> to_b(a.size());
  for (int p = 0; p < a.size(); ++p) {
    auto q = b.index_of(a.label(p));
    if (!q) return false;
    to_b[p] = *q;
  }
  for (int y = 0; y < a.size(); ++y)
    for (int x = 0; x < a.size(); ++x)
      if (a.below(x, y) != b.below(to_b[x], to_b[y])) return false;
  return true;
}

}  // namespace aw
