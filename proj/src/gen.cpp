#include "aw/gen.hpp"

#include <algorithm>
#include <numeric>

namespace aw::gen {

FiniteSpace space(Rng& rng, int n) {
  if (n < 1 || n > FiniteSpace::kMaxPoints) throw Error("gen::space: bad size");
  // Random DAG on the index order, then reachability closure plus identity.
  std::vector<Subset> direct(n);
  const int den = 2 + rng.below_int(3);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (rng.chance_in(1, den)) direct[j].add(i);  // i ∈ Cl{j}

  std::vector<Subset> cl(n);
  for (int j = 0; j < n; ++j) cl[j] = direct[j] | Subset::single(j);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int j = 0; j < n; ++j) {
      Subset next = cl[j];
      for_each_element(cl[j], [&](int i) { next |= cl[i]; });
      if (next != cl[j]) {
        cl[j] = next;
        changed = true;
      }
    }
  }
  std::vector<std::string> labels(n);
  for (int p = 0; p < n; ++p) labels[p] = "p" + std::to_string(p);
  return FiniteSpace::from_point_closures(std::move(labels), std::move(cl));
}

Subset subset(Rng& rng, const FiniteSpace& s) {
  return Subset{rng.next()} & s.all();
}

Subset closed_subset(Rng& rng, const FiniteSpace& s) { return s.closure(subset(rng, s)); }

std::optional<Subset> proper_open_subset(Rng& rng, const FiniteSpace& s) {
  const int n = s.size();
  for (int attempt = 0; attempt < 8; ++attempt) {
    Subset u = s.point_upset(rng.below_int(n));
    if (u != s.all()) return u;
  }
  // Deterministic sweep: single up-sets, then unions of two.
  for (int p = 0; p < n; ++p)
    if (s.point_upset(p) != s.all()) return s.point_upset(p);
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q) {
      Subset u = s.point_upset(p) | s.point_upset(q);
      if (u != s.all()) return u;
    }
  return std::nullopt;
}

namespace {

// Equivalence classes of equal point closures, ordered by closure size so
// that every class is visited after everything strictly below it.
std::vector<Subset> sweep_classes(const FiniteSpace& s) {
  std::vector<Subset> classes;
  Subset assigned;
  for (int p = 0; p < s.size(); ++p) {
    if (assigned.contains(p)) continue;
    Subset cls = Subset::single(p);
    for (int q = p + 1; q < s.size(); ++q)
      if (s.point_closure(q) == s.point_closure(p)) cls.add(q);
    assigned |= cls;
    classes.push_back(cls);
  }
  std::sort(classes.begin(), classes.end(), [&](Subset a, Subset b) {
    const int ca = s.point_closure(a.min_element()).count();
    const int cb = s.point_closure(b.min_element()).count();
    if (ca != cb) return ca < cb;
    return a.min_element() < b.min_element();
  });
  return classes;
}

}  // namespace

AdmissibleMap admissible(Rng& rng, const FiniteSpace& X, const FiniteSpace& Y) {
  std::vector<Subset> gen(X.size());
  for (Subset cls : sweep_classes(X)) {
    const int rep = cls.min_element();
    Subset base;
    for_each_element(X.point_closure(rep) - cls, [&](int below) { base |= gen[below]; });
    Subset value = base;
    if (rng.chance_in(1, 2)) value = Y.closure(value | subset(rng, Y));
    for_each_element(cls, [&](int p) { gen[p] = value; });
  }
  auto r = AdmissibleMap::make(X, Y, std::move(gen));
  if (!r.ok()) throw Error("gen::admissible produced an invalid map: " + r.error());
  return std::move(r.value());
}

AdmissiblePair pair(Rng& rng, const FiniteSpace& X, const FiniteSpace& Y) {
  AdmissibleMap f = admissible(rng, X, Y);
  // Build g under the two triangle constraints. For each point y, the
  // value must stay inside cap(y) = ∩ {Cl_X{x} : y ∈ gen_f(x)} (so that
  // f∘g never escapes) and must satisfy f(gen_g(y)) ⊆ Cl_Y{y}.
  std::vector<Subset> cap(Y.size(), X.all());
  for (int x = 0; x < X.size(); ++x)
    for_each_element(f.gen(x), [&](int y) { cap[y] &= X.point_closure(x); });

  std::vector<Subset> gg(Y.size());
  for (Subset cls : sweep_classes(Y)) {
    const int rep = cls.min_element();
    Subset base;
    for_each_element(Y.point_closure(rep) - cls, [&](int below) { base |= gg[below]; });
    Subset value = base;
    for (int attempt = 0; attempt < 3; ++attempt) {
      if (!rng.chance_in(1, 2)) break;
      Subset candidate = X.closure(base | (subset(rng, X) & cap[rep]));
      if (!candidate.subset_of(cap[rep])) continue;
      if (!f.apply(candidate).subset_of(Y.point_closure(rep))) continue;
      value = candidate;
      break;
    }
    for_each_element(cls, [&](int p) { gg[p] = value; });
  }
  auto g = AdmissibleMap::make(Y, X, std::move(gg));
  if (!g.ok()) throw Error("gen::pair produced an invalid g: " + g.error());
  auto p = check_pair(std::move(f), std::move(g.value()));
  if (!p.ok()) throw Error("gen::pair produced an invalid pair: " + p.error());
  return std::move(p.value());
}

SpaceMap point_map(Rng& rng, const FiniteSpace& dom, const FiniteSpace& cod) {
  std::vector<int> t(dom.size());
  for (int& v : t) v = rng.below_int(cod.size());
  return SpaceMap(dom, cod, std::move(t));
}

SpaceMap continuous_map(Rng& rng, const FiniteSpace& dom, const FiniteSpace& cod) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    SpaceMap m = point_map(rng, dom, cod);
    if (m.is_continuous()) return m;
  }
  return SpaceMap::constant(dom, cod, rng.below_int(cod.size()));
}

namespace {

FiniteSpace discrete_of_size(int n, const std::string& prefix) {
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = prefix + std::to_string(i);
  return FiniteSpace::discrete(labels);
}

// Finest common coarsening of two block assignments over the same set.
std::vector<int> join_partitions(const std::vector<int>& a, const std::vector<int>& b) {
  const int m = static_cast<int>(a.size());
  std::vector<int> parent(m);
  for (int i = 0; i < m; ++i) parent[i] = i;
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (a[i] == a[j] || b[i] == b[j]) parent[find(i)] = find(j);
  std::vector<int> block(m, -1);
  int next = 0;
  for (int i = 0; i < m; ++i) {
    int r = find(i);
    if (block[r] < 0) block[r] = next++;
    block[i] = block[r];
  }
  return block;
}

int renumber_blocks(std::vector<int>& p) {
  std::vector<int> map(p.size(), -1);
  int next = 0;
  for (int& v : p) {
    if (map[v] < 0) map[v] = next++;
    v = map[v];
  }
  return next;
}

std::vector<int> coarsen(Rng& rng, std::vector<int> part) {
  int blocks = renumber_blocks(part);
  while (blocks > 1 && rng.chance_in(1, 2)) {
    int a = rng.below_int(blocks), b = rng.below_int(blocks);
    if (a == b) continue;
    for (int& v : part)
      if (v == b) v = a;
    blocks = renumber_blocks(part);
  }
  return part;
}

}  // namespace

SumDiagram codirected_diagram(Rng& rng, int max_objects) {
  FiniteSpace X = space(rng, 1 + rng.below_int(3));
  const int m = 1 + rng.below_int(3);
  FiniteSpace Y0 = discrete_of_size(m, "y");
  AdmissibleMap f0 = admissible(rng, X, Y0);

  const int k = 1 + rng.below_int(max_objects);
  // Random poset on 1..k-1 aligned with index order, with 0 below all.
  std::vector<std::vector<bool>> leq(k, std::vector<bool>(k, false));
  for (int i = 0; i < k; ++i) leq[i][i] = true;
  for (int j = 1; j < k; ++j) {
    leq[0][j] = true;
    for (int i = 1; i < j; ++i)
      if (rng.chance_in(1, 3)) leq[i][j] = true;
  }
  for (int a = 0; a < k; ++a)  // transitive closure
    for (int b = 0; b < k; ++b)
      if (leq[b][a])
        for (int c = 0; c < k; ++c)
          if (leq[a][c]) leq[b][c] = true;

  // Monotone partition family: coarser up the poset.
  std::vector<std::vector<int>> part(k);
  part[0].resize(m);
  for (int i = 0; i < m; ++i) part[0][i] = i;
  for (int c = 1; c < k; ++c) {
    std::vector<int> base = part[0];
    for (int b = 0; b < c; ++b)
      if (leq[b][c]) base = join_partitions(base, part[b]);
    part[c] = coarsen(rng, std::move(base));
  }

  std::vector<std::string> names;
  std::vector<SumSpace> objects;
  for (int c = 0; c < k; ++c) {
    int blocks = *std::max_element(part[c].begin(), part[c].end()) + 1;
    FiniteSpace Yc = discrete_of_size(blocks, "o" + std::to_string(c) + "b");
    std::vector<Subset> gc(X.size());
    for (int x = 0; x < X.size(); ++x)
      for (int y : f0.gen(x).elements()) gc[x].add(part[c][y]);
    objects.push_back(glue(X, Yc, AdmissibleMap::make(X, Yc, std::move(gc)).value()));
    names.push_back("n" + std::to_string(c));
  }

  std::vector<SumDiagram::Arrow> arrows;
  for (int b = 0; b < k; ++b)
    for (int c = 0; c < k; ++c) {
      if (b == c || !leq[b][c]) continue;
      // Block-to-block table: part[b] refines part[c].
      int bblocks = objects[b].right_size();
      std::vector<int> tbl(bblocks, -1);
      for (int y = 0; y < m; ++y) tbl[part[b][y]] = part[c][y];
      arrows.push_back({b, c, std::move(tbl)});
    }

  auto d = SumDiagram::make(std::move(X), std::move(names), std::move(objects),
                            std::move(arrows));
  if (!d.ok()) throw Error("gen::codirected_diagram: " + d.error());
  return std::move(d.value());
}

coarse::Relation relation(Rng& rng, int ground_size, int expected_pairs) {
  coarse::Relation r(ground_size);
  for (int i = 0; i < expected_pairs; ++i)
    r.add(rng.below_int(ground_size), rng.below_int(ground_size));
  return r;
}

coarse::CoarseStructure coarse_structure(Rng& rng, int ground_size) {
  std::vector<std::string> labels(ground_size);
  for (int i = 0; i < ground_size; ++i) labels[i] = "g" + std::to_string(i);
  std::vector<coarse::Relation> gens;
  const int k = rng.below_int(3);
  for (int i = 0; i < k; ++i)
    gens.push_back(relation(rng, ground_size, 1 + rng.below_int(ground_size)));
  auto r = coarse::CoarseStructure::make(std::move(labels), std::move(gens));
  if (!r.ok()) throw Error("gen::coarse_structure: " + r.error());
  return std::move(r.value());
}

SumDiagram small_diagram(Rng& rng) {
  FiniteSpace X = space(rng, 1 + rng.below_int(2));
  const int k = 1 + rng.below_int(2);
  std::vector<std::string> names;
  std::vector<SumSpace> objects;
  for (int c = 0; c < k; ++c) {
    FiniteSpace Yc = space(rng, 1 + rng.below_int(2));
    objects.push_back(glue(X, Yc, admissible(rng, X, Yc)));
    names.push_back("n" + std::to_string(c));
  }
  std::vector<SumDiagram::Arrow> arrows;
  if (k == 2) {
    // A few parallel arrow candidates 0 → 1, kept when they are morphisms.
    for (int attempt = 0; attempt < 2; ++attempt) {
      std::vector<int> tbl(objects[0].right_size());
      for (int& v : tbl) v = rng.below_int(objects[1].right_size());
      SumDiagram::Arrow a{0, 1, tbl};
      std::vector<SumDiagram::Arrow> trial = arrows;
      trial.push_back(a);
      auto d = SumDiagram::make(X, names, objects, trial);
      if (d.ok()) arrows = std::move(trial);
    }
  }
  auto d = SumDiagram::make(std::move(X), std::move(names), std::move(objects),
                            std::move(arrows));
  if (!d.ok()) throw Error("gen::small_diagram: " + d.error());
  return std::move(d.value());
}

}  // namespace aw::gen
