#include <algorithm>
#include <set>

#include "aw/coarse.hpp"
#include "aw/gen.hpp"
#include "doctest.h"

using namespace aw;
using namespace aw::coarse;

namespace {

std::vector<std::string> ground_labels(int n) {
  std::vector<std::string> out(n);
  for (int i = 0; i < n; ++i) out[i] = "g" + std::to_string(i);
  return out;
}

CoarseStructure trivial(int n) {
  return CoarseStructure::make(ground_labels(n), {}).value();
}

// From-the-axioms oracle, route one: breadth-first generation of every
// relation reachable from the generators and the diagonal under union,
// composition and inverse; a relation is controlled when some reachable
// relation dominates it. Only usable while the closure stays small.
std::set<Relation> generative_closure(int n, const std::vector<Relation>& gens,
                                      std::size_t cap) {
  std::set<Relation> seen;
  std::vector<Relation> queue;
  auto push = [&](const Relation& r) {
    if (seen.insert(r).second) queue.push_back(r);
  };
  push(Relation::diagonal(n));
  for (const Relation& g : gens) push(g);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    if (seen.size() > cap) throw Error("generative closure too large");
    Relation a = queue[head];
    push(a.inverse());
    for (std::size_t j = 0; j <= head; ++j) {
      Relation b = queue[j];
      push(a | b);
      push(a.compose_after(b));
      push(b.compose_after(a));
    }
  }
  return seen;
}

bool generative_controlled(const std::set<Relation>& closure, const Relation& e) {
  for (const Relation& m : closure)
    if (e.subset_of(m)) return true;
  return false;
}

// Route two: the monotone single-relation fixpoint. Axioms 1 and 3-5 grow
// a largest member; axiom 2 turns membership into domination by it.
Relation fixpoint_maximum(int n, const std::vector<Relation>& gens) {
  Relation m = Relation::diagonal(n);
  for (const Relation& g : gens) m = m | g;
  while (true) {
    Relation next = m | m.inverse() | m.compose_after(m);
    if (next == m) return m;
    m = next;
  }
}

}  // namespace

TEST_CASE("controlled: diagonal, generator subsets, full relation") {
  CoarseStructure t2 = trivial(2);
  CHECK(t2.controlled(Relation::diagonal(2)));
  CHECK_FALSE(t2.controlled(Relation::full(2)));

  Relation gen(3);
  gen.add(0, 1);
  gen.add(1, 2);
  CoarseStructure cs = CoarseStructure::make(ground_labels(3), {gen}).value();
  Relation sub(3);
  sub.add(0, 1);
  CHECK(cs.controlled(sub));
  CHECK(cs.controlled(Relation::diagonal(3)));

  Relation off(4);
  off.add(3, 0);
  CHECK_THROWS_AS(t2.controlled(off), Error);
}

TEST_CASE("controlled agrees with the generative search (small grounds)") {
  Rng rng(120);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + rng.below_int(2);  // 2..3
    std::vector<Relation> gens;
    for (int i = 0, k = rng.below_int(3); i < k; ++i)
      gens.push_back(gen::relation(rng, n, 1 + rng.below_int(3)));
    auto closure = generative_closure(n, gens, 4096);
    CoarseStructure cs = CoarseStructure::make(ground_labels(n), gens).value();
    const std::uint64_t cells = std::uint64_t{1} << (n * n);
    for (std::uint64_t code = 0; code < cells; ++code) {
      Relation e(n);
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          if ((code >> (x * n + y)) & 1u) e.add(x, y);
      CHECK(cs.controlled(e) == generative_controlled(closure, e));
    }
  }
}

TEST_CASE("controlled agrees with the fixpoint maximum (grounds 4..6)") {
  Rng rng(121);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 4 + rng.below_int(3);
    std::vector<Relation> gens;
    for (int i = 0, k = rng.below_int(3); i < k; ++i)
      gens.push_back(gen::relation(rng, n, 1 + rng.below_int(2 * n)));
    CoarseStructure cs = CoarseStructure::make(ground_labels(n), gens).value();
    Relation m = fixpoint_maximum(n, gens);
    if (n == 4) {
      const std::uint64_t cells = std::uint64_t{1} << 16;
      for (std::uint64_t code = 0; code < cells; ++code) {
        Relation e(4);
        for (int x = 0; x < 4; ++x)
          for (int y = 0; y < 4; ++y)
            if ((code >> (x * 4 + y)) & 1u) e.add(x, y);
        CHECK(cs.controlled(e) == e.subset_of(m));
      }
    } else {
      for (int s = 0; s < 500; ++s) {
        Relation e = gen::relation(rng, n, 1 + rng.below_int(n * n));
        CHECK(cs.controlled(e) == e.subset_of(m));
      }
    }
  }
}

TEST_CASE("coarse structure axioms hold on sampled relations") {
  Rng rng(122);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 2 + rng.below_int(5);
    CoarseStructure cs = gen::coarse_structure(rng, n);
    CHECK(cs.controlled(Relation::diagonal(n)));
    for (int s = 0; s < 40; ++s) {
      Relation e = gen::relation(rng, n, 1 + rng.below_int(n));
      Relation ep = gen::relation(rng, n, 1 + rng.below_int(n));
      if (cs.controlled(e)) {
        // subsets
        Relation sub(n);
        for (int x = 0; x < n; ++x)
          for (int y = 0; y < n; ++y)
            if (e.has(x, y) && rng.coin()) sub.add(x, y);
        CHECK(cs.controlled(sub));
        CHECK(cs.controlled(e.inverse()));
        if (cs.controlled(ep)) {
          CHECK(cs.controlled(e | ep));
          CHECK(cs.controlled(ep.compose_after(e)));
        }
      }
    }
  }
}

TEST_CASE("bounded: singletons, empty set, trivial structure") {
  CoarseStructure t2 = trivial(2);
  CHECK(t2.bounded(Subset::single(0)));
  CHECK(t2.bounded(Subset::empty()));
  CHECK_FALSE(t2.bounded(Subset::first_n(2)));
}

TEST_CASE("preceq: subset lemma, reflexivity, trivial separation, preorder") {
  Rng rng(123);
  CoarseStructure t3 = trivial(3);
  CHECK_FALSE(t3.preceq(Subset::single(0), Subset::single(1)));
  CHECK(t3.preceq(Subset::single(0), Subset::single(0)));

  for (int trial = 0; trial < 25; ++trial) {
    const int n = 2 + rng.below_int(5);
    CoarseStructure cs = gen::coarse_structure(rng, n);
    Subset all = Subset::first_n(n);
    for (int s = 0; s < 40; ++s) {
      Subset a = Subset{rng.next()} & all;
      Subset b = Subset{rng.next()} & all;
      Subset c = Subset{rng.next()} & all;
      if (a.subset_of(b)) CHECK(cs.preceq(a, b));
      CHECK(cs.preceq(a, a));
      if (cs.preceq(a, b) && cs.preceq(b, c)) CHECK(cs.preceq(a, c));
    }
  }
}

TEST_CASE("coarse maps: identity, constants, broken images") {
  Rng rng(124);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + rng.below_int(4);
    CoarseStructure cs = gen::coarse_structure(rng, n);
    std::vector<int> id(n);
    for (int i = 0; i < n; ++i) id[i] = i;
    CHECK(is_coarse_map(cs, cs, id));
  }

  // Constant into a one-point structure: coarse iff the source is bounded.
  CoarseStructure pt = trivial(1);
  CoarseStructure unbounded = trivial(2);
  CHECK_FALSE(is_coarse_map(unbounded, pt, {0, 0}));
  Relation join(2);
  join.add(0, 1);
  CoarseStructure bounded2 = CoarseStructure::make(ground_labels(2), {join}).value();
  CHECK(is_coarse_map(bounded2, pt, {0, 0}));

  // Identity with a controlled pair upstream and nothing downstream.
  CHECK_FALSE(is_coarse_map(bounded2, unbounded, {0, 1}));
}

TEST_CASE("closeness: equal maps, bounded targets, trivial separation") {
  CoarseStructure t3 = trivial(3);
  std::vector<int> f = {0, 1, 2}, g = {0, 1, 2}, h = {0, 1, 1};
  CHECK(are_close(t3, f, g));
  CHECK_FALSE(are_close(t3, f, h));

  Relation join(3);
  join.add(1, 2);
  CoarseStructure partial = CoarseStructure::make(ground_labels(3), {join}).value();
  CHECK(are_close(partial, f, h));
}

TEST_CASE("quasi-inverses: identities, non-coarse rejection") {
  Rng rng(125);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + rng.below_int(4);
    CoarseStructure cs = gen::coarse_structure(rng, n);
    std::vector<int> id(n);
    for (int i = 0; i < n; ++i) id[i] = i;
    auto r = is_quasi_inverse(cs, cs, id, id);
    REQUIRE(r.ok());
    CHECK(r.value());
  }

  CoarseStructure pt = trivial(1);
  CoarseStructure unbounded = trivial(2);
  auto bad = is_quasi_inverse(unbounded, pt, {0, 0}, {0});
  REQUIRE_FALSE(bad.ok());
  CHECK(bad.error().find("forward") != std::string::npos);
}

TEST_CASE("pullback_coarse: fixtures and the block example") {
  // Full target structure pulls back to the full structure.
  Relation full2 = Relation::full(2);
  CoarseStructure zeta = CoarseStructure::make(ground_labels(2), {full2}).value();
  CoarseStructure eps = pullback_coarse({0, 0, 1, 1}, ground_labels(4), zeta);
  CHECK(eps.controlled(Relation::full(4)));

  // One-point target: everything bounded.
  CoarseStructure one = trivial(1);
  CoarseStructure over_pt = pullback_coarse({0, 0, 0}, ground_labels(3), one);
  CHECK(over_pt.bounded(Subset::first_n(3)));

  // Blocks over {0,1,2} with (0,1) joined: controlled iff the projected
  // relation is dominated, cross-checked on every relation of a 6-point
  // ground... on a 4-point ground exhaustively and 6-point sampled.
  Relation join(3);
  join.add(0, 1);
  CoarseStructure gamma = CoarseStructure::make(ground_labels(3), {join}).value();
  std::vector<int> pi6 = {0, 0, 1, 1, 2, 2};
  CoarseStructure e6 = pullback_coarse(pi6, ground_labels(6), gamma);
  Rng rng(126);
  auto projected_controlled = [&](const Relation& e) {
    Relation proj(3);
    for (int x = 0; x < 6; ++x)
      for (int y = 0; y < 6; ++y)
        if (e.has(x, y)) proj.add(pi6[x], pi6[y]);
    return gamma.controlled(proj);
  };
  for (int s = 0; s < 2000; ++s) {
    Relation e = gen::relation(rng, 6, 1 + rng.below_int(12));
    CHECK(e6.controlled(e) == projected_controlled(e));
  }
  std::vector<int> pi4 = {0, 1, 1, 2};
  CoarseStructure e4 = pullback_coarse(pi4, ground_labels(4), gamma);
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << 16); ++code) {
    Relation e(4);
    for (int x = 0; x < 4; ++x)
      for (int y = 0; y < 4; ++y)
        if ((code >> (x * 4 + y)) & 1u) e.add(x, y);
    Relation proj(3);
    for (int x = 0; x < 4; ++x)
      for (int y = 0; y < 4; ++y)
        if (e.has(x, y)) proj.add(pi4[x], pi4[y]);
    CHECK(e4.controlled(e) == gamma.controlled(proj));
  }

  // The projection is coarse, sections are coarse, and each section is a
  // quasi-inverse of the projection.
  CHECK(is_coarse_map(e6, gamma, pi6));
  std::vector<std::vector<int>> sections = {{0, 2, 4}, {1, 3, 5}, {0, 3, 4}};
  for (const auto& iota : sections) {
    CHECK(is_coarse_map(gamma, e6, iota));
    auto qi = is_quasi_inverse(e6, gamma, pi6, iota);
    REQUIRE(qi.ok());
    CHECK(qi.value());
  }
}

TEST_CASE("monotone image: coarse maps preserve the subset preorder") {
  Rng rng(127);
  for (int trial = 0; trial < 30; ++trial) {
    const int ny = 2 + rng.below_int(3);
    CoarseStructure gamma = gen::coarse_structure(rng, ny);
    const int nx = ny * (1 + rng.below_int(2));
    std::vector<int> pi(nx);
    for (int i = 0; i < nx; ++i) pi[i] = i % ny;
    CoarseStructure eps = pullback_coarse(pi, ground_labels(nx), gamma);
    REQUIRE(is_coarse_map(eps, gamma, pi));
    for (int s = 0; s < 40; ++s) {
      Subset a = Subset{rng.next()} & Subset::first_n(nx);
      Subset b = Subset{rng.next()} & Subset::first_n(nx);
      if (!eps.preceq(a, b)) continue;
      Subset fa, fb;
      for (int i = 0; i < nx; ++i) {
        if (a.contains(i)) fa.add(pi[i]);
        if (b.contains(i)) fb.add(pi[i]);
      }
      CHECK(gamma.preceq(fa, fb));
    }
  }
}

TEST_CASE("metric structures and saturation overflow") {
  // Points on a line at unit spacing: radius-2 generator saturates to the
  // full structure (finite metric spaces are bounded).
  const int n = 5;
  std::vector<std::vector<int>> dist(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) dist[x][y] = std::abs(x - y);
  CoarseStructure cs = metric_coarse(ground_labels(n), dist, {2});
  CHECK(cs.controlled(Relation::full(n)));
  CHECK(cs.coarsely_connected());

  // Radius 0 keeps only the diagonal.
  CoarseStructure d0 = metric_coarse(ground_labels(n), dist, {0});
  CHECK_FALSE(d0.coarsely_connected());
  CHECK(d0.controlled(Relation::diagonal(n)));

  // A tiny insertion cap trips the overflow guard.
  Relation g(4);
  g.add(0, 1);
  g.add(2, 3);
  auto r = CoarseStructure::make(ground_labels(4), {g}, 1);
  REQUIRE_FALSE(r.ok());
  CHECK(r.error().find("saturation overflow") != std::string::npos);
}
