#include "aw/enumerate.hpp"
#include "aw/gen.hpp"
#include "aw/transport.hpp"
#include "doctest.h"

using namespace aw;

namespace {

SumSpace random_sum(Rng& rng, int max_half) {
  FiniteSpace X = gen::space(rng, 1 + rng.below_int(max_half));
  FiniteSpace Y = gen::space(rng, 1 + rng.below_int(max_half));
  return glue(X, Y, gen::pair(rng, X, Y));
}

}  // namespace

TEST_CASE("diagram_continuity agrees with the total-map oracle") {
  Rng rng(70);
  int continuous_seen = 0;
  for (int trial = 0; trial < 400; ++trial) {
    SumSpace from = random_sum(rng, 4);
    SumSpace to = random_sum(rng, 4);
    SumMap m(from, to, gen::continuous_map(rng, from.left(), to.left()),
             gen::continuous_map(rng, from.right(), to.right()));
    bool verdict = diagram_continuity(m);
    CHECK(verdict == m.total_map().is_continuous());
    if (verdict) ++continuous_seen;
  }
  CHECK(continuous_seen > 0);  // the sweep exercises both outcomes
}

TEST_CASE("identity glueing map: continuous iff both maps grow pointwise") {
  FiniteSpace X = FiniteSpace::chain({"x0", "x1"});
  FiniteSpace Y = FiniteSpace::discrete({"y0", "y1"});
  auto pairs = all_admissible_pairs(X, Y);
  for (const AdmissiblePair& p : pairs)
    for (const AdmissiblePair& q : pairs) {
      SumSpace a = glue(X, Y, p);
      SumSpace b = glue(X, Y, q);
      bool verdict = diagram_continuity(SumMap::identity_between(a, b));
      bool grows = p.f.contained_in(q.f) && p.g.contained_in(q.g);
      CHECK(verdict == grows);
    }
}

TEST_CASE("maximal target maps make the identity continuous") {
  // f' = "whole Y" on every generator, g' = ∅: the right-hand sides of the
  // diagram inclusions are maximal, so any (f, ∅) maps in continuously.
  FiniteSpace X = FiniteSpace::chain({"x0", "x1"});
  FiniteSpace Y = FiniteSpace::discrete({"y0", "y1"});
  AdmissibleMap full = AdmissibleMap::make(X, Y, {Y.all(), Y.all()}).value();
  for (const AdmissibleMap& f : all_admissible_maps(X, Y)) {
    SumSpace a = glue(X, Y, f);
    SumSpace b = glue(X, Y, full);
    CHECK(diagram_continuity(SumMap::identity_between(a, b)));
  }
}

TEST_CASE("compose_through: identity chain, empty chain, direct evaluation") {
  Rng rng(71);
  for (int trial = 0; trial < 40; ++trial) {
    FiniteSpace X = gen::space(rng, 3);
    FiniteSpace W = gen::space(rng, 3);
    FiniteSpace Y = gen::space(rng, 4);
    FiniteSpace Z = gen::space(rng, 3);
    AdmissibleMap f = gen::admissible(rng, X, W);

    AdmissibleMap idX = AdmissibleMap::identity(X);
    AdmissibleMap idW = AdmissibleMap::identity(W);
    CHECK(compose_through(idW, f, idX) == f);

    AdmissibleMap pi = gen::admissible(rng, Y, X);
    AdmissibleMap sigma = gen::admissible(rng, W, Z);
    CHECK(compose_through(sigma, f, AdmissibleMap::empty_map(Y, X)).is_empty_map());

    AdmissibleMap through = compose_through(sigma, f, pi);
    for (Subset a : enumerate_closed_sets(Y))
      CHECK(through.apply(a) == sigma.apply(f.apply(pi.apply(a))));
  }
}

TEST_CASE("pullback: identity maps give f back; forced singleton example") {
  Rng rng(72);
  for (int trial = 0; trial < 30; ++trial) {
    FiniteSpace X = gen::space(rng, 4);
    FiniteSpace W = gen::space(rng, 4);
    AdmissibleMap f = gen::admissible(rng, X, W);
    CHECK(pullback(f, SpaceMap::identity(X), SpaceMap::identity(W)) == f);
  }

  FiniteSpace x = FiniteSpace::discrete({"x"});
  FiniteSpace w = FiniteSpace::discrete({"w"});
  AdmissibleMap f = AdmissibleMap::make(x, w, {Subset::single(0)}).value();
  FiniteSpace Y = FiniteSpace::discrete({"y1", "y2"});
  AdmissibleMap fstar = pullback(f, SpaceMap::constant(Y, x, 0), SpaceMap::identity(w));
  CHECK(fstar.gen(0) == Subset::single(0));
  CHECK(fstar.gen(1) == Subset::single(0));
}

TEST_CASE("pullback along subspace inclusions is the trace glueing map") {
  Rng rng(73);
  for (int trial = 0; trial < 60; ++trial) {
    FiniteSpace X = gen::space(rng, 1 + rng.below_int(4));
    FiniteSpace W = gen::space(rng, 1 + rng.below_int(4));
    AdmissibleMap f = gen::admissible(rng, X, W);
    Subset xs = gen::subset(rng, X);
    Subset ws = gen::subset(rng, W);
    if (xs.empty_set()) xs = Subset::single(rng.below_int(X.size()));
    if (ws.empty_set()) ws = Subset::single(rng.below_int(W.size()));
    FiniteSpace X1 = subspace(X, xs);
    FiniteSpace W1 = subspace(W, ws);
    std::vector<int> xi = xs.elements(), wi = ws.elements();
    SpaceMap inc_x(X1, X, xi);
    SpaceMap inc_w(W1, W, wi);
    AdmissibleMap f1 = pullback(f, inc_x, inc_w);

    // Trace formula f1(A) = f(Cl_X(A)) ∩ W1 on generators.
    for (int i = 0; i < X1.size(); ++i) {
      Subset lifted;
      for_each_element(X1.point_closure(i), [&](int q) { lifted.add(xi[q]); });
      Subset expect_raw = f.apply(X.closure(lifted)) & ws;
      Subset expect;
      for (int k = 0; k < static_cast<int>(wi.size()); ++k)
        if (expect_raw.contains(wi[k])) expect.add(k);
      CHECK(f1.gen(i) == expect);
    }

    // The glueing by f1 is the subspace of the glueing by f.
    SumSpace big = glue(X, W, f);
    SumSpace small = glue(X1, W1, f1);
    Subset union_mask = xs | Subset{ws.bits << X.size()};
    FiniteSpace trace = subspace(big.total(), union_mask);
    for (int a = 0; a < small.total().size(); ++a)
      for (int b = 0; b < small.total().size(); ++b)
        CHECK(small.total().below(a, b) == trace.below(a, b));
  }
}

TEST_CASE("pullback: continuity and universality") {
  Rng rng(74);
  for (int trial = 0; trial < 60; ++trial) {
    FiniteSpace X = gen::space(rng, 1 + rng.below_int(3));
    FiniteSpace W = gen::space(rng, 1 + rng.below_int(3));
    FiniteSpace Y = gen::space(rng, 1 + rng.below_int(3));
    FiniteSpace Z = gen::space(rng, 1 + rng.below_int(3));
    AdmissibleMap f = gen::admissible(rng, X, W);
    SpaceMap pi = gen::continuous_map(rng, Y, X);
    SpaceMap varpi = gen::continuous_map(rng, Z, W);
    AdmissibleMap fstar = pullback(f, pi, varpi);

    SumSpace source = glue(Y, Z, fstar);
    SumSpace target = glue(X, W, f);
    SumMap pv(source, target, pi, varpi);
    CHECK(diagram_continuity(pv));
    CHECK(pv.total_map().is_continuous());

    // Universality: any f' whose glueing maps in continuously sits below
    // f* pointwise.
    for (const AdmissibleMap& fp : all_admissible_maps(Y, Z)) {
      SumSpace cand = glue(Y, Z, fp);
      SumMap m(cand, target, pi, varpi);
      if (diagram_continuity(m)) CHECK(fp.contained_in(fstar));
    }
  }
}

TEST_CASE("pushforward: identity, collapse, continuity") {
  Rng rng(75);
  for (int trial = 0; trial < 30; ++trial) {
    FiniteSpace X = gen::space(rng, 4);
    FiniteSpace W = gen::space(rng, 4);
    AdmissibleMap f = gen::admissible(rng, X, W);
    CHECK(pushforward(f, SpaceMap::identity(X), SpaceMap::identity(W)) == f);

    // Collapse W to a point: values become ∅ or the point.
    FiniteSpace pt = FiniteSpace::discrete({"w"});
    AdmissibleMap fc = pushforward(f, SpaceMap::identity(X), SpaceMap::constant(W, pt, 0));
    for (int x = 0; x < X.size(); ++x)
      CHECK(fc.gen(x) == (f.gen(x).empty_set() ? Subset::empty() : Subset::single(0)));
  }

  for (int trial = 0; trial < 60; ++trial) {
    FiniteSpace X = gen::space(rng, 1 + rng.below_int(3));
    FiniteSpace W = gen::space(rng, 1 + rng.below_int(3));
    FiniteSpace Y = gen::space(rng, 1 + rng.below_int(3));
    FiniteSpace Z = gen::space(rng, 1 + rng.below_int(3));
    AdmissibleMap f = gen::admissible(rng, X, W);
    SpaceMap pi = gen::continuous_map(rng, X, Y);
    SpaceMap varpi = gen::continuous_map(rng, W, Z);
    AdmissibleMap fpush = pushforward(f, pi, varpi);
    SumMap m(glue(X, W, f), glue(Y, Z, fpush), pi, varpi);
    CHECK(diagram_continuity(m));
    CHECK(m.total_map().is_continuous());
  }

  // Non-continuous pi is rejected.
  FiniteSpace sier = FiniteSpace::chain({"s0", "s1"});
  FiniteSpace d2 = FiniteSpace::discrete({"d0", "d1"});
  AdmissibleMap f0 = AdmissibleMap::empty_map(sier, sier);
  CHECK_THROWS_AS(pushforward(f0, SpaceMap(sier, d2, {0, 1}), SpaceMap::identity(sier)),
                  Error);
}

TEST_CASE("pushforward extremality for injective closed second map") {
  Rng rng(76);
  for (int trial = 0; trial < 80; ++trial) {
    FiniteSpace X = gen::space(rng, 1 + rng.below_int(3));
    FiniteSpace W = gen::space(rng, 1 + rng.below_int(2));
    FiniteSpace Y = gen::space(rng, 1 + rng.below_int(3));
    AdmissibleMap f = gen::admissible(rng, X, W);
    SpaceMap pi = gen::continuous_map(rng, X, Y);

    // Z = W plus isolated extra points; the inclusion is injective,
    // closed and continuous.
    FiniteSpace extras = FiniteSpace::discrete({"e0", "e1"});
    SumSpace zsum = glue(W, extras, AdmissibleMap::empty_map(W, extras));
    FiniteSpace Z = zsum.total();
    std::vector<int> inc(W.size());
    for (int i = 0; i < W.size(); ++i) inc[i] = i;
    SpaceMap varpi(W, Z, inc);
    REQUIRE(varpi.is_injective());
    REQUIRE(varpi.is_closed_map());

    AdmissibleMap fpush = pushforward(f, pi, varpi);
    SumSpace from = glue(X, W, f);
    for (const AdmissibleMap& fp : all_admissible_maps(Y, Z)) {
      SumMap m(from, glue(Y, Z, fp), pi, varpi);
      if (diagram_continuity(m)) CHECK(fpush.contained_in(fp));
    }
  }
}

TEST_CASE("composition laws: double pullback and pullback/pushforward relations") {
  Rng rng(77);
  for (int trial = 0; trial < 120; ++trial) {
    FiniteSpace X = gen::space(rng, 1 + rng.below_int(3));
    FiniteSpace W = gen::space(rng, 1 + rng.below_int(3));
    FiniteSpace Y = gen::space(rng, 1 + rng.below_int(3));
    FiniteSpace Z = gen::space(rng, 1 + rng.below_int(3));
    FiniteSpace U = gen::space(rng, 1 + rng.below_int(3));
    FiniteSpace V = gen::space(rng, 1 + rng.below_int(3));
    AdmissibleMap f = gen::admissible(rng, X, W);

    // f** ⊆ (f*)* for arbitrary point maps.
    SpaceMap pi = gen::point_map(rng, Y, X);
    SpaceMap varpi = gen::point_map(rng, Z, W);
    SpaceMap rho = gen::point_map(rng, U, Y);
    SpaceMap varrho = gen::point_map(rng, V, Z);
    AdmissibleMap fstar = pullback(f, pi, varpi);
    AdmissibleMap fss = pullback(f, rho.then(pi), varrho.then(varpi));
    CHECK(fss.contained_in(pullback(fstar, rho, varrho)));
  }

  for (int trial = 0; trial < 120; ++trial) {
    // (f*)_* = f for surjective continuous legs built as product bundles.
    FiniteSpace X = gen::space(rng, 1 + rng.below_int(3));
    FiniteSpace W = gen::space(rng, 1 + rng.below_int(3));
    AdmissibleMap f = gen::admissible(rng, X, W);
    std::vector<std::string> fib;
    for (int i = 0, k = 1 + rng.below_int(2); i < k; ++i) fib.push_back("c" + std::to_string(i));
    FiniteSpace FY = FiniteSpace::discrete(fib);
    FiniteSpace Y = product(X, FY);
    FiniteSpace Z = product(W, FY);
    std::vector<int> py(Y.size()), pz(Z.size());
    for (int x = 0; x < X.size(); ++x)
      for (int c = 0; c < FY.size(); ++c) py[x * FY.size() + c] = x;
    for (int w = 0; w < W.size(); ++w)
      for (int c = 0; c < FY.size(); ++c) pz[w * FY.size() + c] = w;
    SpaceMap pi(Y, X, py), varpi(Z, W, pz);
    REQUIRE(pi.is_surjective());
    REQUIRE(pi.is_continuous());
    AdmissibleMap fstar = pullback(f, pi, varpi);
    CHECK(pushforward(fstar, pi, varpi) == f);
  }

  for (int trial = 0; trial < 120; ++trial) {
    // (f*)_* ⊆ f for continuous legs in general.
    FiniteSpace X = gen::space(rng, 1 + rng.below_int(3));
    FiniteSpace W = gen::space(rng, 1 + rng.below_int(3));
    FiniteSpace Y = gen::space(rng, 1 + rng.below_int(3));
    FiniteSpace Z = gen::space(rng, 1 + rng.below_int(3));
    AdmissibleMap f = gen::admissible(rng, X, W);
    SpaceMap pi = gen::continuous_map(rng, Y, X);
    SpaceMap varpi = gen::continuous_map(rng, Z, W);
    AdmissibleMap back = pushforward(pullback(f, pi, varpi), pi, varpi);
    CHECK(back.contained_in(f));
  }

  for (int trial = 0; trial < 120; ++trial) {
    // (f_*)* ⊇ f for continuous legs.
    FiniteSpace X = gen::space(rng, 1 + rng.below_int(3));
    FiniteSpace W = gen::space(rng, 1 + rng.below_int(3));
    FiniteSpace Y = gen::space(rng, 1 + rng.below_int(3));
    FiniteSpace Z = gen::space(rng, 1 + rng.below_int(3));
    AdmissibleMap f = gen::admissible(rng, X, W);
    SpaceMap pi = gen::continuous_map(rng, X, Y);
    SpaceMap varpi = gen::continuous_map(rng, W, Z);
    AdmissibleMap there_back = pullback(pushforward(f, pi, varpi), pi, varpi);
    CHECK(f.contained_in(there_back));
  }
}

TEST_CASE("cube lemma: constructed premises imply the glued map is continuous") {
  Rng rng(78);
  for (int trial = 0; trial < 80; ++trial) {
    FiniteSpace X1 = gen::space(rng, 1 + rng.below_int(3));
    FiniteSpace W1 = gen::space(rng, 1 + rng.below_int(3));
    FiniteSpace X2 = gen::space(rng, 1 + rng.below_int(3));
    FiniteSpace W2 = gen::space(rng, 1 + rng.below_int(3));
    AdmissibleMap f1 = gen::admissible(rng, X1, W1);
    SpaceMap mu = gen::continuous_map(rng, X1, X2);
    SpaceMap nu = gen::continuous_map(rng, W1, W2);
    AdmissibleMap f2 = pushforward(f1, mu, nu);  // makes mu+nu continuous

    FiniteSpace Y1 = gen::space(rng, 1 + rng.below_int(3));
    FiniteSpace Y2 = gen::space(rng, 1 + rng.below_int(3));
    FiniteSpace Z1 = gen::space(rng, 1 + rng.below_int(3));
    FiniteSpace Z2 = gen::space(rng, 1 + rng.below_int(3));
    SpaceMap psi = gen::continuous_map(rng, Y1, Y2);
    SpaceMap phi = gen::continuous_map(rng, Z1, Z2);
    AdmissibleMap Pi2 = gen::admissible(rng, Y2, X2);
    AdmissibleMap Sigma2 = gen::admissible(rng, W2, Z2);

    // Transported legs satisfy the two inclusion diagrams by construction.
    std::vector<Subset> pi1(Y1.size()), sigma1(W1.size());
    for (int y = 0; y < Y1.size(); ++y)
      pi1[y] = mu.preimage(Pi2.apply(Y2.closure(psi.image(Y1.point_closure(y)))));
    for (int w = 0; w < W1.size(); ++w)
      sigma1[w] = phi.preimage(Sigma2.apply(W2.closure(nu.image(W1.point_closure(w)))));
    AdmissibleMap Pi1 = AdmissibleMap::make(Y1, X1, pi1).value();
    AdmissibleMap Sigma1 = AdmissibleMap::make(W1, Z1, sigma1).value();

    // Premise diagrams (generator check).
    for (int y2 = 0; y2 < Y2.size(); ++y2)
      CHECK(Pi1.apply(psi.preimage(Y2.point_closure(y2)))
                .subset_of(mu.preimage(Pi2.gen(y2))));
    for (int w2 = 0; w2 < W2.size(); ++w2)
      CHECK(Sigma1.apply(nu.preimage(W2.point_closure(w2)))
                .subset_of(phi.preimage(Sigma2.gen(w2))));

    AdmissibleMap g1 = compose_through(Sigma1, f1, Pi1);
    AdmissibleMap g2 = compose_through(Sigma2, f2, Pi2);
    SumMap m(glue(Y1, Z1, g1), glue(Y2, Z2, g2), psi, phi);
    CHECK(diagram_continuity(m));
    CHECK(m.total_map().is_continuous());
  }
}
