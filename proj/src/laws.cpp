#include "aw/laws.hpp"

#include <algorithm>
#include <functional>

#include "aw/ends.hpp"
#include "aw/enumerate.hpp"
#include "aw/gen.hpp"
#include "aw/io.hpp"
#include "aw/transport.hpp"

namespace aw::harness {

namespace {

using nlohmann::json;

// ------------------------------------------------------------------
// Glueing instances: the shrinkable unit of the glueing suite.

struct GlueInstance {
  FiniteSpace X, Y;
  AdmissiblePair pair;
};

GlueInstance random_glue(Rng& rng, int max_half) {
  FiniteSpace X = gen::space(rng, 1 + rng.below_int(max_half));
  FiniteSpace Y = gen::space(rng, 1 + rng.below_int(max_half));
  AdmissiblePair p = gen::pair(rng, X, Y);
  return GlueInstance{std::move(X), std::move(Y), std::move(p)};
}

json describe_glue(const GlueInstance& g) {
  return json{{"f", io::map_to_json(g.pair.f)},
              {"g_gen", io::map_to_json(g.pair.g)["gen"]}};
}

std::vector<int> inclusion_table(Subset kept) { return kept.elements(); }

// Point-removal shrinks: restrict either half, transporting both maps by
// pullback along the inclusions (which preserves admissible pairs).
std::vector<GlueInstance> shrink_glue(const GlueInstance& g) {
  std::vector<GlueInstance> out;
  auto restricted = [&](Subset keep_x, Subset keep_y) -> std::optional<GlueInstance> {
    FiniteSpace X1 = subspace(g.X, keep_x);
    FiniteSpace Y1 = subspace(g.Y, keep_y);
    SpaceMap ix(X1, g.X, inclusion_table(keep_x));
    SpaceMap iy(Y1, g.Y, inclusion_table(keep_y));
    AdmissibleMap f1 = pullback(g.pair.f, ix, iy);
    AdmissibleMap g1 = pullback(g.pair.g, iy, ix);
    auto p = check_pair(std::move(f1), std::move(g1));
    if (!p.ok()) return std::nullopt;
    return GlueInstance{std::move(X1), std::move(Y1), std::move(p.value())};
  };
  for (int p = 0; p < g.X.size() && g.X.size() > 1; ++p)
    if (auto c = restricted(g.X.all() - Subset::single(p), g.Y.all())) out.push_back(*c);
  for (int p = 0; p < g.Y.size() && g.Y.size() > 1; ++p)
    if (auto c = restricted(g.X.all(), g.Y.all() - Subset::single(p))) out.push_back(*c);
  return out;
}

json minimize_glue(GlueInstance inst, const std::function<bool(const GlueInstance&)>& fails) {
  bool progressed = true;
  while (progressed) {
    progressed = false;
    for (GlueInstance& c : shrink_glue(inst))
      if (fails(c)) {
        inst = std::move(c);
        progressed = true;
        break;
      }
  }
  return describe_glue(inst);
}

// ------------------------------------------------------------------
// Law registry.

struct Law {
  std::string id;
  std::uint64_t max_runs;
  std::function<std::optional<json>(std::uint64_t)> run;  // trial seed → counterexample
};

constexpr std::uint64_t kUnbounded = ~std::uint64_t{0};

std::optional<json> glue_law(std::uint64_t seed, int max_half,
                             const std::function<bool(const GlueInstance&)>& violated) {
  Rng rng(seed);
  GlueInstance inst = random_glue(rng, max_half);
  if (!violated(inst)) return std::nullopt;
  return minimize_glue(std::move(inst), violated);
}

bool tau_axioms_violated(const GlueInstance& g) {
  SumSpace s = glue(g.X, g.Y, g.pair);
  auto family = glued_closed_family(s);
  if (family != enumerate_closed_sets(s.total())) return true;
  if (std::find(family.begin(), family.end(), Subset::empty()) == family.end()) return true;
  if (std::find(family.begin(), family.end(), s.total().all()) == family.end()) return true;
  for (Subset a : family)
    for (Subset b : family)
      if (!glued_closed(s, a | b) || !glued_closed(s, a & b)) return true;
  return false;
}

bool closure_formula_violated(const GlueInstance& g) {
  SumSpace s = glue(g.X, g.Y, g.pair);
  for (Subset a : enumerate_closed_sets(g.X))
    if (s.total().closure(s.lift_left(a)) != (s.lift_left(a) | s.lift_right(g.pair.f.apply(a))))
      return true;
  for (Subset b : enumerate_closed_sets(g.Y))
    if (s.total().closure(s.lift_right(b)) != (s.lift_right(b) | g.pair.g.apply(b)))
      return true;
  return false;
}

bool embedding_violated(const GlueInstance& g) {
  SumSpace s = glue(g.X, g.Y, g.pair);
  FiniteSpace lx = subspace(s.total(), s.left_part());
  FiniteSpace ry = subspace(s.total(), s.right_part());
  for (int a = 0; a < g.X.size(); ++a)
    for (int b = 0; b < g.X.size(); ++b)
      if (lx.below(a, b) != g.X.below(a, b)) return true;
  for (int a = 0; a < g.Y.size(); ++a)
    for (int b = 0; b < g.Y.size(); ++b)
      if (ry.below(a, b) != g.Y.below(a, b)) return true;
  return !s.embed_left().is_continuous() || !s.embed_right().is_continuous();
}

bool decompose_glue_violated(const GlueInstance& g) {
  SumSpace s = glue(g.X, g.Y, g.pair);
  auto back = decompose(s.total(), s.left_part(), SplitRule::kAny);
  if (!back.ok()) return true;
  return back.value().f.gen_table() != g.pair.f.gen_table() ||
         back.value().g.gen_table() != g.pair.g.gen_table();
}

bool density_violated(const GlueInstance& g) {
  SumSpace s = glue(g.X, g.Y, g.pair);
  bool left = is_dense_left(s);
  if (left != (g.pair.f.image_of_all() == g.Y.all())) return true;
  if (left != (s.total().closure(s.left_part()) == s.total().all())) return true;
  bool right = is_dense_right(s);
  if (right != (g.pair.g.image_of_all() == g.X.all())) return true;
  return right != (s.total().closure(s.right_part()) == s.total().all());
}

// ------------------------------------------------------------------
// Suite: glueing.

std::vector<Law> glueing_laws() {
  std::vector<Law> laws;
  laws.push_back({"glueing/tau-axioms", kUnbounded, [](std::uint64_t s) {
                    return glue_law(s, 4, tau_axioms_violated);
                  }});
  laws.push_back({"glueing/closure-formula", kUnbounded, [](std::uint64_t s) {
                    return glue_law(s, 5, closure_formula_violated);
                  }});
  laws.push_back({"glueing/embedding", kUnbounded, [](std::uint64_t s) {
                    return glue_law(s, 5, embedding_violated);
                  }});
  laws.push_back({"glueing/decompose-glue", kUnbounded, [](std::uint64_t s) {
                    return glue_law(s, 4, decompose_glue_violated);
                  }});
  laws.push_back({"glueing/glue-decompose", kUnbounded,
                  [](std::uint64_t s) -> std::optional<json> {
                    Rng rng(s);
                    FiniteSpace Z = gen::space(rng, 2 + rng.below_int(5));
                    auto open = gen::proper_open_subset(rng, Z);
                    if (!open) return std::nullopt;
                    auto p = decompose(Z, *open);
                    if (!p.ok()) return json{{"space", io::space_to_json(Z)}};
                    SumSpace s =
                        glue(subspace(Z, *open), subspace(Z, Z.all() - *open), p.value());
                    std::vector<int> order = (*open).elements();
                    for (int q : (Z.all() - *open).elements()) order.push_back(q);
                    for (int a = 0; a < Z.size(); ++a)
                      for (int b = 0; b < Z.size(); ++b)
                        if (s.total().below(a, b) != Z.below(order[a], order[b]))
                          return json{{"space", io::space_to_json(Z)},
                                      {"open", (*open).elements()}};
                    return std::nullopt;
                  }});
  laws.push_back({"glueing/density", kUnbounded, [](std::uint64_t s) {
                    return glue_law(s, 5, density_violated);
                  }});
  laws.push_back({"glueing/right-closed", kUnbounded,
                  [](std::uint64_t s) -> std::optional<json> {
                    Rng rng(s);
                    FiniteSpace X = gen::space(rng, 1 + rng.below_int(5));
                    FiniteSpace Y = gen::space(rng, 1 + rng.below_int(5));
                    AdmissibleMap f = gen::admissible(rng, X, Y);
                    SumSpace s2 = glue(X, Y, f);
                    if (s2.total().is_closed(s2.right_part())) return std::nullopt;
                    return json{{"f", io::map_to_json(f)}};
                  }});
  laws.push_back({"glueing/hausdorff", kUnbounded,
                  [](std::uint64_t s) -> std::optional<json> {
                    Rng rng(s);
                    auto labels = [&](char c, int n) {
                      std::vector<std::string> out;
                      for (int i = 0; i < n; ++i) out.push_back(std::string(1, c) + std::to_string(i));
                      return out;
                    };
                    FiniteSpace X = FiniteSpace::discrete(labels('x', 1 + rng.below_int(3)));
                    FiniteSpace Y = FiniteSpace::discrete(labels('y', 1 + rng.below_int(3)));
                    AdmissibleMap f = gen::admissible(rng, X, Y);
                    bool verdict = hausdorff_criterion(X, Y, f);
                    bool oracle = glue(X, Y, f).total().is_discrete();
                    if (verdict == oracle) return std::nullopt;
                    return json{{"f", io::map_to_json(f)},
                                {"verdict", verdict},
                                {"discrete", oracle}};
                  }});
  laws.push_back(
      {"glueing/validation", kUnbounded, [](std::uint64_t s) -> std::optional<json> {
         Rng rng(s);
         FiniteSpace X = gen::space(rng, 1 + rng.below_int(4));
         FiniteSpace Y = gen::space(rng, 1 + rng.below_int(4));
         // Raw, possibly invalid table.
         std::vector<Subset> table(X.size());
         for (Subset& v : table) v = gen::subset(rng, Y);
         bool definition = true;
         for (int x = 0; x < X.size() && definition; ++x) {
           if (!Y.is_closed(table[x])) definition = false;
           for (int p : X.point_closure(x).elements())
             if (!table[p].subset_of(table[x])) definition = false;
         }
         bool accepted = AdmissibleMap::make(X, Y, table).ok();
         if (accepted == definition) return std::nullopt;
         json tj = json::array();
         for (Subset v : table) tj.push_back(v.elements());
         return json{{"source", io::space_to_json(X)},
                     {"target", io::space_to_json(Y)},
                     {"table", tj},
                     {"accepted", accepted},
                     {"definition", definition}};
       }});
  return laws;
}

// ------------------------------------------------------------------
// Suite: transport.

SumSpace random_sum(Rng& rng, int max_half) {
  GlueInstance g = random_glue(rng, max_half);
  return glue(g.X, g.Y, g.pair);
}

std::optional<json> diagram_criterion_trial(std::uint64_t seed, int max_half) {
  Rng rng(seed);
  SumSpace from = random_sum(rng, max_half);
  SumSpace to = random_sum(rng, max_half);
  SumMap m(from, to, gen::continuous_map(rng, from.left(), to.left()),
           gen::continuous_map(rng, from.right(), to.right()));
  bool verdict = diagram_continuity(m);
  // Total-map preimage oracle over the enumerated closed sets.
  SpaceMap total = m.total_map();
  bool oracle = true;
  for (Subset c : enumerate_closed_sets(to.total()))
    if (!from.total().is_closed(total.preimage(c))) oracle = false;
  if (verdict == oracle) return std::nullopt;
  return json{{"from", io::sum_to_json(from)},
              {"to", io::sum_to_json(to)},
              {"psi", m.psi().table()},
              {"phi", m.phi().table()},
              {"verdict", verdict}};
}

std::vector<Law> transport_laws() {
  std::vector<Law> laws;
  laws.push_back({"transport/diagram-criterion", kUnbounded, [](std::uint64_t s) {
                    return diagram_criterion_trial(s, 6);
                  }});
  laws.push_back({"transport/compose-through", kUnbounded,
                  [](std::uint64_t s) -> std::optional<json> {
                    Rng rng(s);
                    FiniteSpace Y = gen::space(rng, 1 + rng.below_int(4));
                    FiniteSpace X = gen::space(rng, 1 + rng.below_int(4));
                    FiniteSpace W = gen::space(rng, 1 + rng.below_int(4));
                    FiniteSpace Z = gen::space(rng, 1 + rng.below_int(4));
                    AdmissibleMap pi = gen::admissible(rng, Y, X);
                    AdmissibleMap f = gen::admissible(rng, X, W);
                    AdmissibleMap sigma = gen::admissible(rng, W, Z);
                    AdmissibleMap through = compose_through(sigma, f, pi);
                    for (Subset a : enumerate_closed_sets(Y))
                      if (through.apply(a) != sigma.apply(f.apply(pi.apply(a))))
                        return json{{"pi", io::map_to_json(pi)},
                                    {"f", io::map_to_json(f)},
                                    {"sigma", io::map_to_json(sigma)},
                                    {"at", a.elements()}};
                    return std::nullopt;
                  }});
  laws.push_back({"transport/pullback-continuity", kUnbounded,
                  [](std::uint64_t s) -> std::optional<json> {
                    Rng rng(s);
                    FiniteSpace X = gen::space(rng, 1 + rng.below_int(3));
                    FiniteSpace W = gen::space(rng, 1 + rng.below_int(3));
                    FiniteSpace Y = gen::space(rng, 1 + rng.below_int(3));
                    FiniteSpace Z = gen::space(rng, 1 + rng.below_int(3));
                    AdmissibleMap f = gen::admissible(rng, X, W);
                    SpaceMap pi = gen::continuous_map(rng, Y, X);
                    SpaceMap varpi = gen::continuous_map(rng, Z, W);
                    AdmissibleMap fstar = pullback(f, pi, varpi);
                    SumMap m(glue(Y, Z, fstar), glue(X, W, f), pi, varpi);
                    if (diagram_continuity(m) && m.total_map().is_continuous())
                      return std::nullopt;
                    return json{{"f", io::map_to_json(f)},
                                {"pi", pi.table()},
                                {"varpi", varpi.table()}};
                  }});
  laws.push_back({"transport/pullback-universality", kUnbounded,
                  [](std::uint64_t s) -> std::optional<json> {
                    Rng rng(s);
                    FiniteSpace X = gen::space(rng, 1 + rng.below_int(3));
                    FiniteSpace W = gen::space(rng, 1 + rng.below_int(3));
                    FiniteSpace Y = gen::space(rng, 1 + rng.below_int(3));
                    FiniteSpace Z = gen::space(rng, 1 + rng.below_int(3));
                    AdmissibleMap f = gen::admissible(rng, X, W);
                    SpaceMap pi = gen::continuous_map(rng, Y, X);
                    SpaceMap varpi = gen::continuous_map(rng, Z, W);
                    AdmissibleMap fstar = pullback(f, pi, varpi);
                    SumSpace target = glue(X, W, f);
                    for (const AdmissibleMap& fp : all_admissible_maps(Y, Z)) {
                      SumMap m(glue(Y, Z, fp), target, pi, varpi);
                      if (diagram_continuity(m) && !fp.contained_in(fstar))
                        return json{{"f", io::map_to_json(f)},
                                    {"f_prime", io::map_to_json(fp)},
                                    {"pi", pi.table()},
                                    {"varpi", varpi.table()}};
                    }
                    return std::nullopt;
                  }});
  laws.push_back({"transport/pushforward-continuity", kUnbounded,
                  [](std::uint64_t s) -> std::optional<json> {
                    Rng rng(s);
                    FiniteSpace X = gen::space(rng, 1 + rng.below_int(3));
                    FiniteSpace W = gen::space(rng, 1 + rng.below_int(3));
                    FiniteSpace Y = gen::space(rng, 1 + rng.below_int(3));
                    FiniteSpace Z = gen::space(rng, 1 + rng.below_int(3));
                    AdmissibleMap f = gen::admissible(rng, X, W);
                    SpaceMap pi = gen::continuous_map(rng, X, Y);
                    SpaceMap varpi = gen::continuous_map(rng, W, Z);
                    AdmissibleMap fpush = pushforward(f, pi, varpi);
                    SumMap m(glue(X, W, f), glue(Y, Z, fpush), pi, varpi);
                    if (diagram_continuity(m) && m.total_map().is_continuous())
                      return std::nullopt;
                    return json{{"f", io::map_to_json(f)},
                                {"pi", pi.table()},
                                {"varpi", varpi.table()}};
                  }});
  laws.push_back(
      {"transport/pushforward-extremality", kUnbounded,
       [](std::uint64_t s) -> std::optional<json> {
         Rng rng(s);
         FiniteSpace X = gen::space(rng, 1 + rng.below_int(3));
         FiniteSpace W = gen::space(rng, 1 + rng.below_int(2));
         FiniteSpace Y = gen::space(rng, 1 + rng.below_int(3));
         AdmissibleMap f = gen::admissible(rng, X, W);
         SpaceMap pi = gen::continuous_map(rng, X, Y);
         FiniteSpace extras = FiniteSpace::discrete({"e0", "e1"});
         SumSpace zs = glue(W, extras, AdmissibleMap::empty_map(W, extras));
         FiniteSpace Z = zs.total();
         std::vector<int> inc(W.size());
         for (int i = 0; i < W.size(); ++i) inc[i] = i;
         SpaceMap varpi(W, Z, inc);  // injective, closed, continuous
         AdmissibleMap fpush = pushforward(f, pi, varpi);
         SumSpace from = glue(X, W, f);
         for (const AdmissibleMap& fp : all_admissible_maps(Y, Z)) {
           SumMap m(from, glue(Y, Z, fp), pi, varpi);
           if (diagram_continuity(m) && !fpush.contained_in(fp))
             return json{{"f", io::map_to_json(f)}, {"f_prime", io::map_to_json(fp)}};
         }
         return std::nullopt;
       }});
  laws.push_back({"transport/double-pullback", kUnbounded,
                  [](std::uint64_t s) -> std::optional<json> {
                    Rng rng(s);
                    FiniteSpace X = gen::space(rng, 1 + rng.below_int(3));
                    FiniteSpace W = gen::space(rng, 1 + rng.below_int(3));
                    FiniteSpace Y = gen::space(rng, 1 + rng.below_int(3));
                    FiniteSpace Z = gen::space(rng, 1 + rng.below_int(3));
                    FiniteSpace U = gen::space(rng, 1 + rng.below_int(3));
                    FiniteSpace V = gen::space(rng, 1 + rng.below_int(3));
                    AdmissibleMap f = gen::admissible(rng, X, W);
                    SpaceMap pi = gen::point_map(rng, Y, X);
                    SpaceMap varpi = gen::point_map(rng, Z, W);
                    SpaceMap rho = gen::point_map(rng, U, Y);
                    SpaceMap varrho = gen::point_map(rng, V, Z);
                    AdmissibleMap fstar = pullback(f, pi, varpi);
                    AdmissibleMap fss = pullback(f, rho.then(pi), varrho.then(varpi));
                    if (fss.contained_in(pullback(fstar, rho, varrho))) return std::nullopt;
                    return json{{"f", io::map_to_json(f)},
                                {"pi", pi.table()},
                                {"varpi", varpi.table()},
                                {"rho", rho.table()},
                                {"varrho", varrho.table()}};
                  }});
  laws.push_back(
      {"transport/pullback-pushforward-surjective", kUnbounded,
       [](std::uint64_t s) -> std::optional<json> {
         Rng rng(s);
         FiniteSpace X = gen::space(rng, 1 + rng.below_int(3));
         FiniteSpace W = gen::space(rng, 1 + rng.below_int(3));
         AdmissibleMap f = gen::admissible(rng, X, W);
         std::vector<std::string> fib;
         for (int i = 0, k = 1 + rng.below_int(2); i < k; ++i)
           fib.push_back("c" + std::to_string(i));
         FiniteSpace FY = FiniteSpace::discrete(fib);
         FiniteSpace Y = product(X, FY);
         FiniteSpace Z = product(W, FY);
         std::vector<int> py(Y.size()), pz(Z.size());
         for (int x = 0; x < X.size(); ++x)
           for (int c = 0; c < FY.size(); ++c) py[x * FY.size() + c] = x;
         for (int w = 0; w < W.size(); ++w)
           for (int c = 0; c < FY.size(); ++c) pz[w * FY.size() + c] = w;
         SpaceMap pi(Y, X, py), varpi(Z, W, pz);
         if (pushforward(pullback(f, pi, varpi), pi, varpi) == f) return std::nullopt;
         return json{{"f", io::map_to_json(f)}, {"copies", FY.size()}};
       }});
  laws.push_back({"transport/pullback-pushforward-general", kUnbounded,
                  [](std::uint64_t s) -> std::optional<json> {
                    Rng rng(s);
                    FiniteSpace X = gen::space(rng, 1 + rng.below_int(3));
                    FiniteSpace W = gen::space(rng, 1 + rng.below_int(3));
                    FiniteSpace Y = gen::space(rng, 1 + rng.below_int(3));
                    FiniteSpace Z = gen::space(rng, 1 + rng.below_int(3));
                    AdmissibleMap f = gen::admissible(rng, X, W);
                    SpaceMap pi = gen::continuous_map(rng, Y, X);
                    SpaceMap varpi = gen::continuous_map(rng, Z, W);
                    if (pushforward(pullback(f, pi, varpi), pi, varpi).contained_in(f))
                      return std::nullopt;
                    return json{{"f", io::map_to_json(f)},
                                {"pi", pi.table()},
                                {"varpi", varpi.table()}};
                  }});
  laws.push_back({"transport/pushforward-pullback-general", kUnbounded,
                  [](std::uint64_t s) -> std::optional<json> {
                    Rng rng(s);
                    FiniteSpace X = gen::space(rng, 1 + rng.below_int(3));
                    FiniteSpace W = gen::space(rng, 1 + rng.below_int(3));
                    FiniteSpace Y = gen::space(rng, 1 + rng.below_int(3));
                    FiniteSpace Z = gen::space(rng, 1 + rng.below_int(3));
                    AdmissibleMap f = gen::admissible(rng, X, W);
                    SpaceMap pi = gen::continuous_map(rng, X, Y);
                    SpaceMap varpi = gen::continuous_map(rng, W, Z);
                    if (f.contained_in(pullback(pushforward(f, pi, varpi), pi, varpi)))
                      return std::nullopt;
                    return json{{"f", io::map_to_json(f)},
                                {"pi", pi.table()},
                                {"varpi", varpi.table()}};
                  }});
  laws.push_back(
      {"transport/cube-lemma", kUnbounded, [](std::uint64_t s) -> std::optional<json> {
         Rng rng(s);
         FiniteSpace X1 = gen::space(rng, 1 + rng.below_int(3));
         FiniteSpace W1 = gen::space(rng, 1 + rng.below_int(3));
         FiniteSpace X2 = gen::space(rng, 1 + rng.below_int(3));
         FiniteSpace W2 = gen::space(rng, 1 + rng.below_int(3));
         AdmissibleMap f1 = gen::admissible(rng, X1, W1);
         SpaceMap mu = gen::continuous_map(rng, X1, X2);
         SpaceMap nu = gen::continuous_map(rng, W1, W2);
         AdmissibleMap f2 = pushforward(f1, mu, nu);

         FiniteSpace Y1 = gen::space(rng, 1 + rng.below_int(3));
         FiniteSpace Y2 = gen::space(rng, 1 + rng.below_int(3));
         FiniteSpace Z1 = gen::space(rng, 1 + rng.below_int(3));
         FiniteSpace Z2 = gen::space(rng, 1 + rng.below_int(3));
         SpaceMap psi = gen::continuous_map(rng, Y1, Y2);
         SpaceMap phi = gen::continuous_map(rng, Z1, Z2);
         AdmissibleMap Pi2 = gen::admissible(rng, Y2, X2);
         AdmissibleMap Sigma2 = gen::admissible(rng, W2, Z2);
         std::vector<Subset> pi1(Y1.size()), sigma1(W1.size());
         for (int y = 0; y < Y1.size(); ++y)
           pi1[y] = mu.preimage(Pi2.apply(Y2.closure(psi.image(Y1.point_closure(y)))));
         for (int w = 0; w < W1.size(); ++w)
           sigma1[w] = phi.preimage(Sigma2.apply(W2.closure(nu.image(W1.point_closure(w)))));
         AdmissibleMap Pi1 = AdmissibleMap::make(Y1, X1, pi1).value();
         AdmissibleMap Sigma1 = AdmissibleMap::make(W1, Z1, sigma1).value();
         // Premises hold by construction; recheck them anyway so a broken
         // construction cannot pass as a vacuous conclusion.
         for (int y2 = 0; y2 < Y2.size(); ++y2)
           if (!Pi1.apply(psi.preimage(Y2.point_closure(y2)))
                    .subset_of(mu.preimage(Pi2.gen(y2))))
             return json{{"stage", "premise-pi"}};
         for (int w2 = 0; w2 < W2.size(); ++w2)
           if (!Sigma1.apply(nu.preimage(W2.point_closure(w2)))
                    .subset_of(phi.preimage(Sigma2.gen(w2))))
             return json{{"stage", "premise-sigma"}};
         AdmissibleMap g1 = compose_through(Sigma1, f1, Pi1);
         AdmissibleMap g2 = compose_through(Sigma2, f2, Pi2);
         SumMap m(glue(Y1, Z1, g1), glue(Y2, Z2, g2), psi, phi);
         if (diagram_continuity(m) && m.total_map().is_continuous()) return std::nullopt;
         return json{{"f1", io::map_to_json(f1)},
                     {"Pi2", io::map_to_json(Pi2)},
                     {"Sigma2", io::map_to_json(Sigma2)},
                     {"psi", psi.table()},
                     {"phi", phi.table()}};
       }});
  laws.push_back(
      {"transport/compactness-transfer", kUnbounded,
       [](std::uint64_t s) -> std::optional<json> {
         // Degenerate finite reading: properness is vacuous; with both
         // legs surjective, pullbacks of glueings whose map hits every
         // nonempty closed set keep that property.
         Rng rng(s);
         FiniteSpace X = gen::space(rng, 1 + rng.below_int(3));
         FiniteSpace W = gen::space(rng, 1 + rng.below_int(3));
         FiniteSpace Y = gen::space(rng, 1 + rng.below_int(3));
         FiniteSpace Z = gen::space(rng, 1 + rng.below_int(3));
         AdmissibleMap f = gen::admissible(rng, X, W);
         SpaceMap pi = gen::continuous_map(rng, Y, X);
         SpaceMap varpi = gen::continuous_map(rng, Z, W);
         if (!pi.is_surjective() || !varpi.is_surjective()) return std::nullopt;
         for (Subset a : enumerate_closed_sets(X))
           if (!a.empty_set() && f.apply(a).empty_set()) return std::nullopt;
         AdmissibleMap fstar = pullback(f, pi, varpi);
         for (Subset a : enumerate_closed_sets(Y))
           if (!a.empty_set() && fstar.apply(a).empty_set())
             return json{{"f", io::map_to_json(f)},
                         {"pi", pi.table()},
                         {"varpi", varpi.table()},
                         {"at", a.elements()}};
         return std::nullopt;
       }});
  return laws;
}

// ------------------------------------------------------------------
// Suite: limits.

std::vector<Law> limits_laws() {
  std::vector<Law> laws;
  laws.push_back({"limits/single-object", kUnbounded,
                  [](std::uint64_t s) -> std::optional<json> {
                    Rng rng(s);
                    FiniteSpace X = gen::space(rng, 1 + rng.below_int(3));
                    FiniteSpace Y = gen::space(rng, 1 + rng.below_int(3));
                    SumSpace obj = glue(X, Y, gen::admissible(rng, X, Y));
                    SumLimit lim = sum_limit(SumDiagram::make(X, {"o"}, {obj}, {}).value());
                    if (static_cast<int>(lim.threads.size()) != Y.size())
                      return json{{"object", io::sum_to_json(obj)}};
                    for (int a = 0; a < obj.total().size(); ++a)
                      for (int b = 0; b < obj.total().size(); ++b)
                        if (lim.full.total().below(a, b) != obj.total().below(a, b))
                          return json{{"object", io::sum_to_json(obj)}};
                    return std::nullopt;
                  }});
  laws.push_back({"limits/codirected-least", kUnbounded,
                  [](std::uint64_t s) -> std::optional<json> {
                    Rng rng(s);
                    SumDiagram d = gen::codirected_diagram(rng);
                    SumLimit lim = sum_limit(d);
                    const SumSpace& least = d.objects()[0];
                    json ce{{"objects", d.object_count()},
                            {"least", io::sum_to_json(least)}};
                    const int t = static_cast<int>(lim.threads.size());
                    if (t != least.right_size()) return ce;
                    std::vector<int> perm(t);
                    Subset seen;
                    for (int i = 0; i < t; ++i) {
                      perm[i] = lim.threads[i][0];
                      seen.add(perm[i]);
                    }
                    if (seen.count() != t) return ce;
                    for (int x = 0; x < d.base().size(); ++x) {
                      Subset expect;
                      for (int i = 0; i < t; ++i)
                        if (least.pair().f.gen(x).contains(perm[i])) expect.add(i);
                      if (lim.full.pair().f.gen(x) != expect) return ce;
                    }
                    for (int i = 0; i < t; ++i)
                      for (int j = 0; j < t; ++j)
                        if (lim.full.right().below(i, j) !=
                            least.right().below(perm[i], perm[j]))
                          return ce;
                    return std::nullopt;
                  }});
  laws.push_back({"limits/projections-commute", kUnbounded,
                  [](std::uint64_t s) -> std::optional<json> {
                    Rng rng(s);
                    SumDiagram d =
                        (s & 1) ? gen::codirected_diagram(rng) : gen::small_diagram(rng);
                    std::optional<SumLimit> lim;
                    try {
                      lim = sum_limit(d);
                    } catch (const Error&) {
                      return std::nullopt;
                    }
                    for (const SumDiagram::Arrow& a : d.arrows()) {
                      SpaceMap composed = lim->projections[a.from].total_map().then(
                          d.arrow_map(a).total_map());
                      if (!(composed == lim->projections[a.to].total_map()))
                        return json{{"arrow_from", a.from}, {"arrow_to", a.to}};
                    }
                    for (const SumMap& p : lim->projections)
                      if (!diagram_continuity(p) || !p.total_map().is_continuous())
                        return json{{"projection", "discontinuous"}};
                    return std::nullopt;
                  }});
  laws.push_back(
      {"limits/remainder-matching", kUnbounded, [](std::uint64_t s) -> std::optional<json> {
         Rng rng(s);
         SumDiagram d = gen::small_diagram(rng);
         std::optional<SumLimit> lim;
         try {
           lim = sum_limit(d);
         } catch (const Error&) {
           return std::nullopt;
         }
         std::vector<std::vector<int>> expect;
         std::vector<int> pick(d.object_count(), 0);
         while (true) {
           bool match = true;
           for (const SumDiagram::Arrow& a : d.arrows())
             if (a.phi[pick[a.from]] != pick[a.to]) match = false;
           if (match) expect.push_back(pick);
           int i = 0;
           while (i < d.object_count() && ++pick[i] == d.objects()[i].right_size())
             pick[i++] = 0;
           if (i == d.object_count()) break;
         }
         if (lim->threads != expect) return json{{"stage", "threads"}};
         // Product-model agreement within capacity.
         const int k = d.object_count();
         int psize = 1;
         for (const SumSpace& o : d.objects()) psize *= o.total().size();
         if (psize <= FiniteSpace::kMaxPoints) {
           FiniteSpace prod = d.objects()[0].total();
           for (int c = 1; c < k; ++c) prod = product(prod, d.objects()[c].total());
           std::vector<int> model;
           for (int x = 0; x < d.base().size(); ++x) {
             int idx = d.objects()[0].total_of_left(x);
             for (int c = 1; c < k; ++c)
               idx = idx * d.objects()[c].total().size() + d.objects()[c].total_of_left(x);
             model.push_back(idx);
           }
           for (const auto& th : lim->threads) {
             int idx = d.objects()[0].total_of_right(th[0]);
             for (int c = 1; c < k; ++c)
               idx = idx * d.objects()[c].total().size() + d.objects()[c].total_of_right(th[c]);
             model.push_back(idx);
           }
           Subset mask;
           for (int p : model) mask.add(p);
           FiniteSpace sub = subspace(prod, mask);
           std::vector<int> sorted = model;
           std::sort(sorted.begin(), sorted.end());
           auto pos = [&](int ambient) {
             return static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), ambient) -
                                     sorted.begin());
           };
           for (int a = 0; a < lim->full.total().size(); ++a)
             for (int b = 0; b < lim->full.total().size(); ++b)
               if (lim->full.total().below(a, b) != sub.below(pos(model[a]), pos(model[b])))
                 return json{{"stage", "product-model"}};
         }
         return std::nullopt;
       }});
  laws.push_back(
      {"limits/non-density-example", 1, [](std::uint64_t) -> std::optional<json> {
         FiniteSpace X = FiniteSpace::discrete({"xm", "xp"});
         auto mk = [&](const std::string& a, const std::string& b) {
           FiniteSpace Y = FiniteSpace::discrete({a, b});
           return glue(
               X, Y,
               AdmissibleMap::make(X, Y, {Subset::single(0), Subset::single(1)}).value());
         };
         SumSpace o1 = mk("a1", "b1");
         SumSpace o2 = mk("a2", "b2");
         if (!is_dense_left(o1) || !is_dense_left(o2))
           return json{{"stage", "objects-not-compactifications"}};
         SumLimit lim =
             sum_limit(SumDiagram::make(X, {"c1", "c2"}, {o1, o2}, {}).value());
         if (lim.threads.size() != 4) return json{{"stage", "thread-count"}};
         if (is_dense_left(lim.full)) return json{{"stage", "unexpected-density"}};
         if (!lim.dense || lim.dense->right_size() != 2 || !is_dense_left(*lim.dense))
           return json{{"stage", "dense-part"}};
         return std::nullopt;
       }});
  laws.push_back({"limits/stabilization-monotone", kUnbounded,
                  [](std::uint64_t s) -> std::optional<json> {
                    Rng rng(s);
                    int stages = 2 + rng.below_int(5);
                    std::vector<std::vector<std::string>> st(stages);
                    std::vector<std::vector<int>> bonds(stages - 1);
                    for (int k = 0; k < stages; ++k)
                      for (int i = 0, n = 1 + rng.below_int(3); i < n; ++i)
                        st[k].push_back(std::to_string(i));
                    for (int k = 0; k + 1 < stages; ++k) {
                      bonds[k].resize(st[k + 1].size());
                      for (int& v : bonds[k])
                        v = rng.below_int(static_cast<int>(st[k].size()));
                    }
                    auto sys = InverseSystem::make(st, bonds).value();
                    std::optional<int> prev;
                    for (int window = 1; window < stages; ++window) {
                      auto cur = detect_stabilization(sys, window);
                      if (window > 1 && cur && (!prev || *prev > *cur))
                        return json{{"stages", stages}, {"window", window}};
                      prev = cur;
                    }
                    return std::nullopt;
                  }});
  return laws;
}

// ------------------------------------------------------------------
// Suite: ends.

json ends_ce(const std::string& graph, int depth, int horizon, int count, bool certified) {
  return json{{"graph", graph},
              {"depth", depth},
              {"horizon", horizon},
              {"count", count},
              {"certified", certified}};
}

// Parameter shrinking for fixture failures: pull the depth and horizon
// down while the fixture keeps failing.
json minimize_fixture(const ends::LazyGraph& g, int depth, int horizon, int expected) {
  auto fails = [&](int d, int h) {
    if (d < 0 || h <= d) return false;
    ends::EndCount e = ends::end_count(g, d, h);
    return e.count != expected || !e.certified;
  };
  bool progressed = true;
  while (progressed) {
    progressed = false;
    if (fails(depth - 1, horizon)) {
      --depth;
      progressed = true;
    } else if (fails(depth, horizon - 1)) {
      --horizon;
      progressed = true;
    }
  }
  ends::EndCount e = ends::end_count(g, depth, horizon);
  return ends_ce(g.name, depth, horizon, e.count, e.certified);
}

std::optional<json> fixture_law(const ends::LazyGraph& g, int depth, int horizon,
                                int expected) {
  ends::EndCount e = ends::end_count(g, depth, horizon);
  if (e.count == expected && e.certified) return std::nullopt;
  return minimize_fixture(g, depth, horizon, expected);
}

std::vector<Law> ends_laws() {
  std::vector<Law> laws;
  laws.push_back({"ends/line-ends", 1, [](std::uint64_t) {
                    return fixture_law(ends::line_graph(), 5, 25, 2);
                  }});
  laws.push_back({"ends/grid-ends", 1, [](std::uint64_t) {
                    return fixture_law(ends::grid2_graph(), 5, 25, 1);
                  }});
  laws.push_back({"ends/ladder-ends", 1, [](std::uint64_t) {
                    return fixture_law(ends::ladder_graph(), 5, 25, 2);
                  }});
  laws.push_back({"ends/star-ends", 1, [](std::uint64_t) -> std::optional<json> {
                    for (int k = 1; k <= 6; ++k)
                      if (auto ce = fixture_law(ends::star_graph(k), 3, 20, k)) return ce;
                    return std::nullopt;
                  }});
  laws.push_back({"ends/tree-doubling", 1, [](std::uint64_t) -> std::optional<json> {
                    for (int n = 0; n <= 7; ++n) {
                      ends::ComponentStage s =
                          ends::stage_components(ends::tree2_graph(), n, n + 3);
                      if (s.escaping_count() != (2 << n))
                        return ends_ce("tree2", n, n + 3, s.escaping_count(), false);
                    }
                    return std::nullopt;
                  }});
  laws.push_back({"ends/tree-not-stabilized", 1, [](std::uint64_t) -> std::optional<json> {
                    InverseSystem sys =
                        end_system(ends::tree2_graph(), {0, 1, 2, 3, 4, 5, 6}, 9);
                    for (int window = 1; window <= 3; ++window)
                      if (detect_stabilization(sys, window))
                        return json{{"graph", "tree2"}, {"window", window}};
                    return std::nullopt;
                  }});
  laws.push_back(
      {"ends/bond-functoriality", 1, [](std::uint64_t) -> std::optional<json> {
         for (const char* name : {"line", "tree2", "star:3", "ladder", "grid2"}) {
           ends::LazyGraph g = ends::builtin_graph(name).value();
           std::vector<ends::ComponentStage> stages;
           for (int r = 0; r <= 8; ++r) stages.push_back(ends::stage_components(g, r, 12));
           for (int a = 0; a <= 8; ++a)
             for (int b = a + 1; b <= 8; ++b)
               for (int c = b + 1; c <= 8; ++c) {
                 auto ab = bonding(stages[a], stages[b]);
                 auto bc = bonding(stages[b], stages[c]);
                 auto ac = bonding(stages[a], stages[c]);
                 for (const auto& [fine, mid] : bc)
                   if (ac.at(fine) != ab.at(mid))
                     return json{{"graph", name}, {"radii", {a, b, c}}};
               }
         }
         return std::nullopt;
       }});
  laws.push_back(
      {"ends/bond-surjectivity", 1, [](std::uint64_t) -> std::optional<json> {
         for (const char* name : {"line", "tree2", "star:4", "grid2", "ladder"}) {
           ends::LazyGraph g = ends::builtin_graph(name).value();
           for (int coarse_r = 0; coarse_r <= 4; ++coarse_r)
             for (int fine_r = coarse_r; fine_r <= 6; ++fine_r) {
               ends::ComponentStage coarse = ends::stage_components(g, coarse_r, 9);
               ends::ComponentStage fine = ends::stage_components(g, fine_r, 9);
               auto bond = bonding(coarse, fine);
               std::set<ends::Vertex> image;
               for (const auto& [f, c] : bond) image.insert(c);
               for (int i : coarse.escaping())
                 if (!image.count(coarse.components[i].id))
                   return json{{"graph", name},
                               {"coarse", coarse_r},
                               {"fine", fine_r}};
             }
         }
         return std::nullopt;
       }});
  laws.push_back(
      {"ends/f_K-additivity", kUnbounded, [](std::uint64_t s) -> std::optional<json> {
         Rng rng(s);
         const char* names[] = {"line", "tree2", "star:3", "ladder"};
         ends::LazyGraph g = ends::builtin_graph(names[rng.below_int(4)]).value();
         int radius = rng.below_int(4);
         ends::ComponentStage stage = ends::stage_components(g, radius, radius + 4);
         auto sample = [&](ends::SetDescription& d) {
           for (const ends::Component& c : stage.components)
             if (rng.coin()) d.component_ids.push_back(c.id);
           for (int i = 0, n = rng.below_int(4); i < n; ++i)
             d.explicit_vertices.push_back(stage.core.empty()
                                               ? g.basepoint
                                               : stage.core[rng.below_int(
                                                     static_cast<int>(stage.core.size()))]);
         };
         ends::SetDescription f1, f2;
         sample(f1);
         sample(f2);
         if (ends::f_K_eval(stage, {}).empty() == false)
           return json{{"graph", g.name}, {"stage", radius}, {"case", "empty"}};
         ends::SetDescription both;
         both.explicit_vertices = f1.explicit_vertices;
         both.explicit_vertices.insert(both.explicit_vertices.end(),
                                       f2.explicit_vertices.begin(),
                                       f2.explicit_vertices.end());
         both.component_ids = f1.component_ids;
         both.component_ids.insert(both.component_ids.end(), f2.component_ids.begin(),
                                   f2.component_ids.end());
         std::set<ends::Vertex> lhs = ends::f_K_eval(stage, both);
         std::set<ends::Vertex> rhs = ends::f_K_eval(stage, f1);
         for (ends::Vertex v : ends::f_K_eval(stage, f2)) rhs.insert(v);
         if (lhs == rhs) return std::nullopt;
         return json{{"graph", g.name}, {"stage", radius}, {"case", "union"}};
       }});
  laws.push_back(
      {"ends/stage-space-completeness", 1, [](std::uint64_t) -> std::optional<json> {
         struct Fixture {
           const char* name;
           int radius, horizon;
         } fixtures[] = {{"line", 2, 10}, {"star:3", 1, 8}, {"ladder", 2, 9}};
         for (const auto& fx : fixtures) {
           ends::LazyGraph g = ends::builtin_graph(fx.name).value();
           ends::StageModel m = ends::stage_space(g, fx.radius, fx.horizon);
           if (!m.model) return json{{"graph", fx.name}, {"stage", "missing-model"}};
           for (int i : m.stage.escaping()) {
             Subset members;
             for (ends::Vertex v : m.stage.components[i].members)
               members.add(*m.model->left().index_of(g.label(v)));
             Subset cl = m.model->total().closure(m.model->lift_left(members));
             int end_pt =
                 *m.model->right().index_of(g.label(m.stage.components[i].id));
             if (!cl.contains(m.model->total_of_right(end_pt)))
               return json{{"graph", fx.name}, {"component", i}};
           }
         }
         return std::nullopt;
       }});
  laws.push_back(
      {"ends/extension-naturality", 1, [](std::uint64_t) -> std::optional<json> {
         ends::LazyGraph line = ends::line_graph();
         ends::LazyGraph half = ends::star_graph(1);
         auto fold = [](ends::Vertex v) { return v < 0 ? -v : v; };
         for (int n1 = 1; n1 <= 4; ++n1)
           for (int n2 = n1 + 1; n2 <= 5; ++n2) {
             auto e1 = ends::extend_proper_map(line, half, fold, n1, 14);
             auto e2 = ends::extend_proper_map(line, half, fold, n2, 14);
             auto src = bonding(e1.source_stage, e2.source_stage);
             auto tgt = bonding(e1.target_stage, e2.target_stage);
             for (const auto& [u, via_fine] : e2.component_map)
               if (tgt.at(via_fine) != e1.component_map.at(src.at(u)))
                 return json{{"radii", {n1, n2}}};
           }
         return std::nullopt;
       }});
  return laws;
}

// ------------------------------------------------------------------
// Suite: coarse.

json coarse_ce(const coarse::CoarseStructure& cs, const std::string& stage) {
  return json{{"structure", io::coarse_to_json(cs)}, {"stage", stage}};
}

coarse::Relation fixpoint_maximum(int n, const std::vector<coarse::Relation>& gens) {
  coarse::Relation m = coarse::Relation::diagonal(n);
  for (const coarse::Relation& g : gens) m = m | g;
  while (true) {
    coarse::Relation next = m | m.inverse() | m.compose_after(m);
    if (next == m) return m;
    m = next;
  }
}

std::vector<Law> coarse_laws() {
  std::vector<Law> laws;
  laws.push_back(
      {"coarse/axioms", kUnbounded, [](std::uint64_t s) -> std::optional<json> {
         Rng rng(s);
         const int n = 2 + rng.below_int(5);
         coarse::CoarseStructure cs = gen::coarse_structure(rng, n);
         if (!cs.controlled(coarse::Relation::diagonal(n)))
           return coarse_ce(cs, "diagonal");
         for (int i = 0; i < 1000; ++i) {
           coarse::Relation e = gen::relation(rng, n, 1 + rng.below_int(n));
           coarse::Relation ep = gen::relation(rng, n, 1 + rng.below_int(n));
           if (!cs.controlled(e)) continue;
           coarse::Relation sub(n);
           for (int x = 0; x < n; ++x)
             for (int y = 0; y < n; ++y)
               if (e.has(x, y) && rng.coin()) sub.add(x, y);
           if (!cs.controlled(sub)) return coarse_ce(cs, "subsets");
           if (!cs.controlled(e.inverse())) return coarse_ce(cs, "inverse");
           if (cs.controlled(ep)) {
             if (!cs.controlled(e | ep)) return coarse_ce(cs, "union");
             if (!cs.controlled(ep.compose_after(e))) return coarse_ce(cs, "composition");
           }
         }
         return std::nullopt;
       }});
  laws.push_back(
      {"coarse/preorder", kUnbounded, [](std::uint64_t s) -> std::optional<json> {
         Rng rng(s);
         const int n = 2 + rng.below_int(5);
         coarse::CoarseStructure cs = gen::coarse_structure(rng, n);
         Subset all = Subset::first_n(n);
         for (int i = 0; i < 1000; ++i) {
           Subset a = Subset{rng.next()} & all;
           Subset b = Subset{rng.next()} & all;
           Subset c = Subset{rng.next()} & all;
           if (!cs.preceq(a, a)) return coarse_ce(cs, "reflexive");
           if (a.subset_of(b) && !cs.preceq(a, b)) return coarse_ce(cs, "subset-lemma");
           if (cs.preceq(a, b) && cs.preceq(b, c) && !cs.preceq(a, c))
             return coarse_ce(cs, "transitive");
         }
         return std::nullopt;
       }});
  laws.push_back(
      {"coarse/monotone-image", kUnbounded, [](std::uint64_t s) -> std::optional<json> {
         Rng rng(s);
         const int ny = 2 + rng.below_int(3);
         coarse::CoarseStructure gamma = gen::coarse_structure(rng, ny);
         const int nx = ny * (1 + rng.below_int(2));
         std::vector<int> pi(nx);
         for (int i = 0; i < nx; ++i) pi[i] = i % ny;
         std::vector<std::string> glabels(nx);
         for (int i = 0; i < nx; ++i) glabels[i] = "x" + std::to_string(i);
         coarse::CoarseStructure eps = coarse::pullback_coarse(pi, glabels, gamma);
         if (!coarse::is_coarse_map(eps, gamma, pi)) return coarse_ce(eps, "pi-not-coarse");
         for (int i = 0; i < 200; ++i) {
           Subset a = Subset{rng.next()} & Subset::first_n(nx);
           Subset b = Subset{rng.next()} & Subset::first_n(nx);
           if (!eps.preceq(a, b)) continue;
           Subset fa, fb;
           for (int p = 0; p < nx; ++p) {
             if (a.contains(p)) fa.add(pi[p]);
             if (b.contains(p)) fb.add(pi[p]);
           }
           if (!gamma.preceq(fa, fb)) return coarse_ce(eps, "image-preorder");
         }
         return std::nullopt;
       }});
  laws.push_back(
      {"coarse/coproduct", kUnbounded, [](std::uint64_t s) -> std::optional<json> {
         Rng rng(s);
         // Random block structure: blocks over a base ground, pulled back
         // along the block map.
         const int nγ = 2 + rng.below_int(3);
         coarse::CoarseStructure zeta = gen::coarse_structure(rng, nγ);
         std::vector<int> pi;
         for (int i = 0; i < nγ; ++i)
           for (int c = 0, k = 1 + rng.below_int(3); c < k; ++c) pi.push_back(i);
         if (static_cast<int>(pi.size()) > 10) pi.resize(10);
         bool covers = true;
         for (int i = 0; i < nγ; ++i)
           if (std::find(pi.begin(), pi.end(), i) == pi.end()) covers = false;
         if (!covers) return std::nullopt;  // resize may drop late blocks
         const int nx = static_cast<int>(pi.size());
         std::vector<std::string> glabels(nx);
         for (int i = 0; i < nx; ++i) glabels[i] = "x" + std::to_string(i);
         coarse::CoarseStructure eps = coarse::pullback_coarse(pi, glabels, zeta);

         if (!coarse::is_coarse_map(eps, zeta, pi)) return coarse_ce(eps, "pi-not-coarse");
         // Sections: one preimage representative per base point. Enumerate
         // them all when few, sample otherwise.
         std::vector<std::vector<int>> fibers(nγ);
         for (int x = 0; x < nx; ++x) fibers[pi[x]].push_back(x);
         double total = 1;
         for (const auto& f : fibers) total *= static_cast<double>(f.size());
         std::vector<std::vector<int>> sections;
         if (total <= 64) {
           std::vector<int> idx(nγ, 0);
           while (true) {
             std::vector<int> sec(nγ);
             for (int i = 0; i < nγ; ++i) sec[i] = fibers[i][idx[i]];
             sections.push_back(std::move(sec));
             int i = 0;
             while (i < nγ && ++idx[i] == static_cast<int>(fibers[i].size())) idx[i++] = 0;
             if (i == nγ) break;
           }
         } else {
           for (int k = 0; k < 10; ++k) {
             std::vector<int> sec(nγ);
             for (int i = 0; i < nγ; ++i)
               sec[i] = fibers[i][rng.below_int(static_cast<int>(fibers[i].size()))];
             sections.push_back(std::move(sec));
           }
         }
         for (const auto& iota : sections) {
           if (!coarse::is_coarse_map(zeta, eps, iota))
             return coarse_ce(eps, "section-not-coarse");
           auto qi = coarse::is_quasi_inverse(eps, zeta, pi, iota);
           if (!qi.ok() || !qi.value()) return coarse_ce(eps, "not-quasi-inverse");
         }
         if (zeta.coarsely_connected() && !eps.coarsely_connected())
           return coarse_ce(eps, "connectivity");
         return std::nullopt;
       }});
  laws.push_back(
      {"coarse/controlled-definition", kUnbounded,
       [](std::uint64_t s) -> std::optional<json> {
         Rng rng(s);
         const int n = 2 + rng.below_int(5);  // 2..6
         std::vector<coarse::Relation> gens;
         for (int i = 0, k = rng.below_int(3); i < k; ++i)
           gens.push_back(gen::relation(rng, n, 1 + rng.below_int(2 * n)));
         std::vector<std::string> glabels(n);
         for (int i = 0; i < n; ++i) glabels[i] = "g" + std::to_string(i);
         coarse::CoarseStructure cs =
             coarse::CoarseStructure::make(glabels, gens).value();
         coarse::Relation m = fixpoint_maximum(n, gens);
         if (n <= 4) {
           const std::uint64_t cells = std::uint64_t{1} << (n * n);
           for (std::uint64_t code = 0; code < cells; ++code) {
             coarse::Relation e(n);
             for (int x = 0; x < n; ++x)
               for (int y = 0; y < n; ++y)
                 if ((code >> (x * n + y)) & 1u) e.add(x, y);
             if (cs.controlled(e) != e.subset_of(m)) return coarse_ce(cs, "exhaustive");
           }
         } else {
           for (int i = 0; i < 500; ++i) {
             coarse::Relation e = gen::relation(rng, n, 1 + rng.below_int(n * n));
             if (cs.controlled(e) != e.subset_of(m)) return coarse_ce(cs, "sampled");
           }
         }
         return std::nullopt;
       }});
  return laws;
}

std::vector<Law> laws_for(const std::string& suite) {
  if (suite == "glueing") return glueing_laws();
  if (suite == "transport") return transport_laws();
  if (suite == "limits") return limits_laws();
  if (suite == "ends") return ends_laws();
  if (suite == "coarse") return coarse_laws();
  if (suite == "all") {
    std::vector<Law> all;
    for (const std::string& s : {std::string("glueing"), std::string("transport"),
                                 std::string("limits"), std::string("ends"),
                                 std::string("coarse")})
      for (Law& l : laws_for(s)) all.push_back(std::move(l));
    return all;
  }
  throw Error("unknown suite '" + suite + "'");
}

}  // namespace

nlohmann::json LawReport::to_json() const {
  json fl = json::array();
  for (const LawFailure& f : failures)
    fl.push_back(json{{"law", f.law}, {"seed", f.seed}, {"counterexample", f.counterexample}});
  return json{{"suite", suite}, {"trials", trials}, {"failures", fl}};
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"glueing", "transport", "limits",
                                                 "ends",    "coarse",    "all"};
  return names;
}

LawReport run_laws(const std::string& suite, std::uint64_t trials, std::uint64_t seed) {
  if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
    throw Error("unknown suite '" + suite + "'");
  LawReport report{suite, trials, {}};
  for (const Law& law : laws_for(suite)) {
    const std::uint64_t runs = std::min<std::uint64_t>(trials, law.max_runs);
    for (std::uint64_t t = 0; t < runs; ++t) {
      std::uint64_t ts = split_seed(seed, law.id, t);
      if (auto ce = law.run(ts)) {
        report.failures.push_back({law.id, ts, std::move(*ce)});
        break;  // first failure per law
      }
    }
  }
  return report;
}

bool replay_fails(const std::string& law_id, std::uint64_t trial_seed) {
  for (const Law& law : laws_for("all"))
    if (law.id == law_id) return law.run(trial_seed).has_value();
  throw Error("unknown law '" + law_id + "'");
}

}  // namespace aw::harness
