#include <algorithm>

#include "aw/ends.hpp"
#include "aw/rng.hpp"
#include "doctest.h"

using namespace aw;
using namespace aw::ends;

namespace {

std::vector<Vertex> interval(Vertex lo, Vertex hi) {
  std::vector<Vertex> out;
  for (Vertex v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

LazyGraph path3() {
  return finite_graph("path3", {"a", "b", "c"}, {{0, 1}, {1, 2}});
}

}  // namespace

TEST_CASE("stage_components on the line matches interval arithmetic") {
  LazyGraph g = line_graph();
  ComponentStage s = stage_components(g, 2, 10);
  REQUIRE(s.components.size() == 2);
  CHECK(s.components[0].id == -10);
  CHECK(s.components[0].members == interval(-10, -3));
  CHECK(s.components[0].escapes);
  CHECK(s.components[1].id == 3);
  CHECK(s.components[1].members == interval(3, 10));
  CHECK(s.components[1].escapes);
  CHECK(s.core == interval(-2, 2));

  ComponentStage again = stage_components(g, 2, 10);
  REQUIRE(again.components.size() == s.components.size());
  for (std::size_t i = 0; i < s.components.size(); ++i) {
    CHECK(again.components[i].id == s.components[i].id);
    CHECK(again.components[i].members == s.components[i].members);
  }
}

TEST_CASE("stage_components partitions the shell and counts tree components") {
  ComponentStage s = stage_components(tree2_graph(), 2, 10);
  CHECK(s.escaping_count() == 8);  // one per vertex at level 3
  CHECK(s.components.size() == 8);

  std::set<Vertex> seen;
  for (const Component& c : s.components)
    for (Vertex v : c.members) CHECK(seen.insert(v).second);
  std::size_t shell = 0;
  for (const auto& [v, d] : s.distance)
    if (d > 2) ++shell;
  CHECK(seen.size() == shell);

  for (int n = 0; n <= 5; ++n) {
    ComponentStage t = stage_components(tree2_graph(), n, n + 3);
    CHECK(t.escaping_count() == (2 << n));  // 2^(n+1)
  }
}

TEST_CASE("stage_components: finite graph past its diameter has no components") {
  ComponentStage s = stage_components(path3(), 3, 4);
  CHECK(s.components.empty());
  CHECK(s.escaping_count() == 0);
}

TEST_CASE("stage_components rejects asymmetric presentations") {
  LazyGraph bad;
  bad.name = "asym";
  bad.neighbors = [](Vertex v) {
    if (v == 0) return std::vector<Vertex>{1};
    return std::vector<Vertex>{};
  };
  bad.basepoint = 0;
  bad.label = [](Vertex v) { return std::to_string(v); };
  CHECK_THROWS_AS(stage_components(bad, 0, 2), Error);
  CHECK_THROWS_AS(stage_components(line_graph(), 3, 3), Error);
}

TEST_CASE("bonding: line rays, tree halving, identity at equal radii") {
  LazyGraph line = line_graph();
  auto bond = bonding(stage_components(line, 1, 12), stage_components(line, 5, 12));
  REQUIRE(bond.size() == 2);
  CHECK(bond.at(6) == 2);
  CHECK(bond.at(-12) == -12);

  LazyGraph tree = tree2_graph();
  ComponentStage c1 = stage_components(tree, 1, 10);
  ComponentStage c2 = stage_components(tree, 2, 10);
  auto tb = bonding(c1, c2);
  REQUIRE(tb.size() == 8);
  std::map<Vertex, int> preimages;
  for (const auto& [fine, coarse] : tb) ++preimages[coarse];
  REQUIRE(preimages.size() == 4);
  for (const auto& [coarse, n] : preimages) CHECK(n == 2);

  auto idb = bonding(c2, c2);
  for (const auto& [f, c] : idb) CHECK(f == c);
}

TEST_CASE("bonding functoriality over radius triples") {
  for (const LazyGraph& g : {line_graph(), tree2_graph(), star_graph(3), ladder_graph()}) {
    std::vector<ComponentStage> stages;
    for (int r = 0; r <= 6; ++r) stages.push_back(stage_components(g, r, 9));
    for (int a = 0; a < 6; ++a)
      for (int b = a + 1; b <= 6; ++b)
        for (int c = b + 1; c <= 6; ++c) {
          auto ab = bonding(stages[a], stages[b]);
          auto bc = bonding(stages[b], stages[c]);
          auto ac = bonding(stages[a], stages[c]);
          for (const auto& [fine, mid_target] : bc)
            CHECK(ac.at(fine) == ab.at(mid_target));
        }
  }
}

TEST_CASE("bonding surjectivity onto escaping coarse components") {
  for (const LazyGraph& g : {line_graph(), tree2_graph(), star_graph(4), grid2_graph()}) {
    ComponentStage coarse = stage_components(g, 1, 9);
    ComponentStage fine = stage_components(g, 4, 9);
    auto bond = bonding(coarse, fine);
    std::set<Vertex> image;
    for (const auto& [f, c] : bond) image.insert(c);
    std::set<Vertex> expected;
    for (int i : coarse.escaping()) expected.insert(coarse.components[i].id);
    CHECK(image == expected);
  }
}

TEST_CASE("end_count fixtures and window certification") {
  EndCount line = end_count(line_graph(), 5, 25);
  CHECK(line.count == 2);
  CHECK(line.certified);

  EndCount grid = end_count(grid2_graph(), 5, 25);
  CHECK(grid.count == 1);
  CHECK(grid.certified);

  for (int k = 1; k <= 6; ++k) {
    EndCount star = end_count(star_graph(k), 3, 20);
    CHECK(star.count == k);
    CHECK(star.certified);
  }

  LazyGraph anon = line_graph();
  anon.exact_ends = std::nullopt;
  EndCount via_window = end_count(anon, 5, 25);
  CHECK(via_window.count == 2);
  CHECK(via_window.certified);

  EndCount tree = end_count(tree2_graph(), 5, 9);
  CHECK(tree.count == 64);
  CHECK_FALSE(tree.certified);
}

TEST_CASE("end_system feeds stabilization detection") {
  InverseSystem line_sys = end_system(line_graph(), {0, 1, 2, 3, 4, 5}, 12);
  auto rep = system_stages(line_sys, 6);
  CHECK(rep.sizes == std::vector<std::size_t>(6, 2));
  CHECK(detect_stabilization(line_sys, 3) == 0);

  InverseSystem tree_sys = end_system(tree2_graph(), {0, 1, 2, 3, 4, 5}, 9);
  auto trep = system_stages(tree_sys, 6);
  for (int k = 0; k < 6; ++k) CHECK(trep.sizes[k] == (2u << k));
  CHECK_FALSE(detect_stabilization(tree_sys, 1).has_value());
}

TEST_CASE("f_K evaluation on described sets") {
  LazyGraph g = line_graph();
  ComponentStage s = stage_components(g, 2, 10);

  CHECK(f_K_eval(s, {}).empty());  // F = ∅

  SetDescription ray;  // the nonnegative ray
  ray.explicit_vertices = {0, 1, 2};
  ray.component_ids = {3};
  auto hit = f_K_eval(s, ray);
  REQUIRE(hit.size() == 1);
  CHECK(*hit.begin() == 3);

  SetDescription finite;
  finite.explicit_vertices = {0, 1, 2, 3, 4, 5};
  CHECK(f_K_eval(s, finite).empty());  // bounded sets never escape

  SetDescription unknown;
  unknown.component_ids = {99};
  CHECK_THROWS_AS(f_K_eval(s, unknown), Error);

  Rng rng(101);
  for (int trial = 0; trial < 200; ++trial) {
    auto sample = [&](SetDescription& d) {
      for (const Component& c : s.components)
        if (rng.coin()) d.component_ids.push_back(c.id);
      for (int i = 0; i < 3; ++i)
        if (rng.coin()) d.explicit_vertices.push_back(static_cast<Vertex>(rng.below_int(5)) - 2);
    };
    SetDescription f1, f2;
    sample(f1);
    sample(f2);
    SetDescription both;
    both.explicit_vertices = f1.explicit_vertices;
    both.explicit_vertices.insert(both.explicit_vertices.end(), f2.explicit_vertices.begin(),
                                  f2.explicit_vertices.end());
    both.component_ids = f1.component_ids;
    both.component_ids.insert(both.component_ids.end(), f2.component_ids.begin(),
                              f2.component_ids.end());
    std::set<Vertex> lhs = f_K_eval(s, both);
    std::set<Vertex> rhs = f_K_eval(s, f1);
    for (Vertex v : f_K_eval(s, f2)) rhs.insert(v);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("stage_space: compactified truncation models") {
  StageModel flat = stage_space(path3(), 3, 4);
  CHECK_FALSE(flat.model.has_value());
  CHECK(flat.ball_space.size() == 3);
  CHECK(flat.ball_space.is_discrete());

  StageModel line = stage_space(line_graph(), 2, 10);
  REQUIRE(line.model.has_value());
  const SumSpace& m = *line.model;
  CHECK(m.right_size() == 2);
  Subset ray_trunc;
  for (Vertex v = 3; v <= 10; ++v)
    ray_trunc.add(*m.left().index_of(std::to_string(v)));
  Subset closure = m.total().closure(m.lift_left(ray_trunc));
  int right_end = *m.right().index_of("3");
  CHECK(closure.contains(m.total_of_right(right_end)));
  int left_end = *m.right().index_of("-10");
  CHECK_FALSE(closure.contains(m.total_of_right(left_end)));

  for (int i : line.stage.escaping()) {
    Subset members;
    for (Vertex v : line.stage.components[i].members)
      members.add(*m.left().index_of(std::to_string(v)));
    Subset cl = m.total().closure(m.lift_left(members));
    int end_pt = *m.right().index_of(std::to_string(line.stage.components[i].id));
    CHECK(cl.contains(m.total_of_right(end_pt)));
  }

  LazyGraph star = star_graph(3);
  StageModel sm = stage_space(star, 1, 8);
  REQUIRE(sm.model.has_value());
  CHECK(sm.model->right_size() == 3);
  for (int i : sm.stage.escaping()) {
    Subset members;
    for (Vertex v : sm.stage.components[i].members)
      members.add(*sm.model->left().index_of(star.label(v)));
    Subset cl = sm.model->total().closure(sm.model->lift_left(members));
    Subset ends_hit = sm.model->drop_right(cl);
    CHECK(ends_hit.count() == 1);
  }
}

TEST_CASE("extend_proper_map: identity, fold, inclusion, naturality") {
  LazyGraph line = line_graph();
  auto ident = extend_proper_map(line, line, [](Vertex v) { return v; }, 2, 12);
  REQUIRE(ident.component_map.size() == 2);
  for (const auto& [u, w] : ident.component_map) CHECK(u == w);

  LazyGraph half = star_graph(1);
  auto fold = extend_proper_map(
      line, half, [](Vertex v) { return v < 0 ? -v : v; }, 2, 12);
  REQUIRE(fold.component_map.size() == 2);
  REQUIRE(fold.target_stage.escaping_count() == 1);
  Vertex ray = fold.target_stage.components[fold.target_stage.escaping()[0]].id;
  for (const auto& [u, w] : fold.component_map) CHECK(w == ray);

  auto incl = extend_proper_map(half, line, [](Vertex v) { return v; }, 2, 12);
  REQUIRE(incl.component_map.size() == 1);
  CHECK(incl.component_map.begin()->second == 3);

  for (int n1 = 1; n1 <= 4; ++n1)
    for (int n2 = n1 + 1; n2 <= 5; ++n2) {
      auto e1 = extend_proper_map(line, half, [](Vertex v) { return v < 0 ? -v : v; }, n1, 14);
      auto e2 = extend_proper_map(line, half, [](Vertex v) { return v < 0 ? -v : v; }, n2, 14);
      auto src_bond = bonding(e1.source_stage, e2.source_stage);
      auto tgt_bond = bonding(e1.target_stage, e2.target_stage);
      for (const auto& [u, via_fine] : e2.component_map)
        CHECK(tgt_bond.at(via_fine) == e1.component_map.at(src_bond.at(u)));
    }

  CHECK_THROWS_AS(extend_proper_map(line, line, [](Vertex) { return Vertex{0}; }, 2, 12),
                  Error);
}

TEST_CASE("component_dot renders stages and bonds") {
  std::string dot = component_dot(line_graph(), {1, 3, 5}, 10);
  CHECK(dot.find("digraph ends") != std::string::npos);
  CHECK(dot.find("rank=same") != std::string::npos);
  CHECK(dot.find("->") != std::string::npos);
}
