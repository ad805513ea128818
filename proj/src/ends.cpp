#include "aw/ends.hpp"

#include <algorithm>
#include <deque>
#include <memory>

#include "aw/fault.hpp"

namespace aw::ends {

namespace {

constexpr std::int64_t kGridStride = 1 << 20;
constexpr std::size_t kTruncationCap = 200000;

std::string default_label(Vertex v) { return std::to_string(v); }

}  // namespace

LazyGraph line_graph() {
  LazyGraph g;
  g.name = "line";
  g.neighbors = [](Vertex v) { return std::vector<Vertex>{v - 1, v + 1}; };
  g.basepoint = 0;
  g.exact_ends = 2;
  g.label = default_label;
  return g;
}

LazyGraph ladder_graph() {
  LazyGraph g;
  g.name = "ladder";
  g.neighbors = [](Vertex v) {
    std::int64_t s = ((v % 2) + 2) % 2;
    std::int64_t t = (v - s) / 2;
    return std::vector<Vertex>{2 * (t - 1) + s, 2 * (t + 1) + s, 2 * t + (1 - s)};
  };
  g.basepoint = 0;
  g.exact_ends = 2;
  g.label = [](Vertex v) {
    std::int64_t s = ((v % 2) + 2) % 2;
    std::int64_t t = (v - s) / 2;
    return "(" + std::to_string(t) + "," + std::to_string(s) + ")";
  };
  return g;
}

LazyGraph grid2_graph() {
  LazyGraph g;
  g.name = "grid2";
  auto decode = [](Vertex v) {
    std::int64_t y = ((v % kGridStride) + kGridStride) % kGridStride;
    if (y >= kGridStride / 2) y -= kGridStride;
    std::int64_t x = (v - y) / kGridStride;
    return std::pair<std::int64_t, std::int64_t>{x, y};
  };
  g.neighbors = [decode](Vertex v) {
    auto [x, y] = decode(v);
    return std::vector<Vertex>{(x + 1) * kGridStride + y, (x - 1) * kGridStride + y,
                               x * kGridStride + (y + 1), x * kGridStride + (y - 1)};
  };
  g.basepoint = 0;
  g.exact_ends = 1;
  g.label = [decode](Vertex v) {
    auto [x, y] = decode(v);
    return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
  };
  return g;
}

LazyGraph tree2_graph() {
  LazyGraph g;
  g.name = "tree2";
  g.neighbors = [](Vertex v) {
    if (v == 1) return std::vector<Vertex>{2, 3};
    return std::vector<Vertex>{v / 2, 2 * v, 2 * v + 1};
  };
  g.basepoint = 1;
  g.exact_ends = std::nullopt;  // uncountably many
  g.label = default_label;
  return g;
}

LazyGraph star_graph(int rays) {
  if (rays < 1) throw Error("star_graph: needs at least one ray");
  LazyGraph g;
  g.name = "star:" + std::to_string(rays);
  const std::int64_t k = rays;
  g.neighbors = [k](Vertex v) {
    if (v == 0) {
      std::vector<Vertex> out;
      for (std::int64_t i = 0; i < k; ++i) out.push_back(i + 1);
      return out;
    }
    std::int64_t i = (v - 1) % k;
    std::int64_t d = (v - 1) / k + 1;
    if (d == 1) return std::vector<Vertex>{0, k + i + 1};
    return std::vector<Vertex>{(d - 2) * k + i + 1, d * k + i + 1};
  };
  g.basepoint = 0;
  g.exact_ends = rays;
  g.label = [k](Vertex v) {
    if (v == 0) return std::string("c");
    std::int64_t i = (v - 1) % k;
    std::int64_t d = (v - 1) / k + 1;
    return "r" + std::to_string(i) + "d" + std::to_string(d);
  };
  return g;
}

LazyGraph finite_graph(std::string name, std::vector<std::string> vertex_labels,
                       const std::vector<std::pair<int, int>>& edges) {
  const int m = static_cast<int>(vertex_labels.size());
  if (m == 0) throw Error("finite_graph: needs at least one vertex");
  auto adj = std::make_shared<std::vector<std::vector<Vertex>>>(m);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= m || v < 0 || v >= m) throw Error("finite_graph: edge endpoint out of range");
    (*adj)[u].push_back(v);
    (*adj)[v].push_back(u);
  }
  for (auto& row : *adj) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
  }
  LazyGraph g;
  g.name = std::move(name);
  g.neighbors = [adj](Vertex v) { return (*adj)[static_cast<std::size_t>(v)]; };
  g.basepoint = 0;
  g.exact_ends = 0;
  auto labels = std::make_shared<std::vector<std::string>>(std::move(vertex_labels));
  g.label = [labels](Vertex v) { return (*labels)[static_cast<std::size_t>(v)]; };
  return g;
}

Result<LazyGraph> builtin_graph(const std::string& spec) {
  using R = Result<LazyGraph>;
  if (spec == "line") return R::success(line_graph());
  if (spec == "grid2") return R::success(grid2_graph());
  if (spec == "tree2") return R::success(tree2_graph());
  if (spec == "ladder") return R::success(ladder_graph());
  if (spec.rfind("star:", 0) == 0) {
    int k = 0;
    try {
      k = std::stoi(spec.substr(5));
    } catch (...) {
      return R::failure("bad ray count in '" + spec + "'");
    }
    if (k < 1) return R::failure("star needs at least one ray");
    return R::success(star_graph(k));
  }
  return R::failure("unknown graph '" + spec +
                    "' (expected line, grid2, tree2, ladder or star:<k>)");
}

namespace {

struct Truncation {
  std::unordered_map<Vertex, int> dist;                        // B_N
  std::unordered_map<Vertex, std::vector<Vertex>> adjacency;   // within B_N
};

Truncation explore(const LazyGraph& g, int horizon) {
  Truncation t;
  std::deque<Vertex> queue{g.basepoint};
  t.dist[g.basepoint] = 0;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    int dv = t.dist[v];
    if (dv == horizon) continue;
    for (Vertex w : g.neighbors(v)) {
      if (t.dist.emplace(w, dv + 1).second) {
        if (t.dist.size() > kTruncationCap)
          throw Error("exploration truncation exceeds " + std::to_string(kTruncationCap) +
                      " vertices");
        queue.push_back(w);
      }
    }
  }
  // Cache in-truncation adjacency and verify the presentation is
  // symmetric where both endpoints are visible.
  for (const auto& [v, dv] : t.dist) {
    std::vector<Vertex> inside;
    for (Vertex w : g.neighbors(v))
      if (t.dist.count(w)) inside.push_back(w);
    std::sort(inside.begin(), inside.end());
    t.adjacency[v] = std::move(inside);
  }
  for (const auto& [v, nbrs] : t.adjacency)
    for (Vertex w : nbrs) {
      const auto& back = t.adjacency.at(w);
      if (!std::binary_search(back.begin(), back.end(), v))
        throw Error("graph '" + g.name + "' is not symmetric: " + g.label(w) + " lists " +
                    g.label(v) + " only one way");
    }
  return t;
}

ComponentStage build_stage(const LazyGraph& g, const Truncation& t,
                           const std::set<Vertex>& core, int radius, int horizon) {
  ComponentStage stage;
  stage.graph = g.name;
  stage.radius = radius;
  stage.horizon = horizon;
  stage.core.assign(core.begin(), core.end());
  stage.distance = t.dist;

  // Union-find over the shell.
  std::unordered_map<Vertex, Vertex> parent;
  std::function<Vertex(Vertex)> find = [&](Vertex v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& [v, dv] : t.dist)
    if (!core.count(v)) parent[v] = v;
  for (const auto& [v, p] : parent)
    for (Vertex w : t.adjacency.at(v))
      if (parent.count(w)) {
        Vertex rv = find(v), rw = find(w);
        if (rv != rw) parent[rv] = rw;
      }

  std::map<Vertex, std::vector<Vertex>> groups;  // root → members
  for (const auto& [v, p] : parent) groups[find(v)].push_back(v);

  for (auto& [root, members] : groups) {
    Component c;
    std::sort(members.begin(), members.end());
    c.id = members.front();
    c.members = std::move(members);
    if (!fault::flags().skip_escape_flag)
      for (Vertex v : c.members)
        if (t.dist.at(v) == horizon) c.escapes = true;
    stage.components.push_back(std::move(c));
  }
  std::sort(stage.components.begin(), stage.components.end(),
            [](const Component& a, const Component& b) { return a.id < b.id; });
  for (int i = 0; i < static_cast<int>(stage.components.size()); ++i)
    for (Vertex v : stage.components[i].members) stage.component_index[v] = i;
  return stage;
}

}  // namespace

ComponentStage stage_components(const LazyGraph& g, int radius, int horizon) {
  if (radius < 0 || horizon <= radius)
    throw Error("stage_components: need horizon > radius >= 0");
  Truncation t = explore(g, horizon);
  std::set<Vertex> core;
  for (const auto& [v, dv] : t.dist)
    if (dv <= radius) core.insert(v);
  return build_stage(g, t, core, radius, horizon);
}

ComponentStage stage_components_core(const LazyGraph& g, const std::set<Vertex>& core,
                                     int horizon) {
  if (horizon < 1) throw Error("stage_components_core: need a positive horizon");
  Truncation t = explore(g, horizon);
  for (Vertex v : core)
    if (!t.dist.count(v)) throw Error("stage_components_core: core vertex outside truncation");
  return build_stage(g, t, core, -1, horizon);
}

std::map<Vertex, Vertex> bonding(const ComponentStage& coarse, const ComponentStage& fine) {
  if (coarse.graph != fine.graph) throw Error("bonding: stages from different graphs");
  if (coarse.horizon != fine.horizon) throw Error("bonding: stages at different horizons");
  if (!std::includes(fine.core.begin(), fine.core.end(), coarse.core.begin(),
                     coarse.core.end()))
    throw Error("bonding: the finer stage must remove at least the coarser core");

  std::map<Vertex, Vertex> out;
  for (const Component& u : fine.components) {
    if (!u.escapes) continue;
    std::optional<int> target;
    for (Vertex v : u.members) {
      auto c = coarse.component_of(v);
      if (!c) throw Error("bonding: fine component member missing from the coarse stage");
      if (target && *target != *c)
        throw Error("bonding: fine component split across coarse components");
      target = *c;
    }
    if (!coarse.components[*target].escapes)
      throw Error("bonding: escaping component lands in a non-escaping one");
    out[u.id] = coarse.components[*target].id;
  }
  return out;
}

EndCount end_count(const LazyGraph& g, int depth, int horizon, int window) {
  ComponentStage at_depth = stage_components(g, depth, horizon);
  EndCount r;
  r.count = at_depth.escaping_count();
  if (g.exact_ends && *g.exact_ends == r.count) {
    r.certified = true;
    return r;
  }
  if (depth - window < 0) return r;
  std::vector<ComponentStage> stages;
  for (int rad = depth - window; rad <= depth; ++rad)
    stages.push_back(stage_components(g, rad, horizon));
  bool stable = true;
  for (std::size_t i = 0; i + 1 < stages.size() && stable; ++i) {
    auto bond = bonding(stages[i], stages[i + 1]);
    // Bijective on escaping components: totality and surjectivity hold by
    // construction, so equal counts pin injectivity down.
    std::set<Vertex> image;
    for (const auto& [from, to] : bond) image.insert(to);
    if (static_cast<int>(bond.size()) != stages[i + 1].escaping_count() ||
        static_cast<int>(image.size()) != stages[i].escaping_count() ||
        stages[i].escaping_count() != stages[i + 1].escaping_count())
      stable = false;
  }
  r.certified = stable;
  return r;
}

InverseSystem end_system(const LazyGraph& g, const std::vector<int>& radii, int horizon) {
  if (radii.empty()) throw Error("end_system: needs at least one radius");
  for (std::size_t i = 0; i + 1 < radii.size(); ++i)
    if (radii[i] >= radii[i + 1]) throw Error("end_system: radii must increase");
  std::vector<ComponentStage> stages;
  for (int r : radii) stages.push_back(stage_components(g, r, horizon));

  std::vector<std::vector<std::string>> names;
  std::vector<std::vector<int>> bonds;
  for (const ComponentStage& s : stages) {
    std::vector<std::string> stage_names;
    for (int i : s.escaping()) stage_names.push_back(g.label(s.components[i].id));
    names.push_back(std::move(stage_names));
  }
  for (std::size_t k = 0; k + 1 < stages.size(); ++k) {
    auto bond = bonding(stages[k], stages[k + 1]);
    std::vector<Vertex> coarse_ids, fine_ids;
    for (int i : stages[k].escaping()) coarse_ids.push_back(stages[k].components[i].id);
    for (int i : stages[k + 1].escaping()) fine_ids.push_back(stages[k + 1].components[i].id);
    std::vector<int> tbl;
    for (Vertex f : fine_ids) {
      auto it = std::lower_bound(coarse_ids.begin(), coarse_ids.end(), bond.at(f));
      tbl.push_back(static_cast<int>(it - coarse_ids.begin()));
    }
    bonds.push_back(std::move(tbl));
  }
  auto sys = InverseSystem::make(std::move(names), std::move(bonds));
  if (!sys.ok()) throw Error("end_system: " + sys.error());
  return std::move(sys.value());
}

std::set<Vertex> f_K_eval(const ComponentStage& stage, const SetDescription& f) {
  std::set<Vertex> out;
  for (Vertex id : f.component_ids) {
    const Component* found = nullptr;
    for (const Component& c : stage.components)
      if (c.id == id) found = &c;
    if (!found)
      throw Error("f_K_eval: unknown component id " + std::to_string(id));
    if (found->escapes) out.insert(id);
  }
  // Explicit vertices describe a fixed finite set: bounded, so they never
  // make an intersection unbounded.
  return out;
}

StageModel stage_space(const LazyGraph& g, int radius, int horizon) {
  ComponentStage stage = stage_components(g, radius, horizon);

  std::vector<Vertex> ball;
  for (const auto& [v, dv] : stage.distance) ball.push_back(v);
  std::sort(ball.begin(), ball.end());
  if (static_cast<int>(ball.size()) > FiniteSpace::kMaxPoints)
    throw Error("stage_space: truncation exceeds the 64-point space capacity");

  std::vector<std::string> labels;
  for (Vertex v : ball) labels.push_back(g.label(v));
  FiniteSpace ball_space = FiniteSpace::discrete(labels);

  std::vector<int> esc = stage.escaping();
  if (esc.empty()) return StageModel{std::move(stage), std::move(ball_space), std::nullopt};

  std::vector<std::string> end_labels;
  std::unordered_map<int, int> end_index;  // component index → end point
  for (int i : esc) {
    end_index[i] = static_cast<int>(end_labels.size());
    end_labels.push_back(g.label(stage.components[i].id));
  }
  FiniteSpace ends_space = FiniteSpace::discrete(end_labels);

  std::vector<Subset> gen(ball_space.size());
  for (int p = 0; p < static_cast<int>(ball.size()); ++p) {
    auto c = stage.component_of(ball[p]);
    if (c && stage.components[*c].escapes) gen[p].add(end_index[*c]);
  }
  auto f = AdmissibleMap::make(ball_space, ends_space, std::move(gen));
  if (!f.ok()) throw Error("stage_space: " + f.error());
  SumSpace model = glue(ball_space, ends_space, f.value());
  return StageModel{std::move(stage), std::move(ball_space), std::move(model)};
}

ProperMapExtension extend_proper_map(const LazyGraph& g1, const LazyGraph& g2,
                                     const std::function<Vertex(Vertex)>& j, int radius,
                                     int horizon) {
  ComponentStage target = stage_components(g2, radius, horizon);
  std::set<Vertex> target_ball;
  for (const auto& [v, dv] : target.distance)
    if (dv <= radius) target_ball.insert(v);

  Truncation t1 = explore(g1, horizon);
  std::set<Vertex> core;
  for (const auto& [v, dv] : t1.dist)
    if (target_ball.count(j(v))) {
      if (dv >= horizon)
        throw Error("extend_proper_map: preimage of the target ball reaches the horizon");
      core.insert(v);
    }
  ComponentStage source = build_stage(g1, t1, core, -1, horizon);

  std::map<Vertex, Vertex> comp_map;
  for (const Component& u : source.components) {
    if (!u.escapes) continue;
    std::optional<int> hit;
    for (Vertex v : u.members) {
      Vertex w = j(v);
      if (!target.distance.count(w))
        throw Error("extend_proper_map: image of " + g1.label(v) +
                    " leaves the target truncation");
      auto c = target.component_of(w);
      if (!c)
        throw Error("extend_proper_map: image of " + g1.label(v) + " lands in the ball");
      if (hit && *hit != *c)
        throw Error("extend_proper_map: image meets two distinct components");
      hit = *c;
    }
    if (!target.components[*hit].escapes)
      throw Error("extend_proper_map: image component does not escape (properness fails)");
    comp_map[u.id] = target.components[*hit].id;
  }
  return ProperMapExtension{std::move(source), std::move(target), std::move(comp_map)};
}

std::string component_dot(const LazyGraph& g, const std::vector<int>& radii, int horizon) {
  std::vector<ComponentStage> stages;
  for (int r : radii) stages.push_back(stage_components(g, r, horizon));

  std::string out = "digraph ends {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t k = 0; k < stages.size(); ++k) {
    out += "  { rank=same;";
    for (std::size_t i = 0; i < stages[k].components.size(); ++i) {
      const Component& c = stages[k].components[i];
      out += " s" + std::to_string(k) + "_" + std::to_string(i) + " [label=\"" +
             g.label(c.id) + "\"" + (c.escapes ? "" : ", style=dashed") + "];";
    }
    out += " }\n";
  }
  auto index_of = [](const ComponentStage& s, Vertex id) {
    for (std::size_t i = 0; i < s.components.size(); ++i)
      if (s.components[i].id == id) return i;
    throw Error("component_dot: id lookup failed");
  };
  for (std::size_t k = 0; k + 1 < stages.size(); ++k)
    for (const auto& [fine_id, coarse_id] : bonding(stages[k], stages[k + 1]))
      out += "  s" + std::to_string(k + 1) + "_" +
             std::to_string(index_of(stages[k + 1], fine_id)) + " -> s" + std::to_string(k) +
             "_" + std::to_string(index_of(stages[k], coarse_id)) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace aw::ends
