#ifndef AW_ENDS_HPP
#define AW_ENDS_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <unordered_map>

#include "aw/limits.hpp"
#include "aw/sum_space.hpp"

namespace aw::ends {

using Vertex = std::int64_t;

// A locally finite graph given by a pure neighbor oracle and a basepoint.
// Neighbor lists must be finite, symmetric and deterministic. Built-ins
// carry their exact end count so stage reports can be certified.
struct LazyGraph {
  std::string name;
  std::function<std::vector<Vertex>(Vertex)> neighbors;
  Vertex basepoint = 0;
  std::optional<int> exact_ends;
  std::function<std::string(Vertex)> label;
};

LazyGraph line_graph();            // the integer line, two ends
LazyGraph grid2_graph();           // the square grid, one end
LazyGraph tree2_graph();           // rooted binary tree, a Cantor set of ends
LazyGraph ladder_graph();          // two parallel lines with rungs, two ends
LazyGraph star_graph(int rays);    // k rays from a center, k ends
LazyGraph finite_graph(std::string name, std::vector<std::string> vertex_labels,
                       const std::vector<std::pair<int, int>>& edges);

// Built-in specs: "line", "grid2", "tree2", "ladder", "star:<k>".
// (Adjacency files are layered on top by the io module.)
Result<LazyGraph> builtin_graph(const std::string& spec);

struct Component {
  Vertex id;                    // minimum member in vertex order
  std::vector<Vertex> members;  // sorted
  bool escapes = false;         // touches the sphere of the horizon radius
};

// One stage of the end system: the components of B_N minus a core set,
// flagged by whether they reach the exploration horizon.
struct ComponentStage {
  std::string graph;
  int radius = -1;  // -1 when the core is not a ball
  int horizon = 0;
  std::vector<Vertex> core;  // sorted
  std::vector<Component> components;  // sorted by id
  std::unordered_map<Vertex, int> component_index;  // member → components index
  std::unordered_map<Vertex, int> distance;         // all of B_N

  std::optional<int> component_of(Vertex v) const {
    auto it = component_index.find(v);
    if (it == component_index.end()) return std::nullopt;
    return it->second;
  }
  std::vector<int> escaping() const {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(components.size()); ++i)
      if (components[i].escapes) out.push_back(i);
    return out;
  }
  int escaping_count() const { return static_cast<int>(escaping().size()); }
};

// Components of B_horizon − B_radius by breadth-first exploration from the
// basepoint plus union-find on the shell. Detects asymmetric neighbor
// presentations.
ComponentStage stage_components(const LazyGraph& g, int radius, int horizon);

// Same with an arbitrary core set (used by proper-map extension). Every
// core vertex must lie inside the exploration truncation.
ComponentStage stage_components_core(const LazyGraph& g, const std::set<Vertex>& core,
                                     int horizon);

// The bonding map: each escaping component of the finer stage (larger
// core) lands inside a unique escaping component of the coarser stage.
// Keys and values are component ids. Total on escaping components and
// surjective onto escaping coarse components.
std::map<Vertex, Vertex> bonding(const ComponentStage& coarse, const ComponentStage& fine);

struct EndCount {
  int count = 0;
  bool certified = false;
};

// Escaping-component count at `depth`, certified when the graph is a
// built-in whose exact count matches, or when counts and bond bijectivity
// are stable over the trailing `window` radii.
EndCount end_count(const LazyGraph& g, int depth, int horizon, int window = 3);

// The end inverse system over the given radii (shared horizon): stage k
// lists the escaping component ids at radii[k], bonds via `bonding`.
InverseSystem end_system(const LazyGraph& g, const std::vector<int>& radii, int horizon);

// A closed-set description the stage maps can evaluate: a finite explicit
// vertex set (always bounded) plus a selection of stage components.
struct SetDescription {
  std::vector<Vertex> explicit_vertices;
  std::vector<Vertex> component_ids;
};

// f_K on a described set: the escaping components whose intersection with
// the set is unbounded. Explicit finite parts never contribute; a chosen
// component contributes itself when it escapes.
std::set<Vertex> f_K_eval(const ComponentStage& stage, const SetDescription& f);

// The stage compactification model: the discrete ball glued to one point
// per escaping component, each ball vertex reaching exactly the end of
// its own component. Absent when no component escapes (the ball is all
// there is).
struct StageModel {
  ComponentStage stage;
  FiniteSpace ball_space;
  std::optional<SumSpace> model;
};

StageModel stage_space(const LazyGraph& g, int radius, int horizon);

// Extension of a proper graph map to stage components: each escaping
// component of g1 − j⁻¹(B_radius(g2)) maps to the escaping component of
// g2 − B_radius(g2) containing its image.
struct ProperMapExtension {
  ComponentStage source_stage;
  ComponentStage target_stage;
  std::map<Vertex, Vertex> component_map;
};

ProperMapExtension extend_proper_map(const LazyGraph& g1, const LazyGraph& g2,
                                     const std::function<Vertex(Vertex)>& j, int radius,
                                     int horizon);

// DOT rendering of the component tree: one rank per radius, bonding maps
// as edges from finer to coarser stages.
std::string component_dot(const LazyGraph& g, const std::vector<int>& radii, int horizon);

}  // namespace aw::ends

#endif
