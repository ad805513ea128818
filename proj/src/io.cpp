#include "aw/io.hpp"

#include <algorithm>
#include <fstream>

namespace aw::io {

namespace {

FiniteSpace relabel(const FiniteSpace& s, std::vector<std::string> labels) {
  std::vector<Subset> cl(s.size());
  for (int p = 0; p < s.size(); ++p) cl[p] = s.point_closure(p);
  return FiniteSpace::from_point_closures(std::move(labels), std::move(cl));
}

std::vector<std::string> sorted_labels(const FiniteSpace& s, Subset set) {
  std::vector<std::string> out;
  for_each_element(set, [&](int p) { out.push_back(s.label(p)); });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

json space_to_json(const FiniteSpace& s) {
  std::vector<std::string> points = s.labels();
  std::sort(points.begin(), points.end());
  json closure = json::object();
  for (int p = 0; p < s.size(); ++p)
    closure[s.label(p)] = sorted_labels(s, s.point_closure(p));
  return json{{"points", points}, {"closure", closure}};
}

Result<FiniteSpace> space_from_json(const json& j) {
  using R = Result<FiniteSpace>;
  if (!j.is_object() || !j.contains("points") || !j.contains("closure"))
    return R::failure("space document needs 'points' and 'closure' fields");
  if (!j["points"].is_array()) return R::failure("'points' must be an array");
  std::vector<std::string> labels;
  for (const json& p : j["points"]) {
    if (!p.is_string()) return R::failure("'points' entries must be strings");
    labels.push_back(p.get<std::string>());
  }
  const int n = static_cast<int>(labels.size());
  std::vector<std::vector<bool>> below(n, std::vector<bool>(n, false));
  auto index = [&](const std::string& l) -> int {
    auto it = std::find(labels.begin(), labels.end(), l);
    return it == labels.end() ? -1 : static_cast<int>(it - labels.begin());
  };
  if (!j["closure"].is_object()) return R::failure("'closure' must be an object");
  for (const auto& [key, value] : j["closure"].items()) {
    int p = index(key);
    if (p < 0) return R::failure("closure key '" + key + "' is not a listed point");
    if (!value.is_array()) return R::failure("closure of '" + key + "' must be an array");
    for (const json& q : value) {
      if (!q.is_string()) return R::failure("closure of '" + key + "' has a non-string entry");
      int x = index(q.get<std::string>());
      if (x < 0)
        return R::failure("closure of '" + key + "' mentions unknown point '" +
                          q.get<std::string>() + "'");
      below[x][p] = true;
    }
  }
  for (int p = 0; p < n; ++p)
    if (!j["closure"].contains(labels[p]))
      return R::failure("missing closure entry for point '" + labels[p] + "'");
  return FiniteSpace::validate(std::move(labels), below);
}

json map_to_json(const AdmissibleMap& m) {
  json gen = json::object();
  for (int x = 0; x < m.source().size(); ++x)
    gen[m.source().label(x)] = sorted_labels(m.target(), m.gen(x));
  return json{{"source", space_to_json(m.source())},
              {"target", space_to_json(m.target())},
              {"gen", gen}};
}

Result<AdmissibleMap> map_from_json(const json& j) {
  using R = Result<AdmissibleMap>;
  if (!j.is_object() || !j.contains("source") || !j.contains("target") || !j.contains("gen"))
    return R::failure("map document needs 'source', 'target' and 'gen' fields");
  auto source = space_from_json(j["source"]);
  if (!source.ok()) return R::failure("source: " + source.error());
  auto target = space_from_json(j["target"]);
  if (!target.ok()) return R::failure("target: " + target.error());
  const FiniteSpace& X = source.value();
  const FiniteSpace& Y = target.value();
  std::vector<Subset> gen(X.size());
  if (!j["gen"].is_object()) return R::failure("'gen' must be an object");
  for (const auto& [key, value] : j["gen"].items()) {
    auto x = X.index_of(key);
    if (!x) return R::failure("gen key '" + key + "' is not a source point");
    if (!value.is_array()) return R::failure("gen of '" + key + "' must be an array");
    for (const json& q : value) {
      auto y = Y.index_of(q.is_string() ? q.get<std::string>() : q.dump());
      if (!y) return R::failure("gen of '" + key + "' mentions an unknown target point");
      gen[*x].add(*y);
    }
  }
  for (int x = 0; x < X.size(); ++x)
    if (!j["gen"].contains(X.label(x)))
      return R::failure("missing gen entry for point '" + X.label(x) + "'");
  return AdmissibleMap::make(X, Y, std::move(gen));
}

json sum_to_json(const SumSpace& s) {
  std::vector<std::string> left = sorted_labels(s.total(), s.left_part());
  std::vector<std::string> right = sorted_labels(s.total(), s.right_part());
  return json{{"total", space_to_json(s.total())}, {"left", left}, {"right", right}};
}

Result<SumSpace> sum_from_json(const json& j) {
  using R = Result<SumSpace>;
  if (!j.is_object() || !j.contains("total") || !j.contains("left") || !j.contains("right"))
    return R::failure("sum document needs 'total', 'left' and 'right' fields");
  auto total = space_from_json(j["total"]);
  if (!total.ok()) return R::failure("total: " + total.error());
  const FiniteSpace& T = total.value();

  auto side_mask = [&](const json& arr, const std::string& prefix,
                       Subset& mask) -> std::string {
    if (!arr.is_array()) return "half lists must be arrays";
    for (const json& l : arr) {
      if (!l.is_string()) return "half lists must contain strings";
      std::string label = l.get<std::string>();
      if (label.rfind(prefix, 0) != 0)
        return "half point '" + label + "' lacks the '" + prefix + "' prefix";
      auto p = T.index_of(label);
      if (!p) return "half point '" + label + "' is not in the total";
      mask.add(*p);
    }
    return {};
  };
  Subset left_mask, right_mask;
  if (auto e = side_mask(j["left"], SumSpace::kLeftPrefix, left_mask); !e.empty())
    return R::failure(e);
  if (auto e = side_mask(j["right"], SumSpace::kRightPrefix, right_mask); !e.empty())
    return R::failure(e);
  if ((left_mask | right_mask) != T.all() || left_mask.intersects(right_mask))
    return R::failure("half lists must split the total's points");
  if (left_mask.empty_set() || right_mask.empty_set())
    return R::failure("both halves must be nonempty");

  auto pair = decompose(T, left_mask, SplitRule::kAny);
  if (!pair.ok()) return R::failure(pair.error());

  auto strip = [](const FiniteSpace& half, std::size_t prefix_len) {
    std::vector<std::string> labels;
    for (int p = 0; p < half.size(); ++p) labels.push_back(half.label(p).substr(prefix_len));
    return relabel(half, std::move(labels));
  };
  FiniteSpace X = strip(pair.value().f.source(), std::string(SumSpace::kLeftPrefix).size());
  FiniteSpace Y = strip(pair.value().f.target(), std::string(SumSpace::kRightPrefix).size());
  auto f = AdmissibleMap::make(X, Y, pair.value().f.gen_table());
  auto g = AdmissibleMap::make(Y, X, pair.value().g.gen_table());
  if (!f.ok() || !g.ok()) return R::failure("stored total does not decompose admissibly");
  auto p = check_pair(std::move(f.value()), std::move(g.value()));
  if (!p.ok()) return R::failure("stored total does not split into an admissible pair");
  SumSpace rebuilt = glue(X, Y, p.value());
  if (!isomorphic_by_labels(rebuilt.total(), T))
    return R::failure("stored total is not the glueing of its halves");
  return R::success(std::move(rebuilt));
}

Result<SumDiagram> diagram_from_json(const json& j) {
  using R = Result<SumDiagram>;
  if (!j.is_object() || !j.contains("objects"))
    return R::failure("diagram document needs an 'objects' field");
  if (!j["objects"].is_object() || j["objects"].empty())
    return R::failure("'objects' must be a nonempty object");

  std::vector<std::string> names;
  std::vector<SumSpace> objects;
  for (const auto& [name, payload] : j["objects"].items()) {
    auto s = sum_from_json(payload);
    if (!s.ok()) return R::failure("object '" + name + "': " + s.error());
    names.push_back(name);
    objects.push_back(std::move(s.value()));
  }
  auto name_index = [&](const std::string& n) -> int {
    auto it = std::find(names.begin(), names.end(), n);
    return it == names.end() ? -1 : static_cast<int>(it - names.begin());
  };

  std::vector<SumDiagram::Arrow> arrows;
  if (j.contains("arrows")) {
    if (!j["arrows"].is_array()) return R::failure("'arrows' must be an array");
    for (const json& a : j["arrows"]) {
      if (!a.is_object() || !a.contains("from") || !a.contains("to") || !a.contains("phi"))
        return R::failure("arrows need 'from', 'to' and 'phi' fields");
      int from = name_index(a["from"].get<std::string>());
      int to = name_index(a["to"].get<std::string>());
      if (from < 0 || to < 0) return R::failure("arrow endpoint names unknown");
      const FiniteSpace& rf = objects[from].right();
      const FiniteSpace& rt = objects[to].right();
      std::vector<int> phi(rf.size(), -1);
      for (const auto& [key, value] : a["phi"].items()) {
        auto src = rf.index_of(key);
        if (!src) return R::failure("phi key '" + key + "' is not a remainder point");
        auto dst = rt.index_of(value.get<std::string>());
        if (!dst) return R::failure("phi value for '" + key + "' is unknown");
        phi[*src] = *dst;
      }
      for (int v : phi)
        if (v < 0) return R::failure("phi is not total over the source remainder");
      arrows.push_back({from, to, std::move(phi)});
    }
  }
  FiniteSpace base = objects[0].left();
  return SumDiagram::make(std::move(base), std::move(names), std::move(objects),
                          std::move(arrows));
}

json coarse_to_json(const coarse::CoarseStructure& cs) {
  json gens = json::array();
  for (const coarse::Relation& g : cs.generators()) {
    json pairs = json::array();
    for (int x = 0; x < cs.ground_size(); ++x)
      for_each_element(g.row(x), [&](int y) {
        pairs.push_back(json::array({cs.ground()[x], cs.ground()[y]}));
      });
    gens.push_back(pairs);
  }
  std::vector<std::string> ground = cs.ground();
  std::sort(ground.begin(), ground.end());
  return json{{"ground", ground}, {"generators", gens}};
}

Result<coarse::CoarseStructure> coarse_from_json(const json& j) {
  using R = Result<coarse::CoarseStructure>;
  if (!j.is_object() || !j.contains("ground"))
    return R::failure("structure document needs a 'ground' field");
  std::vector<std::string> ground;
  for (const json& g : j["ground"]) {
    if (!g.is_string()) return R::failure("'ground' entries must be strings");
    ground.push_back(g.get<std::string>());
  }
  auto index = [&](const std::string& l) -> int {
    auto it = std::find(ground.begin(), ground.end(), l);
    return it == ground.end() ? -1 : static_cast<int>(it - ground.begin());
  };
  std::vector<coarse::Relation> gens;
  if (j.contains("generators")) {
    if (!j["generators"].is_array()) return R::failure("'generators' must be an array");
    for (const json& g : j["generators"]) {
      coarse::Relation r(static_cast<int>(ground.size()));
      if (!g.is_array()) return R::failure("each generator must be an array of pairs");
      for (const json& pair : g) {
        if (!pair.is_array() || pair.size() != 2)
          return R::failure("generator entries must be [x, y] pairs");
        int x = index(pair[0].get<std::string>());
        int y = index(pair[1].get<std::string>());
        if (x < 0 || y < 0) return R::failure("generator pair mentions unknown ground points");
        r.add(x, y);
      }
      gens.push_back(std::move(r));
    }
  }
  return coarse::CoarseStructure::make(std::move(ground), std::move(gens));
}

Result<ends::LazyGraph> graph_from_json(const json& j, const std::string& name) {
  using R = Result<ends::LazyGraph>;
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
    return R::failure("graph document needs 'vertices' and 'edges' fields");
  std::vector<std::string> labels;
  for (const json& v : j["vertices"])
    labels.push_back(v.is_string() ? v.get<std::string>() : v.dump());
  auto index = [&](const json& v) -> int {
    std::string l = v.is_string() ? v.get<std::string>() : v.dump();
    auto it = std::find(labels.begin(), labels.end(), l);
    return it == labels.end() ? -1 : static_cast<int>(it - labels.begin());
  };
  std::vector<std::pair<int, int>> edges;
  for (const json& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2) return R::failure("edges must be [u, v] pairs");
    int u = index(e[0]), v = index(e[1]);
    if (u < 0 || v < 0) return R::failure("edge mentions an unknown vertex");
    edges.emplace_back(u, v);
  }
  if (labels.empty()) return R::failure("graph needs at least one vertex");
  return R::success(ends::finite_graph(name, std::move(labels), edges));
}

Result<ends::LazyGraph> graph_from_spec(const std::string& spec) {
  if (spec.rfind("file:", 0) == 0) {
    std::string path = spec.substr(5);
    auto doc = load_json_file(path);
    if (!doc.ok()) return Result<ends::LazyGraph>::failure(doc.error());
    return graph_from_json(doc.value(), path);
  }
  return ends::builtin_graph(spec);
}

Result<json> load_json_file(const std::string& path) {
  using R = Result<json>;
  std::ifstream in(path);
  if (!in) return R::failure("cannot open '" + path + "'");
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded()) return R::failure("'" + path + "' is not valid JSON");
  return R::success(std::move(j));
}

}  // namespace aw::io
