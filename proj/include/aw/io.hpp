#ifndef AW_IO_HPP
#define AW_IO_HPP

#include <json.hpp>

#include "aw/coarse.hpp"
#include "aw/ends.hpp"
#include "aw/limits.hpp"

namespace aw::io {

using nlohmann::json;

// Space document: {"points": [...], "closure": {"p": [points of Cl{p}]}}.
// The writer emits points and closure lists sorted; the reader validates
// the preorder axioms and keeps the file's point order.
json space_to_json(const FiniteSpace& s);
Result<FiniteSpace> space_from_json(const json& j);

// Admissible map document: {"source": <space>, "target": <space>,
// "gen": {"x": [...]}}.
json map_to_json(const AdmissibleMap& m);
Result<AdmissibleMap> map_from_json(const json& j);

// Glued space document: the total space plus the two half label lists.
// Reading recovers the halves (prefixes stripped) and the pair, and
// verifies that re-glueing reproduces the stored total.
json sum_to_json(const SumSpace& s);
Result<SumSpace> sum_from_json(const json& j);

// Diagram document: {"objects": {name: <sum space>}, "arrows":
// [{"from": name, "to": name, "phi": {right label: right label}}]}.
// Object names are processed in sorted order; phi uses the remainder
// labels without their "R:" prefix.
Result<SumDiagram> diagram_from_json(const json& j);

// Coarse structure document: {"ground": [...], "generators":
// [[[x, y], ...], ...]} with pairs of ground labels.
json coarse_to_json(const coarse::CoarseStructure& cs);
Result<coarse::CoarseStructure> coarse_from_json(const json& j);

// Adjacency document: {"vertices": [...], "edges": [[u, v], ...]}.
Result<ends::LazyGraph> graph_from_json(const json& j, const std::string& name);

// Graph specs: the built-ins, or "file:<path>" for an adjacency document.
Result<ends::LazyGraph> graph_from_spec(const std::string& spec);

Result<json> load_json_file(const std::string& path);

}  // namespace aw::io

#endif
