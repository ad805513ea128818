#include "aw/enumerate.hpp"

namespace aw {

std::vector<FiniteSpace> all_preorders(int n) {
  if (n < 1 || n > 5) throw Error("all_preorders: catalog supports 1..5 points");
  std::vector<std::string> labels;
  for (int p = 0; p < n; ++p) labels.push_back(std::string(1, static_cast<char>('a' + p)));

  const int off_diag = n * n - n;
  std::vector<FiniteSpace> out;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << off_diag); ++code) {
    std::vector<std::vector<bool>> below(n, std::vector<bool>(n, false));
    int bit = 0;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        if (x == y)
          below[x][y] = true;
        else
          below[x][y] = (code >> bit++) & 1u;
      }
    auto r = FiniteSpace::validate(labels, below);
    if (r.ok()) out.push_back(std::move(r.value()));
  }
  return out;
}

std::vector<FiniteSpace> all_preorders_up_to(int max_points) {
  std::vector<FiniteSpace> out;
  for (int n = 1; n <= max_points; ++n)
    for (auto& s : all_preorders(n)) out.push_back(std::move(s));
  return out;
}

std::vector<AdmissibleMap> all_admissible_maps(const FiniteSpace& X, const FiniteSpace& Y) {
  const std::vector<Subset> closed = enumerate_closed_sets(Y);
  const int n = X.size();
  std::vector<AdmissibleMap> out;
  std::vector<int> pick(n, 0);
  while (true) {
    std::vector<Subset> gen(n);
    for (int p = 0; p < n; ++p) gen[p] = closed[pick[p]];
    if (auto r = AdmissibleMap::make(X, Y, std::move(gen)); r.ok())
      out.push_back(std::move(r.value()));
    int i = 0;
    while (i < n && ++pick[i] == static_cast<int>(closed.size())) pick[i++] = 0;
    if (i == n) break;
  }
  return out;
}

std::vector<AdmissiblePair> all_admissible_pairs(const FiniteSpace& X, const FiniteSpace& Y) {
  std::vector<AdmissiblePair> out;
  for (const AdmissibleMap& f : all_admissible_maps(X, Y))
    for (const AdmissibleMap& g : all_admissible_maps(Y, X))
      if (auto r = check_pair(f, g); r.ok()) out.push_back(std::move(r.value()));
  return out;
}

std::vector<SpaceMap> all_point_maps(const FiniteSpace& dom, const FiniteSpace& cod) {
  const int n = dom.size();
  std::vector<SpaceMap> out;
  std::vector<int> tbl(n, 0);
  while (true) {
    out.emplace_back(dom, cod, tbl);
    int i = 0;
    while (i < n && ++tbl[i] == cod.size()) tbl[i++] = 0;
    if (i == n) break;
  }
  return out;
}

}  // namespace aw
