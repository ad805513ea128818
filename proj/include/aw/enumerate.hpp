#ifndef AW_ENUMERATE_HPP
#define AW_ENUMERATE_HPP

#include "aw/admissible.hpp"

namespace aw {

// Every labeled topology on n points, as its specialization preorder
// (1, 4 and 29 spaces for n = 1, 2, 3). Labels are a, b, c, ...
std::vector<FiniteSpace> all_preorders(int n);

// Spaces of every size from 1 to max_points inclusive.
std::vector<FiniteSpace> all_preorders_up_to(int max_points);

// Every admissible map X → Y, produced by filtering all generator tables
// over Closed(Y) through AdmissibleMap::make.
std::vector<AdmissibleMap> all_admissible_maps(const FiniteSpace& X, const FiniteSpace& Y);

// Every admissible pair between X and Y (check_pair filter).
std::vector<AdmissiblePair> all_admissible_pairs(const FiniteSpace& X, const FiniteSpace& Y);

// Every point map dom → cod.
std::vector<SpaceMap> all_point_maps(const FiniteSpace& dom, const FiniteSpace& cod);

}  // namespace aw

#endif
