#ifndef AW_GEN_HPP
#define AW_GEN_HPP

#include "aw/admissible.hpp"
#include "aw/coarse.hpp"
#include "aw/limits.hpp"
#include "aw/rng.hpp"
#include "aw/space.hpp"
#include "aw/sum_space.hpp"

namespace aw::gen {

// Random preorder on n points: reachability closure of a random DAG plus
// the identity. Labels p0..p{n-1}. Always passes FiniteSpace::validate.
FiniteSpace space(Rng& rng, int n);

// Space whose comparability graph need not be connected (the DAG recipe
// already produces those; kept as the single generator).
Subset subset(Rng& rng, const FiniteSpace& s);
Subset closed_subset(Rng& rng, const FiniteSpace& s);
// Nonempty, proper, open subset; nullopt when none exists.
std::optional<Subset> proper_open_subset(Rng& rng, const FiniteSpace& s);

// Random monotone generator table built by a specialization-respecting
// sweep over equivalence classes of points; always passes make.
AdmissibleMap admissible(Rng& rng, const FiniteSpace& X, const FiniteSpace& Y);

// Random admissible pair obtained by splitting a random glued-shape space;
// every admissible pair arises this way (splitting inverts glueing).
AdmissiblePair pair(Rng& rng, const FiniteSpace& X, const FiniteSpace& Y);

// Arbitrary point map (no continuity).
SpaceMap point_map(Rng& rng, const FiniteSpace& dom, const FiniteSpace& cod);
// Continuous point map: rejection with a constant-map fallback.
SpaceMap continuous_map(Rng& rng, const FiniteSpace& dom, const FiniteSpace& cod);

// Random diagram over a codirected poset (index 0 is the least object):
// discrete remainders built from a monotone family of partitions of the
// least remainder, so arrows compose on the nose. Every such diagram's
// limit is isomorphic to object 0 by the identity on the base.
SumDiagram codirected_diagram(Rng& rng, int max_objects = 4);

// Random composition-closed diagram with up to two objects and optional
// parallel arrows; used by the remainder laws.
SumDiagram small_diagram(Rng& rng);

// Random relation with roughly `expected_pairs` entries.
coarse::Relation relation(Rng& rng, int ground_size, int expected_pairs);

// Random finitely generated coarse structure (ground labels g0, g1, ...).
coarse::CoarseStructure coarse_structure(Rng& rng, int ground_size);

}  // namespace aw::gen

#endif
