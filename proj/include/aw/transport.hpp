#ifndef AW_TRANSPORT_HPP
#define AW_TRANSPORT_HPP

#include "aw/sum_space.hpp"

namespace aw {

// A map of glueings assembled from maps of the halves: psi between the
// left halves, phi between the right halves. Construction requires both
// halves to be continuous; whether the assembled total map is continuous
// is exactly what diagram_continuity decides.
class SumMap {
 public:
  SumMap(SumSpace from, SumSpace to, SpaceMap psi, SpaceMap phi);

  static SumMap identity_between(const SumSpace& from, const SumSpace& to);

  const SumSpace& from() const { return from_; }
  const SumSpace& to() const { return to_; }
  const SpaceMap& psi() const { return psi_; }
  const SpaceMap& phi() const { return phi_; }

  // The assembled point map between the totals.
  SpaceMap total_map() const;

 private:
  SumSpace from_, to_;
  SpaceMap psi_, phi_;
};

// The diagram criterion: psi+phi is continuous iff for every closed A of
// the target left and B of the target right,
//   f(psi⁻¹(A)) ⊆ phi⁻¹(h(A))   and   g(phi⁻¹(B)) ⊆ psi⁻¹(j(B)),
// where (f,g) glue the source and (h,j) the target. All maps involved
// preserve unions, so checking point-closure generators suffices.
bool diagram_continuity(const SumMap& m);

// Generic composition Σ∘f∘Π of admissible maps through a glueing:
// Π: Closed(Y)→Closed(X), f: Closed(X)→Closed(W), Σ: Closed(W)→Closed(Z).
AdmissibleMap compose_through(const AdmissibleMap& sigma, const AdmissibleMap& f,
                              const AdmissibleMap& pi);

// Pullback of f: Closed(X)→Closed(W) along point maps pi: Y→X, varpi: Z→W:
//   f*(A) = Cl_Z(varpi⁻¹(f(Cl_X(pi(A))))).
// The formula needs no continuity; the universal property does, and the
// law suite gates on it. When pi, varpi are continuous, f* induces the
// coarsest glueing of Y and Z making pi+varpi continuous.
AdmissibleMap pullback(const AdmissibleMap& f, const SpaceMap& pi, const SpaceMap& varpi);

// Pushforward of f: Closed(X)→Closed(W) along continuous pi: X→Y,
// varpi: W→Z:
//   f_*(A) = Cl_Z(varpi(f(pi⁻¹(A)))).
// For varpi injective and closed, f_* induces the finest glueing of Y and
// Z making pi+varpi continuous.
AdmissibleMap pushforward(const AdmissibleMap& f, const SpaceMap& pi, const SpaceMap& varpi);

}  // namespace aw

#endif
