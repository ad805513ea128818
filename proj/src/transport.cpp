#include "aw/transport.hpp"

namespace aw {

SumMap::SumMap(SumSpace from, SumSpace to, SpaceMap psi, SpaceMap phi)
    : from_(std::move(from)), to_(std::move(to)), psi_(std::move(psi)), phi_(std::move(phi)) {
  if (psi_.domain() != from_.left() || psi_.codomain() != to_.left())
    throw Error("SumMap: psi does not map the left halves");
  if (phi_.domain() != from_.right() || phi_.codomain() != to_.right())
    throw Error("SumMap: phi does not map the right halves");
  if (!psi_.is_continuous()) throw Error("SumMap: psi is not continuous");
  if (!phi_.is_continuous()) throw Error("SumMap: phi is not continuous");
}

SumMap SumMap::identity_between(const SumSpace& from, const SumSpace& to) {
  if (from.left() != to.left() || from.right() != to.right())
    throw Error("identity_between: halves differ");
  return SumMap(from, to, SpaceMap::identity(from.left()), SpaceMap::identity(from.right()));
}

SpaceMap SumMap::total_map() const {
  std::vector<int> t(from_.total().size());
  for (int x = 0; x < from_.left_size(); ++x)
    t[from_.total_of_left(x)] = to_.total_of_left(psi_(x));
  for (int y = 0; y < from_.right_size(); ++y)
    t[from_.total_of_right(y)] = to_.total_of_right(phi_(y));
  return SpaceMap(from_.total(), to_.total(), std::move(t));
}

bool diagram_continuity(const SumMap& m) {
  const AdmissibleMap& f = m.from().pair().f;
  const AdmissibleMap& g = m.from().pair().g;
  const AdmissibleMap& h = m.to().pair().f;
  const AdmissibleMap& j = m.to().pair().g;

  for (int z = 0; z < m.to().left().size(); ++z) {
    Subset a = m.to().left().point_closure(z);
    if (!f.apply(m.psi().preimage(a)).subset_of(m.phi().preimage(h.gen(z)))) return false;
  }
  for (int w = 0; w < m.to().right().size(); ++w) {
    Subset b = m.to().right().point_closure(w);
    if (!g.apply(m.phi().preimage(b)).subset_of(m.psi().preimage(j.gen(w)))) return false;
  }
  return true;
}

AdmissibleMap compose_through(const AdmissibleMap& sigma, const AdmissibleMap& f,
                              const AdmissibleMap& pi) {
  if (pi.target() != f.source() || f.target() != sigma.source())
    throw Error("compose_through: space chain mismatch");
  std::vector<Subset> gen(pi.source().size());
  for (int y = 0; y < pi.source().size(); ++y) gen[y] = sigma.apply(f.apply(pi.gen(y)));
  auto r = AdmissibleMap::make(pi.source(), sigma.target(), std::move(gen));
  if (!r.ok()) throw Error("compose_through: " + r.error());
  return std::move(r.value());
}

AdmissibleMap pullback(const AdmissibleMap& f, const SpaceMap& pi, const SpaceMap& varpi) {
  if (pi.codomain() != f.source() || varpi.codomain() != f.target())
    throw Error("pullback: maps do not land in the glueing's halves");
  const FiniteSpace& Y = pi.domain();
  const FiniteSpace& Z = varpi.domain();
  const FiniteSpace& X = f.source();
  std::vector<Subset> gen(Y.size());
  for (int y = 0; y < Y.size(); ++y) {
    Subset a = X.closure(pi.image(Y.point_closure(y)));
    gen[y] = Z.closure(varpi.preimage(f.apply(a)));
  }
  auto r = AdmissibleMap::make(Y, Z, std::move(gen));
  if (!r.ok()) throw Error("pullback: " + r.error());
  return std::move(r.value());
}

AdmissibleMap pushforward(const AdmissibleMap& f, const SpaceMap& pi, const SpaceMap& varpi) {
  if (pi.domain() != f.source() || varpi.domain() != f.target())
    throw Error("pushforward: maps do not start at the glueing's halves");
  if (!pi.is_continuous()) throw Error("pushforward: pi is not continuous");
  if (!varpi.is_continuous()) throw Error("pushforward: varpi is not continuous");
  const FiniteSpace& Y = pi.codomain();
  const FiniteSpace& Z = varpi.codomain();
  std::vector<Subset> gen(Y.size());
  for (int y = 0; y < Y.size(); ++y)
    gen[y] = Z.closure(varpi.image(f.apply(pi.preimage(Y.point_closure(y)))));
  auto r = AdmissibleMap::make(Y, Z, std::move(gen));
  if (!r.ok()) throw Error("pushforward: " + r.error());
  return std::move(r.value());
}

}  // namespace aw
