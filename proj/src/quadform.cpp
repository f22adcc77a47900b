#include "helix/quadform.hpp"

#include "helix/errors.hpp"
#include "helix/helix_core.hpp"

namespace helix {

bool satisfies_diag(const DiagSolution& s) {
  return (s.d - 2) * s.x * s.x - (s.d + 2) * s.y * s.y == 4 * s.D;
}

bool satisfies_pell(const PellSolution& s) {
  const Int disc = s.d * s.d - 4;
  return s.X * s.X - 4 * disc * s.Y * s.Y == -64 * disc * (s.d - 2) * s.D;
}

DiagSolution to_diag(const Int& r_m1, const Int& r_0, const Int& d) {
  Int D = big_D(r_m1, r_0, d);
  if (sgn(D) <= 0) throw DomainError("to_diag needs D > 0 (got D = " + D.get_str() + ")");
  DiagSolution out{r_m1 + r_0, r_0 - r_m1, d, D};
  if (!satisfies_diag(out)) throw InternalError("diagonal form identity failed");
  return out;
}

PellSolution to_pell(const DiagSolution& s) {
  PellSolution out{4 * (s.d * s.d - 4) * s.y, 2 * (s.d - 2) * s.x, s.d, s.D};
  if (!satisfies_pell(out)) throw InternalError("Pell associate identity failed");
  return out;
}

}  // namespace helix
