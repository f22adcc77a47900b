#pragma once

// Verification-only transforms of a rank pair: the diagonalized form
//   (d-2) x^2 - (d+2) y^2 = 4D,        x = r_{-1} + r_0, y = r_0 - r_{-1},
// and its Pell associate
//   X^2 - 4(d^2-4) Y^2 = -64 (d^2-4)(d-2) D,   X = 4(d^2-4) y, Y = 2(d-2) x.

#include "helix/exact_arith.hpp"

namespace helix {

struct DiagSolution {
  Int x;
  Int y;
  Int d;
  Int D;
};

struct PellSolution {
  Int X;
  Int Y;
  Int d;
  Int D;
};

bool satisfies_diag(const DiagSolution& s);
bool satisfies_pell(const PellSolution& s);

/// Requires D(r_{-1}, r_0) > 0. Throws DomainError otherwise.
DiagSolution to_diag(const Int& r_m1, const Int& r_0, const Int& d);

PellSolution to_pell(const DiagSolution& s);

}  // namespace helix
