#pragma once

#include <vector>

#include "helix/helix_core.hpp"

namespace helix {

/// Euler form chi(E_{-j}, E_{-i}) = d_{-i} r_{-j} - d_{-j} r_{-i}.
/// For j > i this is dim Hom(E_{-j}, E_{-i}), the (i, j) component of the
/// Z-algebra of the helix.
Int euler_form(const Seed& s, long i, long j);

/// h(i, j) for 0 <= i <= j <= size. The diagonal holds the Euler form 0,
/// not the one-dimensional endomorphism space.
struct HilbertTable {
  Seed seed;
  long size;
  std::vector<std::vector<Int>> h;  ///< h[i][j - i]

  const Int& at(long i, long j) const;
};

/// Requires an extendable seed. Verifies h(i,i) = 0, h(i,i+1) = d and
/// h(i,j) > 0 for j > i; throws InternalError if any fails.
HilbertTable hilbert_table(const Seed& s, long size);

}  // namespace helix
