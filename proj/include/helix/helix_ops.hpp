#pragma once

#include <optional>
#include <string>

#include "helix/helix_core.hpp"

namespace helix {

/// Applies A^n to rank and degree vectors: the result is (E_{n-1}, E_n).
/// Throws NonPositiveRankError if a rank on the way becomes nonpositive.
Seed shift(const Seed& s, long n);

/// Tensoring by a degree-a line bundle: d_i -> d_i + a r_i.
Seed twist(const Seed& s, const Int& a);

/// ((r_0, r_{-1}), (-d_0, -d_{-1})).
Seed dual(const Seed& s);

struct Normalized {
  Seed seed;
  long shift;  ///< seed == shift(input, shift)
  bool is_tie;  ///< a neighbouring rank equals the minimum
};

/// Shifts until r_0 is the minimum of the rank sequence, so that
/// r_0 <= r_{-1} <= (d - 1) r_0. When two adjacent minima exist the
/// representative with r_{-1} = r_0 is chosen. Requires d > 2.
Normalized normalize(const Seed& s);

/// Same minimality search on a rank pair alone. Returns the normalized pair
/// and the shift that reaches it.
struct NormalizedRanks {
  Int r_m1;
  Int r_0;
  long shift;
};
NormalizedRanks normalize_ranks(const Int& r_m1, const Int& r_0, const Int& d);

/// Dual (optional), then shift by `shift`, then twist by `twist` maps the
/// first seed onto the second.
struct EquivWitness {
  long shift;
  Int twist;
  bool used_dual;

  friend bool operator==(const EquivWitness&, const EquivWitness&) = default;
};

Seed apply_witness(const Seed& s, const EquivWitness& w);

/// Decides whether s2 lies in the numerical class of s1 (shift plus integer
/// twist, optionally dual). Both seeds must extend. Mismatched d yields
/// nullopt with a reason written to `diagnostic` when provided.
std::optional<EquivWitness> same_numerical_class(const Seed& s1, const Seed& s2, bool allow_dual,
                                                 std::string* diagnostic = nullptr);

}  // namespace helix
