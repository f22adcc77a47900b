#pragma once

// Numerical classes of helices with prescribed d and negative limit slope.
//
// Fixing theta fixes D = d r_{-1} r_0 - r_{-1}^2 - r_0^2, so the work splits
// into (1) solving that equation for rank pairs up to shift, (2) deciding
// which rank pairs carry coordinate-wise coprime degree vectors with
// determinant d, and (3) matching the rational part of theta modulo the
// integer twists.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "helix/helix_core.hpp"
#include "helix/helix_ops.hpp"

namespace helix {

/// A shift orbit of positive solutions to D(r_{-1}, r_0) = D, represented by
/// its normalized pair (r_0 <= r_{-1} <= (d-1) r_0).
struct RankOrbit {
  Int r_m1;
  Int r_0;
  Int gcd_bar;
  /// Index (into the same list) of the orbit of reversed rank sequences.
  std::size_t dual_index;

  bool self_dual(std::size_t own_index) const { return dual_index == own_index; }
};

/// All shift orbits for d > 2 and D > 0, sorted by (r_0, r_{-1}).
/// Throws NoHelixError for D <= 0 and NotApplicableError for d <= 2.
std::vector<RankOrbit> rank_solutions(const Int& d, const Int& D);

/// For 0 < D < 4(d - 2): the integers y with d y - y^2 - 1 = D, ascending.
/// Every rank orbit then contains (y, 1). Throws NotApplicableError outside
/// that range.
std::vector<Int> small_D_reduce(const Int& d, const Int& D);

enum class Realizability { Yes, No, NecessaryHoldsUndetermined };

std::string to_string(Realizability r);

/// Whether ranks (r_{-1}, r_0) admit degrees with determinant d and
/// gcd(r_i, d_i) = 1. Necessary: gcd(r_{-1}, r_0) = gcd(r_{-1}, d) = gcd(r_0, d).
/// Sufficient when that common value is odd.
Realizability realizable(const Int& d, const Int& r_m1, const Int& r_0);

/// A seed with the given ranks, determinant d and coprime rank/degree in
/// both coordinates. Requires realizable(...) == Yes.
Seed degree_construct(const Int& d, const Int& r_m1, const Int& r_0);

struct ThetaParts {
  Rat a;  ///< rational part
  Rat b;  ///< coefficient of sqrt(d^2 - 4) (not of the square-free core)
  Int D;
};

/// Rewrites theta = a + b sqrt(d^2 - 4) and recovers D = -d / (2b).
/// Throws InputError when theta lives over a different quadratic field, and
/// NoHelixError when theta is rational, b >= 0 or D is not a positive integer.
ThetaParts theta_decompose(const Theta& t, const Int& d);

struct ClassEntry {
  Seed seed;
  Int orbit_r_m1;
  Int orbit_r_0;
  Int gcd_bar;
  Int coset;  ///< which of the gcd_bar degree cosets produced the class
};

struct ClassReport {
  Int d;
  Theta theta = Theta::neg_infinity();
  std::optional<Int> D;
  std::vector<ClassEntry> classes;
  std::vector<std::string> warnings;

  std::size_t count() const { return classes.size(); }
};

/// Representatives of every numerical class (shift and integer twist, no
/// dual) of helices with Hom dimension d and negative limit slope theta.
ClassReport classify_theta(const Int& d, const Theta& t);

}  // namespace helix
