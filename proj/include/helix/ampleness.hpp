#pragma once

// Numerical ampleness criteria. A sequence with slopes decreasing to an
// irrational theta is ample once lim r_n^2 (d_n/r_n - theta) > 1, and for
// sequences governed by lambda^2 - d lambda + 1 that limit equals
// det M / sqrt(d^2 - 4) with M = [[r_{-1}, d_{-1}], [r_0, d_0]].

#include <vector>

#include "helix/exact_arith.hpp"
#include "helix/helix_core.hpp"

namespace helix {

/// det M > 0 and (det M)^2 > recurrence_d^2 - 4. Requires |recurrence_d| > 2.
bool ample_det_check(const Seed& seed, const Int& recurrence_d);

/// det M / sqrt(d^2 - 4), computed from the eigen-coefficients as
/// r_- d_+ - r_+ d_-. Requires a seed with d > 2 that extends.
QuadNum limit_product(const Seed& s);

/// r_n^2 (d_n / r_n - theta) = r_n d_n - r_n^2 theta.
QuadNum window_product(const Int& rank, const Int& degree, const QuadNum& theta_value);

/// Determinant test with recurrence_d = d. Throws NotApplicableError unless
/// the seed extends with d > 2.
bool ample_two_periodic(const Seed& s);

/// Ranks and degrees of the three-periodic helix with
///   a_{n+1} = d a_n - d a_{n-1} + a_{n-2},
///   (d_0, r_0) = (0, 1), (d_1, r_1) = (d, 1), (d_2, r_2) = (d^2 - d, d - 2).
struct ThreePeriodicSeq {
  Int d;
  std::vector<WindowEntry> entries;  ///< ascending index

  const WindowEntry& at(long n) const;
};

ThreePeriodicSeq three_periodic_seq(const Int& d, long n_min, long n_max);

/// Cross-product identities for the three-periodic helix:
///   (1, a_-, a_-^2) x (1, a_+, a_+^2) = (a_+ - a_-)(1, 1-d, 1)
///   (d_0, d_-1, d_-2) x (r_0, r_-1, r_-2) = d (1, 1-d, 1)
/// where a_± are the roots of lambda^2 - (d-1) lambda + 1.
bool three_periodic_cross_products(const Int& d);

/// Cross products plus d > sqrt((d-1)^2 - 4). Requires d >= 3.
bool three_periodic_ample(const Int& d);

}  // namespace helix
