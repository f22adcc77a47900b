#pragma once
// Generators and independent oracles shared by the test binaries. Oracles here
// deliberately avoid the library routine they check.

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "helix/exact_arith.hpp"
#include "helix/helix_core.hpp"

namespace helix::testing {

inline constexpr std::uint64_t kSeed = 0x5eed'2024'0417ULL;

class Gen {
 public:
  explicit Gen(std::uint64_t seed = kSeed) : rng_(seed) {}

  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  Rat rat(long span = 20, long max_den = 12) {
    return Rat(make_int(uniform(-span, span)), make_int(uniform(1, max_den)));
  }

  QuadNum quad(const Int& radicand, long span = 20) { return QuadNum(rat(span), rat(span), radicand); }

  /// Extendable seed with d in [d_lo, d_hi] and ranks up to max_rank. When
  /// `simple` is set both terms have gcd(rank, degree) = 1.
  Seed extendable_seed(long d_lo = 3, long d_hi = 50, long max_rank = 30, bool simple = false) {
    for (;;) {
      const long d = uniform(d_lo, d_hi);
      const long r_m1 = uniform(1, max_rank);
      const long r_0 = uniform(1, max_rank);
      if (big_D(make_int(r_m1), make_int(r_0), make_int(d)) <= 0) continue;
      auto s = seed_with_ranks(d, r_m1, r_0, uniform(-6, 6));
      if (!s) continue;
      if (simple && (gcd_int(s->r_m1(), s->d_m1()) != 1 || gcd_int(s->r_0(), s->d_0()) != 1)) continue;
      return *s;
    }
  }

  /// Some seed with determinant d and the given ranks, moved along the
  /// solution line by `t` steps; nullopt when gcd(r_m1, r_0) does not divide d.
  static std::optional<Seed> seed_with_ranks(long d, long r_m1, long r_0, long t) {
    // d_0 r_m1 - d_m1 r_0 = d
    Bezout b = ext_gcd(make_int(r_m1), make_int(r_0));
    if (make_int(d) % b.g != 0) return std::nullopt;
    const Int k = make_int(d) / b.g;
    Int d_0 = b.x * k + make_int(t) * (make_int(r_0) / b.g);
    Int d_m1 = -b.y * k + make_int(t) * (make_int(r_m1) / b.g);
    return Seed(make_int(r_m1), make_int(r_0), d_m1, d_0);
  }

 private:
  std::mt19937_64 rng_;
};

/// Ranks r_n for |n| <= radius by direct iteration of r_{n+1} = d r_n - r_{n-1}.
inline std::vector<Int> brute_ranks(const Seed& s, long radius) {
  const Int d = s.d_0() * s.r_m1() - s.d_m1() * s.r_0();
  std::vector<Int> fwd{s.r_m1(), s.r_0()};
  for (long n = 1; n <= radius; ++n) fwd.push_back(d * fwd[fwd.size() - 1] - fwd[fwd.size() - 2]);
  std::vector<Int> back{s.r_0(), s.r_m1()};
  for (long n = -2; n >= -radius; --n) back.push_back(d * back[back.size() - 1] - back[back.size() - 2]);
  std::vector<Int> out(back.rbegin(), back.rend() - 1);  // r_{-radius} .. r_{-1}
  out.insert(out.end(), fwd.begin() + 1, fwd.end());     // r_0 .. r_radius
  return out;
}

inline bool brute_all_positive(const Seed& s, long radius) {
  for (const Int& r : brute_ranks(s, radius)) {
    if (r <= 0) return false;
  }
  return true;
}

/// theta as the slope of the eigen-component that dominates as n -> -inf:
/// a_- = (alpha_+ a_{-1} - a_0) / (alpha_+ - alpha_-).
inline QuadNum theta_oracle(const Seed& s) {
  const Int d = s.d_0() * s.r_m1() - s.d_m1() * s.r_0();
  const QuadNum root = quad_sqrt(d * d - 4);
  const QuadNum alpha_plus = (QuadNum(Rat(d)) + root) / QuadNum(Rat(2));
  const QuadNum deg_minus = alpha_plus * QuadNum(Rat(s.d_m1())) - QuadNum(Rat(s.d_0()));
  const QuadNum rank_minus = alpha_plus * QuadNum(Rat(s.r_m1())) - QuadNum(Rat(s.r_0()));
  return canonicalize(deg_minus / rank_minus);
}

/// Minimal position of the rank sequence through (r_m1, r_0), found by
/// walking downhill; with two adjacent minima the pair (min, min) is returned.
inline std::pair<long, long> walk_normal_form(long r_m1, long r_0, long d) {
  long a = r_m1, b = r_0;
  while (a < b) {
    long prev = d * a - b;
    b = a;
    a = prev;
  }
  while (d * b - a < b) {
    long next = d * b - a;
    a = b;
    b = next;
  }
  if (d * b - a == b) return {b, b};
  return {a, b};
}

}  // namespace helix::testing
