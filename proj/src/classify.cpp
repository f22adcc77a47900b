#include "helix/classify.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "helix/errors.hpp"

namespace helix {

namespace {

std::vector<Int> prime_factors(Int n) {
  std::vector<Int> out;
  n = abs(n);
  for (Int p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
      out.push_back(p);
      while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

Int inverse_mod(const Int& a, const Int& m) {
  Int inv;
  if (mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) {
    throw InternalError("no modular inverse of " + a.get_str() + " mod " + m.get_str());
  }
  return inv;
}

bool coprime_degrees(const Seed& s) {
  return gcd(s.r_m1(), s.d_m1()) == 1 && gcd(s.r_0(), s.d_0()) == 1;
}

}  // namespace

std::vector<RankOrbit> rank_solutions(const Int& d, const Int& D) {
  if (d <= 2) throw NotApplicableError("rank orbits are only enumerated for d > 2 (got d = " + d.get_str() + ")");
  if (sgn(D) <= 0) throw NoHelixError("D must be positive for a helix to exist (got D = " + D.get_str() + ")");

  // Minimal representatives satisfy D / r_0^2 >= d - 2.
  const Int r0_max = isqrt(D / (d - 2));
  std::vector<std::pair<Int, Int>> reps;  // (r_m1, r_0)
  for (Int r0 = 1; r0 <= r0_max; ++r0) {
    // r_m1 solves y^2 - d r_0 y + (r_0^2 + D) = 0.
    Int disc = d * d * r0 * r0 - 4 * (r0 * r0 + D);
    if (sgn(disc) < 0 || !is_perfect_square(disc)) continue;
    Int root = isqrt(disc);
    for (const Int& twice_y : {Int(d * r0 - root), Int(d * r0 + root)}) {
      if (mpz_odd_p(twice_y.get_mpz_t())) continue;
      Int y = twice_y / 2;
      if (y < r0 || y > (d - 1) * r0) continue;
      // y = (d-1) r_0 means r_1 = r_0: same orbit as (r_0, r_0).
      if (y == (d - 1) * r0 && y != r0) continue;
      if (!reps.empty() && reps.back().first == y && reps.back().second == r0) continue;
      reps.emplace_back(y, r0);
    }
  }
  std::sort(reps.begin(), reps.end(), [](const auto& x, const auto& y) {
    return std::tie(x.second, x.first) < std::tie(y.second, y.first);
  });

  std::map<std::pair<Int, Int>, std::size_t> index;
  for (std::size_t i = 0; i < reps.size(); ++i) index[reps[i]] = i;

  std::vector<RankOrbit> out;
  out.reserve(reps.size());
  for (std::size_t i = 0; i < reps.size(); ++i) {
    const auto& [y, r0] = reps[i];
    // Reversing the sequence around the minimum r_0 swaps r_{-1} and r_1.
    std::pair<Int, Int> partner = (y == r0) ? reps[i] : std::pair<Int, Int>{d * r0 - y, r0};
    auto it = index.find(partner);
    if (it == index.end()) {
      throw InternalError("dual of rank orbit (" + y.get_str() + "," + r0.get_str() + ") missing");
    }
    out.push_back({y, r0, gcd(y, r0), it->second});
  }
  return out;
}

std::vector<Int> small_D_reduce(const Int& d, const Int& D) {
  if (d <= 2) throw NotApplicableError("small-D reduction needs d > 2");
  if (sgn(D) <= 0 || D >= 4 * (d - 2)) {
    throw NotApplicableError("small-D reduction needs 0 < D < 4(d-2) (got D = " + D.get_str() + ", d = " +
                             d.get_str() + ")");
  }
  std::vector<Int> ys;
  Int disc = d * d - 4 * (1 + D);
  if (sgn(disc) < 0 || !is_perfect_square(disc)) return ys;
  Int root = isqrt(disc);
  for (const Int& twice_y : {Int(d - root), Int(d + root)}) {
    if (mpz_odd_p(twice_y.get_mpz_t())) continue;
    Int y = twice_y / 2;
    if (sgn(y) <= 0) continue;
    if (ys.empty() || ys.back() != y) ys.push_back(y);
  }
  if (!ys.empty() && D < d - 2) {
    throw InternalError("small-D solution with D < d - 2 (d = " + d.get_str() + ", D = " + D.get_str() + ")");
  }
  return ys;
}

std::string to_string(Realizability r) {
  switch (r) {
    case Realizability::Yes: return "Yes";
    case Realizability::No: return "No";
    case Realizability::NecessaryHoldsUndetermined: return "NecessaryHoldsUndetermined";
  }
  return "?";
}

Realizability realizable(const Int& d, const Int& r_m1, const Int& r_0) {
  Int g = gcd(r_m1, r_0);
  if (gcd(r_m1, d) != g || gcd(r_0, d) != g) return Realizability::No;
  if (mpz_odd_p(g.get_mpz_t())) return Realizability::Yes;
  return Realizability::NecessaryHoldsUndetermined;
}

Seed degree_construct(const Int& d, const Int& r_m1, const Int& r_0) {
  Realizability real = realizable(d, r_m1, r_0);
  if (real != Realizability::Yes) {
    throw DomainError("ranks (" + r_m1.get_str() + "," + r_0.get_str() + ") with d = " + d.get_str() +
                      " are not known to be realizable (" + to_string(real) + ")");
  }
  const Int gbar = gcd(r_m1, r_0);
  const Int rp_m1 = r_m1 / gbar;
  const Int rp_0 = r_0 / gbar;
  const Int dp = d / gbar;

  // rp_m1 * u + rp_0 * v = 1  =>  degrees (-v dp, u dp) have determinant dp.
  Bezout bz = ext_gcd(rp_m1, rp_0);
  const Int base_m1 = -bz.y * dp;
  const Int base_0 = bz.x * dp;

  // Choose m so that base + m * r' avoids every prime p | gbar coordinate-wise.
  Int m = 0;
  Int modulus = 1;
  for (const Int& p : prime_factors(gbar)) {
    std::vector<Int> forbidden;
    for (const auto& [rp, dpart] : {std::pair{rp_m1, base_m1}, std::pair{rp_0, base_0}}) {
      if (mpz_divisible_p(rp.get_mpz_t(), p.get_mpz_t())) continue;
      forbidden.push_back(mod_floor(-dpart * inverse_mod(rp, p), p));
    }
    Int choice = 0;
    while (std::find(forbidden.begin(), forbidden.end(), choice) != forbidden.end()) ++choice;
    if (choice >= p) throw InternalError("no admissible residue mod " + p.get_str());
    // CRT: m' = m (mod modulus), m' = choice (mod p).
    Int k = mod_floor((choice - m) * inverse_mod(modulus, p), p);
    m += k * modulus;
    modulus *= p;
  }
  Seed out(r_m1, r_0, base_m1 + m * rp_m1, base_0 + m * rp_0);
  if (seed_det(out) != d || !coprime_degrees(out)) {
    throw InternalError("degree construction failed postconditions for " + out.str());
  }
  return out;
}

ThetaParts theta_decompose(const Theta& t, const Int& d) {
  if (d <= 2) throw NotApplicableError("theta decomposition needs d > 2");
  if (t.is_neg_infinity()) throw NoHelixError("theta = -inf only occurs for d = 2");
  const QuadNum v = canonicalize(t.value());
  if (v.b().is_zero() || v.radicand() == 0) {
    throw NoHelixError("theta = " + v.str() + " is rational; no helix with d = " + d.get_str() + " has it");
  }
  auto [square, core] = square_free_split(d * d - 4);
  if (v.radicand() != core) {
    throw InputError("theta lies in Q(sqrt(" + v.radicand().get_str() + ")) but d = " + d.get_str() +
                     " requires Q(sqrt(" + core.get_str() + "))");
  }
  Rat b = v.b() / Rat(square);
  if (b.sign() >= 0) {
    throw NoHelixError("theta = " + v.str() + " has a nonnegative irrational coefficient; slopes approach theta from above");
  }
  Rat D = Rat(-d) / (Rat(2) * b);
  if (!D.is_integer() || D.sign() <= 0) {
    throw NoHelixError("theta = " + v.str() + " gives D = " + D.str() + ", not a positive integer");
  }
  return {v.a(), b, D.num()};
}

ClassReport classify_theta(const Int& d, const Theta& t) {
  if (d < 2) throw InputError("classification needs d >= 2 (got d = " + d.get_str() + ")");
  ClassReport report;
  report.d = d;
  report.theta = t;

  if (d == 2) {
    if (t.is_neg_infinity()) {
      report.classes.push_back({Seed(1, 1, 0, 2), 1, 1, 1, 0});
    } else {
      report.warnings.push_back("d = 2 helices all have theta = -inf");
    }
    return report;
  }

  ThetaParts parts = theta_decompose(t, d);
  report.D = parts.D;

  for (const RankOrbit& orbit : rank_solutions(d, parts.D)) {
    const std::string orbit_name = "(" + orbit.r_m1.get_str() + "," + orbit.r_0.get_str() + ")";
    Realizability real = realizable(d, orbit.r_m1, orbit.r_0);
    if (real == Realizability::No) continue;
    if (real == Realizability::NecessaryHoldsUndetermined) {
      report.warnings.push_back("rank orbit " + orbit_name + " has even gcd " + orbit.gcd_bar.get_str() +
                                "; realizability undetermined, excluded from the count");
      continue;
    }
    const Seed base = degree_construct(d, orbit.r_m1, orbit.r_0);
    const Int rp_m1 = orbit.r_m1 / orbit.gcd_bar;
    const Int rp_0 = orbit.r_0 / orbit.gcd_bar;
    // Integer twists move degrees by multiples of gcd_bar * r', so the
    // solution lattice base + Z r' splits into gcd_bar twist cosets.
    for (Int m = 0; m < orbit.gcd_bar; ++m) {
      Seed cand(orbit.r_m1, orbit.r_0, base.d_m1() + m * rp_m1, base.d_0() + m * rp_0);
      if (!coprime_degrees(cand)) continue;
      Rat offset = parts.a - theta(cand).value().a();
      if (!offset.is_integer()) continue;
      Seed rep = twist(cand, offset.num());
      if (!(theta(rep) == t)) continue;
      bool seen = std::any_of(report.classes.begin(), report.classes.end(), [&](const ClassEntry& e) {
        return same_numerical_class(e.seed, rep, false).has_value();
      });
      if (!seen) report.classes.push_back({rep, orbit.r_m1, orbit.r_0, orbit.gcd_bar, m});
    }
  }
  std::sort(report.classes.begin(), report.classes.end(),
            [](const ClassEntry& x, const ClassEntry& y) { return seed_less(x.seed, y.seed); });
  return report;
}

}  // namespace helix
