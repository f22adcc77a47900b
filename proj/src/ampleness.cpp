#include "helix/ampleness.hpp"

#include <algorithm>
#include <array>

#include "helix/errors.hpp"

namespace helix {

bool ample_det_check(const Seed& seed, const Int& recurrence_d) {
  if (abs(recurrence_d) <= 2) {
    throw NotApplicableError("determinant test needs |d| > 2 (got " + recurrence_d.get_str() + ")");
  }
  const Int det = seed_det(seed);
  return sgn(det) > 0 && det * det > recurrence_d * recurrence_d - 4;
}

QuadNum limit_product(const Seed& s) {
  ExtendVerdict v = extendable(s);
  if (v.kind != Extendability::YesGeneric) {
    throw NotApplicableError("limit product needs an extendable seed with d > 2: " + s.str());
  }
  SpectralData sp = spectral(s);
  return canonicalize(sp.r_minus * sp.d_plus - sp.r_plus * sp.d_minus);
}

QuadNum window_product(const Int& rank, const Int& degree, const QuadNum& theta_value) {
  return QuadNum(Rat(rank * degree)) - QuadNum(Rat(rank * rank)) * theta_value;
}

bool ample_two_periodic(const Seed& s) {
  ExtendVerdict v = extendable(s);
  if (v.kind != Extendability::YesGeneric) {
    throw NotApplicableError("two-periodic ampleness test needs an extendable seed with d > 2: " + s.str());
  }
  return ample_det_check(s, seed_det(s));
}

const WindowEntry& ThreePeriodicSeq::at(long n) const {
  auto it = std::find_if(entries.begin(), entries.end(), [n](const WindowEntry& e) { return e.index == n; });
  if (it == entries.end()) throw InputError("index " + std::to_string(n) + " outside the window");
  return *it;
}

ThreePeriodicSeq three_periodic_seq(const Int& d, long n_min, long n_max) {
  if (d < 3) throw InputError("three-periodic helices need d >= 3");
  if (n_min > n_max) throw InputError("window lower bound exceeds upper bound");
  // Working range always contains 0..2 so the initial data seeds both directions.
  const long lo = std::min(n_min, 0L);
  const long hi = std::max(n_max, 2L);
  const std::size_t size = static_cast<std::size_t>(hi - lo + 1);
  std::vector<Int> ranks(size), degs(size);
  auto slot = [lo](long n) { return static_cast<std::size_t>(n - lo); };
  ranks[slot(0)] = 1;
  degs[slot(0)] = 0;
  ranks[slot(1)] = 1;
  degs[slot(1)] = d;
  ranks[slot(2)] = d - 2;
  degs[slot(2)] = d * d - d;
  for (long n = 3; n <= hi; ++n) {
    // a_n = d a_{n-1} - d a_{n-2} + a_{n-3}
    ranks[slot(n)] = d * ranks[slot(n - 1)] - d * ranks[slot(n - 2)] + ranks[slot(n - 3)];
    degs[slot(n)] = d * degs[slot(n - 1)] - d * degs[slot(n - 2)] + degs[slot(n - 3)];
  }
  for (long n = -1; n >= lo; --n) {
    // a_n = a_{n+3} - d a_{n+2} + d a_{n+1}
    ranks[slot(n)] = ranks[slot(n + 3)] - d * ranks[slot(n + 2)] + d * ranks[slot(n + 1)];
    degs[slot(n)] = degs[slot(n + 3)] - d * degs[slot(n + 2)] + d * degs[slot(n + 1)];
  }
  ThreePeriodicSeq out{d, {}};
  for (long n = n_min; n <= n_max; ++n) out.entries.push_back({n, ranks[slot(n)], degs[slot(n)]});
  return out;
}

namespace {

template <typename T>
std::array<T, 3> cross(const std::array<T, 3>& u, const std::array<T, 3>& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

}  // namespace

bool three_periodic_cross_products(const Int& d) {
  if (d < 3) throw InputError("three-periodic helices need d >= 3");
  const Int e = d - 1;
  const QuadNum root = quad_sqrt(e * e - 4);
  const QuadNum half(Rat(1, 2));
  const QuadNum ap = QuadNum(Rat(e, 2)) + half * root;
  const QuadNum am = QuadNum(Rat(e, 2)) - half * root;
  const std::array<QuadNum, 3> axis{QuadNum(1), QuadNum(Rat(1 - d)), QuadNum(1)};

  auto eig = cross<QuadNum>({QuadNum(1), am, am * am}, {QuadNum(1), ap, ap * ap});
  const QuadNum gap = ap - am;
  for (std::size_t i = 0; i < 3; ++i) {
    if (!(eig[i] == gap * axis[i])) return false;
  }

  ThreePeriodicSeq seq = three_periodic_seq(d, -2, 0);
  auto deg = cross<Int>({seq.at(0).degree, seq.at(-1).degree, seq.at(-2).degree},
                        {seq.at(0).rank, seq.at(-1).rank, seq.at(-2).rank});
  return deg[0] == d && deg[1] == d * (1 - d) && deg[2] == d;
}

bool three_periodic_ample(const Int& d) {
  if (d < 3) throw InputError("three-periodic helices need d >= 3");
  if (!three_periodic_cross_products(d)) return false;
  // det [[r_-1, d_-1], [r_0, d_0]] = det [[d-2, -d], [1, 0]] = d.
  ThreePeriodicSeq seq = three_periodic_seq(d, -1, 0);
  Seed seed(seq.at(-1).rank, seq.at(0).rank, seq.at(-1).degree, seq.at(0).degree);
  const Int det = seed_det(seed);
  const Int e = d - 1;
  return sgn(det) > 0 && det * det > e * e - 4;
}

}  // namespace helix
