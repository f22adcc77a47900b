#include "helix/helix_core.hpp"

#include <algorithm>
#include <tuple>

#include "helix/errors.hpp"

namespace helix {

Seed::Seed(Int r_m1, Int r_0, Int d_m1, Int d_0)
    : r_m1_(std::move(r_m1)), r_0_(std::move(r_0)), d_m1_(std::move(d_m1)), d_0_(std::move(d_0)) {
  if (sgn(r_m1_) <= 0 || sgn(r_0_) <= 0) {
    throw InputError("seed ranks must be positive, got (" + r_m1_.get_str() + "," + r_0_.get_str() + ")");
  }
}

std::string Seed::str() const {
  return "((" + r_m1_.get_str() + "," + r_0_.get_str() + "),(" + d_m1_.get_str() + "," + d_0_.get_str() + "))";
}

bool seed_less(const Seed& x, const Seed& y) {
  auto key = [](const Seed& s) { return std::tie(s.r_m1(), s.r_0(), s.d_m1(), s.d_0()); };
  return key(x) < key(y);
}

Int seed_det(const Seed& s) { return s.d_0() * s.r_m1() - s.d_m1() * s.r_0(); }

Int big_D(const Int& r_m1, const Int& r_0, const Int& d) { return d * r_m1 * r_0 - r_m1 * r_m1 - r_0 * r_0; }

Int big_D(const Seed& s) { return big_D(s.r_m1(), s.r_0(), seed_det(s)); }

std::string to_string(Extendability k) {
  switch (k) {
    case Extendability::Yes2: return "Yes2";
    case Extendability::YesGeneric: return "YesGeneric";
    case Extendability::No: return "No";
  }
  return "?";
}

std::string to_string(NoReason r) {
  switch (r) {
    case NoReason::DTooSmall: return "DTooSmall";
    case NoReason::DNonPositive: return "DNonPositive";
    case NoReason::RankDegreeD2Violation: return "RankDegreeD2Violation";
    case NoReason::SlopeOrderViolation: return "SlopeOrderViolation";
  }
  return "?";
}

ExtendVerdict extendable(const Seed& s) {
  // mu_{-1} < mu_0  <=>  d_{-1} r_0 < d_0 r_{-1}  <=>  d > 0
  Int d = seed_det(s);
  if (sgn(d) <= 0) return {Extendability::No, NoReason::SlopeOrderViolation};
  if (d == 1) return {Extendability::No, NoReason::DTooSmall};
  if (d == 2) {
    if (s.r_m1() == 1 && s.r_0() == 1 && s.d_0() == s.d_m1() + 2) return {Extendability::Yes2, std::nullopt};
    return {Extendability::No, NoReason::RankDegreeD2Violation};
  }
  if (sgn(big_D(s.r_m1(), s.r_0(), d)) > 0) return {Extendability::YesGeneric, std::nullopt};
  return {Extendability::No, NoReason::DNonPositive};
}

std::vector<WindowEntry> rank_deg_window(const Seed& s, long n_min, long n_max) {
  if (n_min > n_max) throw InputError("window lower bound exceeds upper bound");
  const Int d = seed_det(s);
  std::vector<WindowEntry> out;
  out.reserve(static_cast<std::size_t>(n_max - n_min + 1));

  // Forward from (n-1, n) = (-1, 0).
  if (n_max >= -1) {
    Int r_prev = s.r_m1(), r_cur = s.r_0();
    Int d_prev = s.d_m1(), d_cur = s.d_0();
    long n = 0;
    std::vector<WindowEntry> fwd;
    if (n_min <= -1 && -1 <= n_max) fwd.push_back({-1, r_prev, d_prev});
    while (n <= n_max) {
      if (n >= n_min) fwd.push_back({n, r_cur, d_cur});
      Int r_next = d * r_cur - r_prev;
      Int d_next = d * d_cur - d_prev;
      r_prev = std::move(r_cur);
      r_cur = std::move(r_next);
      d_prev = std::move(d_cur);
      d_cur = std::move(d_next);
      ++n;
    }
    out = std::move(fwd);
  }
  // Backward: a_{n-2} = d a_{n-1} - a_n.
  if (n_min <= -2) {
    Int r_next = s.r_0(), r_cur = s.r_m1();
    Int d_next = s.d_0(), d_cur = s.d_m1();
    std::vector<WindowEntry> bwd;
    for (long n = -2; n >= n_min; --n) {
      Int r_new = d * r_cur - r_next;
      Int d_new = d * d_cur - d_next;
      r_next = std::move(r_cur);
      r_cur = std::move(r_new);
      d_next = std::move(d_cur);
      d_cur = std::move(d_new);
      if (n <= n_max) bwd.push_back({n, r_cur, d_cur});
    }
    std::reverse(bwd.begin(), bwd.end());
    bwd.insert(bwd.end(), std::make_move_iterator(out.begin()), std::make_move_iterator(out.end()));
    out = std::move(bwd);
  }
  return out;
}

SpectralData spectral(const Seed& s) {
  const Int d = seed_det(s);
  if (d <= 2) throw NotApplicableError("spectral decomposition needs d > 2 (got d = " + d.get_str() + ")");
  const QuadNum root = quad_sqrt(d * d - 4);
  SpectralData out;
  out.alpha_plus = QuadNum(Rat(d, 2)) + root * QuadNum(Rat(1, 2));
  out.alpha_minus = QuadNum(Rat(d, 2)) - root * QuadNum(Rat(1, 2));
  const QuadNum gap = out.alpha_plus - out.alpha_minus;
  // a_{-1} = a_+ + a_-,  a_0 = alpha_+ a_+ + alpha_- a_-.
  auto split = [&](const Int& a_m1, const Int& a_0) {
    QuadNum plus = (QuadNum(Rat(a_0)) - out.alpha_minus * QuadNum(Rat(a_m1))) / gap;
    QuadNum minus = QuadNum(Rat(a_m1)) - plus;
    return std::pair{plus, minus};
  };
  std::tie(out.r_plus, out.r_minus) = split(s.r_m1(), s.r_0());
  std::tie(out.d_plus, out.d_minus) = split(s.d_m1(), s.d_0());
  return out;
}

QuadNum closed_form(const QuadNum& alpha_plus, const QuadNum& alpha_minus, const QuadNum& coef_plus,
                    const QuadNum& coef_minus, long n) {
  return quad_pow(alpha_plus, n + 1) * coef_plus + quad_pow(alpha_minus, n + 1) * coef_minus;
}

Theta::Theta(const QuadNum& value) : value_(canonicalize(value)) {}

const QuadNum& Theta::value() const {
  if (!value_) throw DomainError("theta is -infinity");
  return *value_;
}

std::string Theta::str() const { return value_ ? value_->str() : "-inf"; }

Theta theta(const Seed& s) {
  ExtendVerdict v = extendable(s);
  if (!v.extends()) {
    throw DomainError("theta is undefined: seed " + s.str() + " does not extend (" + to_string(*v.reason) + ")");
  }
  if (v.kind == Extendability::Yes2) return Theta::neg_infinity();
  const Int d = seed_det(s);
  const Int& r1 = s.r_m1();
  const Int& r0 = s.r_0();
  const Int& d1 = s.d_m1();
  const Int& d0 = s.d_0();
  Int denom = 2 * (r0 * r0 + r1 * r1 - d * r0 * r1);
  Int numer = 2 * (r0 * d0 + d1 * r1) - d * (r0 * d1 + d0 * r1);
  return Theta(QuadNum(Rat(numer, denom), Rat(d, denom), d * d - 4));
}

}  // namespace helix
