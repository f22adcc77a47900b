#pragma once

// Numerical seeds of two-periodic helices and the invariants they determine.
//
// A seed fixes the ranks and degrees of two consecutive terms E_{-1}, E_0.
// With d = d_0 r_{-1} - d_{-1} r_0 the whole sequence follows from
//
//   (a_{n-1}, a_n)^T = A^n (a_{-1}, a_0)^T,   A = [[0, 1], [-1, d]],
//
// applied separately to ranks and degrees, i.e. a_{n+1} = d a_n - a_{n-1}.

#include <optional>
#include <string>
#include <vector>

#include "helix/exact_arith.hpp"

namespace helix {

/// Ranks and degrees of E_{-1}, E_0. Ranks are strictly positive.
class Seed {
 public:
  Seed(Int r_m1, Int r_0, Int d_m1, Int d_0);

  const Int& r_m1() const { return r_m1_; }
  const Int& r_0() const { return r_0_; }
  const Int& d_m1() const { return d_m1_; }
  const Int& d_0() const { return d_0_; }

  /// "((r_m1,r_0),(d_m1,d_0))"
  std::string str() const;

  friend bool operator==(const Seed&, const Seed&) = default;

 private:
  Int r_m1_;
  Int r_0_;
  Int d_m1_;
  Int d_0_;
};

/// Lexicographic on (r_m1, r_0, d_m1, d_0).
bool seed_less(const Seed& x, const Seed& y);

/// d_0 r_{-1} - d_{-1} r_0: the Hom dimension d for a valid seed.
Int seed_det(const Seed& s);

/// d r_{-1} r_0 - r_{-1}^2 - r_0^2.
Int big_D(const Int& r_m1, const Int& r_0, const Int& d);
Int big_D(const Seed& s);

enum class Extendability { Yes2, YesGeneric, No };

enum class NoReason { DTooSmall, DNonPositive, RankDegreeD2Violation, SlopeOrderViolation };

struct ExtendVerdict {
  Extendability kind;
  std::optional<NoReason> reason;

  bool extends() const { return kind != Extendability::No; }
};

std::string to_string(Extendability k);
std::string to_string(NoReason r);

/// Decides whether the seed extends to a two-periodic helix:
///   d <= 0           slopes are not increasing
///   d == 1           never
///   d == 2           only the line-bundle case r = (1, 1), d_0 = d_{-1} + 2
///   d > 2            iff D > 0
ExtendVerdict extendable(const Seed& s);

struct WindowEntry {
  long index;
  Int rank;
  Int degree;

  friend bool operator==(const WindowEntry&, const WindowEntry&) = default;
};

inline constexpr long kDefaultWindowMin = -40;
inline constexpr long kDefaultWindowMax = 40;

/// Entries for n_min <= n <= n_max, iterating A forward and A^-1 backward.
std::vector<WindowEntry> rank_deg_window(const Seed& s, long n_min = kDefaultWindowMin,
                                         long n_max = kDefaultWindowMax);

/// Eigen-decomposition of the recurrence in Q(sqrt(d^2 - 4)):
///   a_n = alpha_+^{n+1} a_+ + alpha_-^{n+1} a_-   for a = r, d.
struct SpectralData {
  QuadNum alpha_plus;
  QuadNum alpha_minus;
  QuadNum r_plus;
  QuadNum r_minus;
  QuadNum d_plus;
  QuadNum d_minus;
};

/// Requires seed_det(s) > 2; throws NotApplicableError otherwise.
SpectralData spectral(const Seed& s);

/// Evaluates the closed form a_n = alpha_+^{n+1} a_+ + alpha_-^{n+1} a_-.
QuadNum closed_form(const QuadNum& alpha_plus, const QuadNum& alpha_minus, const QuadNum& coef_plus,
                    const QuadNum& coef_minus, long n);

/// Limit of d_n / r_n as n -> -infinity. Either a quadratic irrational or,
/// for d = 2, negative infinity.
class Theta {
 public:
  static Theta neg_infinity() { return Theta(); }
  explicit Theta(const QuadNum& value);

  bool is_neg_infinity() const { return !value_.has_value(); }
  /// Throws DomainError for the -infinity sentinel.
  const QuadNum& value() const;

  std::string str() const;

  friend bool operator==(const Theta& x, const Theta& y) { return x.value_ == y.value_; }

 private:
  Theta() = default;
  std::optional<QuadNum> value_;
};

/// The negative limit slope
///
///   theta = [2(r_0 d_0 + d_{-1} r_{-1}) - d(r_0 d_{-1} + d_0 r_{-1})] / [2(r_0^2 + r_{-1}^2 - d r_0 r_{-1})]
///         + d / [2(r_0^2 + r_{-1}^2 - d r_0 r_{-1})] * sqrt(d^2 - 4),
///
/// returned canonicalized. Throws DomainError if the seed does not extend.
Theta theta(const Seed& s);

}  // namespace helix
