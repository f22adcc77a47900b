#include "helix/helix_ops.hpp"

#include "helix/errors.hpp"

namespace helix {

namespace {

struct Pair {
  Int prev;
  Int cur;
};

// One step of A (forward) or A^-1 (backward) on a consecutive pair.
void step_forward(Pair& p, const Int& d) {
  Int next = d * p.cur - p.prev;
  p.prev = std::move(p.cur);
  p.cur = std::move(next);
}

void step_backward(Pair& p, const Int& d) {
  Int before = d * p.prev - p.cur;
  p.cur = std::move(p.prev);
  p.prev = std::move(before);
}

}  // namespace

Seed shift(const Seed& s, long n) {
  const Int d = seed_det(s);
  Pair r{s.r_m1(), s.r_0()};
  Pair g{s.d_m1(), s.d_0()};
  for (long k = 0; k < n; ++k) {
    step_forward(r, d);
    step_forward(g, d);
    if (sgn(r.cur) <= 0) {
      throw NonPositiveRankError("shift of " + s.str() + " reaches rank " + r.cur.get_str());
    }
  }
  for (long k = 0; k > n; --k) {
    step_backward(r, d);
    step_backward(g, d);
    if (sgn(r.prev) <= 0) {
      throw NonPositiveRankError("shift of " + s.str() + " reaches rank " + r.prev.get_str());
    }
  }
  return Seed(r.prev, r.cur, g.prev, g.cur);
}

Seed twist(const Seed& s, const Int& a) {
  return Seed(s.r_m1(), s.r_0(), s.d_m1() + a * s.r_m1(), s.d_0() + a * s.r_0());
}

Seed dual(const Seed& s) { return Seed(s.r_0(), s.r_m1(), -s.d_0(), -s.d_m1()); }

NormalizedRanks normalize_ranks(const Int& r_m1, const Int& r_0, const Int& d) {
  if (d <= 2) throw NotApplicableError("normalization needs d > 2 (got d = " + d.get_str() + ")");
  if (sgn(big_D(r_m1, r_0, d)) <= 0) {
    throw DomainError("normalization needs D > 0; ranks (" + r_m1.get_str() + "," + r_0.get_str() +
                      ") do not stay positive");
  }
  Pair r{r_m1, r_0};
  long shift_n = 0;
  // Strict convexity of n -> r_n: walk downhill until neither neighbour is smaller.
  for (;;) {
    Int r_next = d * r.cur - r.prev;
    if (r.prev < r.cur) {
      step_backward(r, d);
      --shift_n;
    } else if (r_next < r.cur) {
      step_forward(r, d);
      ++shift_n;
    } else {
      if (r_next == r.cur && r.prev != r.cur) {
        // Two minima at positions 0 and 1; canonical form puts them at -1 and 0.
        step_forward(r, d);
        ++shift_n;
      }
      break;
    }
  }
  return {r.prev, r.cur, shift_n};
}

Normalized normalize(const Seed& s) {
  const Int d = seed_det(s);
  if (d <= 2) throw NotApplicableError("normalization needs d > 2 (got d = " + d.get_str() + ")");
  NormalizedRanks nr = normalize_ranks(s.r_m1(), s.r_0(), d);
  Seed out = shift(s, nr.shift);
  bool tie = out.r_m1() == out.r_0();
  return {std::move(out), nr.shift, tie};
}

Seed apply_witness(const Seed& s, const EquivWitness& w) {
  Seed base = w.used_dual ? dual(s) : s;
  return twist(shift(base, w.shift), w.twist);
}

namespace {

// Integer a with target = twist(source, a), if one exists.
std::optional<Int> twist_between(const Seed& source, const Seed& target) {
  if (source.r_m1() != target.r_m1() || source.r_0() != target.r_0()) return std::nullopt;
  Int delta_m1 = target.d_m1() - source.d_m1();
  Int delta_0 = target.d_0() - source.d_0();
  if (!mpz_divisible_p(delta_0.get_mpz_t(), source.r_0().get_mpz_t())) return std::nullopt;
  Int a = delta_0 / source.r_0();
  if (delta_m1 != a * source.r_m1()) return std::nullopt;
  return a;
}

std::optional<EquivWitness> match_direct(const Seed& s1, const Seed& s2, bool used_dual) {
  const Int d = seed_det(s1);
  if (d == 2) {
    // Line-bundle helices: all ranks are 1, so a twist alone aligns them.
    return EquivWitness{0, s2.d_m1() - s1.d_m1(), used_dual};
  }
  Normalized n1 = normalize(s1);
  Normalized n2 = normalize(s2);
  auto a = twist_between(n1.seed, n2.seed);
  if (!a) return std::nullopt;
  return EquivWitness{n1.shift - n2.shift, *a, used_dual};
}

}  // namespace

std::optional<EquivWitness> same_numerical_class(const Seed& s1, const Seed& s2, bool allow_dual,
                                                 std::string* diagnostic) {
  auto note = [&](const std::string& msg) {
    if (diagnostic) *diagnostic = msg;
  };
  const Int d1 = seed_det(s1);
  const Int d2 = seed_det(s2);
  if (d1 != d2) {
    note("different Hom dimensions: d = " + d1.get_str() + " vs d = " + d2.get_str());
    return std::nullopt;
  }
  for (const Seed* s : {&s1, &s2}) {
    ExtendVerdict v = extendable(*s);
    if (!v.extends()) {
      throw DomainError("seed " + s->str() + " does not extend (" + to_string(*v.reason) + ")");
    }
  }
  if (auto w = match_direct(s1, s2, false)) return w;
  if (allow_dual) {
    if (auto w = match_direct(dual(s1), s2, true)) return w;
  }
  note(allow_dual ? "no shift, integer twist or dual relates the seeds"
                  : "no shift and integer twist relates the seeds");
  return std::nullopt;
}

}  // namespace helix
