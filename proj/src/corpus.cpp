#include "helix/corpus.hpp"

#include <algorithm>
#include <sstream>

#include "helix/ampleness.hpp"
#include "helix/classify.hpp"
#include "helix/errors.hpp"
#include "helix/helix_ops.hpp"
#include "helix/hilbert.hpp"
#include "helix/io.hpp"

namespace helix {

namespace {

using Check = std::optional<std::string>;

Seed seed_of(long r_m1, long r_0, long d_m1, long d_0) {
  return Seed(make_int(r_m1), make_int(r_0), make_int(d_m1), make_int(d_0));
}

Check expect_theta(const Seed& s, const std::string& expected) {
  Theta got = theta(s);
  Theta want = parse_theta(expected);
  if (got == want) return std::nullopt;
  return "theta" + s.str() + " = " + got.str() + ", expected " + want.str();
}

Check expect_count(long d, const std::string& theta_text, std::size_t expected) {
  ClassReport r = classify_theta(make_int(d), parse_theta(theta_text));
  if (r.count() == expected) return std::nullopt;
  std::ostringstream msg;
  msg << "classify(" << d << ", " << theta_text << ") found " << r.count() << " classes, expected " << expected;
  return msg.str();
}

Check expect_distinct(const Seed& a, const Seed& b) {
  auto w = same_numerical_class(a, b, false);
  if (!w) return std::nullopt;
  return a.str() + " and " + b.str() + " reported equivalent without dual";
}

Check expect_dual_equivalent(const Seed& a, const Seed& b) {
  auto w = same_numerical_class(a, b, true);
  if (!w) return a.str() + " and " + b.str() + " not equivalent even with dual";
  if (!w->used_dual) return a.str() + " and " + b.str() + " equivalent without dual";
  if (!(apply_witness(a, *w) == b)) return "witness does not map " + a.str() + " onto " + b.str();
  return std::nullopt;
}

Check expect_D(const Seed& s, long expected) {
  Int got = big_D(s);
  if (got == expected) return std::nullopt;
  return "D" + s.str() + " = " + got.get_str() + ", expected " + std::to_string(expected);
}

Check expect_ample(const Seed& s) {
  if (!ample_two_periodic(s)) return "determinant test fails for " + s.str();
  if (!(limit_product(s) > QuadNum(1))) return "limit product of " + s.str() + " does not exceed 1";
  return std::nullopt;
}

std::string canonical_theta_text(long d) {
  // d/2 - d/(2(d-2)) * sqrt(d^2 - 4)
  Rat a(make_int(d), make_int(2));
  Rat b(make_int(d), make_int(2 * (d - 2)));
  return a.str() + " - " + b.str() + "*sqrt(" + std::to_string(d * d - 4) + ")";
}

}  // namespace

std::vector<Seed> corpus_seeds() {
  std::vector<Seed> seeds{
      seed_of(2, 1, -3, 1), seed_of(3, 1, -5, 0),  seed_of(3, 1, -7, 1),
      seed_of(7, 1, -17, -1), seed_of(4, 7, 9, 17), seed_of(5, 5, 11, 12),
  };
  for (long d = 3; d <= 9; ++d) seeds.push_back(seed_of(1, 1, 0, d));
  // ((y,1),(-d,0)) where the dual class coincides with a twist.
  const long families[][2] = {{2, 3}, {2, 5}, {3, 4}, {3, 5}, {3, 10}, {4, 5}, {4, 17}};
  for (const auto& f : families) seeds.push_back(seed_of(f[0], 1, -f[1], 0));
  return seeds;
}

std::vector<CorpusCase> corpus_cases() {
  std::vector<CorpusCase> cases;
  auto add = [&](std::string id, std::string citation, std::function<Check()> check) {
    cases.push_back({std::move(id), std::move(citation), std::move(check)});
  };

  const Seed e2a = seed_of(2, 1, -3, 1), e2b = seed_of(3, 1, -5, 0);
  const Seed e3a = seed_of(3, 1, -7, 1), e3b = seed_of(7, 1, -17, -1);
  const Seed fa = seed_of(4, 7, 9, 17), fb = seed_of(5, 5, 11, 12);
  const Seed line = seed_of(1, 1, 0, 2);

  for (long d = 3; d <= 9; ++d) {
    add("caseyis1/d=" + std::to_string(d), "D = d - 2 gives a single numerical class, represented by ((1,1),(0,d))",
        [d] { return expect_count(d, canonical_theta_text(d), 1); });
  }
  add("caseyis1/theta-canonical", "D = d - 2: theta of ((1,1),(0,d)) is d/2 - d/(2(d-2)) sqrt(d^2-4)", [] {
    for (long d = 3; d <= 9; ++d) {
      if (auto c = expect_theta(seed_of(1, 1, 0, d), canonical_theta_text(d))) return c;
    }
    return Check{};
  });

  add("caseyis2/theta-first", "example for D = 2d - 5 at d = 5: theta = 1/2 - 1/2 sqrt(21)",
      [=] { return expect_theta(e2a, "1/2 - 1/2*sqrt(21)"); });
  add("caseyis2/theta-second", "example for D = 2d - 5 at d = 5: theta = 1/2 - 1/2 sqrt(21)",
      [=] { return expect_theta(e2b, "1/2 - 1/2*sqrt(21)"); });
  add("caseyis2/distinct", "example for D = 2d - 5: the two seeds are not in the same numerical class",
      [=] { return expect_distinct(e2a, e2b); });
  add("caseyis2/dual", "D = 2d - 5 at d = 5: the two classes coincide up to dual",
      [=] { return expect_dual_equivalent(e2a, e2b); });
  add("caseyis2/count", "D = 2d - 5 at d = 5: two distinct numerical classes",
      [] { return expect_count(5, "1/2 - 1/2*sqrt(21)", 2); });

  add("caseyis3/theta-first", "example for D = 3d - 10 at d = 10: theta = -sqrt(6)",
      [=] { return expect_theta(e3a, "-sqrt(6)"); });
  add("caseyis3/theta-second", "example for D = 3d - 10 at d = 10: theta = -sqrt(6)",
      [=] { return expect_theta(e3b, "-sqrt(6)"); });
  add("caseyis3/distinct", "example for D = 3d - 10: the two seeds are not in the same numerical class",
      [=] { return expect_distinct(e3a, e3b); });
  add("caseyis3/D", "example for D = 3d - 10 at d = 10: D = 20", [=] {
    if (auto c = expect_D(e3a, 20)) return c;
    return expect_D(e3b, 20);
  });
  add("caseyis3/count", "D = 3d - 10 at d = 10: two distinct numerical classes",
      [] { return expect_count(10, "-sqrt(6)", 2); });

  add("caseyis4/d17", "D = 4d - 17 at d = 17: two numerical classes for the half-integral rational part",
      [] { return expect_count(17, "1/2 - 1/6*sqrt(285)", 2); });

  add("final-example/theta-first", "closing example: d = 5, theta = 23/10 - 1/30 sqrt(21)",
      [=] { return expect_theta(fa, "23/10 - 1/30*sqrt(21)"); });
  add("final-example/theta-second", "closing example: d = 5, theta = 23/10 - 1/30 sqrt(21)",
      [=] { return expect_theta(fb, "23/10 - 1/30*sqrt(21)"); });
  add("final-example/D", "closing example: D = 75", [=] {
    if (auto c = expect_D(fa, 75)) return c;
    return expect_D(fb, 75);
  });
  add("final-example/count", "closing example: two numerical classes for d = 5, theta = 23/10 - 1/30 sqrt(21)",
      [] { return expect_count(5, "23/10 - 1/30*sqrt(21)", 2); });

  add("thm-d2/line-bundles", "d = 2 extends only for r = (1,1), d_0 = d_{-1} + 2, with theta = -infinity", [=] {
    ExtendVerdict v = extendable(line);
    if (v.kind != Extendability::Yes2) return Check{"((1,1),(0,2)) is " + to_string(v.kind)};
    if (!theta(line).is_neg_infinity()) return Check{"theta((1,1),(0,2)) is finite"};
    return Check{};
  });
  add("thm-d2/higher-rank", "d = 2 never extends with rank above 1", [] {
    ExtendVerdict v = extendable(seed_of(2, 2, 1, 2));
    if (v.kind != Extendability::No) return Check{"((2,2),(1,2)) is " + to_string(v.kind)};
    return Check{};
  });
  add("thm-d2/d-one", "d = 1 never extends", [] {
    ExtendVerdict v = extendable(seed_of(1, 3, 0, 1));
    if (v.kind != Extendability::No || v.reason != NoReason::DTooSmall) {
      return Check{"((1,3),(0,1)) is " + to_string(v.kind)};
    }
    return Check{};
  });
  add("thm-d2/classify", "d = 2: a single numerical class, the line bundles",
      [] { return expect_count(2, "-inf", 1); });
  add("thm-generic/extends", "d > 2 extends iff D > 0", [=] {
    for (const Seed& s : {e2a, e2b, e3a, e3b, fa, fb}) {
      if (extendable(s).kind != Extendability::YesGeneric) return Check{s.str() + " does not extend"};
    }
    return Check{};
  });

  add("ample/two-periodic", "two-periodic helices with d > 2 are ample: det M = d > sqrt(d^2 - 4)", [] {
    for (const Seed& s : corpus_seeds()) {
      if (auto c = expect_ample(s)) return c;
    }
    return Check{};
  });
  add("ample/three-periodic", "three-periodic helices are ample: d > sqrt((d-1)^2 - 4)", [] {
    for (long d = 3; d <= 20; ++d) {
      if (!three_periodic_ample(make_int(d))) return Check{"three-periodic test fails at d = " + std::to_string(d)};
    }
    return Check{};
  });

  add("hilbert/first-row", "Hom dimensions from the determinant formula: h(0,j) = 0, 5, 25, 120", [=] {
    HilbertTable t = hilbert_table(e2a, 3);
    const long want[] = {0, 5, 25, 120};
    for (long j = 0; j <= 3; ++j) {
      if (t.at(0, j) != want[j]) return Check{"h(0," + std::to_string(j) + ") = " + t.at(0, j).get_str()};
    }
    return Check{};
  });

  std::sort(cases.begin(), cases.end(), [](const CorpusCase& a, const CorpusCase& b) { return a.id < b.id; });
  return cases;
}

CorpusCase injected_failure_case() {
  return {"injected/wrong-count", "injected wrong expectation: three classes at d = 10, theta = -sqrt(6)",
          [] { return expect_count(10, "-sqrt(6)", 3); }};
}

std::vector<CorpusResult> run_corpus(const std::vector<CorpusCase>& cases, const std::string& filter) {
  std::vector<CorpusResult> results;
  for (const CorpusCase& c : cases) {
    if (!filter.empty() && c.id.find(filter) == std::string::npos) continue;
    CorpusResult r{c.id, c.citation, true, ""};
    try {
      if (auto failure = c.check()) {
        r.passed = false;
        r.detail = *failure;
      }
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("threw: ") + e.what();
    }
    results.push_back(std::move(r));
  }
  std::sort(results.begin(), results.end(), [](const CorpusResult& a, const CorpusResult& b) { return a.id < b.id; });
  return results;
}

}  // namespace helix
