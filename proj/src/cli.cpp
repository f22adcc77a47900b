#include "helix/cli.hpp"

#include <algorithm>
#include <ostream>

#include <CLI11.hpp>

#include "helix/ampleness.hpp"
#include "helix/classify.hpp"
#include "helix/corpus.hpp"
#include "helix/errors.hpp"
#include "helix/helix_ops.hpp"
#include "helix/hilbert.hpp"
#include "helix/io.hpp"
#include "helix/quadform.hpp"

namespace helix {

namespace {

// A leading space keeps theta arguments such as "-sqrt(6)" from being read
// as options; the theta grammar ignores whitespace.
std::string protect_negative_theta(const std::string& arg) {
  if (arg.size() < 2 || arg[0] != '-' || arg[1] == '-') return arg;
  bool looks_like_theta = arg.find("sqrt") != std::string::npos || arg.find('/') != std::string::npos ||
                          arg.find("inf") != std::string::npos;
  return looks_like_theta ? " " + arg : arg;
}

struct Globals {
  bool json = false;
  int approx = -1;  ///< decimal digits, or -1 for exact output only
};

std::string approx_of(const Theta& t, int digits) {
  return t.is_neg_infinity() ? std::string("-inf") : to_decimal(t.value(), digits);
}

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

int cmd_validate(const Globals& g, const std::string& seed_arg, std::ostream& out) {
  const Seed s = load_seed(seed_arg);
  const ExtendVerdict v = extendable(s);
  const Int d = seed_det(s);
  const Int D = big_D(s);
  std::optional<Theta> t;
  std::optional<Normalized> norm;
  if (v.extends()) {
    t = theta(s);
    if (v.kind == Extendability::YesGeneric) norm = normalize(s);
  }

  if (g.json) {
    json j{{"seed", seed_to_json(s)},
           {"verdict", to_string(v.kind)},
           {"reason", v.reason ? json(to_string(*v.reason)) : json(nullptr)},
           {"d", int_to_json(d)},
           {"D", int_to_json(D)},
           {"theta", t ? theta_to_json(*t) : json(nullptr)},
           {"normalized", norm ? json{{"seed", seed_to_json(norm->seed)}, {"shift", norm->shift}, {"tie", norm->is_tie}}
                               : json(nullptr)}};
    if (g.approx >= 0 && t) j["theta_approx"] = approx_of(*t, g.approx);
    print_json(out, j);
  } else {
    out << "seed: " << s.str() << '\n';
    out << "verdict: " << to_string(v.kind);
    if (v.reason) out << " (" << to_string(*v.reason) << ')';
    out << '\n';
    out << "d: " << d.get_str() << '\n';
    out << "D: " << D.get_str() << '\n';
    if (t) {
      out << "theta: " << t->str();
      if (g.approx >= 0) out << "  ~ " << approx_of(*t, g.approx);
      out << '\n';
    }
    if (norm) {
      out << "normalized: " << norm->seed.str() << " at shift " << norm->shift << (norm->is_tie ? " (tie)" : "")
          << '\n';
    }
  }
  return v.extends() ? kExitOk : kExitNegative;
}

int cmd_seq(const Globals& g, const std::string& seed_arg, long from, long to, std::ostream& out) {
  if (from > to) throw InputError("--from exceeds --to");
  const Seed s = load_seed(seed_arg);
  const auto window = rank_deg_window(s, from, to);
  if (g.json) {
    json rows = json::array();
    for (const WindowEntry& e : window) {
      rows.push_back({{"n", e.index}, {"rank", int_to_json(e.rank)}, {"degree", int_to_json(e.degree)}});
    }
    print_json(out, json{{"seed", seed_to_json(s)}, {"terms", rows}});
  } else {
    out << "n,rank,degree\n";
    for (const WindowEntry& e : window) out << e.index << ',' << e.rank.get_str() << ',' << e.degree.get_str() << '\n';
  }
  return kExitOk;
}

int cmd_theta(const Globals& g, const std::string& seed_arg, std::ostream& out) {
  const Seed s = load_seed(seed_arg);
  const Theta t = theta(s);
  if (g.json) {
    json j{{"seed", seed_to_json(s)}, {"theta", theta_to_json(t)}, {"D", int_to_json(big_D(s))}};
    if (g.approx >= 0) j["theta_approx"] = approx_of(t, g.approx);
    print_json(out, j);
  } else {
    out << t.str();
    if (g.approx >= 0) out << "  ~ " << approx_of(t, g.approx);
    out << '\n';
  }
  return kExitOk;
}

int cmd_classify(const Globals& g, const std::string& d_text, const std::string& theta_text, std::ostream& out,
                 std::ostream& err) {
  const Int d = parse_int(d_text);
  const Theta t = parse_theta(theta_text);
  ClassReport r;
  try {
    r = classify_theta(d, t);
  } catch (const NoHelixError& e) {
    err << "no helix: " << e.what() << '\n';
    return kExitNegative;
  }
  if (g.json) {
    json j = report_to_json(r);
    if (g.approx >= 0) j["theta_approx"] = approx_of(r.theta, g.approx);
    print_json(out, j);
  } else {
    out << "d: " << r.d.get_str() << '\n';
    out << "theta: " << r.theta.str();
    if (g.approx >= 0) out << "  ~ " << approx_of(r.theta, g.approx);
    out << '\n';
    out << "D: " << (r.D ? r.D->get_str() : std::string("none")) << '\n';
    out << "count: " << r.count() << '\n';
    for (const ClassEntry& e : r.classes) {
      out << "  " << e.seed.str() << "  orbit (" << e.orbit_r_m1.get_str() << ',' << e.orbit_r_0.get_str()
          << ")  gcd_bar " << e.gcd_bar.get_str() << '\n';
    }
    for (const std::string& w : r.warnings) out << "warning: " << w << '\n';
  }
  return kExitOk;
}

int cmd_equiv(const Globals& g, const std::string& a_arg, const std::string& b_arg, bool allow_dual,
              std::ostream& out) {
  const Seed a = load_seed(a_arg);
  const Seed b = load_seed(b_arg);
  std::string diagnostic;
  const auto w = same_numerical_class(a, b, allow_dual, &diagnostic);
  if (g.json) {
    json j{{"first", seed_to_json(a)}, {"second", seed_to_json(b)}, {"equivalent", w.has_value()},
           {"witness", witness_to_json(w)}};
    if (!diagnostic.empty()) j["diagnostic"] = diagnostic;
    print_json(out, j);
  } else if (w) {
    out << (w->used_dual ? "equivalent up to dual" : "equivalent") << ": shift " << w->shift << ", twist "
        << w->twist.get_str() << '\n';
  } else {
    out << "distinct";
    if (!diagnostic.empty()) out << " (" << diagnostic << ')';
    out << '\n';
  }
  return w ? kExitOk : kExitNegative;
}

int cmd_ample(const Globals& g, const std::string& seed_arg, long three_periodic, std::ostream& out) {
  if (three_periodic != 0) {
    const Int d = make_int(three_periodic);
    const bool cross = three_periodic_cross_products(d);
    const bool ample = three_periodic_ample(d);
    if (g.json) {
      print_json(out, json{{"three_periodic_d", three_periodic}, {"cross_products", cross}, {"ample", ample}});
    } else {
      out << "three-periodic d = " << three_periodic << '\n';
      out << "cross products: " << (cross ? "hold" : "fail") << '\n';
      out << "ample: " << (ample ? "yes" : "no") << '\n';
    }
    return ample ? kExitOk : kExitNegative;
  }
  if (seed_arg.empty()) throw InputError("ample needs a seed or --three-periodic d");
  const Seed s = load_seed(seed_arg);
  const bool ample = ample_two_periodic(s);
  const QuadNum limit = limit_product(s);
  if (g.json) {
    json j{{"seed", seed_to_json(s)}, {"det", int_to_json(seed_det(s))}, {"ample", ample},
           {"limit_product", quad_to_json(limit)}};
    if (g.approx >= 0) j["limit_product_approx"] = to_decimal(limit, g.approx);
    print_json(out, j);
  } else {
    out << "seed: " << s.str() << '\n';
    out << "det: " << seed_det(s).get_str() << '\n';
    out << "limit product: " << limit.str();
    if (g.approx >= 0) out << "  ~ " << to_decimal(limit, g.approx);
    out << '\n';
    out << "ample: " << (ample ? "yes" : "no") << '\n';
  }
  return ample ? kExitOk : kExitNegative;
}

int cmd_hilbert(const Globals& g, const std::string& seed_arg, long size, std::ostream& out) {
  const Seed s = load_seed(seed_arg);
  const HilbertTable t = hilbert_table(s, size);
  if (g.json) {
    // Full square matrix; entries below the diagonal are left null.
    json rows = json::array();
    for (long i = 0; i <= size; ++i) {
      json row = json::array();
      for (long j = 0; j <= size; ++j) row.push_back(j < i ? json(nullptr) : int_to_json(t.at(i, j)));
      rows.push_back(row);
    }
    print_json(out, json{{"seed", seed_to_json(s)}, {"size", size}, {"h", rows}});
  } else {
    for (long i = 0; i <= size; ++i) {
      for (long j = 0; j <= size; ++j) {
        if (j > 0) out << ',';
        if (j >= i) out << t.at(i, j).get_str();
      }
      out << '\n';
    }
  }
  return kExitOk;
}

int cmd_pell(const std::string& d_text, const std::string& r_m1_text, const std::string& r_0_text,
             std::ostream& out) {
  const Int d = parse_int(d_text);
  const Int r_m1 = parse_int(r_m1_text);
  const Int r_0 = parse_int(r_0_text);
  const DiagSolution diag = to_diag(r_m1, r_0, d);
  const PellSolution pell = to_pell(diag);
  print_json(out, json{{"d", int_to_json(d)},
                       {"D", int_to_json(diag.D)},
                       {"diag", {{"x", int_to_json(diag.x)}, {"y", int_to_json(diag.y)}}},
                       {"pell", {{"X", int_to_json(pell.X)}, {"Y", int_to_json(pell.Y)}}}});
  return kExitOk;
}

int cmd_corpus(const Globals& g, const std::string& filter, bool inject, std::ostream& out) {
  auto cases = corpus_cases();
  if (inject) cases.push_back(injected_failure_case());
  const auto results = run_corpus(cases, filter);
  const auto failed = static_cast<std::size_t>(
      std::count_if(results.begin(), results.end(), [](const CorpusResult& r) { return !r.passed; }));
  const std::size_t passed = results.size() - failed;
  if (g.json) {
    json rows = json::array();
    for (const CorpusResult& r : results) {
      rows.push_back({{"id", r.id}, {"citation", r.citation}, {"passed", r.passed}, {"detail", r.detail}});
    }
    print_json(out, json{{"cases", rows}, {"passed", passed}, {"failed", failed}});
  } else {
    for (const CorpusResult& r : results) {
      out << (r.passed ? "ok   " : "FAIL ") << r.id << '\n';
      if (!r.passed) out << "     citation: " << r.citation << "\n     " << r.detail << '\n';
    }
    out << passed << " passed, " << failed << " failed\n";
  }
  return failed == 0 ? kExitOk : kExitNegative;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical invariants of two-periodic elliptic helices", "helix"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_flag("--json", g.json, "Emit JSON");
  app.add_option("--approx", g.approx, "Append k-digit decimal renderings")->check(CLI::Range(0, 1000));

  std::string seed_a, seed_b, d_text, theta_text, r_m1_text, r_0_text, filter;
  long from = -5, to = 5, size = 5, three_periodic = 0;
  bool allow_dual = false, inject = false;

  auto* validate = app.add_subcommand("validate", "Decide whether a seed extends to a helix");
  validate->add_option("seed", seed_a, "Seed JSON or path to a seed file")->required();

  auto* seq = app.add_subcommand("seq", "Ranks and degrees on a window of indices");
  seq->add_option("seed", seed_a, "Seed JSON or path to a seed file")->required();
  seq->add_option("--from", from, "First index");
  seq->add_option("--to", to, "Last index");

  auto* theta_cmd = app.add_subcommand("theta", "Negative limit slope of a seed");
  theta_cmd->add_option("seed", seed_a, "Seed JSON or path to a seed file")->required();

  auto* classify = app.add_subcommand("classify", "Numerical classes with given d and theta");
  classify->add_option("d", d_text, "Hom dimension")->required();
  classify->add_option("theta", theta_text, "e.g. \"1/2 - 1/2*sqrt(21)\" or -inf")->required();

  auto* equiv = app.add_subcommand("equiv", "Decide whether two seeds share a numerical class");
  equiv->add_option("first", seed_a, "Seed JSON or path")->required();
  equiv->add_option("second", seed_b, "Seed JSON or path")->required();
  equiv->add_flag("--allow-dual", allow_dual, "Also allow dualizing the first seed");

  auto* ample = app.add_subcommand("ample", "Ampleness criteria");
  ample->add_option("seed", seed_a, "Seed JSON or path");
  ample->add_option("--three-periodic", three_periodic, "Check the three-periodic helix with this d")
      ->check(CLI::Range(3L, 1000000L));

  auto* hilbert = app.add_subcommand("hilbert", "Hom dimension table of the helix algebra");
  hilbert->add_option("--seed", seed_a, "Seed JSON or path")->required();
  hilbert->add_option("--size", size, "Largest index")->check(CLI::Range(1L, 10000L));

  auto* pell = app.add_subcommand("pell", "Diagonal form and Pell associate of a rank pair");
  pell->add_option("d", d_text, "Hom dimension")->required();
  pell->add_option("r_m1", r_m1_text, "Rank of E_{-1}")->required();
  pell->add_option("r_0", r_0_text, "Rank of E_0")->required();

  auto* corpus = app.add_subcommand("corpus", "Run the regression corpus");
  corpus->add_option("--filter", filter, "Only cases whose id contains this text");
  corpus->add_flag("--inject-failure", inject, "Add a case with a wrong expectation");

  try {
    std::vector<std::string> reversed;
    for (auto it = args.rbegin(); it != args.rend(); ++it) reversed.push_back(protect_negative_theta(*it));
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (validate->parsed()) return cmd_validate(g, seed_a, out);
    if (seq->parsed()) return cmd_seq(g, seed_a, from, to, out);
    if (theta_cmd->parsed()) return cmd_theta(g, seed_a, out);
    if (classify->parsed()) return cmd_classify(g, d_text, theta_text, out, err);
    if (equiv->parsed()) return cmd_equiv(g, seed_a, seed_b, allow_dual, out);
    if (ample->parsed()) return cmd_ample(g, seed_a, three_periodic, out);
    if (hilbert->parsed()) return cmd_hilbert(g, seed_a, size, out);
    if (pell->parsed()) return cmd_pell(d_text, r_m1_text, r_0_text, out);
    if (corpus->parsed()) return cmd_corpus(g, filter, inject, out);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitNegative;
  }
  return kExitInput;
}

}  // namespace helix
