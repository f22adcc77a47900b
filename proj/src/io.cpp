#include "helix/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "helix/errors.hpp"

namespace helix {

json int_to_json(const Int& v) {
  if (v.fits_slong_p()) return json(static_cast<std::int64_t>(v.get_si()));
  return json(v.get_str());
}

Int int_from_json(const json& j) {
  if (j.is_number_integer()) return make_int(j.get<std::int64_t>());
  if (j.is_string()) return parse_int(j.get<std::string>());
  throw InputError("expected an integer, got " + j.dump());
}

json rat_to_json(const Rat& v) { return json(v.str()); }

Rat rat_from_json(const json& j) {
  if (j.is_string()) return parse_rat(j.get<std::string>());
  if (j.is_number_integer()) return Rat(int_from_json(j));
  throw InputError("expected a rational \"p/q\", got " + j.dump());
}

json quad_to_json(const QuadNum& v) {
  return json{{"a", rat_to_json(v.a())}, {"b", rat_to_json(v.b())}, {"radicand", int_to_json(v.radicand())}};
}

QuadNum quad_from_json(const json& j) {
  if (!j.is_object() || !j.contains("a") || !j.contains("b") || !j.contains("radicand")) {
    throw InputError("expected {\"a\", \"b\", \"radicand\"}, got " + j.dump());
  }
  Int n = int_from_json(j.at("radicand"));
  if (sgn(n) < 0) throw InputError("radicand must be nonnegative");
  return QuadNum(rat_from_json(j.at("a")), rat_from_json(j.at("b")), n);
}

json seed_to_json(const Seed& s) {
  return json{{"r", json::array({int_to_json(s.r_m1()), int_to_json(s.r_0())})},
              {"deg", json::array({int_to_json(s.d_m1()), int_to_json(s.d_0())})}};
}

Seed seed_from_json(const json& j) {
  if (!j.is_object() || !j.contains("r") || !j.contains("deg")) {
    throw InputError("seed must be {\"r\": [r_m1, r_0], \"deg\": [d_m1, d_0]}, got " + j.dump());
  }
  const json& r = j.at("r");
  const json& g = j.at("deg");
  if (!r.is_array() || r.size() != 2 || !g.is_array() || g.size() != 2) {
    throw InputError("seed \"r\" and \"deg\" must be two-element arrays");
  }
  return Seed(int_from_json(r[0]), int_from_json(r[1]), int_from_json(g[0]), int_from_json(g[1]));
}

json theta_to_json(const Theta& t) {
  if (t.is_neg_infinity()) return json{{"neg_infinity", true}};
  return quad_to_json(t.value());
}

Theta theta_from_json(const json& j) {
  if (j.is_object() && j.contains("neg_infinity")) {
    if (j.at("neg_infinity") != true) throw InputError("\"neg_infinity\" must be true");
    return Theta::neg_infinity();
  }
  return Theta(quad_from_json(j));
}

json witness_to_json(const std::optional<EquivWitness>& w) {
  if (!w) return json(nullptr);
  return json{{"shift", w->shift}, {"twist", int_to_json(w->twist)}, {"dual", w->used_dual}};
}

std::optional<EquivWitness> witness_from_json(const json& j) {
  if (j.is_null()) return std::nullopt;
  if (!j.is_object() || !j.contains("shift") || !j.contains("twist") || !j.contains("dual")) {
    throw InputError("witness must be {\"shift\", \"twist\", \"dual\"} or null");
  }
  return EquivWitness{j.at("shift").get<long>(), int_from_json(j.at("twist")), j.at("dual").get<bool>()};
}

json report_to_json(const ClassReport& r) {
  json classes = json::array();
  for (const ClassEntry& e : r.classes) {
    classes.push_back({{"seed", seed_to_json(e.seed)},
                       {"orbit", json::array({int_to_json(e.orbit_r_m1), int_to_json(e.orbit_r_0)})},
                       {"gcd_bar", int_to_json(e.gcd_bar)},
                       {"coset", int_to_json(e.coset)}});
  }
  return json{{"d", int_to_json(r.d)},
              {"theta", theta_to_json(r.theta)},
              {"D", r.D ? int_to_json(*r.D) : json(nullptr)},
              {"classes", classes},
              {"count", r.count()},
              {"warnings", r.warnings}};
}

ClassReport report_from_json(const json& j) {
  if (!j.is_object()) throw InputError("class report must be an object");
  ClassReport r;
  r.d = int_from_json(j.at("d"));
  r.theta = theta_from_json(j.at("theta"));
  if (!j.at("D").is_null()) r.D = int_from_json(j.at("D"));
  for (const json& c : j.at("classes")) {
    const json& orbit = c.at("orbit");
    r.classes.push_back({seed_from_json(c.at("seed")), int_from_json(orbit.at(0)), int_from_json(orbit.at(1)),
                         int_from_json(c.at("gcd_bar")), c.contains("coset") ? int_from_json(c.at("coset")) : Int(0)});
  }
  r.warnings = j.at("warnings").get<std::vector<std::string>>();
  if (j.at("count").get<std::size_t>() != r.count()) throw InputError("class report count disagrees with classes");
  return r;
}

namespace {

class ThetaParser {
 public:
  explicit ThetaParser(std::string_view text) : text_(text) {}

  Theta parse() {
    std::string compact;
    for (char c : text_) {
      if (!std::isspace(static_cast<unsigned char>(c))) compact += static_cast<char>(std::tolower(c));
    }
    if (compact == "-inf" || compact == "-infinity" || compact == "neg_infinity") return Theta::neg_infinity();
    if (compact.empty()) fail("empty expression");
    s_ = compact;

    QuadNum total;
    bool first = true;
    int rational_terms = 0, irrational_terms = 0;
    while (pos_ < s_.size()) {
      int sgn_term = 1;
      if (peek() == '+' || peek() == '-') {
        sgn_term = (s_[pos_] == '-') ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      QuadNum term = parse_term();
      (term.b().is_zero() ? rational_terms : irrational_terms)++;
      if (sgn_term < 0) term = quad_neg(term);
      try {
        total = quad_add(total, term);
      } catch (const DomainError& e) {
        fail(e.what());
      }
    }
    if (rational_terms > 1 || irrational_terms > 1) fail("at most one rational and one sqrt term");
    return Theta(total);
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw InputError("cannot parse theta '" + std::string(text_) + "': " + why);
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  Int parse_digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits at position " + std::to_string(start));
    return Int(s_.substr(start, pos_ - start), 10);
  }

  bool try_sqrt() {
    if (s_.compare(pos_, 5, "sqrt(") != 0) return false;
    pos_ += 5;
    return true;
  }

  Int parse_sqrt_body() {
    Int n = parse_digits();
    if (peek() != ')') fail("expected ')'");
    ++pos_;
    return n;
  }

  QuadNum parse_term() {
    if (try_sqrt()) return QuadNum(0, 1, parse_sqrt_body());
    Int num = parse_digits();
    Rat coef(num);
    if (peek() == '/') {
      ++pos_;
      Int den = parse_digits();
      if (den == 0) fail("zero denominator");
      coef = Rat(num, den);
    }
    if (peek() == '*') {
      ++pos_;
      if (!try_sqrt()) fail("expected sqrt( after '*'");
      return QuadNum(0, coef, parse_sqrt_body());
    }
    return QuadNum(coef);
  }

  std::string_view text_;
  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

Theta parse_theta(std::string_view text) { return ThetaParser(text).parse(); }

Seed load_seed(const std::string& arg) {
  std::string text;
  std::size_t first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && arg[first] == '{') {
    text = arg;
  } else {
    std::ifstream in(arg);
    if (!in) throw InputError("cannot open seed file '" + arg + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed seed JSON: ") + e.what());
  }
  try {
    return seed_from_json(j);
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed seed JSON: ") + e.what());
  }
}

}  // namespace helix
