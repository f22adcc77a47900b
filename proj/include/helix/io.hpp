#pragma once

// JSON schemas and text formats.
//
//   Rat          "p/q"
//   QuadNum      {"a": "p/q", "b": "p/q", "radicand": N}
//   Seed         {"r": [r_m1, r_0], "deg": [d_m1, d_0]}
//   Theta        QuadNum schema, or {"neg_infinity": true}
//   EquivWitness {"shift": n, "twist": a, "dual": bool} or null
//   ClassReport  {"d", "theta", "D", "classes": [{"seed", "orbit", "gcd_bar"}], "count", "warnings"}
//
// Integers that do not fit in 64 bits are written as decimal strings; the
// readers accept either form.

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "helix/classify.hpp"
#include "helix/exact_arith.hpp"
#include "helix/helix_core.hpp"
#include "helix/helix_ops.hpp"

namespace helix {

using nlohmann::json;

json int_to_json(const Int& v);
Int int_from_json(const json& j);

json rat_to_json(const Rat& v);
Rat rat_from_json(const json& j);

json quad_to_json(const QuadNum& v);
QuadNum quad_from_json(const json& j);

json seed_to_json(const Seed& s);
Seed seed_from_json(const json& j);

json theta_to_json(const Theta& t);
Theta theta_from_json(const json& j);

json witness_to_json(const std::optional<EquivWitness>& w);
std::optional<EquivWitness> witness_from_json(const json& j);

json report_to_json(const ClassReport& r);
ClassReport report_from_json(const json& j);

/// Parses "[sign] p[/q] [sign p[/q] * sqrt(N)]" (whitespace-insensitive).
/// Also accepts a bare "sqrt(N)" term, a leading irrational term, and
/// "-inf" for the d = 2 sentinel. Throws InputError.
Theta parse_theta(std::string_view text);

/// Reads a seed from inline JSON (text starting with '{') or a file path.
Seed load_seed(const std::string& arg);

}  // namespace helix
