#include "lensforge/cli.hpp"

#include "json.hpp"

#include <array>
#include <random>
#include <sstream>
#include <utility>

#include "lensforge/error.hpp"
#include "lensforge/hj.hpp"
#include "lensforge/lens.hpp"
#include "lensforge/quotient.hpp"
#include "lensforge/torus_cover.hpp"

namespace lensforge::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::array<std::pair<std::string_view, Command>, 11> kCommands{{
    {"classify", Command::Classify},
    {"homeo", Command::Homeo},
    {"fill", Command::Fill},
    {"cover", Command::Cover},
    {"equiv", Command::Equiv},
    {"link-x", Command::LinkX},
    {"basis", Command::Basis},
    {"resolve", Command::Resolve},
    {"orbits", Command::Orbits},
    {"verify-chain", Command::VerifyChain},
    {"census", Command::Census},
}};

std::int64_t require(const JobRequest& r, const std::string& key) {
  const auto it = r.parameters.find(key);
  if (it == r.parameters.end()) {
    throw Error(ErrorCode::ParseError, "missing required flag --" + key);
  }
  return it->second;
}

std::int64_t optional_param(const JobRequest& r, const std::string& key, std::int64_t fallback) {
  const auto it = r.parameters.find(key);
  return it == r.parameters.end() ? fallback : it->second;
}

Json lens_json(const LensSpace& lens) { return Json{{"n", lens.n()}, {"q", lens.q()}}; }

Json curve_json(const TorusCurve& c) { return Json{{"m2", c.coeff_m2()}, {"l2", c.coeff_l2()}}; }

Json cover_json(const CoveringData& d) {
  return Json{{"n", d.n()}, {"q", d.q()}, {"a", d.a()}, {"b", d.b()}};
}

Json matrix_json(const CoveringMatrix& m) {
  return Json::array({Json::array({m.at(0, 0), m.at(0, 1)}), Json::array({m.at(1, 0), m.at(1, 1)})});
}

Json basis_json(const SemigroupBasis& basis) {
  Json gens = Json::array();
  for (const auto& g : basis.generators) gens.push_back(Json::array({g.e1, g.e2}));
  return Json{{"n", basis.germ.n()}, {"q", basis.germ.q()}, {"generators", gens}};
}

Json census_row(std::int64_t n, std::int64_t q) {
  const LensSpace lens = normalize_lens(n, q);
  const HJChain chain = hj_expand(n, q);
  const SemigroupBasis basis = hilbert_basis(QuotientGerm(n, q));
  return Json{{"n", n},
              {"q", q},
              {"lens", lens.name()},
              {"q_dual", mod_inverse(q, n)},
              {"basis_size", basis.generators.size()},
              {"chain", chain.coefficients},
              {"chain_length", chain.coefficients.size()},
              {"normal", is_normal_X(n, q)}};
}

// Deterministic sample points with small rational moduli and phases.
std::vector<ExactPoint> sample_points(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> num(1, 50), den(1, 24);
  auto coord = [&] {
    Rational modulus(num(rng), den(rng));
    const std::int64_t d = den(rng);
    Rational phase(std::uniform_int_distribution<std::int64_t>(0, d - 1)(rng), d);
    return ExactCoord(modulus, phase);
  };
  std::vector<ExactPoint> points;
  for (int i = 0; i < count; ++i) {
    ExactCoord z1 = coord();
    points.push_back(ExactPoint{z1, coord()});
  }
  return points;
}

struct Outcome {
  Json inputs;
  Json result;
  Json extra = Json::object();  // appended after "result", e.g. the link-x trace
  std::string dot;              // set only by resolve
};

Outcome dispatch(const JobRequest& r) {
  Outcome out;
  switch (r.command) {
    case Command::Classify: {
      const auto n = require(r, "n"), q = require(r, "q");
      out.inputs = {{"n", n}, {"q", q}};
      out.result = lens_json(normalize_lens(n, q));
      if (n < 0) out.extra["orientation_reversed"] = true;
      break;
    }
    case Command::Homeo: {
      const auto n = require(r, "n"), q = require(r, "q"), q2 = require(r, "q2");
      out.inputs = {{"n", n}, {"q", q}, {"q2", q2}};
      out.result = is_homeomorphic(normalize_lens(n, q), normalize_lens(n, q2));
      if (n < 0) out.extra["orientation_reversed"] = true;
      break;
    }
    case Command::Fill: {
      const auto n = require(r, "n"), q = require(r, "q");
      out.inputs = {{"n", n}, {"q", q}};
      const TorusCurve m1(-q, n);
      out.result = lens_json(dehn_fill(m1));
      out.extra["m1"] = curve_json(m1);
      break;
    }
    case Command::Cover: {
      const CoveringData d(require(r, "n"), require(r, "q"), require(r, "a"), require(r, "b"));
      out.inputs = cover_json(d);
      const CoveringMatrix m = covering_matrix(d);
      out.result = {{"matrix", matrix_json(m)},
                    {"generic_degree", generic_degree(d)},
                    {"determinant", m.determinant()},
                    {"lens", lens_json(d.lens())},
                    {"swapped", d.n() >= 2 ? cover_json(swap_coordinates(d)) : Json(nullptr)}};
      break;
    }
    case Command::Equiv: {
      const auto n = require(r, "n"), q = require(r, "q"), a = require(r, "a"), b = require(r, "b");
      const auto q2 = optional_param(r, "q2", q);
      const auto a2 = optional_param(r, "a2", a), b2 = optional_param(r, "b2", b);
      out.inputs = {{"n", n}, {"q", q}, {"a", a}, {"b", b}, {"q2", q2}, {"a2", a2}, {"b2", b2}};
      out.result = covering_equivalent(CoveringData(n, q, a, b), CoveringData(n, q2, a2, b2));
      break;
    }
    case Command::LinkX: {
      const auto n = require(r, "n"), q = require(r, "q");
      out.inputs = {{"n", n}, {"q", q}};
      const LinkOfX link = link_of_X(n, q);
      out.result = {{"lens", lens_json(link.lens)},
                    {"cover", cover_json(link.cover)},
                    {"normal", is_normal_X(n, q)}};
      const LinkTrace& t = link.trace;
      out.extra["trace"] = {{"m2_cap_m1", t.m2_cap_m1},
                            {"m1_cap_l2", t.m1_cap_l2},
                            {"alpha", t.alpha},
                            {"beta", t.beta},
                            {"reparam",
                             {{"m1", curve_json(t.m1)},
                              {"l2_prime", curve_json(t.l2_prime)},
                              {"m1_in_l2_prime", curve_json(t.m1_in_l2_prime)}}},
                            {"result", lens_json(t.result)}};
      break;
    }
    case Command::Basis: {
      const QuotientGerm g(require(r, "n"), require(r, "q"));
      const auto bound = optional_param(r, "bound", 2 * g.n());
      out.inputs = {{"n", g.n()}, {"q", g.q()}, {"bound", bound}};
      out.result = basis_json(hilbert_basis(g, bound));
      break;
    }
    case Command::Resolve: {
      const auto n = require(r, "n"), q = require(r, "q");
      out.inputs = {{"n", n}, {"q", q}};
      const HJChain chain = hj_expand(n, q);
      const HJChain dual = hj_reverse_dual(chain);
      const ResolutionGraph graph = resolution_graph(chain);
      out.dot = graph.to_dot();
      out.result = {{"chain", chain.coefficients},
                    {"value", to_fraction_string(hj_evaluate(chain.coefficients))},
                    {"dual", {{"q", dual.q}, {"chain", dual.coefficients}}},
                    {"self_intersections", graph.self_intersections},
                    {"determinant", intersection_matrix_determinant(graph).convert_to<std::int64_t>()},
                    {"dot", out.dot}};
      break;
    }
    case Command::Orbits: {
      const QuotientGerm g(require(r, "n"), require(r, "q"));
      out.inputs = {{"n", g.n()}, {"q", g.q()}};
      Json census = Json::object();
      bool free = true;
      for (const auto& [size, count] : orbit_size_census(g)) {
        census[std::to_string(size)] = count;
        free = free && size == g.n();
      }
      out.result = {{"census", census}, {"free", free}, {"nu_separates_orbits", nu_separates_orbits(g)}};
      break;
    }
    case Command::VerifyChain: {
      const QuotientGerm g(require(r, "n"), require(r, "q"));
      out.inputs = {{"n", g.n()}, {"q", g.q()}};
      bool chain_ok = true, invariant_ok = true;
      for (const auto& p : sample_points(kVerifyChainPoints, 0x5eed + 31 * g.n() + g.q())) {
        chain_ok = chain_ok && chain_identity_check(g, p);
        invariant_ok = invariant_ok && nu_orbit_invariance(g, p);
      }
      out.result = {{"points", kVerifyChainPoints},
                    {"chain_identity", chain_ok},
                    {"nu_orbit_invariance", invariant_ok}};
      break;
    }
    case Command::Census: {
      const auto max_n = require(r, "max-n");
      if (max_n > kCensusMaxN) {
        throw Error(ErrorCode::BoundTooLarge, "census is limited to max-n <= 30");
      }
      if (max_n < 2) throw Error(ErrorCode::InvalidInput, "census needs max-n >= 2");
      out.inputs = {{"max_n", max_n}};
      Json rows = Json::array();
      for (std::int64_t n = 2; n <= max_n; ++n) {
        for (std::int64_t q = 1; q < n; ++q) {
          if (gcd64(n, q) == 1) rows.push_back(census_row(n, q));
        }
      }
      out.result = {{"rows", rows}};
      break;
    }
  }
  return out;
}

std::string paint(const std::string& text, bool color, const char* code) {
  return color ? std::string("\x1b[") + code + "m" + text + "\x1b[0m" : text;
}

void text_lines(std::ostringstream& os, const std::string& prefix, const Json& value, bool color) {
  if (value.is_object()) {
    for (const auto& [key, item] : value.items()) {
      text_lines(os, prefix.empty() ? key : prefix + "." + key, item, color);
    }
    return;
  }
  os << prefix << ": ";
  if (value.is_boolean()) {
    os << paint(value.get<bool>() ? "true" : "false", color, value.get<bool>() ? "32" : "31");
  } else if (value.is_string()) {
    os << value.get<std::string>();
  } else {
    os << value.dump();
  }
  os << '\n';
}

}  // namespace

std::optional<Command> parse_command(std::string_view name) {
  for (const auto& [key, command] : kCommands) {
    if (key == name) return command;
  }
  return std::nullopt;
}

std::string_view command_name(Command command) {
  for (const auto& [key, value] : kCommands) {
    if (value == command) return key;
  }
  return "unknown";
}

std::optional<OutputFormat> parse_format(std::string_view name) {
  if (name == "json") return OutputFormat::Json;
  if (name == "dot") return OutputFormat::Dot;
  if (name == "text") return OutputFormat::Text;
  return std::nullopt;
}

Report run(const JobRequest& request) {
  try {
    if (request.format == OutputFormat::Dot && request.command != Command::Resolve) {
      throw Error(ErrorCode::ParseError, "--output-format dot is only available for resolve");
    }
    Outcome out = dispatch(request);
    if (request.format == OutputFormat::Dot) return Report{out.dot + "\n", 0};

    Json doc = {{"command", command_name(request.command)}, {"inputs", out.inputs}, {"result", out.result}};
    for (auto& [key, value] : out.extra.items()) doc[key] = value;
    if (request.format == OutputFormat::Text) {
      std::ostringstream os;
      text_lines(os, "", doc, request.color);
      return Report{os.str(), 0};
    }
    return Report{doc.dump() + "\n", 0};
  } catch (const Error& e) {
    const Json err = {{"error",
                       {{"code", error_name(e.code())},
                        {"exit_code", exit_code(e.code())},
                        {"message", e.what()}}}};
    return Report{err.dump() + "\n", exit_code(e.code())};
  } catch (const std::exception& e) {
    const Json err = {{"error", {{"code", "Internal"}, {"exit_code", 1}, {"message", e.what()}}}};
    return Report{err.dump() + "\n", 1};
  }
}

std::string exit_code_help() {
  std::string out = "Exit codes:\n  0  success\n  1  internal error\n";
  for (int c = 0; c <= static_cast<int>(ErrorCode::BoundTooLarge); ++c) {
    const auto code = static_cast<ErrorCode>(c);
    out += "  " + std::to_string(exit_code(code)) + "  " + std::string(error_name(code)) + "\n";
  }
  return out;
}

}  // namespace lensforge::cli
