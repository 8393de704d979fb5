#include <cstdlib>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lensforge/cli.hpp"
#include "lensforge/error.hpp"

namespace {

using lensforge::cli::Command;

struct CommandSpec {
  const char* name;
  const char* description;
  std::vector<const char*> required;
  std::vector<const char*> optional;
};

const std::vector<CommandSpec>& command_specs() {
  static const std::vector<CommandSpec> specs = {
      {"classify", "Normalize (n, q) to a canonical lens space name", {"n", "q"}, {}},
      {"homeo", "Decide whether L(n,q) and L(n,q2) are homeomorphic", {"n", "q", "q2"}, {}},
      {"fill", "Dehn filling along m1 = n*l2 - q*m2", {"n", "q"}, {}},
      {"cover", "Covering matrix of the data (n, q, a, b)", {"n", "q", "a", "b"}, {}},
      {"equiv", "Covering equivalence of (n,q,a,b) and (n,q2,a2,b2)", {"n", "q", "a", "b"},
       {"q2", "a2", "b2"}},
      {"link-x", "Link of X_{n,q} = {z^n = x y^(n-q)} with its trace", {"n", "q"}, {}},
      {"basis", "Minimal generators of the invariant monomials of C_{n,q}", {"n", "q"}, {"bound"}},
      {"resolve", "Hirzebruch-Jung chain of n/q and its resolution graph", {"n", "q"}, {}},
      {"orbits", "Orbit census of G_n on phase classes", {"n", "q"}, {}},
      {"verify-chain", "Exact check of the normalization chain on sample points", {"n", "q"}, {}},
      {"census", "Table of all coprime (n, q) up to max-n", {"max-n"}, {}},
  };
  return specs;
}

int emit_parse_error(const std::string& message) {
  const auto code = lensforge::ErrorCode::ParseError;
  const nlohmann::ordered_json err = {{"error",
                                       {{"code", lensforge::error_name(code)},
                                        {"exit_code", lensforge::exit_code(code)},
                                        {"message", message}}}};
  std::cout << err.dump() << '\n';
  return lensforge::exit_code(code);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lensforge: lens spaces, Hopf-link covers and cyclic quotient singularities"};
  app.footer(lensforge::cli::exit_code_help() +
             "\nEnvironment:\n  LENSFORGE_COLOR=0|1  colored booleans in text output");
  app.require_subcommand(1);

  std::string format = "json";
  std::map<std::string, std::int64_t> values;
  std::map<std::string, CLI::Option*> options;
  std::map<CLI::App*, Command> commands;

  for (const auto& spec : command_specs()) {
    CLI::App* sub = app.add_subcommand(spec.name, spec.description);
    commands[sub] = *lensforge::cli::parse_command(spec.name);
    sub->add_option("--output-format", format, "json, dot or text")
        ->check(CLI::IsMember({"json", "dot", "text"}));
    auto add = [&](const char* flag, bool required) {
      const std::string key = flag;
      CLI::Option* opt = sub->add_option("--" + key, values[std::string(spec.name) + "/" + key]);
      if (required) opt->required();
      options[std::string(spec.name) + "/" + key] = opt;
    };
    for (const char* flag : spec.required) add(flag, true);
    for (const char* flag : spec.optional) add(flag, false);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return emit_parse_error(e.what());
  }

  lensforge::cli::JobRequest request;
  for (const auto& [sub, command] : commands) {
    if (!sub->parsed()) continue;
    request.command = command;
    const std::string prefix = sub->get_name() + "/";
    for (const auto& [key, opt] : options) {
      if (key.rfind(prefix, 0) == 0 && opt->count() > 0) {
        request.parameters[key.substr(prefix.size())] = values[key];
      }
    }
  }
  request.format = *lensforge::cli::parse_format(format);
  const char* color = std::getenv("LENSFORGE_COLOR");
  request.color = color != nullptr && std::string(color) == "1";

  const lensforge::cli::Report report = lensforge::cli::run(request);
  std::cout << report.output;
  return report.exit_code;
}
