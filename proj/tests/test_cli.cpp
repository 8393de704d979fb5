#include "doctest.h"

#include <set>

#include "json.hpp"
#include "lensforge/cli.hpp"
#include "lensforge/error.hpp"

using namespace lensforge;
using lensforge::cli::Command;
using lensforge::cli::JobRequest;
using lensforge::cli::OutputFormat;

namespace {

JobRequest request(Command command, std::map<std::string, std::int64_t> params,
                   OutputFormat format = OutputFormat::Json) {
  JobRequest r;
  r.command = command;
  r.parameters = std::move(params);
  r.format = format;
  return r;
}

nlohmann::json run_json(Command command, std::map<std::string, std::int64_t> params) {
  const auto report = cli::run(request(command, std::move(params)));
  REQUIRE(report.exit_code == 0);
  return nlohmann::json::parse(report.output);
}

}  // namespace

TEST_CASE("command and format names round trip") {
  for (const char* name : {"classify", "homeo", "fill", "cover", "equiv", "link-x", "basis", "resolve",
                           "orbits", "verify-chain", "census"}) {
    const auto command = cli::parse_command(name);
    REQUIRE(command.has_value());
    CHECK(cli::command_name(*command) == name);
  }
  CHECK_FALSE(cli::parse_command("bogus").has_value());
  CHECK(cli::parse_format("dot") == OutputFormat::Dot);
  CHECK_FALSE(cli::parse_format("yaml").has_value());
}

TEST_CASE("golden outputs") {
  CHECK(cli::run(request(Command::Classify, {{"n", 5}, {"q", 7}})).output ==
        "{\"command\":\"classify\",\"inputs\":{\"n\":5,\"q\":7},\"result\":{\"n\":5,\"q\":2}}\n");
  CHECK(cli::run(request(Command::Homeo, {{"n", 7}, {"q", 2}, {"q2", 4}})).output ==
        "{\"command\":\"homeo\",\"inputs\":{\"n\":7,\"q\":2,\"q2\":4},\"result\":true}\n");
  CHECK(cli::run(request(Command::Resolve, {{"n", 5}, {"q", 2}}, OutputFormat::Dot)).output ==
        "graph { v0 [label=\"-3\"]; v1 [label=\"-2\"]; v0 -- v1; }\n");
  CHECK(cli::run(request(Command::Basis, {{"n", 3}, {"q", 2}})).output ==
        "{\"command\":\"basis\",\"inputs\":{\"n\":3,\"q\":2,\"bound\":6},"
        "\"result\":{\"n\":3,\"q\":2,\"generators\":[[0,3],[1,1],[3,0]]}}\n");
  CHECK(cli::run(request(Command::LinkX, {{"n", 5}, {"q", 2}})).output ==
        "{\"command\":\"link-x\",\"inputs\":{\"n\":5,\"q\":2},"
        "\"result\":{\"lens\":{\"n\":5,\"q\":2},\"cover\":{\"n\":5,\"q\":2,\"a\":1,\"b\":1},\"normal\":false},"
        "\"trace\":{\"m2_cap_m1\":5,\"m1_cap_l2\":3,\"alpha\":5,\"beta\":3,"
        "\"reparam\":{\"m1\":{\"m2\":3,\"l2\":5},\"l2_prime\":{\"m2\":1,\"l2\":1},"
        "\"m1_in_l2_prime\":{\"m2\":-2,\"l2\":5}},\"result\":{\"n\":5,\"q\":2}}}\n");
}

TEST_CASE("orientation reversal is flagged") {
  const auto out = run_json(Command::Classify, {{"n", -5}, {"q", 2}});
  CHECK(out["result"]["n"] == 5);
  CHECK(out["orientation_reversed"] == true);
  CHECK_FALSE(run_json(Command::Classify, {{"n", 5}, {"q", 2}}).contains("orientation_reversed"));
}

TEST_CASE("fill, cover, equiv, orbits, verify-chain") {
  CHECK(run_json(Command::Fill, {{"n", 1}, {"q", 0}})["result"] == nlohmann::json{{"n", 1}, {"q", 0}});
  CHECK(run_json(Command::Fill, {{"n", 0}, {"q", -1}})["result"] == nlohmann::json{{"n", 0}, {"q", 1}});

  const auto cover = run_json(Command::Cover, {{"n", 5}, {"q", 2}, {"a", 3}, {"b", 2}});
  CHECK(cover["result"]["matrix"] == nlohmann::json::parse("[[15,6],[0,2]]"));
  CHECK(cover["result"]["generic_degree"] == 30);
  CHECK(run_json(Command::Cover, {{"n", 1}, {"q", 0}, {"a", 2}, {"b", 3}})["result"]["swapped"].is_null());

  CHECK(run_json(Command::Equiv, {{"n", 5}, {"q", 2}, {"a", 1}, {"b", 1}, {"q2", 3}})["result"] == true);
  CHECK(run_json(Command::Equiv, {{"n", 5}, {"q", 2}, {"a", 1}, {"b", 1}, {"a2", 2}})["result"] == false);

  const auto orbits = run_json(Command::Orbits, {{"n", 2}, {"q", 1}});
  CHECK(orbits["result"]["census"] == nlohmann::json{{"2", 2}});
  CHECK(orbits["result"]["free"] == true);

  const auto chain = run_json(Command::VerifyChain, {{"n", 7}, {"q", 3}});
  CHECK(chain["result"]["points"] == 100);
  CHECK(chain["result"]["chain_identity"] == true);
  CHECK(chain["result"]["nu_orbit_invariance"] == true);
}

TEST_CASE("census rows") {
  const auto rows = run_json(Command::Census, {{"max-n", 12}})["result"]["rows"];
  std::int64_t prev_n = 0, prev_q = 0;
  for (const auto& row : rows) {
    const std::int64_t n = row["n"], q = row["q"], dual = row["q_dual"];
    CHECK((q * dual) % n == 1 % n);
    CHECK((n > prev_n || (n == prev_n && q > prev_q)));
    prev_n = n;
    prev_q = q;
    if (n == 3 && q == 2) {
      CHECK(dual == 2);
      CHECK(row["basis_size"] == 3);
      CHECK(row["chain"] == nlohmann::json::array({2, 2}));
      CHECK(row["normal"] == true);
    }
  }
  const auto two = run_json(Command::Census, {{"max-n", 2}})["result"]["rows"];
  REQUIRE(two.size() == 1);
  CHECK(two[0]["n"] == 2);
  CHECK(two[0]["q"] == 1);
}

TEST_CASE("identical requests give byte-identical output") {
  for (int i = 0; i < 3; ++i) {
    CHECK(cli::run(request(Command::Census, {{"max-n", 10}})).output ==
          cli::run(request(Command::Census, {{"max-n", 10}})).output);
    CHECK(cli::run(request(Command::VerifyChain, {{"n", 9}, {"q", 4}})).output ==
          cli::run(request(Command::VerifyChain, {{"n", 9}, {"q", 4}})).output);
  }
}

TEST_CASE("library errors become error objects with their exit codes") {
  struct Case {
    JobRequest req;
    ErrorCode code;
  };
  const std::vector<Case> cases = {
      {request(Command::Classify, {{"n", 5}}), ErrorCode::ParseError},
      {request(Command::Classify, {{"n", 5}, {"q", 1}}, OutputFormat::Dot), ErrorCode::ParseError},
      {request(Command::Classify, {{"n", 0}, {"q", 0}}), ErrorCode::InvalidInput},
      {request(Command::Classify, {{"n", 6}, {"q", 4}}), ErrorCode::NonManifoldInput},
      {request(Command::Fill, {{"n", 4}, {"q", 2}}), ErrorCode::NonPrimitiveCurve},
      {request(Command::LinkX, {{"n", 9}, {"q", 3}}), ErrorCode::NonManifoldInput},
      {request(Command::Basis, {{"n", 5}, {"q", 2}, {"bound", 9}}), ErrorCode::BoundTooSmall},
      {request(Command::Census, {{"max-n", 31}}), ErrorCode::BoundTooLarge},
      {request(Command::Census, {{"max-n", 1}}), ErrorCode::InvalidInput},
  };
  for (const auto& c : cases) {
    const auto report = cli::run(c.req);
    CHECK(report.exit_code == exit_code(c.code));
    const auto doc = nlohmann::json::parse(report.output);
    CHECK(doc["error"]["code"] == std::string(error_name(c.code)));
    CHECK(doc["error"]["exit_code"] == exit_code(c.code));
  }
}

TEST_CASE("exit codes are distinct and documented") {
  std::set<int> codes;
  const std::string help = cli::exit_code_help();
  for (int c = 0; c <= static_cast<int>(ErrorCode::BoundTooLarge); ++c) {
    const auto code = static_cast<ErrorCode>(c);
    CHECK(exit_code(code) > 1);
    CHECK(codes.insert(exit_code(code)).second);
    CHECK(help.find(std::string(error_name(code))) != std::string::npos);
  }
}

TEST_CASE("text output and color") {
  auto r = request(Command::Homeo, {{"n", 7}, {"q", 2}, {"q2", 3}}, OutputFormat::Text);
  CHECK(cli::run(r).output.find("result: false\n") != std::string::npos);
  r.color = true;
  CHECK(cli::run(r).output.find("result: \x1b[31mfalse\x1b[0m") != std::string::npos);
}
