#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "cli_invocations.hpp"
#include "doctest.h"
#include "majorkit/random.hpp"
#include "majorkit_cli/cli.hpp"

using namespace majorkit;
using Json = nlohmann::json;

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Json call_json(const std::vector<std::string>& args) {
  const Result r = call(args);
  REQUIRE(r.code == cli::kExitOk);
  return Json::parse(r.out);
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("majorize example") {
    const Json j = call_json({"majorize", "--x", "3,1", "--y", "2,2"});
    CHECK(j["x_majorizes_y"] == true);
    CHECK(j["y_majorizes_x"] == false);
  }

  TEST_CASE("apportion example") {
    const Json j = call_json({"apportion", "--votes", "0.7,0.2,0.1", "--seats", "5", "--rule", "jefferson"});
    CHECK(j["seats"] == Json::array({4, 1, 0}));
    const Json w = call_json({"apportion", "--votes", "0.5,0.3,0.2", "--seats", "10"});
    CHECK(w["seats"] == Json::array({5, 3, 2}));
  }

  TEST_CASE("graph example") {
    const Json j = call_json({"graph", "--probs", "0.5,0.5", "--exact"});
    CHECK(j["expected_components"].get<double>() == doctest::Approx(1.25));
  }

  TEST_CASE("module examples are reachable") {
    CHECK(call_json({"cover", "--lengths", "0.6,0.6", "--exact"})["exact"].get<double>() == doctest::Approx(0.2));
    CHECK(call_json({"pattern", "--probs", "0.5,0.5"})["expected_waiting"].get<double>() == doctest::Approx(3.0));
    CHECK(call_json({"catch", "--captures", "3"}).dump().find("2.3333333333333335") != std::string::npos);
    const Json e = call_json({"epidemic", "--alpha", "0.5,0.5", "--p", "0.9,0.5", "--lifestyle", "2,0"});
    CHECK(e["escape_probability"].get<double>() == doctest::Approx(0.53));
    const Json ph = call_json({"phase", "--erlang", "4", "--cv"});
    CHECK(ph["cv"].get<double>() == doctest::Approx(0.5));
  }

  TEST_CASE("every representative invocation succeeds or reports a violation") {
    for (const auto& args : cli_fixture::invocations()) {
      CAPTURE(args.front());
      const Result r = call(args);
      CHECK((r.code == cli::kExitOk || r.code == cli::kExitViolation));
      CHECK_FALSE(r.out.empty());
      CHECK(Json::accept(r.out));
    }
  }

  TEST_CASE("csv and table formats") {
    const Result csv = call({"majorize", "--x", "1,2", "--y", "3,0", "--format", "csv"});
    CHECK(csv.code == 0);
    CHECK(csv.out.rfind("x,y,x_majorizes_y,y_majorizes_x\n", 0) == 0);
    const Result table = call({"graph", "--probs", "0.5,0.5", "--format", "table"});
    CHECK(table.code == 0);
    CHECK(table.out.find("1.25") != std::string::npos);
  }

  TEST_CASE("exit codes") {
    CHECK(call({"bogus"}).code == cli::kExitInputError);
    CHECK(call({"majorize", "--x", "1,2", "--bogus"}).code == cli::kExitInputError);
    CHECK(call({}).code == cli::kExitInputError);
    const Result bad = call({"majorize", "--x", "1,a", "--y", "1,2"});
    CHECK(bad.code == cli::kExitInputError);
    CHECK(bad.err.find('\n') == bad.err.size() - 1);
    CHECK(call({"majorize", "--x", "1,2", "--y", "1,2,3"}).code == cli::kExitInputError);
    CHECK(call({"graph", "--probs", "0.5,0.6"}).code == cli::kExitInputError);
    CHECK(call({"schur-check", "--function", "min", "--sense", "convex", "--trials", "200"}).code ==
          cli::kExitViolation);
    CHECK(call({"majorize", "--help"}).code == cli::kExitOk);
  }

  TEST_CASE("seed default and environment override") {
    const auto args = std::vector<std::string>{"graph", "--probs", "0.2,0.8", "--mc", "--trials", "2000"};
    CHECK(call_json(args)["seed"] == kDefaultSeed);
    ::setenv(cli::kSeedEnvironment, "77", 1);
    const Json env = call_json(args);
    ::unsetenv(cli::kSeedEnvironment);
    CHECK(env["seed"] == 77);
    auto explicit_seed = args;
    explicit_seed.insert(explicit_seed.end(), {"--seed", "77"});
    CHECK(call(explicit_seed).out == call({"graph", "--probs", "0.2,0.8", "--mc", "--trials", "2000", "--seed", "77"}).out);
    CHECK(call_json(explicit_seed)["estimate"] == env["estimate"]);
  }

  TEST_CASE("vector files") {
    const std::string path = "cli_test_vector.csv";
    {
      std::ofstream f(path);
      f << "value\n3\n1\n";
    }
    const Json j = call_json({"majorize", "--x-file", path, "--y", "2,2"});
    CHECK(j["x_majorizes_y"] == true);
    CHECK(call({"majorize", "--x-file", path, "--x", "1,2", "--y", "2,2"}).code == cli::kExitInputError);
    std::remove(path.c_str());
  }

  TEST_CASE("reproducible output") {
    for (const auto& args : cli_fixture::invocations()) CHECK(call(args).out == call(args).out);
  }
}
