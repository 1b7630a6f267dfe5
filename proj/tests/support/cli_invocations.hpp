#pragma once
// One representative invocation per subcommand, shared by the CLI tests and
// the reproducibility check.
#include <string>
#include <vector>

namespace cli_fixture {

using Args = std::vector<std::string>;

inline const std::vector<Args>& invocations() {
  static const std::vector<Args> all{
      {"majorize", "--x", "3,1", "--y", "2,2"},
      {"majorize", "--x", "4,1,0", "--y", "3,1,1", "--witness"},
      {"majorize", "--x", "0.5,0.3,0.2", "--y", "0.4,0.4,0.2", "--s", "0.3,0.3,0.4"},
      {"schur-check", "--function", "sum-squares", "--n", "5", "--trials", "300", "--seed", "3"},
      {"schur-check", "--function", "entropy", "--sense", "concave", "--constraint", "probability", "--trials",
       "200"},
      {"lorenz", "--x", "1,2,3,4", "--y", "2,2,3,3"},
      {"cover", "--lengths", "0.6,0.6", "--exact"},
      {"cover", "--lengths", "0.5,0.4,0.6", "--trials", "20000", "--seed", "11"},
      {"cover", "--schur", "5", "--n", "3", "--total", "1.5", "--trials", "5000"},
      {"pattern", "--probs", "0.5,0.5", "--exact", "--tail", "2,3,4"},
      {"pattern", "--probs", "0.2,0.3,0.5", "--mc", "--trials", "20000"},
      {"paired", "--matrix", "0.5,0.6,0.7;0.4,0.5,0.7;0.3,0.3,0.5", "--falsify", "500"},
      {"phase", "--erlang", "3", "--rate", "2", "--moments", "--cv"},
      {"phase", "--erlang", "2", "--sample", "1000", "--lorenz-vs-erlang", "5000"},
      {"catch", "--captures", "5"},
      {"catch", "--species-probs", "0.5,0.3,0.2", "--captures", "6", "--trials", "20000"},
      {"catch", "--captures", "8", "--bias-pairs", "3", "--species", "3", "--trials", "5000"},
      {"epidemic", "--alpha", "0.5,0.5", "--p", "0.9,0.5", "--lifestyle", "2,0"},
      {"epidemic", "--schur", "5,3,4", "--seed", "2"},
      {"apportion", "--votes", "0.7,0.2,0.1", "--seats", "5", "--rule", "jefferson", "--trace"},
      {"apportion", "--votes", "0.5,0.3,0.2", "--seats", "10", "--chain-check"},
      {"graph", "--probs", "0.5,0.5", "--exact"},
      {"graph", "--probs", "0.2,0.3,0.5", "--mc", "--trials", "30000"},
      {"graph", "--schur", "4", "--pairs", "30"},
      {"summax", "--rho", "0", "--trials", "30000"},
      {"summax", "--half-normal", "3", "--trials", "30000", "--grid", "1,2,3"},
      {"summax", "--probe", "--resolution", "20"},
  };
  return all;
}

}  // namespace cli_fixture
