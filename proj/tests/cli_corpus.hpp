#pragma once

// Invocations of every subcommand with the exit code each must produce.
// "{fx}" expands to the fixture directory and "{tmp}" to a scratch
// directory that is the same for repeated runs.

#include <string>
#include <vector>

namespace plausival::test {

struct CliCase {
  std::string args;
  int exit_code;
  std::string out_file;  // relative to {tmp}; compared across runs when set
};

inline const std::vector<CliCase>& cli_corpus() {
  static const std::vector<CliCase> corpus = {
      {"model gen --atoms 3 --weights 1,2,3 --out {tmp}/gen.json", 0, "gen.json"},
      {"model gen --atoms 4 --seed 7 --out {tmp}/random.json", 0, "random.json"},
      {"model gen --atoms 3 --weights 1,2,3 --world a2 --out {tmp}/world.json", 0, "world.json"},
      {"model gen --atoms 0 --out {tmp}/none.json", 2, ""},
      {"model gen --atoms 13 --out {tmp}/big.json", 2, ""},
      {"model gen --atoms 3 --weights 1,2 --out {tmp}/short.json", 2, ""},
      {"model gen --atoms 2 --weights 1,0 --out {tmp}/zero.json", 2, ""},
      {"model gen --atoms 2 --weights 1,1 --world a9 --out {tmp}/w.json", 2, ""},
      {"model export --model {fx}/model_123.json --event a1 --given a1,a3 --out {tmp}/export.json", 0,
       "export.json"},
      {"model export --model {fx}/model_123.json --event a1 --given a2 --out {tmp}/x.json", 2, ""},
      {"check --model {fx}/model_123.json", 0, ""},
      {"check --model {fx}/model_123.json --axioms all --seed 3 --random-count 8", 0, ""},
      {"check --model {fx}/model_uniform_2.json --axioms A1_value,A8_rescale", 0, ""},
      {"check --model {fx}/model_123.json --mutate square-pv", 1, ""},
      {"check --model {fx}/model_123.json --mutate drop-weight --axioms A1_value", 1, ""},
      {"check --model {fx}/model_123.json --mutate sqare-pv", 2, ""},
      {"check --model {fx}/model_123.json --axioms A10_missing", 2, ""},
      {"check --model {fx}/no_such_model.json", 2, ""},
      {"check --model {fx}/model_zero_weight.json", 2, ""},
      {"check --model {fx}/model_malformed.json", 2, ""},
      {"verify --model {fx}/model_123.json", 0, ""},
      {"verify --model {fx}/model_123.json --rules product_rule_pl", 0, ""},
      {"verify --model {fx}/model_uniform_2.json --rules sum_rule,general_sum", 0, ""},
      {"verify --model {fx}/model_123.json --mutate clamp-pl", 1, ""},
      {"verify --model {fx}/model_123.json --rules product_rul", 2, ""},
      {"hunt --atoms 5 --seed 0 --max-trials 400 --out {tmp}/hunt5.json", 0, "hunt5.json"},
      {"hunt --atoms 2 --max-trials 10", 3, ""},
      {"hunt --atoms 4 --seed 1 --max-trials 3 --denominator-bound 6", 3, ""},
      {"hunt --atoms 13", 2, ""},
      {"hunt --atoms 4 --denominator-bound 0", 2, ""},
      {"retract --tables {fx}/retract_identity.json", 0, ""},
      {"retract --tables {fx}/retract_product_rule.json", 0, ""},
      {"retract --tables {fx}/retract_dependence.json", 1, ""},
      {"retract --tables {fx}/retract_malformed.json", 2, ""},
      {"retract --tables {fx}/retract_unknown_kind.json", 2, ""},
      {"retract --tables {fx}/model_123.json", 2, ""},
      {"", 2, ""},
      {"frobnicate", 2, ""},
      {"check --model {fx}/model_123.json --no-such-flag", 2, ""},
      {"--timestamp 2026-01-01T00:00:00Z verify --model {fx}/model_123.json --rules sum_rule", 0, ""},
  };
  return corpus;
}

inline std::string expand(std::string args, const std::string& fixtures, const std::string& tmp) {
  for (const auto& [key, value] : {std::pair<std::string, std::string>{"{fx}", fixtures},
                                   std::pair<std::string, std::string>{"{tmp}", tmp}}) {
    for (auto pos = args.find(key); pos != std::string::npos; pos = args.find(key)) {
      args.replace(pos, key.size(), value);
    }
  }
  return args;
}

}  // namespace plausival::test
