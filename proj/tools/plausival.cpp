// plausival: batch front end. Reports go to stdout as JSON lines, each
// carrying the manifest of the run; a short summary goes to stderr.
//
// Exit codes: 0 all pass, 1 failure with witness, 2 usage or input error,
// 3 search exhausted.

#include "plausival/axiom_checker.hpp"
#include "plausival/cox_lab.hpp"
#include "plausival/json_io.hpp"
#include "plausival/pv_retraction.hpp"
#include "plausival/retraction.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#ifndef PLAUSIVAL_VERSION
#define PLAUSIVAL_VERSION "unknown"
#endif

namespace {

using namespace plausival;

constexpr int kPass = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;
constexpr int kExhausted = 3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Run {
  std::string command;
  std::vector<std::string> arguments;
  std::vector<std::string> inputs;
  std::uint64_t seed = 0;
  std::string timestamp;

  json manifest() const {
    return {{"command", command},
            {"arguments", arguments},
            {"inputs", inputs},
            {"seed", seed},
            {"timestamp", timestamp},
            {"tool_version", PLAUSIVAL_VERSION}};
  }

  void emit(json line) const {
    line["manifest"] = manifest();
    std::cout << line.dump() << '\n';
  }
};

// --timestamp, else SOURCE_DATE_EPOCH, else the epoch: never the wall clock,
// so reruns are byte-identical.
std::string resolve_timestamp(const std::string& flag) {
  if (!flag.empty()) return flag;
  std::time_t seconds = 0;
  if (const char* env = std::getenv("SOURCE_DATE_EPOCH")) {
    try {
      seconds = static_cast<std::time_t>(std::stoll(env));
    } catch (const std::exception&) {
      throw UsageError("SOURCE_DATE_EPOCH must be an integer");
    }
  }
  std::tm tm{};
  gmtime_r(&seconds, &tm);
  char buffer[32];
  std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buffer;
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError("'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_json(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << j.dump(2) << '\n';
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  for (std::string part; std::getline(in, part, sep);) {
    if (!part.empty()) parts.push_back(part);
  }
  return parts;
}

template <typename Id, std::size_t N>
std::string joined_names(const std::array<Id, N>& ids) {
  std::string out;
  for (const auto id : ids) out += (out.empty() ? "" : ", ") + to_string(id);
  return out;
}

Mutation mutation_of(const std::string& name) {
  if (const auto m = parse_mutation(name)) return *m;
  std::string valid = "none";
  for (const auto m : kAllMutations) valid += ", " + to_string(m);
  throw UsageError("unknown mutation '" + name + "'; valid: " + valid);
}

// Suites grow with 2^n indicators and their pairwise products.
constexpr std::size_t kMaxCheckAtoms = 6;

PVModel load_checkable_model(const std::string& path) {
  auto m = model_from_json(read_json(path));
  if (m.space().size() > kMaxCheckAtoms) {
    throw UsageError("axiom and rule checks are limited to " +
                     std::to_string(kMaxCheckAtoms) + " atoms");
  }
  return m;
}

int summarize(const std::string& what, const std::vector<AxiomReport>& reports) {
  std::size_t passed = 0;
  for (const auto& r : reports) {
    if (r.passed()) {
      ++passed;
    } else {
      std::cerr << what << ": " << r.subject << " " << to_string(r.verdict) << '\n';
    }
  }
  std::cerr << what << ": " << passed << "/" << reports.size() << " passed\n";
  return passed == reports.size() ? kPass : kFailure;
}

// model gen

struct GenOptions {
  std::size_t atoms = 0;
  std::string weights = "random";
  std::uint64_t denominator_bound = 8;
  std::string world;
  std::string out;
};

int model_gen(Run& run, const GenOptions& o) {
  if (o.atoms < 1 || o.atoms > kMaxEnumerableAtoms) {
    throw UsageError("--atoms must lie in [1, " +
                     std::to_string(kMaxEnumerableAtoms) + "]");
  }
  if (o.denominator_bound == 0) throw UsageError("--denominator-bound must be positive");
  const auto space = AtomSpace::numbered(o.atoms);
  WeightState::Values w(static_cast<Eigen::Index>(o.atoms));
  if (o.weights == "random") {
    // p/q with q <= bound and p <= 4q
    std::mt19937_64 rng(run.seed);
    for (Eigen::Index i = 0; i < w.size(); ++i) {
      const auto q = 1 + rng() % o.denominator_bound;
      const auto p = 1 + rng() % (4 * q);
      w(i) = Rational(static_cast<long>(p), static_cast<long>(q));
    }
  } else {
    const auto parts = split(o.weights, ',');
    if (parts.size() != o.atoms) {
      throw UsageError("--weights needs " + std::to_string(o.atoms) + " values");
    }
    for (std::size_t i = 0; i < parts.size(); ++i) {
      w(static_cast<Eigen::Index>(i)) = parse_rational(parts[i]);
    }
  }
  std::optional<World> world;
  if (!o.world.empty()) {
    const auto atom = space.index_of(o.world);
    if (!atom) throw UsageError("--world '" + o.world + "' is not an atom");
    world.emplace(space, *atom);
  }
  const PVModel model(WeightState(space, std::move(w)), std::move(world));
  write_json(o.out, to_json(model));
  run.emit({{"subject", "model"}, {"out", o.out}, {"model", to_json(model)}});
  std::cerr << "model: wrote " << o.out << '\n';
  return kPass;
}

// model export

struct ExportOptions {
  std::string model;
  std::string event;
  std::string given;
  std::string out;
};

int model_export(Run& run, const ExportOptions& o) {
  const auto m = model_from_json(read_json(o.model));
  const auto& space = m.space();
  if (space.size() > kMaxCheckAtoms) {
    throw UsageError("export is limited to " + std::to_string(kMaxCheckAtoms) +
                     " atoms");
  }
  const auto a = Proposition::from_labels(space, split(o.event, ','));
  const auto c = Proposition::from_labels(space, split(o.given, ','));
  if (is_zero(a & c)) throw UsageError("--event and --given must overlap");
  const auto suite = TestSuite::generate(space, run.seed, 4);
  const auto instance = product_rule_instance(m, suite.pair_unknowns, a, c);
  const json tables{
      {"retractions",
       {{"P1", to_json(instance.p1)},
        {"P2", to_json(instance.p2)},
        {"P3", to_json(instance.p3)}}},
      {"binary_maps", {{"m", to_json(instance.m)}}},
      {"checks",
       json::array({{{"kind", "fixed_element"},
                     {"p1", "P1"},
                     {"p2", "P2"},
                     {"p3", "P3"},
                     {"m", "m"},
                     {"e", instance.e}}})}};
  write_json(o.out, tables);
  run.emit({{"subject", "export"}, {"out", o.out}});
  std::cerr << "export: wrote " << o.out << '\n';
  return kPass;
}

// check / verify

struct SuiteOptions {
  std::string model;
  std::string names = "all";
  std::string mutate = "none";
  std::size_t random_count = 32;
};

int check(Run& run, const SuiteOptions& o) {
  std::vector<std::string> wanted;
  for (const auto& name : split(o.names, ',')) {
    if (name == "all") {
      wanted.clear();
      break;
    }
    if (name != kStructuralSubject && !parse_axiom_id(name)) {
      throw UsageError("unknown axiom '" + name + "'; valid: " +
                       joined_names(kAllAxioms) + ", " +
                       std::string(kStructuralSubject));
    }
    wanted.push_back(name);
  }
  const auto mutation = mutation_of(o.mutate);
  const auto m = load_checkable_model(o.model);
  const auto suite = TestSuite::generate(m.space(), run.seed, o.random_count);

  // numbering order, with the structural axiom after A2
  std::vector<std::string> order;
  for (const auto id : kAllAxioms) {
    order.push_back(to_string(id));
    if (id == AxiomId::A2_equality) order.emplace_back(kStructuralSubject);
  }
  std::vector<AxiomReport> reports;
  for (const auto& name : order) {
    if (!wanted.empty() &&
        std::find(wanted.begin(), wanted.end(), name) == wanted.end()) {
      continue;
    }
    auto report = name == kStructuralSubject
                      ? structural_report()
                      : check_axiom(m, *parse_axiom_id(name), suite, mutation);
    run.emit(to_json(report));
    reports.push_back(std::move(report));
  }
  return summarize("check", reports);
}

int verify(Run& run, const SuiteOptions& o) {
  std::vector<RuleId> wanted;
  for (const auto& name : split(o.names, ',')) {
    if (name == "all") {
      wanted.assign(kAllRules.begin(), kAllRules.end());
      break;
    }
    const auto id = parse_rule_id(name);
    if (!id) {
      throw UsageError("unknown rule '" + name + "'; valid: " + joined_names(kAllRules));
    }
    wanted.push_back(*id);
  }
  const auto mutation = mutation_of(o.mutate);
  const auto m = load_checkable_model(o.model);
  const auto suite = TestSuite::generate(m.space(), run.seed, o.random_count);
  std::vector<AxiomReport> reports;
  for (const auto id : kAllRules) {
    if (std::find(wanted.begin(), wanted.end(), id) == wanted.end()) continue;
    auto report = verify_rule(m, id, suite, mutation);
    run.emit(to_json(report));
    reports.push_back(std::move(report));
  }
  return summarize("verify", reports);
}

// hunt

struct HuntOptions {
  std::size_t atoms = 12;
  std::size_t max_trials = 1000;
  std::uint64_t denominator_bound = 24;
  std::string out;
};

int hunt(Run& run, const HuntOptions& o) {
  SearchConfig config;
  config.atom_count = o.atoms;
  config.max_trials = o.max_trials;
  config.denominator_bound = o.denominator_bound;
  config.seed = run.seed;
  try {
    const auto result = search_counterexample(config);
    if (const auto* w = std::get_if<CounterexampleWitness>(&result)) {
      json line{{"subject", "hunt"},
                {"verdict", "witness"},
                {"seed", w->seed},
                {"trial_index", w->trial_index},
                {"associativity", to_json(w->associativity)},
                {"homogeneity", to_json(w->homogeneity)}};
      if (!o.out.empty()) {
        auto file = to_json(*w);
        file["manifest"] = run.manifest();
        write_json(o.out, file);
        line["out"] = o.out;
      }
      run.emit(line);
      std::cerr << "hunt: non-associative F at trial " << w->trial_index << " ("
                << w->function.size() << " points)\n";
      return kPass;
    }
    const auto& tally = std::get<Exhausted>(result).tally;
    run.emit({{"subject", "hunt"},
              {"verdict", "exhausted"},
              {"tally",
               {{"trials", tally.trials},
                {"dependence_violations", tally.dependence_violations},
                {"associative", tally.associative}}}});
    std::cerr << "hunt: exhausted after " << tally.trials << " trials ("
              << tally.dependence_violations << " without F, " << tally.associative
              << " associative)\n";
    return kExhausted;
  } catch (const InvalidArgument& e) {
    throw UsageError(e.what());
  }
}

// retract

json dependence_witness(const Retraction& p, const FiniteMap& f,
                        const DependenceViolation& v) {
  return {{"first", v.first()},
          {"second", v.second()},
          {"P(first)", p(v.first())},
          {"P(second)", p(v.second())},
          {"f(first)", f(v.first())},
          {"f(second)", f(v.second())}};
}

template <typename T, typename Parse>
std::map<std::string, T> named(const json& tables, const char* key, Parse parse) {
  std::map<std::string, T> out;
  if (!tables.contains(key)) return out;
  const auto& group = tables.at(key);
  if (!group.is_object()) throw ParseError(std::string(key) + " must be an object");
  for (const auto& [name, j] : group.items()) out.emplace(name, parse(j));
  return out;
}

template <typename T>
const T& lookup(const std::map<std::string, T>& items, const json& check,
                const char* key) {
  if (!check.contains(key) || !check.at(key).is_string()) {
    throw ParseError(std::string("check needs a '") + key + "' name");
  }
  const auto name = check.at(key).get<std::string>();
  const auto it = items.find(name);
  if (it == items.end()) throw ParseError("no table named '" + name + "'");
  return it->second;
}

int retract(Run& run, const std::string& path) {
  const auto tables = read_json(path);
  const auto ps = named<Retraction>(tables, "retractions", retraction_from_json);
  const auto fs = named<FiniteMap>(tables, "maps", finite_map_from_json);
  const auto ms = named<BinaryMap>(tables, "binary_maps", binary_map_from_json);
  if (!tables.contains("checks") || !tables.at("checks").is_array()) {
    throw ParseError("tables need a 'checks' array");
  }
  std::vector<AxiomReport> reports;
  const auto record = [&](AxiomReport report, json extra = json::object()) {
    auto line = to_json(report);
    line.update(extra);
    run.emit(line);
    reports.push_back(std::move(report));
  };
  for (const auto& c : tables.at("checks")) {
    const auto kind = c.value("kind", std::string());
    try {
      if (kind == "factorize") {
        const auto& p = lookup(ps, c, "retraction");
        const auto& f = lookup(fs, c, "map");
        AxiomReport report;
        report.subject = "factorize";
        report.cases_checked = p.carrier().size();
        try {
          const auto h = factorize(p, f);
          record(report, {{"factor", to_json(h)}});
        } catch (const DependenceViolation& v) {
          report.verdict = Verdict::fail;
          report.note = "dependence violation";
          report.witness = dependence_witness(p, f, v);
          record(report);
        }
      } else if (kind == "commutation") {
        record(check_commutation(lookup(ps, c, "retraction"), lookup(fs, c, "map")));
      } else if (kind == "combination") {
        record(check_combination(lookup(ps, c, "p1"), lookup(ps, c, "p2"),
                                 lookup(ps, c, "p3"), lookup(ms, c, "m")));
      } else if (kind == "fixed_element") {
        if (!c.contains("e") || !c.at("e").is_string()) {
          throw ParseError("fixed_element check needs 'e'");
        }
        auto out = check_fixed_element(lookup(ps, c, "p1"), lookup(ps, c, "p2"),
                                       lookup(ps, c, "p3"), lookup(ms, c, "m"),
                                       c.at("e").get<std::string>());
        record(std::move(out.reduction));
        record(std::move(out.product));
      } else {
        throw ParseError("unknown check kind '" + kind +
                         "'; valid: factorize, commutation, combination, "
                         "fixed_element");
      }
    } catch (const DomainMismatch& e) {
      throw ParseError(e.what());
    }
  }
  return summarize("retract", reports);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks of plausible-value axioms and Cox-style universal functions"};
  app.require_subcommand(1);
  std::string timestamp_flag;
  app.add_option("--timestamp", timestamp_flag,
                 "Manifest timestamp (default: SOURCE_DATE_EPOCH or the epoch)");

  Run run;
  for (int i = 1; i < argc; ++i) run.arguments.emplace_back(argv[i]);

  auto* model = app.add_subcommand("model", "Build model files");
  model->require_subcommand(1);

  GenOptions gen;
  auto* gen_cmd = model->add_subcommand("gen", "Write a weight-state model");
  gen_cmd->add_option("--atoms", gen.atoms, "Number of atoms, 1 to 12")->required();
  gen_cmd->add_option("--weights", gen.weights,
                      "Comma-separated positive rationals, or 'random'");
  gen_cmd->add_option("--seed", run.seed, "Seed for random weights");
  gen_cmd->add_option("--denominator-bound", gen.denominator_bound,
                      "Largest denominator of random weights");
  gen_cmd->add_option("--world", gen.world, "Label of the actual atom");
  gen_cmd->add_option("--out", gen.out, "Model file")->required();

  ExportOptions exp;
  auto* export_cmd = model->add_subcommand(
      "export", "Write the product-rule retraction tables of a model");
  export_cmd->add_option("--model", exp.model, "Model file")->required();
  export_cmd->add_option("--event", exp.event, "Comma-separated atoms of A")->required();
  export_cmd->add_option("--given", exp.given, "Comma-separated atoms of C")->required();
  export_cmd->add_option("--seed", run.seed, "Seed for the random unknowns");
  export_cmd->add_option("--out", exp.out, "Tables file")->required();

  SuiteOptions check_opts;
  auto* check_cmd = app.add_subcommand("check", "Check the axioms on a model");
  check_cmd->add_option("--model", check_opts.model, "Model file")->required();
  check_cmd->add_option("--axioms", check_opts.names, "Comma-separated ids or 'all'");
  check_cmd->add_option("--mutate", check_opts.mutate,
                        "none, square-pv, drop-weight or clamp-pl");
  check_cmd->add_option("--seed", run.seed, "Seed for the random unknowns");
  check_cmd->add_option("--random-count", check_opts.random_count,
                        "Number of random unknowns");

  SuiteOptions verify_opts;
  auto* verify_cmd = app.add_subcommand("verify", "Verify the derived rules on a model");
  verify_cmd->add_option("--model", verify_opts.model, "Model file")->required();
  verify_cmd->add_option("--rules", verify_opts.names, "Comma-separated ids or 'all'");
  verify_cmd->add_option("--mutate", verify_opts.mutate,
                         "none, square-pv, drop-weight or clamp-pl");
  verify_cmd->add_option("--seed", run.seed, "Seed for the random unknowns");
  verify_cmd->add_option("--random-count", verify_opts.random_count,
                         "Number of random unknowns");

  HuntOptions hunt_opts;
  auto* hunt_cmd = app.add_subcommand("hunt", "Search glued tables for a non-associative F");
  hunt_cmd->add_option("--atoms", hunt_opts.atoms, "Number of atoms, 2 to 12");
  hunt_cmd->add_option("--seed", run.seed, "Search seed");
  hunt_cmd->add_option("--max-trials", hunt_opts.max_trials, "Trial budget");
  hunt_cmd->add_option("--denominator-bound", hunt_opts.denominator_bound,
                       "Largest denominator of weight perturbations");
  hunt_cmd->add_option("--out", hunt_opts.out, "Witness file");

  std::string tables_path;
  auto* retract_cmd = app.add_subcommand("retract", "Run retraction checks from tables");
  retract_cmd->add_option("--tables", tables_path, "Tables file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    run.timestamp = resolve_timestamp(timestamp_flag);
    if (gen_cmd->parsed()) {
      run.command = "model gen";
      run.inputs = {};
      return model_gen(run, gen);
    }
    if (export_cmd->parsed()) {
      run.command = "model export";
      run.inputs = {exp.model};
      return model_export(run, exp);
    }
    if (check_cmd->parsed()) {
      run.command = "check";
      run.inputs = {check_opts.model};
      return check(run, check_opts);
    }
    if (verify_cmd->parsed()) {
      run.command = "verify";
      run.inputs = {verify_opts.model};
      return verify(run, verify_opts);
    }
    if (hunt_cmd->parsed()) {
      run.command = "hunt";
      return hunt(run, hunt_opts);
    }
    run.command = "retract";
    run.inputs = {tables_path};
    return retract(run, tables_path);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const plausival::Error& e) {
    // malformed or out-of-range input reaching the library
    std::cerr << "error: " << e.what() << '\n';
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return kUsage;
}
