// Copyright 2026 The corrplan Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "corrplan/equilibrium.h"
#include "corrplan/histories.h"
#include "corrplan/io.h"
#include "corrplan/nash_etr.h"
#include "corrplan/oracle.h"
#include "corrplan/reductions.h"
#include "corrplan/simplex.h"
#include "corrplan/support_solver.h"
#include "json.hpp"

namespace {

using namespace corrplan;

constexpr int kOk = 0;
constexpr int kRejected = 1;
constexpr int kUsage = 2;

struct FileError : std::runtime_error {
  explicit FileError(const std::string& what) : std::runtime_error(what) {}
};

std::string Slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path);
  if (!in) throw FileError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<StrategyProfile> LoadSupport(const Game& game,
                                         const std::string& path) {
  // A support file is a plan document; probabilities are ignored.
  const CorrelationPlan plan = ParsePlan(game, Slurp(path));
  std::vector<StrategyProfile> support;
  for (const auto& [profile, prob] : plan.support()) {
    support.push_back(profile);
  }
  return support;
}

struct Options {
  std::string game_path;
  std::string plan_path;
  std::string support_path;
  std::string concept_name;
  std::string engine = "oracle";
  std::string threshold_text;
  std::string plan_out;
  bool maximize = false;
  bool json = false;
  bool pad = false;
  bool list = false;
  std::uint64_t cap = StrategyEnumerator::kDefaultCap;
  std::uint64_t oracle_cap = 100000;
  std::uint64_t budget = 10000;
};

int RunValidate(const Options& opt) {
  Game game = ParseGame(Slurp(opt.game_path));
  if (opt.json) {
    nlohmann::ordered_json doc;
    doc["ok"] = true;
    doc["players"] = game.num_players();
    doc["nodes"] = game.num_nodes();
    doc["leaves"] = game.leaves().size();
    doc["infosets"] = game.num_infosets();
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "ok: " << game.num_players() << " players, "
              << game.num_nodes() << " nodes, " << game.leaves().size()
              << " leaves, " << game.num_infosets() << " information sets\n";
  }
  return kOk;
}

int RunHistories(const Options& opt) {
  const Game game = ParseGame(Slurp(opt.game_path));
  const Concept concept_kind = ConceptFromName(opt.concept_name);
  const RelevantHistories histories = BuildRelevantHistories(game, concept_kind);
  if (opt.json) {
    nlohmann::ordered_json doc;
    doc["concept"] = ConceptName(concept_kind);
    doc["honest"] = histories.honest.size();
    doc["deviation"] = histories.deviation.size();
    doc["total"] = histories.all.size();
    doc["bound"] = histories.size_bound;
    if (opt.list) {
      nlohmann::ordered_json list = nlohmann::ordered_json::array();
      for (const auto& tuple : histories.all) {
        list.push_back(EncodeTuple(game, tuple));
      }
      doc["histories"] = std::move(list);
    }
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "honest: " << histories.honest.size() << "\n"
              << "deviation: " << histories.deviation.size() << "\n"
              << "total: " << histories.all.size() << " (bound "
              << histories.size_bound << ")\n";
    if (opt.list) {
      for (const auto& tuple : histories.all) {
        std::cout << EncodeTuple(game, tuple) << "\n";
      }
    }
  }
  return kOk;
}

int RunVerify(const Options& opt) {
  const Game game = ParseGame(Slurp(opt.game_path));
  const CorrelationPlan plan = ParsePlan(game, Slurp(opt.plan_path));
  const Concept concept_kind = ConceptFromName(opt.concept_name);
  VerifyOptions options;
  options.cap = opt.cap;
  const Verdict verdict = Verify(game, plan, concept_kind, options);
  if (opt.json) {
    std::cout << VerdictToJson(verdict);
  } else if (verdict.ok) {
    std::cout << "ok: the plan is a " << ConceptName(concept_kind) << "\n";
  } else {
    std::cout << "rejected: " << verdict.witness->event << " deviates to "
              << verdict.witness->deviation << " ("
              << FormatRational(verdict.witness->deviation_value) << " > "
              << FormatRational(verdict.witness->honest_value) << ")\n";
  }
  return verdict.ok ? kOk : kRejected;
}

int RunSolve(const Options& opt) {
  const Game game = ParseGame(Slurp(opt.game_path));
  const Concept concept_kind = ConceptFromName(opt.concept_name);
  const SystemMode mode =
      opt.maximize ? SystemMode::kMaximize : SystemMode::kThreshold;
  if (!opt.maximize && opt.threshold_text.empty()) {
    throw CLI::ValidationError("solve needs --threshold or --maximize");
  }
  const Rational threshold =
      opt.threshold_text.empty() ? Rational(0)
                                 : ParseRational(opt.threshold_text);

  auto write_plan = [&](const CorrelationPlan& plan) {
    if (opt.plan_out.empty()) return;
    std::ofstream out(opt.plan_out);
    out << SerializePlan(game, plan);
  };

  if (opt.engine == "oracle") {
    OracleOptions options;
    options.profile_cap = opt.oracle_cap;
    const OracleReport report =
        OracleSolve(game, concept_kind, mode, threshold, options);
    if (opt.json) {
      std::cout << OracleReportToJson(game, report);
    } else if (mode == SystemMode::kMaximize && report.feasible) {
      std::cout << "optimal " << ConceptName(concept_kind)
                << " objective: " << FormatRational(*report.optimal_value)
                << "\n";
    } else {
      std::cout << (report.feasible ? "feasible" : "infeasible") << "\n";
    }
    if (report.witness.has_value()) write_plan(*report.witness);
    return report.feasible ? kOk : kRejected;
  }
  if (opt.engine != "support") {
    throw CLI::ValidationError("unknown engine '" + opt.engine + "'");
  }
  if (!opt.support_path.empty()) {
    const auto support = LoadSupport(game, opt.support_path);
    const FixedSupportResult result =
        SolveWithSupport(game, concept_kind, support, mode, threshold);
    const bool feasible =
        result.outcome.status == LpOutcome::Status::kFeasible;
    if (opt.json) {
      std::cout << LpOutcomeToJson(result.outcome);
    } else {
      std::cout << (feasible ? "feasible" : "infeasible") << "\n";
    }
    if (result.plan.has_value()) write_plan(*result.plan);
    return feasible ? kOk : kRejected;
  }
  if (opt.maximize) {
    throw CLI::ValidationError(
        "support enumeration answers threshold queries; pass --threshold "
        "or a --support-file");
  }
  SupportSolveOptions options;
  options.budget = opt.budget;
  options.enumeration_cap = opt.cap;
  const SupportSolveResult result =
      SolveWithSupportEnumeration(game, concept_kind, threshold, options);
  if (opt.json) {
    nlohmann::ordered_json doc;
    doc["feasible"] = result.feasible;
    doc["lp_calls"] = result.lp_calls;
    doc["budget_exhausted"] = result.budget_exhausted;
    std::cout << doc.dump(2) << "\n";
  } else if (result.feasible) {
    std::cout << "feasible (" << result.lp_calls << " supports tried)\n";
  } else if (result.budget_exhausted) {
    std::cout << "budget exhausted after " << result.lp_calls
              << " supports; no feasible support found\n";
  } else {
    std::cout << "infeasible (all " << result.lp_calls
              << " candidate supports)\n";
  }
  if (result.plan.has_value()) write_plan(*result.plan);
  return result.feasible ? kOk : kRejected;
}

int RunLpExport(const Options& opt) {
  const Game game = ParseGame(Slurp(opt.game_path));
  const Concept concept_kind = ConceptFromName(opt.concept_name);
  const SystemMode mode =
      opt.maximize ? SystemMode::kMaximize : SystemMode::kThreshold;
  const Rational threshold =
      opt.threshold_text.empty() ? Rational(0)
                                 : ParseRational(opt.threshold_text);
  std::vector<StrategyProfile> support;
  if (!opt.support_path.empty()) {
    support = LoadSupport(game, opt.support_path);
  } else {
    const ProfileEnumerator profiles(game, opt.cap);
    for (std::uint64_t k = 0; k < profiles.count(); ++k) {
      support.push_back(profiles.at(k));
    }
  }
  const BuiltSystem built =
      BuildSystem(game, concept_kind, support, mode, threshold);
  std::cout << built.system.ExportText();
  return kOk;
}

int RunReduceQbf(const Options& opt) {
  const QbfFormula formula = ParseQbf(Slurp(opt.game_path), opt.pad);
  std::cout << SerializeGame(ReduceQbf(formula));
  return kOk;
}

int RunReduceSat3(const Options& opt) {
  const CnfFormula formula = ParseDimacs(Slurp(opt.game_path));
  std::cout << SerializeGame(ReduceSat3(formula));
  return kOk;
}

int RunNashEtr(const Options& opt) {
  const Game game = ParseGame(Slurp(opt.game_path));
  const Rational threshold = opt.threshold_text.empty()
                                 ? Rational(0)
                                 : ParseRational(opt.threshold_text);
  const EtrSystem system = EmitEtr(game, threshold);
  std::cout << system.text;
  return kOk;
}

int RunNashCheck(const Options& opt) {
  const Game game = ParseGame(Slurp(opt.game_path));
  const BehavioralProfile candidate =
      ParseBehavioral(game, Slurp(opt.plan_path));
  const Rational threshold = opt.threshold_text.empty()
                                 ? Rational(0)
                                 : ParseRational(opt.threshold_text);
  const Verdict verdict = CheckBehavioral(game, candidate, threshold);
  if (opt.json) {
    std::cout << VerdictToJson(verdict);
  } else if (verdict.ok) {
    std::cout << "ok: Nash equilibrium with objective above the threshold\n";
  } else {
    std::cout << "rejected: " << verdict.witness->event << " ("
              << FormatRational(verdict.witness->deviation_value) << " > "
              << FormatRational(verdict.witness->honest_value) << ")\n";
  }
  return verdict.ok ? kOk : kRejected;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Correlated and Nash equilibria workbench for extensive-form "
               "games over exact rationals"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* cmd, bool needs_game) {
    if (needs_game) {
      cmd->add_option("game", opt.game_path, "game JSON file, or - for stdin")
          ->required();
    }
    cmd->add_flag("--json", opt.json, "machine-readable JSON output");
  };

  CLI::App* validate = app.add_subcommand("validate", "check a game document");
  add_common(validate, true);

  CLI::App* histories =
      app.add_subcommand("histories", "relevant-history families");
  add_common(histories, true);
  histories->add_option("--concept", opt.concept_name)->required();
  histories->add_flag("--list", opt.list, "print every history tuple");

  CLI::App* verify = app.add_subcommand("verify", "verify a correlation plan");
  add_common(verify, true);
  verify->add_option("plan", opt.plan_path, "plan JSON file")->required();
  verify->add_option("--concept", opt.concept_name)->required();
  verify->add_option("--cap", opt.cap, "deviation enumeration cap");

  CLI::App* solve = app.add_subcommand("solve", "threshold / optimal value");
  solve->add_option("game", opt.game_path, "game JSON file, or - for stdin")
      ->default_val("-");
  solve->add_flag("--json", opt.json, "machine-readable JSON output");
  solve->add_option("--concept", opt.concept_name)->required();
  solve->add_option("--threshold", opt.threshold_text, "rational p/q");
  solve->add_flag("--maximize", opt.maximize, "maximize the objective");
  solve->add_option("--engine", opt.engine, "oracle | support");
  solve->add_option("--support-file", opt.support_path,
                    "plan JSON naming the candidate support");
  solve->add_option("--budget", opt.budget, "support-enumeration LP budget");
  solve->add_option("--cap", opt.oracle_cap, "profile cap for the oracle");
  solve->add_option("--plan-out", opt.plan_out, "write the witness plan here");

  CLI::App* lp_export = app.add_subcommand("lp-export", "emit the LP text");
  add_common(lp_export, true);
  lp_export->add_option("--concept", opt.concept_name)->required();
  lp_export->add_option("--threshold", opt.threshold_text, "rational p/q");
  lp_export->add_flag("--maximize", opt.maximize);
  lp_export->add_option("--support-file", opt.support_path,
                        "plan JSON naming the support (default: full Sigma)");
  lp_export->add_option("--cap", opt.cap, "profile cap for full Sigma");

  CLI::App* reduce_qbf =
      app.add_subcommand("reduce-qbf", "formula to hardness game");
  reduce_qbf
      ->add_option("formula", opt.game_path, "QBF text file, or - for stdin")
      ->required();
  reduce_qbf->add_flag("--pad", opt.pad,
                       "insert fresh existential variables to restore "
                       "prefix alternation");

  CLI::App* reduce_sat3 =
      app.add_subcommand("reduce-sat3", "DIMACS CNF to hardness game");
  reduce_sat3
      ->add_option("formula", opt.game_path, "DIMACS file, or - for stdin")
      ->required();

  CLI::App* nash_etr =
      app.add_subcommand("nash-etr", "emit the Nash threshold constraints");
  add_common(nash_etr, true);
  nash_etr->add_option("--threshold", opt.threshold_text, "rational p/q");

  CLI::App* nash_check =
      app.add_subcommand("nash-check", "check a behavioral candidate");
  add_common(nash_check, true);
  nash_check->add_option("candidate", opt.plan_path, "behavioral JSON file")
      ->required();
  nash_check->add_option("--threshold", opt.threshold_text, "rational p/q");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (validate->parsed()) return RunValidate(opt);
    if (histories->parsed()) return RunHistories(opt);
    if (verify->parsed()) return RunVerify(opt);
    if (solve->parsed()) return RunSolve(opt);
    if (lp_export->parsed()) return RunLpExport(opt);
    if (reduce_qbf->parsed()) return RunReduceQbf(opt);
    if (reduce_sat3->parsed()) return RunReduceSat3(opt);
    if (nash_etr->parsed()) return RunNashEtr(opt);
    if (nash_check->parsed()) return RunNashCheck(opt);
  } catch (const FileError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    if (validate->parsed()) {
      // An invalid document is the negative answer of validation.
      std::cerr << "rejected: " << e.what() << "\n";
      return kRejected;
    }
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ScaleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
