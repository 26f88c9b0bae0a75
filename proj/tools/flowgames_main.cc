// Copyright 2026 The Flowgames Authors.
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

// Command line front end. Exit status: 0 when the checked property holds
// (equilibrium verified, solution found, dynamics converged), 1 when it does
// not, 2 on malformed input or an unsupported request.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "flowgames/api.h"
#include "flowgames/errors.h"
#include "flowgames/io.h"

namespace {

namespace fs = std::filesystem;
using flowgames::InputError;
using flowgames::Rational;
using flowgames::api::Json;
namespace api = flowgames::api;
namespace io = flowgames::io;

constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kError = 2;

// Reads a file and runs the parser matching its type so that schema errors
// name the file.
Json LoadGame(const std::string& path) {
  Json doc = io::ReadJsonFile(path);
  try {
    const std::string type = io::GameType(doc);
    if (type == "preference") {
      io::ParsePreferenceGame(doc);
    } else if (type == "bgp") {
      io::ParseBgp(doc);
    } else if (type == "bbc") {
      io::ParseBbc(doc);
    } else if (type == "matrix") {
      io::ParseMatrix(doc);
    } else if (type == "graphical") {
      io::ParseGraphical(doc);
    } else if (type == "circuit") {
      io::ParseCircuit(doc);
    } else {
      throw InputError("/type: unknown game type '" + type + "'");
    }
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
  return doc;
}

Json LoadProfile(const std::string& path) {
  Json doc = io::ReadJsonFile(path);
  try {
    io::ParseWeights(doc);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
  return doc;
}

std::optional<Rational> ParseOptionalRational(const std::string& text,
                                              const std::string& flag) {
  if (text.empty()) return std::nullopt;
  try {
    return Rational::Parse(text);
  } catch (const InputError& e) {
    throw InputError(flag + ": " + e.what());
  }
}

uint64_t ResolveSeed(const std::optional<uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("FLOWGAMES_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw InputError("FLOWGAMES_SEED must be a non-negative integer");
    }
  }
  return 0;
}

// Writes the report to `path` (or stdout when empty), as text on request.
void Emit(const Json& report, const std::string& path, bool text) {
  const std::string body = text ? api::RenderText(report) : io::Dump(report);
  if (path.empty()) {
    std::cout << body;
  } else {
    std::ofstream out(path);
    if (!out) throw InputError(path + ": cannot write file");
    out << body;
  }
}

struct Common {
  std::string game;
  std::string profile;
  std::string output;
  std::string report;
  bool text = false;
};

void AddReportFlags(CLI::App* cmd, Common* c) {
  cmd->add_option("--report", c->report,
                  "Write the JSON report here instead of stdout");
  cmd->add_flag("--text", c->text, "Render the report as plain text");
}

struct BatchCase {
  std::string name;
  fs::path game;
  fs::path profile;
};

// Pairs <name>.game.json with <name>.profile.json, sorted by name.
std::vector<BatchCase> CollectBatch(const std::string& dir) {
  if (!fs::is_directory(dir)) throw InputError(dir + ": not a directory");
  std::map<std::string, BatchCase> cases;
  const std::string game_suffix = ".game.json";
  const std::string profile_suffix = ".profile.json";
  for (const auto& entry : fs::directory_iterator(dir)) {
    const std::string file = entry.path().filename().string();
    auto ends = [&](const std::string& s) {
      return file.size() > s.size() &&
             file.compare(file.size() - s.size(), s.size(), s) == 0;
    };
    if (ends(game_suffix)) {
      const auto name = file.substr(0, file.size() - game_suffix.size());
      cases[name].name = name;
      cases[name].game = entry.path();
    } else if (ends(profile_suffix)) {
      const auto name = file.substr(0, file.size() - profile_suffix.size());
      cases[name].name = name;
      cases[name].profile = entry.path();
    }
  }
  std::vector<BatchCase> out;
  for (auto& [name, c] : cases) {
    if (c.game.empty() || c.profile.empty()) {
      throw InputError(dir + ": case '" + name + "' lacks its game or profile");
    }
    out.push_back(std::move(c));
  }
  return out;
}

int Run(int argc, char** argv) {
  CLI::App app{"Exact solvers, verifiers and reductions for flow games"};
  app.require_subcommand(1);

  Common c;
  std::string eps_text;
  std::string eps_l_text;
  std::string method;
  std::string to;
  std::string player;
  std::string circuit;
  std::string batch;
  std::vector<std::string> pins;
  int max_rounds = 1000;
  long max_lps = 20000;
  std::optional<uint64_t> seed;
  bool shuffle = false;

  auto* verify = app.add_subcommand("verify", "Check a profile for equilibrium");
  verify->add_option("--game", c.game, "Game file");
  verify->add_option("--profile", c.profile, "Profile file");
  verify->add_option("--eps", eps_text, "Approximation tolerance p/q");
  verify->add_option("--batch", batch,
                     "Directory of <name>.game.json / <name>.profile.json pairs");
  AddReportFlags(verify, &c);

  auto* solve = app.add_subcommand("solve", "Compute an equilibrium");
  solve->add_option("--game", c.game, "Game file")->required();
  solve->add_option("--method", method, "dynamics, cycle or enumerate")
      ->required()
      ->check(CLI::IsMember({"dynamics", "cycle", "enumerate"}));
  solve->add_option("--output", c.output, "Write the profile here");
  solve->add_option("--max-rounds", max_rounds, "Dynamics round limit");
  solve->add_option("--max-lps", max_lps, "Enumeration LP budget");
  solve->add_option("--seed", seed, "Seed (falls back to FLOWGAMES_SEED)");
  solve->add_flag("--shuffle", shuffle, "Seeded random player order");
  AddReportFlags(solve, &c);

  auto* dynamics = app.add_subcommand("dynamics", "Run best-response dynamics");
  dynamics->add_option("--game", c.game, "Game file")->required();
  dynamics->add_option("--profile", c.profile, "Initial profile");
  dynamics->add_option("--output", c.output, "Write the final profile here");
  dynamics->add_option("--max-rounds", max_rounds, "Round limit");
  dynamics->add_option("--seed", seed, "Seed (falls back to FLOWGAMES_SEED)");
  dynamics->add_flag("--shuffle", shuffle, "Seeded random player order");
  AddReportFlags(dynamics, &c);

  auto* best = app.add_subcommand("best-response", "Best response of one player");
  best->add_option("--game", c.game, "Game file")->required();
  best->add_option("--profile", c.profile, "Profile file")->required();
  best->add_option("--player", player, "Player or node id")->required();
  AddReportFlags(best, &c);

  auto* reduce = app.add_subcommand("reduce", "Translate a game to another class");
  reduce->add_option("--game", c.game, "Game file")->required();
  reduce->add_option("--to", to, "bgp, bbc, matrix, metric or 4player")
      ->required()
      ->check(CLI::IsMember({"bgp", "bbc", "matrix", "metric", "4player"}));
  reduce->add_option("--profile", c.profile, "Also map this source profile");
  reduce->add_option("--output", c.output, "Write the bundle here");

  auto* compile = app.add_subcommand("compile-circuit",
                                     "Compile a circuit into a preference game");
  compile->add_option("--circuit", circuit, "Circuit file")->required();
  compile->add_option("--eps-l", eps_l_text, "Override epsilon_l (p/q)");
  compile->add_option("--pin", pins, "Evaluate with input=value (repeatable)");
  compile->add_option("--output", c.output, "Write the game here");

  auto* report = app.add_subcommand("report", "Summarize a game");
  report->add_option("--game", c.game, "Game file")->required();
  report->add_option("--profile", c.profile, "Also verify this profile");
  AddReportFlags(report, &c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kError;
  }

  api::Options options;
  options.max_rounds = max_rounds;
  options.max_lps = max_lps;
  options.shuffle = shuffle;
  options.seed = ResolveSeed(seed);

  if (verify->parsed()) {
    options.eps = ParseOptionalRational(eps_text, "--eps");
    if (!batch.empty()) {
      if (!c.game.empty() || !c.profile.empty()) {
        throw InputError("--batch excludes --game and --profile");
      }
      Json merged;
      Json results = Json::array();
      bool all = true;
      for (const auto& bc : CollectBatch(batch)) {
        Json r = api::Verify(LoadGame(bc.game.string()),
                             LoadProfile(bc.profile.string()), options);
        all = all && r["equilibrium"].get<bool>();
        results.push_back({{"name", bc.name}, {"report", std::move(r)}});
      }
      merged["all_equilibria"] = all;
      merged["cases"] = std::move(results);
      Emit(merged, c.report, c.text);
      return all ? kHolds : kFails;
    }
    if (c.game.empty() || c.profile.empty()) {
      throw InputError("verify needs --game and --profile, or --batch");
    }
    Json r = api::Verify(LoadGame(c.game), LoadProfile(c.profile), options);
    Emit(r, c.report, c.text);
    return r["equilibrium"].get<bool>() ? kHolds : kFails;
  }

  if (solve->parsed() || dynamics->parsed()) {
    const Json game = LoadGame(c.game);
    Json r;
    if (solve->parsed()) {
      r = api::Solve(game, method, options);
    } else {
      std::optional<Json> init;
      if (!c.profile.empty()) init = LoadProfile(c.profile);
      r = api::Dynamics(game, init ? &*init : nullptr, options);
    }
    const bool found = r["found"].get<bool>();
    if (!c.output.empty() && r.contains("weights") &&
        (found || dynamics->parsed())) {
      io::WriteJsonFile(c.output, Json{{"weights", r["weights"]}});
    }
    Emit(r, c.report, c.text);
    if (dynamics->parsed()) return r["converged"].get<bool>() ? kHolds : kFails;
    return found ? kHolds : kFails;
  }

  if (best->parsed()) {
    Json r = api::BestResponse(LoadGame(c.game), LoadProfile(c.profile), player);
    Emit(r, c.report, c.text);
    return kHolds;
  }

  if (reduce->parsed()) {
    std::optional<Json> profile;
    if (!c.profile.empty()) profile = LoadProfile(c.profile);
    Json bundle = api::Reduce(LoadGame(c.game), to, profile ? &*profile : nullptr);
    Emit(bundle, c.output, false);
    return kHolds;
  }

  if (compile->parsed()) {
    Json doc = LoadGame(circuit);
    if (auto eps_l = ParseOptionalRational(eps_l_text, "--eps-l")) {
      doc["epsilon_l"] = eps_l->ToString();
    }
    std::map<std::string, Rational> values;
    for (const auto& pin : pins) {
      const auto eq = pin.find('=');
      if (eq == std::string::npos) {
        throw InputError("--pin expects input=value, got '" + pin + "'");
      }
      values[pin.substr(0, eq)] =
          *ParseOptionalRational(pin.substr(eq + 1), "--pin " + pin);
    }
    Json out = api::CompileCircuit(doc, pins.empty() ? nullptr : &values);
    Emit(out, c.output, false);
    return kHolds;
  }

  if (report->parsed()) {
    std::optional<Json> profile;
    if (!c.profile.empty()) profile = LoadProfile(c.profile);
    Json r = api::Report(LoadGame(c.game), profile ? &*profile : nullptr);
    Emit(r, c.report, c.text);
    return kHolds;
  }
  return kError;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return Run(argc, argv);
  } catch (const flowgames::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const flowgames::PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const flowgames::AnalysisError& e) {
    std::cerr << "analysis failure: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kError;
}
