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

#include "flowgames/api.h"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>

#include "flowgames/errors.h"

namespace flowgames::api {
namespace {

using reductions::NamedSolution;

std::vector<int> PlayerOrder(int n, const Options& options) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  if (options.shuffle) {
    std::mt19937_64 rng(options.seed);
    std::shuffle(order.begin(), order.end(), rng);
  }
  return order;
}

Json RowJson(const std::vector<std::string>& labels,
             const std::vector<Rational>& row) {
  Json out = Json::object();
  for (size_t k = 0; k < row.size(); ++k) {
    if (!row[k].is_zero()) out[labels[k]] = io::ToJson(row[k]);
  }
  return out;
}

std::vector<std::string> PathLabels(const bgp::BgpInstance& inst, int v) {
  std::vector<std::string> labels;
  for (int p = 0; p < inst.num_paths(v); ++p) labels.push_back(std::to_string(p));
  return labels;
}

// ---------------------------------------------------------------------------
// Verification

Json VerifyPreference(const pref::PreferenceGame& game, const pref::Profile& w,
                      const Options& options) {
  Json r;
  r["type"] = "preference";
  const auto feas = pref::CheckFeasible(game, w);
  r["feasible"] = feas.ok;
  Json witnesses = Json::array();
  if (options.eps) {
    std::vector<int> all(game.num_players());
    std::iota(all.begin(), all.end(), 0);
    const auto rep = pref::IsEpsEquilibrium(game, w, *options.eps, &all);
    r["eps"] = io::ToJson(*options.eps);
    r["equilibrium"] = rep.ok;
    for (int i = 0; i < game.num_players(); ++i) {
      std::vector<int> one = {i};
      auto each = pref::IsEpsEquilibrium(game, w, *options.eps, &one);
      if (!each.ok) {
        Json wit;
        wit["player"] = game.name(i);
        wit["condition"] = std::string(1, each.condition);
        if (each.other >= 0) wit["other"] = game.name(each.other);
        witnesses.push_back(std::move(wit));
      }
    }
  } else {
    const auto rep = pref::IsEquilibrium(game, w);
    r["equilibrium"] = rep.ok;
    for (int i = 0; i < game.num_players(); ++i) {
      if (!pref::IsBestResponse(game, w, i)) {
        Json wit;
        wit["player"] = game.name(i);
        wit["best_response"] = RowJson(game.names(), pref::BestResponse(game, w, i));
        witnesses.push_back(std::move(wit));
      }
    }
  }
  Json violations = Json::array();
  for (const auto& v : feas.violations) {
    static const char* kKinds[] = {"negative", "sum", "capacity"};
    violations.push_back({{"kind", kKinds[static_cast<int>(v.kind)]},
                          {"player", game.name(v.player)},
                          {"other", game.name(v.other)},
                          {"excess", io::ToJson(v.excess)}});
  }
  if (!violations.empty()) r["violations"] = std::move(violations);
  r["witnesses"] = std::move(witnesses);
  return r;
}

Json VerifyBgp(const bgp::BgpInstance& inst, const bgp::Assignment& w) {
  Json r;
  r["type"] = "bgp";
  const auto rep = bgp::CheckStable(inst, w);
  r["equilibrium"] = rep.stable;
  r["feasible"] = rep.feasible;
  if (!rep.detail.empty()) r["detail"] = rep.detail;
  Json witnesses = Json::array();
  if (rep.feasible) {
    for (int v = 0; v < inst.num_nodes(); ++v) {
      if (v == inst.dest() || bgp::IsLexMaximal(inst, w, v)) continue;
      Json wit;
      wit["player"] = inst.name(v);
      wit["best_response"] =
          RowJson(PathLabels(inst, v), bgp::LexMaxBestResponse(inst, w, v));
      witnesses.push_back(std::move(wit));
    }
  } else if (rep.witness_node >= 0) {
    Json wit;
    wit["player"] = inst.name(rep.witness_node);
    if (rep.witness_path >= 0) {
      wit["path"] = inst.PathString(inst.paths(rep.witness_node)[rep.witness_path]);
    }
    witnesses.push_back(std::move(wit));
  }
  r["witnesses"] = std::move(witnesses);
  return r;
}

Json VerifyBbc(const bbc::BbcInstance& inst, const bbc::Profile& w) {
  Json r;
  r["type"] = "bbc";
  const auto feas = bbc::CheckFeasible(inst, w);
  r["feasible"] = feas.ok;
  Json witnesses = Json::array();
  if (!feas.ok) {
    r["equilibrium"] = false;
    r["detail"] = feas.detail;
  } else {
    Json utilities = Json::object();
    for (int u = 0; u < inst.num_nodes(); ++u) {
      if (u == inst.dest()) continue;
      const auto cur = bbc::Utility(inst, w, u);
      const auto best = bbc::BestResponse(inst, w, u);
      utilities[inst.name(u)] = io::ToJson(cur.utility);
      if (best.utility > cur.utility) {
        Json wit;
        wit["player"] = inst.name(u);
        wit["utility"] = io::ToJson(cur.utility);
        wit["best"] = io::ToJson(best.utility);
        wit["best_response"] = RowJson(inst.names(), best.weights);
        witnesses.push_back(std::move(wit));
      }
    }
    r["equilibrium"] = witnesses.empty();
    r["utilities"] = std::move(utilities);
  }
  r["witnesses"] = std::move(witnesses);
  return r;
}

Json VerifyMatrix(const personalized::MatrixGame& game,
                  const personalized::MixProfile& p) {
  Json r;
  r["type"] = "matrix";
  const auto rep = personalized::IsPersonalizedEquilibrium(game, p);
  r["equilibrium"] = rep.ok;
  r["feasible"] = true;
  Json payoffs = Json::object();
  Json witnesses = Json::array();
  for (int i = 0; i < game.num_players(); ++i) {
    payoffs[game.player(i)] = {{"payoff", io::ToJson(rep.payoff[i])},
                               {"best", io::ToJson(rep.best[i])}};
    if (rep.payoff[i] < rep.best[i]) {
      witnesses.push_back({{"player", game.player(i)},
                           {"payoff", io::ToJson(rep.payoff[i])},
                           {"best", io::ToJson(rep.best[i])}});
    }
  }
  r["payoffs"] = std::move(payoffs);
  r["witnesses"] = std::move(witnesses);
  return r;
}

[[noreturn]] void Unsupported(const std::string& what, const std::string& type) {
  throw InputError(what + " is not supported for games of type '" + type + "'");
}

// ---------------------------------------------------------------------------
// Dynamics

Json PreferenceDynamics(const pref::PreferenceGame& game, pref::Profile init,
                        const Options& options) {
  const auto order = PlayerOrder(game.num_players(), options);
  auto run = pref::BestResponseDynamics(game, init, order, options.max_rounds);
  Json r;
  r["rounds"] = run.rounds;
  r["converged"] = run.converged;
  r["found"] = run.converged && pref::IsEquilibrium(game, run.profile).ok;
  r["weights"] = io::WeightsJson(reductions::ToNamed(game, run.profile))["weights"];
  return r;
}

Json BgpDynamics(const bgp::BgpInstance& inst, bgp::Assignment init,
                 const Options& options) {
  auto run = bgp::BestResponseDynamics(inst, init, options.max_rounds);
  Json r;
  r["rounds"] = run.rounds;
  r["converged"] = run.converged;
  r["found"] = run.converged && bgp::CheckStable(inst, run.assignment).stable;
  r["weights"] =
      io::WeightsJson(reductions::ToNamed(inst, run.assignment))["weights"];
  return r;
}

// Round-robin exact best responses; a node switches only when it strictly
// gains, so a round without switches is an equilibrium.
Json BbcDynamics(const bbc::BbcInstance& inst, bbc::Profile w,
                 const Options& options) {
  if (options.max_rounds < 1) throw InputError("max_rounds must be at least 1");
  const auto order = PlayerOrder(inst.num_nodes(), options);
  int rounds = 0;
  bool converged = false;
  while (rounds < options.max_rounds && !converged) {
    ++rounds;
    converged = true;
    for (int u : order) {
      if (u == inst.dest()) continue;
      const auto cur = bbc::Utility(inst, w, u);
      auto best = bbc::BestResponse(inst, w, u);
      if (best.utility > cur.utility) {
        w[u] = std::move(best.weights);
        converged = false;
      }
    }
  }
  Json r;
  r["rounds"] = rounds;
  r["converged"] = converged;
  r["found"] = converged && bbc::IsEquilibrium(inst, w).ok;
  r["weights"] = io::WeightsJson(reductions::ToNamed(inst, w))["weights"];
  return r;
}

NamedSolution ProfileSolution(const Json& profile) {
  return io::ParseWeights(profile);
}

}  // namespace

Json Verify(const Json& game, const Json& profile, const Options& options) {
  const std::string type = io::GameType(game);
  const auto named = ProfileSolution(profile);
  if (options.eps && type != "preference") {
    Unsupported("approximate verification", type);
  }
  if (type == "preference") {
    const auto g = io::ParsePreferenceGame(game);
    return VerifyPreference(g, reductions::PrefProfileFromNamed(g, named),
                            options);
  }
  if (type == "bgp") {
    const auto inst = io::ParseBgp(game);
    return VerifyBgp(inst, reductions::BgpAssignmentFromNamed(inst, named));
  }
  if (type == "bbc") {
    const auto inst = io::ParseBbc(game);
    return VerifyBbc(inst, reductions::BbcProfileFromNamed(inst, named));
  }
  if (type == "matrix") {
    const auto g = io::ParseMatrix(game);
    return VerifyMatrix(g, reductions::MixProfileFromNamed(g, named));
  }
  Unsupported("verify", type);
}

Json Dynamics(const Json& game, const Json* init, const Options& options) {
  const std::string type = io::GameType(game);
  Json r;
  r["type"] = type;
  r["method"] = "dynamics";
  r["seed"] = options.seed;
  r["shuffle"] = options.shuffle;
  Json body;
  if (type == "preference") {
    const auto g = io::ParsePreferenceGame(game);
    body = PreferenceDynamics(
        g,
        init ? reductions::PrefProfileFromNamed(g, ProfileSolution(*init))
             : pref::SelfProfile(g.num_players()),
        options);
  } else if (type == "bgp") {
    const auto inst = io::ParseBgp(game);
    body = BgpDynamics(
        inst,
        init ? reductions::BgpAssignmentFromNamed(inst, ProfileSolution(*init))
             : bgp::ZeroAssignment(inst),
        options);
  } else if (type == "bbc") {
    const auto inst = io::ParseBbc(game);
    body = BbcDynamics(
        inst,
        init ? reductions::BbcProfileFromNamed(inst, ProfileSolution(*init))
             : bbc::ZeroProfile(inst),
        options);
  } else {
    Unsupported("dynamics", type);
  }
  r.update(body);
  return r;
}

Json Solve(const Json& game, const std::string& method, const Options& options) {
  const std::string type = io::GameType(game);
  if (method == "dynamics") return Dynamics(game, nullptr, options);
  Json r;
  r["type"] = type;
  r["method"] = method;
  r["seed"] = options.seed;
  if (method == "cycle") {
    if (type != "matrix") Unsupported("method 'cycle'", type);
    const auto g = io::ParseMatrix(game);
    if (g.num_players() != 2) {
      throw InputError("method 'cycle' needs a two-player matrix game");
    }
    const auto sol = personalized::FindCycleEquilibrium(g);
    Json cycle = Json::array();
    const int m = g.num_strategies(0);
    for (int v : sol.cycle) {
      cycle.push_back(v < m ? g.strategy(0, v) : g.strategy(1, v - m));
    }
    r["found"] = true;
    r["cycle"] = std::move(cycle);
    r["weights"] = io::WeightsJson(reductions::ToNamed(g, sol.profile))["weights"];
    return r;
  }
  if (method == "enumerate") {
    if (type != "matrix") Unsupported("method 'enumerate'", type);
    const auto g = io::ParseMatrix(game);
    const auto res = personalized::EnumerateRationalEquilibria(
        g, personalized::EnumerationOptions{options.max_lps});
    r["complete"] = res.complete;
    r["lps"] = res.lps;
    r["found"] = !res.equilibria.empty();
    Json all = Json::array();
    for (const auto& p : res.equilibria) {
      all.push_back(io::WeightsJson(reductions::ToNamed(g, p))["weights"]);
    }
    if (!res.equilibria.empty()) r["weights"] = all[0];
    r["equilibria"] = std::move(all);
    return r;
  }
  throw InputError("unknown method '" + method +
                   "' (expected dynamics, cycle or enumerate)");
}

Json BestResponse(const Json& game, const Json& profile,
                  const std::string& player) {
  const std::string type = io::GameType(game);
  const auto named = ProfileSolution(profile);
  Json r;
  r["type"] = type;
  r["player"] = player;
  if (type == "preference") {
    const auto g = io::ParsePreferenceGame(game);
    const auto w = reductions::PrefProfileFromNamed(g, named);
    const int i = g.index(player);
    r["response"] = RowJson(g.names(), pref::BestResponse(g, w, i));
    r["is_best_response"] = pref::IsBestResponse(g, w, i);
  } else if (type == "bgp") {
    const auto inst = io::ParseBgp(game);
    const auto w = reductions::BgpAssignmentFromNamed(inst, named);
    const int v = inst.index(player);
    r["response"] = RowJson(PathLabels(inst, v), bgp::LexMaxBestResponse(inst, w, v));
    r["is_best_response"] = bgp::IsLexMaximal(inst, w, v);
  } else if (type == "bbc") {
    const auto inst = io::ParseBbc(game);
    const auto w = reductions::BbcProfileFromNamed(inst, named);
    const int u = inst.index(player);
    const auto best = bbc::BestResponse(inst, w, u);
    const auto cur = bbc::Utility(inst, w, u);
    r["response"] = RowJson(inst.names(), best.weights);
    r["utility"] = io::ToJson(cur.utility);
    r["best"] = io::ToJson(best.utility);
    r["is_best_response"] = cur.utility == best.utility;
  } else if (type == "matrix") {
    const auto g = io::ParseMatrix(game);
    const auto p = reductions::MixProfileFromNamed(g, named);
    const int i = g.player_index(player);
    const auto best = personalized::BestResponseValue(g, p, i);
    const auto cur = personalized::PersonalizedPayoff(g, p, i);
    Json plan = Json::array();
    for (const auto& [code, x] : best.plan) {
      Json edge = Json::array();
      const auto strat = g.Decode(code);
      for (int j = 0; j < g.num_players(); ++j) edge.push_back(g.strategy(j, strat[j]));
      plan.push_back({{"edge", std::move(edge)}, {"weight", io::ToJson(x)}});
    }
    r["plan"] = std::move(plan);
    r["payoff"] = io::ToJson(cur.value);
    r["best"] = io::ToJson(best.value);
    r["is_best_response"] = cur.value == best.value;
  } else {
    Unsupported("best-response", type);
  }
  return r;
}

Json Reduce(const Json& game, const std::string& to, const Json* profile) {
  const std::string type = io::GameType(game);
  Json bundle;
  auto finish = [&](const Json& target, const reductions::SolutionMap& map) {
    bundle["source"] = game;
    bundle["target"] = target;
    bundle["mapping"] = io::ToJson(map);
    if (profile) {
      bundle["mapped"] = io::WeightsJson(map.Forward(ProfileSolution(*profile)))["weights"];
    }
  };
  if (to == "bgp" && type == "preference") {
    auto red = reductions::PrefToBgp(io::ParsePreferenceGame(game));
    finish(io::ToJson(red.target), red.map);
  } else if (to == "bbc" && type == "preference") {
    auto red = reductions::PrefToBbc(io::ParsePreferenceGame(game));
    finish(io::ToJson(red.target), red.map);
  } else if (to == "matrix" && type == "preference") {
    auto first = reductions::PrefToBgp(io::ParsePreferenceGame(game));
    auto second = reductions::BgpToMatrix(first.target);
    finish(io::ToJson(second.target), first.map.Then(second.map));
  } else if (to == "matrix" && type == "bgp") {
    auto red = reductions::BgpToMatrix(io::ParseBgp(game));
    finish(io::ToJson(red.target), red.map);
  } else if (to == "matrix" && type == "bbc") {
    auto red = reductions::BbcToMatrix(io::ParseBbc(game));
    finish(io::ToJson(red.target), red.map);
  } else if (to == "metric" && (type == "preference" || type == "bgp")) {
    const bgp::BgpInstance inst =
        type == "bgp" ? io::ParseBgp(game)
                      : reductions::PrefToBgp(io::ParsePreferenceGame(game)).target;
    const auto enc = reductions::MetricLengths(inst);
    const auto audit = reductions::VerifyMetricEncoding(enc);
    bundle["source"] = game;
    bundle["target"] = io::ToJson(enc);
    bundle["audit"] = {{"triangle_ok", audit.triangle_ok},
                       {"ranking_ok", audit.ranking_ok},
                       {"detail", audit.detail}};
  } else if (to == "4player" && type == "graphical") {
    const auto res = reductions::GraphicalToFourPlayer(io::ParseGraphical(game));
    bundle["source"] = game;
    bundle["target"] = io::ToJson(res.game);
    Json coloring = Json::object();
    for (size_t v = 0; v < res.reduced.nodes.size(); ++v) {
      coloring[res.reduced.nodes[v].id] = res.color[v];
    }
    Json equations = Json::array();
    auto side = [&](const std::vector<std::pair<int, int>>& terms) {
      Json out = Json::array();
      for (const auto& [i, s] : terms) {
        out.push_back({res.game.player(i), res.game.strategy(i, s)});
      }
      return out;
    };
    for (const auto& eq : res.equations) {
      equations.push_back({{"lhs", side(eq.lhs)}, {"rhs", side(eq.rhs)}});
    }
    bundle["details"] = {{"M", io::ToJson(res.big_m)},
                         {"pairs_per_player", res.pairs_per_player},
                         {"coloring", std::move(coloring)},
                         {"equations", std::move(equations)}};
  } else {
    throw InputError("no reduction from '" + type + "' to '" + to + "'");
  }
  return bundle;
}

Json CompileCircuit(const Json& circuit,
                    const std::map<std::string, Rational>* pins) {
  const auto compiled = gadgets::CompileCircuit(io::ParseCircuit(circuit));
  Json doc = io::ToJson(compiled.game);
  doc["inputs"] = compiled.fragment.inputs;
  Json ports = Json::object();
  for (const auto& [wire, player] : compiled.ports) ports[wire] = player;
  doc["ports"] = std::move(ports);
  if (pins) {
    const auto fix = gadgets::EvaluateFixpoint(compiled.fragment, *pins);
    Json values = Json::object();
    for (const auto& [wire, player] : compiled.ports) {
      const int i = fix.game.index(player);
      values[wire] = io::ToJson(fix.profile[i][i]);
    }
    doc["values"] = std::move(values);
  }
  return doc;
}

Json Report(const Json& game, const Json* profile) {
  const std::string type = io::GameType(game);
  Json r;
  r["type"] = type;
  if (type == "preference") {
    const auto g = io::ParsePreferenceGame(game);
    r["players"] = g.num_players();
  } else if (type == "bgp") {
    const auto inst = io::ParseBgp(game);
    int paths = 0;
    for (int v = 0; v < inst.num_nodes(); ++v) paths += inst.num_paths(v);
    r["nodes"] = inst.num_nodes();
    r["paths"] = paths;
  } else if (type == "bbc") {
    const auto inst = io::ParseBbc(game);
    r["nodes"] = inst.num_nodes();
    r["edges"] = inst.costs().size();
  } else if (type == "matrix") {
    const auto g = io::ParseMatrix(game);
    r["players"] = g.num_players();
    Json counts = Json::object();
    for (int i = 0; i < g.num_players(); ++i) {
      counts[g.player(i)] = g.num_strategies(i);
    }
    r["strategies"] = std::move(counts);
    r["hyperedges"] = g.num_hyperedges();
  } else if (type == "graphical") {
    r["nodes"] = io::ParseGraphical(game).nodes.size();
  } else if (type == "circuit") {
    const auto c = gadgets::CompileCircuit(io::ParseCircuit(game));
    r["players"] = c.game.num_players();
    r["ports"] = c.ports.size();
  } else {
    Unsupported("report", type);
  }
  if (profile) r["verification"] = Verify(game, *profile);
  return r;
}

std::string RenderText(const Json& report) {
  std::ostringstream out;
  std::function<void(const Json&, const std::string&)> walk =
      [&](const Json& v, const std::string& prefix) {
        if (v.is_object()) {
          for (const auto& [key, child] : v.items()) {
            if (child.is_structured()) {
              out << prefix << key << ":\n";
              walk(child, prefix + "  ");
            } else {
              out << prefix << key << ": "
                  << (child.is_string() ? child.get<std::string>() : child.dump())
                  << "\n";
            }
          }
        } else if (v.is_array()) {
          for (const auto& child : v) {
            if (child.is_structured()) {
              out << prefix << "-\n";
              walk(child, prefix + "  ");
            } else {
              out << prefix << "- "
                  << (child.is_string() ? child.get<std::string>() : child.dump())
                  << "\n";
            }
          }
        } else {
          out << prefix << v.dump() << "\n";
        }
      };
  walk(report, "");
  return out.str();
}

}  // namespace flowgames::api
