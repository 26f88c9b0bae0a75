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

#include "flowgames/reductions.h"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "flowgames/errors.h"

namespace flowgames::reductions {
namespace {

constexpr int64_t kMaxMaterializedEdges = 2'000'000;

std::string UniqueName(const std::string& base,
                       const std::vector<std::string>& taken) {
  const std::set<std::string> used(taken.begin(), taken.end());
  std::string name = base;
  while (used.count(name) > 0) name += "_";
  return name;
}

void Put(NamedSolution& s, const std::string& player,
         const std::string& strategy, const Rational& x) {
  if (!x.is_zero()) s[player][strategy] = x;
}

}  // namespace

NamedSolution ToNamed(const pref::PreferenceGame& game,
                      const pref::Profile& w) {
  NamedSolution s;
  for (int i = 0; i < game.num_players(); ++i) {
    for (int j = 0; j < game.num_players(); ++j) {
      Put(s, game.name(i), game.name(j), w[i][j]);
    }
  }
  return s;
}

NamedSolution ToNamed(const bgp::BgpInstance& inst, const bgp::Assignment& w) {
  NamedSolution s;
  for (int v = 0; v < inst.num_nodes(); ++v) {
    for (int p = 0; p < inst.num_paths(v); ++p) {
      Put(s, inst.name(v), std::to_string(p), w[v][p]);
    }
  }
  return s;
}

NamedSolution ToNamed(const bbc::BbcInstance& inst, const bbc::Profile& w) {
  NamedSolution s;
  for (int u = 0; u < inst.num_nodes(); ++u) {
    for (int v = 0; v < inst.num_nodes(); ++v) {
      Put(s, inst.name(u), inst.name(v), w[u][v]);
    }
  }
  return s;
}

NamedSolution ToNamed(const personalized::MatrixGame& game,
                      const personalized::MixProfile& p) {
  NamedSolution s;
  for (int i = 0; i < game.num_players(); ++i) {
    for (int k = 0; k < game.num_strategies(i); ++k) {
      Put(s, game.player(i), game.strategy(i, k), p[i][k]);
    }
  }
  return s;
}

pref::Profile PrefProfileFromNamed(const pref::PreferenceGame& game,
                                   const NamedSolution& s) {
  pref::Profile w = pref::ZeroProfile(game.num_players());
  for (const auto& [player, row] : s) {
    const int i = game.index(player);
    for (const auto& [other, x] : row) w[i][game.index(other)] = x;
  }
  return w;
}

bgp::Assignment BgpAssignmentFromNamed(const bgp::BgpInstance& inst,
                                       const NamedSolution& s) {
  bgp::Assignment w = bgp::ZeroAssignment(inst);
  for (const auto& [node, row] : s) {
    const int v = inst.index(node);
    for (const auto& [key, x] : row) {
      size_t used = 0;
      int p = -1;
      try {
        p = std::stoi(key, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != key.size() || p < 0 || p >= inst.num_paths(v)) {
        throw InputError("node '" + node + "' has no path with index '" + key +
                         "'");
      }
      w[v][p] = x;
    }
  }
  return w;
}

bbc::Profile BbcProfileFromNamed(const bbc::BbcInstance& inst,
                                 const NamedSolution& s) {
  bbc::Profile w = bbc::ZeroProfile(inst);
  for (const auto& [node, row] : s) {
    const int u = inst.index(node);
    for (const auto& [head, x] : row) w[u][inst.index(head)] = x;
  }
  return w;
}

personalized::MixProfile MixProfileFromNamed(
    const personalized::MatrixGame& game, const NamedSolution& s) {
  personalized::MixProfile p(game.num_players());
  for (int i = 0; i < game.num_players(); ++i) {
    p[i].assign(game.num_strategies(i), Rational(0));
  }
  for (const auto& [player, row] : s) {
    const int i = game.player_index(player);
    for (const auto& [name, x] : row) p[i][game.strategy_index(i, name)] = x;
  }
  return p;
}

void SolutionMap::Add(StrategyRef source, StrategyRef target) {
  backward_[target] = source;
  forward_[std::move(source)] = std::move(target);
}

void SolutionMap::AddSlack(StrategyRef target) {
  slack_.push_back(std::move(target));
}

NamedSolution SolutionMap::Forward(const NamedSolution& source) const {
  NamedSolution out;
  for (const auto& [player, row] : source) {
    for (const auto& [strategy, x] : row) {
      if (x.is_zero()) continue;
      auto it = forward_.find({player, strategy});
      if (it == forward_.end()) {
        throw InputError("no target for strategy '" + strategy +
                         "' of '" + player + "'");
      }
      out[it->second.player][it->second.strategy] += x;
    }
  }
  for (const StrategyRef& ref : slack_) {
    Rational used(0);
    auto it = out.find(ref.player);
    if (it != out.end()) {
      for (const auto& [strategy, x] : it->second) used += x;
    }
    const Rational rest = Rational(1) - used;
    if (rest.sign() < 0) {
      throw InputError("weights of '" + ref.player + "' exceed one");
    }
    if (!rest.is_zero()) out[ref.player][ref.strategy] = rest;
  }
  return out;
}

NamedSolution SolutionMap::Backward(const NamedSolution& target) const {
  std::set<StrategyRef> ignored(slack_.begin(), slack_.end());
  NamedSolution out;
  for (const auto& [player, row] : target) {
    for (const auto& [strategy, x] : row) {
      if (x.is_zero()) continue;
      const StrategyRef ref{player, strategy};
      if (ignored.count(ref) > 0) continue;
      auto it = backward_.find(ref);
      if (it == backward_.end()) {
        throw InputError("no source for strategy '" + strategy + "' of '" +
                         player + "'");
      }
      out[it->second.player][it->second.strategy] += x;
    }
  }
  return out;
}

SolutionMap SolutionMap::Then(const SolutionMap& next) const {
  SolutionMap out;
  for (const auto& [src, mid] : forward_) {
    auto it = next.forward_.find(mid);
    if (it == next.forward_.end()) {
      throw InputError("cannot compose maps: '" + mid.strategy + "' of '" +
                       mid.player + "' has no image");
    }
    out.Add(src, it->second);
  }
  for (const StrategyRef& ref : next.slack_) out.AddSlack(ref);
  return out;
}

Reduction<pref::PreferenceGame, bgp::BgpInstance> PrefToBgp(
    const pref::PreferenceGame& game) {
  const int n = game.num_players();
  std::vector<std::string> nodes = game.names();
  const int d = n;
  nodes.push_back(UniqueName("d", game.names()));
  std::vector<std::vector<bgp::Path>> paths(n + 1);
  std::vector<std::vector<std::vector<int>>> classes(n + 1);
  SolutionMap map;
  for (int i = 0; i < n; ++i) {
    const int self_rank = game.rank(i, i);
    for (int c = 0; c <= self_rank; ++c) {
      std::vector<int> group = game.classes(i)[c];
      // The direct path goes last within its class.
      std::stable_partition(group.begin(), group.end(),
                            [i](int j) { return j != i; });
      std::vector<int> cls;
      for (int j : group) {
        const int p = static_cast<int>(paths[i].size());
        paths[i].push_back(j == i ? bgp::Path{i, d} : bgp::Path{i, j, d});
        cls.push_back(p);
        map.Add({game.name(i), game.name(j)},
                {game.name(i), std::to_string(p)});
      }
      classes[i].push_back(std::move(cls));
    }
  }
  return {game,
          bgp::BgpInstance(std::move(nodes), d, std::move(paths),
                           std::move(classes)),
          std::move(map)};
}

Reduction<pref::PreferenceGame, bbc::BbcInstance> PrefToBbc(
    const pref::PreferenceGame& game) {
  const int n = game.num_players();
  std::vector<std::string> nodes = game.names();
  const int d = n;
  nodes.push_back(UniqueName("d", game.names()));
  std::map<bbc::Edge, Rational> cost;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= n; ++j) {
      if (j != i) cost[{i, j}] = Rational(1);
    }
  }
  std::vector<Rational> budget(n + 1, Rational(1));
  budget[d] = Rational(0);
  const Rational cross(n + 1);
  std::vector<std::map<bbc::Edge, Rational>> lengths(n + 1);
  SolutionMap map;
  for (int i = 0; i < n; ++i) {
    // at_least[j]: number of players i ranks at least as high as j.
    std::vector<int64_t> at_least(n, 0);
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        if (game.weakly_prefers(i, k, j)) ++at_least[j];
      }
    }
    auto& table = lengths[i];
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y <= n; ++y) {
        if (x == y) continue;
        Rational len = cross;
        if (x == i && y == d) {
          len = Rational(1 + at_least[i]);
        } else if (x == i) {
          len = Rational(at_least[y]);
        } else if (y == d) {
          len = Rational(1);
        }
        table[{x, y}] = len;
      }
    }
    for (int j = 0; j < n; ++j) {
      map.Add({game.name(i), game.name(j)},
              {game.name(i), j == i ? nodes[d] : game.name(j)});
    }
  }
  const Rational big_m = cross * cross + Rational(1);
  return {game,
          bbc::BbcInstance(std::move(nodes), d, std::move(cost),
                           std::move(budget), std::move(lengths), big_m),
          std::move(map)};
}

Reduction<bgp::BgpInstance, personalized::MatrixGame> BgpToMatrix(
    const bgp::BgpInstance& inst) {
  std::vector<int> node_of;  // Matrix player -> BGP node.
  std::vector<int> player_of(inst.num_nodes(), -1);
  std::vector<std::string> players;
  std::vector<std::vector<std::string>> strategies;
  SolutionMap map;
  for (int v = 0; v < inst.num_nodes(); ++v) {
    if (v == inst.dest()) continue;
    player_of[v] = static_cast<int>(node_of.size());
    node_of.push_back(v);
    players.push_back(inst.name(v));
    std::vector<std::string> strat;
    for (int p = 0; p < inst.num_paths(v); ++p) {
      strat.push_back(inst.PathString(inst.paths(v)[p]));
      map.Add({inst.name(v), std::to_string(p)}, {inst.name(v), strat.back()});
    }
    strat.push_back(kNoneStrategy);
    map.AddSlack({inst.name(v), kNoneStrategy});
    strategies.push_back(std::move(strat));
  }
  personalized::MatrixGame game(players, strategies);
  if (game.num_hyperedges() > kMaxMaterializedEdges) {
    throw InputError("matrix encoding would be too large");
  }
  // For every path: its payoff and the (player, strategy) pairs it needs.
  struct PathRule {
    Rational payoff;
    std::vector<std::pair<int, int>> needs;
    bool possible = true;
  };
  std::vector<std::vector<PathRule>> rules(players.size());
  for (size_t i = 0; i < players.size(); ++i) {
    const int v = node_of[i];
    for (int p = 0; p < inst.num_paths(v); ++p) {
      PathRule rule;
      int64_t dominated = 0;
      for (int q = 0; q < inst.num_paths(v); ++q) {
        if (inst.weakly_prefers(v, p, q)) ++dominated;
      }
      rule.payoff = Rational(dominated + 1);
      for (int gi : inst.groups_of(v, p)) {
        const bgp::SuffixGroup& g = inst.groups(v)[gi];
        if (g.cap_path < 0) {
          rule.possible = false;
        } else {
          rule.needs.push_back({player_of[g.start], g.cap_path});
        }
      }
      rules[i].push_back(std::move(rule));
    }
  }
  for (int64_t e = 0; e < game.num_hyperedges(); ++e) {
    for (int i = 0; i < game.num_players(); ++i) {
      const int s = game.Component(e, i);
      if (s >= static_cast<int>(rules[i].size())) continue;
      const PathRule& rule = rules[i][s];
      if (!rule.possible) continue;
      bool ok = true;
      for (const auto& [j, t] : rule.needs) {
        if (game.Component(e, j) != t) {
          ok = false;
          break;
        }
      }
      if (ok) game.set_utility(i, game.Decode(e), rule.payoff);
    }
  }
  return {inst, std::move(game), std::move(map)};
}

namespace {

// Shortest path from `from` to `to` over `edges` with u's lengths, by
// Bellman-Ford (lengths are nonnegative, graphs are tiny).
std::optional<Rational> ShortestPath(const bbc::BbcInstance& inst, int u,
                                     const std::vector<bbc::Edge>& edges,
                                     int from, int to) {
  std::vector<std::optional<Rational>> dist(inst.num_nodes());
  dist[from] = Rational(0);
  for (int round = 0; round < inst.num_nodes(); ++round) {
    bool changed = false;
    for (const auto& [x, y] : edges) {
      if (!dist[x].has_value()) continue;
      Rational nd = *dist[x] + inst.length(u, x, y);
      if (!dist[y].has_value() || nd < *dist[y]) {
        dist[y] = std::move(nd);
        changed = true;
      }
    }
    if (!changed) break;
  }
  return dist[to];
}

}  // namespace

Reduction<bbc::BbcInstance, personalized::MatrixGame> BbcToMatrix(
    const bbc::BbcInstance& inst) {
  std::vector<int> node_of;
  std::vector<std::string> players;
  std::vector<std::vector<std::string>> strategies;
  SolutionMap map;
  for (int u = 0; u < inst.num_nodes(); ++u) {
    if (u == inst.dest()) continue;
    node_of.push_back(u);
    players.push_back(inst.name(u));
    std::vector<std::string> strat;
    for (int v : inst.available(u)) {
      strat.push_back(inst.name(v));
      map.Add({inst.name(u), inst.name(v)}, {inst.name(u), inst.name(v)});
    }
    strat.push_back(kNoneStrategy);
    map.AddSlack({inst.name(u), kNoneStrategy});
    strategies.push_back(std::move(strat));
  }
  personalized::MatrixGame game(players, strategies);
  if (game.num_hyperedges() > kMaxMaterializedEdges) {
    throw InputError("matrix encoding would be too large");
  }
  for (int64_t e = 0; e < game.num_hyperedges(); ++e) {
    std::vector<bbc::Edge> edges;
    for (int i = 0; i < game.num_players(); ++i) {
      const int s = game.Component(e, i);
      const int u = node_of[i];
      if (s < static_cast<int>(inst.available(u).size())) {
        edges.push_back({u, inst.available(u)[s]});
      }
    }
    const std::vector<int> edge = game.Decode(e);
    for (int i = 0; i < game.num_players(); ++i) {
      const int u = node_of[i];
      const std::optional<Rational> len =
          ShortestPath(inst, u, edges, u, inst.dest());
      game.set_utility(i, edge, len.has_value() ? -*len : -inst.big_m());
    }
  }
  return {inst, std::move(game), std::move(map)};
}

}  // namespace flowgames::reductions
