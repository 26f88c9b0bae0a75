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

#include "flowgames/personalized.h"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "flowgames/errors.h"
#include "flowgames/lp.h"

namespace flowgames::personalized {

MatrixGame::MatrixGame(std::vector<std::string> players,
                       std::vector<std::vector<std::string>> strategies)
    : players_(std::move(players)), strategies_(std::move(strategies)) {
  const int k = num_players();
  if (k == 0) throw InputError("a matrix game needs at least one player");
  if (static_cast<int>(strategies_.size()) != k) {
    throw InputError("strategy lists do not match the player count");
  }
  stride_.assign(k, 1);
  strategy_index_.assign(k, {});
  utilities_.assign(k, {});
  num_edges_ = 1;
  constexpr int64_t kMaxEdges = int64_t{1} << 40;
  for (int i = 0; i < k; ++i) {
    if (!player_index_.emplace(players_[i], i).second) {
      throw InputError("duplicate player '" + players_[i] + "'");
    }
    if (strategies_[i].empty()) {
      throw InputError("player '" + players_[i] + "' has no strategies");
    }
    for (int s = 0; s < num_strategies(i); ++s) {
      if (!strategy_index_[i].emplace(strategies_[i][s], s).second) {
        throw InputError("player '" + players_[i] +
                         "' has duplicate strategy '" + strategies_[i][s] +
                         "'");
      }
    }
    stride_[i] = num_edges_;
    num_edges_ *= num_strategies(i);
    if (num_edges_ > kMaxEdges) throw InputError("matrix game is too large");
  }
}

int MatrixGame::player_index(const std::string& name) const {
  auto it = player_index_.find(name);
  if (it == player_index_.end()) {
    throw InputError("unknown player '" + name + "'");
  }
  return it->second;
}

int MatrixGame::strategy_index(int i, const std::string& name) const {
  auto it = strategy_index_[i].find(name);
  if (it == strategy_index_[i].end()) {
    throw InputError("player '" + players_[i] + "' has no strategy '" + name +
                     "'");
  }
  return it->second;
}

int64_t MatrixGame::Encode(const std::vector<int>& edge) const {
  if (static_cast<int>(edge.size()) != num_players()) {
    throw InputError("hyperedge has the wrong arity");
  }
  int64_t code = 0;
  for (int i = 0; i < num_players(); ++i) {
    if (edge[i] < 0 || edge[i] >= num_strategies(i)) {
      throw InputError("hyperedge strategy out of range");
    }
    code += stride_[i] * edge[i];
  }
  return code;
}

std::vector<int> MatrixGame::Decode(int64_t code) const {
  std::vector<int> edge(num_players());
  for (int i = 0; i < num_players(); ++i) edge[i] = Component(code, i);
  return edge;
}

const Rational& MatrixGame::utility(int i, int64_t code) const {
  static const Rational kZero(0);
  auto it = utilities_[i].find(code);
  return it == utilities_[i].end() ? kZero : it->second;
}

void MatrixGame::set_utility(int i, const std::vector<int>& edge,
                             const Rational& v) {
  const int64_t code = Encode(edge);
  if (v.is_zero()) {
    utilities_[i].erase(code);
  } else {
    utilities_[i][code] = v;
  }
}

void MatrixGame::add_utility(int i, const std::vector<int>& edge,
                             const Rational& v) {
  set_utility(i, edge, utility(i, Encode(edge)) + v);
}

void ValidateProfile(const MatrixGame& game, const MixProfile& p) {
  if (static_cast<int>(p.size()) != game.num_players()) {
    throw InputError("profile has the wrong number of players");
  }
  for (int i = 0; i < game.num_players(); ++i) {
    if (static_cast<int>(p[i].size()) != game.num_strategies(i)) {
      throw InputError("profile of '" + game.player(i) +
                       "' has the wrong length");
    }
    Rational sum(0);
    for (const Rational& x : p[i]) {
      if (x.sign() < 0) {
        throw InputError("negative probability for '" + game.player(i) + "'");
      }
      sum += x;
    }
    if (sum != Rational(1)) {
      throw InputError("profile of '" + game.player(i) +
                       "' does not sum to 1");
    }
  }
}

namespace {

// All hyperedges whose component for player j lies in allowed[j].
std::vector<int64_t> ProductCodes(
    const MatrixGame& game, const std::vector<std::vector<int>>& allowed) {
  std::vector<int64_t> codes = {0};
  for (int j = 0; j < game.num_players(); ++j) {
    const int64_t stride = game.stride(j);
    std::vector<int64_t> next;
    next.reserve(codes.size() * allowed[j].size());
    for (int64_t c : codes) {
      for (int s : allowed[j]) next.push_back(c + stride * s);
    }
    codes = std::move(next);
  }
  std::sort(codes.begin(), codes.end());
  return codes;
}

std::vector<int> Support(const std::vector<Rational>& row) {
  std::vector<int> out;
  for (int s = 0; s < static_cast<int>(row.size()); ++s) {
    if (row[s].sign() > 0) out.push_back(s);
  }
  return out;
}

std::vector<int> AllStrategies(const MatrixGame& game, int i) {
  std::vector<int> out(game.num_strategies(i));
  for (int s = 0; s < game.num_strategies(i); ++s) out[s] = s;
  return out;
}

// Maximizes player i's utility over joint distributions whose marginals
// match p for every player except `free_player` (-1 for none).
PlanResult SolvePlan(const MatrixGame& game, const MixProfile& p, int i,
                     int free_player) {
  ValidateProfile(game, p);
  const int k = game.num_players();
  std::vector<std::vector<int>> allowed(k);
  for (int j = 0; j < k; ++j) {
    allowed[j] = (j == free_player) ? AllStrategies(game, j) : Support(p[j]);
  }
  const std::vector<int64_t> codes = ProductCodes(game, allowed);
  LinearProgram lp(LpSense::kMaximize);
  std::vector<std::vector<std::vector<LinearTerm>>> rows(k);
  for (int j = 0; j < k; ++j) rows[j].resize(game.num_strategies(j));
  for (size_t c = 0; c < codes.size(); ++c) {
    const int var = lp.AddVariable("w");
    lp.SetObjectiveCoefficient(var, game.utility(i, codes[c]));
    for (int j = 0; j < k; ++j) {
      if (j == free_player) continue;
      rows[j][game.Component(codes[c], j)].push_back({var, Rational(1)});
    }
  }
  for (int j = 0; j < k; ++j) {
    if (j == free_player) continue;
    for (int s : allowed[j]) {
      lp.AddConstraint(rows[j][s], LpRelation::kEqual, p[j][s]);
    }
  }
  if (free_player >= 0) {
    // Keeps the program bounded when every other player is absent (k == 1).
    std::vector<LinearTerm> all;
    for (int v = 0; v < lp.num_variables(); ++v) {
      all.push_back({v, Rational(1)});
    }
    lp.AddConstraint(all, LpRelation::kEqual, Rational(1));
  }
  const LpResult res = SolveLp(lp);
  if (res.status != LpStatus::kOptimal) {
    throw PreconditionError("joint-distribution LP is " +
                            ToString(res.status));
  }
  PlanResult out;
  out.value = res.objective;
  for (size_t c = 0; c < codes.size(); ++c) {
    if (res.values[c].sign() > 0) out.plan[codes[c]] = res.values[c];
  }
  return out;
}

}  // namespace

PlanResult PersonalizedPayoff(const MatrixGame& game, const MixProfile& p,
                              int i) {
  return SolvePlan(game, p, i, -1);
}

PlanResult BestResponseValue(const MatrixGame& game, const MixProfile& p,
                             int i) {
  return SolvePlan(game, p, i, i);
}

EquilibriumReport IsPersonalizedEquilibrium(const MatrixGame& game,
                                            const MixProfile& p) {
  EquilibriumReport report;
  for (int i = 0; i < game.num_players(); ++i) {
    report.payoff.push_back(PersonalizedPayoff(game, p, i).value);
    report.best.push_back(BestResponseValue(game, p, i).value);
    if (report.ok && report.payoff[i] != report.best[i]) {
      report.ok = false;
      report.witness = i;
    }
  }
  return report;
}

BestResponseGraph BuildBestResponseGraph(const MatrixGame& game) {
  if (game.num_players() != 2) {
    throw InputError("best-response graphs need exactly two players");
  }
  BestResponseGraph g;
  g.rows = game.num_strategies(0);
  g.cols = game.num_strategies(1);
  g.adj.assign(g.rows + g.cols, {});
  auto code = [&game](int r, int c) { return game.Encode({r, c}); };
  for (int c = 0; c < g.cols; ++c) {
    Rational best = game.utility(0, code(0, c));
    for (int r = 1; r < g.rows; ++r) {
      best = Max(best, game.utility(0, code(r, c)));
    }
    for (int r = 0; r < g.rows; ++r) {
      if (game.utility(0, code(r, c)) == best) g.adj[r].push_back(g.rows + c);
    }
  }
  for (int r = 0; r < g.rows; ++r) {
    Rational best = game.utility(1, code(r, 0));
    for (int c = 1; c < g.cols; ++c) {
      best = Max(best, game.utility(1, code(r, c)));
    }
    for (int c = 0; c < g.cols; ++c) {
      if (game.utility(1, code(r, c)) == best) g.adj[g.rows + c].push_back(r);
    }
  }
  return g;
}

namespace {

CycleSolution MakeCycle(const BestResponseGraph& g, std::vector<int> cycle) {
  auto first_row = std::find_if(cycle.begin(), cycle.end(),
                                [&g](int v) { return v < g.rows; });
  std::rotate(cycle.begin(), first_row, cycle.end());
  CycleSolution sol;
  sol.profile = {std::vector<Rational>(g.rows, Rational(0)),
                 std::vector<Rational>(g.cols, Rational(0))};
  const Rational share(1, static_cast<int64_t>(cycle.size() / 2));
  for (int v : cycle) {
    if (v < g.rows) {
      sol.profile[0][v] += share;
    } else {
      sol.profile[1][v - g.rows] += share;
    }
  }
  sol.cycle = std::move(cycle);
  return sol;
}

}  // namespace

CycleSolution FindCycleEquilibrium(const MatrixGame& game) {
  const BestResponseGraph g = BuildBestResponseGraph(game);
  const int n = g.rows + g.cols;
  std::vector<bool> alive(n, true);
  bool trimmed = true;
  while (trimmed) {
    trimmed = false;
    std::vector<int> indeg(n, 0), outdeg(n, 0);
    for (int v = 0; v < n; ++v) {
      if (!alive[v]) continue;
      for (int u : g.adj[v]) {
        if (!alive[u]) continue;
        ++outdeg[v];
        ++indeg[u];
      }
    }
    for (int v = 0; v < n; ++v) {
      if (alive[v] && (indeg[v] == 0 || outdeg[v] == 0)) {
        alive[v] = false;
        trimmed = true;
      }
    }
  }
  int start = -1;
  for (int v = 0; v < n && start < 0; ++v) {
    if (alive[v]) start = v;
  }
  if (start < 0) throw PreconditionError("best-response graph has no cycle");
  std::vector<int> position(n, -1), walk;
  int v = start;
  while (position[v] < 0) {
    position[v] = static_cast<int>(walk.size());
    walk.push_back(v);
    int next = -1;
    for (int u : g.adj[v]) {
      if (alive[u]) {
        next = u;
        break;
      }
    }
    v = next;
  }
  return MakeCycle(g, std::vector<int>(walk.begin() + position[v], walk.end()));
}

std::vector<CycleComponent> DecomposeIntoCycles(const MatrixGame& game,
                                                const MixProfile& p) {
  ValidateProfile(game, p);
  const BestResponseGraph g = BuildBestResponseGraph(game);
  const int n = g.rows + g.cols;
  // Optimal plans of both players restricted to best-response edges. The
  // two plans together form a circulation in the graph.
  std::map<std::pair<int, int>, Rational> flow;
  for (int side = 0; side < 2; ++side) {
    LinearProgram lp;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<LinearTerm>> row_sum(g.rows), col_sum(g.cols);
    for (int v = 0; v < n; ++v) {
      const bool is_row = v < g.rows;
      if ((side == 0) != is_row) continue;
      for (int u : g.adj[v]) {
        const int r = is_row ? v : u;
        const int c = (is_row ? u : v) - g.rows;
        if (p[0][r].sign() <= 0 || p[1][c].sign() <= 0) continue;
        const int var = lp.AddVariable("plan");
        edges.push_back({v, u});
        row_sum[r].push_back({var, Rational(1)});
        col_sum[c].push_back({var, Rational(1)});
      }
    }
    for (int r = 0; r < g.rows; ++r) {
      lp.AddConstraint(row_sum[r], LpRelation::kEqual, p[0][r]);
    }
    for (int c = 0; c < g.cols; ++c) {
      lp.AddConstraint(col_sum[c], LpRelation::kEqual, p[1][c]);
    }
    const LpResult res = SolveLp(lp);
    if (res.status != LpStatus::kOptimal) {
      throw PreconditionError(
          "profile is not a personalized equilibrium; no cycle decomposition");
    }
    for (size_t e = 0; e < edges.size(); ++e) {
      if (res.values[e].sign() > 0) flow[edges[e]] += res.values[e];
    }
  }
  std::vector<CycleComponent> out;
  std::map<std::vector<int>, size_t> seen;
  while (!flow.empty()) {
    std::vector<int> position(n, -1), walk;
    int v = flow.begin()->first.first;
    while (position[v] < 0) {
      position[v] = static_cast<int>(walk.size());
      walk.push_back(v);
      auto it = flow.lower_bound({v, -1});
      v = it->first.second;
    }
    std::vector<int> cycle(walk.begin() + position[v], walk.end());
    Rational amount;
    bool first = true;
    for (size_t k = 0; k < cycle.size(); ++k) {
      const Rational& f = flow[{cycle[k], cycle[(k + 1) % cycle.size()]}];
      if (first || f < amount) amount = f;
      first = false;
    }
    for (size_t k = 0; k < cycle.size(); ++k) {
      const std::pair<int, int> e = {cycle[k], cycle[(k + 1) % cycle.size()]};
      flow[e] -= amount;
      if (flow[e].is_zero()) flow.erase(e);
    }
    CycleSolution sol = MakeCycle(g, std::move(cycle));
    const Rational lambda =
        amount * Rational(static_cast<int64_t>(sol.cycle.size() / 2));
    auto [it, inserted] = seen.emplace(sol.cycle, out.size());
    if (inserted) {
      out.push_back({std::move(sol), lambda});
    } else {
      out[it->second].lambda += lambda;
    }
  }
  return out;
}

std::optional<std::vector<int64_t>> ImprovingDirection(
    const MatrixGame& game, int l, const std::vector<int64_t>& support,
    long* lps) {
  const std::set<int64_t> free(support.begin(), support.end());
  const int k = game.num_players();
  LinearProgram lp(LpSense::kMaximize);
  std::vector<std::vector<std::vector<LinearTerm>>> marg(k);
  for (int j = 0; j < k; ++j) marg[j].resize(game.num_strategies(j));
  std::vector<LinearTerm> norm;
  std::vector<LinearTerm> balance;
  std::vector<std::pair<int64_t, int>> down;  // Hyperedge, variable.
  std::vector<int> up_of(game.num_hyperedges());
  for (int64_t e = 0; e < game.num_hyperedges(); ++e) {
    const Rational& u = game.utility(l, e);
    for (int sign : {1, -1}) {
      if (sign < 0 && free.count(e) == 0) continue;
      const int var = lp.AddVariable(sign > 0 ? "up" : "down");
      if (sign > 0) {
        up_of[e] = var;
      } else {
        down.push_back({e, var});
      }
      lp.SetObjectiveCoefficient(var, sign > 0 ? u : -u);
      norm.push_back({var, Rational(1)});
      balance.push_back({var, Rational(sign)});
      for (int j = 0; j < k; ++j) {
        if (j == l) continue;
        marg[j][game.Component(e, j)].push_back({var, Rational(sign)});
      }
    }
  }
  for (int j = 0; j < k; ++j) {
    if (j == l) continue;
    for (auto& terms : marg[j]) {
      lp.AddConstraint(std::move(terms), LpRelation::kEqual, Rational(0));
    }
  }
  // Total mass is conserved; implied by the marginals unless l plays alone.
  lp.AddConstraint(std::move(balance), LpRelation::kEqual, Rational(0));
  lp.AddConstraint(std::move(norm), LpRelation::kLessEqual, Rational(1));
  if (lps != nullptr) ++*lps;
  const LpResult res = SolveLp(lp);
  if (res.status != LpStatus::kOptimal || res.objective.sign() <= 0) {
    return std::nullopt;
  }
  // The same direction only decreases these hyperedges, so any equilibrium
  // in the current region leaves at least one of them empty.
  std::vector<int64_t> decreasing;
  for (const auto& [e, var] : down) {
    if (res.values[var] > res.values[up_of[e]]) decreasing.push_back(e);
  }
  return decreasing;
}

bool HasImprovingDirection(const MatrixGame& game, int l,
                           const std::vector<int64_t>& support, long* lps) {
  return ImprovingDirection(game, l, support, lps).has_value();
}

namespace {

using Pin = std::pair<int, int64_t>;

struct JointSolution {
  MixProfile p;
  std::vector<std::vector<int64_t>> support;  // Per player.
};

// Feasibility program over marginals p and one joint distribution per
// player, with pinned hyperedges removed. Maximizes total utility.
std::optional<JointSolution> SolveJoint(const MatrixGame& game,
                                        const std::set<Pin>& pins) {
  const int k = game.num_players();
  LinearProgram lp(LpSense::kMaximize);
  std::vector<std::vector<int>> pvar(k);
  for (int j = 0; j < k; ++j) {
    std::vector<LinearTerm> total;
    for (int s = 0; s < game.num_strategies(j); ++s) {
      pvar[j].push_back(lp.AddVariable("p"));
      total.push_back({pvar[j][s], Rational(1)});
    }
    lp.AddConstraint(std::move(total), LpRelation::kEqual, Rational(1));
  }
  std::vector<std::vector<std::pair<int64_t, int>>> wvar(k);
  for (int i = 0; i < k; ++i) {
    std::vector<std::vector<std::vector<LinearTerm>>> marg(k);
    for (int j = 0; j < k; ++j) {
      marg[j].resize(game.num_strategies(j));
      for (int s = 0; s < game.num_strategies(j); ++s) {
        marg[j][s].push_back({pvar[j][s], Rational(-1)});
      }
    }
    for (int64_t e = 0; e < game.num_hyperedges(); ++e) {
      if (pins.count({i, e}) > 0) continue;
      const int var = lp.AddVariable("w");
      wvar[i].push_back({e, var});
      lp.SetObjectiveCoefficient(var, game.utility(i, e));
      for (int j = 0; j < k; ++j) {
        marg[j][game.Component(e, j)].push_back({var, Rational(1)});
      }
    }
    for (int j = 0; j < k; ++j) {
      for (auto& terms : marg[j]) {
        lp.AddConstraint(std::move(terms), LpRelation::kEqual, Rational(0));
      }
    }
  }
  const LpResult res = SolveLp(lp);
  if (res.status != LpStatus::kOptimal) return std::nullopt;
  JointSolution sol;
  sol.p.resize(k);
  sol.support.resize(k);
  for (int j = 0; j < k; ++j) {
    for (int var : pvar[j]) sol.p[j].push_back(res.values[var]);
  }
  for (int i = 0; i < k; ++i) {
    for (const auto& [e, var] : wvar[i]) {
      if (res.values[var].sign() > 0) sol.support[i].push_back(e);
    }
  }
  return sol;
}

}  // namespace

EnumerationResult EnumerateRationalEquilibria(
    const MatrixGame& game, const EnumerationOptions& options) {
  if (game.num_hyperedges() > 64) {
    throw InputError("enumeration is limited to games with at most 64 pure "
                     "profiles");
  }
  const int k = game.num_players();
  EnumerationResult result;
  std::set<MixProfile> found;
  auto consider = [&](const MixProfile& p) {
    if (found.count(p) > 0) return;
    result.lps += 2 * k;
    if (IsPersonalizedEquilibrium(game, p).ok) found.insert(p);
  };

  // Pure profiles are vertices of every pinned region that contains them.
  for (int64_t e = 0; e < game.num_hyperedges(); ++e) {
    MixProfile p(k);
    for (int j = 0; j < k; ++j) {
      p[j].assign(game.num_strategies(j), Rational(0));
      p[j][game.Component(e, j)] = Rational(1);
    }
    consider(p);
  }

  std::vector<std::set<Pin>> stack = {{}};
  std::set<std::set<Pin>> visited = {{}};
  while (!stack.empty()) {
    if (result.lps >= options.max_lps) break;
    const std::set<Pin> pins = std::move(stack.back());
    stack.pop_back();
    ++result.lps;
    const std::optional<JointSolution> sol = SolveJoint(game, pins);
    if (!sol.has_value()) continue;
    consider(sol->p);
    for (int l = 0; l < k; ++l) {
      const auto decreasing =
          ImprovingDirection(game, l, sol->support[l], &result.lps);
      if (!decreasing.has_value()) continue;
      for (auto it = decreasing->rbegin(); it != decreasing->rend(); ++it) {
        std::set<Pin> child = pins;
        child.insert({l, *it});
        if (visited.insert(child).second) stack.push_back(std::move(child));
      }
      break;
    }
  }
  result.complete = stack.empty();
  result.equilibria.assign(found.begin(), found.end());
  return result;
}

}  // namespace flowgames::personalized
