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

#include "flowgames/bbc.h"

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "flowgames/errors.h"
#include "flowgames/lp.h"
#include "flowgames/min_cost_flow.h"

namespace flowgames::bbc {

BbcInstance::BbcInstance(std::vector<std::string> nodes, int dest,
                         std::map<Edge, Rational> cost,
                         std::vector<Rational> budget,
                         std::vector<std::map<Edge, Rational>> lengths,
                         Rational big_m, PenaltyMode penalty)
    : nodes_(std::move(nodes)),
      dest_(dest),
      cost_(std::move(cost)),
      budget_(std::move(budget)),
      lengths_(std::move(lengths)),
      big_m_(std::move(big_m)),
      penalty_(penalty) {
  const int n = num_nodes();
  for (int v = 0; v < n; ++v) {
    if (!index_.emplace(nodes_[v], v).second) {
      throw InputError("duplicate node '" + nodes_[v] + "'");
    }
  }
  if (dest_ < 0 || dest_ >= n) throw InputError("destination out of range");
  budget_.resize(n, Rational(0));
  lengths_.resize(n);
  available_.assign(n, {});
  auto check_edge = [n](const Edge& e, const std::string& what) {
    if (e.first < 0 || e.first >= n || e.second < 0 || e.second >= n) {
      throw InputError(what + " names an unknown node");
    }
    if (e.first == e.second) throw InputError(what + " is a self loop");
  };
  for (const auto& [e, c] : cost_) {
    check_edge(e, "cost entry");
    if (c.sign() < 0) throw InputError("negative edge cost");
    if (e.first != dest_) available_[e.first].push_back(e.second);
  }
  for (const Rational& b : budget_) {
    if (b.sign() < 0) throw InputError("negative budget");
  }
  Rational max_len(0);
  for (const auto& table : lengths_) {
    for (const auto& [e, len] : table) {
      check_edge(e, "length entry");
      if (len.sign() < 0) throw InputError("negative edge length");
      max_len = Max(max_len, len);
    }
  }
  if (!(big_m_ > Rational(n) * max_len) || big_m_.sign() <= 0) {
    throw InputError("M must exceed the node count times every length");
  }
}

int BbcInstance::index(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw InputError("unknown node '" + name + "'");
  return it->second;
}

std::optional<int> BbcInstance::find(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const Rational& BbcInstance::cost(int u, int v) const {
  auto it = cost_.find({u, v});
  if (it == cost_.end()) {
    throw InputError("edge " + nodes_[u] + "->" + nodes_[v] +
                     " is not available");
  }
  return it->second;
}

Rational BbcInstance::length(int u, int x, int y) const {
  auto it = lengths_[u].find({x, y});
  return it == lengths_[u].end() ? big_m_ : it->second;
}

Profile ZeroProfile(const BbcInstance& inst) {
  return Profile(inst.num_nodes(),
                 std::vector<Rational>(inst.num_nodes(), Rational(0)));
}

namespace {

void CheckShape(const BbcInstance& inst, const Profile& w) {
  const int n = inst.num_nodes();
  if (static_cast<int>(w.size()) != n) {
    throw InputError("profile has the wrong number of rows");
  }
  for (const auto& row : w) {
    if (static_cast<int>(row.size()) != n) {
      throw InputError("profile row has the wrong length");
    }
  }
}

void CheckSource(const BbcInstance& inst, int u) {
  if (u < 0 || u >= inst.num_nodes() || u == inst.dest()) {
    throw PreconditionError("utility is defined for non-destination nodes");
  }
}

}  // namespace

FeasibilityReport CheckFeasible(const BbcInstance& inst, const Profile& w) {
  CheckShape(inst, w);
  FeasibilityReport report;
  const int n = inst.num_nodes();
  for (int u = 0; u < n; ++u) {
    Rational spend(0);
    for (int v = 0; v < n; ++v) {
      const Rational& x = w[u][v];
      if (x.is_zero()) continue;
      const std::string edge = inst.name(u) + "->" + inst.name(v);
      if (x.sign() < 0 || x > Rational(1)) {
        report.ok = false;
        report.detail = "weight on " + edge + " outside [0,1]";
        return report;
      }
      if (u == inst.dest() || !inst.is_available(u, v)) {
        report.ok = false;
        report.detail = "weight on unavailable edge " + edge;
        return report;
      }
      spend += inst.cost(u, v) * x;
    }
    if (spend > inst.budget(u)) {
      report.ok = false;
      report.detail = "budget exceeded at '" + inst.name(u) + "'";
      return report;
    }
  }
  return report;
}

UtilityResult Utility(const BbcInstance& inst, const Profile& w, int u) {
  CheckShape(inst, w);
  CheckSource(inst, u);
  const int n = inst.num_nodes();
  const int d = inst.dest();
  FlowNetwork net;
  net.num_nodes = n;
  std::vector<Edge> arc_edge;
  for (int x = 0; x < n; ++x) {
    if (x == d) continue;
    for (int y : inst.available(x)) {
      if (w[x][y].sign() <= 0) continue;
      net.AddArc(x, y, w[x][y], inst.length(u, x, y));
      arc_edge.push_back({x, y});
    }
  }
  const int first_penalty = static_cast<int>(net.arcs.size());
  for (int x = 0; x < n; ++x) {
    if (x == d) continue;
    if (inst.penalty() == PenaltyMode::kSourceOnly && x != u) continue;
    net.AddArc(x, d, std::nullopt, inst.big_m());
  }
  const FlowResult flow = MinCostFlow(net, u, d, Rational(1));
  UtilityResult result;
  result.utility = -flow.cost;
  for (int a = 0; a < static_cast<int>(net.arcs.size()); ++a) {
    if (flow.flow[a].sign() <= 0) continue;
    if (a >= first_penalty) {
      result.penalty += flow.flow[a];
    } else {
      result.flow[arc_edge[a]] += flow.flow[a];
    }
  }
  return result;
}

BestResponseResult BestResponse(const BbcInstance& inst, const Profile& w,
                                int u) {
  CheckShape(inst, w);
  CheckSource(inst, u);
  const int n = inst.num_nodes();
  const int d = inst.dest();
  LinearProgram lp(LpSense::kMinimize);
  std::vector<std::vector<LinearTerm>> balance(n);
  auto add_arc = [&](int var, int x, int y) {
    balance[x].push_back({var, Rational(1)});
    balance[y].push_back({var, Rational(-1)});
  };
  for (int x = 0; x < n; ++x) {
    if (x == d || x == u) continue;
    for (int y : inst.available(x)) {
      if (w[x][y].sign() <= 0) continue;
      const int f = lp.AddVariable("f");
      lp.SetObjectiveCoefficient(f, inst.length(u, x, y));
      lp.AddConstraint({{f, Rational(1)}}, LpRelation::kLessEqual, w[x][y]);
      add_arc(f, x, y);
    }
  }
  std::vector<int> buy_var;
  std::vector<LinearTerm> spend;
  for (int y : inst.available(u)) {
    const int b = lp.AddVariable("b");
    const int f = lp.AddVariable("f");
    buy_var.push_back(b);
    lp.SetObjectiveCoefficient(f, inst.length(u, u, y));
    lp.AddConstraint({{b, Rational(1)}}, LpRelation::kLessEqual, Rational(1));
    lp.AddConstraint({{f, Rational(1)}, {b, Rational(-1)}},
                     LpRelation::kLessEqual, Rational(0));
    spend.push_back({b, inst.cost(u, y)});
    add_arc(f, u, y);
  }
  if (!spend.empty()) {
    lp.AddConstraint(spend, LpRelation::kLessEqual, inst.budget(u));
  }
  for (int x = 0; x < n; ++x) {
    if (x == d) continue;
    if (inst.penalty() == PenaltyMode::kSourceOnly && x != u) continue;
    const int g = lp.AddVariable("penalty");
    lp.SetObjectiveCoefficient(g, inst.big_m());
    add_arc(g, x, d);
  }
  for (int x = 0; x < n; ++x) {
    if (x == d) continue;
    lp.AddConstraint(balance[x], LpRelation::kEqual,
                     Rational(x == u ? 1 : 0));
  }
  const LpResult res = SolveLp(lp);
  if (res.status != LpStatus::kOptimal) {
    throw PreconditionError("best-response LP is " + ToString(res.status));
  }
  BestResponseResult out;
  out.weights.assign(n, Rational(0));
  for (size_t k = 0; k < buy_var.size(); ++k) {
    out.weights[inst.available(u)[k]] = res.values[buy_var[k]];
  }
  out.utility = -res.objective;
  return out;
}

EquilibriumReport IsEquilibrium(const BbcInstance& inst, const Profile& w) {
  EquilibriumReport report;
  const FeasibilityReport feas = CheckFeasible(inst, w);
  if (!feas.ok) {
    report.ok = false;
    report.feasible = false;
    report.detail = feas.detail;
    return report;
  }
  for (int u = 0; u < inst.num_nodes(); ++u) {
    if (u == inst.dest()) continue;
    const Rational have = Utility(inst, w, u).utility;
    const Rational best = BestResponse(inst, w, u).utility;
    if (have != best) {
      report.ok = false;
      report.witness = u;
      report.utility = have;
      report.best = best;
      report.detail = "node '" + inst.name(u) + "' can improve";
      return report;
    }
  }
  return report;
}

}  // namespace flowgames::bbc
