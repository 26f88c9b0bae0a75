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

#ifndef FLOWGAMES_BBC_H_
#define FLOWGAMES_BBC_H_

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "flowgames/rational.h"

namespace flowgames::bbc {

// Where the penalty arc of cost M may be used when routing a node's unit.
enum class PenaltyMode {
  kSourceOnly,  // Only from the routing node straight to the destination.
  kAnyNode,     // From every node straight to the destination.
};

using Edge = std::pair<int, int>;

class BbcInstance {
 public:
  BbcInstance() = default;
  // `cost` lists the edges each node may buy; `lengths[u]` is node u's view
  // of edge lengths, with missing entries defaulting to M. Throws InputError
  // on unknown nodes, self loops, negative costs or budgets, and when M is
  // not larger than n times every listed length.
  BbcInstance(std::vector<std::string> nodes, int dest,
              std::map<Edge, Rational> cost, std::vector<Rational> budget,
              std::vector<std::map<Edge, Rational>> lengths, Rational big_m,
              PenaltyMode penalty = PenaltyMode::kSourceOnly);

  int num_nodes() const { return static_cast<int>(nodes_.size()); }
  int dest() const { return dest_; }
  const std::string& name(int v) const { return nodes_[v]; }
  const std::vector<std::string>& names() const { return nodes_; }
  int index(const std::string& name) const;
  std::optional<int> find(const std::string& name) const;

  const std::map<Edge, Rational>& costs() const { return cost_; }
  // Targets of the edges u may buy, ascending.
  const std::vector<int>& available(int u) const { return available_[u]; }
  bool is_available(int u, int v) const { return cost_.count({u, v}) > 0; }
  const Rational& cost(int u, int v) const;
  const Rational& budget(int u) const { return budget_[u]; }
  const std::map<Edge, Rational>& lengths(int u) const { return lengths_[u]; }
  Rational length(int u, int x, int y) const;
  const Rational& big_m() const { return big_m_; }
  PenaltyMode penalty() const { return penalty_; }
  void set_penalty(PenaltyMode mode) { penalty_ = mode; }

 private:
  std::vector<std::string> nodes_;
  int dest_ = -1;
  std::map<Edge, Rational> cost_;
  std::vector<std::vector<int>> available_;
  std::vector<Rational> budget_;
  std::vector<std::map<Edge, Rational>> lengths_;
  Rational big_m_;
  PenaltyMode penalty_ = PenaltyMode::kSourceOnly;
  std::unordered_map<std::string, int> index_;
};

// w[u][v]: fraction of edge (u, v) bought by u. Dense n x n.
using Profile = std::vector<std::vector<Rational>>;

Profile ZeroProfile(const BbcInstance& inst);

struct FeasibilityReport {
  bool ok = true;
  std::string detail;
};

// 0 <= w <= 1, weight only on available edges, and spend within budget.
FeasibilityReport CheckFeasible(const BbcInstance& inst, const Profile& w);

struct UtilityResult {
  Rational utility;   // Negated cost of the cheapest unit flow.
  Rational penalty;   // Amount routed over penalty arcs.
  std::map<Edge, Rational> flow;  // Positive flows on bought edges.
};

// Routes one unit from u to the destination through the bought capacities,
// using u's lengths, with the penalty arc as fallback.
UtilityResult Utility(const BbcInstance& inst, const Profile& w, int u);

struct BestResponseResult {
  std::vector<Rational> weights;  // Row for u.
  Rational utility;
};

// Buys capacity and routes flow in one joint LP.
BestResponseResult BestResponse(const BbcInstance& inst, const Profile& w,
                                int u);

struct EquilibriumReport {
  bool ok = true;
  bool feasible = true;
  int witness = -1;
  Rational utility;      // Of the witness under w.
  Rational best;         // Of the witness's best response.
  std::string detail;
};

EquilibriumReport IsEquilibrium(const BbcInstance& inst, const Profile& w);

}  // namespace flowgames::bbc

#endif  // FLOWGAMES_BBC_H_
