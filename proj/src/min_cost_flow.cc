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

#include "flowgames/min_cost_flow.h"

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "flowgames/errors.h"

namespace flowgames {

int FlowNetwork::AddArc(int tail, int head, std::optional<Rational> capacity,
                        Rational cost) {
  arcs.push_back({tail, head, std::move(capacity), std::move(cost)});
  return static_cast<int>(arcs.size()) - 1;
}

namespace {

struct Residual {
  int to;
  int arc;       // Index into FlowNetwork::arcs.
  bool forward;  // False for the reverse residual of `arc`.
};

// Residual capacity of an edge; nullopt stands for infinity.
std::optional<Rational> ResidualCapacity(const FlowNetwork& net,
                                         const std::vector<Rational>& flow,
                                         const Residual& r) {
  if (!r.forward) return flow[r.arc];
  const auto& cap = net.arcs[r.arc].capacity;
  if (!cap.has_value()) return std::nullopt;
  return *cap - flow[r.arc];
}

}  // namespace

FlowResult MinCostFlow(const FlowNetwork& network, int source, int sink,
                       const Rational& demand) {
  const int n = network.num_nodes;
  auto check_node = [n](int v) {
    if (v < 0 || v >= n) {
      throw InputError("flow network node " + std::to_string(v) +
                       " out of range");
    }
  };
  check_node(source);
  check_node(sink);
  if (demand.sign() < 0) throw InputError("negative flow demand");
  std::vector<std::vector<Residual>> adj(n);
  for (int a = 0; a < static_cast<int>(network.arcs.size()); ++a) {
    const FlowArc& arc = network.arcs[a];
    check_node(arc.tail);
    check_node(arc.head);
    if (arc.capacity.has_value() && arc.capacity->sign() < 0) {
      throw InputError("arc " + std::to_string(a) + " has negative capacity");
    }
    adj[arc.tail].push_back({arc.head, a, true});
    adj[arc.head].push_back({arc.tail, a, false});
  }

  FlowResult result;
  result.flow.assign(network.arcs.size(), Rational(0));
  Rational remaining = demand;
  bool first_round = true;
  while (remaining.sign() > 0) {
    // Bellman-Ford over edges with positive residual capacity.
    std::vector<std::optional<Rational>> dist(n);
    std::vector<int> pred_node(n, -1), pred_edge(n, -1);
    dist[source] = Rational(0);
    bool changed = true;
    for (int round = 0; round < n && changed; ++round) {
      changed = false;
      for (int u = 0; u < n; ++u) {
        if (!dist[u].has_value()) continue;
        for (int e = 0; e < static_cast<int>(adj[u].size()); ++e) {
          const Residual& r = adj[u][e];
          const auto cap = ResidualCapacity(network, result.flow, r);
          if (cap.has_value() && cap->sign() <= 0) continue;
          const Rational& c = network.arcs[r.arc].cost;
          Rational nd = r.forward ? *dist[u] + c : *dist[u] - c;
          if (!dist[r.to].has_value() || nd < *dist[r.to]) {
            dist[r.to] = std::move(nd);
            pred_node[r.to] = u;
            pred_edge[r.to] = e;
            changed = true;
          }
        }
      }
    }
    if (changed && first_round) {
      throw InputError("flow network has a negative-cost cycle");
    }
    first_round = false;
    if (!dist[sink].has_value()) break;

    std::optional<Rational> push = remaining;
    for (int v = sink; v != source; v = pred_node[v]) {
      const Residual& r = adj[pred_node[v]][pred_edge[v]];
      const auto cap = ResidualCapacity(network, result.flow, r);
      if (cap.has_value() && *cap < *push) push = cap;
    }
    for (int v = sink; v != source; v = pred_node[v]) {
      const Residual& r = adj[pred_node[v]][pred_edge[v]];
      if (r.forward) {
        result.flow[r.arc] += *push;
      } else {
        result.flow[r.arc] -= *push;
      }
    }
    result.cost += *push * *dist[sink];
    remaining -= *push;
  }
  result.routed = demand - remaining;
  result.status =
      remaining.is_zero() ? FlowStatus::kFeasible : FlowStatus::kInfeasible;
  return result;
}

}  // namespace flowgames
