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

#ifndef FLOWGAMES_MIN_COST_FLOW_H_
#define FLOWGAMES_MIN_COST_FLOW_H_

#include <optional>
#include <vector>

#include "flowgames/rational.h"

namespace flowgames {

struct FlowArc {
  int tail = 0;
  int head = 0;
  // std::nullopt means unbounded capacity.
  std::optional<Rational> capacity;
  Rational cost;
};

struct FlowNetwork {
  int num_nodes = 0;
  std::vector<FlowArc> arcs;

  int AddArc(int tail, int head, std::optional<Rational> capacity,
             Rational cost);
};

enum class FlowStatus { kFeasible, kInfeasible };

struct FlowResult {
  FlowStatus status = FlowStatus::kInfeasible;
  Rational cost;
  std::vector<Rational> flow;  // Per arc, in FlowNetwork::arcs order.
  Rational routed;             // Amount actually sent (== demand if feasible).
};

// Sends `demand` units from `source` to `sink` at minimum cost by successive
// shortest paths (Bellman-Ford on the residual graph, so negative arc costs
// are fine). Throws InputError for bad node ids, negative capacities or a
// negative-cost cycle in the input.
FlowResult MinCostFlow(const FlowNetwork& network, int source, int sink,
                       const Rational& demand);

}  // namespace flowgames

#endif  // FLOWGAMES_MIN_COST_FLOW_H_
