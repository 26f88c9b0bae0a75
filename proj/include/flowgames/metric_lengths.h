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

#ifndef FLOWGAMES_METRIC_LENGTHS_H_
#define FLOWGAMES_METRIC_LENGTHS_H_

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "flowgames/bgp.h"

namespace flowgames::reductions {

// One node's private edge lengths: explicit entries plus a default for every
// other ordered pair.
struct LengthTable {
  int owner = -1;
  std::map<std::pair<int, int>, int64_t> explicit_lengths;
  int64_t default_length = 1;

  int64_t Length(int x, int y) const;
  void SetSymmetric(int x, int y, int64_t len);
};

struct RankingAudit {
  bool ok = true;
  std::string detail;
};

// Lengths under which every node's listed paths, and only those, rank by
// length exactly as in its preference list, with every other simple path
// longer than the last listed one. The instance must have the two-hop
// shape: a node lists at most three paths (u, v, d) followed by (u, d),
// strictly ranked. Indexed by node; the destination's table is empty.
std::vector<LengthTable> ShortestPathLengths(const bgp::BgpInstance& inst);

RankingAudit VerifyShortestPathRanking(const bgp::BgpInstance& inst,
                                       const std::vector<LengthTable>& tables);

struct MetricEncoding {
  bgp::BgpInstance augmented;
  std::vector<int> primed;  // Original node -> its primed copy, -1 for d.
  std::vector<LengthTable> tables;  // Indexed by augmented node.
};

// Adds a primed copy u' of every node, turns (u, v, d) into (u, v, v', d)
// and (u, d) into (u, u', d), and assigns symmetric lengths. Only edges
// between original nodes, u -> u' and u' -> d may be used by paths.
MetricEncoding MetricLengths(const bgp::BgpInstance& inst);

// True iff (x, y) may appear on a path of the augmented instance.
bool IsTemplateEdge(const MetricEncoding& enc, int x, int y);

struct MetricAudit {
  bool triangle_ok = true;
  bool ranking_ok = true;
  std::string detail;
};

// Triangle inequality over every triple whose three pairs are template
// edges, and the path ranking over template paths, for every node.
MetricAudit VerifyMetricEncoding(const MetricEncoding& enc);

}  // namespace flowgames::reductions

#endif  // FLOWGAMES_METRIC_LENGTHS_H_
