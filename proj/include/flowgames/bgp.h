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

#ifndef FLOWGAMES_BGP_H_
#define FLOWGAMES_BGP_H_

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "flowgames/rational.h"

namespace flowgames::bgp {

// Node indices from the owner to the destination, both included.
using Path = std::vector<int>;

// All paths of one node that end in the same proper suffix. The suffix
// starts at `start`; `cap_path` is its index in the start node's path list,
// or -1 when the start node does not list it (capacity zero).
struct SuffixGroup {
  Path suffix;
  int start = -1;
  int cap_path = -1;
  std::vector<int> members;
};

class BgpInstance {
 public:
  BgpInstance() = default;
  // `paths[v]` lists the permitted paths of v, `classes[v]` ranks them by
  // path index. Unranked paths share a bottom class. The destination has no
  // paths. Throws InputError for malformed paths or rankings.
  BgpInstance(std::vector<std::string> nodes, int dest,
              std::vector<std::vector<Path>> paths,
              std::vector<std::vector<std::vector<int>>> classes);

  int num_nodes() const { return static_cast<int>(nodes_.size()); }
  int dest() const { return dest_; }
  const std::string& name(int v) const { return nodes_[v]; }
  const std::vector<std::string>& names() const { return nodes_; }
  int index(const std::string& name) const;
  std::optional<int> find(const std::string& name) const;

  const std::vector<Path>& paths(int v) const { return paths_[v]; }
  int num_paths(int v) const { return static_cast<int>(paths_[v].size()); }
  const std::vector<std::vector<int>>& classes(int v) const {
    return classes_[v];
  }
  int num_ranks(int v) const {
    return static_cast<int>(classes_[v].size()) + 1;
  }
  int rank(int v, int p) const { return rank_[v][p]; }
  // P >=_v Q.
  bool weakly_prefers(int v, int p, int q) const {
    return rank_[v][p] <= rank_[v][q];
  }
  // Index of `path` in the list of its first node, or -1.
  int FindPath(const Path& path) const;

  const std::vector<SuffixGroup>& groups(int v) const { return groups_[v]; }
  // Indices into groups(v) of the proper suffixes of path p.
  const std::vector<int>& groups_of(int v, int p) const {
    return groups_of_[v][p];
  }

  std::string PathString(const Path& path) const;

 private:
  std::vector<std::string> nodes_;
  int dest_ = -1;
  std::vector<std::vector<Path>> paths_;
  std::vector<std::vector<std::vector<int>>> classes_;
  std::vector<std::vector<int>> rank_;
  std::vector<std::vector<SuffixGroup>> groups_;
  std::vector<std::vector<std::vector<int>>> groups_of_;
  std::unordered_map<std::string, int> index_;
  std::map<Path, int> path_index_;
};

// w[v][p]: weight node v places on its p-th path.
using Assignment = std::vector<std::vector<Rational>>;

Assignment ZeroAssignment(const BgpInstance& inst);

struct FeasibilityReport {
  bool ok = true;
  std::string detail;
};

// Unity (rows are nonnegative with sum at most 1) and the tree condition
// (paths sharing a proper suffix never exceed the suffix's own weight).
FeasibilityReport CheckFeasible(const BgpInstance& inst, const Assignment& w);

// Weight of the suffix S as assigned by its start node; 0 when unlisted.
Rational SuffixCapacity(const BgpInstance& inst, const Assignment& w,
                        const SuffixGroup& g);

struct StabilityReport {
  bool stable = true;
  bool feasible = true;
  int witness_node = -1;
  int witness_path = -1;
  std::string detail;
};

// For every node v and listed path Q, either v is saturated with paths it
// weakly prefers to Q, or some proper suffix of Q is saturated by paths v
// weakly prefers to Q.
StabilityReport CheckStable(const BgpInstance& inst, const Assignment& w);

// Greedy fill of v's ranks in order, each path raised as far as unity and
// the suffix capacities left by the other nodes allow.
std::vector<Rational> LexMaxBestResponse(const BgpInstance& inst,
                                         const Assignment& w, int v);

std::vector<Rational> RankSums(const BgpInstance& inst,
                               const std::vector<Rational>& row, int v);

bool IsLexMaximal(const BgpInstance& inst, const Assignment& w, int v);

struct DynamicsResult {
  Assignment assignment;
  int rounds = 0;
  bool converged = false;
};

// Round-robin lexicographic best-response dynamics.
DynamicsResult BestResponseDynamics(const BgpInstance& inst,
                                    const Assignment& init, int max_rounds);

}  // namespace flowgames::bgp

#endif  // FLOWGAMES_BGP_H_
