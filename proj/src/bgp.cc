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

#include "flowgames/bgp.h"

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "flowgames/errors.h"

namespace flowgames::bgp {

BgpInstance::BgpInstance(std::vector<std::string> nodes, int dest,
                         std::vector<std::vector<Path>> paths,
                         std::vector<std::vector<std::vector<int>>> classes)
    : nodes_(std::move(nodes)),
      dest_(dest),
      paths_(std::move(paths)),
      classes_(std::move(classes)) {
  const int n = num_nodes();
  for (int v = 0; v < n; ++v) {
    if (!index_.emplace(nodes_[v], v).second) {
      throw InputError("duplicate node '" + nodes_[v] + "'");
    }
  }
  if (dest_ < 0 || dest_ >= n) throw InputError("destination out of range");
  paths_.resize(n);
  classes_.resize(n);
  if (!paths_[dest_].empty()) {
    throw InputError("the destination may not own paths");
  }
  for (int v = 0; v < n; ++v) {
    for (int p = 0; p < num_paths(v); ++p) {
      const Path& path = paths_[v][p];
      const std::string where = "path " + std::to_string(p) + " of '" +
                                nodes_[v] + "'";
      if (path.size() < 2 || path.front() != v || path.back() != dest_) {
        throw InputError(where + " must run from its owner to the destination");
      }
      std::set<int> seen;
      for (int x : path) {
        if (x < 0 || x >= n) throw InputError(where + " names an unknown node");
        if (!seen.insert(x).second) throw InputError(where + " is not simple");
      }
      if (!path_index_.emplace(path, p).second) {
        throw InputError(where + " is listed twice");
      }
    }
  }
  rank_.assign(n, {});
  for (int v = 0; v < n; ++v) {
    const int bottom = static_cast<int>(classes_[v].size());
    rank_[v].assign(num_paths(v), -1);
    for (int c = 0; c < bottom; ++c) {
      if (classes_[v][c].empty()) {
        throw InputError("node '" + nodes_[v] + "' has an empty class");
      }
      for (int p : classes_[v][c]) {
        if (p < 0 || p >= num_paths(v)) {
          throw InputError("node '" + nodes_[v] + "' ranks unknown path " +
                           std::to_string(p));
        }
        if (rank_[v][p] >= 0) {
          throw InputError("node '" + nodes_[v] + "' ranks path " +
                           std::to_string(p) + " twice");
        }
        rank_[v][p] = c;
      }
    }
    for (int& r : rank_[v]) {
      if (r < 0) r = bottom;
    }
  }
  // Proper suffixes that start at the destination carry no constraint.
  groups_.assign(n, {});
  groups_of_.assign(n, {});
  for (int v = 0; v < n; ++v) {
    std::map<Path, int> by_suffix;
    groups_of_[v].assign(num_paths(v), {});
    for (int p = 0; p < num_paths(v); ++p) {
      const Path& path = paths_[v][p];
      for (size_t k = 1; k + 1 < path.size(); ++k) {
        Path suffix(path.begin() + k, path.end());
        auto [it, inserted] =
            by_suffix.emplace(suffix, static_cast<int>(groups_[v].size()));
        if (inserted) {
          SuffixGroup g;
          g.start = suffix.front();
          g.cap_path = FindPath(suffix);
          g.suffix = std::move(suffix);
          groups_[v].push_back(std::move(g));
        }
        groups_[v][it->second].members.push_back(p);
        groups_of_[v][p].push_back(it->second);
      }
    }
  }
}

int BgpInstance::index(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw InputError("unknown node '" + name + "'");
  return it->second;
}

std::optional<int> BgpInstance::find(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int BgpInstance::FindPath(const Path& path) const {
  auto it = path_index_.find(path);
  return it == path_index_.end() ? -1 : it->second;
}

std::string BgpInstance::PathString(const Path& path) const {
  std::string out;
  for (size_t k = 0; k < path.size(); ++k) {
    if (k > 0) out += ",";
    out += nodes_[path[k]];
  }
  return out;
}

Assignment ZeroAssignment(const BgpInstance& inst) {
  Assignment w(inst.num_nodes());
  for (int v = 0; v < inst.num_nodes(); ++v) {
    w[v].assign(inst.num_paths(v), Rational(0));
  }
  return w;
}

Rational SuffixCapacity(const BgpInstance& /*inst*/, const Assignment& w,
                        const SuffixGroup& g) {
  if (g.cap_path < 0) return Rational(0);
  return w[g.start][g.cap_path];
}

namespace {

void CheckShape(const BgpInstance& inst, const Assignment& w) {
  if (static_cast<int>(w.size()) != inst.num_nodes()) {
    throw InputError("assignment has the wrong number of nodes");
  }
  for (int v = 0; v < inst.num_nodes(); ++v) {
    if (static_cast<int>(w[v].size()) != inst.num_paths(v)) {
      throw InputError("assignment row of '" + inst.name(v) +
                       "' has the wrong length");
    }
  }
}

Rational GroupSum(const std::vector<Rational>& row, const SuffixGroup& g) {
  Rational s(0);
  for (int p : g.members) s += row[p];
  return s;
}

}  // namespace

FeasibilityReport CheckFeasible(const BgpInstance& inst, const Assignment& w) {
  CheckShape(inst, w);
  FeasibilityReport report;
  auto fail = [&report](std::string detail) {
    report.ok = false;
    report.detail = std::move(detail);
    return report;
  };
  for (int v = 0; v < inst.num_nodes(); ++v) {
    Rational total(0);
    for (int p = 0; p < inst.num_paths(v); ++p) {
      if (w[v][p].sign() < 0) {
        return fail("negative weight on path " + std::to_string(p) + " of '" +
                    inst.name(v) + "'");
      }
      total += w[v][p];
    }
    if (total > Rational(1)) {
      return fail("unity violated at '" + inst.name(v) + "'");
    }
    for (const SuffixGroup& g : inst.groups(v)) {
      if (GroupSum(w[v], g) > SuffixCapacity(inst, w, g)) {
        return fail("tree condition violated at '" + inst.name(v) +
                    "' for suffix " + inst.PathString(g.suffix));
      }
    }
  }
  return report;
}

StabilityReport CheckStable(const BgpInstance& inst, const Assignment& w) {
  StabilityReport report;
  const FeasibilityReport feas = CheckFeasible(inst, w);
  if (!feas.ok) {
    report.stable = false;
    report.feasible = false;
    report.detail = feas.detail;
    return report;
  }
  for (int v = 0; v < inst.num_nodes(); ++v) {
    Rational total(0);
    for (const Rational& x : w[v]) total += x;
    for (int q = 0; q < inst.num_paths(v); ++q) {
      auto all_preferred = [&](const std::vector<int>& ps) {
        for (int p : ps) {
          if (w[v][p].sign() > 0 && !inst.weakly_prefers(v, p, q)) {
            return false;
          }
        }
        return true;
      };
      std::vector<int> all(inst.num_paths(v));
      for (int p = 0; p < inst.num_paths(v); ++p) all[p] = p;
      if (total == Rational(1) && all_preferred(all)) continue;
      bool s2 = false;
      for (int gi : inst.groups_of(v, q)) {
        const SuffixGroup& g = inst.groups(v)[gi];
        if (GroupSum(w[v], g) == SuffixCapacity(inst, w, g) &&
            all_preferred(g.members)) {
          s2 = true;
          break;
        }
      }
      if (!s2) {
        report.stable = false;
        report.witness_node = v;
        report.witness_path = q;
        report.detail = "node '" + inst.name(v) + "' can improve with path " +
                        inst.PathString(inst.paths(v)[q]);
        return report;
      }
    }
  }
  return report;
}

std::vector<Rational> LexMaxBestResponse(const BgpInstance& inst,
                                         const Assignment& w, int v) {
  CheckShape(inst, w);
  const int np = inst.num_paths(v);
  std::vector<Rational> out(np, Rational(0));
  std::vector<Rational> used(inst.groups(v).size(), Rational(0));
  Rational remaining(1);
  for (int c = 0; c < inst.num_ranks(v); ++c) {
    for (int p = 0; p < np && remaining.sign() > 0; ++p) {
      if (inst.rank(v, p) != c) continue;
      Rational amount = remaining;
      for (int gi : inst.groups_of(v, p)) {
        const SuffixGroup& g = inst.groups(v)[gi];
        amount = Min(amount, SuffixCapacity(inst, w, g) - used[gi]);
      }
      if (amount.sign() <= 0) continue;
      out[p] = amount;
      remaining -= amount;
      for (int gi : inst.groups_of(v, p)) used[gi] += amount;
    }
  }
  return out;
}

std::vector<Rational> RankSums(const BgpInstance& inst,
                               const std::vector<Rational>& row, int v) {
  std::vector<Rational> sums(inst.num_ranks(v), Rational(0));
  for (int p = 0; p < inst.num_paths(v); ++p) sums[inst.rank(v, p)] += row[p];
  return sums;
}

bool IsLexMaximal(const BgpInstance& inst, const Assignment& w, int v) {
  const std::vector<Rational> have = RankSums(inst, w[v], v);
  const std::vector<Rational> want =
      RankSums(inst, LexMaxBestResponse(inst, w, v), v);
  Rational a(0), b(0);
  for (size_t c = 0; c < have.size(); ++c) {
    a += have[c];
    b += want[c];
    if (a != b) return false;
  }
  return true;
}

DynamicsResult BestResponseDynamics(const BgpInstance& inst,
                                    const Assignment& init, int max_rounds) {
  if (max_rounds < 1) throw InputError("max_rounds must be at least 1");
  DynamicsResult result;
  result.assignment = init;
  while (result.rounds < max_rounds) {
    ++result.rounds;
    bool changed = false;
    for (int v = 0; v < inst.num_nodes(); ++v) {
      std::vector<Rational> br = LexMaxBestResponse(inst, result.assignment, v);
      if (br != result.assignment[v]) {
        result.assignment[v] = std::move(br);
        changed = true;
      }
    }
    if (!changed) {
      result.converged = true;
      break;
    }
  }
  return result;
}

}  // namespace flowgames::bgp
