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

#include "flowgames/metric_lengths.h"

#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "flowgames/errors.h"

namespace flowgames::reductions {

int64_t LengthTable::Length(int x, int y) const {
  auto it = explicit_lengths.find({x, y});
  return it == explicit_lengths.end() ? default_length : it->second;
}

void LengthTable::SetSymmetric(int x, int y, int64_t len) {
  explicit_lengths[{x, y}] = len;
  explicit_lengths[{y, x}] = len;
}

namespace {

// Intermediate nodes of u's two-hop paths in preference order. Throws
// InputError unless u's list has the two-hop shape.
std::vector<int> TwoHopShape(const bgp::BgpInstance& inst, int u) {
  const int d = inst.dest();
  const std::string who = "node '" + inst.name(u) + "'";
  const int np = inst.num_paths(u);
  if (np == 0) return {};
  if (np > 4) throw InputError(who + " lists more than four paths");
  if (static_cast<int>(inst.classes(u).size()) != np) {
    throw InputError(who + " must rank every path strictly");
  }
  std::vector<int> mids;
  for (int c = 0; c < np; ++c) {
    if (inst.classes(u)[c].size() != 1) {
      throw InputError(who + " must rank every path strictly");
    }
    const bgp::Path& path = inst.paths(u)[inst.classes(u)[c][0]];
    if (c + 1 == np) {
      if (path != bgp::Path{u, d}) {
        throw InputError(who + " must rank its direct path last");
      }
    } else {
      if (path.size() != 3) {
        throw InputError(who + " may only list two-hop paths before the "
                         "direct path");
      }
      mids.push_back(path[1]);
    }
  }
  return mids;
}

std::vector<bgp::Path> RankedPaths(const bgp::BgpInstance& inst, int u) {
  std::vector<bgp::Path> out;
  for (const auto& cls : inst.classes(u)) {
    for (int p : cls) out.push_back(inst.paths(u)[p]);
  }
  return out;
}

int64_t PathLength(const LengthTable& t, const bgp::Path& path) {
  int64_t len = 0;
  for (size_t k = 0; k + 1 < path.size(); ++k) {
    len += t.Length(path[k], path[k + 1]);
  }
  return len;
}

// Nodes whose incident lengths differ from the default, plus the owner,
// the destination and the listed paths.
std::set<int> SpecialNodes(const LengthTable& t, int dest,
                           const std::vector<bgp::Path>& listed) {
  std::set<int> out = {t.owner, dest};
  for (const auto& [edge, len] : t.explicit_lengths) {
    out.insert(edge.first);
    out.insert(edge.second);
  }
  for (const bgp::Path& p : listed) out.insert(p.begin(), p.end());
  return out;
}

// Checks that listed paths are strictly increasing in length and that
// every other simple path over `nodes` and `allowed` edges is longer than
// the last listed one.
RankingAudit CheckRanking(const LengthTable& t, int dest,
                          const std::vector<bgp::Path>& listed,
                          const std::vector<int>& nodes,
                          const std::function<bool(int, int)>& allowed,
                          const std::function<std::string(int)>& name) {
  RankingAudit audit;
  auto render = [&name](const bgp::Path& p) {
    std::string s;
    for (size_t k = 0; k < p.size(); ++k) s += (k ? "," : "") + name(p[k]);
    return s;
  };
  int64_t last = -1;
  for (size_t k = 0; k < listed.size(); ++k) {
    for (size_t e = 0; e + 1 < listed[k].size(); ++e) {
      if (!allowed(listed[k][e], listed[k][e + 1])) {
        audit.ok = false;
        audit.detail = "listed path " + render(listed[k]) +
                       " uses a forbidden edge";
        return audit;
      }
    }
    const int64_t len = PathLength(t, listed[k]);
    if (len <= last) {
      audit.ok = false;
      audit.detail = "path " + render(listed[k]) + " of '" + name(t.owner) +
                     "' is not longer than its predecessor";
      return audit;
    }
    last = len;
  }
  if (listed.empty()) return audit;
  const std::set<bgp::Path> listed_set(listed.begin(), listed.end());
  bgp::Path path = {t.owner};
  std::set<int> on_path = {t.owner};
  std::function<bool(int64_t)> dfs = [&](int64_t len) {
    const int x = path.back();
    if (x == dest) {
      if (listed_set.count(path) == 0 && len <= last) {
        audit.ok = false;
        audit.detail = "unlisted path " + render(path) + " of '" +
                       name(t.owner) + "' is not longer than the listed ones";
        return false;
      }
      return true;
    }
    for (int y : nodes) {
      if (on_path.count(y) > 0 || !allowed(x, y)) continue;
      path.push_back(y);
      on_path.insert(y);
      const bool ok = dfs(len + t.Length(x, y));
      on_path.erase(y);
      path.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  dfs(0);
  return audit;
}

}  // namespace

std::vector<LengthTable> ShortestPathLengths(const bgp::BgpInstance& inst) {
  const int d = inst.dest();
  std::vector<LengthTable> tables(inst.num_nodes());
  for (int u = 0; u < inst.num_nodes(); ++u) {
    LengthTable& t = tables[u];
    t.owner = u;
    if (u == d) continue;
    const std::vector<int> mids = TwoHopShape(inst, u);
    t.default_length = mids.empty() ? 1 : static_cast<int64_t>(mids.size()) + 2;
    for (size_t k = 0; k < mids.size(); ++k) {
      t.explicit_lengths[{u, mids[k]}] = static_cast<int64_t>(k) + 1;
      t.explicit_lengths[{mids[k], d}] = 1;
    }
  }
  return tables;
}

RankingAudit VerifyShortestPathRanking(
    const bgp::BgpInstance& inst, const std::vector<LengthTable>& tables) {
  const int d = inst.dest();
  auto name = [&inst](int v) { return inst.name(v); };
  auto any_edge = [](int x, int y) { return x != y; };
  for (int u = 0; u < inst.num_nodes(); ++u) {
    if (u == d) continue;
    const std::vector<bgp::Path> listed = RankedPaths(inst, u);
    const std::set<int> special = SpecialNodes(tables[u], d, listed);
    // Nodes outside `special` only touch default-length edges, so one
    // representative pair of them covers every path shape.
    std::vector<int> nodes(special.begin(), special.end());
    int reps = 0;
    for (int v = 0; v < inst.num_nodes() && reps < 2; ++v) {
      if (special.count(v) == 0) {
        nodes.push_back(v);
        ++reps;
      }
    }
    RankingAudit audit = CheckRanking(tables[u], d, listed, nodes, any_edge,
                                      name);
    if (!audit.ok) return audit;
  }
  return {};
}

MetricEncoding MetricLengths(const bgp::BgpInstance& inst) {
  const int n = inst.num_nodes();
  const int d = inst.dest();
  std::vector<std::vector<int>> mids(n);
  for (int u = 0; u < n; ++u) {
    if (u != d) mids[u] = TwoHopShape(inst, u);
  }
  std::vector<std::string> names = inst.names();
  std::vector<int> primed(n, -1);
  for (int u = 0; u < n; ++u) {
    if (u == d) continue;
    std::string name = inst.name(u) + "'";
    while (std::find(names.begin(), names.end(), name) != names.end()) {
      name += "'";
    }
    primed[u] = static_cast<int>(names.size());
    names.push_back(name);
  }
  const int total = static_cast<int>(names.size());
  std::vector<std::vector<bgp::Path>> paths(total);
  std::vector<std::vector<std::vector<int>>> classes(total);
  for (int u = 0; u < n; ++u) {
    if (u == d) continue;
    for (const bgp::Path& p : inst.paths(u)) {
      if (p.size() == 2) {
        paths[u].push_back({u, primed[u], d});
      } else {
        paths[u].push_back({u, p[1], primed[p[1]], d});
      }
    }
    classes[u] = inst.classes(u);
    paths[primed[u]].push_back({primed[u], d});
    classes[primed[u]] = {{0}};
  }
  MetricEncoding enc{bgp::BgpInstance(names, d, std::move(paths),
                                      std::move(classes)),
                     primed, std::vector<LengthTable>(total)};
  for (int v = 0; v < total; ++v) enc.tables[v].owner = v;
  for (int u = 0; u < n; ++u) {
    if (u == d) continue;
    LengthTable& t = enc.tables[u];
    const std::vector<int>& m = mids[u];
    auto p = [&primed](int x) { return primed[x]; };
    switch (m.size()) {
      case 0:
        t.default_length = 1;
        break;
      case 1:
        t.default_length = 3;
        t.SetSymmetric(u, m[0], 1);
        t.SetSymmetric(m[0], p(m[0]), 1);
        t.SetSymmetric(p(m[0]), d, 1);
        t.SetSymmetric(u, p(u), 2);
        t.SetSymmetric(p(u), d, 2);
        break;
      case 2:
        t.default_length = 5;
        t.SetSymmetric(u, m[0], 2);
        t.SetSymmetric(m[0], p(m[0]), 1);
        t.SetSymmetric(p(m[0]), d, 1);
        t.SetSymmetric(u, m[1], 2);
        t.SetSymmetric(m[1], p(m[1]), 2);
        t.SetSymmetric(p(m[1]), d, 1);
        t.SetSymmetric(u, p(u), 3);
        t.SetSymmetric(p(u), d, 3);
        t.SetSymmetric(m[0], m[1], 4);
        break;
      default:
        t.default_length = 5;
        t.SetSymmetric(u, m[0], 3);
        t.SetSymmetric(m[0], p(m[0]), 1);
        t.SetSymmetric(p(m[0]), d, 1);
        t.SetSymmetric(u, m[1], 3);
        t.SetSymmetric(m[1], p(m[1]), 2);
        t.SetSymmetric(p(m[1]), d, 1);
        t.SetSymmetric(u, m[2], 2);
        t.SetSymmetric(m[2], p(m[2]), 3);
        t.SetSymmetric(p(m[2]), d, 2);
        t.SetSymmetric(u, p(u), 4);
        t.SetSymmetric(p(u), d, 4);
        t.SetSymmetric(m[0], m[1], 6);
        t.SetSymmetric(m[0], m[2], 5);
        t.SetSymmetric(m[1], m[2], 5);
        break;
    }
  }
  return enc;
}

bool IsTemplateEdge(const MetricEncoding& enc, int x, int y) {
  const int n = static_cast<int>(enc.primed.size());
  const int d = enc.augmented.dest();
  if (x == y) return false;
  if (x < n && y < n) return x != d && y != d;
  if (x < n && y >= n) return enc.primed[x] == y;
  return x >= n && y == d;
}

MetricAudit VerifyMetricEncoding(const MetricEncoding& enc) {
  MetricAudit audit;
  const bgp::BgpInstance& inst = enc.augmented;
  const int n = static_cast<int>(enc.primed.size());
  const int d = inst.dest();
  auto name = [&inst](int v) { return inst.name(v); };
  auto allowed = [&enc](int x, int y) { return IsTemplateEdge(enc, x, y); };
  auto pair_ok = [&enc](int x, int y) {
    return IsTemplateEdge(enc, x, y) || IsTemplateEdge(enc, y, x);
  };
  for (int u = 0; u < inst.num_nodes(); ++u) {
    if (u == d) continue;
    const LengthTable& t = enc.tables[u];
    const std::vector<bgp::Path> listed = RankedPaths(inst, u);
    std::set<int> special = SpecialNodes(t, d, listed);
    // Representatives stand in for originals with default lengths only;
    // their primed copies come along.
    int reps = 0;
    for (int v = 0; v < n && reps < 2; ++v) {
      if (v == d || special.count(v) > 0) continue;
      special.insert(v);
      special.insert(enc.primed[v]);
      ++reps;
    }
    const std::vector<int> nodes(special.begin(), special.end());
    for (int x : nodes) {
      for (int y : nodes) {
        if (!pair_ok(x, y)) continue;
        if (t.Length(x, y) != t.Length(y, x)) {
          audit.triangle_ok = false;
          audit.detail = "lengths of '" + name(u) + "' are not symmetric on " +
                         name(x) + "," + name(y);
          return audit;
        }
        for (int z : nodes) {
          if (z == x || z == y || !pair_ok(x, z) || !pair_ok(z, y)) continue;
          if (t.Length(x, y) > t.Length(x, z) + t.Length(z, y)) {
            audit.triangle_ok = false;
            audit.detail = "triangle inequality fails for '" + name(u) +
                           "' on " + name(x) + "," + name(y) + " via " +
                           name(z);
            return audit;
          }
        }
      }
    }
    const RankingAudit ranking =
        CheckRanking(t, d, listed, nodes, allowed, name);
    if (!ranking.ok) {
      audit.ranking_ok = false;
      audit.detail = ranking.detail;
      return audit;
    }
  }
  return audit;
}

}  // namespace flowgames::reductions
