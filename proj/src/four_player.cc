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

#include "flowgames/four_player.h"

#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "flowgames/errors.h"

namespace flowgames::reductions {
namespace {

constexpr int kColors = 3;

class DegreeReducer {
 public:
  explicit DegreeReducer(GraphicalGame g) : g_(std::move(g)) {}

  GraphicalGame Run(std::set<std::pair<int, int>>* co_edges) {
    SplitFanOut();
    AddCoInfluencerEdges();
    *co_edges = co_edges_;
    return std::move(g_);
  }

 private:
  std::vector<int> Outputs(int x) const {
    std::vector<int> out;
    for (int z = 0; z < static_cast<int>(g_.nodes.size()); ++z) {
      const auto& in = g_.nodes[z].inputs;
      if (std::find(in.begin(), in.end(), x) != in.end()) out.push_back(z);
    }
    return out;
  }

  int Degree(int x) const {
    int co = 0;
    for (const auto& [a, b] : co_edges_) co += (a == x) + (b == x);
    return static_cast<int>(g_.nodes[x].inputs.size() + Outputs(x).size()) +
           co;
  }

  bool Adjacent(int x, int y) const {
    const auto& ix = g_.nodes[x].inputs;
    const auto& iy = g_.nodes[y].inputs;
    return std::find(ix.begin(), ix.end(), y) != ix.end() ||
           std::find(iy.begin(), iy.end(), x) != iy.end() ||
           co_edges_.count({std::min(x, y), std::max(x, y)}) > 0;
  }

  // New node whose bit copies `x`; it pays 1 for agreeing with x.
  int AddCopy(int x) {
    GraphicalNode c;
    c.id = g_.nodes[x].id + "~copy" + std::to_string(g_.nodes.size());
    c.inputs = {x};
    c.payoff[{0, 0}] = Rational(1);
    c.payoff[{1, 1}] = Rational(1);
    g_.nodes.push_back(std::move(c));
    return static_cast<int>(g_.nodes.size()) - 1;
  }

  void Redirect(int z, int from, int to) {
    for (int& x : g_.nodes[z].inputs) {
      if (x == from) x = to;
    }
  }

  void SplitFanOut() {
    bool again = true;
    while (again) {
      again = false;
      for (int x = 0; x < static_cast<int>(g_.nodes.size()); ++x) {
        const std::vector<int> outs = Outputs(x);
        const int in = static_cast<int>(g_.nodes[x].inputs.size());
        if (in + static_cast<int>(outs.size()) <= 3 || outs.size() < 2) {
          continue;
        }
        const int keep = 2 - in;
        const int c = AddCopy(x);
        for (size_t k = keep; k < outs.size(); ++k) Redirect(outs[k], x, c);
        again = true;
      }
    }
  }

  void AddCoInfluencerEdges() {
    const int original = static_cast<int>(g_.nodes.size());
    for (int z = 0; z < original; ++z) {
      if (g_.nodes[z].inputs.size() != 2) continue;
      int x = g_.nodes[z].inputs[0];
      int y = g_.nodes[z].inputs[1];
      if (Adjacent(x, y)) continue;
      if (Degree(x) >= 3) {
        const int c = AddCopy(x);
        Redirect(z, x, c);
        x = c;
      }
      if (Degree(y) >= 3) {
        const int c = AddCopy(y);
        Redirect(z, y, c);
        y = c;
      }
      co_edges_.insert({std::min(x, y), std::max(x, y)});
    }
  }

  GraphicalGame g_;
  std::set<std::pair<int, int>> co_edges_;
};

std::vector<int> ThreeColor(const std::vector<std::set<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> color(n, -1);
  std::function<bool(int)> assign = [&](int v) {
    if (v == n) return true;
    for (int c = 0; c < kColors; ++c) {
      bool clash = false;
      for (int u : adj[v]) {
        if (color[u] == c) {
          clash = true;
          break;
        }
      }
      if (clash) continue;
      color[v] = c;
      if (assign(v + 1)) return true;
    }
    color[v] = -1;
    return false;
  };
  if (!assign(0)) throw InputError("graphical game is not 3-colourable");
  return color;
}

}  // namespace

FourPlayerResult GraphicalToFourPlayer(const GraphicalGame& input) {
  const int n0 = static_cast<int>(input.nodes.size());
  if (n0 == 0) throw InputError("graphical game has no nodes");
  for (int v = 0; v < n0; ++v) {
    const auto& in = input.nodes[v].inputs;
    if (in.size() > 2) {
      throw InputError("node '" + input.nodes[v].id +
                       "' has more than two inputs");
    }
    for (int x : in) {
      if (x < 0 || x >= n0 || x == v) {
        throw InputError("node '" + input.nodes[v].id +
                         "' has an invalid input");
      }
    }
    if (in.size() == 2 && in[0] == in[1]) {
      throw InputError("node '" + input.nodes[v].id +
                       "' lists the same input twice");
    }
  }

  FourPlayerResult result;
  std::set<std::pair<int, int>> co_edges;
  result.reduced = DegreeReducer(input).Run(&co_edges);
  const int n = static_cast<int>(result.reduced.nodes.size());
  std::vector<std::set<int>> adj(n);
  for (int z = 0; z < n; ++z) {
    for (int x : result.reduced.nodes[z].inputs) {
      adj[z].insert(x);
      adj[x].insert(z);
    }
  }
  for (const auto& [a, b] : co_edges) {
    adj[a].insert(b);
    adj[b].insert(a);
  }
  result.color = ThreeColor(adj);

  result.slot.assign(kColors, {});
  for (int v = 0; v < n; ++v) result.slot[result.color[v]].push_back(v);
  int k = 1;
  for (const auto& s : result.slot) k = std::max(k, static_cast<int>(s.size()));
  for (auto& s : result.slot) s.resize(k, -1);
  result.pairs_per_player = k;

  std::vector<std::vector<std::string>> strategies(kColors + 1);
  for (int c = 0; c < kColors; ++c) {
    for (int s = 0; s < k; ++s) {
      const int v = result.slot[c][s];
      const std::string base =
          v >= 0 ? result.reduced.nodes[v].id : "pad" + std::to_string(s);
      strategies[c].push_back(base + ":0");
      strategies[c].push_back(base + ":1");
    }
  }
  for (int s = 0; s < k; ++s) strategies[kColors].push_back("d" + std::to_string(s));
  result.game = personalized::MatrixGame({"P1", "P2", "P3", "P4"}, strategies);
  personalized::MatrixGame& game = result.game;

  Rational max_payoff(0);
  for (const GraphicalNode& node : result.reduced.nodes) {
    for (const auto& [key, x] : node.payoff) max_payoff = Max(max_payoff, x);
  }
  result.big_m = max_payoff + Rational(1);

  for (int64_t e = 0; e < game.num_hyperedges(); ++e) {
    const std::vector<int> edge = game.Decode(e);
    const int s4 = edge[kColors];
    for (int c = 0; c < kColors; ++c) {
      const int s = edge[c] / 2;
      Rational value(0);
      const int v = result.slot[c][s];
      if (v >= 0) {
        const GraphicalNode& node = result.reduced.nodes[v];
        std::vector<int> key = {edge[c] % 2};
        bool matched = true;
        for (int x : node.inputs) {
          const int cx = result.color[x];
          if (result.slot[cx][edge[cx] / 2] != x) {
            matched = false;
            break;
          }
          key.push_back(edge[cx] % 2);
        }
        if (matched) {
          auto it = node.payoff.find(key);
          if (it != node.payoff.end()) value = it->second;
        }
      }
      if (s == s4) value += result.big_m;
      if (!value.is_zero()) game.set_utility(c, edge, value);
    }
    if ((edge[0] / 2 + 1) % k == s4) game.set_utility(kColors, edge, result.big_m);
  }

  for (int s = 0; s < k; ++s) {
    for (int c = 0; c < kColors; ++c) {
      result.equations.push_back({{{c, 2 * s}, {c, 2 * s + 1}}, {{kColors, s}}});
    }
    result.equations.push_back(
        {{{kColors, (s + 1) % k}}, {{0, 2 * s}, {0, 2 * s + 1}}});
  }
  return result;
}

bool SatisfiesMassEquations(const FourPlayerResult& result,
                            const personalized::MixProfile& p) {
  for (const MassEquation& eq : result.equations) {
    Rational lhs(0), rhs(0);
    for (const auto& [i, s] : eq.lhs) lhs += p[i][s];
    for (const auto& [i, s] : eq.rhs) rhs += p[i][s];
    if (lhs != rhs) return false;
  }
  return true;
}

}  // namespace flowgames::reductions
