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

#include "flowgames/pref_game.h"

#include <string>
#include <utility>
#include <vector>

#include "flowgames/errors.h"

namespace flowgames::pref {

PreferenceGame::PreferenceGame(std::vector<std::string> players,
                               std::vector<TieClasses> prefs)
    : players_(std::move(players)), prefs_(std::move(prefs)) {
  const int n = num_players();
  if (static_cast<int>(prefs_.size()) != n) {
    throw InputError("preference lists do not match the player count");
  }
  for (int i = 0; i < n; ++i) {
    if (!index_.emplace(players_[i], i).second) {
      throw InputError("duplicate player '" + players_[i] + "'");
    }
  }
  rank_.assign(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i) {
    const int bottom = static_cast<int>(prefs_[i].size());
    for (int c = 0; c < bottom; ++c) {
      if (prefs_[i][c].empty()) {
        throw InputError("player '" + players_[i] + "' has an empty class");
      }
      for (int j : prefs_[i][c]) {
        if (j < 0 || j >= n) {
          throw InputError("player '" + players_[i] +
                           "' ranks an unknown player");
        }
        if (rank_[i][j] >= 0) {
          throw InputError("player '" + players_[i] + "' ranks '" +
                           players_[j] + "' twice");
        }
        rank_[i][j] = c;
      }
    }
    if (rank_[i][i] < 0) {
      throw InputError("player '" + players_[i] +
                       "' does not rank itself");
    }
    for (int j = 0; j < n; ++j) {
      if (rank_[i][j] < 0) rank_[i][j] = bottom;
    }
  }
}

int PreferenceGame::index(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw InputError("unknown player '" + name + "'");
  return it->second;
}

std::optional<int> PreferenceGame::find(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<int> PreferenceGame::members(int i, int c) const {
  if (c < static_cast<int>(prefs_[i].size())) return prefs_[i][c];
  std::vector<int> out;
  for (int j = 0; j < num_players(); ++j) {
    if (rank_[i][j] == c) out.push_back(j);
  }
  return out;
}

Profile ZeroProfile(int n) {
  return Profile(n, std::vector<Rational>(n, Rational(0)));
}

Profile SelfProfile(int n) {
  Profile w = ZeroProfile(n);
  for (int i = 0; i < n; ++i) w[i][i] = Rational(1);
  return w;
}

FeasibilityReport CheckFeasible(const PreferenceGame& game,
                                const Profile& w) {
  FeasibilityReport report;
  const int n = game.num_players();
  if (static_cast<int>(w.size()) != n) {
    throw InputError("profile has the wrong number of rows");
  }
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(w[i].size()) != n) {
      throw InputError("profile row has the wrong length");
    }
    Rational sum(0);
    for (int j = 0; j < n; ++j) {
      sum += w[i][j];
      if (w[i][j].sign() < 0) {
        report.violations.push_back(
            {ViolationKind::kNegative, i, j, -w[i][j]});
      }
      if (j != i && w[i][j] > w[j][j]) {
        report.violations.push_back(
            {ViolationKind::kCapacity, i, j, w[i][j] - w[j][j]});
      }
    }
    if (sum != Rational(1)) {
      report.violations.push_back(
          {ViolationKind::kSum, i, i, sum - Rational(1)});
    }
  }
  report.ok = report.violations.empty();
  return report;
}

std::vector<Rational> BestResponse(const PreferenceGame& game,
                                   const Profile& w, int i) {
  const int n = game.num_players();
  std::vector<Rational> out(n, Rational(0));
  Rational remaining(1);
  for (int c = 0; c < game.num_ranks(i) && remaining.sign() > 0; ++c) {
    const std::vector<int> group = game.members(i, c);
    Rational total(0);
    for (int j : group) total += (j == i) ? Rational(1) : w[j][j];
    if (total.sign() <= 0) continue;
    const Rational take = Min(remaining, total);
    for (int j : group) {
      const Rational cap = (j == i) ? Rational(1) : w[j][j];
      out[j] = take * cap / total;
    }
    remaining -= take;
  }
  return out;
}

std::vector<Rational> RankSums(const PreferenceGame& game,
                               const std::vector<Rational>& row, int i) {
  std::vector<Rational> sums(game.num_ranks(i), Rational(0));
  for (int j = 0; j < game.num_players(); ++j) {
    sums[game.rank(i, j)] += row[j];
  }
  return sums;
}

namespace {

// First rank at which the prefix sums of row i and its best response differ,
// or -1 when they agree everywhere.
int FirstDifferingRank(const PreferenceGame& game, const Profile& w, int i) {
  const std::vector<Rational> have = RankSums(game, w[i], i);
  const std::vector<Rational> want =
      RankSums(game, BestResponse(game, w, i), i);
  Rational a(0), b(0);
  for (int c = 0; c < static_cast<int>(have.size()); ++c) {
    a += have[c];
    b += want[c];
    if (a != b) return c;
  }
  return -1;
}

}  // namespace

bool IsBestResponse(const PreferenceGame& game, const Profile& w, int i) {
  return FirstDifferingRank(game, w, i) < 0;
}

EquilibriumReport IsEquilibrium(const PreferenceGame& game, const Profile& w) {
  EquilibriumReport report;
  const FeasibilityReport feas = CheckFeasible(game, w);
  if (!feas.ok) {
    report.ok = false;
    report.feasible = false;
    report.witness_player = feas.violations.front().player;
    return report;
  }
  for (int i = 0; i < game.num_players(); ++i) {
    const int c = FirstDifferingRank(game, w, i);
    if (c >= 0) {
      report.ok = false;
      report.witness_player = i;
      report.witness_rank = c;
      return report;
    }
  }
  return report;
}

EpsReport IsEpsEquilibrium(const PreferenceGame& game, const Profile& w,
                           const Rational& eps,
                           const std::vector<int>* subset) {
  const int n = game.num_players();
  std::vector<int> players;
  if (subset != nullptr) {
    players = *subset;
  } else {
    for (int i = 0; i < n; ++i) players.push_back(i);
  }
  auto fail = [](char cond, int i, int j) {
    EpsReport r;
    r.ok = false;
    r.condition = cond;
    r.player = i;
    r.other = j;
    return r;
  };
  const Rational one(1);
  for (int i : players) {
    Rational sum(0);
    for (int j = 0; j < n; ++j) {
      if (w[i][j].sign() < 0) return fail('a', i, j);
      sum += w[i][j];
    }
    if (sum != one) return fail('a', i, i);
    for (int j = 0; j < n; ++j) {
      if (j != i && w[i][j] > w[j][j] + eps) return fail('b', i, j);
    }
    const std::vector<Rational> sums = RankSums(game, w[i], i);
    std::vector<Rational> prefix(sums.size());
    Rational acc(0);
    for (size_t c = 0; c < sums.size(); ++c) {
      acc += sums[c];
      prefix[c] = acc;
    }
    for (int j = 0; j < n; ++j) {
      if (prefix[game.rank(i, j)] >= one - eps) continue;
      const Rational& cap = (j == i) ? one : w[j][j];
      if (Abs(w[i][j] - cap) <= eps) continue;
      return fail('c', i, j);
    }
  }
  return EpsReport{};
}

DynamicsResult BestResponseDynamics(const PreferenceGame& game,
                                    const Profile& init,
                                    const std::vector<int>& order,
                                    int max_rounds) {
  const int n = game.num_players();
  if (max_rounds < 1) throw InputError("max_rounds must be at least 1");
  std::vector<int> seq = order;
  if (seq.empty()) {
    for (int i = 0; i < n; ++i) seq.push_back(i);
  }
  std::vector<bool> seen(n, false);
  if (static_cast<int>(seq.size()) != n) {
    throw InputError("dynamics order is not a permutation of the players");
  }
  for (int i : seq) {
    if (i < 0 || i >= n || seen[i]) {
      throw InputError("dynamics order is not a permutation of the players");
    }
    seen[i] = true;
  }
  DynamicsResult result;
  result.profile = init;
  while (result.rounds < max_rounds) {
    ++result.rounds;
    bool changed = false;
    for (int i : seq) {
      std::vector<Rational> br = BestResponse(game, result.profile, i);
      if (br != result.profile[i]) {
        result.profile[i] = std::move(br);
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

}  // namespace flowgames::pref
