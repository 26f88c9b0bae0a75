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

#ifndef FLOWGAMES_IO_H_
#define FLOWGAMES_IO_H_

#include <string>

#include "json.hpp"

#include "flowgames/bbc.h"
#include "flowgames/bgp.h"
#include "flowgames/four_player.h"
#include "flowgames/gadgets.h"
#include "flowgames/metric_lengths.h"
#include "flowgames/personalized.h"
#include "flowgames/pref_game.h"
#include "flowgames/rational.h"
#include "flowgames/reductions.h"

// File formats. Rationals are written as "p/q" strings; integers are
// accepted on input. Parse errors are InputErrors whose message starts
// with the JSON pointer of the offending value, e.g. "/prefs/x/0: ...".
namespace flowgames::io {

using Json = nlohmann::ordered_json;

Json ReadJsonFile(const std::string& path);
// Two-space indentation and a trailing newline.
void WriteJsonFile(const std::string& path, const Json& value);
std::string Dump(const Json& value);

Rational ParseRational(const Json& value, const std::string& where);
Json ToJson(const Rational& value);

// "preference", "bgp", "bbc", "matrix", "graphical" or "circuit". Circuit
// files may omit the type.
std::string GameType(const Json& doc);

pref::PreferenceGame ParsePreferenceGame(const Json& doc);
Json ToJson(const pref::PreferenceGame& game);

bgp::BgpInstance ParseBgp(const Json& doc);
Json ToJson(const bgp::BgpInstance& inst);

bbc::BbcInstance ParseBbc(const Json& doc);
Json ToJson(const bbc::BbcInstance& inst);

personalized::MatrixGame ParseMatrix(const Json& doc);
Json ToJson(const personalized::MatrixGame& game);

// {"type":"graphical","nodes":[{"id":"a","inputs":["b"],
//   "payoff":{"0,1":"1",...}}]}; payoff keys are the node's own bit
// followed by its inputs' bits.
reductions::GraphicalGame ParseGraphical(const Json& doc);
Json ToJson(const reductions::GraphicalGame& game);

gadgets::Circuit ParseCircuit(const Json& doc);

// {"weights":{player:{strategy:"p/q"}}}; zero weights are omitted.
reductions::NamedSolution ParseWeights(const Json& doc);
Json WeightsJson(const reductions::NamedSolution& solution);

Json ToJson(const reductions::SolutionMap& map);
Json ToJson(const reductions::MetricEncoding& enc);

}  // namespace flowgames::io

#endif  // FLOWGAMES_IO_H_
