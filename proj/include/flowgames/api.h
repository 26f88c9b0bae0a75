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

#ifndef FLOWGAMES_API_H_
#define FLOWGAMES_API_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "flowgames/io.h"
#include "flowgames/rational.h"

// JSON-in, JSON-out entry points shared by the command line tool and the
// Python module. Every function dispatches on the document's "type" and
// throws InputError for unsupported combinations.
namespace flowgames::api {

using Json = io::Json;

struct Options {
  std::optional<Rational> eps;  // Verify approximately (preference games).
  int max_rounds = 1000;
  uint64_t seed = 0;
  bool shuffle = false;  // Seeded random player order for dynamics.
  long max_lps = 20000;
};

// {"type", "equilibrium", "feasible", "witnesses", ...}.
Json Verify(const Json& game, const Json& profile, const Options& options = {});

// method is "dynamics", "cycle" or "enumerate". The result holds "found",
// "weights" (when found) and method-specific details.
Json Solve(const Json& game, const std::string& method,
           const Options& options = {});

// Best-response dynamics from `init` (or the default start when null).
Json Dynamics(const Json& game, const Json* init, const Options& options = {});

Json BestResponse(const Json& game, const Json& profile,
                  const std::string& player);

// to is "bgp", "bbc", "matrix", "metric" or "4player". With a profile the
// bundle also carries its forward image under "mapped".
Json Reduce(const Json& game, const std::string& to,
            const Json* profile = nullptr);

// A preference-game document with "inputs" and "ports" added. With pins
// the exact fixpoint is evaluated and every port's value is reported.
Json CompileCircuit(const Json& circuit,
                    const std::map<std::string, Rational>* pins = nullptr);

// Sizes of the game, plus the verification report when a profile is given.
Json Report(const Json& game, const Json* profile = nullptr);

// Plain-text rendering of any report above.
std::string RenderText(const Json& report);

}  // namespace flowgames::api

#endif  // FLOWGAMES_API_H_
