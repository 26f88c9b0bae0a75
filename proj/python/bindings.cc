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

// Python bindings. Documents cross the boundary as JSON text; the Python
// package wraps these functions to take and return plain objects.

#include <map>
#include <optional>
#include <string>

#include "pybind11/pybind11.h"
#include "pybind11/stl.h"

#include "flowgames/api.h"
#include "flowgames/errors.h"
#include "flowgames/io.h"

namespace py = pybind11;

namespace flowgames {
namespace {

using io::Json;

Json Parse(const std::string& text, const char* what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string(what) + ": " + e.what());
  }
}

api::Options MakeOptions(const std::optional<std::string>& eps, int max_rounds,
                         uint64_t seed, bool shuffle, long max_lps) {
  api::Options o;
  if (eps) o.eps = Rational::Parse(*eps);
  o.max_rounds = max_rounds;
  o.seed = seed;
  o.shuffle = shuffle;
  o.max_lps = max_lps;
  return o;
}

std::string Verify(const std::string& game, const std::string& profile,
                   const std::optional<std::string>& eps) {
  return io::Dump(api::Verify(Parse(game, "game"), Parse(profile, "profile"),
                              MakeOptions(eps, 1000, 0, false, 20000)));
}

std::string Solve(const std::string& game, const std::string& method,
                  int max_rounds, uint64_t seed, bool shuffle, long max_lps) {
  return io::Dump(api::Solve(Parse(game, "game"), method,
                             MakeOptions(std::nullopt, max_rounds, seed,
                                         shuffle, max_lps)));
}

std::string Dynamics(const std::string& game,
                     const std::optional<std::string>& init, int max_rounds,
                     uint64_t seed, bool shuffle) {
  std::optional<Json> start;
  if (init) start = Parse(*init, "init");
  return io::Dump(api::Dynamics(
      Parse(game, "game"), start ? &*start : nullptr,
      MakeOptions(std::nullopt, max_rounds, seed, shuffle, 20000)));
}

std::string BestResponse(const std::string& game, const std::string& profile,
                         const std::string& player) {
  return io::Dump(
      api::BestResponse(Parse(game, "game"), Parse(profile, "profile"), player));
}

std::string Reduce(const std::string& game, const std::string& to,
                   const std::optional<std::string>& profile) {
  std::optional<Json> p;
  if (profile) p = Parse(*profile, "profile");
  return io::Dump(api::Reduce(Parse(game, "game"), to, p ? &*p : nullptr));
}

std::string CompileCircuit(const std::string& circuit,
                           const std::optional<std::map<std::string, std::string>>& pins) {
  std::map<std::string, Rational> values;
  if (pins) {
    for (const auto& [wire, text] : *pins) values[wire] = Rational::Parse(text);
  }
  return io::Dump(api::CompileCircuit(Parse(circuit, "circuit"),
                                      pins ? &values : nullptr));
}

std::string Report(const std::string& game,
                   const std::optional<std::string>& profile) {
  std::optional<Json> p;
  if (profile) p = Parse(*profile, "profile");
  return io::Dump(api::Report(Parse(game, "game"), p ? &*p : nullptr));
}

}  // namespace
}  // namespace flowgames

PYBIND11_MODULE(_flowgames, m) {
  using namespace flowgames;
  m.doc() = "Exact solvers and verifiers for flow games (JSON in, JSON out)";
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError",
                                            PyExc_RuntimeError);
  py::register_exception<AnalysisError>(m, "AnalysisError", PyExc_RuntimeError);

  m.def("verify", &Verify, py::arg("game"), py::arg("profile"),
        py::arg("eps") = py::none());
  m.def("solve", &Solve, py::arg("game"), py::arg("method"),
        py::arg("max_rounds") = 1000, py::arg("seed") = 0,
        py::arg("shuffle") = false, py::arg("max_lps") = 20000);
  m.def("dynamics", &Dynamics, py::arg("game"), py::arg("init") = py::none(),
        py::arg("max_rounds") = 1000, py::arg("seed") = 0,
        py::arg("shuffle") = false);
  m.def("best_response", &BestResponse, py::arg("game"), py::arg("profile"),
        py::arg("player"));
  m.def("reduce", &Reduce, py::arg("game"), py::arg("to"),
        py::arg("profile") = py::none());
  m.def("compile_circuit", &CompileCircuit, py::arg("circuit"),
        py::arg("pins") = py::none());
  m.def("report", &Report, py::arg("game"), py::arg("profile") = py::none());
}
