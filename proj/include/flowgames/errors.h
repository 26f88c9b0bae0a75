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

#ifndef FLOWGAMES_ERRORS_H_
#define FLOWGAMES_ERRORS_H_

#include <stdexcept>
#include <string>

namespace flowgames {

// Raised for malformed or inconsistent input: bad JSON shapes, unknown ids,
// violated instance invariants. The CLI maps it to exit code 2.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// Raised when an operation is called outside its documented precondition,
// for example decomposing a profile that is not an equilibrium.
class PreconditionError : public std::logic_error {
 public:
  explicit PreconditionError(const std::string& what)
      : std::logic_error(what) {}
};

// Raised when a fixpoint evaluation meets a structure it cannot solve.
class AnalysisError : public std::runtime_error {
 public:
  explicit AnalysisError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace flowgames

#endif  // FLOWGAMES_ERRORS_H_
