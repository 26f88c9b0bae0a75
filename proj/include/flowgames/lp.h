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

#ifndef FLOWGAMES_LP_H_
#define FLOWGAMES_LP_H_

#include <string>
#include <utility>
#include <vector>

#include "flowgames/rational.h"

namespace flowgames {

enum class LpSense { kMaximize, kMinimize };
enum class LpRelation { kLessEqual, kEqual, kGreaterEqual };
enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

std::string ToString(LpStatus status);

// A linear term: (variable index, coefficient).
using LinearTerm = std::pair<int, Rational>;

struct LpConstraint {
  std::vector<LinearTerm> terms;
  LpRelation relation = LpRelation::kLessEqual;
  Rational rhs;
};

struct LpVariable {
  std::string name;
  bool nonnegative = true;
};

// Dense-tableau description of a linear program. Variables are created
// through AddVariable and referenced by the returned index afterwards.
class LinearProgram {
 public:
  explicit LinearProgram(LpSense sense = LpSense::kMaximize) : sense_(sense) {}

  int AddVariable(std::string name, bool nonnegative = true);
  void SetObjectiveCoefficient(int var, const Rational& coefficient);
  void AddConstraint(std::vector<LinearTerm> terms, LpRelation relation,
                     Rational rhs);

  void set_sense(LpSense sense) { sense_ = sense; }
  LpSense sense() const { return sense_; }
  int num_variables() const { return static_cast<int>(variables_.size()); }
  const std::vector<LpVariable>& variables() const { return variables_; }
  const std::vector<LpConstraint>& constraints() const { return constraints_; }
  const std::vector<Rational>& objective() const { return objective_; }

 private:
  LpSense sense_;
  std::vector<LpVariable> variables_;
  std::vector<Rational> objective_;
  std::vector<LpConstraint> constraints_;
};

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  Rational objective;            // Meaningful only when optimal.
  std::vector<Rational> values;  // One entry per declared variable.
  long pivots = 0;
};

// Exact two-phase simplex with Bland's rule, so it always terminates.
// Throws InputError when a constraint or the objective references an
// undeclared variable.
LpResult SolveLp(const LinearProgram& lp);

}  // namespace flowgames

#endif  // FLOWGAMES_LP_H_
