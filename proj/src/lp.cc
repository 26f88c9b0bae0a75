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

#include "flowgames/lp.h"

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "flowgames/errors.h"

namespace flowgames {

std::string ToString(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal:
      return "optimal";
    case LpStatus::kInfeasible:
      return "infeasible";
    case LpStatus::kUnbounded:
      return "unbounded";
  }
  return "unknown";
}

int LinearProgram::AddVariable(std::string name, bool nonnegative) {
  variables_.push_back({std::move(name), nonnegative});
  objective_.emplace_back(0);
  return static_cast<int>(variables_.size()) - 1;
}

void LinearProgram::SetObjectiveCoefficient(int var,
                                            const Rational& coefficient) {
  if (var < 0 || var >= num_variables()) {
    throw InputError("objective references undeclared variable " +
                     std::to_string(var));
  }
  objective_[var] = coefficient;
}

void LinearProgram::AddConstraint(std::vector<LinearTerm> terms,
                                  LpRelation relation, Rational rhs) {
  constraints_.push_back({std::move(terms), relation, std::move(rhs)});
}

namespace {

// Row-major simplex tableau in canonical form. The last column holds the
// right-hand side; `cost` is the reduced-cost row of the current phase.
class Tableau {
 public:
  Tableau(int rows, int cols)
      : a_(rows, std::vector<mpq_class>(cols + 1)), basis_(rows, -1),
        cols_(cols) {}

  mpq_class& at(int r, int c) { return a_[r][c]; }
  mpq_class& rhs(int r) { return a_[r][cols_]; }
  int rows() const { return static_cast<int>(a_.size()); }
  int cols() const { return cols_; }
  std::vector<int>& basis() { return basis_; }

  void RemoveRow(int r) {
    a_.erase(a_.begin() + r);
    basis_.erase(basis_.begin() + r);
  }

  // Sets the reduced-cost row for "maximize cost . x" given the basis.
  void PriceOut(const std::vector<mpq_class>& cost) {
    cost_.assign(cols_ + 1, 0);
    for (int j = 0; j < cols_; ++j) cost_[j] = cost[j];
    mpq_class tmp;
    for (int i = 0; i < rows(); ++i) {
      const mpq_class& cb = cost[basis_[i]];
      if (sgn(cb) == 0) continue;
      for (int j = 0; j <= cols_; ++j) {
        if (sgn(a_[i][j]) == 0) continue;
        mpq_mul(tmp.get_mpq_t(), cb.get_mpq_t(), a_[i][j].get_mpq_t());
        mpq_sub(cost_[j].get_mpq_t(), cost_[j].get_mpq_t(), tmp.get_mpq_t());
      }
    }
  }

  void Pivot(int r, int c) {
    std::vector<mpq_class>& prow = a_[r];
    const mpq_class inv = 1 / prow[c];
    std::vector<int> nz;
    for (int j = 0; j <= cols_; ++j) {
      if (sgn(prow[j]) == 0) continue;
      mpq_mul(prow[j].get_mpq_t(), prow[j].get_mpq_t(), inv.get_mpq_t());
      nz.push_back(j);
    }
    mpq_class factor, tmp;
    auto eliminate = [&](std::vector<mpq_class>& row) {
      if (sgn(row[c]) == 0) return;
      factor = row[c];
      for (int j : nz) {
        mpq_mul(tmp.get_mpq_t(), factor.get_mpq_t(), prow[j].get_mpq_t());
        mpq_sub(row[j].get_mpq_t(), row[j].get_mpq_t(), tmp.get_mpq_t());
      }
    };
    for (int i = 0; i < rows(); ++i) {
      if (i != r) eliminate(a_[i]);
    }
    eliminate(cost_);
    basis_[r] = c;
  }

  // Bland's rule. Returns false when the program is unbounded.
  bool Optimize(const std::vector<bool>& allowed, long* pivots) {
    while (true) {
      int enter = -1;
      for (int j = 0; j < cols_; ++j) {
        if (allowed[j] && sgn(cost_[j]) > 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return true;
      int leave = -1;
      mpq_class best, ratio;
      for (int i = 0; i < rows(); ++i) {
        if (sgn(a_[i][enter]) <= 0) continue;
        ratio = a_[i][cols_] / a_[i][enter];
        if (leave < 0 || ratio < best ||
            (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return false;
      Pivot(leave, enter);
      ++*pivots;
    }
  }

 private:
  std::vector<std::vector<mpq_class>> a_;
  std::vector<int> basis_;
  std::vector<mpq_class> cost_;
  int cols_;
};

}  // namespace

LpResult SolveLp(const LinearProgram& lp) {
  const int n = lp.num_variables();
  for (const LpConstraint& con : lp.constraints()) {
    for (const auto& [var, coef] : con.terms) {
      if (var < 0 || var >= n) {
        throw InputError("constraint references undeclared variable " +
                         std::to_string(var));
      }
    }
  }

  // Column layout: structural columns (free variables split in two), then
  // one slack or surplus column per inequality, then artificials.
  std::vector<int> plus_col(n), minus_col(n, -1);
  int cols = 0;
  for (int v = 0; v < n; ++v) {
    plus_col[v] = cols++;
    if (!lp.variables()[v].nonnegative) minus_col[v] = cols++;
  }
  const int structural = cols;
  const int m = static_cast<int>(lp.constraints().size());
  std::vector<LpRelation> rel(m);
  std::vector<bool> flip(m, false);
  for (int i = 0; i < m; ++i) {
    const LpConstraint& con = lp.constraints()[i];
    rel[i] = con.relation;
    if (con.rhs.sign() < 0) {
      flip[i] = true;
      if (rel[i] == LpRelation::kLessEqual) {
        rel[i] = LpRelation::kGreaterEqual;
      } else if (rel[i] == LpRelation::kGreaterEqual) {
        rel[i] = LpRelation::kLessEqual;
      }
    }
  }
  std::vector<int> slack_col(m, -1), art_col(m, -1);
  for (int i = 0; i < m; ++i) {
    if (rel[i] != LpRelation::kEqual) slack_col[i] = cols++;
  }
  const int first_artificial = cols;
  for (int i = 0; i < m; ++i) {
    if (rel[i] != LpRelation::kLessEqual) art_col[i] = cols++;
  }

  Tableau t(m, cols);
  for (int i = 0; i < m; ++i) {
    const LpConstraint& con = lp.constraints()[i];
    const int s = flip[i] ? -1 : 1;
    for (const auto& [var, coef] : con.terms) {
      t.at(i, plus_col[var]) += s * coef.get();
      if (minus_col[var] >= 0) t.at(i, minus_col[var]) -= s * coef.get();
    }
    t.rhs(i) = s * con.rhs.get();
    if (rel[i] == LpRelation::kLessEqual) {
      t.at(i, slack_col[i]) = 1;
      t.basis()[i] = slack_col[i];
    } else {
      if (rel[i] == LpRelation::kGreaterEqual) t.at(i, slack_col[i]) = -1;
      t.at(i, art_col[i]) = 1;
      t.basis()[i] = art_col[i];
    }
  }

  LpResult result;
  std::vector<bool> allowed(cols, true);

  if (first_artificial < cols) {
    std::vector<mpq_class> phase1(cols, 0);
    for (int j = first_artificial; j < cols; ++j) phase1[j] = -1;
    t.PriceOut(phase1);
    t.Optimize(allowed, &result.pivots);
    mpq_class infeasibility = 0;
    for (int i = 0; i < t.rows(); ++i) {
      if (t.basis()[i] >= first_artificial) infeasibility += t.rhs(i);
    }
    if (sgn(infeasibility) > 0) {
      result.status = LpStatus::kInfeasible;
      return result;
    }
    // Pivot remaining (zero-valued) artificials out of the basis; rows with
    // no structural entry left are redundant and get dropped.
    for (int i = t.rows() - 1; i >= 0; --i) {
      if (t.basis()[i] < first_artificial) continue;
      int col = -1;
      for (int j = 0; j < first_artificial; ++j) {
        if (sgn(t.at(i, j)) != 0) {
          col = j;
          break;
        }
      }
      if (col >= 0) {
        t.Pivot(i, col);
        ++result.pivots;
      } else {
        t.RemoveRow(i);
      }
    }
    for (int j = first_artificial; j < cols; ++j) allowed[j] = false;
  }

  std::vector<mpq_class> phase2(cols, 0);
  const int dir = lp.sense() == LpSense::kMaximize ? 1 : -1;
  for (int v = 0; v < n; ++v) {
    const mpq_class c = dir * lp.objective()[v].get();
    phase2[plus_col[v]] = c;
    if (minus_col[v] >= 0) phase2[minus_col[v]] = -c;
  }
  t.PriceOut(phase2);
  if (!t.Optimize(allowed, &result.pivots)) {
    result.status = LpStatus::kUnbounded;
    return result;
  }

  std::vector<mpq_class> col_value(structural, 0);
  for (int i = 0; i < t.rows(); ++i) {
    if (t.basis()[i] < structural) col_value[t.basis()[i]] = t.rhs(i);
  }
  result.status = LpStatus::kOptimal;
  result.values.resize(n);
  Rational objective(0);
  for (int v = 0; v < n; ++v) {
    mpq_class x = col_value[plus_col[v]];
    if (minus_col[v] >= 0) x -= col_value[minus_col[v]];
    result.values[v] = Rational(x);
    objective += lp.objective()[v] * result.values[v];
  }
  result.objective = objective;
  return result;
}

}  // namespace flowgames
