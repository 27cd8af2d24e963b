// Copyright 2026 The corrplan Authors.
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

#include "corrplan/simplex.h"

#include <vector>

#include "json.hpp"

namespace corrplan {
namespace {

// Dense standard-form tableau. Columns: one per nonnegative structural
// variable, two (positive/negative part) per free variable, then slack and
// artificial columns. Rows are normalized to nonnegative right-hand sides.
class Tableau {
 public:
  explicit Tableau(const LinearSystem& system) : system_(system) {
    const int n = system.num_variables();
    pos_col_.assign(n, -1);
    neg_col_.assign(n, -1);
    for (int j = 0; j < n; ++j) {
      pos_col_[j] = num_cols_++;
      if (!system.nonnegative(j)) neg_col_[j] = num_cols_++;
    }
    structural_cols_ = num_cols_;

    const auto& constraints = system.constraints();
    rows_.reserve(constraints.size());
    for (const auto& c : constraints) {
      Row row;
      row.coef.assign(num_cols_, Rational(0));
      for (const auto& [var, coef] : c.expr.terms) {
        row.coef[pos_col_[var]] += coef;
        if (neg_col_[var] >= 0) row.coef[neg_col_[var]] -= coef;
      }
      row.rhs = c.rhs;
      Relation rel = c.relation;
      if (row.rhs < 0) {
        for (auto& x : row.coef) x = -x;
        row.rhs = -row.rhs;
        rel = rel == Relation::kLe   ? Relation::kGe
              : rel == Relation::kGe ? Relation::kLe
                                     : Relation::kEq;
      }
      row.relation = rel;
      rows_.push_back(std::move(row));
    }

    // Slack and artificial columns; initial basis.
    for (auto& row : rows_) {
      if (row.relation == Relation::kLe) {
        row.slack_col = num_cols_++;
      } else if (row.relation == Relation::kGe) {
        row.surplus_col = num_cols_++;
      }
    }
    for (auto& row : rows_) {
      if (row.relation != Relation::kLe) {
        row.artificial_col = num_cols_++;
        first_artificial_ = first_artificial_ < 0
                                ? row.artificial_col
                                : std::min(first_artificial_,
                                           row.artificial_col);
      }
    }
    for (auto& row : rows_) {
      row.coef.resize(num_cols_, Rational(0));
      if (row.slack_col >= 0) {
        row.coef[row.slack_col] = 1;
        row.basis = row.slack_col;
      }
      if (row.surplus_col >= 0) row.coef[row.surplus_col] = -1;
      if (row.artificial_col >= 0) {
        row.coef[row.artificial_col] = 1;
        row.basis = row.artificial_col;
      }
    }
    banned_.assign(num_cols_, false);
  }

  bool IsArtificial(int col) const {
    return first_artificial_ >= 0 && col >= first_artificial_;
  }

  // Minimizes the cost vector with Bland's rule. Returns false when the
  // problem is unbounded below.
  bool Minimize(const std::vector<Rational>& cost) {
    // Reduced-cost row: c_j - c_B * B^{-1} A_j.
    std::vector<Rational> reduced = cost;
    Rational ignored(0);
    for (const auto& row : rows_) {
      const Rational& cb = cost[row.basis];
      if (cb == 0) continue;
      for (int j = 0; j < num_cols_; ++j) {
        if (row.coef[j] != 0) reduced[j] -= cb * row.coef[j];
      }
    }
    while (true) {
      int entering = -1;
      for (int j = 0; j < num_cols_; ++j) {
        if (!banned_[j] && reduced[j] < 0) {
          entering = j;
          break;  // Bland: lowest index
        }
      }
      if (entering < 0) return true;  // optimal
      int leaving_row = -1;
      Rational best_ratio(0);
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (rows_[r].coef[entering] <= 0) continue;
        const Rational ratio = rows_[r].rhs / rows_[r].coef[entering];
        if (leaving_row < 0 || ratio < best_ratio ||
            (ratio == best_ratio &&
             rows_[r].basis < rows_[leaving_row].basis)) {
          leaving_row = static_cast<int>(r);
          best_ratio = ratio;
        }
      }
      if (leaving_row < 0) return false;  // unbounded
      Pivot(leaving_row, entering, &reduced);
    }
  }

  // Phase 1: drive the artificial variables to zero.
  bool PhaseOne() {
    if (first_artificial_ < 0) return true;
    std::vector<Rational> cost(num_cols_, Rational(0));
    for (int j = first_artificial_; j < num_cols_; ++j) cost[j] = 1;
    Minimize(cost);  // bounded below by zero
    Rational total(0);
    for (const auto& row : rows_) {
      if (IsArtificial(row.basis)) total += row.rhs;
    }
    if (total != 0) return false;
    // Pivot remaining zero-valued artificials out of the basis; rows with no
    // eligible pivot column are redundant and dropped.
    for (std::size_t r = 0; r < rows_.size();) {
      if (!IsArtificial(rows_[r].basis)) {
        ++r;
        continue;
      }
      int col = -1;
      for (int j = 0; j < num_cols_; ++j) {
        if (!IsArtificial(j) && rows_[r].coef[j] != 0) {
          col = j;
          break;
        }
      }
      if (col < 0) {
        rows_.erase(rows_.begin() + r);
        continue;
      }
      Pivot(static_cast<int>(r), col, nullptr);
      ++r;
    }
    for (int j = first_artificial_ >= 0 ? first_artificial_ : num_cols_;
         j < num_cols_; ++j) {
      banned_[j] = true;
    }
    return true;
  }

  std::map<std::string, Rational> Extract() const {
    std::map<std::string, Rational> assignment;
    std::vector<Rational> col_value(num_cols_, Rational(0));
    for (const auto& row : rows_) col_value[row.basis] = row.rhs;
    for (int j = 0; j < system_.num_variables(); ++j) {
      Rational value = col_value[pos_col_[j]];
      if (neg_col_[j] >= 0) value -= col_value[neg_col_[j]];
      assignment[system_.variable_name(j)] = value;
    }
    return assignment;
  }

  std::vector<Rational> MakeCost(const LinearExpr& objective,
                                 bool negate) const {
    std::vector<Rational> cost(num_cols_, Rational(0));
    for (const auto& [var, coef] : objective.terms) {
      const Rational c = negate ? Rational(-coef) : coef;
      cost[pos_col_[var]] += c;
      if (neg_col_[var] >= 0) cost[neg_col_[var]] -= c;
    }
    return cost;
  }

 private:
  struct Row {
    std::vector<Rational> coef;
    Rational rhs;
    Relation relation = Relation::kEq;
    int slack_col = -1;
    int surplus_col = -1;
    int artificial_col = -1;
    int basis = -1;
  };


  void Pivot(int row, int col, std::vector<Rational>* reduced) {
    Row& pivot_row = rows_[row];
    const Rational inv = Rational(1) / pivot_row.coef[col];
    if (inv != 1) {
      for (auto& x : pivot_row.coef) {
        if (x != 0) x *= inv;
      }
      pivot_row.rhs *= inv;
    }
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (static_cast<int>(r) == row) continue;
      const Rational factor = rows_[r].coef[col];
      if (factor == 0) continue;
      for (int j = 0; j < num_cols_; ++j) {
        if (pivot_row.coef[j] != 0) {
          rows_[r].coef[j] -= factor * pivot_row.coef[j];
        }
      }
      rows_[r].rhs -= factor * pivot_row.rhs;
    }
    if (reduced != nullptr) {
      const Rational factor = (*reduced)[col];
      if (factor != 0) {
        for (int j = 0; j < num_cols_; ++j) {
          if (pivot_row.coef[j] != 0) {
            (*reduced)[j] -= factor * pivot_row.coef[j];
          }
        }
      }
    }
    pivot_row.basis = col;
  }

  const LinearSystem& system_;
  std::vector<Row> rows_;
  std::vector<int> pos_col_;
  std::vector<int> neg_col_;
  std::vector<bool> banned_;
  int num_cols_ = 0;
  int structural_cols_ = 0;
  int first_artificial_ = -1;
};

}  // namespace

LpOutcome SolveLp(const LinearSystem& system) {
  Tableau tableau(system);
  LpOutcome outcome;
  if (!tableau.PhaseOne()) {
    outcome.status = LpOutcome::Status::kInfeasible;
    return outcome;
  }
  if (system.objective().has_value()) {
    // maximize c'x == minimize (-c)'x
    if (!tableau.Minimize(tableau.MakeCost(*system.objective(), true))) {
      outcome.status = LpOutcome::Status::kUnbounded;
      return outcome;
    }
  }
  outcome.status = LpOutcome::Status::kFeasible;
  outcome.assignment = tableau.Extract();
  if (system.objective().has_value()) {
    outcome.objective_value =
        system.Evaluate(*system.objective(), outcome.assignment);
  }
  return outcome;
}

std::string LpOutcomeToJson(const LpOutcome& outcome) {
  nlohmann::ordered_json doc;
  switch (outcome.status) {
    case LpOutcome::Status::kFeasible:
      doc["status"] = "feasible";
      break;
    case LpOutcome::Status::kInfeasible:
      doc["status"] = "infeasible";
      break;
    case LpOutcome::Status::kUnbounded:
      doc["status"] = "unbounded";
      break;
  }
  if (outcome.status == LpOutcome::Status::kFeasible) {
    nlohmann::ordered_json assignment = nlohmann::ordered_json::object();
    for (const auto& [name, value] : outcome.assignment) {
      assignment[name] = FormatRational(value);
    }
    doc["assignment"] = std::move(assignment);
    if (outcome.objective_value.has_value()) {
      doc["objective"] = FormatRational(*outcome.objective_value);
    }
  }
  return doc.dump(2) + "\n";
}

}  // namespace corrplan
