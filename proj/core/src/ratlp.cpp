/*
 *   Copyright 2026 The bhw Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "bhw/ratlp.hpp"

#include <cstddef>
#include <string>
#include <utility>

#include "bhw/errors.hpp"

namespace bhw {

namespace {

// x_j = offset + sum(sign * y_column) over the listed columns.
struct Substitution {
  Rational offset;
  std::vector<std::pair<std::size_t, int>> columns;
};

struct StandardRow {
  std::vector<Rational> coefficients;  // over the non-negative y variables
  Relation relation;
  Rational rhs;
};

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t columns)
      : cells_(rows, std::vector<Rational>(columns)), rhs_(rows), basis_(rows), columns_(columns) {}

  std::size_t rows() const { return cells_.size(); }
  std::size_t columns() const { return columns_; }

  Rational& at(std::size_t r, std::size_t c) { return cells_[r][c]; }
  Rational& rhs(std::size_t r) { return rhs_[r]; }
  std::size_t& basic(std::size_t r) { return basis_[r]; }
  const std::vector<std::size_t>& basis() const { return basis_; }

  void pivot(std::size_t row, std::size_t col) {
    const Rational factor = cells_[row][col];
    for (auto& v : cells_[row]) {
      if (v != 0) v /= factor;
    }
    rhs_[row] /= factor;
    for (std::size_t r = 0; r < rows(); ++r) {
      if (r == row) continue;
      const Rational m = cells_[r][col];
      if (m == 0) continue;
      for (std::size_t c = 0; c < columns(); ++c) {
        if (cells_[row][c] != 0) cells_[r][c] -= m * cells_[row][c];
      }
      rhs_[r] -= m * rhs_[row];
    }
    basis_[row] = col;
  }

  void erase_row(std::size_t row) {
    cells_.erase(cells_.begin() + static_cast<std::ptrdiff_t>(row));
    rhs_.erase(rhs_.begin() + static_cast<std::ptrdiff_t>(row));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(row));
  }

 private:
  std::vector<std::vector<Rational>> cells_;
  std::vector<Rational> rhs_;
  std::vector<std::size_t> basis_;
  std::size_t columns_;
};

enum class PhaseOutcome { optimal, unbounded };

// Minimizes cost . columns over the current basis; columns with
// `allowed[c] == false` never enter. Bland's rule throughout.
PhaseOutcome run_simplex(Tableau& t, const std::vector<Rational>& cost,
                         const std::vector<bool>& allowed) {
  const std::size_t n = t.columns();
  std::vector<Rational> reduced(n);
  for (;;) {
    for (std::size_t c = 0; c < n; ++c) {
      Rational r = cost[c];
      for (std::size_t row = 0; row < t.rows(); ++row) {
        const Rational& a = t.at(row, c);
        if (a != 0) r -= cost[t.basic(row)] * a;
      }
      reduced[c] = std::move(r);
    }
    std::size_t entering = n;
    for (std::size_t c = 0; c < n; ++c) {
      if (allowed[c] && reduced[c] < 0) {
        entering = c;
        break;
      }
    }
    if (entering == n) return PhaseOutcome::optimal;

    std::size_t leaving = t.rows();
    Rational best_ratio;
    for (std::size_t row = 0; row < t.rows(); ++row) {
      const Rational& a = t.at(row, entering);
      if (a <= 0) continue;
      Rational ratio = t.rhs(row) / a;
      if (leaving == t.rows() || ratio < best_ratio ||
          (ratio == best_ratio && t.basic(row) < t.basic(leaving))) {
        leaving = row;
        best_ratio = std::move(ratio);
      }
    }
    if (leaving == t.rows()) return PhaseOutcome::unbounded;
    t.pivot(leaving, entering);
  }
}

void check_dimensions(const LinearProgram& lp) {
  const std::size_t n = lp.objective.size();
  if (lp.bounds.size() != n) {
    throw DomainError("linear program has " + std::to_string(n) + " variables but " +
                      std::to_string(lp.bounds.size()) + " bounds");
  }
  for (std::size_t i = 0; i < lp.constraints.size(); ++i) {
    if (lp.constraints[i].coefficients.size() != n) {
      throw DomainError("constraint " + std::to_string(i) + " has wrong dimension");
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    const auto& b = lp.bounds[j];
    if (b.lower && b.upper && *b.lower > *b.upper) {
      throw DomainError("variable " + std::to_string(j) + " has lower bound above upper bound");
    }
  }
}

bool satisfies(const Rational& lhs, Relation rel, const Rational& rhs) {
  switch (rel) {
    case Relation::greater_equal: return lhs >= rhs;
    case Relation::less_equal: return lhs <= rhs;
    case Relation::equal: return lhs == rhs;
  }
  return false;
}

}  // namespace

Rational objective_value(const LinearProgram& lp, std::span<const Rational> point) {
  Rational value = 0;
  for (std::size_t j = 0; j < lp.objective.size() && j < point.size(); ++j) {
    if (lp.objective[j] != 0) value += lp.objective[j] * point[j];
  }
  return value;
}

bool is_feasible_point(const LinearProgram& lp, std::span<const Rational> point) {
  if (point.size() != lp.objective.size()) return false;
  for (std::size_t j = 0; j < point.size(); ++j) {
    const auto& b = lp.bounds[j];
    if (b.lower && point[j] < *b.lower) return false;
    if (b.upper && point[j] > *b.upper) return false;
  }
  for (const auto& c : lp.constraints) {
    Rational lhs = 0;
    for (std::size_t j = 0; j < point.size(); ++j) {
      if (c.coefficients[j] != 0) lhs += c.coefficients[j] * point[j];
    }
    if (!satisfies(lhs, c.relation, c.rhs)) return false;
  }
  return true;
}

LpResult solve_min(const LinearProgram& lp) {
  check_dimensions(lp);
  const std::size_t n = lp.objective.size();

  // Rewrite every variable over non-negative columns.
  std::vector<Substitution> subst(n);
  std::size_t ny = 0;
  std::vector<StandardRow> rows;
  std::vector<std::pair<std::size_t, Rational>> upper_rows;  // y_col <= value
  for (std::size_t j = 0; j < n; ++j) {
    const auto& b = lp.bounds[j];
    if (b.lower) {
      subst[j].offset = *b.lower;
      subst[j].columns.emplace_back(ny, 1);
      if (b.upper) upper_rows.emplace_back(ny, *b.upper - *b.lower);
      ++ny;
    } else if (b.upper) {
      subst[j].offset = *b.upper;
      subst[j].columns.emplace_back(ny++, -1);
    } else {
      subst[j].columns.emplace_back(ny++, 1);
      subst[j].columns.emplace_back(ny++, -1);
    }
  }

  for (const auto& c : lp.constraints) {
    StandardRow row{std::vector<Rational>(ny), c.relation, c.rhs};
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& a = c.coefficients[j];
      if (a == 0) continue;
      row.rhs -= a * subst[j].offset;
      for (const auto& [col, sign] : subst[j].columns) {
        row.coefficients[col] += sign > 0 ? a : Rational(-a);
      }
    }
    rows.push_back(std::move(row));
  }
  for (auto& [col, value] : upper_rows) {
    StandardRow row{std::vector<Rational>(ny), Relation::less_equal, value};
    row.coefficients[col] = 1;
    rows.push_back(std::move(row));
  }

  // The constant part of the objective does not affect the argmin.
  std::vector<Rational> y_cost(ny);
  for (std::size_t j = 0; j < n; ++j) {
    const Rational& c = lp.objective[j];
    if (c == 0) continue;
    for (const auto& [col, sign] : subst[j].columns) {
      y_cost[col] += sign > 0 ? c : Rational(-c);
    }
  }

  // Normalize right-hand sides to be non-negative.
  for (auto& row : rows) {
    if (row.rhs < 0) {
      for (auto& a : row.coefficients) a = -a;
      row.rhs = -row.rhs;
      if (row.relation == Relation::greater_equal) {
        row.relation = Relation::less_equal;
      } else if (row.relation == Relation::less_equal) {
        row.relation = Relation::greater_equal;
      }
    }
  }

  std::size_t slacks = 0;
  std::size_t artificials = 0;
  for (const auto& row : rows) {
    if (row.relation != Relation::equal) ++slacks;
    if (row.relation != Relation::less_equal) ++artificials;
  }
  const std::size_t first_slack = ny;
  const std::size_t first_artificial = ny + slacks;
  const std::size_t columns = ny + slacks + artificials;

  Tableau t(rows.size(), columns);
  std::size_t next_slack = first_slack;
  std::size_t next_artificial = first_artificial;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < ny; ++c) t.at(r, c) = rows[r].coefficients[c];
    t.rhs(r) = rows[r].rhs;
    switch (rows[r].relation) {
      case Relation::less_equal:
        t.at(r, next_slack) = 1;
        t.basic(r) = next_slack++;
        break;
      case Relation::greater_equal:
        t.at(r, next_slack++) = -1;
        t.at(r, next_artificial) = 1;
        t.basic(r) = next_artificial++;
        break;
      case Relation::equal:
        t.at(r, next_artificial) = 1;
        t.basic(r) = next_artificial++;
        break;
    }
  }

  if (artificials > 0) {
    std::vector<Rational> phase1_cost(columns);
    for (std::size_t c = first_artificial; c < columns; ++c) phase1_cost[c] = 1;
    std::vector<bool> allowed(columns, true);
    run_simplex(t, phase1_cost, allowed);  // bounded below by zero
    Rational infeasibility = 0;
    for (std::size_t r = 0; r < t.rows(); ++r) {
      if (t.basic(r) >= first_artificial) infeasibility += t.rhs(r);
    }
    if (infeasibility > 0) return LpInfeasible{};

    // Drive remaining (zero-valued) artificials out of the basis.
    for (std::size_t r = 0; r < t.rows();) {
      if (t.basic(r) < first_artificial) {
        ++r;
        continue;
      }
      std::size_t col = first_artificial;
      for (std::size_t c = 0; c < first_artificial; ++c) {
        if (t.at(r, c) != 0) {
          col = c;
          break;
        }
      }
      if (col == first_artificial) {
        t.erase_row(r);  // redundant equality
      } else {
        t.pivot(r, col);
        ++r;
      }
    }
  }

  std::vector<Rational> phase2_cost(columns);
  for (std::size_t c = 0; c < ny; ++c) phase2_cost[c] = y_cost[c];
  std::vector<bool> allowed(columns, false);
  for (std::size_t c = 0; c < first_artificial; ++c) allowed[c] = true;
  if (run_simplex(t, phase2_cost, allowed) == PhaseOutcome::unbounded) {
    return LpUnbounded{};
  }

  std::vector<Rational> y(ny);
  for (std::size_t r = 0; r < t.rows(); ++r) {
    if (t.basic(r) < ny) y[t.basic(r)] = t.rhs(r);
  }
  LpOptimal result;
  result.point.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    Rational x = subst[j].offset;
    for (const auto& [col, sign] : subst[j].columns) {
      if (sign > 0) {
        x += y[col];
      } else {
        x -= y[col];
      }
    }
    result.point[j] = std::move(x);
  }
  result.value = objective_value(lp, result.point);
  if (!is_feasible_point(lp, result.point)) {
    throw InternalError("simplex returned a point that violates the program");
  }
  return result;
}

}  // namespace bhw
