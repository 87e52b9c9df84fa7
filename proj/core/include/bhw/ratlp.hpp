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

/**
 * @file
 *
 * Exact linear programming over the rationals.
 *
 * The solver is a dense two-phase primal simplex that uses Bland's rule for
 * both the entering and the leaving variable, so it terminates without any
 * perturbation. Variable bounds are rewritten into non-negative variables plus
 * explicit constraint rows. It is meant for the small covering programs that
 * show up when evaluating fractional edge covers, not for large models.
 */

#ifndef BHW_RATLP_HPP
#define BHW_RATLP_HPP

#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "bhw/rational.hpp"

namespace bhw {

enum class Relation { greater_equal, less_equal, equal };

struct Constraint {
  std::vector<Rational> coefficients;
  Relation relation = Relation::greater_equal;
  Rational rhs;
};

/// Missing endpoints are unbounded in that direction.
struct VariableBound {
  std::optional<Rational> lower = Rational(0);
  std::optional<Rational> upper;
};

/// minimize objective . x subject to constraints and per-variable bounds.
struct LinearProgram {
  std::vector<Rational> objective;
  std::vector<Constraint> constraints;
  std::vector<VariableBound> bounds;  // one per variable
};

struct LpOptimal {
  Rational value;
  std::vector<Rational> point;
};
struct LpInfeasible {};
struct LpUnbounded {};

using LpResult = std::variant<LpOptimal, LpInfeasible, LpUnbounded>;

/// Solves `lp` exactly. Throws DomainError on inconsistent dimensions or
/// bounds with lower > upper. An optimal point is re-checked against every
/// constraint before it is returned.
LpResult solve_min(const LinearProgram& lp);

/// True iff `point` satisfies every constraint and bound of `lp` exactly.
bool is_feasible_point(const LinearProgram& lp, std::span<const Rational> point);

Rational objective_value(const LinearProgram& lp, std::span<const Rational> point);

}  // namespace bhw

#endif  // BHW_RATLP_HPP
