// Copyright 2026 The stabdisj Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef STABDISJ_LP_H
#define STABDISJ_LP_H

#include <cstddef>
#include <optional>
#include <vector>

#include "stabdisj/rational.h"

namespace stabdisj {

enum class Relation { kLessEqual, kGreaterEqual, kEqual };

struct Term {
    std::size_t var;
    Rational coef;
};

struct Constraint {
    std::vector<Term> terms;
    Relation relation = Relation::kLessEqual;
    Rational rhs;
};

/// maximize objective . x subject to the constraints and x >= 0.
struct LinearProgram {
    std::vector<Rational> objective;
    std::vector<Constraint> constraints;

    explicit LinearProgram(std::size_t num_vars = 0) : objective(num_vars) {
    }
    std::size_t num_vars() const {
        return objective.size();
    }
    void add_constraint(std::vector<Term> terms, Relation relation, Rational rhs) {
        constraints.push_back({std::move(terms), relation, std::move(rhs)});
    }
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

const char *status_name(LpStatus status);

struct LpSolution {
    LpStatus status = LpStatus::kInfeasible;
    Rational value;
    std::vector<Rational> assignment;
};

/// Exact check of nonnegativity and every constraint.
bool is_feasible(const LinearProgram &p, const std::vector<Rational> &x);
Rational objective_value(const LinearProgram &p, const std::vector<Rational> &x);

/// Two-phase revised simplex over exact rationals. Entering and leaving
/// variables follow Bland's rule, so the result is deterministic.
LpSolution solve_lp(const LinearProgram &p);

struct IlpOptions {
    /// Feasible integral starting point; ignored unless it checks out exactly.
    std::optional<std::vector<Rational>> incumbent;
    /// Maximum branch-and-bound nodes; 0 means unlimited. Exceeding it throws TooLarge.
    std::size_t node_limit = 0;
};

struct IlpStats {
    std::size_t nodes = 0;
};

/// Depth-first branch and bound on the LP relaxation. Branches on the
/// lowest-index fractional integral variable, up branch first, and prunes
/// nodes whose relaxation bound cannot beat the incumbent.
LpSolution solve_ilp(
    const LinearProgram &p, const std::vector<bool> &integral, const IlpOptions &options = {},
    IlpStats *stats = nullptr);

}  // namespace stabdisj

#endif
