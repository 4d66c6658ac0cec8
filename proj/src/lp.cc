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

#include "stabdisj/lp.h"

#include <utility>

#include "stabdisj/errors.h"

namespace stabdisj {

const char *status_name(LpStatus status) {
    switch (status) {
        case LpStatus::kOptimal:
            return "optimal";
        case LpStatus::kInfeasible:
            return "infeasible";
        case LpStatus::kUnbounded:
            return "unbounded";
    }
    return "?";
}

bool is_feasible(const LinearProgram &p, const std::vector<Rational> &x) {
    if (x.size() != p.num_vars()) {
        return false;
    }
    for (const auto &v : x) {
        if (sgn(v) < 0) {
            return false;
        }
    }
    for (const auto &c : p.constraints) {
        Rational lhs = 0;
        for (const auto &t : c.terms) {
            lhs += t.coef * x[t.var];
        }
        switch (c.relation) {
            case Relation::kLessEqual:
                if (lhs > c.rhs) {
                    return false;
                }
                break;
            case Relation::kGreaterEqual:
                if (lhs < c.rhs) {
                    return false;
                }
                break;
            case Relation::kEqual:
                if (lhs != c.rhs) {
                    return false;
                }
                break;
        }
    }
    return true;
}

Rational objective_value(const LinearProgram &p, const std::vector<Rational> &x) {
    Rational v = 0;
    for (std::size_t j = 0; j < p.num_vars(); j++) {
        if (sgn(p.objective[j]) != 0) {
            v += p.objective[j] * x[j];
        }
    }
    return v;
}

namespace {

using Column = std::vector<std::pair<std::size_t, Rational>>;

class Simplex {
   public:
    explicit Simplex(const LinearProgram &p) : n_(p.num_vars()), m_(p.constraints.size()) {
        for (const auto &c : p.constraints) {
            for (const auto &t : c.terms) {
                if (t.var >= n_) {
                    throw DimensionError("constraint references variable " + std::to_string(t.var) + " of " +
                                         std::to_string(n_));
                }
            }
        }
        cols_.resize(n_);
        b_.resize(m_);
        std::vector<Relation> rel(m_);
        for (std::size_t i = 0; i < m_; i++) {
            const Constraint &c = p.constraints[i];
            bool flip = sgn(c.rhs) < 0;
            b_[i] = flip ? Rational(-c.rhs) : c.rhs;
            rel[i] = c.relation;
            if (flip && c.relation == Relation::kLessEqual) {
                rel[i] = Relation::kGreaterEqual;
            } else if (flip && c.relation == Relation::kGreaterEqual) {
                rel[i] = Relation::kLessEqual;
            }
            // Merge repeated variables within a row.
            for (const auto &t : c.terms) {
                Rational a = flip ? Rational(-t.coef) : t.coef;
                Column &col = cols_[t.var];
                if (!col.empty() && col.back().first == i) {
                    col.back().second += a;
                } else {
                    col.emplace_back(i, a);
                }
            }
        }
        for (auto &col : cols_) {
            std::erase_if(col, [](const auto &e) { return sgn(e.second) == 0; });
        }

        basis_.assign(m_, 0);
        for (std::size_t i = 0; i < m_; i++) {
            if (rel[i] == Relation::kGreaterEqual) {
                add_column({{i, Rational(-1)}}, false);
            }
            if (rel[i] == Relation::kLessEqual) {
                basis_[i] = add_column({{i, Rational(1)}}, false);
            }
        }
        for (std::size_t i = 0; i < m_; i++) {
            if (rel[i] != Relation::kLessEqual) {
                basis_[i] = add_column({{i, Rational(1)}}, true);
            }
        }
        row_of_.assign(cols_.size(), kNone);
        for (std::size_t i = 0; i < m_; i++) {
            row_of_[basis_[i]] = i;
        }
        barred_.assign(cols_.size(), false);
        binv_.assign(m_, std::vector<Rational>(m_));
        for (std::size_t i = 0; i < m_; i++) {
            binv_[i][i] = 1;
        }
        xb_ = b_;
    }

    LpSolution solve(const std::vector<Rational> &objective) {
        LpSolution sol;
        if (has_artificials_) {
            std::vector<Rational> phase1(cols_.size());
            for (std::size_t j = 0; j < cols_.size(); j++) {
                if (artificial_[j]) {
                    phase1[j] = -1;
                }
            }
            run(phase1, false);
            for (std::size_t i = 0; i < m_; i++) {
                if (artificial_[basis_[i]] && sgn(xb_[i]) != 0) {
                    sol.status = LpStatus::kInfeasible;
                    return sol;
                }
            }
            for (std::size_t j = 0; j < cols_.size(); j++) {
                barred_[j] = artificial_[j];
            }
        }
        std::vector<Rational> cost(cols_.size());
        for (std::size_t j = 0; j < n_; j++) {
            cost[j] = objective[j];
        }
        if (!run(cost, true)) {
            sol.status = LpStatus::kUnbounded;
            return sol;
        }
        sol.status = LpStatus::kOptimal;
        sol.assignment.assign(n_, Rational(0));
        sol.value = 0;
        for (std::size_t i = 0; i < m_; i++) {
            if (basis_[i] < n_) {
                sol.assignment[basis_[i]] = xb_[i];
                sol.value += objective[basis_[i]] * xb_[i];
            }
        }
        return sol;
    }

   private:
    static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

    std::size_t add_column(Column col, bool artificial) {
        cols_.push_back(std::move(col));
        artificial_.resize(cols_.size(), false);
        artificial_.back() = artificial;
        has_artificials_ = has_artificials_ || artificial;
        return cols_.size() - 1;
    }

    // Returns false if the objective is unbounded.
    bool run(const std::vector<Rational> &cost, bool phase2) {
        std::vector<Rational> y(m_);
        std::vector<Rational> d(m_);
        Rational r;
        Rational tmp;
        while (true) {
            for (std::size_t k = 0; k < m_; k++) {
                y[k] = 0;
            }
            for (std::size_t i = 0; i < m_; i++) {
                const Rational &cb = cost[basis_[i]];
                if (sgn(cb) == 0) {
                    continue;
                }
                for (std::size_t k = 0; k < m_; k++) {
                    if (sgn(binv_[i][k]) != 0) {
                        y[k] += cb * binv_[i][k];
                    }
                }
            }

            std::size_t enter = kNone;
            for (std::size_t j = 0; j < cols_.size(); j++) {
                if (row_of_[j] != kNone || barred_[j]) {
                    continue;
                }
                r = cost[j];
                for (const auto &[row, a] : cols_[j]) {
                    if (sgn(y[row]) == 0) {
                        continue;
                    }
                    if (a == 1) {
                        r -= y[row];
                    } else {
                        tmp = y[row] * a;
                        r -= tmp;
                    }
                }
                if (sgn(r) > 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == kNone) {
                return true;
            }

            for (std::size_t i = 0; i < m_; i++) {
                d[i] = 0;
                for (const auto &[row, a] : cols_[enter]) {
                    if (sgn(binv_[i][row]) != 0) {
                        d[i] += binv_[i][row] * a;
                    }
                }
            }

            std::size_t leave = kNone;
            Rational best;
            for (std::size_t i = 0; i < m_; i++) {
                int s = sgn(d[i]);
                if (s == 0) {
                    continue;
                }
                Rational ratio;
                if (s > 0) {
                    ratio = xb_[i] / d[i];
                } else if (phase2 && artificial_[basis_[i]]) {
                    // A zero-level artificial must not grow; it leaves at step 0.
                    ratio = 0;
                } else {
                    continue;
                }
                if (leave == kNone || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == kNone) {
                return false;
            }
            pivot(leave, enter, d);
        }
    }

    void pivot(std::size_t r, std::size_t enter, const std::vector<Rational> &d) {
        Rational inv = 1 / d[r];
        for (std::size_t k = 0; k < m_; k++) {
            if (sgn(binv_[r][k]) != 0) {
                binv_[r][k] *= inv;
            }
        }
        xb_[r] *= inv;
        for (std::size_t i = 0; i < m_; i++) {
            if (i == r || sgn(d[i]) == 0) {
                continue;
            }
            for (std::size_t k = 0; k < m_; k++) {
                if (sgn(binv_[r][k]) != 0) {
                    binv_[i][k] -= d[i] * binv_[r][k];
                }
            }
            xb_[i] -= d[i] * xb_[r];
        }
        row_of_[basis_[r]] = kNone;
        basis_[r] = enter;
        row_of_[enter] = r;
    }

    std::size_t n_;
    std::size_t m_;
    std::vector<Column> cols_;
    std::vector<bool> artificial_;
    std::vector<bool> barred_;
    bool has_artificials_ = false;
    std::vector<Rational> b_;
    std::vector<std::size_t> basis_;
    std::vector<std::size_t> row_of_;
    std::vector<std::vector<Rational>> binv_;
    std::vector<Rational> xb_;
};

// The objective takes values in g * Z on integral points when every
// variable with a nonzero coefficient is integral; returns g, or 0 if not.
Rational objective_lattice(const LinearProgram &p, const std::vector<bool> &integral) {
    Integer den = 1;
    for (std::size_t j = 0; j < p.num_vars(); j++) {
        if (sgn(p.objective[j]) == 0) {
            continue;
        }
        if (!integral[j]) {
            return 0;
        }
        den = lcm(den, p.objective[j].get_den());
    }
    Integer g = 0;
    for (std::size_t j = 0; j < p.num_vars(); j++) {
        if (sgn(p.objective[j]) != 0) {
            Rational scaled = p.objective[j] * den;
            g = gcd(g, scaled.get_num());
        }
    }
    if (g == 0) {
        return 0;
    }
    Rational out(g, den);
    out.canonicalize();
    return out;
}

class BranchAndBound {
   public:
    BranchAndBound(const LinearProgram &p, const std::vector<bool> &integral, const IlpOptions &options)
        : p_(p), integral_(integral), options_(options), lattice_(objective_lattice(p, integral)) {
    }

    LpSolution run() {
        if (options_.incumbent && is_integral(*options_.incumbent) && is_feasible(p_, *options_.incumbent)) {
            offer(*options_.incumbent);
        }
        LinearProgram node = p_;
        LpStatus root = explore(node);
        if (root == LpStatus::kUnbounded) {
            LpSolution sol;
            sol.status = LpStatus::kUnbounded;
            return sol;
        }
        if (!incumbent_) {
            LpSolution sol;
            sol.status = LpStatus::kInfeasible;
            return sol;
        }
        return *incumbent_;
    }

    std::size_t nodes() const {
        return nodes_;
    }

   private:
    bool is_integral(const std::vector<Rational> &x) const {
        if (x.size() != p_.num_vars()) {
            return false;
        }
        for (std::size_t j = 0; j < x.size(); j++) {
            if (integral_[j] && !stabdisj::is_integer(x[j])) {
                return false;
            }
        }
        return true;
    }

    void offer(const std::vector<Rational> &x) {
        Rational v = objective_value(p_, x);
        if (!incumbent_ || v > incumbent_->value) {
            incumbent_ = LpSolution{LpStatus::kOptimal, v, x};
        }
    }

    LpStatus explore(LinearProgram &node) {
        nodes_++;
        if (options_.node_limit != 0 && nodes_ > options_.node_limit) {
            throw TooLarge("branch and bound exceeded " + std::to_string(options_.node_limit) + " nodes");
        }
        LpSolution relax = solve_lp(node);
        if (relax.status != LpStatus::kOptimal) {
            return relax.status;
        }
        Rational bound = relax.value;
        if (sgn(lattice_) != 0) {
            bound = Rational(stabdisj::floor(bound / lattice_)) * lattice_;
        }
        if (incumbent_ && bound <= incumbent_->value) {
            return LpStatus::kOptimal;
        }
        std::size_t branch = node.num_vars();
        for (std::size_t j = 0; j < node.num_vars(); j++) {
            if (integral_[j] && !stabdisj::is_integer(relax.assignment[j])) {
                branch = j;
                break;
            }
        }
        if (branch == node.num_vars()) {
            offer(relax.assignment);
            return LpStatus::kOptimal;
        }

        std::vector<Rational> rounded = relax.assignment;
        for (std::size_t j = 0; j < rounded.size(); j++) {
            if (integral_[j]) {
                rounded[j] = Rational(stabdisj::floor(rounded[j]));
            }
        }
        if (is_feasible(p_, rounded)) {
            offer(rounded);
        }

        const Rational &v = relax.assignment[branch];
        node.add_constraint({{branch, Rational(1)}}, Relation::kGreaterEqual, Rational(stabdisj::ceil(v)));
        explore(node);
        node.constraints.back() = {{{branch, Rational(1)}}, Relation::kLessEqual, Rational(stabdisj::floor(v))};
        explore(node);
        node.constraints.pop_back();
        return LpStatus::kOptimal;
    }

    const LinearProgram &p_;
    const std::vector<bool> &integral_;
    const IlpOptions &options_;
    Rational lattice_;
    std::optional<LpSolution> incumbent_;
    std::size_t nodes_ = 0;
};

}  // namespace

LpSolution solve_lp(const LinearProgram &p) {
    Simplex simplex(p);
    return simplex.solve(p.objective);
}

LpSolution solve_ilp(
    const LinearProgram &p, const std::vector<bool> &integral, const IlpOptions &options, IlpStats *stats) {
    if (integral.size() != p.num_vars()) {
        throw DimensionError("integrality mask has " + std::to_string(integral.size()) + " entries for " +
                             std::to_string(p.num_vars()) + " variables");
    }
    BranchAndBound bnb(p, integral, options);
    LpSolution sol = bnb.run();
    if (stats) {
        stats->nodes = bnb.nodes();
    }
    return sol;
}

}  // namespace stabdisj
