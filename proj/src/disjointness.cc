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


#include "stabdisj/disjointness.h"

#include <algorithm>
#include <numeric>

#include "stabdisj/errors.h"
#include "stabdisj/parallel.h"

namespace stabdisj {

std::vector<std::size_t> minimal_support_indices(const std::vector<BitVector> &supports) {
    std::vector<std::size_t> order(supports.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return supports[a].popcount() < supports[b].popcount();
    });
    std::vector<std::size_t> kept;
    for (std::size_t idx : order) {
        bool dominated = false;
        for (std::size_t k : kept) {
            if (supports[k].is_subset_of(supports[idx])) {
                dominated = true;
                break;
            }
        }
        if (!dominated) {
            kept.push_back(idx);
        }
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

LinearProgram packing_lp(const std::vector<BitVector> &supports, std::size_t n) {
    LinearProgram lp(supports.size());
    std::vector<std::vector<Term>> rows(n);
    for (std::size_t j = 0; j < supports.size(); j++) {
        lp.objective[j] = 1;
        for (std::size_t q : supports[j].ones()) {
            rows[q].push_back({j, Rational(1)});
        }
    }
    for (auto &r : rows) {
        if (!r.empty()) {
            lp.add_constraint(std::move(r), Relation::kLessEqual, Rational(1));
        }
    }
    return lp;
}

namespace {

struct Variables {
    std::vector<PauliOperator> reps;
    std::vector<BitVector> supports;
};

Variables class_variables(const LogicalClass &cls, std::size_t coset_cap_log2, bool reduce) {
    Variables v;
    v.reps = enumerate_class(cls, coset_cap_log2);
    v.supports.reserve(v.reps.size());
    for (const auto &p : v.reps) {
        v.supports.push_back(p.support());
    }
    if (reduce) {
        Variables r;
        for (std::size_t i : minimal_support_indices(v.supports)) {
            r.reps.push_back(std::move(v.reps[i]));
            r.supports.push_back(std::move(v.supports[i]));
        }
        return r;
    }
    return v;
}

}  // namespace

DeltaStar delta_star(const LogicalClass &cls, const DisjointnessOptions &options) {
    if (cls.is_trivial()) {
        throw TrivialClass();
    }
    Variables vars = class_variables(cls, options.coset_cap_log2, options.reduce_dominated);
    LinearProgram lp = packing_lp(vars.supports, cls.code().n());
    DeltaStar out;
    out.witness = solve_lp(lp);
    out.value = out.witness.value;
    out.variables = std::move(vars.reps);
    return out;
}

Integer witness_c(const LpSolution &sol) {
    if (sol.status != LpStatus::kOptimal) {
        throw InvalidWitness(std::string("witness requires an optimal solution, got ") + status_name(sol.status));
    }
    Integer c = 1;
    for (const auto &x : sol.assignment) {
        c = lcm(c, x.get_den());
    }
    return c;
}

CDisjointness c_disjointness_detail(const LogicalClass &cls, std::size_t c, const CDisjointnessOptions &options) {
    if (c < 1) {
        throw InvalidC("c must be a positive integer");
    }
    if (cls.is_trivial()) {
        throw TrivialClass();
    }
    Variables vars = class_variables(cls, options.coset_cap_log2, options.reduce_dominated);
    std::size_t n = cls.code().n();
    Rational cq(static_cast<unsigned long>(c));

    CDisjointness out;
    out.collection.c = c;
    auto finish = [&](const std::vector<Rational> &counts) {
        Rational total = 0;
        for (std::size_t j = 0; j < counts.size(); j++) {
            long mult = to_long(counts[j].get_num());
            for (long t = 0; t < mult; t++) {
                out.collection.members.push_back(vars.reps[j]);
            }
            total += counts[j];
        }
        out.value = total / cq;
    };

    if (options.lp_first) {
        LpSolution relax = solve_lp(packing_lp(vars.supports, n));
        std::vector<Rational> scaled(relax.assignment.size());
        bool integral = true;
        for (std::size_t j = 0; j < scaled.size(); j++) {
            scaled[j] = relax.assignment[j] * cq;
            integral = integral && is_integer(scaled[j]);
        }
        if (integral) {
            finish(scaled);
            return out;
        }
    }

    LinearProgram ilp(vars.supports.size());
    std::vector<std::vector<Term>> rows(n);
    for (std::size_t j = 0; j < vars.supports.size(); j++) {
        ilp.objective[j] = 1 / cq;
        for (std::size_t q : vars.supports[j].ones()) {
            rows[q].push_back({j, Rational(1)});
        }
    }
    for (auto &r : rows) {
        if (!r.empty()) {
            ilp.add_constraint(std::move(r), Relation::kLessEqual, cq);
        }
    }
    IlpOptions ilp_options;
    ilp_options.node_limit = options.node_limit;
    IlpStats stats;
    LpSolution sol = solve_ilp(ilp, std::vector<bool>(ilp.num_vars(), true), ilp_options, &stats);
    out.nodes = stats.nodes;
    finish(sol.assignment);
    return out;
}

Rational c_disjointness(const LogicalClass &cls, std::size_t c, const CDisjointnessOptions &options) {
    return c_disjointness_detail(cls, c, options).value;
}

bool decide_c_disjointness(const LogicalClass &cls, std::size_t c, std::size_t a, const CDisjointnessOptions &options) {
    Rational value = c_disjointness(cls, c, options);
    return value * static_cast<unsigned long>(c) >= Rational(static_cast<unsigned long>(a));
}

DisjointnessReport code_disjointness(
    const StabilizerCode &code, const LogicalBasis &basis, const DisjointnessOptions &options) {
    check_coset_cap(code, options.coset_cap_log2);
    std::vector<ClassLabel> labels = nontrivial_labels(basis.k());
    DisjointnessReport report;
    report.per_class.resize(labels.size());
    DisjointnessOptions inner = options;
    inner.threads = 1;
    parallel_for(labels.size(), options.threads, [&](std::size_t i) {
        DeltaStar ds = delta_star(class_from_label(code, basis, labels[i]), inner);
        report.per_class[i] = {labels[i], ds.value, witness_c(ds.witness)};
    });
    for (const auto &entry : report.per_class) {
        if (report.argmin_classes.empty() || entry.delta_star < report.code_delta) {
            report.code_delta = entry.delta_star;
            report.argmin_classes = {entry.label};
        } else if (entry.delta_star == report.code_delta) {
            report.argmin_classes.push_back(entry.label);
        }
    }
    return report;
}

CollectionVerdict verify_collection(
    const DisjointCollection &col, const LogicalClass &cls, std::optional<std::size_t> min_size) {
    CollectionVerdict verdict;
    std::size_t n = cls.code().n();
    std::vector<std::size_t> count(n, 0);
    for (std::size_t i = 0; i < col.members.size(); i++) {
        const PauliOperator &p = col.members[i];
        if (p.num_qubits() != n) {
            verdict.non_members.push_back(i);
            continue;
        }
        if (!cls.code().commutes_with_all(p) || !is_representative(p, cls)) {
            verdict.non_members.push_back(i);
        }
        for (std::size_t q : p.support().ones()) {
            count[q]++;
        }
    }
    for (std::size_t q = 0; q < n; q++) {
        if (count[q] > col.c) {
            verdict.overloaded.push_back({q, count[q]});
        }
    }
    verdict.valid = col.c >= 1 && verdict.non_members.empty() && verdict.overloaded.empty();
    if (min_size) {
        verdict.size_ok = col.members.size() >= *min_size;
        verdict.valid = verdict.valid && *verdict.size_ok;
    }
    return verdict;
}

}  // namespace stabdisj
