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


#ifndef STABDISJ_DISJOINTNESS_H
#define STABDISJ_DISJOINTNESS_H

#include <cstddef>
#include <optional>
#include <vector>

#include "stabdisj/gf2.h"
#include "stabdisj/lp.h"
#include "stabdisj/pauli.h"
#include "stabdisj/rational.h"

namespace stabdisj {

/// A multiset of representatives of one class, meant to be c-disjoint.
struct DisjointCollection {
    std::vector<PauliOperator> members;
    std::size_t c = 1;
};

struct DisjointnessOptions {
    std::size_t coset_cap_log2 = kDefaultCosetCapLog2;
    /// Keep one variable per distinct inclusion-minimal support. Exact, and
    /// much smaller, but the variables no longer match the coset one to one.
    bool reduce_dominated = false;
    std::size_t threads = 1;
};

struct DeltaStar {
    Rational value;
    LpSolution witness;
    /// The representative behind each LP variable, in variable order.
    std::vector<PauliOperator> variables;
};

/// Optimum of the fractional packing LP: one variable per representative,
/// at most total weight one on every qubit, maximize the total weight.
DeltaStar delta_star(const LogicalClass &cls, const DisjointnessOptions &options = {});

/// lcm of the denominators of an optimal assignment. Throws InvalidWitness
/// unless the solution is optimal.
Integer witness_c(const LpSolution &sol);

struct CDisjointnessOptions {
    std::size_t coset_cap_log2 = kDefaultCosetCapLog2;
    bool reduce_dominated = true;
    /// Solve the relaxation first and stop if c times its optimum is integral.
    bool lp_first = true;
    std::size_t node_limit = 0;
};

struct CDisjointness {
    /// Largest c-disjoint collection size divided by c.
    Rational value;
    DisjointCollection collection;
    std::size_t nodes = 0;
};

/// Throws TrivialClass for the identity class and InvalidC for c < 1.
CDisjointness c_disjointness_detail(
    const LogicalClass &cls, std::size_t c, const CDisjointnessOptions &options = {});
Rational c_disjointness(const LogicalClass &cls, std::size_t c, const CDisjointnessOptions &options = {});

/// True iff some c-disjoint collection has at least `a` members.
bool decide_c_disjointness(
    const LogicalClass &cls, std::size_t c, std::size_t a, const CDisjointnessOptions &options = {});

struct ClassDisjointness {
    ClassLabel label;
    Rational delta_star;
    Integer c_star;
};

struct DisjointnessReport {
    /// Increasing label order.
    std::vector<ClassDisjointness> per_class;
    Rational code_delta;
    std::vector<ClassLabel> argmin_classes;
};

/// delta_star for every non-trivial class and their minimum.
DisjointnessReport code_disjointness(
    const StabilizerCode &code, const LogicalBasis &basis, const DisjointnessOptions &options = {});

struct QubitOverload {
    std::size_t qubit;
    std::size_t multiplicity;
};

struct CollectionVerdict {
    bool valid = false;
    /// Indices of members failing the representative test.
    std::vector<std::size_t> non_members;
    std::vector<QubitOverload> overloaded;
    /// Set when a minimum size was requested.
    std::optional<bool> size_ok;
};

/// Polynomial-time check: every member is a representative (rank test),
/// every qubit is covered at most c times, and optionally |members| >= a.
CollectionVerdict verify_collection(
    const DisjointCollection &col, const LogicalClass &cls, std::optional<std::size_t> min_size = std::nullopt);

/// Indices of the first occurrence of each distinct inclusion-minimal set,
/// in increasing order.
std::vector<std::size_t> minimal_support_indices(const std::vector<BitVector> &supports);

/// Fractional packing LP over the given supports on n qubits.
LinearProgram packing_lp(const std::vector<BitVector> &supports, std::size_t n);

}  // namespace stabdisj

#endif
