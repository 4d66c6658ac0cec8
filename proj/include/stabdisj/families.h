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


#ifndef STABDISJ_FAMILIES_H
#define STABDISJ_FAMILIES_H

#include <cstddef>
#include <optional>
#include <vector>

#include "stabdisj/disjointness.h"
#include "stabdisj/gf2.h"
#include "stabdisj/hierarchy.h"
#include "stabdisj/logical.h"
#include "stabdisj/pauli.h"
#include "stabdisj/rational.h"

namespace stabdisj {

/// A stabilizer code whose group has a generating set of pure X-type and
/// pure Z-type operators.
struct CssCode {
    /// Checks regenerated as the X rows followed by the Z rows.
    StabilizerCode code;
    /// X parts of a basis of the X-type stabilizers (n columns).
    BitMatrix hx;
    /// Z parts of a basis of the Z-type stabilizers (n columns).
    BitMatrix hz;
    /// Pure X-type x_ops, pure Z-type z_ops.
    LogicalBasis standard_basis;
};

/// Recognizes a CSS group from any check matrix. Throws NotCss otherwise.
CssCode make_css(const StabilizerCode &code);
/// From the X and Z parity checks directly; rows may be dependent.
CssCode css_from_checks(const BitMatrix &hx, const BitMatrix &hz);
bool is_css(const StabilizerCode &code);

/// X-type and Z-type standard basis operators for a CSS pair.
LogicalBasis css_standard_basis(const BitMatrix &hx, const BitMatrix &hz);

struct CssDecomposition {
    LogicalClass x_part;
    LogicalClass z_part;
    bool x_trivial;
    bool z_trivial;
};

/// Splits a class of css.code (or of any check matrix generating the same
/// group) into its standard-basis X and Z factors.
CssDecomposition css_decompose(const CssCode &css, const LogicalClass &cls);

/// Fractional packing optimum over the pure P-type representatives
/// rep * (P-type stabilizers). rep must be P-type.
DeltaStar pure_delta_star(const CssCode &css, const PauliOperator &rep, char p, const DisjointnessOptions &options = {});

struct Prop3Record {
    Rational delta;
    /// Empty when that factor is trivial (its disjointness is unbounded).
    std::optional<Rational> delta_x;
    std::optional<Rational> delta_z;
    /// min of the nontrivial factor values.
    Rational upper;
    /// delta_x delta_z / (delta_x + delta_z - 1), or the single factor.
    Rational lower;
    bool upper_holds = false;
    bool lower_holds = false;
    /// The pure-type LP matches the full LP for every nontrivial factor.
    bool pure_optimum_matches = false;
    bool holds() const {
        return upper_holds && lower_holds && pure_optimum_matches;
    }
};

Prop3Record check_prop3(const CssCode &css, const LogicalClass &cls, const DisjointnessOptions &options = {});

struct CssSandwich {
    Rational lower;
    Rational upper;
    std::optional<Rational> delta;
    /// lower < delta <= upper, when delta was computed.
    std::optional<bool> holds;
};

/// (min over pure classes of delta*) / 2 and that minimum. With
/// compute_delta, also the code disjointness and the sandwich check.
CssSandwich css_sandwich(const CssCode &css, bool compute_delta = true, const DisjointnessOptions &options = {});

/// Labels of the non-trivial pure P-type classes in the standard basis.
std::vector<ClassLabel> pure_labels(std::size_t k, char p);

struct PTypeDisjointness {
    char p = 'X';
    /// Empty when there is no non-trivial P-type class.
    std::optional<Rational> value;
    std::vector<ClassDisjointness> per_class;
};

/// Min over non-trivial P-type standard-basis classes of delta*, each LP
/// restricted to P-type representatives.
PTypeDisjointness p_type_disjointness(const CssCode &css, char p, const DisjointnessOptions &options = {});

/// Each outer qubit is encoded in the inner code (k = 1). Qubit b n2 + j is
/// inner qubit j of block b. Throws InnerNotK1.
StabilizerCode concatenate(const StabilizerCode &outer, const StabilizerCode &inner, const LogicalBasis &inner_basis);

/// Image of an outer operator under P_i -> K^{P_i} on block i.
PauliOperator concatenate_operator(const PauliOperator &outer_op, const LogicalBasis &inner_basis);

struct CodeSummary {
    std::size_t d_down = 0;
    std::size_t d_up = 0;
    Rational delta;
    std::optional<long> level;
};

struct Prop4Record {
    CodeSummary outer;
    CodeSummary inner;
    CodeSummary concatenated;
    Rational product;
    bool disjointness_holds = false;
    bool d_down_holds = false;
    bool d_up_holds = false;
    /// max of the two component level bounds.
    std::optional<long> m_max;
    bool level_holds = false;
    bool holds() const {
        return disjointness_holds && d_down_holds && d_up_holds && level_holds;
    }
};

Prop4Record check_prop4(
    const StabilizerCode &s1, const StabilizerCode &s2, const LogicalBasis &basis2,
    const DisjointnessOptions &options = {});

/// Only the distance laws of the concatenation, without any LP.
Prop4Record check_concatenation_distances(
    const StabilizerCode &s1, const StabilizerCode &s2, const LogicalBasis &basis2,
    const EnumerationOptions &options = {});

struct HypergraphProduct {
    CssCode css;
    /// The block matrix exactly as assembled, before rank reduction.
    BitMatrix raw;
    std::size_t removed_rows = 0;
};

/// X rows (H1 x I_m2 | I_m1 x H2 | 0), Z rows (0 | I_n1 x H2^T | H1^T x I_n2)
/// on n1 m2 + m1 n2 qubits. Dependent rows are dropped before validation.
/// With require_full_rank, throws NotFullRank for a rank-deficient input.
HypergraphProduct hypergraph_product(const BitMatrix &h1, const BitMatrix &h2, bool require_full_rank = false);

/// The code (H | 0) with H reduced to independent rows.
CssCode classical_code(const BitMatrix &h);

enum class Prop5Status { kHolds, kViolated, kVacuous };
const char *prop5_status_name(Prop5Status s);

struct Prop5Record {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t removed_rows = 0;
    /// Empty when the product code has no logical qubits.
    std::optional<Rational> delta;
    /// Empty when S_i has no X-type logical class.
    std::optional<Rational> delta_x1;
    std::optional<Rational> delta_x2;
    std::optional<Rational> bound;
    Prop5Status status = Prop5Status::kVacuous;
};

Prop5Record check_prop5(const BitMatrix &h1, const BitMatrix &h2, const DisjointnessOptions &options = {});

}  // namespace stabdisj

#endif
