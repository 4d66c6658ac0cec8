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


#include "stabdisj/families.h"

#include <algorithm>
#include <bit>

#include "stabdisj/errors.h"
#include "stabdisj/logical.h"

namespace stabdisj {

namespace {

BitMatrix x_half(const StabilizerCode &code) {
    BitMatrix m(0, code.n());
    for (const auto &r : code.checks().rows()) {
        m.append_row(r.slice(0, code.n()));
    }
    return m;
}

BitMatrix z_half(const StabilizerCode &code) {
    BitMatrix m(0, code.n());
    for (const auto &r : code.checks().rows()) {
        m.append_row(r.slice(code.n(), code.n()));
    }
    return m;
}

// Rows sum_i a_i m_i for each row a of coeffs.
BitMatrix combine(const BitMatrix &coeffs, const BitMatrix &m) {
    BitMatrix out(0, m.ncols());
    for (const auto &a : coeffs.rows()) {
        BitVector acc(m.ncols());
        for (std::size_t i : a.ones()) {
            acc ^= m.row(i);
        }
        out.append_row(std::move(acc));
    }
    return out;
}

// Kernel vectors of `constraints` that extend span(base), in kernel order.
std::vector<BitVector> extend_beyond(const BitMatrix &constraints, const BitMatrix &base) {
    BitMatrix span = base;
    std::vector<BitVector> out;
    BitMatrix kernel = kernel_basis(constraints);
    for (const auto &v : kernel.rows()) {
        if (!in_span(v, span)) {
            out.push_back(v);
            span.append_row(v);
        }
    }
    return out;
}

bool same_group(const StabilizerCode &a, const StabilizerCode &b) {
    if (a.n() != b.n() || a.num_checks() != b.num_checks()) {
        return false;
    }
    for (const auto &g : a.generators()) {
        if (!b.in_stabilizer(g)) {
            return false;
        }
    }
    return true;
}

uint64_t low_mask(std::size_t k) {
    return k >= 64 ? ~uint64_t{0} : (uint64_t{1} << k) - 1;
}

}  // namespace

LogicalBasis css_standard_basis(const BitMatrix &hx, const BitMatrix &hz) {
    if (hx.ncols() != hz.ncols()) {
        throw DimensionError("X and Z checks act on different qubit counts");
    }
    std::size_t n = hx.ncols();
    for (std::size_t i = 0; i < hx.nrows(); i++) {
        for (std::size_t j = 0; j < hz.nrows(); j++) {
            if (hx.row(i).dot(hz.row(j))) {
                throw NonAbelian(i, hx.nrows() + j);
            }
        }
    }
    std::vector<BitVector> xs = extend_beyond(hz, hx);
    std::vector<BitVector> zs = extend_beyond(hx, hz);
    std::size_t k = xs.size();
    LogicalBasis basis;
    if (k == 0) {
        return basis;
    }
    BitMatrix pairing(k, k);
    for (std::size_t i = 0; i < k; i++) {
        for (std::size_t j = 0; j < k; j++) {
            pairing.set(i, j, xs[i].dot(zs[j]));
        }
    }
    BitMatrix q = inverse(pairing).transpose();
    BitVector zero(n);
    for (std::size_t i = 0; i < k; i++) {
        basis.x_ops.push_back(PauliOperator::from_xz(xs[i], zero));
        BitVector z(n);
        for (std::size_t l = 0; l < k; l++) {
            if (q.get(i, l)) {
                z ^= zs[l];
            }
        }
        basis.z_ops.push_back(PauliOperator::from_xz(zero, z));
    }
    return basis;
}

CssCode css_from_checks(const BitMatrix &hx, const BitMatrix &hz) {
    if (hx.ncols() != hz.ncols()) {
        throw DimensionError("X and Z checks act on different qubit counts");
    }
    std::size_t n = hx.ncols();
    BitMatrix x = independent_rows(hx);
    BitMatrix z = independent_rows(hz);
    BitMatrix checks(0, 2 * n);
    BitVector zero(n);
    for (const auto &r : x.rows()) {
        checks.append_row(BitVector::concat(r, zero));
    }
    for (const auto &r : z.rows()) {
        checks.append_row(BitVector::concat(zero, r));
    }
    StabilizerCode code = validate(std::move(checks));
    LogicalBasis basis = css_standard_basis(x, z);
    return CssCode{std::move(code), std::move(x), std::move(z), std::move(basis)};
}

CssCode make_css(const StabilizerCode &code) {
    BitMatrix mx = x_half(code);
    BitMatrix mz = z_half(code);
    // a . M has no Z part iff a is in the left kernel of M_Z.
    BitMatrix hx = combine(kernel_basis(mz.transpose()), mx);
    BitMatrix hz = combine(kernel_basis(mx.transpose()), mz);
    if (rank(hx) + rank(hz) != code.num_checks()) {
        throw NotCss("stabilizer group has no generating set of pure X and pure Z operators");
    }
    return css_from_checks(hx, hz);
}

bool is_css(const StabilizerCode &code) {
    BitMatrix mx = x_half(code);
    BitMatrix mz = z_half(code);
    std::size_t dx = code.num_checks() - rank(mz);
    std::size_t dz = code.num_checks() - rank(mx);
    return dx + dz == code.num_checks();
}

CssDecomposition css_decompose(const CssCode &css, const LogicalClass &cls) {
    if (!same_group(cls.code(), css.code)) {
        throw NotCss("class does not belong to this CSS code");
    }
    const LogicalBasis &basis = css.standard_basis;
    ClassLabel label = label_of(basis, cls.rep());
    ClassLabel xl{label.bits & low_mask(basis.k()), basis.k()};
    ClassLabel zl{label.bits & ~low_mask(basis.k()), basis.k()};
    return CssDecomposition{
        LogicalClass(css.code, label_operator(basis, xl)),
        LogicalClass(css.code, label_operator(basis, zl)),
        xl.is_trivial(),
        zl.is_trivial(),
    };
}

DeltaStar pure_delta_star(const CssCode &css, const PauliOperator &rep, char p, const DisjointnessOptions &options) {
    if (p != 'X' && p != 'Z') {
        throw DimensionError(std::string("Pauli type must be X or Z, got ") + p);
    }
    bool is_x = p == 'X';
    if (is_x ? !rep.is_x_type() : !rep.is_z_type()) {
        throw DimensionError(std::string("representative is not ") + p + "-type");
    }
    if (css.code.in_stabilizer(rep)) {
        throw TrivialClass();
    }
    const BitMatrix &gens = is_x ? css.hx : css.hz;
    if (gens.nrows() > options.coset_cap_log2 || gens.nrows() >= 63) {
        throw TooLarge("pure coset of size 2^" + std::to_string(gens.nrows()) + " exceeds the enumeration cap 2^" +
                       std::to_string(options.coset_cap_log2));
    }
    std::size_t n = css.code.n();
    BitVector zero(n);
    BitVector cur = is_x ? rep.x_part() : rep.z_part();
    std::vector<BitVector> supports{cur};
    uint64_t count = uint64_t{1} << gens.nrows();
    for (uint64_t i = 1; i < count; i++) {
        cur ^= gens.row(static_cast<std::size_t>(std::countr_zero(i)));
        supports.push_back(cur);
    }
    std::vector<std::size_t> keep(supports.size());
    for (std::size_t i = 0; i < keep.size(); i++) {
        keep[i] = i;
    }
    if (options.reduce_dominated) {
        keep = minimal_support_indices(supports);
    }
    std::vector<BitVector> kept;
    DeltaStar out;
    for (std::size_t i : keep) {
        kept.push_back(supports[i]);
        out.variables.push_back(is_x ? PauliOperator::from_xz(supports[i], zero)
                                     : PauliOperator::from_xz(zero, supports[i]));
    }
    out.witness = solve_lp(packing_lp(kept, n));
    out.value = out.witness.value;
    return out;
}

Prop3Record check_prop3(const CssCode &css, const LogicalClass &cls, const DisjointnessOptions &options) {
    CssDecomposition dec = css_decompose(css, cls);
    Prop3Record rec;
    rec.delta = delta_star(cls, options).value;
    rec.pure_optimum_matches = true;
    if (!dec.x_trivial) {
        rec.delta_x = delta_star(dec.x_part, options).value;
        rec.pure_optimum_matches =
            rec.pure_optimum_matches && pure_delta_star(css, dec.x_part.rep(), 'X', options).value == *rec.delta_x;
    }
    if (!dec.z_trivial) {
        rec.delta_z = delta_star(dec.z_part, options).value;
        rec.pure_optimum_matches =
            rec.pure_optimum_matches && pure_delta_star(css, dec.z_part.rep(), 'Z', options).value == *rec.delta_z;
    }
    if (rec.delta_x && rec.delta_z) {
        const Rational &a = *rec.delta_x;
        const Rational &b = *rec.delta_z;
        rec.upper = std::min(a, b);
        rec.lower = a * b / (a + b - 1);
    } else {
        rec.upper = rec.delta_x ? *rec.delta_x : *rec.delta_z;
        rec.lower = rec.upper;
    }
    rec.upper_holds = rec.delta <= rec.upper;
    rec.lower_holds = rec.delta >= rec.lower;
    return rec;
}

std::vector<ClassLabel> pure_labels(std::size_t k, char p) {
    if (k > 31) {
        throw TooLarge("2^k - 1 pure classes with k = " + std::to_string(k) + " cannot be enumerated");
    }
    std::vector<ClassLabel> out;
    for (uint64_t b = 1; b < (uint64_t{1} << k); b++) {
        out.push_back({p == 'X' ? b : b << k, k});
    }
    return out;
}

CssSandwich css_sandwich(const CssCode &css, bool compute_delta, const DisjointnessOptions &options) {
    std::size_t k = css.standard_basis.k();
    if (k == 0) {
        throw HypothesisNotMet("code has no logical qubits, so there are no pure classes");
    }
    CssSandwich out;
    bool first = true;
    for (char p : {'X', 'Z'}) {
        for (const auto &label : pure_labels(k, p)) {
            Rational v = delta_star(class_from_label(css.code, css.standard_basis, label), options).value;
            if (first || v < out.upper) {
                out.upper = v;
                first = false;
            }
        }
    }
    out.lower = out.upper / 2;
    if (compute_delta) {
        out.delta = code_disjointness(css.code, css.standard_basis, options).code_delta;
        out.holds = out.lower < *out.delta && *out.delta <= out.upper;
    }
    return out;
}

PTypeDisjointness p_type_disjointness(const CssCode &css, char p, const DisjointnessOptions &options) {
    PTypeDisjointness out;
    out.p = p;
    for (const auto &label : pure_labels(css.standard_basis.k(), p)) {
        DeltaStar ds = pure_delta_star(css, label_operator(css.standard_basis, label), p, options);
        out.per_class.push_back({label, ds.value, witness_c(ds.witness)});
        if (!out.value || ds.value < *out.value) {
            out.value = ds.value;
        }
    }
    return out;
}

namespace {

// Places a block operator onto block b of an n1-block layout.
void place(BitVector &out, const PauliOperator &op, std::size_t b, std::size_t total) {
    std::size_t n2 = op.num_qubits();
    for (std::size_t j = 0; j < n2; j++) {
        if (op.x(j)) {
            out.flip(b * n2 + j);
        }
        if (op.z(j)) {
            out.flip(total + b * n2 + j);
        }
    }
}

void check_inner(const LogicalBasis &inner_basis) {
    if (inner_basis.k() != 1) {
        throw InnerNotK1("inner code must encode exactly one qubit, basis has k = " +
                         std::to_string(inner_basis.k()));
    }
}

}  // namespace

PauliOperator concatenate_operator(const PauliOperator &outer_op, const LogicalBasis &inner_basis) {
    check_inner(inner_basis);
    const PauliOperator &kx = inner_basis.x_ops[0];
    const PauliOperator &kz = inner_basis.z_ops[0];
    std::size_t n1 = outer_op.num_qubits();
    std::size_t total = n1 * kx.num_qubits();
    BitVector out(2 * total);
    for (std::size_t b = 0; b < n1; b++) {
        if (outer_op.x(b)) {
            place(out, kx, b, total);
        }
        if (outer_op.z(b)) {
            place(out, kz, b, total);
        }
    }
    return PauliOperator(std::move(out));
}

StabilizerCode concatenate(const StabilizerCode &outer, const StabilizerCode &inner, const LogicalBasis &inner_basis) {
    if (inner.k() != 1) {
        throw InnerNotK1("inner code must encode exactly one qubit, got k = " + std::to_string(inner.k()));
    }
    check_inner(inner_basis);
    if (inner_basis.x_ops[0].num_qubits() != inner.n()) {
        throw DimensionError("inner basis does not match the inner code");
    }
    std::size_t n1 = outer.n();
    std::size_t total = n1 * inner.n();
    BitMatrix checks(0, 2 * total);
    for (std::size_t b = 0; b < n1; b++) {
        for (const auto &g : inner.generators()) {
            BitVector row(2 * total);
            place(row, g, b, total);
            checks.append_row(std::move(row));
        }
    }
    for (const auto &g : outer.generators()) {
        checks.append_row(concatenate_operator(g, inner_basis).vec());
    }
    return validate(std::move(checks));
}

namespace {

CodeSummary summarize(const StabilizerCode &code, const DisjointnessOptions &options, bool with_lp) {
    CodeSummary s;
    LogicalBasis basis = logical_basis(code);
    EnumerationOptions eopt{options.coset_cap_log2, options.threads};
    DistanceReport dr = distance_report(code, basis, eopt);
    s.d_down = dr.d_min;
    s.d_up = dr.d_max;
    if (with_lp) {
        s.delta = code_disjointness(code, basis, options).code_delta;
        try {
            s.level = level_bound(s.d_down, s.d_up, s.delta).m_max;
        } catch (const BoundInapplicable &) {
        }
    }
    return s;
}

Prop4Record prop4(
    const StabilizerCode &s1, const StabilizerCode &s2, const LogicalBasis &basis2, const DisjointnessOptions &options,
    bool with_lp) {
    StabilizerCode cat = concatenate(s1, s2, basis2);
    Prop4Record rec;
    rec.outer = summarize(s1, options, with_lp);
    rec.inner = summarize(s2, options, with_lp);
    rec.concatenated = summarize(cat, options, with_lp);
    rec.d_down_holds = rec.concatenated.d_down >= rec.outer.d_down * rec.inner.d_down;
    rec.d_up_holds = rec.concatenated.d_up <= rec.outer.d_up * rec.inner.d_up;
    rec.disjointness_holds = true;
    rec.level_holds = true;
    if (with_lp) {
        rec.product = rec.outer.delta * rec.inner.delta;
        rec.disjointness_holds = rec.concatenated.delta >= rec.product;
        if (rec.outer.level && rec.inner.level) {
            rec.m_max = std::max(*rec.outer.level, *rec.inner.level);
            rec.level_holds = rec.concatenated.level && *rec.concatenated.level <= *rec.m_max;
        }
    }
    return rec;
}

}  // namespace

Prop4Record check_prop4(
    const StabilizerCode &s1, const StabilizerCode &s2, const LogicalBasis &basis2, const DisjointnessOptions &options) {
    return prop4(s1, s2, basis2, options, true);
}

Prop4Record check_concatenation_distances(
    const StabilizerCode &s1, const StabilizerCode &s2, const LogicalBasis &basis2, const EnumerationOptions &options) {
    DisjointnessOptions dopt;
    dopt.coset_cap_log2 = options.coset_cap_log2;
    dopt.threads = options.threads;
    return prop4(s1, s2, basis2, dopt, false);
}

HypergraphProduct hypergraph_product(const BitMatrix &h1, const BitMatrix &h2, bool require_full_rank) {
    if (require_full_rank) {
        for (const BitMatrix *h : {&h1, &h2}) {
            std::size_t r = rank(*h);
            if (r != h->nrows()) {
                throw NotFullRank(h->nrows(), r);
            }
        }
    }
    std::size_t m1 = h1.nrows(), n1 = h1.ncols();
    std::size_t m2 = h2.nrows(), n2 = h2.ncols();
    std::size_t nq = n1 * m2 + m1 * n2;
    BitMatrix hx = hstack({kron(h1, BitMatrix::identity(m2)), kron(BitMatrix::identity(m1), h2)});
    BitMatrix hz = hstack({kron(BitMatrix::identity(n1), h2.transpose()), kron(h1.transpose(), BitMatrix::identity(n2))});
    if (hx.nrows() == 0) {
        hx = BitMatrix(0, nq);
    }
    if (hz.nrows() == 0) {
        hz = BitMatrix(0, nq);
    }
    BitMatrix raw = vstack({hstack({hx, BitMatrix(hx.nrows(), nq)}), hstack({BitMatrix(hz.nrows(), nq), hz})});
    CssCode css = css_from_checks(hx, hz);
    std::size_t removed = raw.nrows() - css.code.num_checks();
    return HypergraphProduct{std::move(css), std::move(raw), removed};
}

CssCode classical_code(const BitMatrix &h) {
    return css_from_checks(h, BitMatrix(0, h.ncols()));
}

const char *prop5_status_name(Prop5Status s) {
    switch (s) {
        case Prop5Status::kHolds:
            return "holds";
        case Prop5Status::kViolated:
            return "violated";
        case Prop5Status::kVacuous:
            return "vacuous";
    }
    return "?";
}

Prop5Record check_prop5(const BitMatrix &h1, const BitMatrix &h2, const DisjointnessOptions &options) {
    HypergraphProduct hp = hypergraph_product(h1, h2);
    Prop5Record rec;
    rec.n = hp.css.code.n();
    rec.k = hp.css.code.k();
    rec.removed_rows = hp.removed_rows;
    if (rec.k > 0) {
        rec.delta = code_disjointness(hp.css.code, hp.css.standard_basis, options).code_delta;
    }
    rec.delta_x1 = p_type_disjointness(classical_code(h1), 'X', options).value;
    rec.delta_x2 = p_type_disjointness(classical_code(h2), 'X', options).value;
    for (const auto &v : {rec.delta_x1, rec.delta_x2}) {
        if (v && (!rec.bound || *v < *rec.bound)) {
            rec.bound = v;
        }
    }
    if (rec.delta && rec.bound) {
        rec.status = *rec.delta <= *rec.bound ? Prop5Status::kHolds : Prop5Status::kViolated;
    }
    return rec;
}

}  // namespace stabdisj
