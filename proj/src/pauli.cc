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

#include "stabdisj/pauli.h"

#include <bit>
#include <utility>

#include "stabdisj/errors.h"

namespace stabdisj {

PauliOperator::PauliOperator(std::size_t n) : n_(n), vec_(2 * n) {
}

PauliOperator::PauliOperator(BitVector vec) : n_(vec.size() / 2), vec_(std::move(vec)) {
    if (vec_.size() % 2 != 0) {
        throw DimensionError("Pauli bit string must have even length, got " + std::to_string(vec_.size()));
    }
}

PauliOperator PauliOperator::from_xz(const BitVector &x, const BitVector &z) {
    if (x.size() != z.size()) {
        throw DimensionError("X and Z parts differ in length");
    }
    return PauliOperator(BitVector::concat(x, z));
}

char PauliOperator::at(std::size_t q) const {
    return "IXZY"[x(q) + 2 * z(q)];
}

void PauliOperator::set(std::size_t q, char pauli) {
    switch (pauli) {
        case 'I':
            vec_.set(q, false);
            vec_.set(n_ + q, false);
            break;
        case 'X':
            vec_.set(q, true);
            vec_.set(n_ + q, false);
            break;
        case 'Y':
            vec_.set(q, true);
            vec_.set(n_ + q, true);
            break;
        case 'Z':
            vec_.set(q, false);
            vec_.set(n_ + q, true);
            break;
        default:
            throw ParseError(std::string("illegal Pauli character '") + pauli + "'", q);
    }
}

BitVector PauliOperator::support() const {
    return x_part() | z_part();
}

bool PauliOperator::is_x_type() const {
    return z_part().none();
}

bool PauliOperator::is_z_type() const {
    return x_part().none();
}

PauliOperator &PauliOperator::operator*=(const PauliOperator &other) {
    vec_ ^= other.vec_;
    return *this;
}

std::string PauliOperator::str() const {
    std::string s(n_, 'I');
    for (std::size_t q = 0; q < n_; q++) {
        s[q] = at(q);
    }
    return s;
}

PauliOperator parse_pauli_string(std::string_view s) {
    PauliOperator p(s.size());
    for (std::size_t i = 0; i < s.size(); i++) {
        char ch = s[i];
        if (ch != 'I' && ch != 'X' && ch != 'Y' && ch != 'Z') {
            throw ParseError(std::string("illegal Pauli character '") + ch + "'", i);
        }
        p.set(i, ch);
    }
    return p;
}

std::vector<PauliOperator> StabilizerCode::generators() const {
    std::vector<PauliOperator> out;
    out.reserve(checks_.nrows());
    for (const auto &r : checks_.rows()) {
        out.emplace_back(r);
    }
    return out;
}

bool StabilizerCode::commutes_with_all(const PauliOperator &p) const {
    if (p.num_qubits() != n_) {
        throw DimensionError("operator on " + std::to_string(p.num_qubits()) + " qubits vs code on " +
                             std::to_string(n_));
    }
    for (const auto &r : checks_.rows()) {
        if (symplectic_product(r, p.vec())) {
            return false;
        }
    }
    return true;
}

bool StabilizerCode::in_stabilizer(const PauliOperator &p) const {
    BitMatrix extended = checks_;
    extended.append_row(p.vec());
    return rank(extended) == checks_.nrows();
}

StabilizerCode validate(BitMatrix checks) {
    if (checks.ncols() == 0 || checks.ncols() % 2 != 0) {
        throw DimensionError("check matrix needs a positive even column count, got " +
                             std::to_string(checks.ncols()));
    }
    std::size_t r = rank(checks);
    if (r != checks.nrows()) {
        throw NotFullRank(checks.nrows(), r);
    }
    for (std::size_t i = 0; i < checks.nrows(); i++) {
        for (std::size_t j = i + 1; j < checks.nrows(); j++) {
            if (symplectic_product(checks.row(i), checks.row(j))) {
                throw NonAbelian(i, j);
            }
        }
    }
    StabilizerCode code;
    code.n_ = checks.ncols() / 2;
    code.k_ = code.n_ - checks.nrows();
    code.checks_ = std::move(checks);
    return code;
}

StabilizerCode validate(const std::vector<PauliOperator> &generators) {
    if (generators.empty()) {
        throw DimensionError("at least one generator is needed to fix the qubit count");
    }
    std::size_t n = generators.front().num_qubits();
    BitMatrix m(0, 2 * n);
    for (const auto &g : generators) {
        if (g.num_qubits() != n) {
            throw DimensionError("generators act on different qubit counts");
        }
        m.append_row(g.vec());
    }
    return validate(std::move(m));
}

StabilizerCode code_from_strings(const std::vector<std::string> &generators) {
    std::vector<PauliOperator> ops;
    for (const auto &g : generators) {
        ops.push_back(parse_pauli_string(g));
    }
    return validate(ops);
}

LogicalBasis logical_basis(const StabilizerCode &code) {
    std::size_t n = code.n();
    // v is in the normalizer iff (s_Z | s_X) . v = 0 for every check s.
    BitMatrix swapped(0, 2 * n);
    for (const auto &r : code.checks().rows()) {
        swapped.append_row(BitVector::concat(r.slice(n, n), r.slice(0, n)));
    }
    BitMatrix normalizer = kernel_basis(swapped);
    std::vector<BitVector> pool = normalizer.rows();

    LogicalBasis basis;
    while (!pool.empty()) {
        BitVector u = pool.front();
        std::size_t partner = 0;
        for (std::size_t j = 1; j < pool.size(); j++) {
            if (symplectic_product(u, pool[j])) {
                partner = j;
                break;
            }
        }
        if (partner == 0) {
            // u pairs with nothing left, so it lies in the stabilizer span.
            pool.erase(pool.begin());
            continue;
        }
        BitVector v = pool[partner];
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(partner));
        pool.erase(pool.begin());
        for (auto &w : pool) {
            bool with_v = symplectic_product(w, v);
            bool with_u = symplectic_product(w, u);
            if (with_v) {
                w ^= u;
            }
            if (with_u) {
                w ^= v;
            }
        }
        basis.x_ops.emplace_back(std::move(u));
        basis.z_ops.emplace_back(std::move(v));
    }
    return basis;
}

std::string ClassLabel::str() const {
    std::string s(2 * k, '0');
    for (std::size_t i = 0; i < 2 * k; i++) {
        if ((bits >> i) & 1) {
            s[i] = '1';
        }
    }
    return s;
}

std::string ClassLabel::logical_name() const {
    std::string s(k, 'I');
    for (std::size_t i = 0; i < k; i++) {
        s[i] = "IXZY"[x_exponent(i) + 2 * z_exponent(i)];
    }
    return s;
}

std::vector<ClassLabel> nontrivial_labels(std::size_t k) {
    if (k > 31) {
        throw TooLarge("4^k - 1 logical classes with k = " + std::to_string(k) + " cannot be enumerated");
    }
    std::vector<ClassLabel> labels;
    uint64_t count = uint64_t{1} << (2 * k);
    labels.reserve(count - 1);
    for (uint64_t b = 1; b < count; b++) {
        labels.push_back({b, k});
    }
    return labels;
}

PauliOperator label_operator(const LogicalBasis &basis, const ClassLabel &label) {
    if (label.k != basis.k()) {
        throw DimensionError("label for k = " + std::to_string(label.k) + " used with a basis of k = " +
                             std::to_string(basis.k()));
    }
    std::size_t n = basis.k() ? basis.x_ops.front().num_qubits() : 0;
    PauliOperator op(n);
    for (std::size_t i = 0; i < label.k; i++) {
        if (label.x_exponent(i)) {
            op *= basis.x_ops[i];
        }
        if (label.z_exponent(i)) {
            op *= basis.z_ops[i];
        }
    }
    return op;
}

ClassLabel label_of(const LogicalBasis &basis, const PauliOperator &op) {
    ClassLabel label{0, basis.k()};
    for (std::size_t i = 0; i < basis.k(); i++) {
        if (!op.commutes_with(basis.z_ops[i])) {
            label.bits |= uint64_t{1} << i;
        }
        if (!op.commutes_with(basis.x_ops[i])) {
            label.bits |= uint64_t{1} << (basis.k() + i);
        }
    }
    return label;
}

LogicalClass::LogicalClass(StabilizerCode code, PauliOperator rep) : code_(std::move(code)), rep_(std::move(rep)) {
    if (rep_.num_qubits() != code_.n()) {
        throw DimensionError("representative on " + std::to_string(rep_.num_qubits()) +
                             " qubits for a code on " + std::to_string(code_.n()));
    }
    if (!code_.commutes_with_all(rep_)) {
        throw NotInNormalizer();
    }
}

bool LogicalClass::is_trivial() const {
    return code_.in_stabilizer(rep_);
}

LogicalClass class_from_label(const StabilizerCode &code, const LogicalBasis &basis, const ClassLabel &label) {
    return LogicalClass(code, label_operator(basis, label));
}

bool is_representative(const PauliOperator &p, const LogicalClass &cls) {
    if (p.num_qubits() != cls.code().n()) {
        return false;
    }
    return cls.code().in_stabilizer(p * cls.rep());
}

void check_coset_cap(const StabilizerCode &code, std::size_t coset_cap_log2) {
    std::size_t r = code.num_checks();
    if (r > coset_cap_log2 || r >= 63) {
        throw TooLarge("coset of size 2^" + std::to_string(r) + " exceeds the enumeration cap 2^" +
                       std::to_string(coset_cap_log2));
    }
}

void for_each_representative(
    const LogicalClass &cls, const std::function<void(const PauliOperator &)> &visit, std::size_t coset_cap_log2) {
    const StabilizerCode &code = cls.code();
    check_coset_cap(code, coset_cap_log2);
    uint64_t count = uint64_t{1} << code.num_checks();
    PauliOperator current = cls.rep();
    visit(current);
    for (uint64_t i = 1; i < count; i++) {
        current.multiply_bits(code.checks().row(static_cast<std::size_t>(std::countr_zero(i))));
        visit(current);
    }
}

std::vector<PauliOperator> enumerate_class(const LogicalClass &cls, std::size_t coset_cap_log2) {
    std::vector<PauliOperator> out;
    check_coset_cap(cls.code(), coset_cap_log2);
    out.reserve(std::size_t{1} << cls.code().num_checks());
    for_each_representative(cls, [&](const PauliOperator &p) { out.push_back(p); }, coset_cap_log2);
    return out;
}

std::vector<BitVector> class_supports(const LogicalClass &cls, std::size_t coset_cap_log2) {
    const StabilizerCode &code = cls.code();
    check_coset_cap(code, coset_cap_log2);
    std::size_t n = code.n();
    std::vector<BitVector> gx;
    std::vector<BitVector> gz;
    for (const auto &r : code.checks().rows()) {
        gx.push_back(r.slice(0, n));
        gz.push_back(r.slice(n, n));
    }
    uint64_t count = uint64_t{1} << code.num_checks();
    std::vector<BitVector> out;
    out.reserve(count);
    BitVector x = cls.rep().x_part();
    BitVector z = cls.rep().z_part();
    out.push_back(x | z);
    for (uint64_t i = 1; i < count; i++) {
        std::size_t g = static_cast<std::size_t>(std::countr_zero(i));
        x ^= gx[g];
        z ^= gz[g];
        out.push_back(x | z);
    }
    return out;
}

}  // namespace stabdisj
