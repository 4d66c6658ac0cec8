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

#ifndef STABDISJ_PAULI_H
#define STABDISJ_PAULI_H

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "stabdisj/gf2.h"

namespace stabdisj {

/// Default cap on log2 of the coset size (n - k) for any enumeration.
inline constexpr std::size_t kDefaultCosetCapLog2 = 26;

/// An n-qubit Pauli operator modulo phase, stored as the length-2n bit
/// string (x_1..x_n | z_1..z_n). Qubit q carries X^{x_q} Z^{z_q}.
class PauliOperator {
   public:
    PauliOperator() = default;
    /// The identity on n qubits.
    explicit PauliOperator(std::size_t n);
    /// Throws DimensionError if the length is odd.
    explicit PauliOperator(BitVector vec);
    static PauliOperator from_xz(const BitVector &x, const BitVector &z);

    std::size_t num_qubits() const {
        return n_;
    }
    const BitVector &vec() const {
        return vec_;
    }
    bool x(std::size_t q) const {
        return vec_.get(q);
    }
    bool z(std::size_t q) const {
        return vec_.get(n_ + q);
    }
    /// One of 'I', 'X', 'Y', 'Z'.
    char at(std::size_t q) const;
    void set(std::size_t q, char pauli);

    BitVector x_part() const {
        return vec_.slice(0, n_);
    }
    BitVector z_part() const {
        return vec_.slice(n_, n_);
    }
    BitVector support() const;
    std::size_t weight() const {
        return support().popcount();
    }
    bool is_identity() const {
        return vec_.none();
    }
    bool is_x_type() const;
    bool is_z_type() const;
    bool commutes_with(const PauliOperator &other) const {
        return !symplectic_product(vec_, other.vec_);
    }

    /// Product with phases discarded.
    PauliOperator &operator*=(const PauliOperator &other);
    friend PauliOperator operator*(PauliOperator a, const PauliOperator &b) {
        return a *= b;
    }
    /// In-place product with a raw (X | Z) bit string of length 2n.
    void multiply_bits(const BitVector &bits) {
        vec_ ^= bits;
    }

    bool operator==(const PauliOperator &other) const = default;
    std::strong_ordering operator<=>(const PauliOperator &other) const {
        return vec_ <=> other.vec_;
    }

    std::string str() const;

   private:
    std::size_t n_ = 0;
    BitVector vec_;
};

/// Parses a string over {I, X, Y, Z}. Throws ParseError naming the index of
/// the first illegal character.
PauliOperator parse_pauli_string(std::string_view s);

/// A stabilizer code given by a full-rank, pairwise commuting check matrix.
/// Instances only come out of validate(), so the invariants always hold.
class StabilizerCode {
   public:
    const BitMatrix &checks() const {
        return checks_;
    }
    std::size_t n() const {
        return n_;
    }
    std::size_t k() const {
        return k_;
    }
    std::size_t num_checks() const {
        return checks_.nrows();
    }
    PauliOperator check(std::size_t i) const {
        return PauliOperator(checks_.row(i));
    }
    std::vector<PauliOperator> generators() const;

    bool commutes_with_all(const PauliOperator &p) const;
    /// Membership in the stabilizer group (modulo phase), by the rank test.
    bool in_stabilizer(const PauliOperator &p) const;

    bool operator==(const StabilizerCode &other) const = default;

   private:
    friend StabilizerCode validate(BitMatrix checks);

    BitMatrix checks_;
    std::size_t n_ = 0;
    std::size_t k_ = 0;
};

/// Checks full rank and pairwise commutation. Throws DimensionError for an
/// odd or zero column count, NotFullRank, or NonAbelian(i, j) for the first
/// anticommuting pair in row order.
StabilizerCode validate(BitMatrix checks);
StabilizerCode validate(const std::vector<PauliOperator> &generators);
/// Convenience for fixtures: each string is one generator.
StabilizerCode code_from_strings(const std::vector<std::string> &generators);

struct LogicalBasis {
    std::vector<PauliOperator> x_ops;
    std::vector<PauliOperator> z_ops;

    std::size_t k() const {
        return x_ops.size();
    }
};

/// k conjugate pairs obtained by symplectic Gram-Schmidt over a basis of the
/// normalizer. Deterministic for a fixed check matrix.
LogicalBasis logical_basis(const StabilizerCode &code);

/// Exponents of a logical Pauli in a logical basis. Bit i (i < k) is the
/// exponent of the i-th X operator, bit k + i that of the i-th Z operator.
struct ClassLabel {
    uint64_t bits = 0;
    std::size_t k = 0;

    bool is_trivial() const {
        return bits == 0;
    }
    bool x_exponent(std::size_t i) const {
        return (bits >> i) & 1;
    }
    bool z_exponent(std::size_t i) const {
        return (bits >> (k + i)) & 1;
    }
    /// 2k characters: X exponents for logical qubits 1..k, then Z exponents.
    std::string str() const;
    /// One of I/X/Y/Z per logical qubit, e.g. "XIY".
    std::string logical_name() const;

    auto operator<=>(const ClassLabel &other) const = default;
};

/// Labels 1 .. 4^k - 1 in increasing order. Throws TooLarge for k > 31.
std::vector<ClassLabel> nontrivial_labels(std::size_t k);

/// Product of basis operators selected by the label.
PauliOperator label_operator(const LogicalBasis &basis, const ClassLabel &label);

/// Coordinates of a normalizer element in the basis.
ClassLabel label_of(const LogicalBasis &basis, const PauliOperator &op);

/// A logical Pauli operator: the coset rep * (stabilizer group).
class LogicalClass {
   public:
    /// Throws DimensionError on a qubit-count mismatch and NotInNormalizer
    /// if rep fails to commute with a check.
    LogicalClass(StabilizerCode code, PauliOperator rep);

    const StabilizerCode &code() const {
        return code_;
    }
    const PauliOperator &rep() const {
        return rep_;
    }
    bool is_trivial() const;

   private:
    StabilizerCode code_;
    PauliOperator rep_;
};

LogicalClass class_from_label(const StabilizerCode &code, const LogicalBasis &basis, const ClassLabel &label);

/// True iff p is equivalent to the class representative: the rank of the
/// check matrix with p*rep appended equals n - k.
bool is_representative(const PauliOperator &p, const LogicalClass &cls);

/// Throws TooLarge if n - k exceeds the cap.
void check_coset_cap(const StabilizerCode &code, std::size_t coset_cap_log2);

/// Visits all 2^{n-k} members in Gray-code order over generator subsets:
/// member i = member i-1 times generator ctz(i).
void for_each_representative(
    const LogicalClass &cls,
    const std::function<void(const PauliOperator &)> &visit,
    std::size_t coset_cap_log2 = kDefaultCosetCapLog2);

std::vector<PauliOperator> enumerate_class(
    const LogicalClass &cls, std::size_t coset_cap_log2 = kDefaultCosetCapLog2);

/// Supports of the class members in the same Gray-code order, without
/// materializing the operators.
std::vector<BitVector> class_supports(
    const LogicalClass &cls, std::size_t coset_cap_log2 = kDefaultCosetCapLog2);

}  // namespace stabdisj

#endif
