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

#ifndef STABDISJ_GF2_H
#define STABDISJ_GF2_H

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace stabdisj {

/// A fixed-length vector over GF(2), packed 64 entries per word.
///
/// Bits past `size()` in the last word are always zero, so word-wise
/// comparisons and popcounts need no masking.
class BitVector {
   public:
    BitVector() = default;
    explicit BitVector(std::size_t len);

    /// Parses a string of '0'/'1' characters. Throws ParseError on anything else.
    static BitVector from_string(std::string_view bits);
    static BitVector unit(std::size_t len, std::size_t index);
    static BitVector concat(const BitVector &head, const BitVector &tail);

    std::size_t size() const {
        return len_;
    }
    bool get(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1;
    }
    void set(std::size_t i, bool value = true) {
        uint64_t mask = uint64_t{1} << (i & 63);
        if (value) {
            words_[i >> 6] |= mask;
        } else {
            words_[i >> 6] &= ~mask;
        }
    }
    void flip(std::size_t i) {
        words_[i >> 6] ^= uint64_t{1} << (i & 63);
    }

    BitVector &operator^=(const BitVector &other);
    BitVector &operator&=(const BitVector &other);
    BitVector &operator|=(const BitVector &other);
    friend BitVector operator^(BitVector a, const BitVector &b) {
        return a ^= b;
    }
    friend BitVector operator&(BitVector a, const BitVector &b) {
        return a &= b;
    }
    friend BitVector operator|(BitVector a, const BitVector &b) {
        return a |= b;
    }

    bool operator==(const BitVector &other) const = default;
    /// Lexicographic on (length, words), used only for deterministic containers.
    std::strong_ordering operator<=>(const BitVector &other) const;

    std::size_t popcount() const;
    bool none() const;
    bool any() const {
        return !none();
    }
    /// Parity of the entrywise product.
    bool dot(const BitVector &other) const;
    /// Size of the intersection of the two supports.
    std::size_t and_popcount(const BitVector &other) const;
    bool is_subset_of(const BitVector &other) const;
    std::optional<std::size_t> first_set() const;
    /// Indices of the set entries in increasing order.
    std::vector<std::size_t> ones() const;

    BitVector slice(std::size_t begin, std::size_t len) const;

    std::span<const uint64_t> words() const {
        return words_;
    }
    std::span<uint64_t> mutable_words() {
        return words_;
    }

    /// '0'/'1' characters, index 0 first.
    std::string str() const;

   private:
    void check_same_size(const BitVector &other) const;

    std::size_t len_ = 0;
    std::vector<uint64_t> words_;
};

/// A dense row-major matrix over GF(2).
class BitMatrix {
   public:
    BitMatrix() = default;
    BitMatrix(std::size_t nrows, std::size_t ncols);
    /// All rows must have length `ncols`; throws DimensionError otherwise.
    BitMatrix(std::vector<BitVector> rows, std::size_t ncols);

    static BitMatrix identity(std::size_t n);
    /// Rows given as '0'/'1' strings; whitespace inside a row is ignored.
    static BitMatrix from_strings(const std::vector<std::string> &rows);

    std::size_t nrows() const {
        return rows_.size();
    }
    std::size_t ncols() const {
        return ncols_;
    }
    const BitVector &row(std::size_t i) const {
        return rows_[i];
    }
    BitVector &row(std::size_t i) {
        return rows_[i];
    }
    const std::vector<BitVector> &rows() const {
        return rows_;
    }
    bool get(std::size_t r, std::size_t c) const {
        return rows_[r].get(c);
    }
    void set(std::size_t r, std::size_t c, bool value = true) {
        rows_[r].set(c, value);
    }

    void append_row(BitVector row);
    BitMatrix transpose() const;
    /// Matrix product over GF(2).
    BitMatrix operator*(const BitMatrix &other) const;
    /// m * v^T as a column, returned as a vector of length nrows.
    BitVector apply(const BitVector &v) const;

    bool operator==(const BitMatrix &other) const = default;

    std::string str() const;

   private:
    std::size_t ncols_ = 0;
    std::vector<BitVector> rows_;
};

BitMatrix kron(const BitMatrix &a, const BitMatrix &b);
BitMatrix hstack(const std::vector<BitMatrix> &blocks);
BitMatrix vstack(const std::vector<BitMatrix> &blocks);

struct RrefResult {
    BitMatrix matrix;
    std::vector<std::size_t> pivots;
};

/// Dimension of the row span.
std::size_t rank(const BitMatrix &m);

/// Reduced row echelon form. Pivots are chosen leftmost column first and
/// topmost available row first; zero rows end up at the bottom and the
/// shape is preserved.
RrefResult rref(const BitMatrix &m);

/// True iff v is a GF(2) combination of the rows of m.
bool in_span(const BitVector &v, const BitMatrix &m);

/// Basis of {x : m x^T = 0}, one row per free column of rref(m), in
/// increasing free-column order.
BitMatrix kernel_basis(const BitMatrix &m);

/// Maximal independent subset of the rows, keeping the earliest rows.
/// `dropped`, when given, receives the indices of the removed rows.
BitMatrix independent_rows(const BitMatrix &m, std::vector<std::size_t> *dropped = nullptr);

/// Inverse of a square invertible matrix; throws DimensionError otherwise.
BitMatrix inverse(const BitMatrix &m);

/// u_X . v_Z + u_Z . v_X (mod 2) for length-2n vectors laid out (X | Z).
bool symplectic_product(const BitVector &u, const BitVector &v);

}  // namespace stabdisj

#endif
