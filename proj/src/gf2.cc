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

#include "stabdisj/gf2.h"

#include <algorithm>
#include <bit>
#include <utility>

#include "stabdisj/errors.h"

namespace stabdisj {

namespace {

std::size_t num_words(std::size_t len) {
    return (len + 63) / 64;
}

}  // namespace

BitVector::BitVector(std::size_t len) : len_(len), words_(num_words(len), 0) {
}

BitVector BitVector::from_string(std::string_view bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); i++) {
        if (bits[i] == '1') {
            v.set(i);
        } else if (bits[i] != '0') {
            throw ParseError(std::string("expected '0' or '1' but got '") + bits[i] + "'", i);
        }
    }
    return v;
}

BitVector BitVector::unit(std::size_t len, std::size_t index) {
    BitVector v(len);
    v.set(index);
    return v;
}

BitVector BitVector::concat(const BitVector &head, const BitVector &tail) {
    BitVector v(head.size() + tail.size());
    std::copy(head.words_.begin(), head.words_.end(), v.words_.begin());
    if (head.size() % 64 == 0) {
        std::copy(tail.words_.begin(), tail.words_.end(), v.words_.begin() + head.words_.size());
    } else {
        for (std::size_t i : tail.ones()) {
            v.set(head.size() + i);
        }
    }
    return v;
}

void BitVector::check_same_size(const BitVector &other) const {
    if (len_ != other.len_) {
        throw DimensionError(
            "bit vector length mismatch: " + std::to_string(len_) + " vs " + std::to_string(other.len_));
    }
}

BitVector &BitVector::operator^=(const BitVector &other) {
    check_same_size(other);
    for (std::size_t w = 0; w < words_.size(); w++) {
        words_[w] ^= other.words_[w];
    }
    return *this;
}

BitVector &BitVector::operator&=(const BitVector &other) {
    check_same_size(other);
    for (std::size_t w = 0; w < words_.size(); w++) {
        words_[w] &= other.words_[w];
    }
    return *this;
}

BitVector &BitVector::operator|=(const BitVector &other) {
    check_same_size(other);
    for (std::size_t w = 0; w < words_.size(); w++) {
        words_[w] |= other.words_[w];
    }
    return *this;
}

std::strong_ordering BitVector::operator<=>(const BitVector &other) const {
    if (auto c = len_ <=> other.len_; c != 0) {
        return c;
    }
    // Compare as bit strings, index 0 most significant.
    for (std::size_t i = 0; i < len_; i++) {
        bool a = get(i);
        bool b = other.get(i);
        if (a != b) {
            return a ? std::strong_ordering::greater : std::strong_ordering::less;
        }
    }
    return std::strong_ordering::equal;
}

std::size_t BitVector::popcount() const {
    std::size_t total = 0;
    for (uint64_t w : words_) {
        total += std::popcount(w);
    }
    return total;
}

bool BitVector::none() const {
    return std::all_of(words_.begin(), words_.end(), [](uint64_t w) { return w == 0; });
}

bool BitVector::dot(const BitVector &other) const {
    check_same_size(other);
    uint64_t acc = 0;
    for (std::size_t w = 0; w < words_.size(); w++) {
        acc ^= words_[w] & other.words_[w];
    }
    return std::popcount(acc) & 1;
}

std::size_t BitVector::and_popcount(const BitVector &other) const {
    check_same_size(other);
    std::size_t total = 0;
    for (std::size_t w = 0; w < words_.size(); w++) {
        total += std::popcount(words_[w] & other.words_[w]);
    }
    return total;
}

bool BitVector::is_subset_of(const BitVector &other) const {
    check_same_size(other);
    for (std::size_t w = 0; w < words_.size(); w++) {
        if (words_[w] & ~other.words_[w]) {
            return false;
        }
    }
    return true;
}

std::optional<std::size_t> BitVector::first_set() const {
    for (std::size_t w = 0; w < words_.size(); w++) {
        if (words_[w]) {
            return w * 64 + std::countr_zero(words_[w]);
        }
    }
    return std::nullopt;
}

std::vector<std::size_t> BitVector::ones() const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < words_.size(); w++) {
        uint64_t bits = words_[w];
        while (bits) {
            out.push_back(w * 64 + std::countr_zero(bits));
            bits &= bits - 1;
        }
    }
    return out;
}

BitVector BitVector::slice(std::size_t begin, std::size_t len) const {
    if (begin + len > len_) {
        throw DimensionError("slice out of range");
    }
    BitVector out(len);
    if (begin % 64 == 0) {
        std::size_t first = begin / 64;
        for (std::size_t w = 0; w < out.words_.size(); w++) {
            out.words_[w] = words_[first + w];
        }
    } else {
        std::size_t shift = begin % 64;
        std::size_t first = begin / 64;
        for (std::size_t w = 0; w < out.words_.size(); w++) {
            uint64_t lo = words_[first + w] >> shift;
            uint64_t hi = first + w + 1 < words_.size() ? words_[first + w + 1] << (64 - shift) : 0;
            out.words_[w] = lo | hi;
        }
    }
    if (len % 64 != 0 && !out.words_.empty()) {
        out.words_.back() &= (uint64_t{1} << (len % 64)) - 1;
    }
    return out;
}

std::string BitVector::str() const {
    std::string s(len_, '0');
    for (std::size_t i = 0; i < len_; i++) {
        if (get(i)) {
            s[i] = '1';
        }
    }
    return s;
}

BitMatrix::BitMatrix(std::size_t nrows, std::size_t ncols) : ncols_(ncols), rows_(nrows, BitVector(ncols)) {
}

BitMatrix::BitMatrix(std::vector<BitVector> rows, std::size_t ncols) : ncols_(ncols), rows_(std::move(rows)) {
    for (const auto &r : rows_) {
        if (r.size() != ncols_) {
            throw DimensionError(
                "row of length " + std::to_string(r.size()) + " in a matrix with " + std::to_string(ncols_) +
                " columns");
        }
    }
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; i++) {
        m.set(i, i);
    }
    return m;
}

BitMatrix BitMatrix::from_strings(const std::vector<std::string> &rows) {
    std::vector<BitVector> parsed;
    for (const auto &r : rows) {
        std::string compact;
        for (char ch : r) {
            if (ch != ' ' && ch != '\t') {
                compact.push_back(ch);
            }
        }
        parsed.push_back(BitVector::from_string(compact));
    }
    std::size_t ncols = parsed.empty() ? 0 : parsed.front().size();
    return BitMatrix(std::move(parsed), ncols);
}

void BitMatrix::append_row(BitVector row) {
    if (row.size() != ncols_) {
        throw DimensionError(
            "appending a row of length " + std::to_string(row.size()) + " to a matrix with " +
            std::to_string(ncols_) + " columns");
    }
    rows_.push_back(std::move(row));
}

BitMatrix BitMatrix::transpose() const {
    BitMatrix t(ncols_, rows_.size());
    for (std::size_t r = 0; r < rows_.size(); r++) {
        for (std::size_t c : rows_[r].ones()) {
            t.set(c, r);
        }
    }
    return t;
}

BitMatrix BitMatrix::operator*(const BitMatrix &other) const {
    if (ncols_ != other.nrows()) {
        throw DimensionError("matrix product shape mismatch");
    }
    BitMatrix out(rows_.size(), other.ncols());
    for (std::size_t r = 0; r < rows_.size(); r++) {
        for (std::size_t k : rows_[r].ones()) {
            out.rows_[r] ^= other.rows_[k];
        }
    }
    return out;
}

BitVector BitMatrix::apply(const BitVector &v) const {
    BitVector out(rows_.size());
    for (std::size_t r = 0; r < rows_.size(); r++) {
        out.set(r, rows_[r].dot(v));
    }
    return out;
}

std::string BitMatrix::str() const {
    std::string s;
    for (const auto &r : rows_) {
        s += r.str();
        s += '\n';
    }
    return s;
}

BitMatrix kron(const BitMatrix &a, const BitMatrix &b) {
    BitMatrix out(a.nrows() * b.nrows(), a.ncols() * b.ncols());
    for (std::size_t i = 0; i < a.nrows(); i++) {
        for (std::size_t j : a.row(i).ones()) {
            for (std::size_t k = 0; k < b.nrows(); k++) {
                for (std::size_t l : b.row(k).ones()) {
                    out.set(i * b.nrows() + k, j * b.ncols() + l);
                }
            }
        }
    }
    return out;
}

BitMatrix hstack(const std::vector<BitMatrix> &blocks) {
    if (blocks.empty()) {
        return {};
    }
    std::size_t nrows = blocks.front().nrows();
    std::size_t ncols = 0;
    for (const auto &b : blocks) {
        if (b.nrows() != nrows) {
            throw DimensionError("hstack row count mismatch");
        }
        ncols += b.ncols();
    }
    BitMatrix out(nrows, ncols);
    std::size_t offset = 0;
    for (const auto &b : blocks) {
        for (std::size_t r = 0; r < nrows; r++) {
            for (std::size_t c : b.row(r).ones()) {
                out.set(r, offset + c);
            }
        }
        offset += b.ncols();
    }
    return out;
}

BitMatrix vstack(const std::vector<BitMatrix> &blocks) {
    if (blocks.empty()) {
        return {};
    }
    std::size_t ncols = blocks.front().ncols();
    std::vector<BitVector> rows;
    for (const auto &b : blocks) {
        if (b.ncols() != ncols) {
            throw DimensionError("vstack column count mismatch");
        }
        rows.insert(rows.end(), b.rows().begin(), b.rows().end());
    }
    return BitMatrix(std::move(rows), ncols);
}

RrefResult rref(const BitMatrix &m) {
    RrefResult result{m, {}};
    BitMatrix &a = result.matrix;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.ncols() && r < a.nrows(); c++) {
        std::size_t p = r;
        while (p < a.nrows() && !a.get(p, c)) {
            p++;
        }
        if (p == a.nrows()) {
            continue;
        }
        std::swap(a.row(r), a.row(p));
        for (std::size_t i = 0; i < a.nrows(); i++) {
            if (i != r && a.get(i, c)) {
                a.row(i) ^= a.row(r);
            }
        }
        result.pivots.push_back(c);
        r++;
    }
    return result;
}

std::size_t rank(const BitMatrix &m) {
    // Forward elimination only; no need to clear above the pivot.
    std::vector<BitVector> rows = m.rows();
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.ncols() && r < rows.size(); c++) {
        std::size_t p = r;
        while (p < rows.size() && !rows[p].get(c)) {
            p++;
        }
        if (p == rows.size()) {
            continue;
        }
        std::swap(rows[r], rows[p]);
        for (std::size_t i = r + 1; i < rows.size(); i++) {
            if (rows[i].get(c)) {
                rows[i] ^= rows[r];
            }
        }
        r++;
    }
    return r;
}

bool in_span(const BitVector &v, const BitMatrix &m) {
    if (v.size() != m.ncols()) {
        throw DimensionError(
            "vector of length " + std::to_string(v.size()) + " tested against a matrix with " +
            std::to_string(m.ncols()) + " columns");
    }
    RrefResult reduced = rref(m);
    BitVector residual = v;
    for (std::size_t i = 0; i < reduced.pivots.size(); i++) {
        if (residual.get(reduced.pivots[i])) {
            residual ^= reduced.matrix.row(i);
        }
    }
    return residual.none();
}

BitMatrix kernel_basis(const BitMatrix &m) {
    RrefResult reduced = rref(m);
    std::vector<bool> is_pivot(m.ncols(), false);
    for (std::size_t p : reduced.pivots) {
        is_pivot[p] = true;
    }
    BitMatrix basis(0, m.ncols());
    for (std::size_t f = 0; f < m.ncols(); f++) {
        if (is_pivot[f]) {
            continue;
        }
        BitVector v(m.ncols());
        v.set(f);
        for (std::size_t i = 0; i < reduced.pivots.size(); i++) {
            if (reduced.matrix.get(i, f)) {
                v.set(reduced.pivots[i]);
            }
        }
        basis.append_row(std::move(v));
    }
    return basis;
}

BitMatrix independent_rows(const BitMatrix &m, std::vector<std::size_t> *dropped) {
    // Incremental echelon basis keyed by pivot column.
    std::vector<BitVector> echelon;
    std::vector<std::size_t> echelon_pivot;
    BitMatrix kept(0, m.ncols());
    for (std::size_t i = 0; i < m.nrows(); i++) {
        BitVector residual = m.row(i);
        for (std::size_t e = 0; e < echelon.size(); e++) {
            if (residual.get(echelon_pivot[e])) {
                residual ^= echelon[e];
            }
        }
        auto pivot = residual.first_set();
        if (!pivot) {
            if (dropped) {
                dropped->push_back(i);
            }
            continue;
        }
        for (std::size_t e = 0; e < echelon.size(); e++) {
            if (echelon[e].get(*pivot)) {
                echelon[e] ^= residual;
            }
        }
        echelon.push_back(std::move(residual));
        echelon_pivot.push_back(*pivot);
        kept.append_row(m.row(i));
    }
    return kept;
}

BitMatrix inverse(const BitMatrix &m) {
    std::size_t n = m.nrows();
    if (m.ncols() != n) {
        throw DimensionError("inverse of a non-square matrix");
    }
    BitMatrix aug = hstack({m, BitMatrix::identity(n)});
    RrefResult reduced = rref(aug);
    if (reduced.pivots.size() < n || reduced.pivots[n - 1] != n - 1) {
        throw DimensionError("matrix is singular");
    }
    BitMatrix inv(0, n);
    for (std::size_t i = 0; i < n; i++) {
        inv.append_row(reduced.matrix.row(i).slice(n, n));
    }
    return inv;
}

bool symplectic_product(const BitVector &u, const BitVector &v) {
    if (u.size() != v.size() || u.size() % 2 != 0) {
        throw DimensionError(
            "symplectic product needs equal even lengths, got " + std::to_string(u.size()) + " and " +
            std::to_string(v.size()));
    }
    std::size_t n = u.size() / 2;
    BitVector ux = u.slice(0, n);
    BitVector uz = u.slice(n, n);
    BitVector vx = v.slice(0, n);
    BitVector vz = v.slice(n, n);
    return ux.dot(vz) ^ uz.dot(vx);
}

}  // namespace stabdisj
