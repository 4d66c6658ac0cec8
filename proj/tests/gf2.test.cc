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

#include <random>

#include "gtest/gtest.h"

#include "oracles.h"
#include "stabdisj/errors.h"

using namespace stabdisj;

static BitMatrix random_matrix(std::mt19937_64 &rng, std::size_t rows, std::size_t cols) {
    BitMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; r++) {
        for (std::size_t c = 0; c < cols; c++) {
            m.set(r, c, rng() & 1);
        }
    }
    return m;
}

TEST(gf2, bit_vector_round_trip) {
    BitVector v = BitVector::from_string("0110001");
    ASSERT_EQ(v.size(), 7u);
    ASSERT_EQ(v.str(), "0110001");
    ASSERT_EQ(v.popcount(), 3u);
    ASSERT_EQ(v.ones(), (std::vector<std::size_t>{1, 2, 6}));
    ASSERT_EQ(v.first_set(), std::optional<std::size_t>(1));
    ASSERT_THROW(BitVector::from_string("01a"), ParseError);
}

TEST(gf2, bit_vector_ops_past_one_word) {
    BitVector a(130);
    BitVector b(130);
    a.set(0);
    a.set(64);
    a.set(129);
    b.set(64);
    b.set(100);
    ASSERT_EQ((a ^ b).ones(), (std::vector<std::size_t>{0, 100, 129}));
    ASSERT_EQ((a & b).ones(), (std::vector<std::size_t>{64}));
    ASSERT_EQ(a.and_popcount(b), 1u);
    ASSERT_TRUE(a.dot(b));
    ASSERT_FALSE((a & b).is_subset_of(BitVector(130)));
    ASSERT_TRUE((a & b).is_subset_of(a));
    ASSERT_EQ(a.slice(64, 66).ones(), (std::vector<std::size_t>{0, 65}));
    ASSERT_EQ(BitVector::concat(a.slice(0, 64), a.slice(64, 66)), a);
}

TEST(gf2, size_mismatch_throws) {
    BitVector a(3);
    BitVector b(4);
    ASSERT_THROW(a ^= b, DimensionError);
}

TEST(gf2, rank_identity_and_zero) {
    ASSERT_EQ(rank(BitMatrix::identity(9)), 9u);
    ASSERT_EQ(rank(BitMatrix(5, 7)), 0u);
    ASSERT_EQ(rank(BitMatrix::from_strings({"110", "011", "101"})), 2u);
}

TEST(gf2, rank_matches_oracle) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; trial++) {
        BitMatrix m = random_matrix(rng, 1 + rng() % 8, 1 + rng() % 12);
        std::vector<oracle::Mask> rows;
        for (const auto &r : m.rows()) {
            rows.push_back(oracle::to_mask(r));
        }
        ASSERT_EQ(rank(m), oracle::rank(rows)) << m.str();
    }
}

TEST(gf2, rref_pivots_are_unit_columns) {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 100; trial++) {
        BitMatrix m = random_matrix(rng, 6, 9);
        RrefResult r = rref(m);
        ASSERT_EQ(r.pivots.size(), rank(m));
        for (std::size_t i = 0; i < r.pivots.size(); i++) {
            for (std::size_t j = 0; j < r.matrix.nrows(); j++) {
                ASSERT_EQ(r.matrix.get(j, r.pivots[i]), i == j);
            }
            if (i > 0) {
                ASSERT_LT(r.pivots[i - 1], r.pivots[i]);
            }
        }
        ASSERT_EQ(rank(vstack({m, r.matrix})), rank(m));
    }
}

TEST(gf2, kernel_basis_spans_null_space) {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 100; trial++) {
        BitMatrix m = random_matrix(rng, 1 + rng() % 6, 1 + rng() % 10);
        BitMatrix k = kernel_basis(m);
        ASSERT_EQ(k.nrows(), m.ncols() - rank(m));
        ASSERT_EQ(rank(k), k.nrows());
        for (const auto &v : k.rows()) {
            ASSERT_TRUE(m.apply(v).none());
        }
    }
}

TEST(gf2, in_span_agrees_with_rank) {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 200; trial++) {
        BitMatrix m = random_matrix(rng, 3, 6);
        BitVector v = random_matrix(rng, 1, 6).row(0);
        BitMatrix ext = m;
        ext.append_row(v);
        ASSERT_EQ(in_span(v, m), rank(ext) == rank(m));
    }
}

TEST(gf2, independent_rows_keeps_earliest) {
    BitMatrix m = BitMatrix::from_strings({"110", "011", "101", "100", "000"});
    std::vector<std::size_t> dropped;
    BitMatrix kept = independent_rows(m, &dropped);
    ASSERT_EQ(kept, BitMatrix::from_strings({"110", "011", "100"}));
    ASSERT_EQ(dropped, (std::vector<std::size_t>{2, 4}));
}

TEST(gf2, inverse_round_trip) {
    std::mt19937_64 rng(15);
    int found = 0;
    while (found < 30) {
        BitMatrix m = random_matrix(rng, 6, 6);
        if (rank(m) < 6) {
            ASSERT_THROW(inverse(m), DimensionError);
            continue;
        }
        found++;
        ASSERT_EQ(m * inverse(m), BitMatrix::identity(6));
        ASSERT_EQ(inverse(m) * m, BitMatrix::identity(6));
    }
}

TEST(gf2, transpose_and_product) {
    BitMatrix a = BitMatrix::from_strings({"101", "011"});
    ASSERT_EQ(a.transpose(), BitMatrix::from_strings({"10", "01", "11"}));
    ASSERT_EQ(a * a.transpose(), BitMatrix::from_strings({"01", "10"}));
    ASSERT_THROW(a * a, DimensionError);
}

TEST(gf2, kron_and_stacks) {
    BitMatrix h = BitMatrix::from_strings({"11"});
    BitMatrix k = kron(h, BitMatrix::identity(2));
    ASSERT_EQ(k, BitMatrix::from_strings({"1010", "0101"}));
    ASSERT_EQ(hstack({h, h}), BitMatrix::from_strings({"1111"}));
    ASSERT_EQ(vstack({h, h}), BitMatrix::from_strings({"11", "11"}));
    ASSERT_THROW(hstack({h, k}), DimensionError);
}

TEST(gf2, symplectic_product_of_single_qubit_paulis) {
    BitVector x = BitVector::from_string("10");
    BitVector z = BitVector::from_string("01");
    BitVector y = BitVector::from_string("11");
    ASSERT_TRUE(symplectic_product(x, z));
    ASSERT_TRUE(symplectic_product(x, y));
    ASSERT_TRUE(symplectic_product(z, y));
    ASSERT_FALSE(symplectic_product(y, y));
}
