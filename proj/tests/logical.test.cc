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


#include "stabdisj/logical.h"

#include <random>

#include "gtest/gtest.h"

#include "oracles.h"
#include "stabdisj/errors.h"
#include "stabdisj/io.h"

using namespace stabdisj;

static StabilizerCode fixture(const std::string &name) {
    return read_code_file(std::string(STABDISJ_FIXTURES) + "/" + name);
}

TEST(logical, steane_every_class_has_distance_three) {
    StabilizerCode code = fixture("steane.txt");
    DistanceReport r = distance_report(code, logical_basis(code));
    ASSERT_EQ(r.per_class.size(), 3u);
    ASSERT_EQ(r.d_min, 3u);
    ASSERT_EQ(r.d_max, 3u);
    for (const auto &c : r.per_class) {
        ASSERT_EQ(c.witness.weight(), 3u);
    }
}

TEST(logical, five_qubit_code) {
    StabilizerCode code = fixture("five_qubit.txt");
    DistanceReport r = distance_report(code, logical_basis(code));
    ASSERT_EQ(r.d_min, 3u);
    ASSERT_EQ(r.d_max, 3u);
}

TEST(logical, code_4_2_2) {
    StabilizerCode code = fixture("code_4_2_2.txt");
    DistanceReport r = distance_report(code, logical_basis(code));
    ASSERT_EQ(r.per_class.size(), 15u);
    ASSERT_EQ(r.d_min, 2u);
    ASSERT_EQ(r.d_max, 3u);
}

TEST(logical, code_14_3_3_distances) {
    StabilizerCode code = fixture("code_14_3_3.txt");
    DistanceReport r = distance_report(code, logical_basis(code));
    ASSERT_EQ(r.per_class.size(), 63u);
    ASSERT_EQ(r.d_min, 3u);
    ASSERT_EQ(r.d_max, 6u);
}

TEST(logical, repetition_code_has_unequal_distances) {
    StabilizerCode code = fixture("repetition_3.txt");
    DistanceReport r = distance_report(code, logical_basis(code));
    ASSERT_EQ(r.d_min, 1u);
    ASSERT_EQ(r.d_max, 3u);
}

TEST(logical, trivial_class_rejected) {
    StabilizerCode code = fixture("steane.txt");
    ASSERT_THROW(class_distance(LogicalClass(code, code.check(0))), TrivialClass);
}

TEST(logical, random_codes_match_oracle) {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 40; trial++) {
        std::size_t n = 2 + rng() % 7;
        std::size_t k = 1 + rng() % std::min<std::size_t>(3, n - 1);
        std::vector<oracle::Mask> gens = oracle::random_stabilizer(rng, n, k);
        StabilizerCode code = oracle::to_code(gens, n);
        LogicalBasis basis = logical_basis(code);
        DistanceReport r = distance_report(code, basis);
        std::size_t lo = n + 1;
        std::size_t hi = 0;
        for (const auto &c : r.per_class) {
            std::size_t want = oracle::distance(oracle::to_mask(label_operator(basis, c.label)), gens, n);
            ASSERT_EQ(c.distance, want);
            ASSERT_EQ(c.witness.weight(), want);
            ASSERT_TRUE(is_representative(c.witness, class_from_label(code, basis, c.label)));
            lo = std::min(lo, want);
            hi = std::max(hi, want);
        }
        ASSERT_EQ(r.d_min, lo);
        ASSERT_EQ(r.d_max, hi);
    }
}

TEST(logical, threads_do_not_change_the_report) {
    StabilizerCode code = fixture("code_14_3_3.txt");
    LogicalBasis basis = logical_basis(code);
    DistanceReport a = distance_report(code, basis, {kDefaultCosetCapLog2, 1});
    DistanceReport b = distance_report(code, basis, {kDefaultCosetCapLog2, 3});
    ASSERT_EQ(a.per_class.size(), b.per_class.size());
    for (std::size_t i = 0; i < a.per_class.size(); i++) {
        ASSERT_EQ(a.per_class[i].label, b.per_class[i].label);
        ASSERT_EQ(a.per_class[i].distance, b.per_class[i].distance);
        ASSERT_EQ(a.per_class[i].witness, b.per_class[i].witness);
    }
}

TEST(logical, coset_cap_applies) {
    StabilizerCode code = fixture("code_14_3_3.txt");
    ASSERT_THROW(distance_report(code, logical_basis(code), {10, 1}), TooLarge);
}
