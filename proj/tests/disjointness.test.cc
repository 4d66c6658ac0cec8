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

#include <random>

#include "gtest/gtest.h"

#include "oracles.h"
#include "stabdisj/errors.h"
#include "stabdisj/io.h"

using namespace stabdisj;

static StabilizerCode fixture(const std::string &name) {
    return read_code_file(std::string(STABDISJ_FIXTURES) + "/" + name);
}

static Rational q(long n, long d = 1) {
    return make_rational(n, d);
}

// Weak duality: a feasible packing and a feasible cover with equal value are both optimal.
static void expect_certified_optimum(const DeltaStar &ds, const std::vector<oracle::Mask> &coset, std::size_t n) {
    std::vector<oracle::Mask> var_supports;
    for (const auto &p : ds.variables) {
        var_supports.push_back(oracle::support(oracle::to_mask(p), n));
    }
    ASSERT_TRUE(oracle::packing_feasible(ds.witness.assignment, var_supports, n));
    Rational total = 0;
    for (const auto &x : ds.witness.assignment) {
        total += x;
    }
    ASSERT_EQ(total, ds.value);

    std::vector<oracle::Mask> sets = oracle::minimal_supports(coset);
    LinearProgram cover(n);
    for (std::size_t qb = 0; qb < n; qb++) {
        cover.objective[qb] = -1;
    }
    for (oracle::Mask s : sets) {
        std::vector<Term> terms;
        for (std::size_t qb = 0; qb < n; qb++) {
            if ((s >> qb) & 1) {
                terms.push_back({qb, q(1)});
            }
        }
        cover.add_constraint(terms, Relation::kGreaterEqual, q(1));
    }
    LpSolution y = solve_lp(cover);
    ASSERT_EQ(y.status, LpStatus::kOptimal);
    ASSERT_TRUE(oracle::cover_feasible(y.assignment, coset));
    ASSERT_EQ(-y.value, ds.value);
}

TEST(disjointness, steane_x_class) {
    StabilizerCode code = fixture("steane.txt");
    LogicalClass x(code, parse_pauli_string("XXXXXXX"));
    DeltaStar ds = delta_star(x);
    ASSERT_EQ(ds.value, q(7, 3));
    ASSERT_EQ(ds.variables.size(), 64u);
    ASSERT_EQ(witness_c(ds.witness), 3);
    expect_certified_optimum(
        ds, oracle::coset_supports(oracle::to_mask(x.rep()), oracle::generator_masks(code), 7), 7);
    ASSERT_EQ(c_disjointness(x, 1), q(1));
    ASSERT_EQ(c_disjointness(x, 3), q(7, 3));
}

TEST(disjointness, reduced_variables_give_same_optimum) {
    StabilizerCode code = fixture("steane.txt");
    LogicalClass x(code, parse_pauli_string("XXXXXXX"));
    DisjointnessOptions opt;
    opt.reduce_dominated = true;
    DeltaStar ds = delta_star(x, opt);
    ASSERT_EQ(ds.value, q(7, 3));
    ASSERT_LT(ds.variables.size(), 64u);
}

TEST(disjointness, delta_star_certified_on_random_codes) {
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 25; trial++) {
        std::size_t n = 2 + rng() % 6;
        std::size_t k = 1 + rng() % std::min<std::size_t>(2, n - 1);
        std::vector<oracle::Mask> gens = oracle::random_stabilizer(rng, n, k);
        StabilizerCode code = oracle::to_code(gens, n);
        LogicalBasis basis = logical_basis(code);
        for (const auto &l : nontrivial_labels(k)) {
            LogicalClass cls = class_from_label(code, basis, l);
            DeltaStar ds = delta_star(cls);
            expect_certified_optimum(ds, oracle::coset_supports(oracle::to_mask(cls.rep()), gens, n), n);
            DisjointnessOptions reduced;
            reduced.reduce_dominated = true;
            ASSERT_EQ(delta_star(cls, reduced).value, ds.value);
        }
    }
}

TEST(disjointness, c_disjointness_matches_exhaustive_packing) {
    std::mt19937_64 rng(52);
    for (int trial = 0; trial < 25; trial++) {
        std::size_t n = 2 + rng() % 6;
        std::size_t k = 1 + rng() % std::min<std::size_t>(2, n - 1);
        std::vector<oracle::Mask> gens = oracle::random_stabilizer(rng, n, k);
        StabilizerCode code = oracle::to_code(gens, n);
        LogicalBasis basis = logical_basis(code);
        for (const auto &l : nontrivial_labels(k)) {
            LogicalClass cls = class_from_label(code, basis, l);
            std::vector<oracle::Mask> coset = oracle::coset_supports(oracle::to_mask(cls.rep()), gens, n);
            Rational ds = delta_star(cls).value;
            for (std::size_t c = 1; c <= 3; c++) {
                std::size_t want = oracle::max_packing(coset, n, c);
                for (bool lp_first : {true, false}) {
                    CDisjointnessOptions opt;
                    opt.lp_first = lp_first;
                    CDisjointness got = c_disjointness_detail(cls, c, opt);
                    ASSERT_EQ(got.value, q(static_cast<long>(want), static_cast<long>(c)));
                    ASSERT_EQ(got.collection.members.size(), want);
                    ASSERT_TRUE(verify_collection(got.collection, cls).valid);
                    ASSERT_LE(got.value, ds);
                }
                ASSERT_EQ(decide_c_disjointness(cls, c, want), true);
                ASSERT_EQ(decide_c_disjointness(cls, c, want + 1), false);
            }
        }
    }
}

TEST(disjointness, witness_c_attains_the_lp_optimum) {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 20; trial++) {
        std::size_t n = 2 + rng() % 6;
        std::size_t k = 1 + rng() % std::min<std::size_t>(2, n - 1);
        StabilizerCode code = oracle::random_code(rng, n, k);
        LogicalBasis basis = logical_basis(code);
        for (const auto &l : nontrivial_labels(k)) {
            LogicalClass cls = class_from_label(code, basis, l);
            DeltaStar ds = delta_star(cls);
            Integer c = witness_c(ds.witness);
            CDisjointnessOptions opt;
            opt.lp_first = false;
            ASSERT_EQ(c_disjointness(cls, static_cast<std::size_t>(to_long(c)), opt), ds.value);
            Rational scaled = ds.value * c;
            ASSERT_TRUE(is_integer(scaled));
        }
    }
}

TEST(disjointness, rejects_bad_arguments) {
    StabilizerCode code = fixture("steane.txt");
    LogicalClass x(code, parse_pauli_string("XXXXXXX"));
    ASSERT_THROW(c_disjointness(x, 0), InvalidC);
    LogicalClass trivial(code, code.check(0));
    ASSERT_THROW(c_disjointness(trivial, 1), TrivialClass);
    ASSERT_THROW(delta_star(trivial), TrivialClass);
    LpSolution bad;
    bad.status = LpStatus::kInfeasible;
    ASSERT_THROW(witness_c(bad), InvalidWitness);
}

TEST(disjointness, code_disjointness_of_steane_and_4_2_2) {
    StabilizerCode steane = fixture("steane.txt");
    DisjointnessReport r = code_disjointness(steane, logical_basis(steane));
    ASSERT_EQ(r.code_delta, q(7, 3));
    ASSERT_EQ(r.argmin_classes.size(), 3u);

    StabilizerCode c422 = fixture("code_4_2_2.txt");
    DisjointnessReport s = code_disjointness(c422, logical_basis(c422));
    ASSERT_EQ(s.per_class.size(), 15u);
    ASSERT_EQ(s.code_delta, q(4, 3));
    ASSERT_EQ(s.argmin_classes.size(), 6u);
}

TEST(disjointness, threads_do_not_change_the_report) {
    StabilizerCode code = fixture("code_4_2_2.txt");
    LogicalBasis basis = logical_basis(code);
    DisjointnessOptions one;
    DisjointnessOptions many;
    many.threads = 4;
    DisjointnessReport a = code_disjointness(code, basis, one);
    DisjointnessReport b = code_disjointness(code, basis, many);
    ASSERT_EQ(a.code_delta, b.code_delta);
    for (std::size_t i = 0; i < a.per_class.size(); i++) {
        ASSERT_EQ(a.per_class[i].delta_star, b.per_class[i].delta_star);
        ASSERT_EQ(a.per_class[i].c_star, b.per_class[i].c_star);
    }
}

TEST(disjointness, verify_collection_reports_each_failure) {
    StabilizerCode code = fixture("steane.txt");
    LogicalClass x(code, parse_pauli_string("XXXXXXX"));
    DisjointCollection good{{parse_pauli_string("XXXIIII"), parse_pauli_string("IIIXXXX")}, 1};
    CollectionVerdict v = verify_collection(good, x, 2);
    ASSERT_FALSE(v.valid);
    ASSERT_EQ(v.non_members, (std::vector<std::size_t>{1}));
    ASSERT_TRUE(v.overloaded.empty());
    ASSERT_EQ(v.size_ok, std::optional<bool>(true));

    DisjointCollection overlap{{parse_pauli_string("XXXIIII"), parse_pauli_string("XIIXXII")}, 1};
    CollectionVerdict w = verify_collection(overlap, x);
    ASSERT_FALSE(w.valid);
    ASSERT_TRUE(w.non_members.empty());
    ASSERT_EQ(w.overloaded.size(), 1u);
    ASSERT_EQ(w.overloaded[0].qubit, 0u);
    ASSERT_EQ(w.overloaded[0].multiplicity, 2u);
    overlap.c = 2;
    ASSERT_TRUE(verify_collection(overlap, x).valid);
    ASSERT_EQ(verify_collection(overlap, x, 3).size_ok, std::optional<bool>(false));
    ASSERT_FALSE(verify_collection(overlap, x, 3).valid);
}

TEST(disjointness, verify_collection_matches_definition) {
    std::mt19937_64 rng(54);
    for (int trial = 0; trial < 300; trial++) {
        std::size_t n = 2 + rng() % 6;
        std::size_t k = 1 + rng() % std::min<std::size_t>(2, n - 1);
        std::vector<oracle::Mask> gens = oracle::random_stabilizer(rng, n, k);
        StabilizerCode code = oracle::to_code(gens, n);
        LogicalBasis basis = logical_basis(code);
        std::vector<ClassLabel> labels = nontrivial_labels(k);
        LogicalClass cls = class_from_label(code, basis, labels[rng() % labels.size()]);
        oracle::Mask rep = oracle::to_mask(cls.rep());
        std::vector<oracle::Mask> elements = oracle::group(gens);
        std::size_t c = 1 + rng() % 3;
        std::vector<oracle::Mask> members;
        DisjointCollection col{{}, c};
        std::size_t size = rng() % 5;
        for (std::size_t i = 0; i < size; i++) {
            oracle::Mask m = rep ^ elements[rng() % elements.size()];
            if (rng() % 4 == 0) {
                m ^= oracle::Mask{1} << (rng() % (2 * n));
            }
            members.push_back(m);
            col.members.push_back(oracle::to_pauli(m, n));
        }
        oracle::CollectionCheck want = oracle::check_collection(members, rep, gens, n, c);
        CollectionVerdict got = verify_collection(col, cls);
        ASSERT_EQ(got.valid, want.valid());
        ASSERT_EQ(got.non_members.empty(), want.members_ok);
        ASSERT_EQ(got.overloaded.empty(), want.loads_ok);
    }
}

TEST(disjointness, minimal_support_indices) {
    std::vector<BitVector> s = {
        BitVector::from_string("1100"), BitVector::from_string("1000"), BitVector::from_string("0011"),
        BitVector::from_string("0011"), BitVector::from_string("1011")};
    ASSERT_EQ(minimal_support_indices(s), (std::vector<std::size_t>{1, 2}));
}

TEST(disjointness, packing_lp_shape) {
    std::vector<BitVector> s = {BitVector::from_string("110"), BitVector::from_string("011")};
    LinearProgram p = packing_lp(s, 3);
    ASSERT_EQ(p.num_vars(), 2u);
    LpSolution sol = solve_lp(p);
    ASSERT_EQ(sol.value, q(1));
}

TEST(disjointness, deterministic_witness) {
    StabilizerCode code = fixture("five_qubit.txt");
    LogicalClass x(code, label_operator(logical_basis(code), {1, 1}));
    DeltaStar a = delta_star(x);
    DeltaStar b = delta_star(x);
    ASSERT_EQ(a.witness.assignment, b.witness.assignment);
    CDisjointness c1 = c_disjointness_detail(x, 2);
    CDisjointness c2 = c_disjointness_detail(x, 2);
    ASSERT_EQ(c1.collection.members, c2.collection.members);
}
