// Copyright 2026 The tracecode Authors
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

#include "tracecode/cosets.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <set>

#include "tracecode/errors.hpp"

namespace tracecode {
namespace {

using Sets = std::vector<std::vector<std::uint64_t>>;

Sets all_sets(const CosetTable& t) {
    Sets out;
    for (const auto& c : t.cosets()) out.push_back(c.elements);
    return out;
}

Sets family_sets(const CosetTable& t, std::initializer_list<std::uint64_t> reps) {
    Sets out;
    for (auto r : reps) out.push_back(t.coset(t.id_of(r)).elements);
    std::sort(out.begin(), out.end());
    return out;
}

TEST(Cosets, OrderMod) {
    EXPECT_EQ(order_mod(4, 51), 4u);
    EXPECT_EQ(order_mod(4, 63), 3u);
    EXPECT_EQ(order_mod(4, 21), 3u);
    EXPECT_EQ(order_mod(16, 51), 2u);
    EXPECT_EQ(order_mod(64, 585), 2u);
    EXPECT_EQ(order_mod(4, 3), 1u);
}

TEST(Cosets, TableForTwentyOne) {
    auto t = compute_cosets(4, 21);
    const Sets expected{{0}, {1, 4, 16}, {2, 8, 11}, {3, 6, 12}, {5, 17, 20}, {7}, {9, 15, 18}, {10, 13, 19}, {14}};
    EXPECT_EQ(all_sets(*t), expected);
}

TEST(Cosets, TableForFiftyOne) {
    auto t = compute_cosets(4, 51);
    ASSERT_EQ(t->size(), 15u);
    EXPECT_EQ(t->coset(t->id_of(1)).elements, (std::vector<std::uint64_t>{1, 4, 13, 16}));
    EXPECT_EQ(t->coset(t->id_of(50)).elements, (std::vector<std::uint64_t>{35, 38, 47, 50}));
    EXPECT_EQ(t->coset(t->id_of(17)).elements, (std::vector<std::uint64_t>{17}));
}

TEST(Cosets, TableForSixtyThree) {
    auto t = compute_cosets(4, 63);
    EXPECT_EQ(t->size(), 23u);
    std::size_t total = 0;
    for (const auto& c : t->cosets()) total += c.size();
    EXPECT_EQ(total, 63u);
    EXPECT_EQ(t->coset(t->id_of(43)).elements, (std::vector<std::uint64_t>{43, 46, 58}));
}

TEST(Cosets, TrivialOrder) {
    auto t = compute_cosets(4, 3);
    EXPECT_EQ(all_sets(*t), (Sets{{0}, {1}, {2}}));
}

TEST(Cosets, PartitionAndClosureOnManyModuli) {
    for (std::uint64_t q : {2u, 3u, 4u, 8u, 16u}) {
        for (std::uint64_t n = 2; n < 200; ++n) {
            if (std::gcd(q, n) != 1) continue;
            auto t = compute_cosets(q, n);
            std::vector<int> seen(n, 0);
            std::uint64_t prev_min = 0;
            for (CosetId id = 0; id < t->size(); ++id) {
                const Coset& c = t->coset(id);
                if (id > 0) EXPECT_GT(c.min_rep(), prev_min);
                prev_min = c.min_rep();
                EXPECT_EQ(t->m() % c.size(), 0u);
                for (auto a : c.elements) {
                    ++seen[a];
                    EXPECT_EQ(t->id_of(a * q % n), id);
                    EXPECT_EQ(t->id_of(a), id);
                }
            }
            for (std::uint64_t a = 0; a < n; ++a) ASSERT_EQ(seen[a], 1) << q << " mod " << n << " residue " << a;
        }
    }
}

TEST(Cosets, RejectsBadModuli) {
    EXPECT_THROW(compute_cosets(4, 1), PreconditionError);
    EXPECT_THROW(compute_cosets(4, 6), PreconditionError);
    EXPECT_THROW(compute_cosets(1, 5), PreconditionError);
}

TEST(Cosets, DualCoset) {
    auto t = compute_cosets(4, 51);
    EXPECT_EQ(t->coset(dual_coset(*t, t->id_of(1))).elements, (std::vector<std::uint64_t>{35, 38, 47, 50}));
    EXPECT_EQ(dual_coset(*t, 0), 0u);
    auto u = compute_cosets(4, 21);
    EXPECT_EQ(u->coset(dual_coset(*u, u->id_of(1))).elements, (std::vector<std::uint64_t>{5, 17, 20}));
    for (auto [q, n] : {std::pair{4, 51}, {4, 63}, {16, 51}, {64, 585}, {4, 21}}) {
        auto tt = compute_cosets(q, n);
        for (CosetId id = 0; id < tt->size(); ++id) EXPECT_EQ(dual_coset(*tt, dual_coset(*tt, id)), id);
    }
}

TEST(Cosets, ScaleFamily) {
    auto t = compute_cosets(16, 51);
    const std::vector<std::uint64_t> reps{0, 12, 8, 4};
    const CosetFamily s = CosetFamily::from_residues(t, reps);
    EXPECT_EQ(scale_family(s, 4).as_sets(), family_sets(*t, {0, 3, 2, 1}));
    EXPECT_EQ(scale_family(s, 1), s);

    auto u = compute_cosets(4, 21);
    const std::vector<std::uint64_t> reps2{0, 1, 2, 3};
    const CosetFamily s2 = CosetFamily::from_residues(u, reps2);
    EXPECT_EQ(scale_family(s2, 2), s2);
}

TEST(Cosets, DualFamily) {
    auto t = compute_cosets(64, 585);
    const std::vector<std::uint64_t> reps{0, 1, 2};
    const CosetFamily d = dual_family(CosetFamily::from_residues(t, reps));
    EXPECT_EQ(d.as_sets(), (Sets{{0}, {457, 583}, {521, 584}}));
}

TEST(Cosets, FamiliesRAndT) {
    auto t = compute_cosets(4, 51);
    const std::vector<std::uint64_t> reps{0, 1};
    const CosetFamily s = CosetFamily::from_residues(t, reps);
    const CosetFamily all = CosetFamily::all(t);
    const std::vector<std::uint64_t> r_missing{35};
    const std::vector<std::uint64_t> t_missing{19};
    EXPECT_EQ(family_R(s), family_difference(all, CosetFamily::from_residues(t, r_missing)));
    EXPECT_EQ(family_T(s, 2), family_difference(all, CosetFamily::from_residues(t, t_missing)));
    const std::vector<std::uint64_t> zero{0};
    EXPECT_EQ(family_R(CosetFamily::from_residues(t, zero)), all);
    EXPECT_EQ(family_T(CosetFamily::from_residues(t, zero), 2), all);
    const std::vector<std::uint64_t> no_zero{1};
    EXPECT_THROW(family_R(CosetFamily::from_residues(t, no_zero)), PreconditionError);
}

TEST(Cosets, MaxDegree) {
    auto u = compute_cosets(4, 21);
    const std::vector<std::uint64_t> reps{0, 1, 2, 3};
    EXPECT_EQ(max_degree(family_T(CosetFamily::from_residues(u, reps), 2)), 16u);
    const std::vector<std::uint64_t> zero{0};
    EXPECT_EQ(max_degree(CosetFamily::from_residues(u, zero)), 0u);

    auto t = compute_cosets(4, 51);
    const std::vector<std::uint64_t> reps53{0, 1, 2, 6};
    EXPECT_EQ(max_degree(family_T(CosetFamily::from_residues(t, reps53), 2)), 46u);
    EXPECT_THROW(max_degree(CosetFamily(t, {})), PreconditionError);
}

TEST(Cosets, FamilyBasics) {
    auto t = compute_cosets(4, 51);
    const std::vector<std::uint64_t> reps{16, 0, 4, 1};
    const CosetFamily s = CosetFamily::from_residues(t, reps);
    EXPECT_EQ(s.size(), 2u);
    EXPECT_EQ(s.dimension(), 5u);
    EXPECT_EQ(s.representatives(), (std::vector<std::uint64_t>{0, 1}));
    EXPECT_TRUE(s.is_subset_of(CosetFamily::all(t)));
    const std::vector<std::uint64_t> bad{51};
    EXPECT_THROW(CosetFamily::from_residues(t, bad), PreconditionError);
}

TEST(Cosets, TextTable) {
    auto t = compute_cosets(4, 3);
    EXPECT_EQ(coset_table_text(*t), "{0}  {1}  {2}\n");
    EXPECT_EQ(format_coset(compute_cosets(4, 51)->coset(1)), "{1,4,13,16}");
}

}  // namespace
}  // namespace tracecode
