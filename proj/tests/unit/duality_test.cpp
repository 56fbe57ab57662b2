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

#include "tracecode/duality.hpp"

#include <gtest/gtest.h>

#include <random>

#include "tracecode/errors.hpp"

namespace tracecode {
namespace {

CosetFamily without(const CodeSpace& space, std::vector<std::uint64_t> reps) {
    return family_difference(CosetFamily::all(space.table_ptr()), space.family(reps));
}

CosetFamily random_family_with_zero(const CodeSpace& space, std::mt19937& rng) {
    std::vector<CosetId> ids{0};
    for (CosetId id = 1; id < space.table().size(); ++id) {
        if (rng() % 3 == 0) ids.push_back(id);
    }
    return CosetFamily(space.table_ptr(), ids);
}

TEST(Duality, EuclideanExample) {
    auto space = CodeSpace::create(4, 51);
    const std::vector<std::uint64_t> reps{0, 1};
    const DualityReport r = euclidean_dual(space, space.family(reps));
    EXPECT_EQ(r.dual, without(space, {35}));
    EXPECT_EQ(r.dim_family, 5u);
    EXPECT_EQ(r.dim_dual, 47u);
    EXPECT_TRUE(r.gram_verified);
    EXPECT_TRUE(r.nullspace_verified.value());
    EXPECT_FALSE(r.scaled_identity_verified.has_value());
}

TEST(Duality, EuclideanTrivialAndSelfPaired) {
    auto space = CodeSpace::create(4, 51);
    const std::vector<std::uint64_t> zero{0};
    const DualityReport r = euclidean_dual(space, space.family(zero));
    EXPECT_EQ(r.dual, CosetFamily::all(space.table_ptr()));
    EXPECT_EQ(r.dim_family + r.dim_dual, 52u);

    auto small = CodeSpace::create(4, 21);
    const std::vector<std::uint64_t> reps{0, 7};
    const DualityReport s = euclidean_dual(small, small.family(reps));
    EXPECT_EQ(s.dual, without(small, {14}));
    EXPECT_EQ(s.dim_family, 2u);
    EXPECT_EQ(s.dim_dual, 20u);
}

TEST(Duality, HermitianExamples) {
    auto space = CodeSpace::create(4, 51);
    const std::vector<std::uint64_t> reps{0, 1};
    const DualityReport r = hermitian_dual(space, space.family(reps), 2);
    EXPECT_EQ(r.dual, without(space, {19}));
    EXPECT_TRUE(r.scaled_identity_verified.value());
    EXPECT_TRUE(r.nullspace_verified.value());

    auto big = CodeSpace::create(64, 585);
    const std::vector<std::uint64_t> reps56{0, 8, 16};
    const DualityReport b = hermitian_dual(big, big.family(reps56), 8);
    EXPECT_EQ(b.dual, without(big, {457, 521}));
    EXPECT_EQ(b.dim_family + b.dim_dual, 586u);

    const std::vector<std::uint64_t> zero{0};
    EXPECT_EQ(hermitian_dual(space, space.family(zero), 2).dual, CosetFamily::all(space.table_ptr()));
}

TEST(Duality, InvariantsOnRandomFamilies) {
    std::mt19937 rng(17);
    for (auto [q, n, ell] : {std::tuple{4u, 21u, 2u}, {4u, 51u, 2u}, {4u, 63u, 2u}, {16u, 51u, 4u}}) {
        auto space = CodeSpace::create(q, n);
        for (int t = 0; t < 8; ++t) {
            const CosetFamily s = random_family_with_zero(space, rng);
            const DualityReport e = euclidean_dual(space, s);
            EXPECT_EQ(e.dim_family + e.dim_dual, n + 1);
            const DualityReport h = hermitian_dual(space, s, ell);
            EXPECT_EQ(h.dim_family + h.dim_dual, n + 1);
            // Applying the hermitian dual twice returns C_S.
            const DualityReport back = hermitian_dual(space, h.dual, ell);
            EXPECT_EQ(back.dual, s);
            EXPECT_TRUE(same_row_space(space.generator_matrix(back.dual).matrix, space.generator_matrix(s).matrix));
        }
    }
}

TEST(Duality, Preconditions) {
    auto odd = CodeSpace::create(9, 8);
    const std::vector<std::uint64_t> zero{0};
    EXPECT_THROW(euclidean_dual(odd, odd.family(zero)), PreconditionError);
    EXPECT_THROW(hermitian_dual(odd, odd.family(zero), 3), PreconditionError);
    auto space = CodeSpace::create(4, 51);
    const std::vector<std::uint64_t> no_zero{1};
    EXPECT_THROW(euclidean_dual(space, space.family(no_zero)), PreconditionError);
    EXPECT_THROW(hermitian_dual(space, space.family(zero), 4), PreconditionError);
}

TEST(Duality, NullspaceCheckCanBeSkipped) {
    auto space = CodeSpace::create(4, 51);
    const std::vector<std::uint64_t> reps{0, 1};
    DualityOptions fast;
    fast.verify_nullspace = false;
    EXPECT_FALSE(euclidean_dual(space, space.family(reps), fast).nullspace_verified.has_value());
}

}  // namespace
}  // namespace tracecode
