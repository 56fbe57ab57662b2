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

#include "tracecode/galois.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "tracecode/errors.hpp"

namespace tracecode {
namespace {

// Shift-and-add product modulo a binary polynomial, independent of the tables.
std::uint32_t carryless_mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t mod, unsigned deg) {
    std::uint32_t r = 0;
    while (b) {
        if (b & 1) r ^= a;
        b >>= 1;
        a <<= 1;
        if ((a >> deg) & 1) a ^= mod;
    }
    return r;
}

std::uint32_t packed(const std::vector<std::uint32_t>& ascending) {
    std::uint32_t v = 0;
    for (std::size_t i = ascending.size(); i-- > 0;) v = v * 2 + ascending[i];
    return v;
}

TEST(Galois, CanonicalBinaryModuli) {
    // Frozen from an independent search over monic polynomials in ascending order.
    const std::pair<unsigned, std::uint32_t> expected[] = {{2, 0x7},  {3, 0xB},   {4, 0x13},
                                                           {6, 0x43}, {8, 0x11D}, {12, 0x1053}};
    for (auto [e, mod] : expected) {
        auto f = make_field(2, e);
        EXPECT_EQ(packed(f->modulus()), mod) << "degree " << e;
        EXPECT_EQ(f->generator(), 2u);
        EXPECT_EQ(f->order(), 1u << e);
    }
}

TEST(Galois, CanonicalTernaryModulus) {
    auto f = make_field(3, 2);
    EXPECT_EQ(f->modulus(), (std::vector<std::uint32_t>{2, 1, 1}));
    EXPECT_EQ(element_order(*f, f->generator()), 8u);
}

TEST(Galois, MultiplicationMatchesCarrylessOracle) {
    auto f = make_field(2, 8);
    for (std::uint32_t a = 0; a < 256; ++a) {
        for (std::uint32_t b = 0; b < 256; ++b) {
            ASSERT_EQ(f->mul(a, b), carryless_mulmod(a, b, 0x11D, 8)) << a << " * " << b;
        }
    }
    EXPECT_EQ(f->mul(0x53, 0xCA), 143u);
    EXPECT_EQ(f->pow(2, 8), 0x1Du);
}

TEST(Galois, FieldAxiomsOddCharacteristic) {
    auto f = make_field(5, 3);
    std::mt19937 rng(7);
    std::uniform_int_distribution<std::uint32_t> pick(0, f->order() - 1);
    for (int i = 0; i < 2000; ++i) {
        const Elem a = pick(rng), b = pick(rng), c = pick(rng);
        EXPECT_EQ(f->mul(a, f->add(b, c)), f->add(f->mul(a, b), f->mul(a, c)));
        EXPECT_EQ(f->add(f->sub(a, b), b), a);
        EXPECT_EQ(f->add(a, f->neg(a)), 0u);
        if (a != 0) EXPECT_EQ(f->mul(a, f->inv(a)), 1u);
    }
}

TEST(Galois, PowAndLog) {
    auto f = make_field(2, 6);
    EXPECT_EQ(f->pow(0, 0), 1u);
    EXPECT_EQ(f->pow(0, 5), 0u);
    for (Elem a = 1; a < f->order(); ++a) {
        EXPECT_EQ(f->exp(f->log(a)), a);
        EXPECT_EQ(f->pow(a, 63), 1u);
        EXPECT_EQ(f->pow(a, -1), f->inv(a));
    }
    EXPECT_THROW(f->inv(0), PreconditionError);
}

TEST(Galois, FrobeniusFixedPointsFormSubfields) {
    auto f = make_field(2, 12);
    for (std::uint64_t q : {2u, 4u, 8u, 16u, 64u, 4096u}) {
        std::size_t fixed = 0;
        for (Elem a = 0; a < f->order(); ++a) fixed += f->frobenius(a, q) == a;
        EXPECT_EQ(fixed, q);
    }
    EXPECT_THROW(f->frobenius(3, 6), PreconditionError);
}

TEST(Galois, CoefficientsRoundTrip) {
    auto f = make_field(3, 4);
    for (Elem a = 0; a < f->order(); a += 7) {
        const auto c = f->coefficients(a);
        ASSERT_EQ(c.size(), 4u);
        EXPECT_EQ(f->from_coefficients(c), a);
    }
}

TEST(Galois, RejectsBadParameters) {
    EXPECT_THROW(make_field(4, 2), PreconditionError);
    EXPECT_THROW(make_field(2, 0), PreconditionError);
    EXPECT_THROW(make_field(2, 21), PreconditionError);
    // x^2 + 1 = (x + 1)^2 over F_2.
    EXPECT_THROW(make_field(2, 2, std::vector<std::uint32_t>{1, 0, 1}), PreconditionError);
    // x^4 + x^3 + x^2 + x + 1 is irreducible but x has order 5.
    auto ok = make_field(2, 4, std::vector<std::uint32_t>{1, 1, 1, 1, 1});
    EXPECT_NE(ok->generator(), 2u);
    EXPECT_THROW(make_field(2, 4, std::vector<std::uint32_t>{1, 1, 1, 1, 1}, Elem{2}), PreconditionError);
}

TEST(Galois, Irreducibility) {
    EXPECT_TRUE(is_irreducible(2, std::vector<std::uint32_t>{1, 1, 0, 0, 0, 0, 1}));
    EXPECT_FALSE(is_irreducible(2, std::vector<std::uint32_t>{1, 0, 0, 1}));  // x^3 + 1
    EXPECT_TRUE(is_irreducible(3, std::vector<std::uint32_t>{1, 0, 1}));      // x^2 + 1
    EXPECT_FALSE(is_irreducible(5, std::vector<std::uint32_t>{1, 0, 1}));     // 2^2 = -1
}

TEST(Galois, RootsOfUnity) {
    auto f = make_field(2, 8);
    const FieldElement a = nth_root_of_unity(*f, 51);
    EXPECT_EQ(element_order(*f, a.value()), 51u);
    EXPECT_TRUE(a.pow(51) == FieldElement(*f, 1));
    EXPECT_EQ(a.value(), f->exp(5));
    EXPECT_THROW(nth_root_of_unity(*f, 7), PreconditionError);
    EXPECT_EQ(nth_root_of_unity(*f, 255).value(), f->generator());
    auto big = make_field(2, 12);
    EXPECT_EQ(nth_root_of_unity(*big, 585).value(), big->exp(7));
}

TEST(Galois, FieldElementRejectsMixedFields) {
    auto f = make_field(2, 4);
    auto g = make_field(2, 4);
    EXPECT_THROW(FieldElement(*f, 3) + FieldElement(*g, 3), PreconditionError);
    EXPECT_THROW(FieldElement(*f, 16), PreconditionError);
}

TEST(Galois, SubfieldEmbedding) {
    auto f = make_field(2, 8);
    SubfieldEmbedding sub(f, 16);
    std::set<Elem> seen;
    for (std::uint32_t s = 0; s < 16; ++s) {
        const Elem e = sub.embed(s);
        EXPECT_EQ(f->frobenius(e, 16), e);
        EXPECT_EQ(sub.project(e), s);
        seen.insert(e);
    }
    EXPECT_EQ(seen.size(), 16u);
    EXPECT_EQ(sub.embed(0), 0u);
    EXPECT_EQ(sub.embed(1), 1u);
    EXPECT_FALSE(sub.project(f->generator()).has_value());
    EXPECT_THROW(SubfieldEmbedding(f, 8), PreconditionError);
}

TEST(Galois, SubfieldBases) {
    auto f = make_field(2, 8);
    EXPECT_EQ(subfield_power_basis(*f, 4, 1).elements, std::vector<Elem>{1});
    EXPECT_EQ(subfield_power_basis(*f, 4, 2).elements, (std::vector<Elem>{1, f->exp(17)}));
    const SubfieldBasis b = subfield_power_basis(*f, 4, 4);
    EXPECT_EQ(b.elements, (std::vector<Elem>{1, 2, 4, 8}));
    EXPECT_EQ(rank_over_subfield(*f, 4, b.elements), 4u);
    EXPECT_EQ(subfield_exponent(*f, 16), 4u);
    EXPECT_THROW(make_subfield_basis(*f, 4, 4, {1, 1, 2, 3}), PreconditionError);
    EXPECT_THROW(make_subfield_basis(*f, 4, 3, {1, 2, 3}), PreconditionError);
}

}  // namespace
}  // namespace tracecode
