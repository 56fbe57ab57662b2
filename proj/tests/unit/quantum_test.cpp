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

#include "tracecode/quantum.hpp"

#include <gtest/gtest.h>

#include <map>
#include <random>

namespace tracecode {
namespace {

using Point = std::pair<std::int64_t, std::uint64_t>;  // (quantum_k, d)

std::vector<Point> points_of(const SearchResult& r) {
    std::vector<Point> out;
    for (const auto& rep : r.reports) out.emplace_back(rep.quantum_k, rep.d_lower);
    return out;
}

// Pareto frontier of every family {0} + I, using only coset combinatorics.
std::vector<Point> powerset_frontier(const CosetTable& table, std::shared_ptr<const CosetTable> ptr,
                                     std::uint64_t ell) {
    const std::size_t v = table.size() - 1;
    std::map<std::int64_t, std::uint64_t> best;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << v); ++mask) {
        std::vector<CosetId> ids{0};
        for (std::size_t i = 0; i < v; ++i) {
            if (mask >> i & 1) ids.push_back(i + 1);
        }
        const CosetFamily s(ptr, ids);
        const CosetFamily t = family_T(s, ell);
        if (!s.is_subset_of(t)) continue;
        const std::int64_t k = static_cast<std::int64_t>(table.n() + 1) - 2 * static_cast<std::int64_t>(s.dimension());
        const std::uint64_t d = table.n() + 1 - max_degree(t);
        auto [it, fresh] = best.emplace(k, d);
        if (!fresh) it->second = std::max(it->second, d);
    }
    std::vector<Point> frontier;
    std::uint64_t best_d = 0;
    for (auto it = best.rbegin(); it != best.rend(); ++it) {
        if (it->second > best_d) {
            frontier.emplace_back(it->first, it->second);
            best_d = it->second;
        }
    }
    return frontier;
}

QuantumCodeReport derive(const CodeSpace& space, std::vector<std::uint64_t> reps, std::uint64_t ell,
                         QuantumOptions opts = {}) {
    return derive_quantum(space, space.family(reps), ell, opts);
}

TEST(Quantum, TwentyTwoQubitExample) {
    auto space = CodeSpace::create(4, 21);
    QuantumOptions opts;
    opts.certify = true;
    const QuantumCodeReport r = derive(space, {0, 1, 2, 3}, 2, opts);
    EXPECT_EQ(r.block_length, 22u);
    EXPECT_EQ(r.classical_k, 10u);
    EXPECT_EQ(r.quantum_k, 2);
    EXPECT_EQ(r.d_lower, 6u);
    EXPECT_TRUE(r.self_orthogonal);
    EXPECT_EQ(r.dual.as_sets(),
              (std::vector<std::vector<std::uint64_t>>{{0}, {1, 4, 16}, {2, 8, 11}, {3, 6, 12}, {7}, {14}}));
    ASSERT_TRUE(r.distance_certificate.has_value());
    EXPECT_EQ(r.distance_certificate->value, 6u);
    EXPECT_EQ(r.distance_certificate->enumerated, 16777215u);
}

TEST(Quantum, PublishedFamilies) {
    auto s51 = CodeSpace::create(4, 51);
    const QuantumCodeReport a = derive(s51, {0, 1, 2, 6}, 2);
    EXPECT_EQ(format_params({a.block_length, a.quantum_k, a.d_lower}), "[[52,26,6]]");

    auto s63 = CodeSpace::create(4, 63);
    EXPECT_EQ(derive(s63, {0, 1, 2}, 2).d_lower, 4u);
    EXPECT_EQ(derive(s63, {0, 1, 2}, 2).quantum_k, 50);
    EXPECT_EQ(derive(s63, {0, 1, 2, 6}, 2).d_lower, 6u);
    EXPECT_EQ(derive(s63, {0, 1, 2, 6}, 2).quantum_k, 44);

    auto s16 = CodeSpace::create(16, 51);
    const QuantumCodeReport c = derive(s16, {0, 12, 8, 4}, 4);
    EXPECT_EQ(c.quantum_k, 38);
    EXPECT_EQ(c.d_lower, 5u);

    auto s64 = CodeSpace::create(64, 585);
    const QuantumCodeReport d = derive(s64, {0, 8, 16}, 8);
    EXPECT_EQ(d.quantum_k, 576);
    EXPECT_EQ(d.d_lower, 4u);
    EXPECT_EQ(d.field->order(), 4096u);
}

TEST(Quantum, RejectsNonOrthogonalFamilies) {
    auto space = CodeSpace::create(4, 21);
    try {
        derive(space, {0, 7}, 2);
        FAIL() << "expected NotSelfOrthogonal";
    } catch (const NotSelfOrthogonal& ex) {
        ASSERT_EQ(ex.conflicts().size(), 1u);
        EXPECT_EQ(ex.conflicts()[0].first, ex.conflicts()[0].second);
        EXPECT_NE(std::string(ex.what()).find("{7} is its own image"), std::string::npos);
    }
    try {
        derive(space, {0, 2, 5}, 2);
        FAIL() << "expected NotSelfOrthogonal";
    } catch (const NotSelfOrthogonal& ex) {
        EXPECT_EQ(ex.conflicts().size(), 2u);
        EXPECT_NE(std::string(ex.what()).find("{2,8,11} is the image of {5,17,20}"), std::string::npos);
    }
    QuantumOptions flagged;
    flagged.allow_non_orthogonal = true;
    const QuantumCodeReport r = derive(space, {0, 2, 5}, 2, flagged);
    EXPECT_FALSE(r.self_orthogonal);
    EXPECT_EQ(r.conflicts.size(), 2u);
}

TEST(Quantum, SingleCosetFiveIsAdmissible) {
    // 2 * {5,17,20} = {10,13,19}, whose dual {2,8,11} is not chosen.
    auto space = CodeSpace::create(4, 21);
    const QuantumCodeReport r = derive(space, {0, 5}, 2);
    EXPECT_TRUE(r.self_orthogonal);
    EXPECT_EQ(r.quantum_k, 14);
}

TEST(Quantum, Preconditions) {
    auto space = CodeSpace::create(4, 21);
    EXPECT_THROW(derive(space, {0}, 3), PreconditionError);
    EXPECT_THROW(derive(space, {1}, 2), PreconditionError);
    EXPECT_THROW(CompatibilityGraph(space.table_ptr(), 4), PreconditionError);
}

TEST(Quantum, ChecksAgreeOnRandomFamilies) {
    // derive_quantum throws if the gram test, the subset test and the conflict
    // list disagree, or if the two distance computations differ.
    std::mt19937 rng(99);
    QuantumOptions flagged;
    flagged.allow_non_orthogonal = true;
    for (auto [q, n, ell] : {std::tuple{4u, 21u, 2u}, {4u, 51u, 2u}, {4u, 63u, 2u}, {16u, 51u, 4u}}) {
        auto space = CodeSpace::create(q, n);
        int orthogonal = 0;
        for (int t = 0; t < 60; ++t) {
            std::vector<CosetId> ids{0};
            for (CosetId id = 1; id < space.table().size(); ++id) {
                if (rng() % 4 == 0) ids.push_back(id);
            }
            const CosetFamily s(space.table_ptr(), ids);
            const QuantumCodeReport r = derive_quantum(space, s, ell, flagged);
            EXPECT_EQ(r.d_lower, coverage_distance(s, ell));
            EXPECT_EQ((static_cast<std::int64_t>(r.block_length) - r.quantum_k) % 2, 0);
            const CompatibilityGraph g(space.table_ptr(), ell);
            std::vector<CosetId> chosen(ids.begin() + 1, ids.end());
            bool loops = false;
            for (CosetId id : chosen) loops |= g.has_self_loop(id);
            EXPECT_EQ(r.self_orthogonal, g.is_independent(chosen) && !loops);
            orthogonal += r.self_orthogonal;
        }
        EXPECT_GT(orthogonal, 0);
    }
}

TEST(CompatibilityGraph, SymmetricInvolution) {
    for (auto [q, n, ell] : {std::tuple{4u, 21u, 2u}, {4u, 51u, 2u}, {4u, 63u, 2u}, {16u, 51u, 4u}, {64u, 585u, 8u}}) {
        auto table = compute_cosets(q, n);
        const CompatibilityGraph g(table, ell);
        EXPECT_EQ(g.vertices().size(), table->size() - 1);
        for (CosetId a = 0; a < table->size(); ++a) {
            EXPECT_EQ(g.image(g.image(a)), a);
            for (CosetId b = 1; b < table->size(); ++b) {
                if (a == 0) continue;
                EXPECT_EQ(g.conflicts(a, b), g.conflicts(b, a));
                EXPECT_EQ(g.has_edge(a, b), g.has_edge(b, a));
            }
        }
        EXPECT_EQ(g.image(0), 0u);
    }
}

TEST(CompatibilityGraph, TwentyOneExamples) {
    auto table = compute_cosets(4, 21);
    const CompatibilityGraph g(table, 2);
    const CosetId c1 = table->id_of(1), c2 = table->id_of(2), c5 = table->id_of(5), c7 = table->id_of(7);
    EXPECT_FALSE(g.has_edge(c1, c2));
    EXPECT_TRUE(g.has_edge(c5, c2));
    EXPECT_TRUE(g.has_self_loop(c7));
    EXPECT_TRUE(g.has_self_loop(table->id_of(14)));
    const std::vector<CosetId> ok{c1, c2, table->id_of(3)};
    EXPECT_TRUE(g.is_independent(ok));
}

TEST(Search, MatchesPowersetAtTwentyOne) {
    auto space = CodeSpace::create(4, 21);
    const SearchResult r = search(space, 2, Objective::pareto);
    EXPECT_TRUE(r.complete);
    const std::vector<Point> expected = powerset_frontier(space.table(), space.table_ptr(), 2);
    EXPECT_EQ(points_of(r), expected);
    EXPECT_EQ(expected, (std::vector<Point>{{20, 2}, {14, 3}, {8, 4}, {2, 6}}));
    for (const auto& rep : r.reports) EXPECT_TRUE(rep.self_orthogonal);
}

TEST(Search, MatchesPowersetAtFiftyOne) {
    // The degree bound caps d at 7 here: reaching d = 8 needs both
    // {3,12,39,48} and {6,24,27,45} in S, and each is the other's image.
    auto space = CodeSpace::create(4, 51);
    const SearchResult r = search(space, 2, Objective::pareto);
    const std::vector<Point> expected = powerset_frontier(space.table(), space.table_ptr(), 2);
    EXPECT_EQ(points_of(r), expected);
    EXPECT_EQ(expected, (std::vector<Point>{{50, 2}, {42, 3}, {34, 4}, {26, 6}, {18, 7}}));
    const CompatibilityGraph g(space.table_ptr(), 2);
    EXPECT_TRUE(g.has_edge(space.table().id_of(3), space.table().id_of(6)));
}

TEST(Search, FrontiersForLargerAlphabets) {
    auto s16 = CodeSpace::create(16, 51);
    const auto p16 = points_of(search(s16, 4, Objective::pareto));
    for (Point want : {Point{38, 5}, {34, 6}, {30, 7}, {26, 8}, {22, 9}, {18, 10}, {14, 12}}) {
        EXPECT_NE(std::find(p16.begin(), p16.end(), want), p16.end()) << want.first << "," << want.second;
    }
    auto s64 = CodeSpace::create(64, 585);
    const auto p64 = points_of(search(s64, 8, Objective::pareto));
    for (std::int64_t i = 0; i < 12; ++i) {
        const Point want{576 - 4 * i, static_cast<std::uint64_t>(4 + i)};
        EXPECT_NE(std::find(p64.begin(), p64.end(), want), p64.end()) << want.first << "," << want.second;
    }
}

TEST(Search, SingleAnswerObjectives) {
    auto space = CodeSpace::create(4, 63);
    const SearchResult by_d = search(space, 2, Objective::max_k_given_d, 7);
    ASSERT_EQ(by_d.reports.size(), 1u);
    EXPECT_EQ(by_d.reports[0].quantum_k, 38);
    EXPECT_GE(by_d.reports[0].d_lower, 7u);
    const SearchResult by_k = search(space, 2, Objective::max_d_given_k, 32);
    ASSERT_EQ(by_k.reports.size(), 1u);
    EXPECT_EQ(by_k.reports[0].d_lower, 8u);
    EXPECT_GE(by_k.reports[0].quantum_k, 32);
}

TEST(Search, ThreadsAgreeAndBudgetIsFlagged) {
    auto space = CodeSpace::create(4, 63);
    SearchLimits many;
    many.threads = 4;
    EXPECT_EQ(points_of(search(space, 2, Objective::pareto, std::nullopt, many)),
              points_of(search(space, 2, Objective::pareto)));
    SearchLimits tiny;
    tiny.node_budget = 2;
    const SearchResult partial = search(space, 2, Objective::pareto, std::nullopt, tiny);
    EXPECT_FALSE(partial.complete);
    tiny.node_budget = 0;
    EXPECT_THROW(search(space, 2, Objective::pareto, std::nullopt, tiny), PreconditionError);
}

TEST(Search, ObjectiveNames) {
    for (auto o : {Objective::pareto, Objective::max_d_given_k, Objective::max_k_given_d}) {
        EXPECT_EQ(parse_objective(objective_name(o)), o);
    }
    EXPECT_FALSE(parse_objective("best").has_value());
}

TEST(Reference, Comparisons) {
    const ReferenceComparison a = compare_with_reference({586, 576, 4}, {589, 553, 4});
    EXPECT_EQ(a.delta_k, 23);
    EXPECT_EQ(a.delta_n, -3);
    EXPECT_TRUE(a.better);
    const ReferenceComparison b = compare_with_reference({586, 568, 6}, {629, 557, 6});
    EXPECT_EQ(b.delta_k, 11);
    EXPECT_EQ(b.delta_n, -43);
    const ReferenceComparison self = compare_with_reference({586, 568, 6}, {586, 568, 6});
    EXPECT_EQ(self.delta_k, 0);
    EXPECT_EQ(self.delta_n, 0);
    EXPECT_FALSE(self.better);
    EXPECT_FALSE(compare_with_reference({586, 600, 5}, {589, 553, 4}).better);
    EXPECT_EQ(reference_8ary_codes().size(), 8u);
}

TEST(Reference, ReportAgainstTable) {
    auto space = CodeSpace::create(64, 585);
    const QuantumCodeReport r = derive_quantum(space, space.family(std::vector<std::uint64_t>{0, 8, 16}), 8);
    const auto rows = compare_with_reference(r, reference_8ary_codes());
    ASSERT_EQ(rows.size(), 1u);
    EXPECT_EQ(rows[0].reference, (QuantumParams{589, 553, 4}));
}

}  // namespace
}  // namespace tracecode
