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

#include <algorithm>
#include <array>
#include <atomic>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

namespace tracecode {

namespace {

void check_quantum_inputs(const CodeSpace& space, std::uint64_t ell) {
    if (ell < 2 || ell * ell != space.q()) {
        throw PreconditionError("quantum codes need q = ell^2, got q = " + std::to_string(space.q()) +
                                ", ell = " + std::to_string(ell));
    }
    if (space.q() % 2 != 0) throw PreconditionError("quantum construction assumes q even");
}

std::string describe_conflicts(const CosetTable& table, const std::vector<CosetConflict>& conflicts) {
    std::ostringstream out;
    for (std::size_t i = 0; i < conflicts.size(); ++i) {
        if (i) out << "; ";
        const auto& c = conflicts[i];
        out << format_coset(table.coset(c.first));
        if (c.first == c.second) {
            out << " is its own image";
        } else {
            out << " is the image of " << format_coset(table.coset(c.second));
        }
    }
    return out.str();
}

}  // namespace

std::uint64_t coverage_distance(const CosetFamily& family, std::uint64_t ell) {
    const CosetTable& table = family.table();
    const std::uint64_t n = table.n();
    const CosetFamily image = dual_family(scale_family(family, ell));
    // Grow d while the residues n+2-d .. n-1 all sit in covered cosets.
    std::uint64_t d = 2;
    while (d <= n) {
        const std::uint64_t a = n + 1 - d;  // newly required residue for d + 1
        if (!image.contains(table.id_of(a))) break;
        ++d;
    }
    return d;
}

QuantumCodeReport derive_quantum(const CodeSpace& space, const CosetFamily& family, std::uint64_t ell,
                                 const QuantumOptions& options) {
    check_quantum_inputs(space, ell);
    const CosetTable& table = space.table();
    const std::uint64_t n = table.n();

    const CosetFamily dual = family_T(family, ell);
    const std::size_t k = family.dimension();
    QuantumCodeReport report{.ell = ell,
                             .q = space.q(),
                             .n = n,
                             .block_length = n + 1,
                             .family = family,
                             .dual = dual,
                             .classical_k = k,
                             .quantum_k = static_cast<std::int64_t>(n + 1) - 2 * static_cast<std::int64_t>(k),
                             .d_lower = 0,
                             .self_orthogonal = family.is_subset_of(dual),
                             .conflicts = {},
                             .distance_certificate = std::nullopt,
                             .field = space.field_ptr()};

    for (CosetId a : family.members()) {
        if (a == 0) continue;
        for (CosetId b : family.members()) {
            if (b == 0) continue;
            if (dual_coset(table, table.id_of(table.coset(b).min_rep() * ell % n)) == a) {
                report.conflicts.push_back({a, b});
            }
        }
    }

    const GeneratorMatrix gs = space.generator_matrix(family);
    const bool gram_zero = gram_is_zero(gs.matrix, gs.matrix, InnerProduct::hermitian(ell));
    if (gram_zero != report.self_orthogonal || report.self_orthogonal != report.conflicts.empty()) {
        throw VerificationError("combinatorial and gram self-orthogonality checks disagree");
    }
    if (!report.self_orthogonal && !options.allow_non_orthogonal) {
        throw NotSelfOrthogonal(
            "family is not hermitian self-orthogonal: " + describe_conflicts(table, report.conflicts),
            report.conflicts);
    }

    report.d_lower = n + 1 - max_degree(report.dual);
    if (report.d_lower != coverage_distance(family, ell)) {
        throw VerificationError("degree bound and coverage bound disagree");
    }

    if (options.certify) {
        const auto count = nonzero_codeword_count(static_cast<std::uint32_t>(space.q()), report.dual.dimension());
        if (count && *count <= options.enumeration.budget) {
            const GeneratorMatrix gt = space.generator_matrix(report.dual);
            report.distance_certificate = min_distance_exhaustive(gt.matrix, options.enumeration);
        }
    }
    return report;
}

CompatibilityGraph::CompatibilityGraph(std::shared_ptr<const CosetTable> table, std::uint64_t ell)
    : table_(std::move(table)), ell_(ell) {
    const std::uint64_t n = table_->n();
    if (ell < 2 || ell * ell != table_->q()) throw PreconditionError("compatibility graph needs q = ell^2");
    image_.resize(table_->size());
    adjacency_.resize(table_->size());
    for (CosetId id = 0; id < table_->size(); ++id) {
        image_[id] = dual_coset(*table_, table_->id_of(table_->coset(id).min_rep() * ell % n));
        if (id != 0) vertices_.push_back(id);
    }
    for (CosetId b : vertices_) {
        const CosetId a = image_[b];
        if (a == 0) continue;
        for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
            auto& adj = adjacency_[x];
            if (std::find(adj.begin(), adj.end(), y) == adj.end()) adj.push_back(y);
        }
    }
    for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
}

bool CompatibilityGraph::is_independent(std::span<const CosetId> ids) const {
    for (CosetId a : ids) {
        if (a == 0) continue;
        for (CosetId b : ids) {
            if (b != 0 && has_edge(a, b)) return false;
        }
    }
    return true;
}

CompatibilityGraph build_compatibility_graph(std::shared_ptr<const CosetTable> table, std::uint64_t ell) {
    return CompatibilityGraph(std::move(table), ell);
}

std::optional<Objective> parse_objective(std::string_view name) {
    if (name == "pareto") return Objective::pareto;
    if (name == "max_d_given_k") return Objective::max_d_given_k;
    if (name == "max_k_given_d") return Objective::max_k_given_d;
    return std::nullopt;
}

std::string objective_name(Objective objective) {
    switch (objective) {
        case Objective::pareto:
            return "pareto";
        case Objective::max_d_given_k:
            return "max_d_given_k";
        case Objective::max_k_given_d:
            return "max_k_given_d";
    }
    return "?";
}

namespace {

struct Point {
    std::int64_t quantum_k;
    std::uint64_t d;
};

/// Recorded (quantum_k, d) points, each with the first family that reached it.
class Frontier {
 public:
    bool dominated(std::int64_t k_max, std::uint64_t d_max) const {
        for (const auto& [k, entry] : best_) {
            if (k >= k_max && entry.first >= d_max) return true;
        }
        return false;
    }

    void record(Point p, const std::vector<CosetId>& chosen) {
        auto it = best_.find(p.quantum_k);
        if (it == best_.end() || it->second.first < p.d) best_[p.quantum_k] = {p.d, chosen};
    }

    void merge(const Frontier& other) {
        for (const auto& [k, entry] : other.best_) {
            auto it = best_.find(k);
            if (it == best_.end() || it->second.first < entry.first) best_[k] = entry;
        }
    }

    /// Non-dominated points, quantum_k descending.
    std::vector<std::pair<Point, std::vector<CosetId>>> pareto() const {
        std::vector<std::pair<Point, std::vector<CosetId>>> out;
        std::uint64_t best_d = 0;
        bool any = false;
        for (auto it = best_.rbegin(); it != best_.rend(); ++it) {
            if (!any || it->second.first > best_d) {
                out.push_back({{it->first, it->second.first}, it->second.second});
                best_d = it->second.first;
                any = true;
            }
        }
        return out;
    }

 private:
    std::map<std::int64_t, std::pair<std::uint64_t, std::vector<CosetId>>> best_;
};

class Searcher {
 public:
    Searcher(const CompatibilityGraph& graph, Objective objective, std::optional<std::int64_t> target,
             std::atomic<std::uint64_t>& nodes, std::uint64_t budget)
        : graph_(graph),
          table_(graph.table()),
          n_(table_.n()),
          objective_(objective),
          target_(target),
          nodes_(nodes),
          budget_(budget) {
        for (CosetId v : graph.vertices()) {
            if (!graph.has_self_loop(v)) order_.push_back(v);
        }
        std::stable_sort(order_.begin(), order_.end(), [&](CosetId a, CosetId b) {
            return table_.coset(graph.image(a)).max_elem() > table_.coset(graph.image(b)).max_elem();
        });
        position_.assign(table_.size(), SIZE_MAX);
        for (std::size_t i = 0; i < order_.size(); ++i) position_[order_[i]] = i;
        // Nonzero cosets, largest element first: the order in which T loses
        // its highest-degree members.
        for (CosetId id = 1; id < table_.size(); ++id) targets_.push_back(id);
        std::stable_sort(targets_.begin(), targets_.end(),
                         [&](CosetId a, CosetId b) { return table_.coset(a).max_elem() > table_.coset(b).max_elem(); });
        preimage_.assign(table_.size(), 0);
        for (CosetId id = 1; id < table_.size(); ++id) preimage_[graph.image(id)] = id;
        covered_.assign(table_.size(), 0);
        chosen_flag_.assign(table_.size(), false);
    }

    const std::vector<CosetId>& order() const { return order_; }
    Frontier& frontier() { return frontier_; }
    bool exhausted() const { return exhausted_; }

    void run_root() { visit(0); }

    /// Subtree whose first chosen vertex is order()[first].
    void run_from(std::size_t first) {
        if (!push(order_[first])) return;
        if (admissible_child()) visit(first + 1);
        pop();
    }

    /// Root node only, without descending.
    void record_root() { record_current(); }

 private:
    std::uint64_t current_d() const {
        for (CosetId t : targets_) {
            if (!covered_[t]) return n_ + 1 - table_.coset(t).max_elem();
        }
        return n_ + 1;
    }

    /// Upper bound on d for any extension using vertices at positions >= from.
    std::uint64_t d_bound(std::size_t from) const {
        for (CosetId t : targets_) {
            if (covered_[t]) continue;
            const CosetId v = preimage_[t];
            const bool usable = position_[v] != SIZE_MAX && position_[v] >= from && !blocked(v);
            if (!usable) return n_ + 1 - table_.coset(t).max_elem();
        }
        return n_ + 1;
    }

    bool blocked(CosetId v) const {
        for (CosetId u : graph_.neighbours(v)) {
            if (chosen_flag_[u]) return true;
        }
        return false;
    }

    std::int64_t quantum_k() const { return static_cast<std::int64_t>(n_ + 1) - 2 * static_cast<std::int64_t>(k_); }

    bool push(CosetId v) {
        if (blocked(v)) return false;
        chosen_.push_back(v);
        chosen_flag_[v] = true;
        k_ += table_.coset(v).size();
        ++covered_[graph_.image(v)];
        return true;
    }

    void pop() {
        const CosetId v = chosen_.back();
        chosen_.pop_back();
        chosen_flag_[v] = false;
        k_ -= table_.coset(v).size();
        --covered_[graph_.image(v)];
    }

    bool admissible_child() const { return quantum_k() >= 0; }

    bool wanted(std::int64_t k_max, std::uint64_t d_max) const {
        if (objective_ == Objective::max_d_given_k && target_ && k_max < *target_) return false;
        if (objective_ == Objective::max_k_given_d && target_ && d_max < static_cast<std::uint64_t>(*target_)) {
            return false;
        }
        return !frontier_.dominated(k_max, d_max);
    }

    void record_current() {
        const Point p{quantum_k(), current_d()};
        if (objective_ == Objective::max_d_given_k && target_ && p.quantum_k < *target_) return;
        if (objective_ == Objective::max_k_given_d && target_ && p.d < static_cast<std::uint64_t>(*target_)) return;
        std::vector<CosetId> family = chosen_;
        family.push_back(0);
        std::sort(family.begin(), family.end());
        frontier_.record(p, family);
    }

    void visit(std::size_t from) {
        if (nodes_.fetch_add(1) >= budget_) {
            exhausted_ = true;
            return;
        }
        record_current();
        for (std::size_t j = from; j < order_.size() && !exhausted_; ++j) {
            const CosetId v = order_[j];
            if (!push(v)) continue;
            if (admissible_child() && wanted(quantum_k(), d_bound(j + 1))) visit(j + 1);
            pop();
        }
    }

    const CompatibilityGraph& graph_;
    const CosetTable& table_;
    std::uint64_t n_;
    Objective objective_;
    std::optional<std::int64_t> target_;
    std::atomic<std::uint64_t>& nodes_;
    std::uint64_t budget_;
    bool exhausted_ = false;

    std::vector<CosetId> order_;
    std::vector<std::size_t> position_;
    std::vector<CosetId> targets_;
    std::vector<CosetId> preimage_;
    std::vector<int> covered_;
    std::vector<bool> chosen_flag_;
    std::vector<CosetId> chosen_;
    std::size_t k_ = 1;  // the {0} coset
    Frontier frontier_;
};

}  // namespace

SearchResult search(const CodeSpace& space, std::uint64_t ell, Objective objective, std::optional<std::int64_t> target,
                    const SearchLimits& limits) {
    check_quantum_inputs(space, ell);
    if (limits.node_budget == 0) throw PreconditionError("search budget must be positive");
    if (objective != Objective::pareto && !target) throw PreconditionError("objective needs a target value");
    const CompatibilityGraph graph(space.table_ptr(), ell);
    std::atomic<std::uint64_t> nodes{0};

    Frontier merged;
    bool exhausted = false;
    if (limits.threads <= 1) {
        Searcher s(graph, objective, target, nodes, limits.node_budget);
        s.run_root();
        merged = s.frontier();
        exhausted = s.exhausted();
    } else {
        // One independent subtree per first chosen vertex, plus the root.
        Searcher root(graph, objective, target, nodes, limits.node_budget);
        root.record_root();
        const std::size_t branches = root.order().size();
        std::vector<Frontier> parts(branches);
        std::vector<char> part_exhausted(branches, 0);
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        const unsigned workers = std::min<std::size_t>(limits.threads, std::max<std::size_t>(branches, 1));
        for (unsigned t = 0; t < workers; ++t) {
            pool.emplace_back([&] {
                for (std::size_t b = next++; b < branches; b = next++) {
                    Searcher s(graph, objective, target, nodes, limits.node_budget);
                    s.frontier() = root.frontier();
                    s.run_from(b);
                    parts[b] = s.frontier();
                    part_exhausted[b] = s.exhausted();
                }
            });
        }
        for (auto& th : pool) th.join();
        merged = root.frontier();
        // Merge in branch order so each point keeps its earliest family.
        for (std::size_t b = 0; b < branches; ++b) {
            merged.merge(parts[b]);
            exhausted = exhausted || part_exhausted[b];
        }
    }

    SearchResult result;
    result.nodes = nodes.load();
    result.complete = !exhausted;
    auto points = merged.pareto();
    if (objective == Objective::max_d_given_k && !points.empty()) {
        // Highest d; among equals the larger dimension comes first already.
        auto best = std::max_element(points.begin(), points.end(),
                                     [](const auto& a, const auto& b) { return a.first.d < b.first.d; });
        points = {*best};
    } else if (objective == Objective::max_k_given_d && !points.empty()) {
        points = {points.front()};
    }
    for (const auto& [point, ids] : points) {
        QuantumCodeReport report = derive_quantum(space, CosetFamily(space.table_ptr(), ids), ell);
        if (report.quantum_k != point.quantum_k || report.d_lower != point.d) {
            throw VerificationError("search bookkeeping disagrees with the derived parameters");
        }
        result.reports.push_back(std::move(report));
    }
    return result;
}

std::string format_params(const QuantumParams& p) {
    return "[[" + std::to_string(p.length) + "," + std::to_string(p.dimension) + "," + std::to_string(p.distance) +
           "]]";
}

ReferenceComparison compare_with_reference(const QuantumParams& ours, const QuantumParams& reference) {
    ReferenceComparison c{ours, reference};
    c.delta_k = ours.dimension - reference.dimension;
    c.delta_n = static_cast<std::int64_t>(ours.length) - static_cast<std::int64_t>(reference.length);
    c.better = ours.distance == reference.distance && c.delta_k > 0 && c.delta_n <= 0;
    return c;
}

std::vector<ReferenceComparison> compare_with_reference(const QuantumCodeReport& report,
                                                        std::span<const QuantumParams> table) {
    const QuantumParams ours{report.block_length, report.quantum_k, report.d_lower};
    std::vector<ReferenceComparison> out;
    for (const auto& ref : table) {
        if (ref.distance == ours.distance) out.push_back(compare_with_reference(ours, ref));
    }
    return out;
}

std::span<const QuantumParams> reference_8ary_codes() {
    static constexpr std::array<QuantumParams, 8> kCodes{{
        {589, 553, 4},
        {589, 513, 6},
        {627, 561, 5},
        {627, 531, 6},
        {627, 501, 7},
        {629, 557, 6},
        {629, 533, 7},
        {629, 521, 8},
    }};
    return kCodes;
}

}  // namespace tracecode
