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

#ifndef TRACECODE_QUANTUM_HPP
#define TRACECODE_QUANTUM_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tracecode/codes.hpp"
#include "tracecode/cosets.hpp"
#include "tracecode/errors.hpp"
#include "tracecode/gfla.hpp"

namespace tracecode {

/// A pair of chosen cosets with `first` = (ell * second)*. A coset paired with
/// itself can never be chosen.
struct CosetConflict {
    CosetId first;
    CosetId second;
};

/// Raised when a family is not hermitian self-orthogonal.
class NotSelfOrthogonal : public VerificationError {
 public:
    NotSelfOrthogonal(std::string what, std::vector<CosetConflict> conflicts)
        : VerificationError(std::move(what)), conflicts_(std::move(conflicts)) {}
    const std::vector<CosetConflict>& conflicts() const { return conflicts_; }

 private:
    std::vector<CosetConflict> conflicts_;
};

/// Parameters [[n+1, n+1-2k, >= d]] of the ell-ary quantum code obtained from a
/// hermitian self-orthogonal C_S over F_{ell^2}.
struct QuantumCodeReport {
    std::uint64_t ell = 0;
    std::uint64_t q = 0;
    std::uint64_t n = 0;
    std::uint64_t block_length = 0;
    CosetFamily family;
    CosetFamily dual;  // T = {{0}} + (A - (ell S)*)
    std::size_t classical_k = 0;
    std::int64_t quantum_k = 0;
    std::uint64_t d_lower = 0;
    bool self_orthogonal = false;
    std::vector<CosetConflict> conflicts;
    /// Exact minimum distance of C_T, when it was enumerated.
    std::optional<DistanceCertificate> distance_certificate;
    std::shared_ptr<const FieldCtx> field;
};

struct QuantumOptions {
    bool certify = false;
    EnumerationOptions enumeration;
    /// Return a flagged report instead of throwing `NotSelfOrthogonal`.
    bool allow_non_orthogonal = false;
};

/// Checks S subset of T combinatorially and through the hermitian gram matrix
/// of C_S with itself (a disagreement throws `VerificationError`), then
/// derives the quantum parameters.
QuantumCodeReport derive_quantum(const CodeSpace& space, const CosetFamily& family, std::uint64_t ell,
                                 const QuantumOptions& options = {});

/// Largest d with every coset meeting [n+2-d, n-1] inside (ell S)*.
std::uint64_t coverage_distance(const CosetFamily& family, std::uint64_t ell);

/// Pairs of nonzero cosets that cannot be chosen together. A family
/// {{0}} + I is hermitian self-orthogonal iff I is independent here.
class CompatibilityGraph {
 public:
    CompatibilityGraph(std::shared_ptr<const CosetTable> table, std::uint64_t ell);

    const CosetTable& table() const { return *table_; }
    std::uint64_t ell() const { return ell_; }
    /// Nonzero coset ids.
    const std::vector<CosetId>& vertices() const { return vertices_; }
    /// (ell * id)*
    CosetId image(CosetId id) const { return image_[id]; }
    /// a = (ell b)*, taken literally (not symmetrized).
    bool conflicts(CosetId a, CosetId b) const { return image_[b] == a; }
    bool has_edge(CosetId a, CosetId b) const { return conflicts(a, b) || conflicts(b, a); }
    bool has_self_loop(CosetId a) const { return image_[a] == a; }
    const std::vector<CosetId>& neighbours(CosetId a) const { return adjacency_[a]; }
    bool is_independent(std::span<const CosetId> ids) const;

 private:
    std::shared_ptr<const CosetTable> table_;
    std::uint64_t ell_;
    std::vector<CosetId> vertices_;
    std::vector<CosetId> image_;
    std::vector<std::vector<CosetId>> adjacency_;
};

CompatibilityGraph build_compatibility_graph(std::shared_ptr<const CosetTable> table, std::uint64_t ell);

enum class Objective { pareto, max_d_given_k, max_k_given_d };

std::optional<Objective> parse_objective(std::string_view name);
std::string objective_name(Objective objective);

struct SearchLimits {
    std::uint64_t node_budget = std::uint64_t{1} << 24;
    unsigned threads = 1;
};

struct SearchResult {
    /// Frontier reports ordered by quantum_k descending (one for the
    /// single-answer objectives).
    std::vector<QuantumCodeReport> reports;
    /// False when the node budget ran out; the frontier is then partial.
    bool complete = true;
    std::uint64_t nodes = 0;
};

/// Depth-first search over independent sets of the compatibility graph.
/// Vertices are ordered by the largest element of the coset they remove from
/// T, descending; a branch is cut when a recorded point already dominates the
/// best (quantum_k, d) the branch could reach. `target` is the quantum
/// dimension for max_d_given_k and the distance for max_k_given_d.
SearchResult search(const CodeSpace& space, std::uint64_t ell, Objective objective,
                    std::optional<std::int64_t> target = std::nullopt, const SearchLimits& limits = {});

struct QuantumParams {
    std::uint64_t length = 0;
    std::int64_t dimension = 0;
    std::uint64_t distance = 0;
    friend bool operator==(const QuantumParams&, const QuantumParams&) = default;
};

std::string format_params(const QuantumParams& p);

struct ReferenceComparison {
    QuantumParams ours;
    QuantumParams reference;
    std::int64_t delta_k = 0;  // ours - reference
    std::int64_t delta_n = 0;  // ours - reference
    /// Same distance, larger dimension, no longer length.
    bool better = false;
};

ReferenceComparison compare_with_reference(const QuantumParams& ours, const QuantumParams& reference);
/// Comparisons against every reference entry with the same distance.
std::vector<ReferenceComparison> compare_with_reference(const QuantumCodeReport& report,
                                                        std::span<const QuantumParams> table);
/// Published 8-ary codes used as the comparison baseline for n = 585.
std::span<const QuantumParams> reference_8ary_codes();

}  // namespace tracecode

#endif
