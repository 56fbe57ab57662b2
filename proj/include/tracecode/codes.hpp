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

#ifndef TRACECODE_CODES_HPP
#define TRACECODE_CODES_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "tracecode/cosets.hpp"
#include "tracecode/galois.hpp"
#include "tracecode/gfla.hpp"

namespace tracecode {

struct TraceTerm {
    std::uint64_t exponent;  // a q^i mod n
    Elem coefficient;        // alpha_j^(q^i)
};

/// f(x) = sum_i (alpha_j x^a)^(q^i), stored with exponents reduced mod n.
struct TracePolynomial {
    CosetId coset_id = 0;
    std::size_t basis_index = 0;
    std::vector<TraceTerm> terms;

    std::uint64_t degree() const;
    /// Value at x = alpha^t (t in [0, n)), alpha the primitive n-th root.
    Elem evaluate_at_root_power(const FieldCtx& ctx, std::uint64_t n, std::uint64_t t) const;
    /// Value at x = 0.
    Elem evaluate_at_zero() const;
};

/// The s_a trace polynomials of one coset for the given F_q-basis of F_{q^{s_a}}.
std::vector<TracePolynomial> trace_polynomials(const FieldCtx& ctx, const CosetTable& table, CosetId coset,
                                               const SubfieldBasis& basis);

/// Evaluation points (0, alpha^0, alpha^1, ..., alpha^(n-1)).
struct EvaluationDomain {
    std::uint64_t n = 0;
    std::vector<Elem> points;
};

EvaluationDomain evaluation_domain(const FieldCtx& ctx, std::uint64_t n);

/// Canonical F_{q^m}, m the order of q modulo n.
std::shared_ptr<const FieldCtx> field_for(std::uint64_t q, std::uint64_t n);

/// Chooses the F_q-basis of F_{q^s} used for coset `id`.
using BasisChooser = std::function<SubfieldBasis(const FieldCtx& ctx, std::uint64_t q, unsigned s, CosetId id)>;

struct GeneratorMatrix {
    GFMatrix matrix;
    CosetFamily family;
    std::string basis;  // "power" or "custom"
    /// (coset id, basis index) for each row.
    std::vector<std::pair<CosetId, std::size_t>> row_labels;
};

/// Everything needed to evaluate codes for one (q, n): the coset table, the
/// field F_{q^m}, the symbol alphabet F_q and the evaluation domain.
class CodeSpace {
 public:
    explicit CodeSpace(std::shared_ptr<const CosetTable> table, std::shared_ptr<const FieldCtx> field = nullptr);
    static CodeSpace create(std::uint64_t q, std::uint64_t n) { return CodeSpace(compute_cosets(q, n)); }

    const CosetTable& table() const { return *table_; }
    const std::shared_ptr<const CosetTable>& table_ptr() const { return table_; }
    const FieldCtx& field() const { return *field_; }
    const std::shared_ptr<const FieldCtx>& field_ptr() const { return field_; }
    const std::shared_ptr<const SymbolField>& symbols() const { return symbols_; }
    const EvaluationDomain& domain() const { return domain_; }
    std::uint64_t q() const { return table_->q(); }
    std::uint64_t n() const { return table_->n(); }

    CosetFamily family(std::span<const std::uint64_t> residues) const {
        return CosetFamily::from_residues(table_, residues);
    }

    /// One row per (coset, basis element). Every entry is checked to be fixed
    /// by x -> x^q before projection, and the rank is checked to equal the
    /// family dimension.
    GeneratorMatrix generator_matrix(const CosetFamily& family, const BasisChooser& chooser = {}) const;

 private:
    std::shared_ptr<const CosetTable> table_;
    std::shared_ptr<const FieldCtx> field_;
    std::shared_ptr<const SymbolField> symbols_;
    EvaluationDomain domain_;
};

GeneratorMatrix generator_matrix(const CosetFamily& family, std::shared_ptr<const FieldCtx> ctx);

/// Cosets lying entirely in [0, r].
CosetFamily truncated_family(std::shared_ptr<const CosetTable> table, std::uint64_t r);

struct ClassicalParams {
    std::uint64_t length = 0;
    std::size_t dimension = 0;
    std::uint64_t distance_bound = 0;
};

/// (n + 1, sum of coset sizes, n + 1 - max degree).
ClassicalParams classical_params(const CosetFamily& family);

}  // namespace tracecode

#endif
