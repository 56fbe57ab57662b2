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

#include "tracecode/codes.hpp"

#include <algorithm>

#include "tracecode/errors.hpp"

namespace tracecode {

std::uint64_t TracePolynomial::degree() const {
    std::uint64_t d = 0;
    for (const auto& t : terms) d = std::max(d, t.exponent);
    return d;
}

Elem TracePolynomial::evaluate_at_root_power(const FieldCtx& ctx, std::uint64_t n, std::uint64_t t) const {
    const std::uint64_t step = (ctx.order() - 1) / n;
    Elem acc = 0;
    for (const auto& term : terms) {
        const Elem x = ctx.exp(step * ((t % n) * term.exponent % n));
        acc = ctx.add(acc, ctx.mul(term.coefficient, x));
    }
    return acc;
}

Elem TracePolynomial::evaluate_at_zero() const {
    // Only x^0 survives; terms of a single polynomial never share an exponent
    // except in the {0} coset, which has one term.
    for (const auto& term : terms) {
        if (term.exponent == 0) return term.coefficient;
    }
    return 0;
}

std::vector<TracePolynomial> trace_polynomials(const FieldCtx& ctx, const CosetTable& table, CosetId coset,
                                               const SubfieldBasis& basis) {
    const Coset& c = table.coset(coset);
    if (basis.base_size != table.q()) throw PreconditionError("basis is over a different base field");
    if (basis.sub_degree != c.size() || basis.elements.size() != c.size()) {
        throw PreconditionError("basis degree " + std::to_string(basis.sub_degree) + " does not match coset size " +
                                std::to_string(c.size()));
    }
    const std::uint64_t n = table.n(), q = table.q(), a = c.min_rep();
    std::vector<TracePolynomial> out;
    for (std::size_t j = 0; j < basis.elements.size(); ++j) {
        TracePolynomial f;
        f.coset_id = coset;
        f.basis_index = j;
        std::uint64_t exponent = a % n;
        Elem coeff = basis.elements[j];
        for (std::size_t i = 0; i < c.size(); ++i) {
            f.terms.push_back({exponent, coeff});
            exponent = exponent * (q % n) % n;
            coeff = ctx.frobenius(coeff, q);
        }
        out.push_back(std::move(f));
    }
    return out;
}

EvaluationDomain evaluation_domain(const FieldCtx& ctx, std::uint64_t n) {
    if (n < 2) throw PreconditionError("the evaluation domain needs n > 1");
    const FieldElement alpha = nth_root_of_unity(ctx, n);
    EvaluationDomain d;
    d.n = n;
    d.points.reserve(n + 1);
    d.points.push_back(0);
    Elem cur = 1;
    for (std::uint64_t t = 0; t < n; ++t) {
        d.points.push_back(cur);
        cur = ctx.mul(cur, alpha.value());
    }
    return d;
}

std::shared_ptr<const FieldCtx> field_for(std::uint64_t q, std::uint64_t n) {
    const std::uint64_t m = order_mod(q, n);
    const auto primes = prime_divisors(q);
    if (primes.size() != 1) throw PreconditionError("q = " + std::to_string(q) + " is not a prime power");
    const std::uint64_t p = primes.front();
    unsigned f = 0;
    for (std::uint64_t t = q; t > 1; t /= p) ++f;
    const std::uint64_t e = std::uint64_t{f} * m;
    // q^m must fit the table limit.
    std::uint64_t order = 1;
    for (std::uint64_t i = 0; i < e; ++i) {
        order *= p;
        if (order > kMaxFieldOrder) {
            throw PreconditionError("GF(" + std::to_string(q) + "^" + std::to_string(m) +
                                    ") exceeds the supported field size");
        }
    }
    return make_field(static_cast<std::uint32_t>(p), static_cast<unsigned>(e));
}

CodeSpace::CodeSpace(std::shared_ptr<const CosetTable> table, std::shared_ptr<const FieldCtx> field)
    : table_(std::move(table)), field_(std::move(field)) {
    if (!field_) field_ = field_for(table_->q(), table_->n());
    subfield_exponent(*field_, table_->q());
    symbols_ = make_symbol_field(field_, table_->q());
    domain_ = evaluation_domain(*field_, table_->n());
}

GeneratorMatrix CodeSpace::generator_matrix(const CosetFamily& family, const BasisChooser& chooser) const {
    if (family.empty()) throw PreconditionError("generator matrix of an empty family");
    if (family.table().q() != q() || family.table().n() != n()) {
        throw PreconditionError("family belongs to a different coset table");
    }
    const FieldCtx& ctx = *field_;
    const std::uint64_t n = table_->n(), q = table_->q();
    GFMatrix m(symbols_, 0, n + 1);
    std::vector<std::pair<CosetId, std::size_t>> labels;
    std::vector<Symbol> row(n + 1);
    for (CosetId id : family.members()) {
        const unsigned s = static_cast<unsigned>(table_->coset(id).size());
        const SubfieldBasis basis = chooser ? chooser(ctx, q, s, id) : subfield_power_basis(ctx, q, s);
        for (const auto& f : trace_polynomials(ctx, *table_, id, basis)) {
            for (std::uint64_t col = 0; col <= n; ++col) {
                Elem value;
                if (col == 0) {
                    value = f.evaluate_at_zero();
                } else {
                    const std::uint64_t t = col - 1;
                    value = 0;
                    for (const auto& term : f.terms) {
                        const Elem x = domain_.points[1 + t * term.exponent % n];
                        value = ctx.add(value, ctx.mul(term.coefficient, x));
                    }
                }
                if (ctx.frobenius(value, q) != value) {
                    throw VerificationError("trace polynomial value outside F_q at coset " +
                                            format_coset(table_->coset(id)));
                }
                row[col] = static_cast<Symbol>(*symbols_->embedding().project(value));
            }
            m.append_row(row);
            labels.emplace_back(id, f.basis_index);
        }
    }
    if (rank(m) != family.dimension()) {
        throw VerificationError("generator matrix rank differs from the family dimension");
    }
    return GeneratorMatrix{std::move(m), family, chooser ? "custom" : "power", std::move(labels)};
}

GeneratorMatrix generator_matrix(const CosetFamily& family, std::shared_ptr<const FieldCtx> ctx) {
    return CodeSpace(family.table_ptr(), std::move(ctx)).generator_matrix(family);
}

CosetFamily truncated_family(std::shared_ptr<const CosetTable> table, std::uint64_t r) {
    if (r < 1 || r + 1 > table->n()) {
        throw PreconditionError("r must lie in [1, n-1], got " + std::to_string(r));
    }
    std::vector<CosetId> ids;
    for (CosetId id = 0; id < table->size(); ++id) {
        if (table->coset(id).max_elem() <= r) ids.push_back(id);
    }
    return CosetFamily(std::move(table), std::move(ids));
}

ClassicalParams classical_params(const CosetFamily& family) {
    const std::uint64_t n = family.table().n();
    return {n + 1, family.dimension(), n + 1 - max_degree(family)};
}

}  // namespace tracecode
