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

#include "tracecode/errors.hpp"

namespace tracecode {

namespace {

void require_even(const CodeSpace& space) {
    if (space.q() % 2 != 0) throw PreconditionError("duality is only provided for even q");
}

void check_dimensions(const CodeSpace& space, const DualityReport& report) {
    if (report.dim_family + report.dim_dual != space.n() + 1) {
        throw VerificationError("dual dimensions " + std::to_string(report.dim_family) + " + " +
                                std::to_string(report.dim_dual) + " do not add up to n + 1");
    }
}

}  // namespace

DualityReport euclidean_dual(const CodeSpace& space, const CosetFamily& family, const DualityOptions& options) {
    require_even(space);
    CosetFamily dual = family_R(family);
    const GeneratorMatrix gs = space.generator_matrix(family);
    const GeneratorMatrix gr = space.generator_matrix(dual);

    DualityReport report{family, dual, InnerProduct::euclidean(), rank(gs.matrix), rank(gr.matrix), false, {}, {}};
    check_dimensions(space, report);
    report.gram_verified = gram_is_zero(gs.matrix, gr.matrix, report.product);
    if (!report.gram_verified) throw VerificationError("euclidean gram product of C_S and C_R is nonzero");
    if (options.verify_nullspace) {
        report.nullspace_verified = same_row_space(gr.matrix, nullspace(gs.matrix));
        if (!*report.nullspace_verified) throw VerificationError("C_R differs from the nullspace of C_S");
    }
    return report;
}

DualityReport hermitian_dual(const CodeSpace& space, const CosetFamily& family, std::uint64_t ell,
                             const DualityOptions& options) {
    require_even(space);
    if (ell < 2 || ell * ell != space.q()) {
        throw PreconditionError("hermitian duality needs q = ell^2, got q = " + std::to_string(space.q()) +
                                ", ell = " + std::to_string(ell));
    }
    CosetFamily dual = family_T(family, ell);
    const GeneratorMatrix gs = space.generator_matrix(family);
    const GeneratorMatrix gt = space.generator_matrix(dual);

    DualityReport report{family, dual, InnerProduct::hermitian(ell), rank(gs.matrix), rank(gt.matrix), false, {}, {}};
    check_dimensions(space, report);
    report.gram_verified = gram_is_zero(gs.matrix, gt.matrix, report.product);
    if (!report.gram_verified) throw VerificationError("hermitian gram product of C_S and C_T is nonzero");

    // The hermitian dual of C_S is the euclidean dual of C_{ell S}.
    const CosetFamily scaled = scale_family(family, ell);
    const GFMatrix powered = entrywise_power(gs.matrix, ell);
    report.scaled_identity_verified =
        family_R(scaled) == dual && same_row_space(powered, space.generator_matrix(scaled).matrix);
    if (!*report.scaled_identity_verified) {
        throw VerificationError("hermitian dual disagrees with the euclidean dual of the scaled family");
    }
    if (options.verify_nullspace) {
        report.nullspace_verified = same_row_space(gt.matrix, nullspace(powered));
        if (!*report.nullspace_verified) throw VerificationError("C_T differs from the hermitian nullspace of C_S");
    }
    return report;
}

}  // namespace tracecode
