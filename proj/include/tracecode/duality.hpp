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

#ifndef TRACECODE_DUALITY_HPP
#define TRACECODE_DUALITY_HPP

#include <optional>

#include "tracecode/codes.hpp"
#include "tracecode/cosets.hpp"
#include "tracecode/gfla.hpp"

namespace tracecode {

/// Dual family of a coset family together with the checks that tie the
/// combinatorial answer to the linear algebra.
struct DualityReport {
    CosetFamily family;
    CosetFamily dual;
    InnerProduct product;
    std::size_t dim_family = 0;
    std::size_t dim_dual = 0;
    bool gram_verified = false;
    /// Row space of the dual code equals the nullspace oracle. Empty when the
    /// check was disabled.
    std::optional<bool> nullspace_verified;
    /// Hermitian only: the dual family equals the euclidean dual family of the
    /// ell-scaled family, and C_{ell S} is the entry-wise ell-th power of C_S.
    std::optional<bool> scaled_identity_verified;
};

struct DualityOptions {
    bool verify_nullspace = true;
};

/// Dual under the dot product: {{0}} plus all cosets outside the dual family.
/// Requires q even and {0} in the family. Throws `VerificationError` if any
/// check fails.
DualityReport euclidean_dual(const CodeSpace& space, const CosetFamily& family, const DualityOptions& options = {});

/// Dual under sum u_i^ell v_i with q = ell^2: {{0}} plus all cosets outside
/// the dual of the ell-scaled family.
DualityReport hermitian_dual(const CodeSpace& space, const CosetFamily& family, std::uint64_t ell,
                             const DualityOptions& options = {});

}  // namespace tracecode

#endif
