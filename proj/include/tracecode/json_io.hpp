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

#ifndef TRACECODE_JSON_IO_HPP
#define TRACECODE_JSON_IO_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "tracecode/codes.hpp"
#include "tracecode/cosets.hpp"
#include "tracecode/duality.hpp"
#include "tracecode/galois.hpp"
#include "tracecode/gfla.hpp"
#include "tracecode/quantum.hpp"

namespace tracecode {

using Json = nlohmann::ordered_json;

Json to_json(const FieldCtx& field);
std::shared_ptr<const FieldCtx> field_from_json(const Json& j);

Json family_to_json(const CosetFamily& family);
Json to_json(const CosetTable& table);
Json to_json(const DistanceCertificate& cert);
Json to_json(const DualityReport& report);
Json to_json(const QuantumCodeReport& report);

/// {field, code: {q, n, S}, rows, cols, entries}. Entries are symbol indices.
Json to_json(const GeneratorMatrix& g, const FieldCtx& field);

/// A matrix read back from JSON, together with the code it claims to
/// generate when that was recorded.
struct ImportedMatrix {
    std::shared_ptr<const FieldCtx> field;
    GFMatrix matrix;
    std::optional<std::uint64_t> n;
    std::vector<std::uint64_t> representatives;
};

/// Rebuilds the field from its recorded modulus and generator and checks
/// every entry. Throws `PreconditionError` on malformed input.
ImportedMatrix matrix_from_json(const Json& j);

/// Header and one row of the flat code listing.
std::string csv_header();
std::string csv_row(std::uint64_t q, std::optional<std::uint64_t> ell, std::uint64_t n, std::uint64_t block_length,
                    std::int64_t k, std::uint64_t d_lower, std::optional<std::size_t> d_exact,
                    const std::vector<std::uint64_t>& representatives);

}  // namespace tracecode

#endif
