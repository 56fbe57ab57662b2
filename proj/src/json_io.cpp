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

#include "tracecode/json_io.hpp"

#include <sstream>

#include "tracecode/errors.hpp"

namespace tracecode {

Json to_json(const FieldCtx& field) {
    return Json{{"p", field.characteristic()},
                {"e", field.degree()},
                {"modulus", field.modulus()},
                {"generator", field.generator()}};
}

std::shared_ptr<const FieldCtx> field_from_json(const Json& j) {
    try {
        return make_field(j.at("p").get<std::uint32_t>(), j.at("e").get<unsigned>(),
                          j.at("modulus").get<std::vector<std::uint32_t>>(), j.at("generator").get<Elem>());
    } catch (const Json::exception& ex) {
        throw PreconditionError(std::string("bad field description: ") + ex.what());
    }
}

Json family_to_json(const CosetFamily& family) { return Json(family.as_sets()); }

Json to_json(const CosetTable& table) {
    Json cosets = Json::array();
    for (const auto& c : table.cosets()) cosets.push_back(c.elements);
    return Json{{"q", table.q()}, {"n", table.n()}, {"m", table.m()}, {"cosets", std::move(cosets)}};
}

Json to_json(const DistanceCertificate& cert) {
    return Json{{"method", method_name(cert.method)},
                {"value", cert.value},
                {"enumerated", cert.enumerated},
                {"witness", std::vector<unsigned>(cert.witness.begin(), cert.witness.end())}};
}

Json to_json(const DualityReport& report) {
    Json j{{"product", report.product.name()},    {"S", family_to_json(report.family)},
           {"dual", family_to_json(report.dual)}, {"dim_family", report.dim_family},
           {"dim_dual", report.dim_dual},         {"gram_verified", report.gram_verified}};
    if (report.product.kind == InnerProduct::Kind::hermitian) j["ell"] = report.product.ell;
    if (report.nullspace_verified) j["nullspace_verified"] = *report.nullspace_verified;
    if (report.scaled_identity_verified) j["scaled_identity_verified"] = *report.scaled_identity_verified;
    return j;
}

Json to_json(const QuantumCodeReport& report) {
    Json j{{"ell", report.ell},
           {"q", report.q},
           {"n", report.n},
           {"block_length", report.block_length},
           {"S", family_to_json(report.family)},
           {"T", family_to_json(report.dual)},
           {"classical_k", report.classical_k},
           {"quantum_k", report.quantum_k},
           {"d_lower", report.d_lower},
           {"self_orthogonal", report.self_orthogonal}};
    if (!report.conflicts.empty()) {
        Json conflicts = Json::array();
        for (const auto& c : report.conflicts) {
            conflicts.push_back(Json{{"coset", report.family.table().coset(c.first).elements},
                                     {"image_of", report.family.table().coset(c.second).elements}});
        }
        j["conflicts"] = std::move(conflicts);
    }
    if (report.distance_certificate) j["distance_certificate"] = to_json(*report.distance_certificate);
    if (report.field) j["field"] = to_json(*report.field);
    return j;
}

Json to_json(const GeneratorMatrix& g, const FieldCtx& field) {
    Json entries = Json::array();
    for (std::size_t r = 0; r < g.matrix.rows(); ++r) {
        auto row = g.matrix.row(r);
        entries.push_back(std::vector<unsigned>(row.begin(), row.end()));
    }
    return Json{{"field", to_json(field)},
                {"code", {{"q", g.family.table().q()}, {"n", g.family.table().n()}, {"S", g.family.representatives()}}},
                {"q", g.matrix.field().size()},
                {"rows", g.matrix.rows()},
                {"cols", g.matrix.cols()},
                {"entries", std::move(entries)}};
}

ImportedMatrix matrix_from_json(const Json& j) {
    try {
        auto field = field_from_json(j.at("field"));
        const auto q = j.at("q").get<std::uint64_t>();
        auto symbols = make_symbol_field(field, q);
        const auto rows = j.at("rows").get<std::size_t>();
        const auto cols = j.at("cols").get<std::size_t>();
        const Json& entries = j.at("entries");
        if (entries.size() != rows) throw PreconditionError("entries do not match the recorded row count");
        GFMatrix m(symbols, 0, cols);
        for (const auto& row : entries) {
            std::vector<Symbol> values;
            for (const auto& v : row) {
                const auto x = v.get<std::uint64_t>();
                if (x >= q) throw PreconditionError("matrix entry " + std::to_string(x) + " outside F_q");
                values.push_back(static_cast<Symbol>(x));
            }
            m.append_row(values);
        }
        ImportedMatrix out{field, std::move(m), std::nullopt, {}};
        if (j.contains("code")) {
            const Json& code = j.at("code");
            if (code.at("q").get<std::uint64_t>() != q) throw PreconditionError("code alphabet disagrees with q");
            out.n = code.at("n").get<std::uint64_t>();
            out.representatives = code.at("S").get<std::vector<std::uint64_t>>();
        }
        return out;
    } catch (const Json::exception& ex) {
        throw PreconditionError(std::string("bad matrix file: ") + ex.what());
    }
}

std::string csv_header() { return "q,ell,n,block_length,k_or_quantum_k,d_lower,d_exact,S"; }

std::string csv_row(std::uint64_t q, std::optional<std::uint64_t> ell, std::uint64_t n, std::uint64_t block_length,
                    std::int64_t k, std::uint64_t d_lower, std::optional<std::size_t> d_exact,
                    const std::vector<std::uint64_t>& representatives) {
    std::ostringstream out;
    out << q << ',';
    if (ell) out << *ell;
    out << ',' << n << ',' << block_length << ',' << k << ',' << d_lower << ',';
    if (d_exact) out << *d_exact;
    out << ",\"";
    for (std::size_t i = 0; i < representatives.size(); ++i) out << (i ? " " : "") << representatives[i];
    out << '"';
    return out.str();
}

}  // namespace tracecode
