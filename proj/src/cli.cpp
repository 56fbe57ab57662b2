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

#include "tracecode/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tracecode/codes.hpp"
#include "tracecode/cosets.hpp"
#include "tracecode/duality.hpp"
#include "tracecode/errors.hpp"
#include "tracecode/fixtures.hpp"
#include "tracecode/json_io.hpp"
#include "tracecode/quantum.hpp"

namespace tracecode {

namespace {

enum class Format { text, json, csv };

struct Common {
    Format format = Format::text;
    std::uint64_t budget = kDefaultEnumerationBudget;
    unsigned threads = 1;

    EnumerationOptions enumeration() const { return {budget, threads}; }
};

std::uint64_t default_budget() {
    const char* env = std::getenv("TRACECODE_BUDGET");
    if (!env || !*env) return kDefaultEnumerationBudget;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (*end != '\0' || v == 0) throw PreconditionError("TRACECODE_BUDGET must be a positive integer");
    return v;
}

void add_common(CLI::App* cmd, Common& c, bool with_parallelism) {
    const std::map<std::string, Format> formats{{"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};
    cmd->add_option("--format", c.format, "Output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    if (with_parallelism) {
        cmd->add_option("--budget", c.budget, "Largest number of codewords to enumerate")->check(CLI::PositiveNumber);
        cmd->add_option("--threads", c.threads, "Worker threads")->check(CLI::Range(1u, 256u));
    }
}

std::string sets_line(const CosetFamily& f) {
    std::string s;
    for (const auto& id : f.members()) {
        if (!s.empty()) s += ' ';
        s += format_coset(f.table().coset(id));
    }
    return s;
}

std::optional<DistanceCertificate> certify(const GFMatrix& g, const Common& c, std::ostream& err) {
    const auto count = nonzero_codeword_count(g.field().size(), g.rows());
    if (!count || *count > c.budget) {
        err << "note: " << g.field().size() << "^" << g.rows() << " codewords exceed the budget of " << c.budget
            << ", reporting the bound only\n";
        return std::nullopt;
    }
    return min_distance_exhaustive(g, c.enumeration());
}

/// Shared shape of `classical` and `check-matrix` reports, so that an
/// exported matrix re-verifies to the identical report.
Json classical_json(const CosetFamily& family, std::size_t k, const FieldCtx& field,
                    const std::optional<DistanceCertificate>& cert) {
    const ClassicalParams p = classical_params(family);
    Json j{{"q", family.table().q()},
           {"n", family.table().n()},
           {"block_length", p.length},
           {"S", family_to_json(family)},
           {"k", k},
           {"d_lower", p.distance_bound}};
    if (cert) j["distance_certificate"] = to_json(*cert);
    j["field"] = to_json(field);
    return j;
}

void print_classical(std::ostream& out, const Common& c, const CosetFamily& family, std::size_t k,
                     const FieldCtx& field, const std::optional<DistanceCertificate>& cert) {
    const ClassicalParams p = classical_params(family);
    switch (c.format) {
        case Format::json:
            out << classical_json(family, k, field, cert).dump(2) << '\n';
            break;
        case Format::csv:
            out << csv_header() << '\n'
                << csv_row(family.table().q(), std::nullopt, family.table().n(), p.length, static_cast<std::int64_t>(k),
                           p.distance_bound, cert ? std::optional<std::size_t>(cert->value) : std::nullopt,
                           family.representatives())
                << '\n';
            break;
        case Format::text:
            out << '[' << p.length << ',' << k << ",>=" << p.distance_bound << "] over F_" << family.table().q()
                << '\n';
            out << "S: " << sets_line(family) << '\n';
            if (cert) {
                out << "d = " << cert->value << " (" << method_name(cert->method) << ", " << cert->enumerated
                    << " nonzero codewords)\n";
            }
            break;
    }
}

std::vector<std::uint64_t> parse_triple(const std::string& s) {
    std::vector<std::uint64_t> v;
    std::stringstream in(s);
    std::string part;
    while (std::getline(in, part, ',')) v.push_back(std::stoull(part));
    if (v.size() != 3) throw PreconditionError("expected N,K,D but got '" + s + "'");
    return v;
}

void print_quantum_reports(std::ostream& out, const Common& c, const std::vector<QuantumCodeReport>& reports,
                           const Json* extra = nullptr) {
    switch (c.format) {
        case Format::json: {
            Json arr = Json::array();
            for (const auto& r : reports) arr.push_back(to_json(r));
            if (extra) {
                Json j = *extra;
                j["reports"] = std::move(arr);
                out << j.dump(2) << '\n';
            } else if (reports.size() == 1) {
                out << arr.at(0).dump(2) << '\n';
            } else {
                out << arr.dump(2) << '\n';
            }
            break;
        }
        case Format::csv:
            out << csv_header() << '\n';
            for (const auto& r : reports) {
                out << csv_row(r.q, r.ell, r.n, r.block_length, r.quantum_k, r.d_lower,
                               r.distance_certificate ? std::optional<std::size_t>(r.distance_certificate->value)
                                                      : std::nullopt,
                               r.family.representatives())
                    << '\n';
            }
            break;
        case Format::text:
            for (const auto& r : reports) {
                out << format_params({r.block_length, r.quantum_k, r.d_lower}) << "  (" << r.ell
                    << "-ary, k = " << r.classical_k << ", d is a lower bound"
                    << (r.self_orthogonal ? "" : ", NOT self-orthogonal") << ")\n";
                out << "  S: " << sets_line(r.family) << '\n';
                if (reports.size() == 1) out << "  T: " << sets_line(r.dual) << '\n';
                if (r.distance_certificate) {
                    out << "  d(C_T) = " << r.distance_certificate->value << " ("
                        << method_name(r.distance_certificate->method) << ")\n";
                }
            }
            break;
    }
}

int cmd_cosets(std::ostream& out, const Common& c, std::uint64_t q, std::uint64_t n) {
    const auto table = compute_cosets(q, n);
    switch (c.format) {
        case Format::json:
            out << to_json(*table).dump(2) << '\n';
            break;
        case Format::csv:
            out << "id,min_rep,size,elements\n";
            for (CosetId id = 0; id < table->size(); ++id) {
                const Coset& cs = table->coset(id);
                out << id << ',' << cs.min_rep() << ',' << cs.size() << ",\"";
                for (std::size_t i = 0; i < cs.size(); ++i) out << (i ? " " : "") << cs.elements[i];
                out << "\"\n";
            }
            break;
        case Format::text:
            out << table->size() << " cyclotomic cosets of " << q << " mod " << n << " (m = " << table->m() << ")\n";
            out << coset_table_text(*table);
            break;
    }
    return kExitOk;
}

struct ClassicalArgs {
    std::uint64_t q = 0, n = 0;
    std::optional<std::uint64_t> r;
    std::vector<std::uint64_t> family;
    bool certify = false;
    std::string export_path;
};

int cmd_classical(std::ostream& out, std::ostream& err, const Common& c, const ClassicalArgs& a) {
    const CodeSpace space = CodeSpace::create(a.q, a.n);
    const CosetFamily family = a.r ? truncated_family(space.table_ptr(), *a.r) : space.family(a.family);
    const GeneratorMatrix g = space.generator_matrix(family);
    const std::size_t k = rank(g.matrix);
    if (k != family.dimension()) throw VerificationError("generator matrix rank differs from the coset sizes");
    std::optional<DistanceCertificate> cert;
    if (a.certify) cert = certify(g.matrix, c, err);
    if (!a.export_path.empty()) {
        std::ofstream file(a.export_path);
        if (!file) throw PreconditionError("cannot write " + a.export_path);
        file << to_json(g, space.field()).dump(2) << '\n';
    }
    print_classical(out, c, family, k, space.field(), cert);
    return kExitOk;
}

int cmd_check_matrix(std::ostream& out, std::ostream& err, const Common& c, const std::string& path, bool do_cert) {
    std::ifstream file(path);
    if (!file) throw PreconditionError("cannot read " + path);
    Json j;
    try {
        j = Json::parse(file);
    } catch (const Json::exception& ex) {
        throw PreconditionError(std::string("malformed JSON: ") + ex.what());
    }
    const ImportedMatrix m = matrix_from_json(j);
    const std::size_t k = rank(m.matrix);
    std::optional<DistanceCertificate> cert;
    if (do_cert) cert = certify(m.matrix, c, err);
    if (!m.n) {
        if (k != m.matrix.rows()) throw VerificationError("matrix does not have full row rank");
        Json report{{"q", m.matrix.field().size()}, {"rows", m.matrix.rows()}, {"cols", m.matrix.cols()}, {"k", k}};
        if (cert) report["distance_certificate"] = to_json(*cert);
        report["field"] = to_json(*m.field);
        out << report.dump(2) << '\n';
        return kExitOk;
    }
    // Rebuild the code the file claims to hold and compare.
    const CodeSpace space(compute_cosets(m.matrix.field().size(), *m.n), m.field);
    const CosetFamily family = space.family(m.representatives);
    const GeneratorMatrix g = space.generator_matrix(family);
    if (!(g.matrix == m.matrix)) {
        if (!same_row_space(g.matrix, m.matrix)) {
            throw VerificationError("matrix does not generate the recorded code");
        }
        err << "note: matrix differs entry-wise but spans the recorded code\n";
    }
    if (k != family.dimension()) throw VerificationError("matrix rank differs from the coset sizes");
    print_classical(out, c, family, k, space.field(), cert);
    return kExitOk;
}

struct DualArgs {
    std::uint64_t q = 0, n = 0;
    std::vector<std::uint64_t> family;
    std::optional<std::uint64_t> ell;
    bool skip_nullspace = false;
};

int cmd_dual(std::ostream& out, const Common& c, const DualArgs& a) {
    const CodeSpace space = CodeSpace::create(a.q, a.n);
    const CosetFamily family = space.family(a.family);
    DualityOptions opts;
    opts.verify_nullspace = !a.skip_nullspace;
    const DualityReport r = a.ell ? hermitian_dual(space, family, *a.ell, opts) : euclidean_dual(space, family, opts);
    if (c.format == Format::json) {
        out << to_json(r).dump(2) << '\n';
        return kExitOk;
    }
    if (c.format == Format::csv) {
        out << "product,dim_family,dim_dual,gram_verified,nullspace_verified,dual\n"
            << r.product.name() << ',' << r.dim_family << ',' << r.dim_dual << ',' << r.gram_verified << ','
            << (r.nullspace_verified ? std::to_string(*r.nullspace_verified) : "") << ",\"";
        const auto reps = r.dual.representatives();
        for (std::size_t i = 0; i < reps.size(); ++i) out << (i ? " " : "") << reps[i];
        out << "\"\n";
        return kExitOk;
    }
    const CosetFamily missing = family_difference(CosetFamily::all(space.table_ptr()), r.dual);
    out << r.product.name() << " dual of S (dimension " << r.dim_family << "), dimension " << r.dim_dual << '\n';
    out << "S:    " << sets_line(r.family) << '\n';
    out << "dual: A minus " << (missing.empty() ? std::string("nothing") : sets_line(missing)) << '\n';
    out << "gram zero: " << (r.gram_verified ? "yes" : "no");
    if (r.nullspace_verified) out << ", nullspace match: " << (*r.nullspace_verified ? "yes" : "no");
    if (r.scaled_identity_verified) out << ", scaled identity: " << (*r.scaled_identity_verified ? "yes" : "no");
    out << '\n';
    return kExitOk;
}

struct QuantumArgs {
    std::uint64_t q = 0, ell = 0, n = 0;
    std::vector<std::uint64_t> family;
    bool certify = false;
    bool allow_non_orthogonal = false;
};

int cmd_quantum(std::ostream& out, std::ostream& err, const Common& c, const QuantumArgs& a) {
    const CodeSpace space = CodeSpace::create(a.q, a.n);
    const CosetFamily family = space.family(a.family);
    QuantumOptions opts;
    opts.certify = a.certify;
    opts.enumeration = c.enumeration();
    opts.allow_non_orthogonal = a.allow_non_orthogonal;
    const QuantumCodeReport r = derive_quantum(space, family, a.ell, opts);
    if (a.certify && !r.distance_certificate) {
        err << "note: C_T has " << a.q << "^" << r.dual.dimension() << " codewords, over the budget of " << c.budget
            << "; reporting the bound only\n";
    }
    print_quantum_reports(out, c, {r});
    if (!r.self_orthogonal) {
        std::ostringstream why;
        for (const auto& cf : r.conflicts) {
            why << "\n  " << format_coset(space.table().coset(cf.first));
            if (cf.first == cf.second) {
                why << " is its own image";
            } else {
                why << " is the image of " << format_coset(space.table().coset(cf.second));
            }
        }
        err << "family is not hermitian self-orthogonal:" << why.str() << '\n';
        return kExitFailure;
    }
    return kExitOk;
}

struct SearchArgs {
    std::uint64_t q = 0, ell = 0, n = 0;
    std::string objective = "pareto";
    std::optional<std::int64_t> target;
    std::uint64_t limit = std::uint64_t{1} << 24;
};

int cmd_search(std::ostream& out, std::ostream& err, const Common& c, const SearchArgs& a) {
    const auto objective = parse_objective(a.objective);
    if (!objective) throw PreconditionError("unknown objective " + a.objective);
    if (*objective != Objective::pareto && !a.target)
        throw PreconditionError("--target is required for " + a.objective);
    const CodeSpace space = CodeSpace::create(a.q, a.n);
    SearchLimits limits;
    limits.node_budget = a.limit;
    limits.threads = c.threads;
    const SearchResult result = search(space, a.ell, *objective, a.target, limits);
    if (!result.complete)
        err << "note: node budget exhausted after " << result.nodes << " nodes, frontier is partial\n";
    Json meta{{"objective", objective_name(*objective)}, {"complete", result.complete}, {"nodes", result.nodes}};
    if (a.target) meta["target"] = *a.target;
    if (c.format == Format::text) {
        out << objective_name(*objective) << " search, " << result.reports.size() << " code(s), " << result.nodes
            << " nodes" << (result.complete ? "" : ", partial") << '\n';
    }
    print_quantum_reports(out, c, result.reports, &meta);
    return kExitOk;
}

int cmd_compare(std::ostream& out, const Common& c, const std::string& ours_text,
                const std::vector<std::string>& refs_text) {
    const auto o = parse_triple(ours_text);
    const QuantumParams ours{o[0], static_cast<std::int64_t>(o[1]), o[2]};
    std::vector<QuantumParams> table;
    if (refs_text.empty()) {
        const auto builtin = reference_8ary_codes();
        table.assign(builtin.begin(), builtin.end());
    } else {
        for (const auto& s : refs_text) {
            const auto r = parse_triple(s);
            table.push_back({r[0], static_cast<std::int64_t>(r[1]), r[2]});
        }
    }
    std::vector<ReferenceComparison> rows;
    for (const auto& ref : table) {
        if (ref.distance == ours.distance) rows.push_back(compare_with_reference(ours, ref));
    }
    switch (c.format) {
        case Format::json: {
            Json arr = Json::array();
            for (const auto& r : rows) {
                arr.push_back({{"ours", format_params(r.ours)},
                               {"reference", format_params(r.reference)},
                               {"delta_k", r.delta_k},
                               {"delta_n", r.delta_n},
                               {"better", r.better}});
            }
            out << arr.dump(2) << '\n';
            break;
        }
        case Format::csv:
            out << "ours,reference,delta_k,delta_n,better\n";
            for (const auto& r : rows) {
                out << format_params(r.ours) << ',' << format_params(r.reference) << ',' << r.delta_k << ','
                    << r.delta_n << ',' << (r.better ? "yes" : "no") << '\n';
            }
            break;
        case Format::text:
            if (rows.empty()) out << "no reference code with d = " << ours.distance << '\n';
            for (const auto& r : rows) {
                out << format_params(r.ours) << " vs " << format_params(r.reference) << ": dk = " << std::showpos
                    << r.delta_k << ", dn = " << r.delta_n << std::noshowpos << (r.better ? ", better" : "") << '\n';
            }
            break;
    }
    return kExitOk;
}

struct VerifyArgs {
    bool skip_certify = false;
    std::string fixtures_path;
    bool dump = false;
};

int cmd_verify_fixtures(std::ostream& out, const Common& c, const VerifyArgs& a) {
    if (a.dump) {
        out << bundled_fixtures().dump(2) << '\n';
        return kExitOk;
    }
    Json fixtures;
    if (a.fixtures_path.empty()) {
        fixtures = bundled_fixtures();
    } else {
        std::ifstream file(a.fixtures_path);
        if (!file) throw PreconditionError("cannot read " + a.fixtures_path);
        try {
            fixtures = Json::parse(file);
        } catch (const Json::exception& ex) {
            out << "FAIL  " << a.fixtures_path << "  unparsable fixture file: " << ex.what() << '\n';
            return kExitFailure;
        }
    }
    FixtureRunOptions opts;
    opts.certify = !a.skip_certify;
    opts.enumeration = c.enumeration();
    opts.search_threads = c.threads;
    const auto results = run_fixtures(fixtures, opts);
    std::size_t failed = 0;
    for (const auto& r : results) failed += !r.pass;
    switch (c.format) {
        case Format::json: {
            Json arr = Json::array();
            for (const auto& r : results) {
                Json row{{"example", r.example},
                         {"check", r.check},
                         {"expected", r.expected},
                         {"computed", r.computed},
                         {"pass", r.pass}};
                if (!r.note.empty()) row["note"] = r.note;
                arr.push_back(std::move(row));
            }
            out << Json{{"passed", results.size() - failed}, {"failed", failed}, {"results", arr}}.dump(2) << '\n';
            break;
        }
        case Format::csv:
            out << "example,check,expected,computed,pass\n";
            for (const auto& r : results) {
                out << r.example << ",\"" << r.check << "\",\"" << r.expected << "\",\"" << r.computed << "\","
                    << (r.pass ? "PASS" : "FAIL") << '\n';
            }
            break;
        case Format::text:
            for (const auto& r : results) {
                out << (r.pass ? "PASS" : "FAIL") << "  " << std::left << std::setw(4) << r.example << "  "
                    << std::setw(34) << r.check << "  expected " << r.expected << "  computed " << r.computed;
                if (!r.note.empty()) out << "  [" << r.note << ']';
                out << '\n';
            }
            out << results.size() - failed << " passed, " << failed << " failed\n";
            break;
    }
    return failed ? kExitFailure : kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Trace-polynomial evaluation codes and the quantum codes built from them"};
    app.name("tracecode");
    app.require_subcommand(1);

    Common common;
    try {
        common.budget = default_budget();
    } catch (const Error& ex) {
        err << "error: " << ex.what() << '\n';
        return kExitUsage;
    }

    std::uint64_t cq = 0, cn = 0;
    auto* cosets = app.add_subcommand("cosets", "List the q-cyclotomic cosets mod n");
    cosets->add_option("--q", cq)->required();
    cosets->add_option("--n", cn)->required();
    add_common(cosets, common, false);

    ClassicalArgs ca;
    auto* classical = app.add_subcommand("classical", "Build C_r or C_S and report its parameters");
    classical->add_option("--q", ca.q)->required();
    classical->add_option("--n", ca.n)->required();
    auto* r_opt = classical->add_option("--r", ca.r, "Largest allowed polynomial degree");
    auto* f_opt = classical->add_option("--family", ca.family, "Coset representatives")->delimiter(',');
    r_opt->excludes(f_opt);
    classical->add_flag("--certify", ca.certify, "Compute the exact distance by enumeration");
    classical->add_option("--export-matrix", ca.export_path, "Write the generator matrix as JSON");
    add_common(classical, common, true);

    std::string matrix_path;
    bool matrix_certify = false;
    auto* check = app.add_subcommand("check-matrix", "Re-verify an exported generator matrix");
    check->add_option("--input", matrix_path)->required();
    check->add_flag("--certify", matrix_certify);
    add_common(check, common, true);

    DualArgs da;
    auto* dual = app.add_subcommand("dual", "Euclidean or hermitian dual of C_S");
    dual->add_option("--q", da.q)->required();
    dual->add_option("--n", da.n)->required();
    dual->add_option("--family", da.family)->delimiter(',')->required();
    dual->add_option("--ell", da.ell, "Use the hermitian product with q = ell^2");
    dual->add_flag("--skip-nullspace", da.skip_nullspace, "Skip the nullspace cross-check");
    add_common(dual, common, false);

    QuantumArgs qa;
    auto* quantum = app.add_subcommand("quantum", "Quantum code from a self-orthogonal family");
    quantum->add_option("--q", qa.q)->required();
    quantum->add_option("--ell", qa.ell)->required();
    quantum->add_option("--n", qa.n)->required();
    quantum->add_option("--family", qa.family)->delimiter(',')->required();
    quantum->add_flag("--certify", qa.certify, "Enumerate C_T when within budget");
    quantum->add_flag("--allow-non-orthogonal", qa.allow_non_orthogonal, "Print the report of a rejected family");
    add_common(quantum, common, true);

    SearchArgs sa;
    auto* srch = app.add_subcommand("search", "Search self-orthogonal families");
    srch->add_option("--q", sa.q)->required();
    srch->add_option("--ell", sa.ell)->required();
    srch->add_option("--n", sa.n)->required();
    srch->add_option("--objective", sa.objective)->check(CLI::IsMember({"pareto", "max_d_given_k", "max_k_given_d"}));
    srch->add_option("--target", sa.target, "Quantum dimension or distance to hold fixed");
    srch->add_option("--limit", sa.limit, "Node budget")->check(CLI::PositiveNumber);
    add_common(srch, common, true);

    std::string ours;
    std::vector<std::string> refs;
    auto* compare = app.add_subcommand("compare", "Compare N,K,D with reference codes of the same distance");
    compare->add_option("--ours", ours)->required();
    compare->add_option("--reference", refs, "N,K,D (repeatable); defaults to the bundled 8-ary table");
    add_common(compare, common, false);

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify-paper", "Check every bundled fixture");
    verify->add_flag("--skip-certify", va.skip_certify, "Bounds only, no exhaustive enumeration");
    verify->add_option("--fixtures", va.fixtures_path, "Fixture file to use instead of the bundled one");
    verify->add_flag("--dump-fixtures", va.dump, "Print the bundled fixtures and exit");
    add_common(verify, common, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*cosets) return cmd_cosets(out, common, cq, cn);
        if (*classical) {
            if (!ca.r && ca.family.empty()) throw PreconditionError("classical needs --r or --family");
            return cmd_classical(out, err, common, ca);
        }
        if (*check) return cmd_check_matrix(out, err, common, matrix_path, matrix_certify);
        if (*dual) return cmd_dual(out, common, da);
        if (*quantum) return cmd_quantum(out, err, common, qa);
        if (*srch) return cmd_search(out, err, common, sa);
        if (*compare) return cmd_compare(out, common, ours, refs);
        if (*verify) return cmd_verify_fixtures(out, common, va);
    } catch (const NotSelfOrthogonal& ex) {
        err << "error: " << ex.what() << '\n';
        return kExitFailure;
    } catch (const PreconditionError& ex) {
        err << "error: " << ex.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& ex) {
        err << "error: bad number: " << ex.what() << '\n';
        return kExitUsage;
    } catch (const Error& ex) {
        err << "error: " << ex.what() << '\n';
        return kExitFailure;
    }
    return kExitUsage;
}

}  // namespace tracecode
