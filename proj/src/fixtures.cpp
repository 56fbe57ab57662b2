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

#include "tracecode/fixtures.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <tuple>

#include "tracecode/errors.hpp"

namespace tracecode {

namespace {

// Exact distances under "exact" were obtained by exhaustive enumeration.
constexpr std::string_view kFixtures = R"json({
  "cosets": {
    "3.2": {"q": 4, "n": 51, "cosets": [
      [0], [1,4,13,16], [2,8,26,32], [3,12,39,48], [5,14,20,29], [6,24,27,45],
      [7,10,28,40], [9,15,36,42], [11,23,41,44], [17], [18,21,30,33],
      [19,25,43,49], [22,31,37,46], [34], [35,38,47,50]]},
    "3.3": {"q": 4, "n": 63, "cosets": [
      [0], [1,4,16], [2,8,32], [3,12,48], [5,17,20], [6,24,33], [7,28,49],
      [9,18,36], [10,34,40], [11,44,50], [13,19,52], [14,35,56], [15,51,60],
      [21], [22,25,37], [23,29,53], [26,38,41], [27,45,54], [30,39,57],
      [31,55,61], [47,59,62], [43,46,58], [42]]},
    "5.2": {"q": 4, "n": 21, "cosets": [
      [0], [1,4,16], [2,8,11], [3,6,12], [5,17,20], [7], [9,15,18],
      [10,13,19], [14]]}
  },
  "classical": {
    "3.2": {"q": 4, "n": 51, "codes": [
      {"r": 16, "length": 52, "k": 5, "bound": 36, "exact": 36},
      {"r": 17, "length": 52, "k": 6, "bound": 35, "exact": 35}]},
    "3.3": {"q": 4, "n": 63, "codes": [
      {"r": 16, "length": 64, "k": 4, "bound": 48, "exact": 48},
      {"r": 20, "length": 64, "k": 7, "bound": 44, "exact": 44},
      {"r": 21, "length": 64, "k": 8, "bound": 43, "exact": 43}]}
  },
  "duality": {
    "4.3": {"q": 4, "n": 51, "product": "euclidean", "S": [0, 1],
            "excluded": [[35,38,47,50]], "dims": [5, 47]},
    "4.5": {"q": 4, "n": 51, "product": "hermitian", "ell": 2, "S": [0, 1],
            "excluded": [[19,25,43,49]], "dims": [5, 47]},
    "5.6": {"q": 64, "n": 585, "product": "hermitian", "ell": 8, "S": [0, 8, 16],
            "excluded": [[457,583],[521,584]], "dims": [5, 581]}
  },
  "quantum": {
    "5.2": {"q": 4, "ell": 2, "n": 21,
            "families": [{"S": [0, 1, 2, 3], "image": [[0],[5,17,20],[9,15,18],[10,13,19]],
                          "params": [22, 2, 6], "exact": 6}],
            "search": [[2, 6]]},
    "5.3": {"q": 4, "ell": 2, "n": 51,
            "families": [{"S": [0, 1, 2, 6], "image": [[0],[3,12,39,48],[19,25,43,49],[35,38,47,50]],
                          "params": [52, 26, 6]}],
            "search": [[26, 6], [24, 7], [8, 10]]},
    "5.4": {"q": 4, "ell": 2, "n": 63,
            "families": [{"S": [0, 1, 2], "image": [[0],[31,55,61],[47,59,62]], "params": [64, 50, 4]},
                         {"S": [0, 1, 2, 6], "image": [[0],[15,51,60],[31,55,61],[47,59,62]],
                          "params": [64, 44, 6]}],
            "search": [[50, 4], [44, 6], [38, 7], [32, 8]]},
    "5.5": {"q": 16, "ell": 4, "n": 51,
            "families": [{"S": [0, 12, 8, 4], "image": [[0],[3,48],[19,49],[35,50]], "params": [52, 38, 5]}],
            "search": [[38, 5], [34, 6], [30, 7], [26, 8], [22, 9], [18, 10], [14, 12]]},
    "5.6": {"q": 64, "ell": 8, "n": 585,
            "families": [{"S": [0, 8, 16], "image": [[0],[457,583],[521,584]], "params": [586, 576, 4]}],
            "search": [[576, 4], [572, 5], [568, 6], [564, 7], [560, 8], [556, 9], [552, 10],
                       [548, 11], [544, 12], [540, 13], [536, 14], [532, 15]]}
  },
  "reference": {
    "5.6": {"table": [[589,553,4], [589,513,6], [627,561,5], [627,531,6], [627,501,7],
                      [629,557,6], [629,533,7], [629,521,8]],
            "ours": [[586,576,4], [586,572,5], [586,568,6], [586,564,7], [586,560,8]],
            "comparisons": [
              {"ours": [586,576,4], "reference": [589,553,4], "delta_k": 23, "delta_n": -3},
              {"ours": [586,568,6], "reference": [589,513,6], "delta_k": 55, "delta_n": -3},
              {"ours": [586,572,5], "reference": [627,561,5], "delta_k": 11, "delta_n": -41},
              {"ours": [586,568,6], "reference": [627,531,6], "delta_k": 37, "delta_n": -41},
              {"ours": [586,564,7], "reference": [627,501,7], "delta_k": 63, "delta_n": -41},
              {"ours": [586,568,6], "reference": [629,557,6], "delta_k": 11, "delta_n": -43},
              {"ours": [586,564,7], "reference": [629,533,7], "delta_k": 31, "delta_n": -43},
              {"ours": [586,560,8], "reference": [629,521,8], "delta_k": 39, "delta_n": -43}]}
  }
})json";

std::string sets_text(const std::vector<std::vector<std::uint64_t>>& sets) {
    std::ostringstream out;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        out << (i ? " " : "") << '{';
        for (std::size_t j = 0; j < sets[i].size(); ++j) out << (j ? "," : "") << sets[i][j];
        out << '}';
    }
    return out.str();
}

std::vector<std::vector<std::uint64_t>> sorted_sets(std::vector<std::vector<std::uint64_t>> sets) {
    for (auto& s : sets) std::sort(s.begin(), s.end());
    std::sort(sets.begin(), sets.end());
    return sets;
}

QuantumParams params_from(const Json& j) {
    return {j.at(0).get<std::uint64_t>(), j.at(1).get<std::int64_t>(), j.at(2).get<std::uint64_t>()};
}

class Runner {
 public:
    Runner(const FixtureRunOptions& options, std::vector<FixtureResult>& out) : options_(options), out_(out) {}

    void guarded(const std::string& example, const std::string& check, const std::function<void()>& body) {
        try {
            body();
        } catch (const std::exception& ex) {
            out_.push_back({example, check, "well-formed fixture", std::string("error: ") + ex.what(), false, ""});
        }
    }

    void add(const std::string& example, const std::string& check, std::string expected, std::string computed,
             bool pass, std::string note = "") {
        out_.push_back({example, check, std::move(expected), std::move(computed), pass, std::move(note)});
    }

    const CodeSpace& space(std::uint64_t q, std::uint64_t n) {
        auto key = std::make_pair(q, n);
        auto it = spaces_.find(key);
        if (it == spaces_.end()) it = spaces_.emplace(key, CodeSpace::create(q, n)).first;
        return it->second;
    }

    const SearchResult& frontier(std::uint64_t q, std::uint64_t ell, std::uint64_t n) {
        auto key = std::make_tuple(q, ell, n);
        auto it = searches_.find(key);
        if (it == searches_.end()) {
            SearchLimits limits;
            limits.threads = options_.search_threads;
            it = searches_.emplace(key, search(space(q, n), ell, Objective::pareto, std::nullopt, limits)).first;
        }
        return it->second;
    }

    const FixtureRunOptions& options() const { return options_; }

 private:
    const FixtureRunOptions& options_;
    std::vector<FixtureResult>& out_;
    std::map<std::pair<std::uint64_t, std::uint64_t>, CodeSpace> spaces_;
    std::map<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>, SearchResult> searches_;
};

void run_cosets(Runner& run, const std::string& label, const Json& f) {
    run.guarded(label, "cosets", [&] {
        const auto q = f.at("q").get<std::uint64_t>();
        const auto n = f.at("n").get<std::uint64_t>();
        const auto expected = sorted_sets(f.at("cosets").get<std::vector<std::vector<std::uint64_t>>>());
        const auto table = compute_cosets(q, n);
        std::vector<std::vector<std::uint64_t>> computed;
        for (const auto& c : table->cosets()) computed.push_back(c.elements);
        computed = sorted_sets(computed);
        run.add(label, "cosets q=" + std::to_string(q) + " n=" + std::to_string(n),
                std::to_string(expected.size()) + " cosets", std::to_string(computed.size()) + " cosets",
                computed == expected);
    });
}

void run_classical(Runner& run, const std::string& label, const Json& f) {
    const auto q = f.at("q").get<std::uint64_t>();
    const auto n = f.at("n").get<std::uint64_t>();
    for (const auto& code : f.at("codes")) {
        const std::string check = "C_r r=" + code.value("r", Json()).dump();
        run.guarded(label, check, [&] {
            const CodeSpace& space = run.space(q, n);
            const auto r = code.at("r").get<std::uint64_t>();
            const CosetFamily family = truncated_family(space.table_ptr(), r);
            const ClassicalParams params = classical_params(family);
            const GeneratorMatrix g = space.generator_matrix(family);
            const std::size_t k = rank(g.matrix);
            const auto want_n = code.at("length").get<std::uint64_t>();
            const auto want_k = code.at("k").get<std::size_t>();
            const auto want_d = code.at("bound").get<std::uint64_t>();
            std::ostringstream expected, computed;
            expected << '[' << want_n << ',' << want_k << ",>=" << want_d << ']';
            computed << '[' << params.length << ',' << k << ",>=" << params.distance_bound << ']';
            run.add(label, check, expected.str(), computed.str(),
                    params.length == want_n && k == want_k && params.dimension == k && params.distance_bound == want_d);
            if (!run.options().certify || !code.contains("exact")) return;
            const auto want_exact = code.at("exact").get<std::size_t>();
            const DistanceCertificate cert = min_distance_exhaustive(g.matrix, run.options().enumeration);
            const bool meets = cert.value >= want_d;
            std::string note;
            if (meets && cert.value != want_exact) {
                note =
                    "certified " + std::to_string(cert.value) + " differs from recorded " + std::to_string(want_exact);
            }
            run.add(label, check + " exact d", std::to_string(want_exact), std::to_string(cert.value), meets, note);
        });
    }
}

void run_duality(Runner& run, const std::string& label, const Json& f) {
    run.guarded(label, "dual family", [&] {
        const auto q = f.at("q").get<std::uint64_t>();
        const auto n = f.at("n").get<std::uint64_t>();
        const CodeSpace& space = run.space(q, n);
        const auto reps = f.at("S").get<std::vector<std::uint64_t>>();
        const CosetFamily family = space.family(reps);
        const std::string product = f.at("product").get<std::string>();
        DualityReport report = product == "hermitian" ? hermitian_dual(space, family, f.at("ell").get<std::uint64_t>())
                                                      : euclidean_dual(space, family);
        std::vector<std::uint64_t> excluded_reps;
        for (const auto& s : f.at("excluded")) excluded_reps.push_back(s.at(0).get<std::uint64_t>());
        const CosetFamily excluded = space.family(excluded_reps);
        const CosetFamily expected = family_difference(CosetFamily::all(space.table_ptr()), excluded);
        const bool sets_ok = sorted_sets(excluded.as_sets()) ==
                             sorted_sets(f.at("excluded").get<std::vector<std::vector<std::uint64_t>>>());
        const CosetFamily missing = family_difference(CosetFamily::all(space.table_ptr()), report.dual);
        run.add(label, product + " dual", "A - " + sets_text(excluded.as_sets()), "A - " + sets_text(missing.as_sets()),
                sets_ok && report.dual == expected);
        const auto dims = f.at("dims").get<std::vector<std::size_t>>();
        run.add(label, "dimensions", std::to_string(dims.at(0)) + "+" + std::to_string(dims.at(1)),
                std::to_string(report.dim_family) + "+" + std::to_string(report.dim_dual),
                report.dim_family == dims.at(0) && report.dim_dual == dims.at(1));
        const bool verified = report.gram_verified && report.nullspace_verified.value_or(false) &&
                              report.scaled_identity_verified.value_or(true);
        run.add(label, "gram and nullspace", "verified", verified ? "verified" : "failed", verified);
    });
}

void run_quantum(Runner& run, const std::string& label, const Json& f) {
    const auto q = f.at("q").get<std::uint64_t>();
    const auto ell = f.at("ell").get<std::uint64_t>();
    const auto n = f.at("n").get<std::uint64_t>();
    for (const auto& fam : f.at("families")) {
        const std::string check = "family " + fam.value("S", Json()).dump();
        run.guarded(label, check, [&] {
            const CodeSpace& space = run.space(q, n);
            const CosetFamily family = space.family(fam.at("S").get<std::vector<std::uint64_t>>());
            QuantumOptions qopts;
            qopts.certify = run.options().certify && fam.contains("exact");
            qopts.enumeration = run.options().enumeration;
            const QuantumCodeReport report = derive_quantum(space, family, ell, qopts);
            const QuantumParams want = params_from(fam.at("params"));
            const QuantumParams got{report.block_length, report.quantum_k, report.d_lower};
            run.add(label, check, format_params(want), format_params(got), got == want && report.self_orthogonal);
            const CosetFamily image = dual_family(scale_family(family, ell));
            const auto want_image = sorted_sets(fam.at("image").get<std::vector<std::vector<std::uint64_t>>>());
            run.add(label, check + " (ell S)*", sets_text(want_image), sets_text(sorted_sets(image.as_sets())),
                    sorted_sets(image.as_sets()) == want_image);
            if (qopts.certify) {
                const auto want_exact = fam.at("exact").get<std::size_t>();
                if (!report.distance_certificate) {
                    run.add(label, check + " d(C_T)", std::to_string(want_exact), "over budget", false);
                    return;
                }
                const std::size_t d = report.distance_certificate->value;
                run.add(label, check + " d(C_T)", std::to_string(want_exact), std::to_string(d), d >= want.distance,
                        d != want_exact ? "certified value differs from recorded" : "");
            }
        });
    }
    if (!f.contains("search")) return;
    run.guarded(label, "search", [&] {
        const SearchResult& result = run.frontier(q, ell, n);
        for (const auto& point : f.at("search")) {
            const auto k = point.at(0).get<std::int64_t>();
            const auto d = point.at(1).get<std::uint64_t>();
            const QuantumParams want{n + 1, k, d};
            const QuantumCodeReport* hit = nullptr;
            for (const auto& r : result.reports) {
                if (r.quantum_k >= k && r.d_lower >= d && r.self_orthogonal) {
                    hit = &r;
                    break;
                }
            }
            std::string computed = "not found";
            if (hit) computed = format_params({hit->block_length, hit->quantum_k, hit->d_lower});
            if (!result.complete) computed += " (partial frontier)";
            run.add(label, "search " + format_params(want), format_params(want), computed, hit != nullptr);
        }
    });
}

void run_reference(Runner& run, const std::string& label, const Json& f) {
    run.guarded(label, "reference comparison", [&] {
        std::vector<QuantumParams> table;
        for (const auto& t : f.at("table")) table.push_back(params_from(t));
        for (const auto& c : f.at("comparisons")) {
            const QuantumParams ours = params_from(c.at("ours"));
            const QuantumParams ref = params_from(c.at("reference"));
            if (std::find(table.begin(), table.end(), ref) == table.end()) {
                throw PreconditionError("comparison against a triple missing from the table");
            }
            const ReferenceComparison cmp = compare_with_reference(ours, ref);
            const auto dk = c.at("delta_k").get<std::int64_t>();
            const auto dn = c.at("delta_n").get<std::int64_t>();
            std::ostringstream expected, computed;
            expected << "dk=" << dk << " dn=" << dn << " better";
            computed << "dk=" << cmp.delta_k << " dn=" << cmp.delta_n << (cmp.better ? " better" : " not better");
            run.add(label, format_params(ours) + " vs " + format_params(ref), expected.str(), computed.str(),
                    cmp.delta_k == dk && cmp.delta_n == dn && cmp.better);
        }
    });
}

}  // namespace

std::string_view bundled_fixtures_text() { return kFixtures; }

Json bundled_fixtures() { return Json::parse(kFixtures); }

std::vector<FixtureResult> run_fixture_section(const Json& fixtures, std::string_view section,
                                               const FixtureRunOptions& options) {
    using Handler = void (*)(Runner&, const std::string&, const Json&);
    static const std::pair<std::string_view, Handler> kSections[] = {{"cosets", run_cosets},
                                                                     {"classical", run_classical},
                                                                     {"duality", run_duality},
                                                                     {"quantum", run_quantum},
                                                                     {"reference", run_reference}};
    const auto it = std::find_if(std::begin(kSections), std::end(kSections),
                                 [&](const auto& entry) { return entry.first == section; });
    if (it == std::end(kSections)) throw PreconditionError("unknown fixture section " + std::string(section));
    std::vector<FixtureResult> out;
    const std::string name(section);
    if (!fixtures.contains(name)) {
        out.push_back({name, "section", "present", "missing", false, ""});
        return out;
    }
    Runner run(options, out);
    for (const auto& [label, body] : fixtures.at(name).items()) {
        const std::string& example = label;
        run.guarded(example, name, [&] { it->second(run, example, body); });
    }
    return out;
}

std::vector<FixtureResult> run_fixtures(const Json& fixtures, const FixtureRunOptions& options) {
    std::vector<FixtureResult> out;
    for (const char* name : {"cosets", "classical", "duality", "quantum", "reference"}) {
        auto part = run_fixture_section(fixtures, name, options);
        out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return out;
}

}  // namespace tracecode
