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

#ifndef TRACECODE_FIXTURES_HPP
#define TRACECODE_FIXTURES_HPP

#include <string>
#include <string_view>
#include <vector>

#include "tracecode/gfla.hpp"
#include "tracecode/json_io.hpp"

namespace tracecode {

/// Published example values, keyed by section ("cosets", "classical",
/// "duality", "quantum", "reference") and then by example label.
std::string_view bundled_fixtures_text();
Json bundled_fixtures();

struct FixtureResult {
    std::string example;
    std::string check;
    std::string expected;
    std::string computed;
    bool pass = false;
    /// Set when a value passes but differs from the recorded expectation.
    std::string note;
};

struct FixtureRunOptions {
    bool certify = true;
    EnumerationOptions enumeration;
    unsigned search_threads = 1;
};

/// Runs every fixture. A malformed entry becomes a failed result naming the
/// entry rather than an exception.
std::vector<FixtureResult> run_fixtures(const Json& fixtures, const FixtureRunOptions& options = {});

/// One section only; a missing section is a single failed result.
std::vector<FixtureResult> run_fixture_section(const Json& fixtures, std::string_view section,
                                               const FixtureRunOptions& options = {});

}  // namespace tracecode

#endif
