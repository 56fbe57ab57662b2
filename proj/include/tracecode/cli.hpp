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

#ifndef TRACECODE_CLI_HPP
#define TRACECODE_CLI_HPP

#include <ostream>

namespace tracecode {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // verification or fixture failure
inline constexpr int kExitUsage = 2;

/// Entry point of the `tracecode` tool. The default enumeration budget is
/// read from TRACECODE_BUDGET when set.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tracecode

#endif
