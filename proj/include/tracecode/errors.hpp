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

#ifndef TRACECODE_ERRORS_HPP
#define TRACECODE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tracecode {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
    using std::runtime_error::runtime_error;
};

/// Caller supplied arguments that violate an operation's precondition.
class PreconditionError : public Error {
 public:
    using Error::Error;
};

/// An internal cross-check disagreed. Mathematically this cannot happen, so it
/// always indicates a defect in the arithmetic or the combinatorics.
class VerificationError : public Error {
 public:
    using Error::Error;
};

/// An enumeration would exceed its configured budget.
class BudgetExceeded : public Error {
 public:
    using Error::Error;
};

}  // namespace tracecode

#endif
