// Copyright 2026 The telepsim Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace telepsim {

/// Malformed or out-of-range input (bad encodings, length mismatches, ...).
/// CLI exit code 1.
struct InvalidInputError : std::runtime_error {
    explicit InvalidInputError(const std::string &msg) : std::runtime_error(msg) {}
};

/// An oracle broke its contract, e.g. answered outside the support of the
/// output distribution it claims to simulate. CLI exit code 2.
struct ContractViolationError : std::runtime_error {
    explicit ContractViolationError(const std::string &msg) : std::runtime_error(msg) {}
};

/// A promise-problem input violated its promise and the violation was
/// detected. CLI exit code 2.
struct PromiseViolationError : ContractViolationError {
    explicit PromiseViolationError(const std::string &msg) : ContractViolationError(msg) {}
};

/// A randomized learner ran out of query budget before finishing.
/// CLI exit code 3.
struct BudgetExhaustedError : std::runtime_error {
    explicit BudgetExhaustedError(const std::string &msg) : std::runtime_error(msg) {}
};

}  // namespace telepsim
