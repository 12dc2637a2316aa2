// Copyright 2026 The acham Authors
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

namespace acham {

enum class ErrorKind {
    Dimension,
    Hermiticity,
    SizeCap,
    IndexRange,
    Schema,
    NormViolation,
    Regime,
    DegeneratePivot,
    GapPrecondition,
    GapCollapse,
    Contract,
    Invariant,
};

const char *error_kind_name(ErrorKind kind);

/// All library failures are reported through this exception. The kind drives
/// the CLI exit-code mapping.
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string &message)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {
    }

    ErrorKind kind() const noexcept {
        return kind_;
    }

   private:
    ErrorKind kind_;
};

}  // namespace acham
