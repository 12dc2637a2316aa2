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

#include <string>

#include <json.hpp>

#include "acham/model.hpp"

namespace acham {

using Json = nlohmann::json;

inline constexpr const char *kInstanceFormat = "acham-v1";

/// Validates an instance document and builds the Hamiltonian from it.
Hamiltonian ingest(const Json &doc, bool enforce_unit_norm = true);
Json to_json(const Hamiltonian &h);

Json term_to_json(const LocalTerm &t);
LocalTerm term_from_json(const Json &j);

/// Serializes with full round-trip precision unless ACHAM_OUTPUT_PRECISION
/// gives a number of significant digits.
std::string dump_json(const Json &doc);

Json read_json_file(const std::string &path);
void write_json_file(const std::string &path, const Json &doc);

}  // namespace acham
