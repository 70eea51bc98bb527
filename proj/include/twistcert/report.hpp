/*
   Copyright 2026 The twistcert Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstdint>
#include <span>
#include <string>

#include "json.hpp"
#include "twistcert/distinguisher.hpp"

namespace twistcert {

using Json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "0.1.0";
inline constexpr int kReportSchema = 1;
/// Vectors longer than this are recorded by digest only.
inline constexpr std::size_t kLiteralLimit = 32;

/// 64-bit FNV-1a over the little-endian encodings, as 16 hex digits.
std::string digest(std::span<const Felt> values);
std::string digest(const std::string& text);

Json matrix_json(const Matrix& m);
Json conditions_json(const ConditionReport& c);

Json certificate_json(const Certificate& cert);
/// Inverse of certificate_json. Throws std::invalid_argument on malformed input.
Certificate certificate_from_json(const Json& j);

Json verdict_json(const Verdict& v);

/// Where an instance's points and multipliers came from, e.g. "first-n",
/// "sample:3", "explicit". Echoed next to the vector (or its digest).
struct SelectionRules {
    std::string alpha = "explicit";
    std::string multipliers = "explicit";
};

/// Parameters plus every measurement of one cascade run. The instance part
/// is readable by instance_from_json whenever n <= kLiteralLimit.
Json record_json(const Instance& instance, const CascadeReport& report, const SelectionRules& rules = {});

/// The instance fields only (used by record_json).
Json instance_json(const Instance& instance, const SelectionRules& rules = {});

/// Rebuilds an instance from a record. `alpha` and `v` must be literal.
Instance instance_from_json(const Json& j);

/// Rebuilds the instance from `record` with the given vectors substituted
/// for those recorded by digest; checks the digests match.
Instance instance_from_json(const Json& j, const Vector& alpha, const Vector& multipliers);

}  // namespace twistcert
