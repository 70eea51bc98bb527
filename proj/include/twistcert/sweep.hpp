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
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "twistcert/report.hpp"

namespace twistcert {

/// Uniform draw from [0, bound) by rejection, so sampled points do not depend
/// on the standard library's distribution implementation.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

/// Deterministic stream seed derived from a base seed and a list of labels.
std::uint64_t derive_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> labels);

/// Inclusive range; an unset bound means "as far as the inequalities allow".
/// lo > hi is an empty range.
struct Range {
    std::optional<std::size_t> lo;
    std::optional<std::size_t> hi;

    /// "a", "a..b", "a..", "..b" or "" (unbounded).
    static Range parse(const std::string& text);
    std::string to_string() const;
};

/// One way of choosing vectors for a given length:
///   first-n                 the points 0..n-1 (alpha only)
///   all-subsets-up-to:N     the first N n-subsets of GF(q) in lexicographic order (alpha only)
///   sample:N                N seeded random choices
///   ones                    all-ones (v only)
///   explicit:a,b,...        a fixed vector; lengths other than its size are skipped
struct Selection {
    enum class Mode { first_n, all_subsets, sample, ones, explicit_list };
    Mode mode = Mode::first_n;
    std::size_t count = 1;
    Vector values;

    static Selection parse(const std::string& text);
    std::string to_string() const;
};

/// Alternatives joined by '+', e.g. "first-n+sample:5".
std::vector<Selection> parse_selections(const std::string& text);

/// all: every nonzero eta; one: eta = 1; sample:N: N distinct random nonzero values.
struct EtaSelection {
    enum class Mode { all, one, sample };
    Mode mode = Mode::one;
    std::size_t count = 1;

    static EtaSelection parse(const std::string& text);
    std::string to_string() const;
};

/// Which parameter points to keep. `dual-square`: a TGRS tuple meeting a
/// dual-square condition. `weight-one`: an ETGRS tuple meeting the weight-one
/// hypothesis with 2k >= n+1. `eligible`: either.
enum class SweepFilter { all, dual_square, weight_one, eligible };
const char* to_string(SweepFilter f);
SweepFilter sweep_filter_from_string(const std::string& s);

struct SweepConfig {
    /// Field specs; an entry "a..b" expands to every prime power in [a, b].
    std::vector<std::string> fields;
    std::vector<Family> families{Family::tgrs};
    Range n, k, t, h;
    EtaSelection eta;
    std::vector<Selection> alpha{Selection{}};
    std::vector<Selection> multipliers{Selection{Selection::Mode::ones, 1, {}}};
    std::uint64_t distance_cap = kDefaultDistanceCap;
    std::uint64_t oracle_limit = 1'000'000;
    bool run_distance = true;
    bool run_oracle = true;
    SweepFilter filter = SweepFilter::all;
    std::uint64_t seed = 1;
    unsigned jobs = 1;
    /// Adds per-record wall-clock time; the report is then no longer reproducible byte for byte.
    bool timing = false;

    /// Throws std::invalid_argument on nonpositive caps or a field spec that
    /// does not parse.
    void validate() const;
    Json to_json() const;
    static SweepConfig from_json(const Json& j);
};

/// Field specs after range expansion, in increasing order of q.
std::vector<std::string> expand_fields(const std::vector<std::string>& fields);

/// One parameter point of a sweep, before the cascade runs.
struct SweepPoint {
    Instance instance;
    SelectionRules rules;
};

std::vector<SweepPoint> enumerate_points(const SweepConfig& config);

/// Recomputes a vector from its rule ("first-n", "subset:i", "sample:i",
/// "ones", "explicit"), as the sweep with `config` chose it.
Vector regenerate_selection(const SweepConfig& config, const Field& field, std::size_t n, const std::string& rule,
                            bool multipliers);

struct SweepResult {
    Json header;
    std::vector<Json> records;
    Json footer;
    std::size_t violations = 0;
    std::size_t errors = 0;
};

SweepResult run_sweep(const SweepConfig& config);

/// Header line, one line per record, footer line.
void write_report(std::ostream& out, const SweepResult& result);

struct RecordCheck {
    bool has_certificate = false;
    bool verified = false;
    std::string detail;
};

/// Rebuilds the instance of a report record and re-verifies its certificate.
/// Vectors recorded by digest are regenerated from `config` (the report
/// header's config). Records without a certificate are returned with
/// has_certificate = false.
RecordCheck verify_record(const Json& record, const SweepConfig* config = nullptr,
                          std::uint64_t oracle_limit = kDefaultOracleLimit);

}  // namespace twistcert
