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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "twistcert/twisted.hpp"

namespace twistcert {

struct ConditionFlag {
    bool holds = false;
    std::string trace;  // the evaluated inequalities, e.g. "2k>=n+2 (14>=14)"
};

/// Applicability of the non-GRS results to one parameter tuple.
///
/// `dual_square` lists the six degree-pattern conditions under which the
/// Schur square of the TGRS dual has dimension at least 2(n-k); each entry
/// includes the shared hypothesis n/2 <= k <= n-3. The remaining flags are
/// the low-rate results (TGRS: 3 < k < n/2; extended: 3 < k < (n+1)/2) and
/// the hypothesis of the weight-one argument for the extended code
/// (t >= 2, 3 <= k <= n-2, n >= k+t+1).
struct ConditionReport {
    std::array<ConditionFlag, 6> dual_square;
    ConditionFlag low_rate;
    ConditionFlag low_rate_extended;
    ConditionFlag weight_one;

    bool any_dual_square() const;
};

/// Pure inequality evaluation; `extended` gates the extended-only flags.
ConditionReport select_conditions(const TwistParams& params, bool extended);

enum class CertificateKind { dual_square_dim, weight_one, non_mds, low_rate_flag, exhaustive_search };
const char* to_string(CertificateKind kind);
std::optional<CertificateKind> certificate_kind_from_string(const std::string& s);

/// Checkable evidence that a code is not GRS.
struct Certificate {
    CertificateKind kind = CertificateKind::dual_square_dim;
    /// dual_square_dim: dim of the Schur square of the dual, its GRS value
    /// 2(N-k)-1, and the positions punctured before measuring (if any).
    std::size_t observed_dimension = 0;
    std::size_t grs_dimension = 0;
    std::vector<std::size_t> punctured;
    /// weight_one: the weight-one vector; non_mds: a low-weight codeword.
    Vector word;
    /// weight_one: the three dual codewords it was built from.
    std::vector<Vector> dual_words;
    /// low_rate_flag: the inequality that places the code in the low-rate range.
    std::string citation;
};

enum class VerdictKind { certified_non_grs, grs_consistent, unknown };
const char* to_string(VerdictKind kind);

/// certified_non_grs carries a certificate; grs_consistent only says every
/// test that ran matched the GRS prediction.
struct Verdict {
    VerdictKind kind = VerdictKind::unknown;
    std::optional<Certificate> certificate;
    std::optional<std::size_t> square_dimension;
    std::string reason;
};

/// Compares dim((C^perp)^2) with the GRS value 2(n-k)-1 for n/2 <= k < n.
/// Outside that range returns unknown, mentioning the low-rate flag when
/// `conditions` says it applies.
Verdict square_dim_certify(const LinearCode& code, const ConditionReport* conditions = nullptr);

/// Builds c1, c2, c3 in the dual of the extended code, checks them by inner
/// products and forms c2*c2 - c1*c3 = (0, ..., 0, eta^2). Throws
/// std::invalid_argument unless t >= 2, 3 <= k <= n-2, n >= k+t+1, h > 0.
/// For 2k < n+1 the verdict falls back to the extended low-rate flag.
Verdict weight_one_certify(const TwistParams& params, const EvaluationSet& points, std::span<const Felt> multipliers);

/// Exhaustive minimum distance; below n-k+1 certifies with a witness.
Verdict non_mds_certify(const LinearCode& code, std::uint64_t cap = kDefaultDistanceCap);

struct OracleResult {
    std::optional<bool> is_grs;  // empty: candidate count above the limit
    Vector alpha;                // a matching GRS_k(alpha, v) when is_grs
    Vector multipliers;
    std::uint64_t candidate_count = 0;  // n! C(q,n) (q-1)^n, saturating
    std::uint64_t visited = 0;
};

inline constexpr std::uint64_t kDefaultOracleLimit = 20'000'000;

/// Decides whether `code` equals some GRS_k(alpha, v) by trying every ordered
/// tuple of distinct points and every v with v_1 = 1.
OracleResult exhaustive_grs_oracle(const LinearCode& code, std::uint64_t limit = kDefaultOracleLimit);

/// Independent re-check of a certificate against the code it claims.
/// low_rate_flag needs the twist parameters; `extended` says whether the code
/// carries the extra coordinate.
bool verify_certificate(const LinearCode& code, const Certificate& cert, const TwistParams* params = nullptr,
                        bool extended = false, std::uint64_t oracle_limit = kDefaultOracleLimit);

enum class Family { grs, tgrs, etgrs };
const char* to_string(Family family);
std::optional<Family> family_from_string(const std::string& s);

/// One concrete code: a family, points, multipliers and its parameters.
struct Instance {
    Family family = Family::grs;
    EvaluationSet points;
    Vector multipliers;
    std::size_t k = 1;
    TwistParams twist;  // ignored for grs; twist.n == points.size()

    std::size_t length() const { return points.size() + (family == Family::etgrs ? 1 : 0); }
    Matrix generator() const;
    LinearCode code() const;
};

struct CascadeOptions {
    std::uint64_t distance_cap = kDefaultDistanceCap;
    std::uint64_t oracle_limit = 1'000'000;
    bool run_distance = true;
    bool run_oracle = true;
};

struct CascadeReport {
    std::optional<ConditionReport> conditions;
    std::optional<std::size_t> square_dimension;      // of the code's own dual
    std::optional<std::size_t> grs_square_dimension;  // 2(N-k)-1 when defined
    std::optional<std::size_t> min_distance;
    std::optional<bool> oracle_is_grs;
    Verdict verdict;
    /// True when the parameters fall in a proven non-GRS range (a dual-square
    /// condition, or the weight-one hypothesis with 2k >= n+1 for extended
    /// codes) but nothing certified the instance.
    bool completeness_violation = false;
};

/// Runs conditions, weight-one, dual-square (then on the punctured code for
/// extended instances), non-MDS, the oracle when the instance is tiny, and
/// finally the low-rate flag. The first certificate found is the verdict;
/// every measurement that ran is reported.
CascadeReport run_cascade(const Instance& instance, const CascadeOptions& options = {});

}  // namespace twistcert
