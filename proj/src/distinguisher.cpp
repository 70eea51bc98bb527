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

#include "twistcert/distinguisher.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace twistcert {

namespace {

using i64 = long long;

struct Clause {
    std::string text;
    bool ok;
};

Clause cmp(const char* expr, i64 lhs, const char* op, i64 rhs) {
    bool ok = false;
    const std::string o(op);
    if (o == "==") ok = lhs == rhs;
    else if (o == ">=") ok = lhs >= rhs;
    else if (o == "<=") ok = lhs <= rhs;
    else if (o == "<") ok = lhs < rhs;
    else if (o == ">") ok = lhs > rhs;
    else if (o == "!=") ok = lhs != rhs;
    else throw std::logic_error("bad comparison");
    return {std::string(expr) + " (" + std::to_string(lhs) + o + std::to_string(rhs) + ")", ok};
}

ConditionFlag conjunction(std::initializer_list<Clause> clauses) {
    ConditionFlag flag{true, {}};
    for (const auto& c : clauses) {
        if (!flag.trace.empty()) flag.trace += ", ";
        flag.trace += c.text + (c.ok ? "" : " FAILS");
        flag.holds = flag.holds && c.ok;
    }
    return flag;
}

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > kSaturated / a) return kSaturated;
    return a * b;
}

std::size_t square_dim_of_dual(const LinearCode& code) { return schur_square(dual(code)).dimension(); }

Verdict certified(Certificate cert, std::string reason) {
    Verdict v;
    v.kind = VerdictKind::certified_non_grs;
    v.reason = std::move(reason);
    if (cert.kind == CertificateKind::dual_square_dim) v.square_dimension = cert.observed_dimension;
    v.certificate = std::move(cert);
    return v;
}

Verdict unknown(std::string reason) {
    Verdict v;
    v.reason = std::move(reason);
    return v;
}

}  // namespace

bool ConditionReport::any_dual_square() const {
    return std::any_of(dual_square.begin(), dual_square.end(), [](const ConditionFlag& f) { return f.holds; });
}

ConditionReport select_conditions(const TwistParams& params, bool extended) {
    const i64 n = static_cast<i64>(params.n);
    const i64 k = static_cast<i64>(params.k);
    const i64 t = static_cast<i64>(params.t);
    const i64 h = static_cast<i64>(params.h);
    const Clause lower = cmp("2k>=n", 2 * k, ">=", n);
    const Clause upper = cmp("k<=n-3", k, "<=", n - 3);

    ConditionReport r;
    r.dual_square[0] = conjunction({lower, upper, cmp("n==k+t", n, "==", k + t), cmp("2k>=n+2", 2 * k, ">=", n + 2),
                                    cmp("h>=3", h, ">=", 3), cmp("h<=k-3", h, "<=", k - 3)});
    r.dual_square[1] = conjunction({lower, upper, cmp("n==k+t+1", n, "==", k + t + 1),
                                    cmp("2k>=n+2", 2 * k, ">=", n + 2), cmp("h>=2", h, ">=", 2),
                                    cmp("h<=k-3", h, "<=", k - 3)});
    r.dual_square[2] = conjunction({lower, upper, cmp("n>=k+t+2", n, ">=", k + t + 2), cmp("t==1", t, "==", 1),
                                    cmp("h>=2", h, ">=", 2), cmp("h<=k-2", h, "<=", k - 2)});
    r.dual_square[3] = conjunction({lower, upper, cmp("n>=k+t+2", n, ">=", k + t + 2),
                                    cmp("2k>=n+1", 2 * k, ">=", n + 1), cmp("t==2", t, "==", 2),
                                    cmp("h>=1", h, ">=", 1), cmp("h<=k-3", h, "<=", k - 3)});
    r.dual_square[4] = conjunction({lower, upper, cmp("n>=k+t+2", n, ">=", k + t + 2), cmp("t>=3", t, ">=", 3),
                                    cmp("h!=k-t", h, "!=", k - t)});
    r.dual_square[5] = conjunction({lower, upper, cmp("n>=k+t+2", n, ">=", k + t + 2),
                                    cmp("2k>=n+1", 2 * k, ">=", n + 1), cmp("t>=3", t, ">=", 3),
                                    cmp("h==k-t", h, "==", k - t)});
    r.low_rate = conjunction({cmp("k>3", k, ">", 3), cmp("2k<n", 2 * k, "<", n)});
    if (extended) {
        r.low_rate_extended = conjunction({cmp("k>3", k, ">", 3), cmp("2k<n+1", 2 * k, "<", n + 1)});
        r.weight_one = conjunction({cmp("t>=2", t, ">=", 2), cmp("k>=3", k, ">=", 3), cmp("k<=n-2", k, "<=", n - 2),
                                    cmp("n>=k+t+1", n, ">=", k + t + 1), cmp("h>=1", h, ">=", 1)});
    } else {
        r.low_rate_extended = {false, "not an extended code"};
        r.weight_one = {false, "not an extended code"};
    }
    return r;
}

const char* to_string(CertificateKind kind) {
    switch (kind) {
        case CertificateKind::dual_square_dim: return "dual-square-dim";
        case CertificateKind::weight_one: return "weight-one";
        case CertificateKind::non_mds: return "non-mds";
        case CertificateKind::low_rate_flag: return "low-rate-flag";
        case CertificateKind::exhaustive_search: return "exhaustive-search";
    }
    return "?";
}

std::optional<CertificateKind> certificate_kind_from_string(const std::string& s) {
    for (auto k : {CertificateKind::dual_square_dim, CertificateKind::weight_one, CertificateKind::non_mds,
                   CertificateKind::low_rate_flag, CertificateKind::exhaustive_search}) {
        if (s == to_string(k)) return k;
    }
    return std::nullopt;
}

const char* to_string(VerdictKind kind) {
    switch (kind) {
        case VerdictKind::certified_non_grs: return "CertifiedNonGRS";
        case VerdictKind::grs_consistent: return "GRSConsistent";
        case VerdictKind::unknown: return "Unknown";
    }
    return "?";
}

const char* to_string(Family family) {
    switch (family) {
        case Family::grs: return "grs";
        case Family::tgrs: return "tgrs";
        case Family::etgrs: return "etgrs";
    }
    return "?";
}

std::optional<Family> family_from_string(const std::string& s) {
    for (auto f : {Family::grs, Family::tgrs, Family::etgrs}) {
        if (s == to_string(f)) return f;
    }
    return std::nullopt;
}

Verdict square_dim_certify(const LinearCode& code, const ConditionReport* conditions) {
    const std::size_t n = code.length();
    const std::size_t k = code.dimension();
    if (k >= n) return unknown("dual is the zero code");
    if (2 * k < n) {
        std::string reason = "rate below one half";
        if (conditions && conditions->low_rate.holds) reason += "; low-rate flag applies: " + conditions->low_rate.trace;
        else if (conditions && conditions->low_rate_extended.holds)
            reason += "; extended low-rate flag applies: " + conditions->low_rate_extended.trace;
        return unknown(reason);
    }
    const std::size_t observed = square_dim_of_dual(code);
    const std::size_t grs = 2 * (n - k) - 1;
    if (observed != grs) {
        Certificate cert;
        cert.kind = CertificateKind::dual_square_dim;
        cert.observed_dimension = observed;
        cert.grs_dimension = grs;
        return certified(std::move(cert), "dim of dual Schur square is " + std::to_string(observed) +
                                              ", every GRS code gives " + std::to_string(grs));
    }
    Verdict v;
    v.kind = VerdictKind::grs_consistent;
    v.square_dimension = observed;
    v.reason = "dim of dual Schur square matches the GRS value " + std::to_string(grs);
    return v;
}

Verdict weight_one_certify(const TwistParams& params, const EvaluationSet& points, std::span<const Felt> multipliers) {
    const Field& f = points.field();
    params.validate(f, true);
    const std::size_t n = params.n;
    const std::size_t k = params.k;
    if (params.t < 2 || k < 3 || k + 2 > n || n < k + params.t + 1) {
        throw std::invalid_argument("weight_one_certify: require t>=2, 3<=k<=n-2, n>=k+t+1");
    }
    if (2 * k < n + 1) {
        const ConditionReport cond = select_conditions(params, true);
        if (cond.low_rate_extended.holds) {
            Certificate cert;
            cert.kind = CertificateKind::low_rate_flag;
            cert.citation = "extended low rate: " + cond.low_rate_extended.trace;
            return certified(std::move(cert), "2k < n+1: weight-one argument needs 2k >= n+1; low-rate result applies");
        }
        return unknown("2k < n+1 and k <= 3: neither the weight-one argument nor the low-rate result applies");
    }

    const Matrix g = etgrs_generator(params, points, multipliers);
    std::vector<Vector> words = extended_dual_words(params, points, multipliers);
    for (std::size_t w = 0; w < words.size(); ++w) {
        for (std::size_t r = 0; r < g.rows(); ++r) {
            if (dot(f, words[w], g.row(r)) != 0) {
                return unknown("dual word c" + std::to_string(w + 1) + " fails against generator row " +
                               std::to_string(r));
            }
        }
    }
    const Vector square = hadamard(f, words[1], words[1]);
    const Vector cross = hadamard(f, words[0], words[2]);
    Vector c(square.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.sub(square[i], cross[i]);
    Vector expected(n + 1, 0);
    expected[n] = f.mul(params.eta, params.eta);
    if (c != expected) return unknown("c2*c2 - c1*c3 is not (0, ..., 0, eta^2)");

    const LinearCode code(g);
    if (!schur_square(dual(code)).contains(c)) return unknown("weight-one vector not in the dual Schur square");
    Certificate cert;
    cert.kind = CertificateKind::weight_one;
    cert.word = std::move(c);
    cert.dual_words = std::move(words);
    return certified(std::move(cert), "weight-one vector in the dual Schur square; a GRS code of this rate has " +
                                          std::string("dual-square distance ") + std::to_string(2 * k + 1 - n));
}

Verdict non_mds_certify(const LinearCode& code, std::uint64_t cap) {
    const DistanceResult d = min_distance_exhaustive(code, cap);
    if (!d.distance) return unknown("distance enumeration cap exceeded");
    const std::size_t singleton = code.length() - code.dimension() + 1;
    if (*d.distance < singleton) {
        Certificate cert;
        cert.kind = CertificateKind::non_mds;
        cert.word = d.witness;
        return certified(std::move(cert), "minimum distance " + std::to_string(*d.distance) + " < n-k+1 = " +
                                              std::to_string(singleton));
    }
    Verdict v;
    v.kind = VerdictKind::grs_consistent;
    v.reason = "MDS (d = n-k+1)";
    return v;
}

OracleResult exhaustive_grs_oracle(const LinearCode& code, std::uint64_t limit) {
    OracleResult out;
    const Field& f = code.field();
    const std::size_t n = code.length();
    const std::size_t k = code.dimension();
    const std::uint64_t q = f.order();
    std::uint64_t count = n <= q ? 1 : 0;
    for (std::size_t i = 0; i < n && count; ++i) count = sat_mul(count, q - i);
    for (std::size_t i = 0; i < n; ++i) count = sat_mul(count, q - 1);
    out.candidate_count = count;
    if (count > limit) return out;
    if (k == 0 || n > q) {
        out.is_grs = false;
        return out;
    }

    // powers[j][i] = alpha_j^i for the tuple under construction.
    std::vector<Vector> powers(n, Vector(k));
    Vector alpha(n);
    std::vector<bool> used(q, false);
    Vector v(n, 1);
    Vector row(n);
    std::vector<Felt> nonzero;
    for (Felt a = 1; a < q; ++a) nonzero.push_back(a);
    std::vector<std::size_t> vidx(n, 0);

    const auto matches = [&]() {
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < n; ++j) row[j] = f.mul(v[j], powers[j][i]);
            if (!code.contains(row)) return false;
        }
        return true;
    };
    const auto try_multipliers = [&]() {
        std::ranges::fill(vidx, 0);
        for (std::size_t j = 0; j < n; ++j) v[j] = 1;
        while (true) {
            ++out.visited;
            if (matches()) return true;
            std::size_t pos = n;
            bool advanced = false;
            while (pos > 1 && !advanced) {
                --pos;
                vidx[pos] = vidx[pos] + 1 == nonzero.size() ? 0 : vidx[pos] + 1;
                v[pos] = nonzero[vidx[pos]];
                advanced = vidx[pos] != 0;
            }
            if (!advanced) return false;
        }
    };
    const auto search = [&](auto&& self, std::size_t depth) -> bool {
        if (depth == n) return try_multipliers();
        for (Felt a = 0; a < q; ++a) {
            if (used[a]) continue;
            used[a] = true;
            alpha[depth] = a;
            Felt x = 1;
            for (std::size_t i = 0; i < k; ++i) {
                powers[depth][i] = x;
                x = f.mul(x, a);
            }
            if (self(self, depth + 1)) return true;
            used[a] = false;
        }
        return false;
    };
    const bool found = search(search, 0);
    out.is_grs = found;
    if (found) {
        out.alpha = alpha;
        out.multipliers = v;
    }
    return out;
}

bool verify_certificate(const LinearCode& code, const Certificate& cert, const TwistParams* params, bool extended,
                        std::uint64_t oracle_limit) {
    const Field& f = code.field();
    switch (cert.kind) {
        case CertificateKind::dual_square_dim: {
            const LinearCode measured = cert.punctured.empty() ? code : puncture(code, cert.punctured);
            const std::size_t n = measured.length();
            const std::size_t k = measured.dimension();
            if (k != code.dimension() || k >= n || 2 * k < n) return false;
            const std::size_t grs = 2 * (n - k) - 1;
            const std::size_t observed = square_dim_of_dual(measured);
            return observed == cert.observed_dimension && cert.grs_dimension == grs && observed != grs;
        }
        case CertificateKind::weight_one: {
            const std::size_t n = code.length();
            const std::size_t k = code.dimension();
            if (cert.word.size() != n || hamming_weight(cert.word) != 1) return false;
            if (k >= n || 2 * k < n) return false;
            if (!cert.dual_words.empty()) {
                if (cert.dual_words.size() != 3) return false;
                const LinearCode d = dual(code);
                for (const auto& w : cert.dual_words) {
                    if (w.size() != n || !d.contains(w)) return false;
                }
                const Vector sq = hadamard(f, cert.dual_words[1], cert.dual_words[1]);
                const Vector cross = hadamard(f, cert.dual_words[0], cert.dual_words[2]);
                for (std::size_t i = 0; i < n; ++i) {
                    if (f.sub(sq[i], cross[i]) != cert.word[i]) return false;
                }
            }
            return schur_square(dual(code)).contains(cert.word);
        }
        case CertificateKind::non_mds: {
            const std::size_t n = code.length();
            const std::size_t k = code.dimension();
            if (cert.word.size() != n) return false;
            const std::size_t w = hamming_weight(cert.word);
            return w > 0 && w < n - k + 1 && code.contains(cert.word);
        }
        case CertificateKind::low_rate_flag: {
            if (!params || params->k != code.dimension()) return false;
            if (code.length() != params->n + (extended ? 1 : 0)) return false;
            const ConditionReport cond = select_conditions(*params, extended);
            return cond.low_rate.holds || (extended && cond.low_rate_extended.holds);
        }
        case CertificateKind::exhaustive_search: {
            const OracleResult r = exhaustive_grs_oracle(code, oracle_limit);
            return r.is_grs.has_value() && !*r.is_grs;
        }
    }
    return false;
}

Matrix Instance::generator() const {
    switch (family) {
        case Family::grs: return grs_generator(points, k, multipliers);
        case Family::tgrs: return tgrs_generator(twist, points, multipliers);
        case Family::etgrs: return etgrs_generator(twist, points, multipliers);
    }
    throw std::logic_error("unknown family");
}

LinearCode Instance::code() const { return LinearCode(generator()); }

CascadeReport run_cascade(const Instance& instance, const CascadeOptions& options) {
    CascadeReport rep;
    const bool extended = instance.family == Family::etgrs;
    const LinearCode code = instance.code();
    const std::size_t n_total = code.length();
    const std::size_t k = code.dimension();
    std::optional<Verdict> found;
    bool grs_consistent = false;
    std::string consistent_reason;

    if (instance.family != Family::grs) rep.conditions = select_conditions(instance.twist, extended);
    const ConditionReport* cond = rep.conditions ? &*rep.conditions : nullptr;

    if (extended && cond->weight_one.holds && 2 * k >= instance.twist.n + 1) {
        Verdict w = weight_one_certify(instance.twist, instance.points, instance.multipliers);
        if (w.kind == VerdictKind::certified_non_grs) found = std::move(w);
    }

    if (k < n_total && 2 * k >= n_total) rep.grs_square_dimension = 2 * (n_total - k) - 1;
    Verdict sq = square_dim_certify(code, cond);
    rep.square_dimension = sq.square_dimension;
    if (sq.kind == VerdictKind::certified_non_grs && !found) found = sq;
    if (sq.kind == VerdictKind::grs_consistent) {
        grs_consistent = true;
        consistent_reason = sq.reason;
    }

    if (extended && !found) {
        const std::size_t last[] = {instance.twist.n};
        Verdict inner = square_dim_certify(puncture(code, last), nullptr);
        if (inner.kind == VerdictKind::certified_non_grs) {
            inner.certificate->punctured = {instance.twist.n};
            inner.reason = "punctured at the extra coordinate: " + inner.reason;
            found = std::move(inner);
        }
    }

    if (options.run_distance) {
        const DistanceResult dist = min_distance_exhaustive(code, options.distance_cap);
        rep.min_distance = dist.distance;
        const std::size_t singleton = n_total - k + 1;
        if (dist.distance && *dist.distance < singleton && !found) {
            Certificate cert;
            cert.kind = CertificateKind::non_mds;
            cert.word = dist.witness;
            found = certified(std::move(cert), "minimum distance " + std::to_string(*dist.distance) +
                                                   " < n-k+1 = " + std::to_string(singleton));
        }
    }

    if (options.run_oracle) {
        const OracleResult o = exhaustive_grs_oracle(code, options.oracle_limit);
        rep.oracle_is_grs = o.is_grs;
        if (o.is_grs && !*o.is_grs && !found) {
            Certificate cert;
            cert.kind = CertificateKind::exhaustive_search;
            found = certified(std::move(cert), "no GRS_k(alpha, v) equals the code (" +
                                                   std::to_string(o.visited) + " candidates)");
        }
    }

    if (!found && cond && (cond->low_rate.holds || cond->low_rate_extended.holds)) {
        Certificate cert;
        cert.kind = CertificateKind::low_rate_flag;
        cert.citation = cond->low_rate.holds ? "low rate: " + cond->low_rate.trace
                                             : "extended low rate: " + cond->low_rate_extended.trace;
        found = certified(std::move(cert), "parameters in the known low-rate non-GRS range");
    }

    if (found) {
        rep.verdict = std::move(*found);
        if (!rep.verdict.square_dimension) rep.verdict.square_dimension = rep.square_dimension;
    } else if (rep.oracle_is_grs && *rep.oracle_is_grs) {
        rep.verdict.kind = VerdictKind::grs_consistent;
        rep.verdict.square_dimension = rep.square_dimension;
        rep.verdict.reason = "exhaustive search found an equal GRS code";
    } else if (grs_consistent) {
        rep.verdict = sq;
        rep.verdict.reason = consistent_reason;
    } else {
        rep.verdict = unknown(sq.reason.empty() ? "no test applies" : sq.reason);
        rep.verdict.square_dimension = rep.square_dimension;
    }

    if (cond) {
        const bool proven = cond->any_dual_square() ||
                            (extended && cond->weight_one.holds && 2 * k >= instance.twist.n + 1);
        rep.completeness_violation = proven && rep.verdict.kind != VerdictKind::certified_non_grs;
    }
    return rep;
}

}  // namespace twistcert
