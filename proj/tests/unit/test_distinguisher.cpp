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

#include <numeric>
#include <random>

#include "doctest.h"
#include "support/oracles.hpp"

using namespace twistcert;

namespace {

/// The six dual-square conditions, each with the shared n/2 <= k <= n-3.
std::array<bool, 6> expected_conditions(long n, long k, long t, long h) {
    const bool shared = 2 * k >= n && k <= n - 3;
    std::array<bool, 6> c{};
    c[0] = n == k + t && 2 * k >= n + 2 && 3 <= h && h <= k - 3;
    c[1] = n == k + t + 1 && 2 * k >= n + 2 && 2 <= h && h <= k - 3;
    c[2] = n >= k + t + 2 && 2 * k >= n && t == 1 && 2 <= h && h <= k - 2;
    c[3] = n >= k + t + 2 && 2 * k >= n + 1 && t == 2 && 1 <= h && h <= k - 3;
    c[4] = n >= k + t + 2 && 2 * k >= n && t >= 3 && h != k - t;
    c[5] = n >= k + t + 2 && 2 * k >= n + 1 && t >= 3 && h == k - t;
    for (auto& b : c) b = b && shared;
    return c;
}

Instance make_instance(Family family, const FieldPtr& f, Vector alpha, Vector v, TwistParams p) {
    const std::size_t n = alpha.size();
    p.n = n;
    Instance inst{family, EvaluationSet(f, std::move(alpha)), std::move(v), p.k, p};
    return inst;
}

LinearCode gf5_twisted() {
    const auto f = make_field("5");
    return tgrs_code(TwistParams{5, 2, 2, 1, 1}, EvaluationSet::first_n(f, 5), Vector(5, 1));
}

}  // namespace

TEST_SUITE("distinguisher") {
    TEST_CASE("condition examples") {
        const ConditionReport a = select_conditions(TwistParams{12, 7, 5, 3, 1}, false);
        CHECK(a.dual_square[0].holds);
        CHECK(a.dual_square[0].trace.find("FAILS") == std::string::npos);
        const ConditionReport b = select_conditions(TwistParams{12, 6, 3, 0, 1}, false);
        CHECK(b.dual_square[4].holds);
        CHECK(b.any_dual_square());
        const ConditionReport c = select_conditions(TwistParams{12, 4, 2, 1, 1}, false);
        CHECK(c.low_rate.holds);
        CHECK_FALSE(c.any_dual_square());
        CHECK_FALSE(c.low_rate_extended.holds);
        CHECK(select_conditions(TwistParams{12, 4, 2, 1, 1}, true).low_rate_extended.holds);
    }

    TEST_CASE("conditions match the inequalities on every small tuple") {
        for (long n = 3; n <= 20; ++n)
            for (long k = 1; k < n; ++k)
                for (long t = 1; k - 1 + t < n; ++t)
                    for (long h = 0; h < k; ++h) {
                        const TwistParams p{std::size_t(n), std::size_t(k), std::size_t(t), std::size_t(h), 1};
                        const ConditionReport r = select_conditions(p, true);
                        const auto expect = expected_conditions(n, k, t, h);
                        for (int i = 0; i < 6; ++i) CHECK(r.dual_square[i].holds == expect[i]);
                        CHECK(r.low_rate.holds == (3 < k && 2 * k < n));
                        CHECK(r.low_rate_extended.holds == (3 < k && 2 * k < n + 1));
                        CHECK(r.weight_one.holds == (t >= 2 && 3 <= k && k <= n - 2 && n >= k + t + 1 && h >= 1));
                        CHECK_FALSE(select_conditions(p, false).low_rate_extended.holds);
                    }
    }

    TEST_CASE("square dimension certifier examples") {
        const auto f13 = make_field("13");
        const EvaluationSet twelve = EvaluationSet::first_n(f13, 12);
        const Verdict grs = square_dim_certify(grs_code(twelve, 7));
        CHECK(grs.kind == VerdictKind::grs_consistent);
        CHECK(grs.square_dimension == 9);

        const TwistParams p{12, 6, 1, 2, 1};
        const Verdict tw = square_dim_certify(tgrs_code(p, twelve, Vector(12, 1)));
        REQUIRE(tw.kind == VerdictKind::certified_non_grs);
        CHECK(tw.certificate->kind == CertificateKind::dual_square_dim);
        CHECK(tw.certificate->observed_dimension >= 12);
        CHECK(tw.certificate->grs_dimension == 11);

        CHECK(square_dim_certify(LinearCode::full_space(f13, 5)).kind == VerdictKind::unknown);

        const TwistParams low{12, 4, 2, 1, 1};
        const ConditionReport cond = select_conditions(low, false);
        const Verdict lr = square_dim_certify(tgrs_code(low, twelve, Vector(12, 1)), &cond);
        CHECK(lr.kind == VerdictKind::unknown);
        CHECK(lr.reason.find("low-rate") != std::string::npos);
    }

    TEST_CASE("weight-one certifier examples") {
        const auto f11 = make_field("11");
        const EvaluationSet nine = EvaluationSet::first_n(f11, 9);
        const Vector ones(9, 1);
        const Verdict v2 = weight_one_certify(TwistParams{9, 5, 2, 2, 2}, nine, ones);
        REQUIRE(v2.kind == VerdictKind::certified_non_grs);
        REQUIRE(v2.certificate->kind == CertificateKind::weight_one);
        Vector expect(10, 0);
        expect[9] = 4;
        CHECK(v2.certificate->word == expect);
        CHECK(v2.certificate->dual_words.size() == 3);

        const Verdict v1 = weight_one_certify(TwistParams{9, 5, 2, 2, 1}, nine, ones);
        REQUIRE(v1.certificate);
        CHECK(v1.certificate->word.back() == 1);

        CHECK_THROWS_AS(weight_one_certify(TwistParams{9, 5, 1, 2, 1}, nine, ones), std::invalid_argument);
        CHECK_THROWS_AS(weight_one_certify(TwistParams{9, 5, 2, 0, 1}, nine, ones), std::invalid_argument);
        CHECK_THROWS_AS(weight_one_certify(TwistParams{9, 2, 2, 1, 1}, nine, ones), std::invalid_argument);

        const auto f13 = make_field("13");
        const Verdict lr = weight_one_certify(TwistParams{12, 5, 2, 1, 1}, EvaluationSet::first_n(f13, 12), Vector(12, 1));
        REQUIRE(lr.kind == VerdictKind::certified_non_grs);
        CHECK(lr.certificate->kind == CertificateKind::low_rate_flag);
        const Verdict none = weight_one_certify(TwistParams{7, 3, 2, 1, 1}, EvaluationSet::first_n(f13, 7), Vector(7, 1));
        CHECK(none.kind == VerdictKind::unknown);
    }

    TEST_CASE("the weight-one vector is c2*c2 - c1*c3; the opposite difference ends in -eta^2") {
        std::mt19937_64 rng(40);
        for (const char* spec : {"3^2", "11", "13"}) {
            const auto f = make_field(spec);
            const std::uint32_t q = f->order();
            for (int trial = 0; trial < 20; ++trial) {
                const std::size_t n = 6 + rng() % (q - 5);
                const std::size_t k = (n + 2) / 2 + rng() % 2;
                if (k + 3 > n) continue;
                const std::size_t t = 2 + rng() % (n - k - 2);
                const TwistParams p{n, k, t, 1 + rng() % (k - 1), static_cast<Felt>(1 + rng() % (q - 1))};
                const EvaluationSet es(f, oracle::random_subset(rng, q, n));
                const Vector v = oracle::random_nonzero(rng, q, n);
                const auto w = extended_dual_words(p, es, v);
                const Vector plus = [&] {
                    Vector out(n + 1);
                    for (std::size_t i = 0; i <= n; ++i) out[i] = f->sub(f->mul(w[1][i], w[1][i]), f->mul(w[0][i], w[2][i]));
                    return out;
                }();
                Vector expect(n + 1, 0);
                expect[n] = f->mul(p.eta, p.eta);
                CHECK(plus == expect);
                const Vector minus = scale(*f, f->neg(1), plus);
                CHECK(minus.back() == f->neg(expect.back()));
                const Verdict verdict = weight_one_certify(p, es, v);
                REQUIRE(verdict.certificate);
                CHECK(verdict.certificate->word == plus);
            }
        }
    }

    TEST_CASE("non-MDS certifier") {
        const Verdict v = non_mds_certify(gf5_twisted());
        REQUIRE(v.kind == VerdictKind::certified_non_grs);
        CHECK(v.certificate->kind == CertificateKind::non_mds);
        CHECK(hamming_weight(v.certificate->word) == 2);
        CHECK(gf5_twisted().contains(v.certificate->word));

        const auto f7 = make_field("7");
        CHECK(non_mds_certify(grs_code(EvaluationSet::first_n(f7, 6), 3)).kind == VerdictKind::grs_consistent);
        CHECK(non_mds_certify(grs_code(EvaluationSet::first_n(f7, 6), 3), 10).kind == VerdictKind::unknown);
    }

    TEST_CASE("oracle examples") {
        const auto f5 = make_field("5");
        const EvaluationSet four(f5, {0, 1, 2, 3});
        const LinearCode grs = grs_code(four, 2);
        const OracleResult self = exhaustive_grs_oracle(grs);
        REQUIRE(self.is_grs.has_value());
        CHECK(*self.is_grs);
        CHECK(grs_code(EvaluationSet(f5, self.alpha), 2, self.multipliers) == grs);

        const OracleResult tw = exhaustive_grs_oracle(gf5_twisted());
        REQUIRE(tw.is_grs.has_value());
        CHECK_FALSE(*tw.is_grs);
        CHECK(tw.candidate_count == 120 * 1 * 1024);

        std::mt19937_64 rng(41);
        for (int trial = 0; trial < 5; ++trial) {
            MonomialMap phi;
            phi.perm = {0, 1, 2, 3};
            std::shuffle(phi.perm.begin(), phi.perm.end(), rng);
            phi.scale = oracle::random_nonzero(rng, 5, 4);
            const OracleResult r = exhaustive_grs_oracle(apply_monomial_map(grs, phi));
            CHECK(r.is_grs == std::optional<bool>(true));
        }
        CHECK_FALSE(exhaustive_grs_oracle(grs, 100).is_grs.has_value());
    }

    TEST_CASE("certificates verify and tampering is detected") {
        const LinearCode tw = gf5_twisted();
        const Verdict nm = non_mds_certify(tw);
        CHECK(verify_certificate(tw, *nm.certificate));
        Certificate bad = *nm.certificate;
        bad.word[0] = (bad.word[0] + 1) % 5;
        CHECK_FALSE(verify_certificate(tw, bad));

        const auto f13 = make_field("13");
        const EvaluationSet twelve = EvaluationSet::first_n(f13, 12);
        const TwistParams p{12, 6, 1, 2, 1};
        const LinearCode c = tgrs_code(p, twelve, Vector(12, 1));
        const Certificate sq = *square_dim_certify(c).certificate;
        CHECK(verify_certificate(c, sq));
        Certificate off = sq;
        off.observed_dimension += 1;
        CHECK_FALSE(verify_certificate(c, off));
        CHECK_FALSE(verify_certificate(grs_code(twelve, 6), sq));

        const auto f11 = make_field("11");
        const EvaluationSet nine = EvaluationSet::first_n(f11, 9);
        const TwistParams e{9, 5, 2, 2, 2};
        const LinearCode ext = etgrs_code(e, nine, Vector(9, 1));
        const Certificate w1 = *weight_one_certify(e, nine, Vector(9, 1)).certificate;
        CHECK(verify_certificate(ext, w1, &e, true));
        Certificate moved = w1;
        std::swap(moved.word[0], moved.word[9]);
        CHECK_FALSE(verify_certificate(ext, moved, &e, true));

        const TwistParams low{12, 5, 2, 1, 1};
        const Certificate lr = *weight_one_certify(low, twelve, Vector(12, 1)).certificate;
        const LinearCode lowc = etgrs_code(low, twelve, Vector(12, 1));
        CHECK(verify_certificate(lowc, lr, &low, true));
        CHECK_FALSE(verify_certificate(lowc, lr));
    }

    TEST_CASE("no certifier fires on a code the oracle finds GRS") {
        std::mt19937_64 rng(42);
        const auto f = make_field("5");
        for (int trial = 0; trial < 60; ++trial) {
            const std::size_t n = 4 + rng() % 2, k = 2 + rng() % 2;
            TwistParams p{n, k, 1 + rng() % (n - k), rng() % k, static_cast<Felt>(1 + rng() % 4)};
            if (p.k - 1 + p.t >= n) continue;
            const EvaluationSet es(f, oracle::random_subset(rng, 5, n));
            const Vector v = oracle::random_nonzero(rng, 5, n);
            for (const LinearCode& c : {grs_code(es, k, v), tgrs_code(p, es, v)}) {
                const OracleResult r = exhaustive_grs_oracle(c);
                REQUIRE(r.is_grs.has_value());
                if (!*r.is_grs) continue;
                CHECK(square_dim_certify(c).kind != VerdictKind::certified_non_grs);
                CHECK(non_mds_certify(c).kind != VerdictKind::certified_non_grs);
            }
        }
    }

    TEST_CASE("weighted power sums used by the dual words") {
        std::mt19937_64 rng(43);
        for (const char* spec : {"7", "3^2", "11"}) {
            const auto f = make_field(spec);
            const oracle::SlowField s = oracle::slow(*f);
            const std::uint32_t q = f->order();
            for (std::size_t n = 5; n <= q; ++n) {
                const EvaluationSet es(f, oracle::random_subset(rng, q, n));
                const Vector u = oracle::u_vector(s, es.points());
                Felt sum_alpha = 0;
                for (Felt a : es.points()) sum_alpha = s.add(sum_alpha, a);
                for (std::size_t k = 3; k + 3 <= n; ++k)
                    for (std::size_t t = 2; n >= k + t + 1; ++t) {
                        std::vector<std::size_t> degrees(k);
                        std::iota(degrees.begin(), degrees.end(), 0);
                        degrees.push_back(k - 1 + t);
                        for (std::size_t s_exp = n - k - t - 1; s_exp <= n - k - t + 1; ++s_exp)
                            for (std::size_t l : degrees) {
                                Felt sum = 0;
                                for (std::size_t j = 0; j < n; ++j) sum = s.add(sum, s.mul(u[j], s.pow(es[j], s_exp + l)));
                                Felt expect = 0;
                                if (s_exp == n - k - t && l == k - 1 + t) expect = 1;
                                if (s_exp == n - k - t + 1 && l == k - 1 + t) expect = sum_alpha;
                                CHECK(sum == expect);
                            }
                    }
            }
        }
    }

    TEST_CASE("square certifier verdict is a monomial invariant") {
        std::mt19937_64 rng(44);
        const auto f = make_field("11");
        for (int trial = 0; trial < 30; ++trial) {
            const std::size_t n = 6 + rng() % 5;
            const std::size_t k = (n + 1) / 2 + rng() % ((n - 1) / 2 - 1);
            const TwistParams p{n, k, 1 + rng() % (n - k), rng() % k, static_cast<Felt>(1 + rng() % 10)};
            if (p.k - 1 + p.t >= n) continue;
            const EvaluationSet es(f, oracle::random_subset(rng, 11, n));
            const LinearCode c = tgrs_code(p, es, oracle::random_nonzero(rng, 11, n));
            MonomialMap phi;
            phi.perm.resize(n);
            std::iota(phi.perm.begin(), phi.perm.end(), 0);
            std::shuffle(phi.perm.begin(), phi.perm.end(), rng);
            phi.scale = oracle::random_nonzero(rng, 11, n);
            const Verdict a = square_dim_certify(c), b = square_dim_certify(apply_monomial_map(c, phi));
            CHECK(a.kind == b.kind);
            CHECK(a.square_dimension == b.square_dimension);
        }
    }

    TEST_CASE("cascade") {
        const auto f5 = make_field("5");
        const CascadeReport r =
            run_cascade(make_instance(Family::tgrs, f5, {0, 1, 2, 3, 4}, Vector(5, 1), TwistParams{5, 2, 2, 1, 1}));
        CHECK(r.verdict.kind == VerdictKind::certified_non_grs);
        CHECK(r.min_distance == 2);
        CHECK(r.oracle_is_grs == std::optional<bool>(false));
        CHECK_FALSE(r.completeness_violation);

        const auto f11 = make_field("11");
        const CascadeReport w = run_cascade(make_instance(Family::etgrs, f11, {0, 1, 2, 3, 4, 5, 6, 7, 8}, Vector(9, 1),
                                                          TwistParams{9, 5, 2, 2, 2}));
        REQUIRE(w.verdict.certificate);
        CHECK(w.verdict.certificate->kind == CertificateKind::weight_one);

        const auto f13 = make_field("13");
        Vector twelve(12);
        std::iota(twelve.begin(), twelve.end(), 0);
        TwistParams gp;
        gp.k = 7;
        const CascadeReport g = run_cascade(make_instance(Family::grs, f13, twelve, Vector(12, 1), gp));
        CHECK(g.verdict.kind == VerdictKind::grs_consistent);
        CHECK(g.square_dimension == 9);
        CHECK(g.grs_square_dimension == 9);

        CascadeOptions quick;
        quick.run_distance = false;
        quick.run_oracle = false;
        const CascadeReport d = run_cascade(make_instance(Family::tgrs, f13, twelve, Vector(12, 1), TwistParams{12, 6, 1, 2, 1}), quick);
        REQUIRE(d.verdict.certificate);
        CHECK(d.verdict.certificate->kind == CertificateKind::dual_square_dim);
        CHECK_FALSE(d.min_distance.has_value());
    }

    TEST_CASE("a dual-square condition tuple with n = k+3 keeps the GRS square dimension") {
        const auto f8 = make_field("2^3");
        const EvaluationSet all = EvaluationSet::first_n(f8, 8);
        const TwistParams p{8, 5, 1, 3, 1};
        CHECK(select_conditions(p, false).dual_square[2].holds);
        const LinearCode c = tgrs_code(p, all, Vector(8, 1));
        const Verdict sq = square_dim_certify(c);
        CHECK(sq.kind == VerdictKind::grs_consistent);
        CHECK(sq.square_dimension == 5);
        const CascadeReport r = run_cascade(make_instance(Family::tgrs, f8, all.points(), Vector(8, 1), p));
        REQUIRE(r.verdict.certificate);
        CHECK(r.verdict.certificate->kind == CertificateKind::non_mds);
        CHECK_FALSE(r.completeness_violation);
        CascadeOptions quick;
        quick.run_distance = false;
        quick.run_oracle = false;
        CHECK(run_cascade(make_instance(Family::tgrs, f8, all.points(), Vector(8, 1), p), quick).completeness_violation);
    }

    TEST_CASE("a twisted code meeting a dual-square condition can be GRS") {
        const auto f11 = make_field("11");
        const TwistParams p{8, 5, 2, 2, 2};
        CHECK(select_conditions(p, false).dual_square[1].holds);
        const LinearCode c = tgrs_code(p, EvaluationSet(f11, {2, 3, 4, 5, 6, 7, 8, 9}), Vector(8, 1));
        const Vector v{4, 7, 5, 7, 8, 1, 10, 1};
        CHECK(c == grs_code(EvaluationSet(f11, {0, 1, 4, 8, 9, 3, 7, 5}), 5, v));
        const Verdict sq = square_dim_certify(c);
        CHECK(sq.kind == VerdictKind::grs_consistent);
        CHECK(sq.square_dimension == 5);
    }

    TEST_CASE("name round trips") {
        for (auto k : {CertificateKind::dual_square_dim, CertificateKind::weight_one, CertificateKind::non_mds,
                       CertificateKind::low_rate_flag, CertificateKind::exhaustive_search})
            CHECK(certificate_kind_from_string(to_string(k)) == k);
        for (auto fam : {Family::grs, Family::tgrs, Family::etgrs}) CHECK(family_from_string(to_string(fam)) == fam);
        CHECK_FALSE(family_from_string("rs").has_value());
        CHECK_FALSE(certificate_kind_from_string("none").has_value());
    }
}
