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

#include <sstream>

#include "doctest.h"
#include "support/oracles.hpp"

using namespace twistcert;

namespace {

SweepConfig small_config() {
    SweepConfig c;
    c.fields = {"5", "7"};
    c.families = {Family::grs, Family::tgrs, Family::etgrs};
    c.n = Range::parse("4..6");
    c.eta = EtaSelection::parse("sample:2");
    c.alpha = parse_selections("first-n+sample:2");
    c.multipliers = parse_selections("ones+sample:1");
    c.oracle_limit = 200'000;
    c.seed = 17;
    return c;
}

std::string render(const SweepResult& r) {
    std::ostringstream out;
    write_report(out, r);
    return out.str();
}

}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("digests are 64-bit FNV-1a") {
        CHECK(digest(std::string()) == "cbf29ce484222325");
        CHECK(digest(std::string("a")) == "af63dc4c8601ec8c");
        const Vector v{1, 258};
        CHECK(digest(v) == digest(std::string("\x01\x00\x00\x00\x02\x01\x00\x00", 8)));
        CHECK(digest(Vector{1, 2}) != digest(Vector{2, 1}));
    }

    TEST_CASE("ranges") {
        CHECK(Range::parse("").to_string() == "..");
        const Range one = Range::parse("7");
        CHECK(one.lo == 7u);
        CHECK(one.hi == 7u);
        CHECK(one.to_string() == "7");
        const Range both = Range::parse("3..9");
        CHECK(both.lo == 3u);
        CHECK(both.hi == 9u);
        CHECK_FALSE(Range::parse("3..").hi.has_value());
        CHECK_FALSE(Range::parse("..9").lo.has_value());
        CHECK(Range::parse("..9").to_string() == "..9");
        CHECK_THROWS_AS(Range::parse("a..b"), std::invalid_argument);
        CHECK_THROWS_AS(Range::parse("-1"), std::invalid_argument);
    }

    TEST_CASE("selections") {
        const auto s = parse_selections("first-n+all-subsets-up-to:4+sample:3+explicit:1,2,3");
        REQUIRE(s.size() == 4);
        CHECK(s[0].mode == Selection::Mode::first_n);
        CHECK(s[1].mode == Selection::Mode::all_subsets);
        CHECK(s[1].count == 4);
        CHECK(s[2].mode == Selection::Mode::sample);
        CHECK(s[3].values == Vector{1, 2, 3});
        for (const auto& x : s) CHECK(Selection::parse(x.to_string()).to_string() == x.to_string());
        CHECK(Selection::parse("ones").mode == Selection::Mode::ones);
        CHECK_THROWS_AS(Selection::parse("random"), std::invalid_argument);
        CHECK_THROWS_AS(Selection::parse("sample:"), std::invalid_argument);

        CHECK(EtaSelection::parse("all").mode == EtaSelection::Mode::all);
        CHECK(EtaSelection::parse("sample:3").count == 3);
        CHECK(EtaSelection::parse("one").to_string() == "one");
        CHECK_THROWS_AS(EtaSelection::parse("sample:0"), std::invalid_argument);
        CHECK_THROWS_AS(EtaSelection::parse("two"), std::invalid_argument);

        CHECK(sweep_filter_from_string("dual-square") == SweepFilter::dual_square);
        CHECK(std::string(to_string(SweepFilter::eligible)) == "eligible");
        CHECK_THROWS_AS(sweep_filter_from_string("none"), std::invalid_argument);
    }

    TEST_CASE("field list expansion") {
        CHECK(expand_fields({"5..13"}) == std::vector<std::string>{"5", "7", "2^3", "3^2", "11", "13"});
        CHECK(expand_fields({"11", "2..4", "3"}) == std::vector<std::string>{"2", "3", "2^2", "11"});
        CHECK(expand_fields({"2^2:1,1,1"}) == std::vector<std::string>{"2^2:1,1,1"});
        CHECK_THROWS_AS(expand_fields({"5.."}), std::invalid_argument);
    }

    TEST_CASE("config validation and round trip") {
        SweepConfig c = small_config();
        CHECK_NOTHROW(c.validate());
        const SweepConfig back = SweepConfig::from_json(c.to_json());
        CHECK(back.to_json() == c.to_json());
        CHECK_FALSE(c.to_json().contains("jobs"));

        SweepConfig bad = c;
        bad.distance_cap = 0;
        CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
        bad = c;
        bad.alpha = parse_selections("ones");
        CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
        bad = c;
        bad.fields = {"6"};
        CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    }

    TEST_CASE("certificate and record round trips") {
        const auto f11 = make_field("11");
        const TwistParams p{9, 5, 2, 2, 2};
        const Instance inst{Family::etgrs, EvaluationSet::first_n(f11, 9), Vector(9, 1), 5, p};
        const CascadeReport rep = run_cascade(inst);
        REQUIRE(rep.verdict.certificate);
        const Json cj = certificate_json(*rep.verdict.certificate);
        CHECK(certificate_json(certificate_from_json(cj)) == cj);
        CHECK_THROWS_AS(certificate_from_json(Json{{"kind", "bogus"}}), std::invalid_argument);

        const Json rec = record_json(inst, rep, SelectionRules{"first-n", "ones"});
        CHECK(rec["verdict"]["kind"] == "CertifiedNonGRS");
        CHECK(rec["verdict"]["certificate_digest"] == digest(rec["verdict"]["certificate"].dump()));
        CHECK(rec["alpha_rule"] == "first-n");
        const Instance back = instance_from_json(rec);
        CHECK(back.family == Family::etgrs);
        CHECK(back.points.points() == inst.points.points());
        CHECK(back.twist == inst.twist);
        CHECK(back.code() == inst.code());
        const RecordCheck check = verify_record(rec);
        CHECK(check.has_certificate);
        CHECK(check.verified);

        Json tampered = rec;
        tampered["verdict"]["certificate"]["word"][9] = 5;
        CHECK_FALSE(verify_record(tampered).verified);
    }

    TEST_CASE("sweep output does not depend on the job count") {
        SweepConfig c = small_config();
        const SweepResult one = run_sweep(c);
        c.jobs = 4;
        const SweepResult four = run_sweep(c);
        CHECK(render(one) == render(four));
        CHECK(one.header["schema"] == 1);
        CHECK(one.header["seed"] == 17);
        CHECK(one.violations == 0);
        CHECK(one.errors == 0);
        CHECK(one.footer["summary"]["records"] == one.records.size());
        for (const auto& rec : one.records) {
            const RecordCheck chk = verify_record(rec, &c);
            if (chk.has_certificate) CHECK_MESSAGE(chk.verified, chk.detail);
        }
        c.seed = 18;
        CHECK(render(run_sweep(c)) != render(one));
    }

    TEST_CASE("records are sorted") {
        const SweepResult r = run_sweep(small_config());
        REQUIRE(r.records.size() > 1);
        for (std::size_t i = 1; i < r.records.size(); ++i) {
            const auto& a = r.records[i - 1];
            const auto& b = r.records[i];
            CHECK(a["q"].get<int>() <= b["q"].get<int>());
            if (a["q"] == b["q"]) CHECK(a["n"].get<int>() <= b["n"].get<int>());
        }
    }

    TEST_CASE("empty range gives a summary only") {
        SweepConfig c = small_config();
        c.n = Range::parse("9..4");
        const SweepResult r = run_sweep(c);
        CHECK(r.records.empty());
        CHECK(r.footer["summary"]["records"] == 0);
        const std::string text = render(r);
        CHECK(std::count(text.begin(), text.end(), '\n') == 2);
    }

    TEST_CASE("GRS-only sweep is GRS-consistent or undecided by rate") {
        SweepConfig c;
        c.fields = {"5..9"};
        c.families = {Family::grs};
        c.alpha = parse_selections("first-n+sample:2");
        c.multipliers = parse_selections("ones+sample:2");
        c.oracle_limit = 10;
        const SweepResult r = run_sweep(c);
        REQUIRE_FALSE(r.records.empty());
        for (const auto& rec : r.records) {
            const std::size_t n = rec["n"], k = rec["k"];
            CHECK(rec["verdict"]["kind"] != "CertifiedNonGRS");
            if (2 * k >= n) CHECK(rec["verdict"]["kind"] == "GRSConsistent");
        }
    }

    TEST_CASE("sampled vectors regenerate from their rule") {
        SweepConfig c = small_config();
        const auto f7 = make_field("7");
        for (const auto& rec : run_sweep(c).records) {
            if (rec["field"] != "7") continue;
            const Vector alpha = rec["alpha"].get<Vector>();
            const Vector v = rec["v"].get<Vector>();
            CHECK(regenerate_selection(c, *f7, alpha.size(), rec["alpha_rule"], false) == alpha);
            CHECK(regenerate_selection(c, *f7, v.size(), rec["v_rule"], true) == v);
        }
        CHECK_THROWS_AS(regenerate_selection(c, *f7, 4, "lucky", false), std::invalid_argument);
    }

    TEST_CASE("long instances are recorded by digest and still verify") {
        SweepConfig c;
        c.fields = {"37"};
        c.families = {Family::tgrs};
        c.n = Range::parse("33");
        c.k = Range::parse("20");
        c.t = Range::parse("1");
        c.h = Range::parse("3");
        c.alpha = parse_selections("sample:1");
        c.run_distance = false;
        c.run_oracle = false;
        const SweepResult r = run_sweep(c);
        REQUIRE(r.records.size() == 1);
        const Json& rec = r.records[0];
        CHECK(rec["alpha"].is_null());
        CHECK(rec["alpha_digest"].is_string());
        CHECK(rec["alpha_rule"] == "sample:0");
        const RecordCheck chk = verify_record(rec, &c);
        REQUIRE(chk.has_certificate);
        CHECK(chk.verified);
        const RecordCheck no_config = verify_record(rec);
        CHECK_FALSE(no_config.verified);
        CHECK(no_config.detail.find("no config") != std::string::npos);
    }

    TEST_CASE("a bad explicit vector becomes an error record") {
        SweepConfig c;
        c.fields = {"7"};
        c.families = {Family::grs};
        c.n = Range::parse("4");
        c.k = Range::parse("2");
        c.multipliers = parse_selections("explicit:1,0,1,1");
        const SweepResult r = run_sweep(c);
        REQUIRE(r.records.size() == 1);
        CHECK(r.records[0].contains("error"));
        CHECK(r.errors == 1);
    }
}
