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

// twistcert command-line front end.
//
// Exit codes: 0 success, 2 a completeness violation (or a certificate that
// fails to verify), 1 any operational error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "twistcert/sweep.hpp"

namespace tc = twistcert;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitViolation = 2;

struct InstanceArgs {
    std::string family;
    std::string field;
    std::vector<tc::Felt> alpha;
    std::vector<tc::Felt> v;
    std::optional<std::size_t> n;
    std::size_t k = 0;
    std::size_t t = 1;
    std::size_t h = 0;
    tc::Felt eta = 1;
    bool extended = false;
};

void add_instance_options(CLI::App* sub, InstanceArgs& a) {
    sub->add_option("family", a.family, "Code family")->required()->check(CLI::IsMember({"grs", "tgrs", "etgrs"}));
    sub->add_option("--field", a.field, "Field: p, p^m or p^m:c_m,...,c_0")->required();
    sub->add_option("--alpha", a.alpha, "Evaluation points (default: 0..n-1)")->delimiter(',');
    sub->add_option("--v", a.v, "Column multipliers (default: all ones)")->delimiter(',');
    sub->add_option("--n", a.n, "Number of evaluation points");
    sub->add_option("--k", a.k, "Dimension")->required();
    sub->add_option("--t", a.t, "Twist")->capture_default_str();
    sub->add_option("--h", a.h, "Hook")->capture_default_str();
    sub->add_option("--eta", a.eta, "Twist coefficient")->capture_default_str();
    sub->add_flag("--extended", a.extended, "Append the extra coordinate (tgrs becomes etgrs)");
}

tc::Instance build_instance(const InstanceArgs& a) {
    tc::FieldPtr field = tc::make_field(a.field);
    tc::Family family = *tc::family_from_string(a.family);
    if (a.extended) {
        if (family == tc::Family::grs) throw std::invalid_argument("--extended applies to twisted families only");
        family = tc::Family::etgrs;
    }
    tc::Vector alpha = a.alpha;
    if (alpha.empty()) {
        if (!a.n) throw std::invalid_argument("give --alpha or --n");
        if (*a.n > field->order()) throw std::invalid_argument("n <= q violated (n=" + std::to_string(*a.n) + ")");
        for (std::size_t i = 0; i < *a.n; ++i) alpha.push_back(static_cast<tc::Felt>(i));
    } else if (a.n && *a.n != alpha.size()) {
        throw std::invalid_argument("--n disagrees with the number of --alpha points");
    }
    const std::size_t n = alpha.size();
    tc::Vector v = a.v.empty() ? tc::Vector(n, 1) : a.v;
    if (v.size() != n) throw std::invalid_argument("--v needs one multiplier per point");
    tc::Instance inst{family, tc::EvaluationSet(field, std::move(alpha)), std::move(v), a.k, {}};
    if (family != tc::Family::grs) {
        inst.twist = tc::TwistParams{n, a.k, a.t, a.h, a.eta};
        inst.twist.validate(*field, family == tc::Family::etgrs);
    }
    return inst;
}

tc::SelectionRules explicit_rules(const InstanceArgs& a) {
    return {a.alpha.empty() ? "first-n" : "explicit", a.v.empty() ? "ones" : "explicit"};
}

/// Writes to --out when given, else stdout.
class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty() && path != "-") {
            file_.open(path);
            if (!file_) throw std::runtime_error("cannot open '" + path + "' for writing");
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

void print_matrix_text(std::ostream& os, const tc::Matrix& m) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c);
        os << '\n';
    }
}

tc::Matrix parity_matrix(const tc::Instance& inst) {
    if (inst.family == tc::Family::tgrs) return tc::tgrs_parity_check(inst.twist, inst.points, inst.multipliers);
    return tc::dual(inst.code()).generator();
}

int run_construct(const InstanceArgs& a, const std::string& format, bool parity, const std::string& out) {
    const tc::Instance inst = build_instance(a);
    const tc::Matrix g = inst.generator();
    Output o(out);
    if (format == "text") {
        print_matrix_text(o.stream(), g);
        if (parity) {
            o.stream() << '\n';
            print_matrix_text(o.stream(), parity_matrix(inst));
        }
        return kExitOk;
    }
    tc::Json j = tc::instance_json(inst, explicit_rules(a));
    j["generator"] = tc::matrix_json(g);
    if (parity) j["parity_check"] = tc::matrix_json(parity_matrix(inst));
    o.stream() << j.dump() << '\n';
    return kExitOk;
}

int run_dual(const InstanceArgs& a, const std::string& out) {
    const tc::Instance inst = build_instance(a);
    const tc::LinearCode d = tc::dual(inst.code());
    tc::Json j{{"length", d.length()}, {"dimension", d.dimension()}, {"generator", tc::matrix_json(d.generator())}};
    Output(out).stream() << j.dump() << '\n';
    return kExitOk;
}

int run_schur(const InstanceArgs& a, bool of_dual, const std::string& out) {
    const tc::Instance inst = build_instance(a);
    const tc::LinearCode base = of_dual ? tc::dual(inst.code()) : inst.code();
    const tc::LinearCode sq = tc::schur_square(base);
    tc::Json j{{"of", of_dual ? "dual" : "code"},
               {"length", sq.length()},
               {"dimension", sq.dimension()},
               {"generator", tc::matrix_json(sq.generator())}};
    Output(out).stream() << j.dump() << '\n';
    return kExitOk;
}

int run_mindist(const InstanceArgs& a, std::uint64_t cap, const std::string& out) {
    const tc::Instance inst = build_instance(a);
    const tc::LinearCode code = inst.code();
    const tc::DistanceResult d = tc::min_distance_exhaustive(code, cap);
    tc::Json j{{"length", code.length()},
               {"dimension", code.dimension()},
               {"singleton", code.length() - code.dimension() + 1},
               {"distance", d.distance ? tc::Json(*d.distance) : tc::Json(nullptr)},
               {"witness", d.distance ? tc::Json(d.witness) : tc::Json(nullptr)},
               {"enumerated", d.enumerated}};
    Output(out).stream() << j.dump() << '\n';
    return kExitOk;
}

int run_oracle(const InstanceArgs& a, std::uint64_t limit, const std::string& out) {
    const tc::Instance inst = build_instance(a);
    const tc::OracleResult r = tc::exhaustive_grs_oracle(inst.code(), limit);
    tc::Json j{{"is_grs", r.is_grs ? tc::Json(*r.is_grs) : tc::Json(nullptr)},
               {"alpha", r.is_grs && *r.is_grs ? tc::Json(r.alpha) : tc::Json(nullptr)},
               {"v", r.is_grs && *r.is_grs ? tc::Json(r.multipliers) : tc::Json(nullptr)},
               {"candidate_count", r.candidate_count},
               {"visited", r.visited}};
    Output(out).stream() << j.dump() << '\n';
    return kExitOk;
}

int run_certify(const InstanceArgs& a, std::uint64_t cap, std::uint64_t limit, const std::string& out) {
    const tc::Instance inst = build_instance(a);
    tc::CascadeOptions opts;
    opts.distance_cap = cap;
    opts.oracle_limit = limit;
    const tc::CascadeReport rep = tc::run_cascade(inst, opts);
    Output(out).stream() << tc::record_json(inst, rep, explicit_rules(a)).dump() << '\n';
    return rep.completeness_violation ? kExitViolation : kExitOk;
}

struct SweepArgs {
    std::string config_path;
    std::vector<std::string> fields;
    std::vector<std::string> families;
    std::string n, k, t, h, eta, alpha, v, filter;
    std::uint64_t cap = 0;
    std::uint64_t oracle_limit = 0;
    std::uint64_t seed = 0;
    unsigned jobs = 0;
    bool no_distance = false;
    bool no_oracle = false;
    bool timing = false;
    std::string out;
};

int run_sweep(const SweepArgs& a, const CLI::App& sub) {
    tc::SweepConfig cfg;
    if (!a.config_path.empty()) {
        std::ifstream in(a.config_path);
        if (!in) throw std::runtime_error("cannot read config '" + a.config_path + "'");
        cfg = tc::SweepConfig::from_json(tc::Json::parse(in));
    }
    const auto given = [&](const char* name) { return sub.count(name) > 0; };
    if (given("--field")) cfg.fields = a.fields;
    if (given("--family")) {
        cfg.families.clear();
        for (const auto& f : a.families) cfg.families.push_back(*tc::family_from_string(f));
    }
    if (given("--n")) cfg.n = tc::Range::parse(a.n);
    if (given("--k")) cfg.k = tc::Range::parse(a.k);
    if (given("--t")) cfg.t = tc::Range::parse(a.t);
    if (given("--h")) cfg.h = tc::Range::parse(a.h);
    if (given("--eta")) cfg.eta = tc::EtaSelection::parse(a.eta);
    if (given("--alpha")) cfg.alpha = tc::parse_selections(a.alpha);
    if (given("--v")) cfg.multipliers = tc::parse_selections(a.v);
    if (given("--filter")) cfg.filter = tc::sweep_filter_from_string(a.filter);
    if (given("--cap")) cfg.distance_cap = a.cap;
    if (given("--oracle-limit")) cfg.oracle_limit = a.oracle_limit;
    if (given("--seed")) cfg.seed = a.seed;
    if (given("--jobs")) cfg.jobs = a.jobs;
    if (a.no_distance) cfg.run_distance = false;
    if (a.no_oracle) cfg.run_oracle = false;
    if (a.timing) cfg.timing = true;

    const tc::SweepResult result = tc::run_sweep(cfg);
    Output o(a.out);
    tc::write_report(o.stream(), result);
    if (result.violations > 0) {
        std::cerr << "twistcert: " << result.violations << " completeness violation(s)\n";
        return kExitViolation;
    }
    return kExitOk;
}

int run_verify(const std::string& input, std::uint64_t limit, const std::string& out) {
    std::ifstream file;
    if (input != "-") {
        file.open(input);
        if (!file) throw std::runtime_error("cannot read '" + input + "'");
    }
    std::istream& in = input == "-" ? std::cin : file;
    Output o(out);
    std::optional<tc::SweepConfig> config;
    std::size_t index = 0, verified = 0, failed = 0, skipped = 0;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const tc::Json j = tc::Json::parse(line);
        if (j.contains("schema")) {
            if (j.contains("config")) config = tc::SweepConfig::from_json(j.at("config"));
            continue;
        }
        if (j.contains("summary")) continue;
        const tc::RecordCheck c = tc::verify_record(j, config ? &*config : nullptr, limit);
        std::string status = "skipped";
        if (!c.has_certificate) {
            ++skipped;
        } else if (c.verified) {
            status = "verified";
            ++verified;
        } else {
            status = "failed";
            ++failed;
        }
        o.stream() << tc::Json{{"record", index}, {"status", status}, {"detail", c.detail}}.dump() << '\n';
        ++index;
    }
    o.stream() << tc::Json{{"summary", {{"verified", verified}, {"failed", failed}, {"skipped", skipped}}}}.dump()
               << '\n';
    return failed > 0 ? kExitViolation : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact non-GRS certification for twisted Reed-Solomon codes"};
    app.set_help_flag("--help", "Print this help message and exit");
    app.set_version_flag("--version", tc::kVersion);
    app.require_subcommand(1);

    InstanceArgs ia;
    std::string out;
    std::uint64_t cap = tc::kDefaultDistanceCap;
    std::uint64_t oracle_limit = tc::kDefaultOracleLimit;

    std::string format = "json";
    bool parity = false;
    auto* construct = app.add_subcommand("construct", "Print the generator matrix (and optionally a parity check)");
    add_instance_options(construct, ia);
    construct->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    construct->add_flag("--parity", parity, "Also print a parity-check matrix");
    construct->add_option("--out", out, "Output file");

    auto* dual = app.add_subcommand("dual", "Reduced generator of the dual code");
    add_instance_options(dual, ia);
    dual->add_option("--out", out, "Output file");

    bool of_dual = false;
    auto* schur = app.add_subcommand("schur", "Schur square of the code or of its dual");
    add_instance_options(schur, ia);
    schur->add_flag("--dual", of_dual, "Square the dual code");
    schur->add_option("--out", out, "Output file");

    auto* mindist = app.add_subcommand("mindist", "Exhaustive minimum distance");
    add_instance_options(mindist, ia);
    mindist->add_option("--cap", cap, "Maximum number of enumerated messages")->capture_default_str();
    mindist->add_option("--out", out, "Output file");

    auto* certify = app.add_subcommand("certify", "Run the certifier cascade");
    add_instance_options(certify, ia);
    certify->add_option("--cap", cap, "Distance enumeration cap")->capture_default_str();
    certify->add_option("--oracle-limit", oracle_limit, "Oracle candidate limit")->capture_default_str();
    certify->add_option("--out", out, "Output file");

    auto* oracle = app.add_subcommand("oracle", "Decide equality with some GRS code by exhaustive search");
    add_instance_options(oracle, ia);
    oracle->add_option("--oracle-limit", oracle_limit, "Candidate limit")->capture_default_str();
    oracle->add_option("--out", out, "Output file");

    SweepArgs sa;
    auto* sweep = app.add_subcommand("sweep", "Certify every point of a parameter space (JSON lines)");
    sweep->add_option("--config", sa.config_path, "JSON config file; flags override its entries");
    sweep->add_option("--field", sa.fields, "Field spec or q-range a..b (repeatable, or ';'-separated)")
        ->delimiter(';');
    sweep->add_option("--family", sa.families, "Families, comma-separated")
        ->delimiter(',')
        ->check(CLI::IsMember({"grs", "tgrs", "etgrs"}));
    sweep->add_option("--n", sa.n, "Range a..b");
    sweep->add_option("--k", sa.k, "Range a..b");
    sweep->add_option("--t", sa.t, "Range a..b");
    sweep->add_option("--h", sa.h, "Range a..b");
    sweep->add_option("--eta", sa.eta, "all, one or sample:N");
    sweep->add_option("--alpha", sa.alpha, "first-n, all-subsets-up-to:N, sample:N, explicit:a,b,...; join with '+'");
    sweep->add_option("--v", sa.v, "ones, sample:N, explicit:a,b,...; join with '+'");
    sweep->add_option("--filter", sa.filter, "all, dual-square, weight-one or eligible");
    sweep->add_option("--cap", sa.cap, "Distance enumeration cap");
    sweep->add_option("--oracle-limit", sa.oracle_limit, "Oracle candidate limit");
    sweep->add_option("--seed", sa.seed, "Sampling seed");
    sweep->add_option("--jobs", sa.jobs, "Worker threads");
    sweep->add_flag("--no-distance", sa.no_distance, "Skip exhaustive minimum distance");
    sweep->add_flag("--no-oracle", sa.no_oracle, "Skip the exhaustive GRS oracle");
    sweep->add_flag("--timing", sa.timing, "Record per-point wall-clock time");
    sweep->add_option("--out", sa.out, "Output file");

    std::string input = "-";
    auto* verify = app.add_subcommand("verify-certificate", "Re-verify the certificates in a report");
    verify->add_option("input", input, "Report file, or - for stdin")->capture_default_str();
    verify->add_option("--oracle-limit", oracle_limit, "Oracle candidate limit")->capture_default_str();
    verify->add_option("--out", out, "Output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitError;
    }

    try {
        if (*construct) return run_construct(ia, format, parity, out);
        if (*dual) return run_dual(ia, out);
        if (*schur) return run_schur(ia, of_dual, out);
        if (*mindist) return run_mindist(ia, cap, out);
        if (*certify) return run_certify(ia, cap, oracle_limit, out);
        if (*oracle) return run_oracle(ia, oracle_limit, out);
        if (*sweep) return run_sweep(sa, *sweep);
        if (*verify) return run_verify(input, oracle_limit, out);
    } catch (const std::exception& e) {
        std::cerr << "twistcert: error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}
