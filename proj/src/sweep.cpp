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

#include "twistcert/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <thread>
#include <tuple>

namespace twistcert {

namespace {

enum StreamTag : std::uint64_t { kAlphaStream = 1, kMultiplierStream = 2, kEtaStream = 3 };

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::size_t parse_count(const std::string& text, const std::string& what) {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(text, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos == 0 || pos != text.size() || text.front() == '-') {
        throw std::invalid_argument(what + ": expected a non-negative integer, got '" + text + "'");
    }
    return static_cast<std::size_t>(v);
}

Vector parse_list(const std::string& text, const std::string& what) {
    Vector out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        out.push_back(static_cast<Felt>(parse_count(item, what)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

std::string join(const Vector& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
    return out;
}

std::string join_selections(const std::vector<Selection>& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "+" : "") + s[i].to_string();
    return out;
}

Vector random_subset(const Field& f, std::size_t n, std::uint64_t stream) {
    std::mt19937_64 rng(stream);
    Vector pool = f.elements();
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = i + uniform_below(rng, pool.size() - i);
        std::swap(pool[i], pool[j]);
    }
    pool.resize(n);
    return pool;
}

Vector random_multipliers(const Field& f, std::size_t n, std::uint64_t stream) {
    std::mt19937_64 rng(stream);
    Vector out(n);
    for (auto& x : out) x = static_cast<Felt>(1 + uniform_below(rng, f.order() - 1));
    return out;
}

/// Advances a sorted n-subset of {0..q-1} to its lexicographic successor.
bool next_subset(Vector& s, std::uint32_t q) {
    const std::size_t n = s.size();
    for (std::size_t i = n; i-- > 0;) {
        if (s[i] < q - (n - i)) {
            ++s[i];
            for (std::size_t j = i + 1; j < n; ++j) s[j] = s[j - 1] + 1;
            return true;
        }
    }
    return false;
}

struct Choice {
    Vector values;
    std::string rule;
};

std::vector<Choice> choose(const SweepConfig& cfg, const std::vector<Selection>& sels, const Field& f, std::size_t n,
                           bool multipliers) {
    std::vector<Choice> out;
    for (const auto& s : sels) {
        switch (s.mode) {
            case Selection::Mode::first_n: {
                Vector v(n);
                std::iota(v.begin(), v.end(), Felt{0});
                out.push_back({std::move(v), "first-n"});
                break;
            }
            case Selection::Mode::all_subsets: {
                Vector cur(n);
                std::iota(cur.begin(), cur.end(), Felt{0});
                for (std::size_t i = 0; i < s.count; ++i) {
                    out.push_back({cur, "subset:" + std::to_string(i)});
                    if (!next_subset(cur, f.order())) break;
                }
                break;
            }
            case Selection::Mode::sample:
                for (std::size_t i = 0; i < s.count; ++i) {
                    out.push_back({regenerate_selection(cfg, f, n, "sample:" + std::to_string(i), multipliers),
                                   "sample:" + std::to_string(i)});
                }
                break;
            case Selection::Mode::ones:
                out.push_back({Vector(n, 1), "ones"});
                break;
            case Selection::Mode::explicit_list:
                if (s.values.size() == n) out.push_back({s.values, "explicit"});
                break;
        }
    }
    return out;
}

Vector choose_eta(const SweepConfig& cfg, const Field& f, const TwistParams& p) {
    const std::uint32_t q = f.order();
    Vector all(q - 1);
    std::iota(all.begin(), all.end(), Felt{1});
    switch (cfg.eta.mode) {
        case EtaSelection::Mode::all: return all;
        case EtaSelection::Mode::one: return {1};
        case EtaSelection::Mode::sample: {
            if (cfg.eta.count >= all.size()) return all;
            std::mt19937_64 rng(derive_seed(cfg.seed, {kEtaStream, q, p.n, p.k, p.t, p.h}));
            for (std::size_t i = 0; i < cfg.eta.count; ++i) {
                std::swap(all[i], all[i + uniform_below(rng, all.size() - i)]);
            }
            all.resize(cfg.eta.count);
            std::sort(all.begin(), all.end());
            return all;
        }
    }
    return all;
}

bool keep(const SweepConfig& cfg, Family family, const TwistParams& p) {
    if (cfg.filter == SweepFilter::all) return true;
    if (family == Family::grs) return false;
    const bool extended = family == Family::etgrs;
    const ConditionReport c = select_conditions(p, extended);
    const bool t1 = !extended && c.any_dual_square();
    const bool t2 = extended && c.weight_one.holds && 2 * p.k >= p.n + 1;
    switch (cfg.filter) {
        case SweepFilter::dual_square: return t1;
        case SweepFilter::weight_one: return t2;
        case SweepFilter::eligible: return t1 || t2;
        case SweepFilter::all: return true;
    }
    return true;
}

std::uint64_t field_order(const std::string& spec) {
    const FieldSpec s = parse_field_spec(spec);
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < s.m; ++i) q *= s.p;
    return q;
}

std::size_t lo_or(const Range& r, std::size_t d) { return r.lo ? std::max(*r.lo, d) : d; }
std::size_t hi_or(const Range& r, std::size_t d) { return r.hi ? std::min(*r.hi, d) : d; }

}  // namespace

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("uniform_below: empty range");
    const std::uint64_t threshold = (0 - bound) % bound;
    while (true) {
        const std::uint64_t x = rng();
        if (x >= threshold) return x % bound;
    }
}

std::uint64_t derive_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> labels) {
    std::uint64_t h = splitmix64(seed);
    for (auto l : labels) h = splitmix64(h ^ l);
    return h;
}

Range Range::parse(const std::string& text) {
    Range r;
    if (text.empty()) return r;
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        r.lo = r.hi = parse_count(text, "range");
        return r;
    }
    const std::string a = text.substr(0, dots);
    const std::string b = text.substr(dots + 2);
    if (!a.empty()) r.lo = parse_count(a, "range");
    if (!b.empty()) r.hi = parse_count(b, "range");
    return r;
}

std::string Range::to_string() const {
    if (lo && hi && *lo == *hi) return std::to_string(*lo);
    return (lo ? std::to_string(*lo) : "") + ".." + (hi ? std::to_string(*hi) : "");
}

Selection Selection::parse(const std::string& text) {
    const auto colon = text.find(':');
    const std::string head = text.substr(0, colon);
    const std::string arg = colon == std::string::npos ? "" : text.substr(colon + 1);
    Selection s;
    if (head == "first-n" && colon == std::string::npos) {
        s.mode = Mode::first_n;
    } else if (head == "ones" && colon == std::string::npos) {
        s.mode = Mode::ones;
    } else if (head == "all-subsets-up-to" && !arg.empty()) {
        s.mode = Mode::all_subsets;
        s.count = parse_count(arg, "selection");
    } else if (head == "sample" && !arg.empty()) {
        s.mode = Mode::sample;
        s.count = parse_count(arg, "selection");
    } else if (head == "explicit" && !arg.empty()) {
        s.mode = Mode::explicit_list;
        s.values = parse_list(arg, "selection");
    } else {
        throw std::invalid_argument("selection: unrecognized '" + text + "'");
    }
    return s;
}

std::string Selection::to_string() const {
    switch (mode) {
        case Mode::first_n: return "first-n";
        case Mode::all_subsets: return "all-subsets-up-to:" + std::to_string(count);
        case Mode::sample: return "sample:" + std::to_string(count);
        case Mode::ones: return "ones";
        case Mode::explicit_list: return "explicit:" + join(values);
    }
    return "?";
}

std::vector<Selection> parse_selections(const std::string& text) {
    std::vector<Selection> out;
    std::size_t start = 0;
    while (true) {
        const auto plus = text.find('+', start);
        out.push_back(Selection::parse(text.substr(start, plus == std::string::npos ? std::string::npos : plus - start)));
        if (plus == std::string::npos) break;
        start = plus + 1;
    }
    return out;
}

EtaSelection EtaSelection::parse(const std::string& text) {
    EtaSelection e;
    if (text == "all") {
        e.mode = Mode::all;
    } else if (text == "one") {
        e.mode = Mode::one;
    } else if (text.rfind("sample:", 0) == 0) {
        e.mode = Mode::sample;
        e.count = parse_count(text.substr(7), "eta selection");
        if (e.count == 0) throw std::invalid_argument("eta selection: sample count must be positive");
    } else {
        throw std::invalid_argument("eta selection: expected all, one or sample:N, got '" + text + "'");
    }
    return e;
}

std::string EtaSelection::to_string() const {
    switch (mode) {
        case Mode::all: return "all";
        case Mode::one: return "one";
        case Mode::sample: return "sample:" + std::to_string(count);
    }
    return "?";
}

const char* to_string(SweepFilter f) {
    switch (f) {
        case SweepFilter::all: return "all";
        case SweepFilter::dual_square: return "dual-square";
        case SweepFilter::weight_one: return "weight-one";
        case SweepFilter::eligible: return "eligible";
    }
    return "?";
}

SweepFilter sweep_filter_from_string(const std::string& s) {
    for (auto f : {SweepFilter::all, SweepFilter::dual_square, SweepFilter::weight_one, SweepFilter::eligible}) {
        if (s == to_string(f)) return f;
    }
    throw std::invalid_argument("sweep filter: expected all, dual-square, weight-one or eligible, got '" + s + "'");
}

void SweepConfig::validate() const {
    if (distance_cap == 0) throw std::invalid_argument("sweep: distance cap must be positive");
    if (oracle_limit == 0) throw std::invalid_argument("sweep: oracle limit must be positive");
    if (jobs == 0) throw std::invalid_argument("sweep: jobs must be positive");
    for (const auto& s : alpha) {
        if (s.mode == Selection::Mode::ones) throw std::invalid_argument("sweep: 'ones' is not an alpha selection");
    }
    for (const auto& s : multipliers) {
        if (s.mode == Selection::Mode::first_n || s.mode == Selection::Mode::all_subsets) {
            throw std::invalid_argument("sweep: '" + s.to_string() + "' is not a v selection");
        }
    }
    for (const auto& spec : expand_fields(fields)) make_field(spec);
}

Json SweepConfig::to_json() const {
    Json fams = Json::array();
    for (auto f : families) fams.push_back(twistcert::to_string(f));
    return Json{{"fields", fields},
                {"families", fams},
                {"n", n.to_string()},
                {"k", k.to_string()},
                {"t", t.to_string()},
                {"h", h.to_string()},
                {"eta", eta.to_string()},
                {"alpha", join_selections(alpha)},
                {"v", join_selections(multipliers)},
                {"distance_cap", distance_cap},
                {"oracle_limit", oracle_limit},
                {"checks", {{"distance", run_distance}, {"oracle", run_oracle}}},
                {"filter", twistcert::to_string(filter)},
                {"seed", seed},
                {"timing", timing}};
}

SweepConfig SweepConfig::from_json(const Json& j) {
    SweepConfig c;
    if (!j.is_object()) throw std::invalid_argument("sweep config: expected an object");
    if (j.contains("fields")) c.fields = j.at("fields").get<std::vector<std::string>>();
    if (j.contains("families")) {
        c.families.clear();
        for (const auto& f : j.at("families")) {
            const auto fam = family_from_string(f.get<std::string>());
            if (!fam) throw std::invalid_argument("sweep config: unknown family '" + f.get<std::string>() + "'");
            c.families.push_back(*fam);
        }
    }
    if (j.contains("n")) c.n = Range::parse(j.at("n").get<std::string>());
    if (j.contains("k")) c.k = Range::parse(j.at("k").get<std::string>());
    if (j.contains("t")) c.t = Range::parse(j.at("t").get<std::string>());
    if (j.contains("h")) c.h = Range::parse(j.at("h").get<std::string>());
    if (j.contains("eta")) c.eta = EtaSelection::parse(j.at("eta").get<std::string>());
    if (j.contains("alpha")) c.alpha = parse_selections(j.at("alpha").get<std::string>());
    if (j.contains("v")) c.multipliers = parse_selections(j.at("v").get<std::string>());
    if (j.contains("distance_cap")) c.distance_cap = j.at("distance_cap").get<std::uint64_t>();
    if (j.contains("oracle_limit")) c.oracle_limit = j.at("oracle_limit").get<std::uint64_t>();
    if (j.contains("checks")) {
        const Json& ch = j.at("checks");
        if (ch.contains("distance")) c.run_distance = ch.at("distance").get<bool>();
        if (ch.contains("oracle")) c.run_oracle = ch.at("oracle").get<bool>();
    }
    if (j.contains("filter")) c.filter = sweep_filter_from_string(j.at("filter").get<std::string>());
    if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("jobs")) c.jobs = j.at("jobs").get<unsigned>();
    if (j.contains("timing")) c.timing = j.at("timing").get<bool>();
    return c;
}

std::vector<std::string> expand_fields(const std::vector<std::string>& fields) {
    std::vector<std::pair<std::uint64_t, std::string>> out;
    for (const auto& entry : fields) {
        if (entry.find("..") != std::string::npos) {
            const Range r = Range::parse(entry);
            if (!r.lo || !r.hi) throw std::invalid_argument("field range needs both bounds: '" + entry + "'");
            if (*r.hi > kMaxFieldOrder) throw std::invalid_argument("field range exceeds the maximum field order");
            for (std::size_t q = *r.lo; q <= *r.hi; ++q) {
                const auto pm = prime_power(q);
                if (!pm) continue;
                out.emplace_back(q, pm->second == 1 ? std::to_string(pm->first)
                                                    : std::to_string(pm->first) + "^" + std::to_string(pm->second));
            }
        } else {
            out.emplace_back(field_order(entry), entry);
        }
    }
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::string> specs;
    for (auto& [q, s] : out) {
        if (std::find(specs.begin(), specs.end(), s) == specs.end()) specs.push_back(std::move(s));
    }
    return specs;
}

Vector regenerate_selection(const SweepConfig& config, const Field& field, std::size_t n, const std::string& rule,
                            bool multipliers) {
    const std::uint32_t q = field.order();
    if (n > q && !multipliers) throw std::invalid_argument("selection: n exceeds q");
    if (rule == "first-n") {
        Vector v(n);
        std::iota(v.begin(), v.end(), Felt{0});
        return v;
    }
    if (rule == "ones") return Vector(n, 1);
    if (rule == "explicit") {
        for (const auto& s : multipliers ? config.multipliers : config.alpha) {
            if (s.mode == Selection::Mode::explicit_list && s.values.size() == n) return s.values;
        }
        throw std::invalid_argument("selection: no explicit vector of length " + std::to_string(n) + " in config");
    }
    if (rule.rfind("subset:", 0) == 0) {
        const std::size_t index = parse_count(rule.substr(7), "selection rule");
        Vector cur(n);
        std::iota(cur.begin(), cur.end(), Felt{0});
        for (std::size_t i = 0; i < index; ++i) {
            if (!next_subset(cur, q)) throw std::invalid_argument("selection: subset index out of range");
        }
        return cur;
    }
    if (rule.rfind("sample:", 0) == 0) {
        const std::size_t index = parse_count(rule.substr(7), "selection rule");
        const std::uint64_t stream =
            derive_seed(config.seed, {multipliers ? kMultiplierStream : kAlphaStream, q, n, index});
        return multipliers ? random_multipliers(field, n, stream) : random_subset(field, n, stream);
    }
    throw std::invalid_argument("selection: unknown rule '" + rule + "'");
}

std::vector<SweepPoint> enumerate_points(const SweepConfig& config) {
    struct Keyed {
        std::tuple<std::uint64_t, std::size_t, std::size_t, std::size_t, std::size_t, std::size_t, Felt, int> key;
        SweepPoint point;
    };
    std::vector<Keyed> keyed;
    const auto specs = expand_fields(config.fields);
    for (std::size_t fi = 0; fi < specs.size(); ++fi) {
        FieldPtr field = make_field(specs[fi]);
        const std::size_t q = field->order();
        for (std::size_t n = lo_or(config.n, 3); n <= hi_or(config.n, q); ++n) {
            const auto alphas = choose(config, config.alpha, *field, n, false);
            const auto vs = choose(config, config.multipliers, *field, n, true);
            for (std::size_t k = lo_or(config.k, 1); k <= hi_or(config.k, n - 1); ++k) {
                for (Family family : config.families) {
                    const int rank = static_cast<int>(family);
                    const auto emit = [&](const TwistParams& tp, Felt eta) {
                        for (const auto& a : alphas) {
                            for (const auto& v : vs) {
                                Instance inst{family, EvaluationSet(field, a.values), v.values, k, tp};
                                inst.twist.eta = eta;
                                keyed.push_back({{q, fi, n, k, tp.t, tp.h, eta, rank},
                                                 {std::move(inst), SelectionRules{a.rule, v.rule}}});
                            }
                        }
                    };
                    if (family == Family::grs) {
                        if (config.filter == SweepFilter::all) emit(TwistParams{n, k, 0, 0, 0}, 0);
                        continue;
                    }
                    const std::size_t h_min = family == Family::etgrs ? 1 : 0;
                    for (std::size_t t = lo_or(config.t, 1); t <= hi_or(config.t, n - k); ++t) {
                        for (std::size_t h = lo_or(config.h, h_min); h <= hi_or(config.h, k - 1); ++h) {
                            const TwistParams tp{n, k, t, h, 1};
                            if (!keep(config, family, tp)) continue;
                            for (Felt eta : choose_eta(config, *field, tp)) emit(tp, eta);
                        }
                    }
                }
            }
        }
    }
    std::stable_sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) { return a.key < b.key; });
    std::vector<SweepPoint> out;
    out.reserve(keyed.size());
    for (auto& k : keyed) out.push_back(std::move(k.point));
    return out;
}

SweepResult run_sweep(const SweepConfig& config) {
    config.validate();
    const std::vector<SweepPoint> points = enumerate_points(config);
    SweepResult result;
    result.header = Json{{"schema", kReportSchema}, {"tool", "twistcert"}, {"version", kVersion},
                         {"seed", config.seed}, {"config", config.to_json()}};
    result.records.resize(points.size());

    CascadeOptions opts;
    opts.distance_cap = config.distance_cap;
    opts.oracle_limit = config.oracle_limit;
    opts.run_distance = config.run_distance;
    opts.run_oracle = config.run_oracle;

    std::atomic<std::size_t> next{0};
    const auto worker = [&]() {
        for (std::size_t i = next++; i < points.size(); i = next++) {
            const SweepPoint& pt = points[i];
            const auto start = std::chrono::steady_clock::now();
            Json rec;
            try {
                rec = record_json(pt.instance, run_cascade(pt.instance, opts), pt.rules);
            } catch (const std::exception& e) {
                rec = instance_json(pt.instance, pt.rules);
                rec["error"] = e.what();
            }
            if (config.timing) {
                const std::chrono::duration<double, std::milli> dt = std::chrono::steady_clock::now() - start;
                rec["elapsed_ms"] = dt.count();
            }
            result.records[i] = std::move(rec);
        }
    };
    const unsigned jobs = std::max(1u, std::min<unsigned>(config.jobs, static_cast<unsigned>(points.size())));
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    Json verdicts{{"CertifiedNonGRS", 0}, {"GRSConsistent", 0}, {"Unknown", 0}};
    Json certs = Json::object();
    for (auto kind : {CertificateKind::dual_square_dim, CertificateKind::weight_one, CertificateKind::non_mds,
                      CertificateKind::low_rate_flag, CertificateKind::exhaustive_search}) {
        certs[to_string(kind)] = 0;
    }
    Json violations = Json::array();
    for (std::size_t i = 0; i < result.records.size(); ++i) {
        const Json& rec = result.records[i];
        if (rec.contains("error")) {
            ++result.errors;
            continue;
        }
        const Json& v = rec.at("verdict");
        verdicts[v.at("kind").get<std::string>()] = verdicts[v.at("kind").get<std::string>()].get<int>() + 1;
        if (!v.at("certificate").is_null()) {
            const std::string kind = v.at("certificate").at("kind").get<std::string>();
            certs[kind] = certs[kind].get<int>() + 1;
        }
        if (rec.at("completeness_violation").get<bool>()) {
            ++result.violations;
            violations.push_back(Json{{"record", i}, {"field", rec.at("field")}, {"family", rec.at("family")},
                                      {"n", rec.at("n")}, {"k", rec.at("k")}, {"t", rec.at("t")},
                                      {"h", rec.at("h")}, {"eta", rec.at("eta")},
                                      {"alpha_rule", rec.at("alpha_rule")}, {"v_rule", rec.at("v_rule")}});
        }
    }
    result.footer = Json{{"summary",
                          {{"records", result.records.size()},
                           {"verdicts", verdicts},
                           {"certificates", certs},
                           {"errors", result.errors},
                           {"completeness_violations", result.violations},
                           {"violations", violations}}}};
    return result;
}

void write_report(std::ostream& out, const SweepResult& result) {
    out << result.header.dump() << '\n';
    for (const auto& r : result.records) out << r.dump() << '\n';
    out << result.footer.dump() << '\n';
}

RecordCheck verify_record(const Json& record, const SweepConfig* config, std::uint64_t oracle_limit) {
    RecordCheck out;
    if (!record.is_object()) {
        out.detail = "not a record";
        return out;
    }
    if (record.contains("error")) {
        out.detail = "record carries an error: " + record.at("error").get<std::string>();
        return out;
    }
    if (!record.contains("verdict") || record.at("verdict").at("certificate").is_null()) {
        out.detail = "no certificate";
        return out;
    }
    out.has_certificate = true;
    const Json& verdict = record.at("verdict");
    const Json& cj = verdict.at("certificate");
    if (verdict.contains("certificate_digest") && verdict.at("certificate_digest") != digest(cj.dump())) {
        out.detail = "certificate digest mismatch";
        return out;
    }
    const auto recorded = [&](const char* key, const char* rule_key, bool multipliers) -> Vector {
        if (record.contains(key) && !record.at(key).is_null()) return record.at(key).get<Vector>();
        if (!config) throw std::invalid_argument(std::string(key) + " recorded by digest and no config given");
        const FieldPtr f = make_field(record.at("field").get<std::string>());
        return regenerate_selection(*config, *f, record.at("n").get<std::size_t>(),
                                    record.at(rule_key).get<std::string>(), multipliers);
    };
    try {
        const Instance inst = instance_from_json(record, recorded("alpha", "alpha_rule", false),
                                                 recorded("v", "v_rule", true));
        const Certificate cert = certificate_from_json(cj);
        const bool twisted = inst.family != Family::grs;
        out.verified = verify_certificate(inst.code(), cert, twisted ? &inst.twist : nullptr,
                                          inst.family == Family::etgrs, oracle_limit);
        out.detail = out.verified ? "verified" : "certificate does not verify";
    } catch (const std::exception& e) {
        out.detail = e.what();
    }
    return out;
}

}  // namespace twistcert
