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

#include "twistcert/report.hpp"

#include <cstdio>
#include <stdexcept>

namespace twistcert {

namespace {

constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ULL;
constexpr std::uint64_t kFnvPrime = 0x100000001b3ULL;

std::string hex64(std::uint64_t h) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

Json flag_json(const ConditionFlag& f) { return Json{{"holds", f.holds}, {"trace", f.trace}}; }

template <class T>
Json optional_json(const std::optional<T>& v) {
    return v ? Json(*v) : Json(nullptr);
}

Vector vector_from_json(const Json& j, const char* what) {
    if (!j.is_array()) throw std::invalid_argument(std::string("record: ") + what + " must be an array");
    Vector out;
    for (const auto& x : j) {
        if (!x.is_number_unsigned()) throw std::invalid_argument(std::string("record: ") + what + " entries must be unsigned");
        out.push_back(x.get<Felt>());
    }
    return out;
}

Json literal_or_null(const Vector& v) { return v.size() <= kLiteralLimit ? Json(v) : Json(nullptr); }

std::size_t get_size(const Json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number_unsigned()) {
        throw std::invalid_argument(std::string("record: missing unsigned field '") + key + "'");
    }
    return j.at(key).get<std::size_t>();
}

}  // namespace

std::string digest(std::span<const Felt> values) {
    std::uint64_t h = kFnvOffset;
    for (Felt v : values) {
        for (int b = 0; b < 4; ++b) {
            h ^= (v >> (8 * b)) & 0xffU;
            h *= kFnvPrime;
        }
    }
    return hex64(h);
}

std::string digest(const std::string& text) {
    std::uint64_t h = kFnvOffset;
    for (unsigned char c : text) {
        h ^= c;
        h *= kFnvPrime;
    }
    return hex64(h);
}

Json matrix_json(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row_vector(r));
    return rows;
}

Json conditions_json(const ConditionReport& c) {
    Json ds = Json::array();
    for (const auto& f : c.dual_square) ds.push_back(flag_json(f));
    return Json{{"dual_square", ds},
                {"low_rate", flag_json(c.low_rate)},
                {"low_rate_extended", flag_json(c.low_rate_extended)},
                {"weight_one", flag_json(c.weight_one)}};
}

Json certificate_json(const Certificate& cert) {
    Json j{{"kind", to_string(cert.kind)}};
    switch (cert.kind) {
        case CertificateKind::dual_square_dim:
            j["observed_dimension"] = cert.observed_dimension;
            j["grs_dimension"] = cert.grs_dimension;
            j["punctured"] = cert.punctured;
            break;
        case CertificateKind::weight_one:
            j["word"] = cert.word;
            j["dual_words"] = cert.dual_words;
            break;
        case CertificateKind::non_mds:
            j["word"] = cert.word;
            break;
        case CertificateKind::low_rate_flag:
            j["citation"] = cert.citation;
            break;
        case CertificateKind::exhaustive_search:
            break;
    }
    return j;
}

Certificate certificate_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string()) {
        throw std::invalid_argument("certificate: missing kind");
    }
    const auto kind = certificate_kind_from_string(j.at("kind").get<std::string>());
    if (!kind) throw std::invalid_argument("certificate: unknown kind '" + j.at("kind").get<std::string>() + "'");
    Certificate cert;
    cert.kind = *kind;
    if (j.contains("observed_dimension")) cert.observed_dimension = get_size(j, "observed_dimension");
    if (j.contains("grs_dimension")) cert.grs_dimension = get_size(j, "grs_dimension");
    if (j.contains("punctured")) {
        for (const auto& p : j.at("punctured")) cert.punctured.push_back(p.get<std::size_t>());
    }
    if (j.contains("word")) cert.word = vector_from_json(j.at("word"), "certificate word");
    if (j.contains("dual_words")) {
        for (const auto& w : j.at("dual_words")) cert.dual_words.push_back(vector_from_json(w, "dual word"));
    }
    if (j.contains("citation")) cert.citation = j.at("citation").get<std::string>();
    return cert;
}

Json verdict_json(const Verdict& v) {
    Json j{{"kind", to_string(v.kind)}, {"reason", v.reason}, {"square_dimension", optional_json(v.square_dimension)}};
    if (v.certificate) {
        Json c = certificate_json(*v.certificate);
        j["certificate_digest"] = digest(c.dump());
        j["certificate"] = std::move(c);
    } else {
        j["certificate"] = nullptr;
    }
    return j;
}

Json instance_json(const Instance& instance, const SelectionRules& rules) {
    const Field& f = instance.points.field();
    const bool twisted = instance.family != Family::grs;
    Json j{{"field", f.to_string()},
           {"q", f.order()},
           {"p", f.characteristic()},
           {"m", f.degree()},
           {"family", to_string(instance.family)},
           {"n", instance.points.size()},
           {"length", instance.length()},
           {"k", instance.k},
           {"t", twisted ? Json(instance.twist.t) : Json(nullptr)},
           {"h", twisted ? Json(instance.twist.h) : Json(nullptr)},
           {"eta", twisted ? Json(instance.twist.eta) : Json(nullptr)},
           {"alpha", literal_or_null(instance.points.points())},
           {"alpha_digest", digest(instance.points.points())},
           {"alpha_rule", rules.alpha},
           {"v", literal_or_null(instance.multipliers)},
           {"v_digest", digest(instance.multipliers)},
           {"v_rule", rules.multipliers}};
    return j;
}

Json record_json(const Instance& instance, const CascadeReport& report, const SelectionRules& rules) {
    Json j = instance_json(instance, rules);
    j["conditions"] = report.conditions ? conditions_json(*report.conditions) : Json(nullptr);
    j["square_dimension"] = optional_json(report.square_dimension);
    j["grs_square_dimension"] = optional_json(report.grs_square_dimension);
    j["min_distance"] = optional_json(report.min_distance);
    j["oracle_is_grs"] = optional_json(report.oracle_is_grs);
    j["verdict"] = verdict_json(report.verdict);
    j["completeness_violation"] = report.completeness_violation;
    return j;
}

Instance instance_from_json(const Json& j, const Vector& alpha, const Vector& multipliers) {
    if (!j.is_object()) throw std::invalid_argument("record: expected an object");
    if (!j.contains("field") || !j.at("field").is_string()) throw std::invalid_argument("record: missing field");
    if (!j.contains("family") || !j.at("family").is_string()) throw std::invalid_argument("record: missing family");
    const auto family = family_from_string(j.at("family").get<std::string>());
    if (!family) throw std::invalid_argument("record: unknown family '" + j.at("family").get<std::string>() + "'");
    if (j.contains("alpha_digest") && j.at("alpha_digest") != digest(alpha)) {
        throw std::invalid_argument("record: alpha does not match its digest");
    }
    if (j.contains("v_digest") && j.at("v_digest") != digest(multipliers)) {
        throw std::invalid_argument("record: v does not match its digest");
    }
    FieldPtr field = make_field(j.at("field").get<std::string>());
    EvaluationSet points(field, alpha);
    const std::size_t n = get_size(j, "n");
    if (points.size() != n) throw std::invalid_argument("record: alpha has the wrong length");
    Instance inst{*family, std::move(points), multipliers, get_size(j, "k"), {}};
    if (*family != Family::grs) {
        inst.twist.n = n;
        inst.twist.k = inst.k;
        inst.twist.t = get_size(j, "t");
        inst.twist.h = get_size(j, "h");
        inst.twist.eta = static_cast<Felt>(get_size(j, "eta"));
    }
    return inst;
}

Instance instance_from_json(const Json& j) {
    if (!j.contains("alpha") || j.at("alpha").is_null()) throw std::invalid_argument("record: alpha recorded by digest only");
    if (!j.contains("v") || j.at("v").is_null()) throw std::invalid_argument("record: v recorded by digest only");
    return instance_from_json(j, vector_from_json(j.at("alpha"), "alpha"), vector_from_json(j.at("v"), "v"));
}

}  // namespace twistcert
