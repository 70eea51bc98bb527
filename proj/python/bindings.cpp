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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "twistcert/sweep.hpp"

namespace py = pybind11;
namespace tc = twistcert;

namespace {

using Rows = std::vector<tc::Vector>;

tc::Family parse_family(const std::string& name) {
    const auto f = tc::family_from_string(name);
    if (!f) throw std::invalid_argument("unknown family '" + name + "' (grs, tgrs or etgrs)");
    return *f;
}

tc::Instance make_instance(const std::string& family, const std::string& field, tc::Vector alpha, std::size_t k,
                           std::size_t t, std::size_t h, tc::Felt eta, std::optional<tc::Vector> v) {
    const tc::FieldPtr f = tc::make_field(field);
    const tc::Family fam = parse_family(family);
    const std::size_t n = alpha.size();
    tc::Vector mult = v ? *v : tc::Vector(n, 1);
    tc::Instance inst{fam, tc::EvaluationSet(f, std::move(alpha)), std::move(mult), k, {}};
    if (fam != tc::Family::grs) {
        inst.twist = tc::TwistParams{n, k, t, h, eta};
        inst.twist.validate(*f, fam == tc::Family::etgrs);
    }
    return inst;
}

/// A linear code over a named field, held in reduced form.
class PyCode {
public:
    PyCode(const std::string& field, const Rows& rows)
        : code_(tc::Matrix::from_rows(tc::make_field(field), rows.empty() ? 0 : rows[0].size(), rows)) {}
    explicit PyCode(tc::LinearCode code) : code_(std::move(code)) {}

    std::size_t length() const { return code_.length(); }
    std::size_t dimension() const { return code_.dimension(); }
    std::string field() const { return code_.field().to_string(); }
    Rows generator() const { return code_.generator().to_rows(); }
    bool contains(const tc::Vector& w) const { return code_.contains(w); }
    PyCode dual() const { return PyCode(tc::dual(code_)); }
    PyCode schur_square() const { return PyCode(tc::schur_square(code_)); }
    PyCode schur_product(const PyCode& other) const { return PyCode(tc::schur_product(code_, other.code_)); }
    PyCode puncture(const std::vector<std::size_t>& positions) const { return PyCode(tc::puncture(code_, positions)); }
    std::optional<std::size_t> min_distance(std::uint64_t cap) const {
        return tc::min_distance_exhaustive(code_, cap).distance;
    }
    std::optional<bool> is_grs(std::uint64_t limit) const { return tc::exhaustive_grs_oracle(code_, limit).is_grs; }
    bool operator==(const PyCode& other) const { return code_ == other.code_; }

private:
    tc::LinearCode code_;
};

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact coding-theory kernels: GRS and twisted GRS codes and their non-GRS certificates";
    m.attr("__version__") = tc::kVersion;

    py::class_<PyCode>(m, "Code")
        .def(py::init<const std::string&, const Rows&>(), py::arg("field"), py::arg("rows"))
        .def_property_readonly("length", &PyCode::length)
        .def_property_readonly("dimension", &PyCode::dimension)
        .def_property_readonly("field", &PyCode::field)
        .def_property_readonly("generator", &PyCode::generator)
        .def("contains", &PyCode::contains, py::arg("word"))
        .def("dual", &PyCode::dual)
        .def("schur_square", &PyCode::schur_square)
        .def("schur_product", &PyCode::schur_product, py::arg("other"))
        .def("puncture", &PyCode::puncture, py::arg("positions"))
        .def("min_distance", &PyCode::min_distance, py::arg("cap") = tc::kDefaultDistanceCap)
        .def("is_grs", &PyCode::is_grs, py::arg("limit") = tc::kDefaultOracleLimit)
        .def("__eq__", &PyCode::operator==)
        .def("__repr__", [](const PyCode& c) {
            return "<Code [" + std::to_string(c.length()) + "," + std::to_string(c.dimension()) + "] over GF(" +
                   c.field() + ")>";
        });

    m.def(
        "code",
        [](const std::string& family, const std::string& field, const tc::Vector& alpha, std::size_t k, std::size_t t,
           std::size_t h, tc::Felt eta, std::optional<tc::Vector> v) {
            return PyCode(make_instance(family, field, alpha, k, t, h, eta, std::move(v)).code());
        },
        py::arg("family"), py::arg("field"), py::arg("alpha"), py::arg("k"), py::arg("t") = 1, py::arg("h") = 0,
        py::arg("eta") = 1, py::arg("v") = py::none());

    m.def(
        "generator",
        [](const std::string& family, const std::string& field, const tc::Vector& alpha, std::size_t k, std::size_t t,
           std::size_t h, tc::Felt eta, std::optional<tc::Vector> v) {
            return make_instance(family, field, alpha, k, t, h, eta, std::move(v)).generator().to_rows();
        },
        "Unreduced generator rows in basis order", py::arg("family"), py::arg("field"), py::arg("alpha"), py::arg("k"),
        py::arg("t") = 1, py::arg("h") = 0, py::arg("eta") = 1, py::arg("v") = py::none());

    m.def(
        "parity_check",
        [](const std::string& field, const tc::Vector& alpha, std::size_t k, std::size_t t, std::size_t h, tc::Felt eta,
           std::optional<tc::Vector> v) {
            const tc::Instance inst = make_instance("tgrs", field, alpha, k, t, h, eta, std::move(v));
            return tc::tgrs_parity_check(inst.twist, inst.points, inst.multipliers).to_rows();
        },
        "Closed-form parity-check rows of a twisted code", py::arg("field"), py::arg("alpha"), py::arg("k"),
        py::arg("t") = 1, py::arg("h") = 0, py::arg("eta") = 1, py::arg("v") = py::none());

    m.def(
        "u_vector",
        [](const std::string& field, const tc::Vector& alpha) {
            return tc::u_vector(tc::EvaluationSet(tc::make_field(field), alpha));
        },
        py::arg("field"), py::arg("alpha"));

    m.def(
        "power_sum",
        [](const std::string& field, const tc::Vector& set, std::size_t m) {
            return tc::complement_power_sum_direct(*tc::make_field(field), set, m);
        },
        "L_A(m) from its defining sum", py::arg("field"), py::arg("set"), py::arg("m"));

    m.def(
        "select_conditions",
        [](std::size_t n, std::size_t k, std::size_t t, std::size_t h, bool extended) {
            return tc::conditions_json(tc::select_conditions(tc::TwistParams{n, k, t, h, 1}, extended)).dump();
        },
        py::arg("n"), py::arg("k"), py::arg("t"), py::arg("h"), py::arg("extended") = false);

    m.def(
        "certify_json",
        [](const std::string& family, const std::string& field, const tc::Vector& alpha, std::size_t k, std::size_t t,
           std::size_t h, tc::Felt eta, std::optional<tc::Vector> v, std::uint64_t cap, std::uint64_t oracle_limit,
           bool distance, bool oracle) {
            const tc::Instance inst = make_instance(family, field, alpha, k, t, h, eta, v);
            tc::CascadeOptions opt;
            opt.distance_cap = cap;
            opt.oracle_limit = oracle_limit;
            opt.run_distance = distance;
            opt.run_oracle = oracle;
            tc::CascadeReport rep;
            {
                py::gil_scoped_release release;
                rep = tc::run_cascade(inst, opt);
            }
            return tc::record_json(inst, rep, {"explicit", v ? "explicit" : "ones"}).dump();
        },
        py::arg("family"), py::arg("field"), py::arg("alpha"), py::arg("k"), py::arg("t") = 1, py::arg("h") = 0,
        py::arg("eta") = 1, py::arg("v") = py::none(), py::arg("cap") = tc::kDefaultDistanceCap,
        py::arg("oracle_limit") = 1'000'000, py::arg("distance") = true, py::arg("oracle") = true);

    m.def(
        "sweep_json",
        [](const std::string& config_json, std::optional<unsigned> jobs) {
            tc::SweepConfig config = tc::SweepConfig::from_json(tc::Json::parse(config_json));
            if (jobs) config.jobs = *jobs;
            config.validate();
            tc::SweepResult result;
            {
                py::gil_scoped_release release;
                result = tc::run_sweep(config);
            }
            std::vector<std::string> lines{result.header.dump()};
            for (const auto& r : result.records) lines.push_back(r.dump());
            lines.push_back(result.footer.dump());
            return lines;
        },
        "Header, records and footer of a sweep, one JSON document each", py::arg("config"), py::arg("jobs") = py::none());

    m.def(
        "verify_record_json",
        [](const std::string& record_json, std::optional<std::string> config_json, std::uint64_t oracle_limit) {
            std::optional<tc::SweepConfig> config;
            if (config_json) config = tc::SweepConfig::from_json(tc::Json::parse(*config_json));
            const tc::RecordCheck c =
                tc::verify_record(tc::Json::parse(record_json), config ? &*config : nullptr, oracle_limit);
            return py::make_tuple(c.has_certificate, c.verified, c.detail);
        },
        py::arg("record"), py::arg("config") = py::none(), py::arg("oracle_limit") = tc::kDefaultOracleLimit);
}
