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

#include "twistcert/classical.hpp"

#include <stdexcept>
#include <string>

namespace twistcert {

namespace {

void require_distinct(const Field& f, std::span<const Felt> set, const char* what) {
    std::vector<bool> seen(f.order(), false);
    for (auto a : set) {
        if (!f.contains(a)) throw std::invalid_argument(std::string(what) + ": element outside the field");
        if (seen[a]) throw std::invalid_argument(std::string(what) + ": repeated element " + std::to_string(a));
        seen[a] = true;
    }
}

}  // namespace

EvaluationSet::EvaluationSet(FieldPtr field, Vector alpha) : field_(std::move(field)), alpha_(std::move(alpha)) {
    if (!field_) throw std::invalid_argument("evaluation set: null field");
    if (alpha_.empty()) throw std::invalid_argument("evaluation set: no points");
    require_distinct(*field_, alpha_, "evaluation set");
}

EvaluationSet EvaluationSet::first_n(FieldPtr field, std::size_t n) {
    if (n > field->order()) throw std::invalid_argument("evaluation set: n exceeds q");
    Vector alpha(n);
    for (std::size_t i = 0; i < n; ++i) alpha[i] = static_cast<Felt>(i);
    return EvaluationSet(std::move(field), std::move(alpha));
}

Matrix grs_generator(const EvaluationSet& points, std::size_t k, std::span<const Felt> multipliers) {
    const Field& f = points.field();
    const std::size_t n = points.size();
    if (k < 1 || k > n) throw std::invalid_argument("grs: require 1 <= k <= n");
    if (multipliers.size() != n) throw std::invalid_argument("grs: need one multiplier per point");
    for (auto v : multipliers) {
        if (v == 0 || !f.contains(v)) throw std::invalid_argument("grs: multipliers must be nonzero field elements");
    }
    Matrix g(points.field_ptr(), k, n);
    for (std::size_t j = 0; j < n; ++j) {
        Felt x = multipliers[j];
        for (std::size_t i = 0; i < k; ++i) {
            g(i, j) = x;
            x = f.mul(x, points[j]);
        }
    }
    return g;
}

Matrix grs_generator(const EvaluationSet& points, std::size_t k) {
    return grs_generator(points, k, Vector(points.size(), 1));
}

LinearCode grs_code(const EvaluationSet& points, std::size_t k, std::span<const Felt> multipliers) {
    return LinearCode(grs_generator(points, k, multipliers));
}

LinearCode grs_code(const EvaluationSet& points, std::size_t k) { return LinearCode(grs_generator(points, k)); }

Vector u_vector(const EvaluationSet& points) {
    const Field& f = points.field();
    const std::size_t n = points.size();
    if (n < 2) throw std::invalid_argument("u_vector: need at least two points");
    Vector u(n);
    for (std::size_t j = 0; j < n; ++j) {
        Felt prod = 1;
        for (std::size_t i = 0; i < n; ++i) {
            if (i != j) prod = f.mul(prod, f.sub(points[j], points[i]));
        }
        u[j] = f.inv(prod);
    }
    return u;
}

Vector u_vector_complement(const EvaluationSet& points) {
    const Field& f = points.field();
    std::vector<bool> in_set(f.order(), false);
    for (auto a : points.points()) in_set[a] = true;
    Vector u(points.size());
    for (std::size_t j = 0; j < points.size(); ++j) {
        Felt prod = 1;
        for (Felt b = 0; b < f.order(); ++b) {
            if (!in_set[b]) prod = f.mul(prod, f.sub(points[j], b));
        }
        u[j] = f.neg(prod);
    }
    return u;
}

LinearCode grs_dual(const EvaluationSet& points, std::size_t k) {
    const std::size_t n = points.size();
    if (k < 1 || k >= n) throw std::invalid_argument("grs_dual: require 1 <= k < n");
    return grs_code(points, n - k, u_vector(points));
}

DualSquarePrediction dual_square_prediction(std::size_t n, std::size_t k) {
    if (2 * k < n || k >= n) throw std::invalid_argument("dual_square_prediction: require n/2 <= k < n");
    return {2 * (n - k) - 1, 2 * k + 2 - n};
}

Felt complement_power_sum(const Field& f, std::span<const Felt> set, std::size_t m) {
    require_distinct(f, set, "complement_power_sum");
    const std::size_t size = set.size();
    if (size <= 2) throw std::invalid_argument("complement_power_sum: require |A| > 2");
    if (m > size) throw std::invalid_argument("complement_power_sum: closed form needs m <= |A|");
    if (m + 2 <= size) return 0;
    if (m + 1 == size) return f.neg(1);
    Felt sum = 0;
    for (auto a : set) sum = f.add(sum, a);
    return f.neg(sum);
}

Felt complement_power_sum_direct(const Field& f, std::span<const Felt> set, std::size_t m) {
    require_distinct(f, set, "complement_power_sum_direct");
    std::vector<bool> in_set(f.order(), false);
    for (auto a : set) in_set[a] = true;
    Felt total = 0;
    for (auto a : set) {
        Felt term = f.pow(a, m);
        for (Felt b = 0; b < f.order(); ++b) {
            if (!in_set[b]) term = f.mul(term, f.sub(a, b));
        }
        total = f.add(total, term);
    }
    return total;
}

}  // namespace twistcert
