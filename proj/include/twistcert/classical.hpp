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

#include <span>

#include "twistcert/codes.hpp"

namespace twistcert {

/// Pairwise distinct evaluation points alpha_1..alpha_n in GF(q).
class EvaluationSet {
public:
    /// Throws std::invalid_argument on repeated or out-of-field points.
    EvaluationSet(FieldPtr field, Vector alpha);
    /// The points 0, 1, ..., n-1 in canonical encoding.
    static EvaluationSet first_n(FieldPtr field, std::size_t n);

    std::size_t size() const { return alpha_.size(); }
    const Vector& points() const { return alpha_; }
    Felt operator[](std::size_t i) const { return alpha_[i]; }
    const Field& field() const { return *field_; }
    const FieldPtr& field_ptr() const { return field_; }

private:
    FieldPtr field_;
    Vector alpha_;
};

/// Rows (v_1 a_1^i, ..., v_n a_n^i) for i = 0..k-1, not reduced.
/// Throws on k outside 1..n or a zero / missing multiplier.
Matrix grs_generator(const EvaluationSet& points, std::size_t k, std::span<const Felt> multipliers);
Matrix grs_generator(const EvaluationSet& points, std::size_t k);  // all-ones multipliers
LinearCode grs_code(const EvaluationSet& points, std::size_t k, std::span<const Felt> multipliers);
LinearCode grs_code(const EvaluationSet& points, std::size_t k);

/// u_j = prod_{i != j} (a_j - a_i)^{-1}. Requires n >= 2.
Vector u_vector(const EvaluationSet& points);
/// u_j = -prod_{b in GF(q) \ A} (a_j - b); agrees with u_vector for every point set.
Vector u_vector_complement(const EvaluationSet& points);

/// Dual of GRS_k(alpha, 1) as GRS_{n-k}(alpha, u). Requires 1 <= k < n.
LinearCode grs_dual(const EvaluationSet& points, std::size_t k);

struct DualSquarePrediction {
    std::size_t dimension;
    std::size_t min_distance;
};

/// Dimension 2(n-k)-1 and minimum distance 2k-n+2 of the Schur square of a
/// GRS dual. Defined for n/2 <= k < n; throws std::invalid_argument otherwise.
DualSquarePrediction dual_square_prediction(std::size_t n, std::size_t k);

/// L_A(m) = sum_{a in A} a^m prod_{b notin A} (a - b) by its closed form:
/// 0 for m <= |A|-2, -1 for m = |A|-1, -sum(A) for m = |A|.
/// Requires distinct elements, |A| > 2 and m <= |A|.
Felt complement_power_sum(const Field& f, std::span<const Felt> set, std::size_t m);
/// L_A(m) evaluated literally from its defining sum. Any A, any m.
Felt complement_power_sum_direct(const Field& f, std::span<const Felt> set, std::size_t m);

}  // namespace twistcert
