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
#include <vector>

#include "twistcert/classical.hpp"

namespace twistcert {

/// (n, k, t, h, eta) of a twisted code. The twisted message space is
///   f(x) = a_0 + a_1 x + ... + a_{k-1} x^{k-1} + eta a_h x^{k-1+t},
/// so h is the hook and t the twist.
struct TwistParams {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t t = 1;
    std::size_t h = 0;
    Felt eta = 1;

    /// Enforces 0 <= h <= k-1 < k-1+t < n <= q and eta != 0, plus h > 0 when
    /// `extended`. Throws std::invalid_argument naming the violated inequality.
    void validate(const Field& f, bool extended) const;

    bool operator==(const TwistParams&) const = default;
};

struct TwistedPoly {
    Vector coeffs;  // a_0..a_{k-1}
};

Felt eval_twisted(const Field& f, const TwistParams& params, const TwistedPoly& poly, Felt x);

/// Row i evaluates x^i (plus eta x^{k-1+t} for i = h) at every point, times v.
Matrix tgrs_generator(const TwistParams& params, const EvaluationSet& points, std::span<const Felt> multipliers);
/// TGRS generator with one extra column carrying f_h: 1 in row h, 0 elsewhere.
Matrix etgrs_generator(const TwistParams& params, const EvaluationSet& points, std::span<const Felt> multipliers);
LinearCode tgrs_code(const TwistParams& params, const EvaluationSet& points, std::span<const Felt> multipliers);
LinearCode etgrs_code(const TwistParams& params, const EvaluationSet& points, std::span<const Felt> multipliers);

/// L_m = sum_l u_l alpha_l^{n-1+m}. L_0 = 1 and L_1 = sum of the points.
Felt compute_Lm(const EvaluationSet& points, std::size_t m);
/// L_0, ..., L_{count-1}.
Vector power_sum_constants(const EvaluationSet& points, std::size_t count);

/// Coefficients c_1..c_{k-h-1} of the tail terms -c_m x^{n-h-1-m} in the
/// hook dual polynomial.
enum class HookTail {
    /// c_r = L_r - sum_{m<r} c_m L_{r-m}, i.e. c_m = (-1)^{m+1} e_m(alpha).
    /// Annihilates the code for every choice of points.
    elementary,
    /// c_m = L_m. Agrees with `elementary` when k-h-1 <= 1, or when
    /// L_1..L_{k-h-2} all vanish (e.g. alpha = all of GF(q)); otherwise the
    /// resulting matrix is not a parity check.
    power_sum,
};

Vector hook_tail(const TwistParams& params, const EvaluationSet& points, HookTail tail = HookTail::elementary);

/// tildeL = sum_{m=1}^{k-h-1} c_m L_{k+t-h-1-m} - eta^{-1} (1 + eta L_{k+t-h-1}).
Felt compute_tildeL(const TwistParams& params, const EvaluationSet& points, HookTail tail = HookTail::elementary);

/// Polynomial basis of the dual twisted space, coefficients low degree first,
/// each of length n:
///   x^0, ..., x^{n-k-t-1},
///   x^{n-h-1} + tildeL x^{n-k-t} - sum_m c_m x^{n-h-1-m},
///   x^{n-k-t+j} - L_j x^{n-k-t}   for j = 1..t-1.
struct DualPolyBasis {
    Vector power_sums;  // L_0..L_{k+t-1}
    Vector tail;        // c_1..c_{k-h-1}
    Felt tilde_l = 0;
    std::size_t monomials = 0;      // n-k-t
    std::vector<Vector> polys;      // all n-k basis polynomials in the order above

    /// The t trailing polynomials (hook polynomial first).
    std::span<const Vector> hook_polys() const { return std::span(polys).subspan(monomials); }
};

DualPolyBasis dual_poly_basis(const TwistParams& params, const EvaluationSet& points,
                              HookTail tail = HookTail::elementary);

/// (n-k) x n matrix whose column j is (u_j / v_j) (g(alpha_j))_g over the
/// dual basis polynomials g. A parity-check matrix of the TGRS code (length n).
Matrix tgrs_parity_check(const TwistParams& params, const EvaluationSet& points, std::span<const Felt> multipliers,
                         HookTail tail = HookTail::elementary);

/// Dual-code words of the extended code used by the weight-one argument:
///   c_s = ((u_j / v_j) alpha_j^s)_j followed by an extra coordinate,
/// for s = n-k-t-1 (extra 0), n-k-t (extra -eta), n-k-t+1 (extra -eta sum(alpha)).
/// Requires n >= k+t+1.
std::vector<Vector> extended_dual_words(const TwistParams& params, const EvaluationSet& points,
                                        std::span<const Felt> multipliers);

}  // namespace twistcert
