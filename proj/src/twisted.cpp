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

#include "twistcert/twisted.hpp"

#include <stdexcept>
#include <string>

namespace twistcert {

namespace {

std::string params_text(const TwistParams& p) {
    return "(n=" + std::to_string(p.n) + ", k=" + std::to_string(p.k) + ", t=" + std::to_string(p.t) +
           ", h=" + std::to_string(p.h) + ")";
}

Felt eval_poly(const Field& f, std::span<const Felt> coeffs, Felt x) {
    Felt acc = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = f.add(f.mul(acc, x), coeffs[i]);
    return acc;
}

void require_instance(const TwistParams& params, const EvaluationSet& points, std::span<const Felt> multipliers,
                      bool extended) {
    const Field& f = points.field();
    params.validate(f, extended);
    if (points.size() != params.n) {
        throw std::invalid_argument("twisted code: " + std::to_string(points.size()) + " points given for n=" +
                                    std::to_string(params.n));
    }
    if (multipliers.size() != params.n) throw std::invalid_argument("twisted code: need one multiplier per point");
    for (auto v : multipliers) {
        if (v == 0 || !f.contains(v)) throw std::invalid_argument("twisted code: multipliers must be nonzero");
    }
}

}  // namespace

void TwistParams::validate(const Field& f, bool extended) const {
    const auto fail = [&](const std::string& what) {
        throw std::invalid_argument(what + " violated " + params_text(*this));
    };
    if (eta == 0 || !f.contains(eta)) fail("eta in GF(q)*");
    if (k < 1) fail("k >= 1");
    if (h > k - 1) fail("0 <= h <= k-1");
    if (t < 1) fail("k-1 < k-1+t");
    if (k - 1 + t >= n) fail("k-1+t < n");
    if (n > f.order()) fail("n <= q");
    if (extended && h == 0) {
        throw std::invalid_argument("h>0 required for extended code " + params_text(*this));
    }
}

Felt eval_twisted(const Field& f, const TwistParams& params, const TwistedPoly& poly, Felt x) {
    if (poly.coeffs.size() != params.k) throw std::invalid_argument("eval_twisted: need exactly k coefficients");
    const Felt base = eval_poly(f, poly.coeffs, x);
    const Felt top = f.mul(f.mul(params.eta, poly.coeffs[params.h]), f.pow(x, params.k - 1 + params.t));
    return f.add(base, top);
}

Matrix tgrs_generator(const TwistParams& params, const EvaluationSet& points, std::span<const Felt> multipliers) {
    require_instance(params, points, multipliers, false);
    const Field& f = points.field();
    const std::size_t n = params.n;
    Matrix g(points.field_ptr(), params.k, n);
    for (std::size_t j = 0; j < n; ++j) {
        Felt x = multipliers[j];
        for (std::size_t i = 0; i < params.k; ++i) {
            g(i, j) = x;
            x = f.mul(x, points[j]);
        }
        const Felt twist = f.mul(params.eta, f.mul(multipliers[j], f.pow(points[j], params.k - 1 + params.t)));
        g(params.h, j) = f.add(g(params.h, j), twist);
    }
    return g;
}

Matrix etgrs_generator(const TwistParams& params, const EvaluationSet& points, std::span<const Felt> multipliers) {
    require_instance(params, points, multipliers, true);
    const Matrix base = tgrs_generator(params, points, multipliers);
    Matrix g(points.field_ptr(), params.k, params.n + 1);
    for (std::size_t i = 0; i < params.k; ++i) {
        for (std::size_t j = 0; j < params.n; ++j) g(i, j) = base(i, j);
    }
    g(params.h, params.n) = 1;
    return g;
}

LinearCode tgrs_code(const TwistParams& params, const EvaluationSet& points, std::span<const Felt> multipliers) {
    return LinearCode(tgrs_generator(params, points, multipliers));
}

LinearCode etgrs_code(const TwistParams& params, const EvaluationSet& points, std::span<const Felt> multipliers) {
    return LinearCode(etgrs_generator(params, points, multipliers));
}

Vector power_sum_constants(const EvaluationSet& points, std::size_t count) {
    const Field& f = points.field();
    const std::size_t n = points.size();
    const Vector u = u_vector(points);
    Vector out(count, 0);
    for (std::size_t l = 0; l < n; ++l) {
        Felt x = f.mul(u[l], f.pow(points[l], n - 1));
        for (std::size_t m = 0; m < count; ++m) {
            out[m] = f.add(out[m], x);
            x = f.mul(x, points[l]);
        }
    }
    return out;
}

Felt compute_Lm(const EvaluationSet& points, std::size_t m) { return power_sum_constants(points, m + 1)[m]; }

Vector hook_tail(const TwistParams& params, const EvaluationSet& points, HookTail tail) {
    const Field& f = points.field();
    params.validate(f, false);
    const std::size_t len = params.k - params.h - 1;
    const Vector L = power_sum_constants(points, len + 1);
    Vector c(len, 0);
    for (std::size_t r = 1; r <= len; ++r) {
        Felt value = L[r];
        if (tail == HookTail::elementary) {
            for (std::size_t m = 1; m < r; ++m) value = f.sub(value, f.mul(c[m - 1], L[r - m]));
        }
        c[r - 1] = value;
    }
    return c;
}

Felt compute_tildeL(const TwistParams& params, const EvaluationSet& points, HookTail tail) {
    const Field& f = points.field();
    params.validate(f, false);
    const std::size_t top = params.k + params.t - params.h - 1;
    const Vector L = power_sum_constants(points, top + 1);
    const Vector c = hook_tail(params, points, tail);
    Felt sum = 0;
    for (std::size_t m = 1; m <= c.size(); ++m) sum = f.add(sum, f.mul(c[m - 1], L[top - m]));
    const Felt correction = f.mul(f.inv(params.eta), f.add(1, f.mul(params.eta, L[top])));
    return f.sub(sum, correction);
}

DualPolyBasis dual_poly_basis(const TwistParams& params, const EvaluationSet& points, HookTail tail) {
    const Field& f = points.field();
    params.validate(f, false);
    if (points.size() != params.n) throw std::invalid_argument("dual_poly_basis: point count must equal n");
    const std::size_t n = params.n;
    const std::size_t k = params.k;
    const std::size_t t = params.t;
    const std::size_t h = params.h;

    DualPolyBasis basis;
    basis.power_sums = power_sum_constants(points, k + t);
    basis.tail = hook_tail(params, points, tail);
    basis.tilde_l = compute_tildeL(params, points, tail);
    basis.monomials = n - k - t;

    for (std::size_t i = 0; i < basis.monomials; ++i) {
        Vector g(n, 0);
        g[i] = 1;
        basis.polys.push_back(std::move(g));
    }
    Vector hook(n, 0);
    hook[n - h - 1] = f.add(hook[n - h - 1], 1);
    hook[n - k - t] = f.add(hook[n - k - t], basis.tilde_l);
    for (std::size_t m = 1; m <= basis.tail.size(); ++m) {
        hook[n - h - 1 - m] = f.sub(hook[n - h - 1 - m], basis.tail[m - 1]);
    }
    basis.polys.push_back(std::move(hook));
    for (std::size_t j = 1; j < t; ++j) {
        Vector g(n, 0);
        g[n - k - t + j] = 1;
        g[n - k - t] = f.neg(basis.power_sums[j]);
        basis.polys.push_back(std::move(g));
    }
    return basis;
}

Matrix tgrs_parity_check(const TwistParams& params, const EvaluationSet& points, std::span<const Felt> multipliers,
                         HookTail tail) {
    require_instance(params, points, multipliers, false);
    const Field& f = points.field();
    const DualPolyBasis basis = dual_poly_basis(params, points, tail);
    const Vector u = u_vector(points);
    Matrix H(points.field_ptr(), basis.polys.size(), params.n);
    for (std::size_t j = 0; j < params.n; ++j) {
        const Felt s = f.div(u[j], multipliers[j]);
        for (std::size_t r = 0; r < basis.polys.size(); ++r) H(r, j) = f.mul(s, eval_poly(f, basis.polys[r], points[j]));
    }
    return H;
}

std::vector<Vector> extended_dual_words(const TwistParams& params, const EvaluationSet& points,
                                        std::span<const Felt> multipliers) {
    require_instance(params, points, multipliers, true);
    const std::size_t n = params.n;
    if (n < params.k + params.t + 1) throw std::invalid_argument("extended_dual_words: require n >= k+t+1");
    const Field& f = points.field();
    const Vector u = u_vector(points);
    Felt point_sum = 0;
    for (auto a : points.points()) point_sum = f.add(point_sum, a);
    const std::size_t s0 = n - params.k - params.t - 1;
    const Felt extra[3] = {0, f.neg(params.eta), f.neg(f.mul(params.eta, point_sum))};
    std::vector<Vector> words;
    for (std::size_t w = 0; w < 3; ++w) {
        Vector c(n + 1);
        for (std::size_t j = 0; j < n; ++j) c[j] = f.mul(f.div(u[j], multipliers[j]), f.pow(points[j], s0 + w));
        c[n] = extra[w];
        words.push_back(std::move(c));
    }
    return words;
}

}  // namespace twistcert
