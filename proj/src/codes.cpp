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

#include "twistcert/codes.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace twistcert {

namespace {

Matrix leading_rows(const Matrix& m, std::size_t count) {
    Matrix out(m.field_ptr(), count, m.cols());
    for (std::size_t r = 0; r < count; ++r) std::ranges::copy(m.row(r), out.row(r).begin());
    return out;
}

void require_compatible(const LinearCode& a, const LinearCode& b, const char* what) {
    if (a.length() != b.length()) throw std::invalid_argument(std::string(what) + ": length mismatch");
    if (!(a.field().spec() == b.field().spec())) throw std::invalid_argument(std::string(what) + ": field mismatch");
}

std::uint64_t saturating_pow(std::uint64_t base, std::size_t e) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < e; ++i) {
        if (r > std::numeric_limits<std::uint64_t>::max() / base) return std::numeric_limits<std::uint64_t>::max();
        r *= base;
    }
    return r;
}

}  // namespace

LinearCode::LinearCode(const Matrix& generator) : generator_(generator) {
    Echelon e = rref(generator);
    generator_ = leading_rows(e.reduced, e.rank);
    pivots_ = std::move(e.pivots);
}

LinearCode LinearCode::zero(FieldPtr field, std::size_t n) { return LinearCode(Matrix(std::move(field), 0, n)); }

LinearCode LinearCode::full_space(FieldPtr field, std::size_t n) {
    return LinearCode(Matrix::identity(std::move(field), n));
}

bool LinearCode::contains(std::span<const Felt> word) const {
    if (word.size() != length()) throw std::invalid_argument("contains: length mismatch");
    // In RREF the coefficients of a member are its entries at the pivots.
    const Field& f = field();
    Vector w(word.begin(), word.end());
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
        const Felt c = w[pivots_[i]];
        if (c == 0) continue;
        const auto r = generator_.row(i);
        for (std::size_t j = 0; j < w.size(); ++j) w[j] = f.sub(w[j], f.mul(c, r[j]));
    }
    return std::all_of(w.begin(), w.end(), [](Felt x) { return x == 0; });
}

Vector LinearCode::encode(std::span<const Felt> message) const {
    if (message.size() != dimension()) throw std::invalid_argument("encode: message length must equal dimension");
    const Field& f = field();
    Vector out(length(), 0);
    for (std::size_t i = 0; i < message.size(); ++i) {
        if (message[i] == 0) continue;
        const auto r = generator_.row(i);
        for (std::size_t j = 0; j < out.size(); ++j) out[j] = f.add(out[j], f.mul(message[i], r[j]));
    }
    return out;
}

LinearCode dual(const LinearCode& code) { return LinearCode(nullspace_basis(code.generator())); }

LinearCode schur_product(const LinearCode& a, const LinearCode& b) {
    require_compatible(a, b, "schur_product");
    const Field& f = a.field();
    const bool square = a == b;
    EchelonBasis span(a.field_ptr(), a.length());
    for (std::size_t i = 0; i < a.dimension() && !span.full(); ++i) {
        for (std::size_t j = square ? i : 0; j < b.dimension() && !span.full(); ++j) {
            span.insert(hadamard(f, a.generator().row(i), b.generator().row(j)));
        }
    }
    return LinearCode(span.matrix());
}

LinearCode schur_square(const LinearCode& code) { return schur_product(code, code); }

DistanceResult min_distance_exhaustive(const LinearCode& code, std::uint64_t cap) {
    DistanceResult out;
    const std::size_t k = code.dimension();
    const std::size_t n = code.length();
    const Field& f = code.field();
    const std::uint32_t q = f.order();
    if (k == 0 || saturating_pow(q, k) > cap) return out;

    const Matrix& g = code.generator();
    std::size_t best = n + 1;
    Vector word(n);
    std::vector<Felt> digits(k);
    for (std::size_t lead = 0; lead < k && best > 1; ++lead) {
        std::ranges::fill(digits, 0);
        digits[lead] = 1;
        std::ranges::copy(g.row(lead), word.begin());
        while (true) {
            ++out.enumerated;
            const std::size_t w = hamming_weight(word);
            if (w < best) {
                best = w;
                out.witness = word;
                if (best == 1) break;
            }
            // Odometer over the free digits, last digit fastest.
            bool advanced = false;
            for (std::size_t pos = k - 1; pos > lead && !advanced; --pos) {
                const Felt old = digits[pos];
                const Felt next = old + 1 == q ? 0 : old + 1;
                digits[pos] = next;
                const Felt delta = f.sub(next, old);
                const auto r = g.row(pos);
                for (std::size_t j = 0; j < n; ++j) {
                    if (r[j] != 0) word[j] = f.add(word[j], f.mul(delta, r[j]));
                }
                advanced = next != 0;
            }
            if (!advanced) break;
        }
    }
    out.distance = best;
    return out;
}

LinearCode puncture(const LinearCode& code, std::span<const std::size_t> positions) {
    const std::size_t n = code.length();
    std::vector<bool> drop(n, false);
    for (auto p : positions) {
        if (p >= n) throw std::invalid_argument("puncture: position " + std::to_string(p) + " out of range");
        drop[p] = true;
    }
    const auto kept = static_cast<std::size_t>(std::count(drop.begin(), drop.end(), false));
    if (kept == 0) throw std::invalid_argument("puncture: cannot delete every coordinate");
    const Matrix& g = code.generator();
    Matrix out(code.field_ptr(), g.rows(), kept);
    for (std::size_t r = 0; r < g.rows(); ++r) {
        std::size_t c = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (!drop[j]) out(r, c++) = g(r, j);
        }
    }
    return LinearCode(out);
}

void MonomialMap::validate(const Field& f, std::size_t n) const {
    if (perm.size() != n || scale.size() != n) throw std::invalid_argument("monomial map: length mismatch");
    std::vector<bool> seen(n, false);
    for (auto p : perm) {
        if (p >= n || seen[p]) throw std::invalid_argument("monomial map: not a permutation");
        seen[p] = true;
    }
    for (auto s : scale) {
        if (s == 0 || !f.contains(s)) throw std::invalid_argument("monomial map: scale entries must be nonzero");
    }
}

MonomialMap MonomialMap::inverse_scaled(const Field& f) const {
    MonomialMap out{perm, scale};
    for (auto& s : out.scale) s = f.inv(s);
    return out;
}

Vector MonomialMap::apply(const Field& f, std::span<const Felt> word) const {
    if (word.size() != perm.size()) throw std::invalid_argument("monomial map: word length mismatch");
    Vector out(word.size());
    for (std::size_t i = 0; i < word.size(); ++i) out[i] = f.mul(scale[i], word[perm[i]]);
    return out;
}

LinearCode apply_monomial_map(const LinearCode& code, const MonomialMap& map) {
    const Field& f = code.field();
    map.validate(f, code.length());
    const Matrix& g = code.generator();
    Matrix out(code.field_ptr(), g.rows(), g.cols());
    for (std::size_t r = 0; r < g.rows(); ++r) {
        const Vector mapped = map.apply(f, g.row(r));
        std::ranges::copy(mapped, out.row(r).begin());
    }
    return LinearCode(out);
}

}  // namespace twistcert
