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

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace twistcert {

/// Canonical integer encoding of a field element in [0, q).
///
/// For prime fields this is the residue. For GF(p^m) it is the base-p digit
/// vector of the polynomial representative, constant term least significant,
/// so 0 and 1 always encode themselves and x encodes as p.
using Felt = std::uint32_t;

/// Largest supported field order.
inline constexpr std::uint32_t kMaxFieldOrder = 1u << 16;

struct FieldSpec {
    std::uint32_t p = 2;
    std::uint32_t m = 1;
    /// Monic modulus coefficients c_m, ..., c_0 (most significant first).
    /// Empty for prime fields. Empty with m > 1 selects the default modulus.
    std::vector<std::uint32_t> modulus;

    bool operator==(const FieldSpec&) const = default;
};

bool is_prime(std::uint64_t n);

/// (p, m) with q = p^m, or nullopt when q is not a prime power.
std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q);

/// Exhaustive irreducibility test over GF(p): no monic factor of degree
/// 1..deg/2 divides the polynomial. Coefficients most significant first.
bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& poly);

/// Lexicographically smallest monic irreducible polynomial of degree m over
/// GF(p), comparing c_{m-1}, ..., c_0 as base-p digits (c_{m-1} most
/// significant). Returned most significant first.
std::vector<std::uint32_t> default_modulus(std::uint32_t p, std::uint32_t m);

/// Parses `p`, `p^m` or `p^m:c_m,...,c_0`.
FieldSpec parse_field_spec(std::string_view text);

/// Finite field GF(p^m) with log/antilog multiplication tables.
///
/// Immutable after construction; share it through FieldPtr.
class Field {
public:
    /// Validates the spec (prime p, irreducible monic modulus of degree m,
    /// p^m <= kMaxFieldOrder) and builds the tables. Throws
    /// std::invalid_argument on any violation.
    explicit Field(FieldSpec spec);

    const FieldSpec& spec() const { return spec_; }
    std::uint32_t characteristic() const { return spec_.p; }
    std::uint32_t degree() const { return spec_.m; }
    std::uint32_t order() const { return q_; }

    /// Canonical spec string; always carries the explicit modulus for m > 1.
    std::string to_string() const;

    bool contains(Felt a) const { return a < q_; }

    Felt add(Felt a, Felt b) const {
        if (spec_.m == 1) {
            const Felt s = a + b;
            return s >= q_ ? s - q_ : s;
        }
        if (spec_.p == 2) return a ^ b;
        return add_digits(a, b);
    }
    Felt neg(Felt a) const {
        if (spec_.m == 1) return a == 0 ? 0 : q_ - a;
        if (spec_.p == 2) return a;
        return neg_digits(a);
    }
    Felt sub(Felt a, Felt b) const { return add(a, neg(b)); }
    Felt mul(Felt a, Felt b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }
    /// Throws std::domain_error for a == 0.
    Felt inv(Felt a) const;
    Felt div(Felt a, Felt b) const { return mul(a, inv(b)); }
    /// a^e with 0^0 = 1.
    Felt pow(Felt a, std::uint64_t e) const;

    /// Image of an integer under Z -> GF(p) -> GF(q).
    Felt from_int(std::int64_t v) const;

    /// A fixed generator of the multiplicative group.
    Felt primitive_element() const { return exp_[1]; }

    /// Sum of b^l over all b in GF(q), l >= 1: -1 if (q-1) | l, else 0.
    /// Throws std::invalid_argument for l == 0.
    Felt power_sum_all(std::uint64_t l) const;

    /// All elements in canonical order 0, 1, ..., q-1.
    std::vector<Felt> elements() const;

private:
    Felt add_digits(Felt a, Felt b) const;
    Felt neg_digits(Felt a) const;
    Felt mul_slow(Felt a, Felt b) const;

    FieldSpec spec_;
    std::uint32_t q_ = 0;
    std::vector<std::uint32_t> low_modulus_;  // c_0, ..., c_m
    std::vector<Felt> exp_;                   // length 2(q-1)
    std::vector<std::uint32_t> log_;          // log_[0] unused
};

using FieldPtr = std::shared_ptr<const Field>;

/// field_new: the only way the rest of the library obtains a field.
FieldPtr make_field(FieldSpec spec);
FieldPtr make_field(std::string_view spec_text);

}  // namespace twistcert
