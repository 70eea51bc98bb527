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

#include "twistcert/gf.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace twistcert {

namespace {

using Poly = std::vector<std::uint32_t>;  // low degree first

// Remainder of a modulo monic b, both low degree first, over GF(p).
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        const std::uint64_t c = a.back();
        const std::size_t shift = a.size() - 1 - db;
        if (c != 0) {
            for (std::size_t i = 0; i <= db; ++i) {
                const std::uint64_t sub = (c * b[i]) % p;
                a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
            }
        }
        a.pop_back();
    }
    return a;
}

bool all_zero(const Poly& a) {
    return std::all_of(a.begin(), a.end(), [](std::uint32_t c) { return c == 0; });
}

std::uint64_t ipow(std::uint64_t base, std::uint32_t e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= base;
    return r;
}

std::uint32_t parse_uint(std::string_view s, const char* what) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    std::uint32_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
        throw std::invalid_argument(std::string("field spec: bad ") + what + " '" + std::string(s) + "'");
    }
    return v;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q) {
    if (q < 2 || q > 0xffffffffULL) return std::nullopt;
    std::uint64_t p = 2;
    while (q % p != 0) ++p;
    std::uint32_t m = 0;
    while (q % p == 0) {
        q /= p;
        ++m;
    }
    if (q != 1) return std::nullopt;
    return std::pair{static_cast<std::uint32_t>(p), m};
}

bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& poly) {
    if (poly.empty() || poly.front() % p == 0) return false;
    Poly low(poly.rbegin(), poly.rend());
    for (auto& c : low) c %= p;
    const std::size_t deg = low.size() - 1;
    if (deg == 0) return false;
    if (deg == 1) return true;
    for (std::size_t e = 1; e <= deg / 2; ++e) {
        const std::uint64_t count = ipow(p, static_cast<std::uint32_t>(e));
        Poly divisor(e + 1, 0);
        divisor[e] = 1;
        for (std::uint64_t code = 0; code < count; ++code) {
            std::uint64_t c = code;
            for (std::size_t i = 0; i < e; ++i) {
                divisor[i] = static_cast<std::uint32_t>(c % p);
                c /= p;
            }
            if (all_zero(poly_mod(low, divisor, p))) return false;
        }
    }
    return true;
}

std::vector<std::uint32_t> default_modulus(std::uint32_t p, std::uint32_t m) {
    if (!is_prime(p)) throw std::invalid_argument("field spec: p=" + std::to_string(p) + " is not prime");
    if (m < 2) return {};
    const std::uint64_t count = ipow(p, m);
    std::vector<std::uint32_t> poly(m + 1, 0);
    poly[0] = 1;
    for (std::uint64_t code = 0; code < count; ++code) {
        // code's base-p digits, most significant first, are c_{m-1}..c_0.
        std::uint64_t c = code;
        for (std::uint32_t i = 0; i < m; ++i) {
            poly[m - i] = static_cast<std::uint32_t>(c % p);
            c /= p;
        }
        if (is_irreducible(p, poly)) return poly;
    }
    throw std::logic_error("no irreducible polynomial found");
}

FieldSpec parse_field_spec(std::string_view text) {
    FieldSpec spec;
    const auto colon = text.find(':');
    const std::string_view head = text.substr(0, colon);
    const auto caret = head.find('^');
    spec.p = parse_uint(head.substr(0, caret), "characteristic");
    spec.m = caret == std::string_view::npos ? 1 : parse_uint(head.substr(caret + 1), "degree");
    if (colon != std::string_view::npos) {
        std::string_view rest = text.substr(colon + 1);
        while (true) {
            const auto comma = rest.find(',');
            spec.modulus.push_back(parse_uint(rest.substr(0, comma), "modulus coefficient"));
            if (comma == std::string_view::npos) break;
            rest.remove_prefix(comma + 1);
        }
    }
    return spec;
}

Field::Field(FieldSpec spec) : spec_(std::move(spec)) {
    const std::uint32_t p = spec_.p;
    const std::uint32_t m = spec_.m;
    if (!is_prime(p)) throw std::invalid_argument("field spec: p=" + std::to_string(p) + " is not prime");
    if (m < 1) throw std::invalid_argument("field spec: degree must be >= 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        q *= p;
        if (q > kMaxFieldOrder) {
            throw std::invalid_argument("field spec: order exceeds " + std::to_string(kMaxFieldOrder));
        }
    }
    q_ = static_cast<std::uint32_t>(q);

    if (m == 1) {
        if (!spec_.modulus.empty()) throw std::invalid_argument("field spec: prime field takes no modulus");
    } else {
        if (spec_.modulus.empty()) spec_.modulus = default_modulus(p, m);
        if (spec_.modulus.size() != m + 1) {
            throw std::invalid_argument("field spec: modulus must have degree " + std::to_string(m));
        }
        if (spec_.modulus.front() != 1) throw std::invalid_argument("field spec: modulus must be monic");
        for (auto c : spec_.modulus) {
            if (c >= p) throw std::invalid_argument("field spec: modulus coefficient out of range");
        }
        if (!is_irreducible(p, spec_.modulus)) {
            throw std::invalid_argument("field spec: modulus " + to_string() + " is reducible");
        }
        low_modulus_.assign(spec_.modulus.rbegin(), spec_.modulus.rend());
    }

    // Find a generator of GF(q)^* by order computation with the slow path.
    const std::uint32_t group = q_ - 1;
    Felt gen = 1;
    if (q_ > 2) {
        for (Felt g = 2; g < q_; ++g) {
            std::uint32_t order = 1;
            for (Felt x = g; x != 1; x = mul_slow(x, g)) ++order;
            if (order == group) {
                gen = g;
                break;
            }
        }
    }
    exp_.resize(2 * static_cast<std::size_t>(group));
    log_.assign(q_, 0);
    Felt x = 1;
    for (std::uint32_t i = 0; i < group; ++i) {
        exp_[i] = x;
        exp_[i + group] = x;
        log_[x] = i;
        x = mul_slow(x, gen);
    }
    if (x != 1) throw std::logic_error("multiplicative group construction failed");
}

std::string Field::to_string() const {
    std::string out = std::to_string(spec_.p);
    if (spec_.m == 1) return out;
    out += "^" + std::to_string(spec_.m) + ":";
    for (std::size_t i = 0; i < spec_.modulus.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(spec_.modulus[i]);
    }
    return out;
}

Felt Field::add_digits(Felt a, Felt b) const {
    const std::uint32_t p = spec_.p;
    Felt r = 0;
    Felt place = 1;
    for (std::uint32_t i = 0; i < spec_.m; ++i) {
        r += ((a % p + b % p) % p) * place;
        a /= p;
        b /= p;
        place *= p;
    }
    return r;
}

Felt Field::neg_digits(Felt a) const {
    const std::uint32_t p = spec_.p;
    Felt r = 0;
    Felt place = 1;
    for (std::uint32_t i = 0; i < spec_.m; ++i) {
        r += ((p - a % p) % p) * place;
        a /= p;
        place *= p;
    }
    return r;
}

Felt Field::mul_slow(Felt a, Felt b) const {
    const std::uint32_t p = spec_.p;
    const std::uint32_t m = spec_.m;
    if (m == 1) return static_cast<Felt>((static_cast<std::uint64_t>(a) * b) % p);
    Poly pa(m), pb(m);
    for (std::uint32_t i = 0; i < m; ++i) {
        pa[i] = a % p;
        pb[i] = b % p;
        a /= p;
        b /= p;
    }
    Poly prod(2 * m - 1, 0);
    for (std::uint32_t i = 0; i < m; ++i) {
        for (std::uint32_t j = 0; j < m; ++j) {
            prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(pa[i]) * pb[j]) % p);
        }
    }
    prod = poly_mod(std::move(prod), low_modulus_, p);
    Felt r = 0;
    for (std::size_t i = prod.size(); i-- > 0;) r = r * p + prod[i];
    return r;
}

Felt Field::inv(Felt a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    const std::uint32_t group = q_ - 1;
    return exp_[(group - log_[a]) % group];
}

Felt Field::pow(Felt a, std::uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    const std::uint64_t group = q_ - 1;
    return exp_[(log_[a] * (e % group)) % group];
}

Felt Field::from_int(std::int64_t v) const {
    const std::int64_t p = spec_.p;
    return static_cast<Felt>(((v % p) + p) % p);
}

Felt Field::power_sum_all(std::uint64_t l) const {
    if (l == 0) throw std::invalid_argument("power_sum_all: exponent must be positive");
    return l % (q_ - 1) == 0 ? neg(1) : 0;
}

std::vector<Felt> Field::elements() const {
    std::vector<Felt> out(q_);
    for (Felt a = 0; a < q_; ++a) out[a] = a;
    return out;
}

FieldPtr make_field(FieldSpec spec) { return std::make_shared<const Field>(std::move(spec)); }

FieldPtr make_field(std::string_view spec_text) { return make_field(parse_field_spec(spec_text)); }

}  // namespace twistcert
