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
#include <optional>
#include <span>
#include <vector>

#include "twistcert/exactla.hpp"

namespace twistcert {

/// A linear [n, k] code, stored by the RREF of a generator matrix.
///
/// Two codes are equal exactly when their stored generators are equal.
/// Dimension zero is allowed and has an empty (0 x n) generator.
class LinearCode {
public:
    /// Row-reduces `generator`; dependent rows are dropped.
    explicit LinearCode(const Matrix& generator);
    static LinearCode zero(FieldPtr field, std::size_t n);
    static LinearCode full_space(FieldPtr field, std::size_t n);

    std::size_t length() const { return generator_.cols(); }
    std::size_t dimension() const { return generator_.rows(); }
    const Matrix& generator() const { return generator_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    const Field& field() const { return generator_.field(); }
    const FieldPtr& field_ptr() const { return generator_.field_ptr(); }

    bool contains(std::span<const Felt> word) const;
    /// message (length k) times the generator.
    Vector encode(std::span<const Felt> message) const;

    bool operator==(const LinearCode& other) const { return generator_ == other.generator_; }

private:
    Matrix generator_;
    std::vector<std::size_t> pivots_;
};

/// Dual under the standard inner product; dimension n - k.
LinearCode dual(const LinearCode& code);

/// Span of all products of basis rows. Throws on length or field mismatch.
LinearCode schur_product(const LinearCode& a, const LinearCode& b);
LinearCode schur_square(const LinearCode& code);

inline constexpr std::uint64_t kDefaultDistanceCap = std::uint64_t{1} << 24;

struct DistanceResult {
    std::optional<std::size_t> distance;  // empty: q^k exceeded the cap, or k = 0
    Vector witness;                       // a codeword attaining the distance
    std::uint64_t enumerated = 0;         // messages visited
};

/// Exact minimum distance when q^k <= cap.
///
/// Messages are visited in lexicographic order of their canonical encodings,
/// restricted to those whose first nonzero entry is 1; every other nonzero
/// message is a scalar multiple of one of these and has the same weight.
DistanceResult min_distance_exhaustive(const LinearCode& code, std::uint64_t cap = kDefaultDistanceCap);

/// Deletes the given coordinates (0-based) and re-reduces.
LinearCode puncture(const LinearCode& code, std::span<const std::size_t> positions);

/// Phi_{perm, scale}: (c_0, ..., c_{n-1}) -> (scale_0 c_{perm_0}, ..., scale_{n-1} c_{perm_{n-1}}).
struct MonomialMap {
    std::vector<std::size_t> perm;
    Vector scale;

    /// Throws std::invalid_argument unless perm is a bijection of {0..n-1}
    /// and every scale entry is a nonzero field element.
    void validate(const Field& f, std::size_t n) const;
    /// Same permutation with each scale entry inverted.
    MonomialMap inverse_scaled(const Field& f) const;
    Vector apply(const Field& f, std::span<const Felt> word) const;
};

LinearCode apply_monomial_map(const LinearCode& code, const MonomialMap& map);

}  // namespace twistcert
