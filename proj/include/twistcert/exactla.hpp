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

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "twistcert/gf.hpp"

namespace twistcert {

/// Vectors are plain element sequences; the field travels alongside.
using Vector = std::vector<Felt>;

/// Dense row-major matrix over a shared field.
class Matrix {
public:
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols);
    /// Every row must have exactly `cols` entries, all in the field.
    static Matrix from_rows(FieldPtr field, std::size_t cols, const std::vector<Vector>& rows);
    static Matrix from_rows(FieldPtr field, std::size_t cols, std::initializer_list<Vector> rows) {
        return from_rows(std::move(field), cols, std::vector<Vector>(rows));
    }
    static Matrix identity(FieldPtr field, std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Field& field() const { return *field_; }
    const FieldPtr& field_ptr() const { return field_; }

    Felt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Felt operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<Felt> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const Felt> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    Vector row_vector(std::size_t r) const { return Vector(row(r).begin(), row(r).end()); }
    std::vector<Vector> to_rows() const;

    bool is_zero() const;

    /// Entry-wise equality; fields must be the same object or equal specs.
    bool operator==(const Matrix& other) const;

private:
    FieldPtr field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Felt> data_;
};

struct Echelon {
    Matrix reduced;               // same shape as the input, zero rows last
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;  // strictly increasing
};

/// Reduced row echelon form. Pivot search takes the first nonzero entry.
Echelon rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Basis of {x : M x^T = 0}, one basis vector per free column.
Matrix nullspace_basis(const Matrix& m);

/// Same span. Throws std::invalid_argument on field or width mismatch.
bool rowspace_equal(const Matrix& a, const Matrix& b);

Matrix multiply(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& m);
/// Rows of `top` followed by rows of `bottom`.
Matrix row_stack(const Matrix& top, const Matrix& bottom);
Matrix drop_zero_rows(const Matrix& m);
bool in_rowspace(std::span<const Felt> v, const Matrix& m);

Felt dot(const Field& f, std::span<const Felt> a, std::span<const Felt> b);
Vector hadamard(const Field& f, std::span<const Felt> a, std::span<const Felt> b);
Vector scale(const Field& f, Felt c, std::span<const Felt> a);
/// a + c*b
Vector axpy(const Field& f, std::span<const Felt> a, Felt c, std::span<const Felt> b);
std::size_t hamming_weight(std::span<const Felt> v);

/// Incrementally maintained reduced echelon basis of a growing span.
///
/// Rows are kept fully reduced (leading 1, zeros above and below every pivot)
/// so `matrix()` is already the RREF of everything inserted.
class EchelonBasis {
public:
    EchelonBasis(FieldPtr field, std::size_t cols);

    /// Inserts v; returns true when it was independent of the current span.
    bool insert(std::span<const Felt> v);
    bool contains(std::span<const Felt> v) const;
    /// v minus its projection on the span along pivot columns.
    Vector reduce(std::span<const Felt> v) const;

    std::size_t rank() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    bool full() const { return rows_.size() == cols_; }
    /// Rows sorted by pivot column; this is the RREF of the span.
    Matrix matrix() const;
    const std::vector<std::size_t>& pivots() const { return pivots_; }

private:
    FieldPtr field_;
    std::size_t cols_;
    std::vector<Vector> rows_;           // sorted by pivot
    std::vector<std::size_t> pivots_;
};

}  // namespace twistcert
