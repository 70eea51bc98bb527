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

#include "twistcert/exactla.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace twistcert {

namespace {

bool same_field(const Field& a, const Field& b) { return &a == &b || a.spec() == b.spec(); }

void require_same(const Matrix& a, const Matrix& b, const char* what) {
    if (!same_field(a.field(), b.field())) throw std::invalid_argument(std::string(what) + ": field mismatch");
}

}  // namespace

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {
    if (!field_) throw std::invalid_argument("matrix: null field");
}

Matrix Matrix::from_rows(FieldPtr field, std::size_t cols, const std::vector<Vector>& rows) {
    Matrix m(std::move(field), rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) {
            throw std::invalid_argument("matrix: row " + std::to_string(r) + " has length " +
                                        std::to_string(rows[r].size()) + ", expected " + std::to_string(cols));
        }
        for (std::size_t c = 0; c < cols; ++c) {
            if (!m.field().contains(rows[r][c])) throw std::invalid_argument("matrix: entry outside the field");
            m(r, c) = rows[r][c];
        }
    }
    return m;
}

Matrix Matrix::identity(FieldPtr field, std::size_t n) {
    Matrix m(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

std::vector<Vector> Matrix::to_rows() const {
    std::vector<Vector> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back(row_vector(r));
    return out;
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](Felt x) { return x == 0; });
}

bool Matrix::operator==(const Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && same_field(*field_, *other.field_) &&
           data_ == other.data_;
}

Echelon rref(const Matrix& m) {
    const Field& f = m.field();
    Echelon out{m, 0, {}};
    Matrix& a = out.reduced;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t sel = r;
        while (sel < a.rows() && a(sel, c) == 0) ++sel;
        if (sel == a.rows()) continue;
        if (sel != r) {
            auto x = a.row(sel);
            auto y = a.row(r);
            std::swap_ranges(x.begin(), x.end(), y.begin());
        }
        const Felt scale_by = f.inv(a(r, c));
        for (auto& e : a.row(r)) e = f.mul(e, scale_by);
        for (std::size_t i = 0; i < a.rows(); ++i) {
            const Felt factor = a(i, c);
            if (i == r || factor == 0) continue;
            for (std::size_t j = c; j < a.cols(); ++j) a(i, j) = f.sub(a(i, j), f.mul(factor, a(r, j)));
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.rank = r;
    return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Matrix nullspace_basis(const Matrix& m) {
    const Field& f = m.field();
    const Echelon e = rref(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    Matrix out(m.field_ptr(), n - e.rank, n);
    std::size_t row = 0;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        out(row, free) = 1;
        for (std::size_t i = 0; i < e.rank; ++i) out(row, e.pivots[i]) = f.neg(e.reduced(i, free));
        ++row;
    }
    return out;
}

Matrix drop_zero_rows(const Matrix& m) {
    std::vector<Vector> keep;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        const auto row = m.row(r);
        if (std::any_of(row.begin(), row.end(), [](Felt x) { return x != 0; })) keep.push_back(m.row_vector(r));
    }
    return Matrix::from_rows(m.field_ptr(), m.cols(), keep);
}

bool rowspace_equal(const Matrix& a, const Matrix& b) {
    require_same(a, b, "rowspace_equal");
    if (a.cols() != b.cols()) throw std::invalid_argument("rowspace_equal: column count mismatch");
    return drop_zero_rows(rref(a).reduced) == drop_zero_rows(rref(b).reduced);
}

Matrix multiply(const Matrix& a, const Matrix& b) {
    require_same(a, b, "multiply");
    if (a.cols() != b.rows()) throw std::invalid_argument("multiply: inner dimensions differ");
    const Field& f = a.field();
    Matrix out(a.field_ptr(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t l = 0; l < a.cols(); ++l) {
            const Felt x = a(i, l);
            if (x == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = f.add(out(i, j), f.mul(x, b(l, j)));
        }
    }
    return out;
}

Matrix transpose(const Matrix& m) {
    Matrix out(m.field_ptr(), m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = m(i, j);
    return out;
}

Matrix row_stack(const Matrix& top, const Matrix& bottom) {
    require_same(top, bottom, "row_stack");
    if (top.cols() != bottom.cols()) throw std::invalid_argument("row_stack: column count mismatch");
    Matrix out(top.field_ptr(), top.rows() + bottom.rows(), top.cols());
    for (std::size_t i = 0; i < top.rows(); ++i) std::ranges::copy(top.row(i), out.row(i).begin());
    for (std::size_t i = 0; i < bottom.rows(); ++i) std::ranges::copy(bottom.row(i), out.row(top.rows() + i).begin());
    return out;
}

bool in_rowspace(std::span<const Felt> v, const Matrix& m) {
    if (v.size() != m.cols()) throw std::invalid_argument("in_rowspace: length mismatch");
    EchelonBasis basis(m.field_ptr(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) basis.insert(m.row(r));
    return basis.contains(v);
}

Felt dot(const Field& f, std::span<const Felt> a, std::span<const Felt> b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    Felt s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s = f.add(s, f.mul(a[i], b[i]));
    return s;
}

Vector hadamard(const Field& f, std::span<const Felt> a, std::span<const Felt> b) {
    if (a.size() != b.size()) throw std::invalid_argument("hadamard: length mismatch");
    Vector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.mul(a[i], b[i]);
    return out;
}

Vector scale(const Field& f, Felt c, std::span<const Felt> a) {
    Vector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.mul(c, a[i]);
    return out;
}

Vector axpy(const Field& f, std::span<const Felt> a, Felt c, std::span<const Felt> b) {
    if (a.size() != b.size()) throw std::invalid_argument("axpy: length mismatch");
    Vector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.add(a[i], f.mul(c, b[i]));
    return out;
}

std::size_t hamming_weight(std::span<const Felt> v) {
    return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](Felt x) { return x != 0; }));
}

EchelonBasis::EchelonBasis(FieldPtr field, std::size_t cols) : field_(std::move(field)), cols_(cols) {
    if (!field_) throw std::invalid_argument("echelon basis: null field");
}

Vector EchelonBasis::reduce(std::span<const Felt> v) const {
    if (v.size() != cols_) throw std::invalid_argument("echelon basis: length mismatch");
    const Field& f = *field_;
    Vector w(v.begin(), v.end());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Felt c = w[pivots_[i]];
        if (c == 0) continue;
        const Vector& r = rows_[i];
        for (std::size_t j = pivots_[i]; j < cols_; ++j) {
            if (r[j] != 0) w[j] = f.sub(w[j], f.mul(c, r[j]));
        }
    }
    return w;
}

bool EchelonBasis::contains(std::span<const Felt> v) const {
    const Vector w = reduce(v);
    return std::all_of(w.begin(), w.end(), [](Felt x) { return x == 0; });
}

bool EchelonBasis::insert(std::span<const Felt> v) {
    if (full()) {
        if (v.size() != cols_) throw std::invalid_argument("echelon basis: length mismatch");
        return false;
    }
    const Field& f = *field_;
    Vector w = reduce(v);
    const auto lead = std::find_if(w.begin(), w.end(), [](Felt x) { return x != 0; });
    if (lead == w.end()) return false;
    const std::size_t p = static_cast<std::size_t>(lead - w.begin());
    const Felt s = f.inv(*lead);
    for (std::size_t j = p; j < cols_; ++j) w[j] = f.mul(s, w[j]);
    for (auto& r : rows_) {
        const Felt c = r[p];
        if (c == 0) continue;
        for (std::size_t j = p; j < cols_; ++j) {
            if (w[j] != 0) r[j] = f.sub(r[j], f.mul(c, w[j]));
        }
    }
    const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p);
    const auto idx = pos - pivots_.begin();
    pivots_.insert(pos, p);
    rows_.insert(rows_.begin() + idx, std::move(w));
    return true;
}

Matrix EchelonBasis::matrix() const { return Matrix::from_rows(field_, cols_, rows_); }

}  // namespace twistcert
