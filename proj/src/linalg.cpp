/*
   Copyright 2026 the foldecode authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.

   v0.1
*/

#include "foldecode/linalg.hpp"

#include <algorithm>

namespace foldecode {

Matrix::Matrix(FieldPtr f, std::size_t rows, std::size_t cols) : f_(std::move(f)), r_(rows), c_(cols)
{
    if (!f_) fail(ErrorKind::InternalError, "matrix without a field");
    d_.assign(r_ * c_, f_->zero());
}

Matrix Matrix::identity(FieldPtr f, std::size_t n)
{
    Matrix m(std::move(f), n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = m.field()->one();
    return m;
}

FieldElement& Matrix::at(std::size_t i, std::size_t j)
{
    if (i >= r_ || j >= c_) fail(ErrorKind::IndexOutOfRange, "matrix index out of range");
    return d_[i * c_ + j];
}

const FieldElement& Matrix::at(std::size_t i, std::size_t j) const
{
    if (i >= r_ || j >= c_) fail(ErrorKind::IndexOutOfRange, "matrix index out of range");
    return d_[i * c_ + j];
}

std::vector<FieldElement> Matrix::apply(const std::vector<FieldElement>& v) const
{
    if (v.size() != c_) fail(ErrorKind::ShapeMismatch, "matrix-vector size mismatch");
    std::vector<FieldElement> out(r_, f_->zero());
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j) out[i] += d_[i * c_ + j] * v[j];
    return out;
}

std::vector<std::size_t> rref_in_place(Matrix& m)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && m.at(sel, col).is_zero()) ++sel;
        if (sel == m.rows()) continue;
        if (sel != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(row, j));
        FieldElement inv = m.at(row, col).inverse();
        for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) = m.at(row, j) * inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            FieldElement factor = m.at(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m.at(i, j) -= factor * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t rank(Matrix m)
{
    return rref_in_place(m).size();
}

std::vector<std::vector<FieldElement>> nullspace_basis(Matrix m)
{
    const FieldPtr& f = m.field();
    std::vector<std::size_t> pivots = rref_in_place(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<std::vector<FieldElement>> basis;
    for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<FieldElement> v(m.cols(), f->zero());
        v[free_col] = f->one();
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m.at(i, free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

AffineSolution solve_affine(Matrix a, const std::vector<FieldElement>& b)
{
    if (b.size() != a.rows()) fail(ErrorKind::ShapeMismatch, "right-hand side length mismatch");
    const FieldPtr& f = a.field();
    std::size_t n = a.cols();

    Matrix aug(f, a.rows(), n + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, n) = b[i];
    }
    std::vector<std::size_t> pivots = rref_in_place(aug);

    AffineSolution out;
    if (!pivots.empty() && pivots.back() == n) return out; // inconsistent
    out.consistent = true;
    out.particular.assign(n, f->zero());
    for (std::size_t i = 0; i < pivots.size(); ++i) out.particular[pivots[i]] = aug.at(i, n);
    out.basis = nullspace_basis(std::move(a));
    return out;
}

} // namespace foldecode
