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

#ifndef FOLDECODE_LINALG_HPP
#define FOLDECODE_LINALG_HPP

#include <cstddef>
#include <vector>

#include "foldecode/gf.hpp"

namespace foldecode {

/* dense row-major matrix over GF(q) */
class Matrix {
  public:
    Matrix() = default;
    Matrix(FieldPtr f, std::size_t rows, std::size_t cols);

    static Matrix identity(FieldPtr f, std::size_t n);

    const FieldPtr& field() const { return f_; }
    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }

    FieldElement& at(std::size_t i, std::size_t j);
    const FieldElement& at(std::size_t i, std::size_t j) const;

    std::vector<FieldElement> apply(const std::vector<FieldElement>& v) const;

  private:
    FieldPtr f_;
    std::size_t r_ = 0, c_ = 0;
    std::vector<FieldElement> d_;
};

/* reduce to the canonical reduced row echelon form in place; pivots are the
   first nonzero entries scanning columns left to right, rows top down;
   returns the pivot column indices in increasing order */
std::vector<std::size_t> rref_in_place(Matrix& m);

std::size_t rank(Matrix m);

/* canonical kernel basis: one vector per free column in increasing column
   order, with unit coordinate at its free column */
std::vector<std::vector<FieldElement>> nullspace_basis(Matrix m);

struct AffineSolution {
    bool consistent = false;
    std::vector<FieldElement> particular;           // one solution of A x = b
    std::vector<std::vector<FieldElement>> basis;   // kernel basis of A
};

AffineSolution solve_affine(Matrix a, const std::vector<FieldElement>& b);

} // namespace foldecode

#endif
