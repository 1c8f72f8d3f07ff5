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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "foldecode/linalg.hpp"

using namespace foldecode;

namespace {

Matrix random_matrix(const FieldPtr& f, std::size_t r, std::size_t c, std::mt19937_64& rng)
{
    Matrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = f->element(rng() % f->order());
    return m;
}

bool all_zero(const std::vector<FieldElement>& v)
{
    for (const FieldElement& e : v)
        if (!e.is_zero()) return false;
    return true;
}

} // namespace

TEST_CASE("row reduction reaches the canonical echelon form")
{
    FieldPtr f2 = FieldSpec::make(2, 1);
    Matrix m(f2, 3, 3);
    /* rows (0 1 1), (1 1 0), (1 0 1); the third is the sum of the first two */
    unsigned bits[3][3] = {{0, 1, 1}, {1, 1, 0}, {1, 0, 1}};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) m.at(i, j) = f2->element(bits[i][j]);

    std::vector<std::size_t> pivots = rref_in_place(m);
    CHECK(pivots == std::vector<std::size_t>{0, 1});
    unsigned expect[3][3] = {{1, 0, 1}, {0, 1, 1}, {0, 0, 0}};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) CHECK(m.at(i, j) == f2->element(expect[i][j]));
}

TEST_CASE("rank plus nullity equals the column count")
{
    FieldPtr f16 = FieldSpec::make(2, 4);
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
        Matrix m = random_matrix(f16, r, c, rng);
        std::size_t rk = rank(m);
        auto basis = nullspace_basis(m);
        CHECK(rk + basis.size() == c);
        for (const auto& v : basis) CHECK(all_zero(m.apply(v)));
    }
}

TEST_CASE("kernel basis vectors are canonical per free column")
{
    FieldPtr f4 = FieldSpec::make(2, 2);
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 40; ++trial) {
        Matrix m = random_matrix(f4, 3, 5, rng);
        Matrix reduced = m;
        std::vector<std::size_t> pivots = rref_in_place(reduced);
        std::vector<bool> is_pivot(5, false);
        for (std::size_t p : pivots) is_pivot[p] = true;

        auto basis = nullspace_basis(m);
        std::size_t bi = 0;
        for (std::size_t col = 0; col < 5; ++col) {
            if (is_pivot[col]) continue;
            REQUIRE(bi < basis.size());
            CHECK(basis[bi][col].is_one());
            /* other free coordinates vanish */
            for (std::size_t other = 0; other < 5; ++other)
                if (!is_pivot[other] && other != col) CHECK(basis[bi][other].is_zero());
            ++bi;
        }
    }
}

TEST_CASE("affine solve returns a particular solution plus the kernel")
{
    FieldPtr f9 = FieldSpec::make(3, 2);
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
        Matrix a = random_matrix(f9, r, c, rng);
        std::vector<FieldElement> x0;
        for (std::size_t j = 0; j < c; ++j) x0.push_back(f9->element(rng() % 9));
        std::vector<FieldElement> b = a.apply(x0);

        AffineSolution sol = solve_affine(a, b);
        REQUIRE(sol.consistent);
        CHECK(a.apply(sol.particular) == b);
        for (const auto& v : sol.basis) {
            std::vector<FieldElement> shifted = sol.particular;
            for (std::size_t j = 0; j < c; ++j) shifted[j] += v[j];
            CHECK(a.apply(shifted) == b);
        }
        /* x0 lies in the affine set: x0 - particular is in the kernel */
        std::vector<FieldElement> diff(c, f9->zero());
        for (std::size_t j = 0; j < c; ++j) diff[j] = x0[j] - sol.particular[j];
        CHECK(all_zero(a.apply(diff)));
    }
}

TEST_CASE("inconsistent systems are reported not solved")
{
    FieldPtr f2 = FieldSpec::make(2, 1);
    Matrix a(f2, 2, 2); // zero matrix
    std::vector<FieldElement> b{f2->one(), f2->zero()};
    AffineSolution sol = solve_affine(a, b);
    CHECK_FALSE(sol.consistent);

    /* duplicated row with contradictory right-hand sides */
    Matrix a2(f2, 2, 1);
    a2.at(0, 0) = f2->one();
    a2.at(1, 0) = f2->one();
    AffineSolution sol2 = solve_affine(a2, {f2->one(), f2->zero()});
    CHECK_FALSE(sol2.consistent);
}

TEST_CASE("identity application and shape errors")
{
    FieldPtr f4 = FieldSpec::make(2, 2);
    Matrix id = Matrix::identity(f4, 3);
    std::vector<FieldElement> v{f4->element(1), f4->element(2), f4->element(3)};
    CHECK(id.apply(v) == v);
    CHECK_THROWS_AS(id.apply({f4->one()}), Error);
    CHECK_THROWS_AS(id.at(3, 0), Error);
    CHECK_THROWS_AS(solve_affine(id, {f4->one()}), Error);
}
