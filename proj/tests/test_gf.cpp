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
#include <vector>

#include "foldecode/gf.hpp"

using namespace foldecode;

namespace {

/* brute-force irreducibility over GF(2), degree <= 4: no linear root and no
   quadratic irreducible factor; independent of the library's criterion */
bool brute_irreducible_gf2(unsigned long long idx, int degree)
{
    auto value_at = [&](unsigned long long poly, int d, unsigned long long x) {
        unsigned long long v = 0, xp = 1;
        for (int i = 0; i <= d; ++i) {
            if ((poly >> i) & 1) v ^= xp % 2;
            xp = xp * x;
        }
        return v % 2;
    };
    if (degree <= 0) return false;
    if ((idx & 1) == 0) return false;                    // root at 0
    if (value_at(idx, degree, 1) == 0) return false;     // root at 1
    if (degree <= 3) return true;                        // cubic with no roots is irreducible
    /* degree 4: exclude (x^2+x+1)^2 = x^4+x^2+1 */
    return idx != 0b10101;
}

} // namespace

TEST_CASE("default modulus is the first irreducible in base-p index order")
{
    /* independent enumeration oracle over GF(2), degree 4 */
    unsigned long long expect = 0;
    for (unsigned long long idx = 1ull << 4; idx < (1ull << 5); ++idx) {
        if (brute_irreducible_gf2(idx, 4)) {
            expect = idx;
            break;
        }
    }
    CHECK(expect == 0b10011); // x^4 + x + 1

    FieldPtr f16 = FieldSpec::make(2, 4);
    unsigned long long got = 0, w = 1;
    for (std::uint32_t c : f16->modulus()) {
        got += c * w;
        w *= 2;
    }
    CHECK(got == expect);

    FieldPtr f2 = FieldSpec::make(2, 1);
    CHECK(f2->modulus() == std::vector<std::uint32_t>{0, 1});

    FieldPtr f4 = FieldSpec::make(2, 2);
    CHECK(f4->modulus() == std::vector<std::uint32_t>{1, 1, 1});
}

TEST_CASE("make_order agrees with make and rejects non prime powers")
{
    FieldPtr a = FieldSpec::make_order(16);
    FieldPtr b = FieldSpec::make(2, 4);
    CHECK(a->same_as(*b));
    CHECK(a->characteristic() == 2);
    CHECK(a->degree() == 4);
    CHECK_THROWS_AS(FieldSpec::make_order(12), Error);
    CHECK_THROWS_AS(FieldSpec::make(4, 1), Error); // characteristic not prime
}

TEST_CASE("constructor rejects reducible moduli and oversized fields")
{
    CHECK_THROWS_AS(FieldSpec::make(2, 2, {1, 0, 1}), Error); // x^2+1 = (x+1)^2
    try {
        FieldSpec::make(2, 2, {1, 0, 1});
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ReducibleModulus);
    }
    CHECK_THROWS_AS(FieldSpec::make(2, 17), Error); // above the 2^16 cap
}

TEST_CASE("GF(4) multiplication table matches reduction by x^2+x+1")
{
    FieldPtr f4 = FieldSpec::make(2, 2);
    FieldElement w = f4->element(2);  // class of x
    FieldElement w1 = f4->element(3); // x + 1
    CHECK(w * w == w1);
    CHECK(w * w1 == f4->one());       // x(x+1) = x^2+x = 1
    CHECK(element_order(w) == 3);
}

TEST_CASE("field axioms hold exhaustively for small fields")
{
    for (unsigned long long q : {2ull, 3ull, 4ull, 5ull, 8ull, 9ull, 16ull}) {
        FieldPtr f = FieldSpec::make_order(q);
        for (unsigned long long i = 0; i < q; ++i) {
            FieldElement a = f->element(i);
            CHECK(a + f->zero() == a);
            CHECK(a * f->one() == a);
            CHECK((a - a).is_zero());
            if (!a.is_zero()) {
                CHECK((a * a.inverse()).is_one());
                CHECK(a.pow(static_cast<long long>(q) - 1).is_one());
            }
            for (unsigned long long j = 0; j < q; ++j) {
                FieldElement b = f->element(j);
                CHECK(a + b == b + a);
                CHECK(a * b == b * a);
                for (unsigned long long k = 0; k < q; ++k) {
                    FieldElement c = f->element(k);
                    CHECK((a + b) + c == a + (b + c));
                    CHECK((a * b) * c == a * (b * c));
                    CHECK(a * (b + c) == a * b + a * c);
                }
            }
        }
    }
}

TEST_CASE("randomized axioms over GF(256)")
{
    FieldPtr f = FieldSpec::make(2, 8);
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 10000; ++trial) {
        FieldElement a = f->element(rng() % 256);
        FieldElement b = f->element(rng() % 256);
        FieldElement c = f->element(rng() % 256);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
    }
}

TEST_CASE("pth-power map is additive")
{
    for (unsigned long long q : {4ull, 8ull, 9ull, 16ull, 256ull}) {
        FieldPtr f = FieldSpec::make_order(q);
        long long p = static_cast<long long>(f->characteristic());
        for (unsigned long long i = 0; i < q; ++i) {
            for (unsigned long long j = 0; j < q; ++j) {
                FieldElement a = f->element(i), b = f->element(j);
                CHECK((a + b).pow(p) == a.pow(p) + b.pow(p));
            }
        }
    }
}

TEST_CASE("frobenius iterates the pth power and fixes the prime field")
{
    FieldPtr f = FieldSpec::make(2, 4);
    for (unsigned long long i = 0; i < 16; ++i) {
        FieldElement a = f->element(i);
        CHECK(a.frobenius() == a.pow(2));
        CHECK(a.frobenius(4) == a); // full Galois orbit closes
    }
    CHECK(f->one().frobenius() == f->one());
}

TEST_CASE("trace lands in the prime field and is additive")
{
    FieldPtr f4 = FieldSpec::make(2, 2);
    CHECK(f4->zero().trace_to_prime() == 0);
    CHECK(f4->one().trace_to_prime() == 0);      // 1 + 1 = 0 over GF(2)
    CHECK(f4->element(2).trace_to_prime() == 1); // w + w^2 = 1
    CHECK(f4->element(3).trace_to_prime() == 1);

    FieldPtr f9 = FieldSpec::make(3, 2);
    for (unsigned long long i = 0; i < 9; ++i)
        for (unsigned long long j = 0; j < 9; ++j) {
            std::uint32_t lhs = (f9->element(i) + f9->element(j)).trace_to_prime();
            std::uint32_t rhs = (f9->element(i).trace_to_prime() + f9->element(j).trace_to_prime()) % 3;
            CHECK(lhs == rhs);
        }
}

TEST_CASE("primitive element is the smallest generator in index order")
{
    CHECK(FieldSpec::make(2, 1)->primitive_element().is_one());

    FieldPtr f4 = FieldSpec::make(2, 2);
    CHECK(f4->primitive_element() == f4->element(2)); // class of x

    FieldPtr f16 = FieldSpec::make(2, 4);
    FieldElement g = f16->primitive_element();
    CHECK(g == f16->element(2)); // class of x
    /* independent order oracle: direct powering */
    FieldElement acc = f16->one();
    int order = 0;
    for (int i = 1; i <= 15; ++i) {
        acc = acc * g;
        if (acc.is_one()) {
            order = i;
            break;
        }
    }
    CHECK(order == 15);

    for (unsigned long long q : {3ull, 5ull, 8ull, 9ull, 16ull, 25ull}) {
        FieldPtr f = FieldSpec::make_order(q);
        CHECK(element_order(f->primitive_element()) == q - 1);
    }
}

TEST_CASE("subfield embedding is a ring homomorphism picking the smallest root")
{
    FieldPtr f2 = FieldSpec::make(2, 1);
    FieldPtr f4 = FieldSpec::make(2, 2);
    FieldPtr f16 = FieldSpec::make(2, 4);

    CHECK(embed(f2->one(), f4).is_one());

    /* image of w is gamma^5, the smaller of the two order-3 elements */
    FieldElement g = f16->primitive_element();
    FieldElement w = f4->element(2);
    CHECK(embed(w, f16) == g.pow(5));
    CHECK(g.pow(5).index() == 6);

    for (unsigned long long i = 0; i < 4; ++i) {
        for (unsigned long long j = 0; j < 4; ++j) {
            FieldElement a = f4->element(i), b = f4->element(j);
            CHECK(embed(a * b, f16) == embed(a, f16) * embed(b, f16));
            CHECK(embed(a + b, f16) == embed(a, f16) + embed(b, f16));
        }
        if (i != 0) CHECK((element_order(f4->element(i)) == element_order(embed(f4->element(i), f16))));
    }

    FieldPtr f8 = FieldSpec::make(2, 3);
    CHECK_THROWS_AS(embed(f4->element(2), f8), Error);
    try {
        embed(f4->element(2), f8);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::IncompatibleFields);
    }

    FieldPtr f9 = FieldSpec::make(3, 2);
    FieldPtr f81 = FieldSpec::make(3, 4);
    for (unsigned long long i = 0; i < 9; ++i)
        for (unsigned long long j = 0; j < 9; ++j) {
            FieldElement a = f9->element(i), b = f9->element(j);
            CHECK(embed(a * b, f81) == embed(a, f81) * embed(b, f81));
            CHECK(embed(a + b, f81) == embed(a, f81) + embed(b, f81));
        }
}

TEST_CASE("hex text round-trips elements")
{
    FieldPtr f16 = FieldSpec::make(2, 4);
    FieldElement a = f16->from_hex("0x9"); // x^3 + 1
    CHECK(a.coeffs() == std::vector<std::uint32_t>{1, 0, 0, 1});
    CHECK(a.hex() == "0x9");
    for (unsigned long long i = 0; i < 16; ++i) {
        FieldElement b = f16->element(i);
        CHECK(f16->from_hex(b.hex()) == b);
    }
    CHECK_THROWS_AS(f16->from_hex("0x10"), Error); // index 16 out of range
    CHECK_THROWS_AS(f16->from_hex("zz"), Error);
}

TEST_CASE("error kinds for zero division and cross-field operations")
{
    FieldPtr f4 = FieldSpec::make(2, 2);
    try {
        f4->zero().inverse();
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DivisionByZero);
    }
    try {
        element_order(f4->zero());
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DivisionByZero);
    }

    FieldPtr f8 = FieldSpec::make(2, 3);
    try {
        FieldElement x = f4->one() + f8->one();
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::FieldMismatch);
    }

    /* value-identical specs interoperate */
    FieldPtr f4b = FieldSpec::make(2, 2);
    CHECK((f4->element(2) * f4b->element(2)) == f4->element(3));
}

TEST_CASE("negative exponents invert before powering")
{
    FieldPtr f16 = FieldSpec::make(2, 4);
    FieldElement g = f16->primitive_element();
    CHECK(g.pow(-1) == g.inverse());
    CHECK(g.pow(-3) * g.pow(3) == f16->one());
    CHECK(f16->element(7).pow(0).is_one());
}
