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

#include "foldecode/carlitz.hpp"

using namespace foldecode;

namespace {

template <typename Fn> bool fails_with(ErrorKind k, Fn&& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.kind() == k;
    }
    return false;
}

Poly random_poly(const FieldPtr& f, int max_degree, std::mt19937_64& rng)
{
    std::vector<FieldElement> c;
    int d = static_cast<int>(rng() % static_cast<unsigned long long>(max_degree + 1));
    for (int i = 0; i <= d; ++i) c.push_back(f->element(rng() % f->order()));
    return Poly(f, std::move(c));
}

TwistedPoly random_twisted(const FieldPtr& f, unsigned max_pi, int max_coeff_degree,
                           std::mt19937_64& rng)
{
    std::vector<Poly> c;
    unsigned d = static_cast<unsigned>(rng() % (max_pi + 1));
    for (unsigned i = 0; i <= d; ++i) c.push_back(random_poly(f, max_coeff_degree, rng));
    return TwistedPoly::from_coeffs(f, std::move(c));
}

/* independent oracle for the module action on A itself: iterate the
   defining recursion u -> T u + u^q instead of expanding phi_a */
Poly plain_action(const FieldPtr& f, const Poly& a, const Poly& u)
{
    Poly tvar = Poly::variable(f);
    std::vector<Poly> powers; // image of u under T^d
    powers.push_back(u);
    for (int d = 1; d <= a.degree(); ++d)
        powers.push_back(tvar * powers.back() + powers.back().pow(f->order()));
    Poly acc = Poly::zero(f);
    for (int d = 0; d <= a.degree(); ++d) acc += powers[static_cast<std::size_t>(d)].scaled(a.coeff(static_cast<std::size_t>(d)));
    return acc;
}

/* substitute t = u into the t-polynomial form of a twisted operator */
Poly substitute(const TwistedPoly& tw, const Poly& u)
{
    const FieldPtr& f = tw.field();
    unsigned long long p = f->characteristic();
    Poly acc = Poly::zero(f);
    for (int i = 0; i <= tw.degree(); ++i)
        acc += tw.coeff(static_cast<std::size_t>(i)) * u.pow(ipow_checked(p, static_cast<unsigned>(i)));
    return acc;
}

unsigned long long brute_totient(const Poly& q_poly)
{
    const FieldPtr& f = q_poly.field();
    unsigned long long total = ipow_checked(f->order(), static_cast<unsigned>(q_poly.degree()));
    unsigned long long units = 0;
    for (unsigned long long idx = 1; idx < total; ++idx)
        if (gcd(Poly::from_index(f, idx), q_poly).degree() == 0) ++units;
    return units;
}

} // namespace

TEST_CASE("twisted multiplication follows the p-power commutation rule")
{
    auto f2 = FieldSpec::make_order(2);
    Poly tvar = Poly::variable(f2);

    // (T + pi)^2 = T^2 + (T^2 + T) pi + pi^2
    TwistedPoly base = TwistedPoly::scalar(tvar) + TwistedPoly::pi(f2);
    TwistedPoly sq = base * base;
    CHECK(sq.degree() == 2);
    CHECK(sq.coeff(0) == tvar * tvar);
    CHECK(sq.coeff(1) == tvar * tvar + tvar);
    CHECK(sq.coeff(2) == Poly::one(f2));

    // pi u = u^p pi for scalar u
    std::mt19937_64 rng(2026);
    for (auto f : {FieldSpec::make_order(2), FieldSpec::make_order(3), FieldSpec::make_order(4)}) {
        unsigned long long p = f->characteristic();
        for (int trial = 0; trial < 20; ++trial) {
            Poly u = random_poly(f, 3, rng);
            TwistedPoly lhs = TwistedPoly::pi(f) * TwistedPoly::scalar(u);
            TwistedPoly rhs = TwistedPoly::scalar(u.pow(p)) * TwistedPoly::pi(f);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("twisted ring axioms hold on random triples")
{
    std::mt19937_64 rng(77);
    for (auto f : {FieldSpec::make_order(2), FieldSpec::make_order(3), FieldSpec::make_order(4)}) {
        for (int trial = 0; trial < 30; ++trial) {
            TwistedPoly a = random_twisted(f, 3, 2, rng);
            TwistedPoly b = random_twisted(f, 3, 2, rng);
            TwistedPoly c = random_twisted(f, 3, 2, rng);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a + b) * c == a * c + b * c);
            CHECK(a + b == b + a);
            CHECK(a - a == TwistedPoly(f));
        }
    }
    // the twist is genuinely noncommutative
    auto f2 = FieldSpec::make_order(2);
    TwistedPoly tv = TwistedPoly::scalar(Poly::variable(f2));
    CHECK(TwistedPoly::pi(f2) * tv != tv * TwistedPoly::pi(f2));
}

TEST_CASE("module map sends T to T + pi^lambda and is sgn-normalized")
{
    auto f2 = FieldSpec::make_order(2);
    CarlitzModule cm2(f2);
    CHECK(cm2.lambda == 1);
    TwistedPoly phi_t = cm2.phi_of(Poly::variable(f2));
    CHECK(phi_t.degree() == 1);
    CHECK(phi_t.coeff(0) == Poly::variable(f2));
    CHECK(phi_t.coeff(1) == Poly::one(f2));

    // frozen expansion of the image of T^2 in characteristic 2
    TwistedPoly phi_t2 = cm2.phi_of(Poly::variable(f2) * Poly::variable(f2));
    Poly tvar = Poly::variable(f2);
    CHECK(phi_t2.coeff(0) == tvar * tvar);
    CHECK(phi_t2.coeff(1) == tvar * tvar + tvar);
    CHECK(phi_t2.coeff(2) == Poly::one(f2));

    // lambda doubles over the quadratic extension
    auto f4 = FieldSpec::make_order(4);
    CarlitzModule cm4(f4);
    CHECK(cm4.lambda == 2);
    TwistedPoly phi4 = cm4.phi_of(Poly::variable(f4));
    CHECK(phi4.degree() == 2);
    CHECK(phi4.coeff(0) == Poly::variable(f4));
    CHECK(phi4.coeff(1).is_zero());
    CHECK(phi4.coeff(2) == Poly::one(f4));

    // constants act as themselves
    for (unsigned long long i = 0; i < 4; ++i) {
        Poly c = Poly::constant(f4, f4->element(i));
        CHECK(cm4.phi_of(c) == TwistedPoly::scalar(c));
    }

    std::mt19937_64 rng(11);
    for (auto f : {FieldSpec::make_order(2), FieldSpec::make_order(3), FieldSpec::make_order(4)}) {
        CarlitzModule cm(f);
        for (int trial = 0; trial < 25; ++trial) {
            Poly a = random_poly(f, 4, rng);
            if (a.is_zero()) continue;
            TwistedPoly img = cm.phi_of(a);
            CHECK(img.constant_term() == a);
            CHECK(img.degree() == static_cast<int>(cm.lambda) * a.degree());
            CHECK(img.leading() == Poly::constant(f, a.leading()));
        }
    }
}

TEST_CASE("module map is a ring homomorphism on random pairs")
{
    std::mt19937_64 rng(404);
    for (auto f : {FieldSpec::make_order(2), FieldSpec::make_order(3), FieldSpec::make_order(4)}) {
        CarlitzModule cm(f);
        for (int trial = 0; trial < 100; ++trial) {
            Poly a = random_poly(f, 4, rng);
            Poly b = random_poly(f, 4, rng);
            CHECK(cm.phi_of(a + b) == cm.phi_of(a) + cm.phi_of(b));
            CHECK(cm.phi_of(a * b) == cm.phi_of(a) * cm.phi_of(b));
            CHECK(cm.phi_of(a * b) == cm.phi_of(b) * cm.phi_of(a));
        }
    }
}

TEST_CASE("module map matches the defining recursion acting on the ring")
{
    std::mt19937_64 rng(505);
    for (auto f : {FieldSpec::make_order(2), FieldSpec::make_order(3)}) {
        CarlitzModule cm(f);
        for (int trial = 0; trial < 40; ++trial) {
            Poly a = random_poly(f, 3, rng);
            Poly u = random_poly(f, 2, rng);
            CHECK(substitute(cm.phi_of(a), u) == plain_action(f, a, u));
        }
    }
}

TEST_CASE("unit-group order follows the prime-power product formula")
{
    auto f2 = FieldSpec::make_order(2);
    auto f3 = FieldSpec::make_order(3);
    Poly t2 = Poly::variable(f2);
    Poly t3 = Poly::variable(f3);

    // a degree-1 prime has q - 1 units
    CHECK(carlitz_totient(t2) == 1);
    CHECK(carlitz_totient(t3) == 2);
    // prime square P^2: q^d (q^d - 1) with d = 1
    CHECK(carlitz_totient(t2 * t2) == 2);
    // irreducible quadratic: q^2 - 1
    CHECK(carlitz_totient(Poly::parse(f2, "T^2+T+1")) == 3);

    for (int d = 1; d <= 4; ++d) {
        for_each_monic(f2, d, [&](const Poly& q) { CHECK(carlitz_totient(q) == brute_totient(q)); });
    }
    for (int d = 1; d <= 3; ++d) {
        for_each_monic(f3, d, [&](const Poly& q) { CHECK(carlitz_totient(q) == brute_totient(q)); });
    }
    CHECK(fails_with(ErrorKind::InvalidArgument, [&] { carlitz_totient(Poly::one(f2)); }));
    CHECK(fails_with(ErrorKind::InvalidArgument, [&] { carlitz_totient(t2.scaled(f2->element(1)) + Poly::one(f2) + t2); }));
}

TEST_CASE("torsion of a degree-1 prime in characteristic 2 is {0, T}")
{
    auto f2 = FieldSpec::make_order(2);
    Poly tvar = Poly::variable(f2);
    TorsionReport rep = torsion_report(f2, tvar);

    CHECK(rep.expected_cardinality == 2);
    CHECK(rep.cardinality == 2);
    CHECK(rep.all_distinct);
    CHECK(rep.all_roots);
    CHECK(rep.annihilator_is_q);
    CHECK(rep.cyclic);
    CHECK(rep.phi_q == 1);
    CHECK(rep.generator_count == 1);

    // generator polynomial J_T = t + T
    REQUIRE(rep.cyclotomic.size() == 2);
    CHECK(rep.cyclotomic[0] == tvar);
    CHECK(rep.cyclotomic[1] == Poly::one(f2));

    // phi_T = T + pi
    CHECK(rep.torsion_polynomial.coeff(0) == tvar);
    CHECK(rep.torsion_polynomial.coeff(1) == Poly::one(f2));
}

TEST_CASE("torsion generator polynomials match hand expansion")
{
    auto f2 = FieldSpec::make_order(2);
    Poly tvar = Poly::variable(f2);

    // Q = T^2: phi_{T^2}(t) / (t (t + T)) = t^2 + T t + T
    TorsionReport sq = torsion_report(f2, tvar * tvar);
    REQUIRE(sq.cyclotomic.size() == 3);
    CHECK(sq.cyclotomic[0] == tvar);
    CHECK(sq.cyclotomic[1] == tvar);
    CHECK(sq.cyclotomic[2] == Poly::one(f2));
    CHECK(sq.cardinality == 4);
    CHECK(sq.generator_count == 2);

    // Q = T^2 + T + 1: phi_Q(t) / t = t^3 + (T^2+T+1) t + (T^2+T+1)
    Poly qq = Poly::parse(f2, "T^2+T+1");
    TorsionReport irr = torsion_report(f2, qq);
    REQUIRE(irr.cyclotomic.size() == 4);
    CHECK(irr.cyclotomic[0] == qq);
    CHECK(irr.cyclotomic[1] == qq);
    CHECK(irr.cyclotomic[2].is_zero());
    CHECK(irr.cyclotomic[3] == Poly::one(f2));
    CHECK(irr.cardinality == 4);
    CHECK(irr.generator_count == 3);

    // characteristic 3, Q = T: phi_T(t) / t = t^2 + T
    auto f3 = FieldSpec::make_order(3);
    Poly t3 = Poly::variable(f3);
    TorsionReport lin = torsion_report(f3, t3);
    REQUIRE(lin.cyclotomic.size() == 3);
    CHECK(lin.cyclotomic[0] == t3);
    CHECK(lin.cyclotomic[1].is_zero());
    CHECK(lin.cyclotomic[2] == Poly::one(f3));
    CHECK(lin.cardinality == 3);
    CHECK(lin.generator_count == 2);
}

TEST_CASE("torsion modules are cyclic of full size across small moduli")
{
    auto f2 = FieldSpec::make_order(2);
    for (int d = 1; d <= 3; ++d) {
        for_each_monic(f2, d, [&](const Poly& q) {
            TorsionReport rep = torsion_report(f2, q);
            CHECK(rep.cardinality == ipow_checked(2, static_cast<unsigned>(d)));
            CHECK(rep.all_distinct);
            CHECK(rep.all_roots);
            CHECK(rep.annihilator_is_q);
            CHECK(rep.cyclic);
            CHECK(rep.phi_q == brute_totient(q));
            CHECK(rep.generator_count == rep.phi_q);
        });
    }
    auto f3 = FieldSpec::make_order(3);
    for (int d = 1; d <= 2; ++d) {
        for_each_monic(f3, d, [&](const Poly& q) {
            TorsionReport rep = torsion_report(f3, q);
            CHECK(rep.cardinality == ipow_checked(3, static_cast<unsigned>(d)));
            CHECK(rep.cyclic);
            CHECK(rep.generator_count == rep.phi_q);
        });
    }
    // one non-prime base field instance; lambda = 2 exercises pi^2 images
    auto f4 = FieldSpec::make_order(4);
    TorsionReport quad = torsion_report(f4, Poly::variable(f4));
    CHECK(quad.cardinality == 4);
    CHECK(quad.cyclic);
    CHECK(quad.generator_count == 3);
}

TEST_CASE("torsion rejects bad moduli and oversized splitting fields")
{
    auto f2 = FieldSpec::make_order(2);
    Poly tvar = Poly::variable(f2);
    CHECK(fails_with(ErrorKind::InvalidArgument, [&] { torsion_report(f2, Poly::one(f2)); }));
    CHECK(fails_with(ErrorKind::InvalidArgument, [&] { torsion_report(f2, Poly::zero(f2)); }));
    CHECK(fails_with(ErrorKind::SplittingFieldTooLarge,
                     [&] { torsion_report(f2, tvar.pow(5)); }));
    auto f3 = FieldSpec::make_order(3);
    CHECK(fails_with(ErrorKind::FieldMismatch, [&] { torsion_report(f3, tvar); }));
    // degree 4 stays within the cap
    TorsionReport big = torsion_report(f2, tvar.pow(4));
    CHECK(big.cardinality == 16);
    CHECK(big.cyclic);
}

TEST_CASE("ray group orders and their unit quotients")
{
    // degree-1 prime over GF(4): order 3 with trivial quotient
    NarrowRayOrders a = narrow_ray_class_order(4, 1);
    CHECK(a.narrow_ray == 3);
    CHECK(a.class_group == 1);

    // degree-3 prime over GF(3): order 26 with quotient 13
    NarrowRayOrders b = narrow_ray_class_order(3, 3);
    CHECK(b.narrow_ray == 26);
    CHECK(b.class_group == 13);

    NarrowRayOrders c = narrow_ray_class_order(2, 2);
    CHECK(c.narrow_ray == 3);
    CHECK(c.class_group == 3);

    // h scales both orders linearly
    NarrowRayOrders d = narrow_ray_class_order(3, 3, 5);
    CHECK(d.narrow_ray == 26 * 5);
    CHECK(d.class_group == 13 * 5);

    for (unsigned long long q : {2ull, 3ull, 4ull, 5ull, 9ull}) {
        for (unsigned deg = 1; deg <= 4; ++deg) {
            NarrowRayOrders o = narrow_ray_class_order(q, deg);
            CHECK(o.narrow_ray == ipow_checked(q, deg) - 1);
            CHECK(o.narrow_ray == o.class_group * (q - 1));
        }
    }
    CHECK(fails_with(ErrorKind::InvalidArgument, [&] { narrow_ray_class_order(1, 2); }));
    CHECK(fails_with(ErrorKind::InvalidArgument, [&] { narrow_ray_class_order(2, 0); }));
}

TEST_CASE("ray class field genus values on the small grid")
{
    CHECK(class_field_genus(2, 2, 0, 1) == 0);
    CHECK(class_field_genus(4, 2, 0, 1) == 5);
    CHECK(class_field_genus(2, 3, 0, 1) == 3);

    // frozen grid; the parity tripwire stays silent on all of it
    const long long expected[3][4] = {
        {0, 3, 14, 45},      // q = 2, d = 2..5
        {2, 19, 99, 422},    // q = 3
        {5, 52, 339, 1874},  // q = 4
    };
    const unsigned long long qs[3] = {2, 3, 4};
    for (int i = 0; i < 3; ++i)
        for (unsigned d = 2; d <= 5; ++d)
            CHECK(class_field_genus(qs[i], d, 0, 1) == expected[i][d - 2]);

    // positive base genus shifts the leading term
    CHECK(class_field_genus(2, 2, 1, 1) == 3);

    CHECK(fails_with(ErrorKind::InvalidArgument, [&] { class_field_genus(2, 1, 0, 1); }));
    CHECK(fails_with(ErrorKind::InvalidArgument, [&] { class_field_genus(2, 2, 0, 0); }));
}

TEST_CASE("cover parameters for square alphabets")
{
    // smallest cover over GF(4): r = 3, degree 13, genus bound 19 from a
    // genus-1 base with one rational place
    ClassfieldCodeParameters a = classfield_code_parameters(4, 1, 1);
    CHECK(a.r == 3);
    CHECK(a.e == 13);
    CHECK(a.genus_bound == Rational(19));
    CHECK(a.rational_place_bound == Rational(13));
    CHECK(a.list_exponent_per_s == 1);

    // GF(9) base with 16 rational places: r = 17
    ClassfieldCodeParameters b = classfield_code_parameters(9, 16, 0);
    CHECK(b.r == 17);
    CHECK(b.e * 10 == ipow_checked(9, 17) + 1);
    CHECK(b.rational_place_bound == Rational(static_cast<long long>(b.e) * 16));
    CHECK(b.list_exponent_per_s == 2);
    // genus bound recomputed from the closed form with g_e = 0
    long long e = static_cast<long long>(b.e);
    CHECK(b.genus_bound == Rational(-2 * e + 17 * (e - 1) + 2, 2));

    for (unsigned long long ell : {4ull, 9ull, 16ull, 25ull}) {
        unsigned long long root = isqrt(ell);
        for (unsigned long long n = 1; n <= 3; ++n) {
            ClassfieldCodeParameters p = classfield_code_parameters(ell, n, 0);
            CHECK(p.r % 2 == 1);
            CHECK(p.r >= 3);
            // r exceeds 2n/(sqrt(ell)-1), the defining lower bound
            CHECK(p.r * (root - 1) > 2 * n);
            CHECK(p.e * (ell + 1) == ipow_checked(ell, static_cast<unsigned>(p.r)) + 1);
            CHECK(p.list_exponent_per_s == root - 1);
        }
    }

    CHECK(fails_with(ErrorKind::InvalidArgument, [&] { classfield_code_parameters(2, 1, 0); }));
    CHECK(fails_with(ErrorKind::InvalidArgument, [&] { classfield_code_parameters(8, 1, 0); }));
    CHECK(fails_with(ErrorKind::InvalidArgument, [&] { classfield_code_parameters(4, 0, 0); }));
    // the cover degree grows as ell^r and trips the integer cap quickly
    CHECK(fails_with(ErrorKind::CapExceeded, [&] { classfield_code_parameters(4, 16, 0); }));
}

TEST_CASE("asymptotic radius formula evaluates exactly")
{
    // hand-computed values for the epsilon in {1/2, 1/4, 1/5} grid with
    // rates 3/10 and 1/2; all are negative at these tiny alphabet sizes
    CHECK(tau_asymptotic(4, 4, 2, Rational(3, 10)) == Rational(-62, 45));
    CHECK(tau_asymptotic(4, 4, 2, Rational(1, 2)) == Rational(-14, 9));
    CHECK(tau_asymptotic(16, 16, 4, Rational(3, 10)) == Rational(-148, 975));
    CHECK(tau_asymptotic(16, 16, 4, Rational(1, 2)) == Rational(-68, 195));
    CHECK(tau_asymptotic(25, 25, 5, Rational(3, 10)) == Rational(5, 126));
    CHECK(tau_asymptotic(25, 25, 5, Rational(1, 2)) == Rational(-10, 63));

    // a large alphabet gives a genuinely positive radius below s/(s+1)
    Rational big = tau_asymptotic(2500, 10, 9, Rational(1, 100));
    CHECK(big > Rational(0));
    CHECK(big < Rational(9, 10));

    // radius decreases as the rate grows
    Rational lo = tau_asymptotic(25, 25, 5, Rational(1, 10));
    Rational hi = tau_asymptotic(25, 25, 5, Rational(2, 10));
    CHECK(hi < lo);

    CHECK(fails_with(ErrorKind::InvalidArgument, [&] { tau_asymptotic(8, 4, 2, Rational(1, 2)); }));
    CHECK(fails_with(ErrorKind::InvalidArgument, [&] { tau_asymptotic(4, 2, 3, Rational(1, 2)); }));
}
