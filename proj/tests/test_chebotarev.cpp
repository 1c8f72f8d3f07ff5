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

#include <map>

#include "foldecode/carlitz.hpp"
#include "foldecode/chebotarev.hpp"

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

/* count of monic irreducibles of degree d over GF(q) by Moebius inversion */
long long moebius_irreducible_count(unsigned long long q, int d)
{
    auto moebius = [](int n) {
        int m = 1;
        for (int p = 2; p * p <= n; ++p) {
            if (n % p == 0) {
                n /= p;
                if (n % p == 0) return 0;
                m = -m;
            }
        }
        if (n > 1) m = -m;
        return m;
    };
    long long total = 0;
    for (int e = 1; e <= d; ++e) {
        if (d % e != 0) continue;
        long long qe = 1;
        for (int i = 0; i < e; ++i) qe *= static_cast<long long>(q);
        total += moebius(d / e) * qe;
    }
    return total / d;
}

unsigned long long count_for_rep(const FrobeniusHistogram& hist, const Poly& rep)
{
    for (const auto& entry : hist.classes)
        if (entry.representative == rep) return entry.count;
    FAIL("representative missing from histogram");
    return 0;
}

} // namespace

TEST_CASE("irreducible enumeration matches closed-form counts")
{
    auto f2 = FieldSpec::make_order(2);
    std::vector<Poly> quads;
    for_each_monic_irreducible(f2, 2, [&](const Poly& p) { quads.push_back(p); });
    REQUIRE(quads.size() == 1);
    CHECK(quads[0] == Poly::parse(f2, "T^2+T+1"));

    unsigned long long cubics = 0;
    for_each_monic_irreducible(f2, 3, [&](const Poly&) { ++cubics; });
    CHECK(cubics == 2);

    auto f3 = FieldSpec::make_order(3);
    std::vector<Poly> lines;
    for_each_monic_irreducible(f3, 1, [&](const Poly& p) { lines.push_back(p); });
    REQUIRE(lines.size() == 3);
    CHECK(lines[0] == Poly::variable(f3));

    for (unsigned long long q : {2ull, 3ull}) {
        auto f = FieldSpec::make_order(q);
        for (int h = 1; h <= (q == 2 ? 8 : 5); ++h) {
            long long n = 0;
            for_each_monic_irreducible(f, h, [&](const Poly&) { ++n; });
            CHECK(n == moebius_irreducible_count(q, h));
        }
    }
}

TEST_CASE("Frobenius of an unramified place is its conductor residue")
{
    auto f2 = FieldSpec::make_order(2);
    Poly q = Poly::parse(f2, "T^2+T+1");
    Poly tvar = Poly::variable(f2);

    // T generates the order-3 unit group mod Q
    Poly cls = frobenius_class(tvar, q);
    CHECK(cls == tvar);
    CHECK(powmod(tvar, 3, q).is_one());
    CHECK_FALSE(powmod(tvar, 1, q).is_one());

    // a residue of 1 is the identity class, the split case
    CHECK(frobenius_class(q + Poly::one(f2), q).is_one());
    // T^3 = 1 mod Q, so T^3 + T + 1 lands on the class of T
    CHECK(frobenius_class(Poly::parse(f2, "T^3+T+1"), q) == tvar);

    CHECK(fails_with(ErrorKind::RamifiedPlace, [&] { frobenius_class(q, q); }));
    CHECK(fails_with(ErrorKind::RamifiedPlace, [&] { frobenius_class(q * tvar, q); }));
    CHECK(fails_with(ErrorKind::RamifiedPlace, [&] { frobenius_class(Poly::zero(f2), q); }));
    CHECK(fails_with(ErrorKind::InvalidArgument, [&] { frobenius_class(tvar, Poly::one(f2)); }));
}

TEST_CASE("degree-h residues equidistribute within the explicit bound")
{
    auto f2 = FieldSpec::make_order(2);
    Poly q = Poly::parse(f2, "T^2+T+1");
    Poly tvar = Poly::variable(f2);
    Poly t1 = tvar + Poly::one(f2);

    // frozen per-class counts and totals for h = 4..8; the three classes
    // are 1, T, T+1 and the counts stay perfectly balanced
    const unsigned long long per_class[5] = {1, 2, 3, 6, 10};
    const unsigned long long totals[5] = {3, 6, 9, 18, 30};
    for (unsigned h = 4; h <= 8; ++h) {
        FrobeniusHistogram hist = chebotarev_check(f2, q, h);
        CHECK(hist.unit_order == 3);
        CHECK(hist.quotient_order == 3);
        CHECK(hist.genus_upper == 0);
        REQUIRE(hist.classes.size() == 3);
        CHECK(hist.total == totals[h - 4]);
        CHECK(count_for_rep(hist, Poly::one(f2)) == per_class[h - 4]);
        CHECK(count_for_rep(hist, tvar) == per_class[h - 4]);
        CHECK(count_for_rep(hist, t1) == per_class[h - 4]);
        CHECK(hist.all_within_bound);
        for (const auto& entry : hist.classes) {
            CHECK(entry.expected == Rational(1ll << h, 3ll * h));
            CHECK(entry.margin > Rational(0));
        }
        // the one irreducible of degree 2 is Q itself, so nothing of
        // degree h is lost to ramification here
        CHECK(hist.total == static_cast<unsigned long long>(moebius_irreducible_count(2, static_cast<int>(h))));
    }
}

TEST_CASE("bound values match hand evaluation with floored roots")
{
    auto f2 = FieldSpec::make_order(2);
    Poly q = Poly::parse(f2, "T^2+T+1");
    // B(h) = (2/(3h)) 3 floor(2^{h/2}) + 3 floor(2^{h/4}) + 3 at genus 0
    CHECK(chebotarev_check(f2, q, 4).classes[0].bound == Rational(11));
    CHECK(chebotarev_check(f2, q, 6).classes[0].bound == Rational(35, 3));
    CHECK(chebotarev_check(f2, q, 8).classes[0].bound == Rational(19));
}

TEST_CASE("ramified conductor places are excluded from the census")
{
    auto f2 = FieldSpec::make_order(2);
    Poly q = Poly::parse(f2, "T^2+T+1");
    // the only monic irreducible quadratic is Q itself
    FrobeniusHistogram hist = chebotarev_check(f2, q, 2);
    CHECK(hist.total == 0);
    for (const auto& entry : hist.classes) CHECK(entry.count == 0);
}

TEST_CASE("trivial quotient collapses to the prime-counting estimate")
{
    auto f2 = FieldSpec::make_order(2);
    Poly q = Poly::parse(f2, "T^2+T+1");
    FrobeniusHistogram hist = chebotarev_check(f2, q, 6, 1);
    CHECK(hist.quotient_order == 1);
    REQUIRE(hist.classes.size() == 1);
    CHECK(hist.classes[0].count == 9);
    CHECK(hist.classes[0].representative.is_one());
    CHECK(hist.classes[0].expected == Rational(64, 6));
    CHECK(hist.all_within_bound);
}

TEST_CASE("proper quotients partition residues consistently")
{
    auto f2 = FieldSpec::make_order(2);
    Poly q = Poly::parse(f2, "T^4+T+1");
    REQUIRE(q.irreducible());

    // discrete-log oracle: T generates the order-15 unit group mod Q
    Poly tvar = Poly::variable(f2);
    std::map<unsigned long long, unsigned long long> dlog;
    Poly acc = Poly::one(f2);
    for (unsigned long long k = 0; k < 15; ++k) {
        dlog[acc.to_index()] = k;
        acc = acc * tvar % q;
    }
    REQUIRE(dlog.size() == 15);

    for (unsigned long long e : {1ull, 3ull, 5ull, 15ull}) {
        FrobeniusHistogram hist = chebotarev_check(f2, q, 6, e);
        CHECK(hist.unit_order == 15);
        CHECK(hist.genus_upper == class_field_genus(2, 4, 0, 1));
        REQUIRE(hist.classes.size() == e);
        CHECK(hist.all_within_bound);

        // independent recount keyed by discrete log mod e
        std::map<unsigned long long, unsigned long long> expected_counts;
        unsigned long long total = 0;
        for_each_monic_irreducible(f2, 6, [&](const Poly& p) {
            Poly residue = p % q;
            ++expected_counts[dlog.at(residue.to_index()) % e];
            ++total;
        });
        CHECK(hist.total == total);
        unsigned long long sum = 0;
        for (const auto& entry : hist.classes) {
            unsigned long long key = dlog.at(entry.representative.to_index()) % e;
            CHECK(entry.count == expected_counts[key]);
            sum += entry.count;
        }
        CHECK(sum == total);
        // the identity coset is represented by 1
        CHECK(count_for_rep(hist, Poly::one(f2)) == expected_counts[0]);
    }
}

TEST_CASE("odd-characteristic conductor of degree one")
{
    auto f3 = FieldSpec::make_order(3);
    Poly tvar = Poly::variable(f3);
    FrobeniusHistogram hist = chebotarev_check(f3, tvar, 1);
    CHECK(hist.unit_order == 2);
    CHECK(hist.genus_upper == 0);
    CHECK(hist.total == 2); // T + 1 and T + 2; T itself is ramified
    REQUIRE(hist.classes.size() == 2);
    for (const auto& entry : hist.classes) {
        CHECK(entry.count == 1);
        CHECK(entry.expected == Rational(3, 2));
        CHECK(entry.margin > Rational(0));
    }
    CHECK(hist.all_within_bound);
}

TEST_CASE("histogram rejects bad conductors and oversized enumerations")
{
    auto f2 = FieldSpec::make_order(2);
    Poly q = Poly::parse(f2, "T^2+T+1");
    CHECK(fails_with(ErrorKind::InvalidArgument, [&] { chebotarev_check(f2, Poly::parse(f2, "T^2+1"), 4); }));
    CHECK(fails_with(ErrorKind::InvalidArgument, [&] { chebotarev_check(f2, q, 0); }));
    CHECK(fails_with(ErrorKind::InvalidArgument, [&] { chebotarev_check(f2, q, 4, 2); }));
    CHECK(fails_with(ErrorKind::CapExceeded, [&] { chebotarev_check(f2, q, 25); }));
    auto f3 = FieldSpec::make_order(3);
    CHECK(fails_with(ErrorKind::FieldMismatch, [&] { chebotarev_check(f3, q, 4); }));
}
