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

#include "foldecode/chebotarev.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "foldecode/carlitz.hpp"

namespace foldecode {

namespace {

Rational abs_rational(const Rational& r) { return r < Rational(0) ? -r : r; }

/* multiplicative order of a unit mod Q */
unsigned long long unit_order_of(const Poly& x, const Poly& q_poly, unsigned long long group_order)
{
    for (unsigned long long k = 1; k <= group_order; ++k) {
        if (group_order % k != 0) continue;
        if (powmod(x, k, q_poly).is_one()) return k;
    }
    fail(ErrorKind::InternalError, "element order not found in the unit group");
}

} // namespace

Poly frobenius_class(const Poly& p, const Poly& q_poly)
{
    if (q_poly.degree() < 1 || !q_poly.is_monic())
        fail(ErrorKind::InvalidArgument, "conductor must be monic and nonconstant");
    if (p.is_zero() || (p % q_poly).is_zero())
        fail(ErrorKind::RamifiedPlace, "place divides the conductor");
    if (gcd(p, q_poly).degree() != 0)
        fail(ErrorKind::RamifiedPlace, "place shares a factor with the conductor");
    return p % q_poly;
}

FrobeniusHistogram chebotarev_check(const FieldPtr& f, const Poly& q_poly, unsigned h,
                                    unsigned long long quotient_order)
{
    if (!f) fail(ErrorKind::InvalidArgument, "null field");
    if (q_poly.is_zero() || !q_poly.field()->same_as(*f))
        fail(ErrorKind::FieldMismatch, "conductor field mismatch");
    if (q_poly.degree() < 1 || !q_poly.is_monic() || !q_poly.irreducible())
        fail(ErrorKind::InvalidArgument, "conductor must be monic irreducible");
    if (h < 1) fail(ErrorKind::InvalidArgument, "target degree must be positive");

    unsigned long long q = f->order();
    unsigned d = static_cast<unsigned>(q_poly.degree());
    unsigned long long qh = 1;
    for (unsigned i = 0; i < h; ++i) {
        qh *= q;
        if (qh > (1ull << 24)) fail(ErrorKind::CapExceeded, "degree-h enumeration above 2^24");
    }

    if (ipow_checked(q, d) > (1ull << 24))
        fail(ErrorKind::CapExceeded, "conductor residue enumeration above 2^24");

    FrobeniusHistogram hist;
    hist.modulus = q_poly;
    hist.h = h;
    hist.unit_order = ipow_checked(q, d) - 1;
    unsigned long long e = quotient_order == 0 ? hist.unit_order : quotient_order;
    if (e < 1 || hist.unit_order % e != 0)
        fail(ErrorKind::InvalidArgument, "quotient order must divide the unit group order");
    hist.quotient_order = e;
    hist.genus_upper = d >= 2 ? class_field_genus(q, d, 0, 1) : 0;

    /* units mod an irreducible conductor are every nonzero residue */
    std::vector<Poly> units;
    units.reserve(hist.unit_order);
    for (unsigned long long idx = 1; idx <= hist.unit_order; ++idx)
        units.push_back(Poly::from_index(f, idx));

    /* the unit group is cyclic; the index-e subgroup is the e-th powers */
    Poly generator = Poly::one(f);
    bool found = false;
    for (const Poly& u : units) {
        if (unit_order_of(u, q_poly, hist.unit_order) == hist.unit_order) {
            generator = u;
            found = true;
            break;
        }
    }
    if (!found) fail(ErrorKind::InternalError, "unit group has no generator");

    std::vector<Poly> subgroup;
    for (unsigned long long j = 0; j < hist.unit_order / e; ++j)
        subgroup.push_back(powmod(generator, j * e, q_poly));

    /* canonical representative per coset: minimal (degree, index) among the
       monic members, falling back to the overall minimum */
    auto better = [](const Poly& a, const Poly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.to_index() < b.to_index();
    };
    std::map<unsigned long long, unsigned long long> coset_of; // residue index -> rep index
    std::map<unsigned long long, Poly> reps;
    for (const Poly& u : units) {
        if (coset_of.count(u.to_index())) continue;
        std::vector<Poly> coset;
        for (const Poly& s : subgroup) coset.push_back(u * s % q_poly);
        Poly rep = coset.front();
        bool rep_monic = rep.is_monic();
        for (const Poly& c : coset) {
            bool c_monic = c.is_monic();
            if ((c_monic && !rep_monic) || (c_monic == rep_monic && better(c, rep))) {
                rep = c;
                rep_monic = c_monic;
            }
        }
        for (const Poly& c : coset) coset_of[c.to_index()] = rep.to_index();
        reps.emplace(rep.to_index(), rep);
    }
    if (reps.size() != e) fail(ErrorKind::InternalError, "coset partition has the wrong size");

    std::map<unsigned long long, unsigned long long> counts;
    for (const auto& [idx, rep] : reps) counts[idx] = 0;
    for_each_monic_irreducible(f, static_cast<int>(h), [&](const Poly& p) {
        if ((p % q_poly).is_zero()) return; // ramified, skipped from the count
        Poly residue = frobenius_class(p, q_poly);
        ++counts.at(coset_of.at(residue.to_index()));
        ++hist.total;
    });

    /* deviation bound with |C| = 1, base genus 0, and a degree-1 base */
    long long root2 = static_cast<long long>(isqrt(qh));
    long long root4 = static_cast<long long>(isqrt(isqrt(qh)));
    Rational bound = Rational(2, static_cast<long long>(e) * h) *
                         Rational(static_cast<long long>(e) + hist.genus_upper) * Rational(root2) +
                     Rational(static_cast<long long>(e)) * Rational(root4) +
                     Rational(hist.genus_upper) + Rational(static_cast<long long>(e));
    Rational expected = Rational(static_cast<long long>(qh), static_cast<long long>(e) * h);

    hist.all_within_bound = true;
    Rational max_dev(0);
    for (const auto& [idx, rep] : reps) {
        FrobeniusClassCount entry;
        entry.representative = rep;
        entry.count = counts.at(idx);
        entry.expected = expected;
        entry.bound = bound;
        Rational deviation = abs_rational(Rational(static_cast<long long>(entry.count)) - expected);
        entry.margin = bound - deviation;
        if (deviation > max_dev) max_dev = deviation;
        if (entry.margin < Rational(0)) hist.all_within_bound = false;
        hist.classes.push_back(std::move(entry));
    }
    std::sort(hist.classes.begin(), hist.classes.end(),
              [](const FrobeniusClassCount& a, const FrobeniusClassCount& b) {
                  return a.representative.to_index() < b.representative.to_index();
              });
    hist.normalized_max_deviation = max_dev.to_double() / std::sqrt(static_cast<double>(qh));
    return hist;
}

} // namespace foldecode
