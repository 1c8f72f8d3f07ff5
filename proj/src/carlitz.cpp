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

#include "foldecode/carlitz.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

namespace foldecode {

namespace {

void require_field(const FieldPtr& f)
{
    if (!f) fail(ErrorKind::InvalidArgument, "null field");
}

void require_same(const FieldPtr& a, const FieldPtr& b)
{
    require_field(a);
    require_field(b);
    if (!a->same_as(*b)) fail(ErrorKind::FieldMismatch, "coefficient fields differ");
}

/* polynomial in t with coefficients in A = GF(q)[T]; the torsion module is
   realized inside the quotient A[t]/(J_Q) */
struct BiPoly {
    FieldPtr f;
    std::vector<Poly> c; // by t power

    explicit BiPoly(FieldPtr field) : f(std::move(field)) {}

    void trim()
    {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    Poly coeff(std::size_t i) const { return i < c.size() ? c[i] : Poly::zero(f); }

    static BiPoly t_power(const FieldPtr& f, std::size_t k)
    {
        BiPoly r(f);
        r.c.assign(k + 1, Poly::zero(f));
        r.c[k] = Poly::one(f);
        return r;
    }
};

BiPoly add(const BiPoly& a, const BiPoly& b)
{
    BiPoly r(a.f);
    r.c.resize(std::max(a.c.size(), b.c.size()), Poly::zero(a.f));
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.coeff(i) + b.coeff(i);
    r.trim();
    return r;
}

BiPoly mul(const BiPoly& a, const BiPoly& b)
{
    BiPoly r(a.f);
    if (a.is_zero() || b.is_zero()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, Poly::zero(a.f));
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    }
    r.trim();
    return r;
}

BiPoly scale(const BiPoly& a, const Poly& s)
{
    BiPoly r(a.f);
    r.c.reserve(a.c.size());
    for (const Poly& ci : a.c) r.c.push_back(ci * s);
    r.trim();
    return r;
}

/* division by a divisor monic in t; coefficients stay in A */
std::pair<BiPoly, BiPoly> divmod_monic(const BiPoly& a, const BiPoly& d)
{
    if (d.is_zero() || !d.c.back().is_one())
        fail(ErrorKind::InternalError, "torsion division needs a divisor monic in t");
    BiPoly q(a.f);
    BiPoly r = a;
    while (!r.is_zero() && r.degree() >= d.degree()) {
        std::size_t shift = static_cast<std::size_t>(r.degree() - d.degree());
        Poly lead = r.c.back();
        if (q.c.size() < shift + 1) q.c.resize(shift + 1, Poly::zero(a.f));
        q.c[shift] += lead;
        for (std::size_t i = 0; i < d.c.size(); ++i) r.c[shift + i] -= lead * d.c[i];
        r.trim();
    }
    q.trim();
    return {q, r};
}

BiPoly mod(const BiPoly& a, const BiPoly& m) { return divmod_monic(a, m).second; }

/* canonical key of a reduced element, for distinctness counting */
std::vector<unsigned long long> key_of(const BiPoly& x)
{
    std::vector<unsigned long long> k;
    k.reserve(x.c.size());
    for (const Poly& ci : x.c) k.push_back(ci.to_index());
    return k;
}

/* phi_a as an ordinary polynomial in t: pi^i becomes t^{p^i} */
BiPoly as_t_polynomial(const TwistedPoly& tw)
{
    const FieldPtr& f = tw.field();
    unsigned long long p = f->characteristic();
    BiPoly r(f);
    for (int i = 0; i <= tw.degree(); ++i) {
        Poly ci = tw.coeff(static_cast<std::size_t>(i));
        if (ci.is_zero()) continue;
        unsigned long long deg = ipow_checked(p, static_cast<unsigned>(i));
        BiPoly term = scale(BiPoly::t_power(f, static_cast<std::size_t>(deg)), ci);
        r = add(r, term);
    }
    return r;
}

/* image of x under phi_a inside A[t]/(j) */
BiPoly act(const CarlitzModule& cm, const Poly& a, const BiPoly& x, const BiPoly& j)
{
    unsigned long long p = cm.f->characteristic();
    TwistedPoly tw = cm.phi_of(a);
    BiPoly acc(cm.f);
    BiPoly xp = mod(x, j);
    for (int i = 0; i <= tw.degree(); ++i) {
        if (i > 0) {
            BiPoly next = xp;
            for (unsigned long long e = 1; e < p; ++e) next = mod(mul(next, xp), j);
            xp = next;
        }
        Poly ci = tw.coeff(static_cast<std::size_t>(i));
        if (!ci.is_zero()) acc = add(acc, scale(xp, ci));
    }
    return acc;
}

std::vector<Poly> monic_divisors(const Poly& q_poly)
{
    std::vector<Poly> out;
    for (int d = 0; d <= q_poly.degree(); ++d) {
        for_each_monic(q_poly.field(), d, [&](const Poly& cand) {
            if ((q_poly % cand).is_zero()) out.push_back(cand);
        });
    }
    return out;
}

unsigned long long checked_mul(unsigned long long a, unsigned long long b)
{
    __int128 v = static_cast<__int128>(a) * b;
    if (v > (static_cast<__int128>(1) << 62)) fail(ErrorKind::CapExceeded, "order exceeds 2^62");
    return static_cast<unsigned long long>(v);
}

} // namespace

TwistedPoly TwistedPoly::from_coeffs(FieldPtr f, std::vector<Poly> c)
{
    require_field(f);
    TwistedPoly r(f);
    r.c_ = std::move(c);
    for (Poly& ci : r.c_) {
        if (ci.field() == nullptr)
            ci = Poly::zero(f);
        else
            require_same(ci.field(), f);
    }
    r.trim();
    return r;
}

TwistedPoly TwistedPoly::scalar(const Poly& a)
{
    require_field(a.field());
    TwistedPoly r(a.field());
    r.c_ = {a};
    r.trim();
    return r;
}

TwistedPoly TwistedPoly::pi(FieldPtr f, unsigned power)
{
    require_field(f);
    TwistedPoly r(f);
    r.c_.assign(power + 1, Poly::zero(f));
    r.c_.back() = Poly::one(f);
    return r;
}

void TwistedPoly::trim()
{
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly TwistedPoly::coeff(std::size_t i) const
{
    require_field(f_);
    return i < c_.size() ? c_[i] : Poly::zero(f_);
}

Poly TwistedPoly::leading() const
{
    require_field(f_);
    return c_.empty() ? Poly::zero(f_) : c_.back();
}

TwistedPoly operator+(const TwistedPoly& a, const TwistedPoly& b)
{
    require_same(a.f_, b.f_);
    TwistedPoly r(a.f_);
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), Poly::zero(a.f_));
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.coeff(i) + b.coeff(i);
    r.trim();
    return r;
}

TwistedPoly operator-(const TwistedPoly& a, const TwistedPoly& b)
{
    require_same(a.f_, b.f_);
    TwistedPoly r(a.f_);
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), Poly::zero(a.f_));
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.coeff(i) - b.coeff(i);
    r.trim();
    return r;
}

TwistedPoly operator*(const TwistedPoly& a, const TwistedPoly& b)
{
    require_same(a.f_, b.f_);
    TwistedPoly r(a.f_);
    if (a.is_zero() || b.is_zero()) return r;
    unsigned long long p = a.f_->characteristic();
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Poly::zero(a.f_));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        unsigned long long frob = ipow_checked(p, static_cast<unsigned>(i));
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j].is_zero()) continue;
            r.c_[i + j] += a.c_[i] * b.c_[j].pow(frob);
        }
    }
    r.trim();
    return r;
}

CarlitzModule::CarlitzModule(FieldPtr field) : f(std::move(field)), lambda(0)
{
    require_field(f);
    lambda = f->degree();
}

TwistedPoly CarlitzModule::phi_of(const Poly& a) const
{
    require_same(a.field(), f);
    std::vector<Poly> base(lambda + 1, Poly::zero(f));
    base[0] = Poly::variable(f);
    base[lambda] = Poly::one(f);
    TwistedPoly phi_t = TwistedPoly::from_coeffs(f, std::move(base));

    TwistedPoly acc(f);
    TwistedPoly power = TwistedPoly::scalar(Poly::one(f));
    for (int d = 0; d <= a.degree(); ++d) {
        FieldElement ad = a.coeff(static_cast<std::size_t>(d));
        if (!ad.is_zero()) acc += TwistedPoly::scalar(Poly::constant(f, ad)) * power;
        if (d < a.degree()) power *= phi_t;
    }
    return acc;
}

unsigned long long carlitz_totient(const Poly& q_poly)
{
    require_field(q_poly.field());
    if (q_poly.degree() < 1 || !q_poly.is_monic())
        fail(ErrorKind::InvalidArgument, "totient needs a monic nonconstant modulus");
    const FieldPtr& f = q_poly.field();
    unsigned long long q = f->order();
    unsigned long long result = 1;
    Poly rem = q_poly;
    for (int d = 1; d <= q_poly.degree() && rem.degree() > 0; ++d) {
        for_each_monic_irreducible(f, d, [&](const Poly& p) {
            unsigned e = 0;
            while ((rem % p).is_zero()) {
                rem = rem / p;
                ++e;
            }
            if (e == 0) return;
            unsigned long long qd = ipow_checked(q, static_cast<unsigned>(d));
            result = checked_mul(result, ipow_checked(qd, e - 1));
            result = checked_mul(result, qd - 1);
        });
    }
    if (rem.degree() != 0) fail(ErrorKind::InternalError, "factorization left a nonconstant part");
    return result;
}

TorsionReport torsion_report(const FieldPtr& f, const Poly& q_poly)
{
    require_field(f);
    require_same(q_poly.field(), f);
    if (q_poly.degree() < 1 || !q_poly.is_monic())
        fail(ErrorKind::InvalidArgument, "torsion needs a monic nonconstant modulus");
    if (q_poly.degree() > 4)
        fail(ErrorKind::SplittingFieldTooLarge,
             "torsion modulus degree above 4 needs an impractically large splitting field");

    CarlitzModule cm(f);
    unsigned long long q = f->order();
    unsigned degree = static_cast<unsigned>(q_poly.degree());

    /* J_E for every monic divisor E, in increasing degree order; phi_E(t)
       factors as the product of J_D over monic divisors D of E */
    std::vector<Poly> divisors = monic_divisors(q_poly);
    std::map<unsigned long long, BiPoly> cyclo;
    for (const Poly& dv : divisors) {
        if (dv.degree() == 0) {
            cyclo.emplace(dv.to_index(), BiPoly::t_power(f, 1));
            continue;
        }
        BiPoly num = as_t_polynomial(cm.phi_of(dv));
        for (const Poly& ev : divisors) {
            if (ev == dv || ev.degree() > dv.degree()) continue;
            if (!(dv % ev).is_zero()) continue;
            auto [quot, rem] = divmod_monic(num, cyclo.at(ev.to_index()));
            if (!rem.is_zero()) fail(ErrorKind::InternalError, "torsion factor division not exact");
            num = quot;
        }
        cyclo.emplace(dv.to_index(), num);
    }

    const BiPoly& j_q = cyclo.at(q_poly.to_index());
    TorsionReport rep;
    rep.modulus = q_poly;
    rep.torsion_polynomial = cm.phi_of(q_poly);
    rep.cyclotomic = j_q.c;
    rep.expected_cardinality = ipow_checked(q, degree);
    rep.phi_q = carlitz_totient(q_poly);
    if (static_cast<unsigned long long>(j_q.degree()) != rep.phi_q)
        fail(ErrorKind::InternalError, "generator polynomial degree disagrees with the unit count");

    std::vector<Poly> primes;
    for (const Poly& dv : divisors)
        if (dv.degree() >= 1 && dv.irreducible()) primes.push_back(dv);

    auto annihilated_exactly = [&](const BiPoly& x) {
        for (const Poly& p : primes)
            if (act(cm, q_poly / p, x, j_q).is_zero()) return false;
        return true;
    };

    BiPoly lambda0 = mod(BiPoly::t_power(f, 1), j_q);
    std::set<std::vector<unsigned long long>> seen;
    std::vector<BiPoly> torsion;
    torsion.reserve(rep.expected_cardinality);
    for (unsigned long long idx = 0; idx < rep.expected_cardinality; ++idx) {
        BiPoly val = act(cm, Poly::from_index(f, idx), lambda0, j_q);
        seen.insert(key_of(val));
        torsion.push_back(std::move(val));
    }
    rep.cardinality = seen.size();
    rep.all_distinct = rep.cardinality == rep.expected_cardinality;

    rep.all_roots = true;
    for (const BiPoly& val : torsion)
        if (!act(cm, q_poly, val, j_q).is_zero()) rep.all_roots = false;

    rep.annihilator_is_q = annihilated_exactly(lambda0);
    rep.cyclic = rep.all_distinct && rep.all_roots && rep.annihilator_is_q;

    for (unsigned long long idx = 1; idx < rep.expected_cardinality; ++idx) {
        Poly a = Poly::from_index(f, idx);
        if (gcd(a, q_poly).degree() != 0) continue;
        if (annihilated_exactly(act(cm, a, lambda0, j_q))) ++rep.generator_count;
    }
    return rep;
}

NarrowRayOrders narrow_ray_class_order(unsigned long long q, unsigned d, unsigned long long h)
{
    if (q < 2 || d < 1 || h < 1) fail(ErrorKind::InvalidArgument, "need q >= 2, d >= 1, h >= 1");
    unsigned long long qd = ipow_checked(q, d);
    NarrowRayOrders orders;
    orders.narrow_ray = checked_mul(qd - 1, h);
    if ((qd - 1) % (q - 1) != 0) fail(ErrorKind::InternalError, "unit-image index not integral");
    orders.class_group = checked_mul((qd - 1) / (q - 1), h);
    return orders;
}

long long class_field_genus(unsigned long long q, unsigned d, unsigned long long g_f, unsigned long long h)
{
    if (q < 2 || h < 1) fail(ErrorKind::InvalidArgument, "need q >= 2 and h >= 1");
    if (d < 2) fail(ErrorKind::InvalidArgument, "conductor degree must be at least 2");
    unsigned long long qd = ipow_checked(q, d);
    using I = __int128;
    I ext = static_cast<I>(qd - 1) * h;
    I quot = ext / (q - 1);
    if (ext % (q - 1) != 0) fail(ErrorKind::InternalError, "unit-image index not integral");
    I rhs = (2 * static_cast<I>(g_f) - 2) * ext + static_cast<I>(q - 2) * quot +
            static_cast<I>(d) * static_cast<I>(qd - 2) * h;
    if (((rhs % 2) + 2) % 2 != 0)
        fail(ErrorKind::NonIntegerGenus, "degree identity produced an odd value for 2g - 2");
    I g = (rhs + 2) / 2;
    if (g < 0) fail(ErrorKind::InternalError, "negative genus from the degree identity");
    if (g > (static_cast<I>(1) << 62)) fail(ErrorKind::CapExceeded, "genus exceeds 2^62");
    return static_cast<long long>(g);
}

ClassfieldCodeParameters classfield_code_parameters(unsigned long long ell, unsigned long long n, long long g_e)
{
    unsigned long long root = isqrt(ell);
    if (root < 2 || root * root != ell)
        fail(ErrorKind::InvalidArgument, "alphabet size must be a perfect square of at least 4");
    if (n < 1) fail(ErrorKind::InvalidArgument, "need at least one rational place on the base");

    ClassfieldCodeParameters out;
    out.r = 2 * ((n + root - 2) / (root - 1)) + 1;
    unsigned long long power = ipow_checked(ell, static_cast<unsigned>(out.r));
    if ((power + 1) % (ell + 1) != 0) fail(ErrorKind::InternalError, "cover degree not integral");
    out.e = (power + 1) / (ell + 1);
    out.genus_bound = Rational(g_e - 1) * Rational(static_cast<long long>(out.e)) +
                      Rational(static_cast<long long>(out.r), 2) *
                          Rational(static_cast<long long>(out.e) - 1) +
                      Rational(1);
    out.rational_place_bound = Rational(static_cast<long long>(checked_mul(out.e, n)));
    out.list_exponent_per_s = root - 1;
    return out;
}

Rational tau_asymptotic(unsigned long long ell, unsigned m, unsigned s, const Rational& rate)
{
    unsigned long long root = isqrt(ell);
    if (root < 2 || root * root != ell)
        fail(ErrorKind::InvalidArgument, "alphabet size must be a perfect square of at least 4");
    if (s < 1 || m < s) fail(ErrorKind::InvalidArgument, "need 1 <= s <= m");
    Rational penalty = rate + Rational(2, static_cast<long long>(root) - 1);
    Rational stretch = Rational(m, static_cast<long long>(m) - s + 1);
    return Rational(s, static_cast<long long>(s) + 1) * (Rational(1) - stretch * penalty);
}

} // namespace foldecode
