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

#include "foldecode/rational_backend.hpp"

#include <algorithm>

namespace foldecode {

namespace {

struct RationalFn final : FieldFunction {
    RatFn fn;
    explicit RationalFn(RatFn f) : fn(std::move(f)) {}
};

unsigned long long inverse_mod(unsigned long long a, unsigned long long m)
{
    long long r0 = static_cast<long long>(m), r1 = static_cast<long long>(a % m), s0 = 0, s1 = 1;
    while (r1 != 0) {
        long long q = r0 / r1;
        long long r2 = r0 - q * r1, s2 = s0 - q * s1;
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
    }
    if (r0 != 1) fail(ErrorKind::InternalError, "modular inverse does not exist");
    long long s = s0 % static_cast<long long>(m);
    if (s < 0) s += static_cast<long long>(m);
    return static_cast<unsigned long long>(s);
}

} // namespace

RationalBackend::RationalBackend(FieldPtr f, Sigma sigma) : f_(std::move(f)), sigma_(sigma)
{
    if (!f_) fail(ErrorKind::InternalError, "backend without a field");
}

std::shared_ptr<const RationalBackend> RationalBackend::make(FieldPtr f, Sigma sigma)
{
    return std::shared_ptr<const RationalBackend>(new RationalBackend(std::move(f), sigma));
}

FnPtr RationalBackend::lift(RatFn fn)
{
    return std::make_shared<RationalFn>(std::move(fn));
}

const RatFn& RationalBackend::unwrap(const FnPtr& f)
{
    const auto* r = dynamic_cast<const RationalFn*>(f.get());
    if (r == nullptr) fail(ErrorKind::InvalidArgument, "function handle does not belong to the rational backend");
    return r->fn;
}

FieldElement RationalBackend::gamma() const
{
    return f_->primitive_element();
}

Place RationalBackend::finite_place(const FieldElement& a) const
{
    Place p;
    p.kind = Place::Kind::Coordinate;
    p.degree = 1;
    p.coords = {a};
    return p;
}

Place RationalBackend::infinite_place() const
{
    Place p;
    p.kind = Place::Kind::Infinity;
    p.degree = 1;
    return p;
}

DivisorSpec RationalBackend::divisor(int l) const
{
    DivisorSpec d;
    d.terms.emplace_back(infinite_place(), l);
    return d;
}

std::vector<PlaceOrbit> RationalBackend::rational_place_orbits() const
{
    std::vector<PlaceOrbit> orbits;
    unsigned long long q = f_->order();
    if (sigma_ == Sigma::Multiplicative) {
        orbits.push_back({finite_place(f_->one()), static_cast<std::size_t>(q - 1)});
        orbits.push_back({finite_place(f_->zero()), 1});
    } else {
        unsigned long long p = f_->characteristic();
        std::vector<bool> seen(q, false);
        for (unsigned long long idx = 0; idx < q; ++idx) {
            if (seen[idx]) continue;
            FieldElement rep = f_->element(idx);
            for (unsigned long long j = 0; j < p; ++j) seen[(rep + f_->from_prime(j)).index()] = true;
            orbits.push_back({finite_place(rep), static_cast<std::size_t>(p)});
        }
    }
    return orbits;
}

Place RationalBackend::sigma_place(const Place& p, long long power) const
{
    switch (p.kind) {
    case Place::Kind::Infinity:
        return p;
    case Place::Kind::Coordinate: {
        const FieldElement& a = p.coords.at(0);
        if (sigma_ == Sigma::Multiplicative) return finite_place(a * gamma().pow(power));
        long long pp = static_cast<long long>(f_->characteristic());
        long long w = ((power % pp) + pp) % pp;
        return finite_place(a + f_->from_prime(static_cast<unsigned long long>(w)));
    }
    case Place::Kind::Irreducible: {
        /* roots move like coordinates; the minimal polynomial moves by the
           inverse substitution */
        Place out = p;
        if (sigma_ == Sigma::Multiplicative) {
            out.min_poly = p.min_poly.compose_scale(gamma().pow(-power)).monic();
        } else {
            long long pp = static_cast<long long>(f_->characteristic());
            long long w = ((-power % pp) + pp) % pp;
            out.min_poly = p.min_poly.compose_shift(f_->from_prime(static_cast<unsigned long long>(w)));
        }
        return out;
    }
    case Place::Kind::Point:
        break;
    }
    fail(ErrorKind::InvalidArgument, "place does not belong to the rational backend: " + p.str());
}

RRBasis RationalBackend::rr_basis(int l) const
{
    if (l < 0) fail(ErrorKind::UnsupportedDivisor, "negative multiples of the pole divisor are not supported");
    RRBasis basis;
    basis.multiplier = l;
    Poly x = Poly::variable(f_);
    for (int i = 0; i <= l; ++i) basis.functions.push_back(lift(RatFn::from_poly(x.pow(static_cast<unsigned long long>(i)))));
    return basis;
}

FnPtr RationalBackend::combine(const RRBasis& basis, const std::vector<FieldElement>& coeffs) const
{
    if (coeffs.size() != basis.functions.size())
        fail(ErrorKind::LengthMismatch, "coefficient count does not match the basis dimension");
    RatFn acc = RatFn::zero(f_);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const RatFn& z = unwrap(basis.functions[i]);
        acc += RatFn(z.num().scaled(coeffs[i]), z.den());
    }
    return lift(std::move(acc));
}

FnPtr RationalBackend::sigma_fn(const FnPtr& f, long long power) const
{
    const RatFn& fn = unwrap(f);
    if (sigma_ == Sigma::Multiplicative) return lift(fn.compose_scale(gamma().pow(-power)));
    long long pp = static_cast<long long>(f_->characteristic());
    long long w = ((-power % pp) + pp) % pp;
    return lift(fn.compose_shift(f_->from_prime(static_cast<unsigned long long>(w))));
}

FieldElement RationalBackend::evaluate(const FnPtr& f, const Place& p) const
{
    const RatFn& fn = unwrap(f);
    switch (p.kind) {
    case Place::Kind::Coordinate:
        return fn.eval(p.coords.at(0));
    case Place::Kind::Infinity: {
        if (fn.is_zero()) return f_->zero();
        int v = fn.valuation_at_infinity();
        if (v > 0) return f_->zero();
        if (v == 0) return fn.num().leading() / fn.den().leading();
        fail(ErrorKind::PoleAtPlace, "function has a pole at infinity");
    }
    default:
        fail(ErrorKind::InvalidArgument, "evaluation requires a rational place, got " + p.str());
    }
}

Poly RationalBackend::fiber_parameter(const FieldElement& a) const
{
    unsigned long long q = f_->order();
    Poly x = Poly::variable(f_);
    if (sigma_ == Sigma::Multiplicative) {
        if (a.is_zero() && q > 2)
            fail(ErrorKind::BadParameter, "no sigma-fixed local parameter exists at X=0");
        return x.pow(q - 1) - Poly::constant(f_, a.pow(static_cast<long long>(q - 1)));
    }
    unsigned long long p = f_->characteristic();
    FieldElement wp = a.pow(static_cast<long long>(p)) - a;
    return x.pow(p) - x - Poly::constant(f_, wp);
}

Series RationalBackend::coordinate_series(const FieldElement& a, std::size_t prec) const
{
    unsigned long long q = f_->order();
    if (sigma_ == Sigma::Multiplicative) {
        if (q == 2) {
            /* t = X - a directly */
            Series s = Series::constant(f_, a, std::max<std::size_t>(prec, 2));
            s.coeff_mut(1) = f_->one();
            return s.truncated(prec);
        }
        return hensel_root_qm1(f_, a.pow(static_cast<long long>(q - 1)), a, prec);
    }
    Series shift = prec >= 2 ? artin_schreier_root(f_, prec) : Series(f_, prec);
    return Series::constant(f_, a, prec) + shift;
}

Series RationalBackend::expand_series(const FnPtr& f, const Place& p, std::size_t prec) const
{
    if (p.kind != Place::Kind::Coordinate)
        fail(ErrorKind::BadParameter, "no local parameter registered at " + p.str());
    const FieldElement& a = p.coords.at(0);
    fiber_parameter(a); // BadParameter check
    const RatFn& fn = unwrap(f);
    if (fn.is_zero()) return Series(f_, prec);
    if (fn.valuation_at(a) < 0)
        fail(ErrorKind::PoleAtPlace, "function has a pole at " + p.str());

    Series xi = coordinate_series(a, prec);
    Series num(f_, prec), den(f_, prec);
    for (int i = fn.num().degree(); i >= 0; --i)
        num = num * xi + Series::constant(f_, fn.num().coeff(static_cast<std::size_t>(i)), prec);
    for (int i = fn.den().degree(); i >= 0; --i)
        den = den * xi + Series::constant(f_, fn.den().coeff(static_cast<std::size_t>(i)), prec);
    return num * den.inverse();
}

LocalExpansion RationalBackend::local_expand(const FnPtr& f, const Place& p, std::size_t prec) const
{
    if (p.kind != Place::Kind::Coordinate)
        fail(ErrorKind::BadParameter, "no local parameter registered at " + p.str());
    const FieldElement& a = p.coords.at(0);
    Poly t = fiber_parameter(a);
    const RatFn& fn = unwrap(f);

    LocalExpansion ex;
    ex.anchor = p;
    ex.parameter = t.str("X");
    ex.field = f_;
    if (fn.is_zero()) {
        ex.start = 0;
        ex.coeffs.assign(prec, f_->zero());
        return ex;
    }
    int v = fn.valuation_at(a);
    RatFn tf = RatFn::from_poly(t);
    RatFn g = v >= 0 ? fn / RatFn(tf.num().pow(static_cast<unsigned long long>(v)), tf.den())
                     : fn * RatFn(tf.num().pow(static_cast<unsigned long long>(-v)), tf.den());
    Series s = expand_series(lift(g), p, prec);
    if (s.coeff(0).is_zero()) fail(ErrorKind::InternalError, "valuation bookkeeping failed");
    ex.start = v;
    ex.coeffs = s.coeffs();
    return ex;
}

Place RationalBackend::anchor_place(const std::vector<Place>& avoid) const
{
    std::optional<Place> fallback;
    for (const PlaceOrbit& orbit : rational_place_orbits()) {
        Place candidate = orbit.representative;
        for (std::size_t i = 0; i < orbit.length; ++i) {
            bool parameterized = true;
            try {
                fiber_parameter(candidate.coords.at(0));
            } catch (const Error&) {
                parameterized = false;
            }
            if (parameterized) {
                if (!fallback) fallback = candidate;
                if (std::find(avoid.begin(), avoid.end(), candidate) == avoid.end()) return candidate;
            }
            candidate = sigma_place(candidate, 1);
        }
    }
    if (fallback) return *fallback;
    fail(ErrorKind::InsufficientPlaces, "no completely-split place available for expansions");
}

std::optional<FrobeniusPowerWitness> RationalBackend::frobenius_witness() const
{
    unsigned long long q = f_->order();
    FrobeniusPowerWitness w;
    Place r;
    r.kind = Place::Kind::Irreducible;
    if (sigma_ == Sigma::Multiplicative) {
        if (q == 2) return std::nullopt; // trivial automorphism
        /* X^{q-1} - gamma, irreducible by the binomial criterion because
           gamma generates the multiplicative group */
        r.min_poly = Poly::variable(f_).pow(q - 1) - Poly::constant(f_, gamma());
        r.degree = static_cast<unsigned>(q - 1);
        w.u = 1;
    } else {
        /* X^p - X - c with nonzero trace, irreducible by the Artin-Schreier
           criterion; the q-power Frobenius adds Tr(c), so its u-th power adds
           u Tr(c) = 1 */
        unsigned long long p = f_->characteristic();
        FieldElement c = f_->zero();
        bool found = false;
        for (unsigned long long idx = 0; idx < q; ++idx) {
            c = f_->element(idx);
            if (c.trace_to_prime() != 0) {
                found = true;
                break;
            }
        }
        if (!found) fail(ErrorKind::InternalError, "no element of nonzero trace");
        r.min_poly = Poly::variable(f_).pow(p) - Poly::variable(f_) - Poly::constant(f_, c);
        r.degree = static_cast<unsigned>(p);
        w.u = static_cast<unsigned>(inverse_mod(c.trace_to_prime(), p));
    }
    w.places = {r};
    return w;
}

BackendDescriptor RationalBackend::descriptor() const
{
    BackendDescriptor d;
    d.kind = "rational";
    d.sigma = sigma_ == Sigma::Multiplicative ? "multiplicative" : "additive";
    d.p = f_->characteristic();
    d.k = f_->degree();
    d.modulus = f_->modulus();
    d.ell = 0;
    return d;
}

} // namespace foldecode
