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

#include "foldecode/hermitian_backend.hpp"

#include <algorithm>

namespace foldecode {

namespace {

struct HermitianFn final : FieldFunction {
    /* coefficient polynomials in x for y^0 .. y^{ell-1} */
    std::vector<Poly> yc;
    explicit HermitianFn(std::vector<Poly> c) : yc(std::move(c)) {}
};

} // namespace

HermitianBackend::HermitianBackend(unsigned ell) : ell_(ell)
{
    if (ell < 2) fail(ErrorKind::InvalidArgument, "curve parameter must be at least 2");
    unsigned long long q = 1ull * ell * ell;
    f_ = FieldSpec::make_order(q); // validates that ell is a prime power and q fits the cap
    if (f_->degree() % 2 != 0) fail(ErrorKind::InternalError, "field order is not a square");
}

std::shared_ptr<const HermitianBackend> HermitianBackend::make(unsigned ell)
{
    return std::shared_ptr<const HermitianBackend>(new HermitianBackend(ell));
}

FnPtr HermitianBackend::lift(const FieldPtr& f, std::vector<Poly> y_coeffs)
{
    if (!f) fail(ErrorKind::InternalError, "lift without a field");
    for (const Poly& p : y_coeffs)
        if (!p.is_zero() && !p.field()->same_as(*f)) fail(ErrorKind::FieldMismatch, "coefficient field mismatch");
    for (Poly& p : y_coeffs)
        if (!p.field()) p = Poly::zero(f);
    return std::make_shared<HermitianFn>(std::move(y_coeffs));
}

const std::vector<Poly>& HermitianBackend::unwrap(const FnPtr& f)
{
    const auto* h = dynamic_cast<const HermitianFn*>(f.get());
    if (h == nullptr) fail(ErrorKind::InvalidArgument, "function handle does not belong to the curve backend");
    return h->yc;
}

FieldElement HermitianBackend::gamma() const
{
    return f_->primitive_element();
}

void HermitianBackend::require_on_curve(const FieldElement& x, const FieldElement& y) const
{
    if (y.pow(ell_) + y != x.pow(ell_ + 1))
        fail(ErrorKind::InvalidArgument, "point (" + x.hex() + "," + y.hex() + ") is not on the curve");
}

Place HermitianBackend::point_place(const FieldElement& x, const FieldElement& y) const
{
    require_on_curve(x, y);
    Place p;
    p.kind = Place::Kind::Point;
    p.degree = 1;
    p.coords = {x, y};
    return p;
}

Place HermitianBackend::infinite_place() const
{
    Place p;
    p.kind = Place::Kind::Infinity;
    p.degree = 1;
    return p;
}

DivisorSpec HermitianBackend::divisor(int l) const
{
    DivisorSpec d;
    d.terms.emplace_back(infinite_place(), l);
    return d;
}

std::vector<Place> HermitianBackend::affine_points() const
{
    std::vector<Place> pts;
    unsigned long long q = f_->order();
    for (unsigned long long xi = 0; xi < q; ++xi) {
        FieldElement x = f_->element(xi);
        FieldElement rhs = x.pow(ell_ + 1);
        for (unsigned long long yi = 0; yi < q; ++yi) {
            FieldElement y = f_->element(yi);
            if (y.pow(ell_) + y == rhs) pts.push_back(point_place(x, y));
        }
    }
    return pts;
}

std::vector<PlaceOrbit> HermitianBackend::rational_place_orbits() const
{
    std::vector<Place> pts = affine_points();
    std::vector<PlaceOrbit> orbits;
    std::vector<bool> assigned(pts.size(), false);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (assigned[i]) continue;
        std::size_t length = 0;
        Place cur = pts[i];
        do {
            auto it = std::find(pts.begin(), pts.end(), cur);
            if (it == pts.end()) fail(ErrorKind::InternalError, "orbit left the affine point set");
            assigned[static_cast<std::size_t>(it - pts.begin())] = true;
            cur = sigma_place(cur, 1);
            ++length;
        } while (!(cur == pts[i]));
        orbits.push_back({pts[i], length});
    }
    return orbits;
}

Place HermitianBackend::sigma_place(const Place& p, long long power) const
{
    switch (p.kind) {
    case Place::Kind::Infinity:
        return p;
    case Place::Kind::Point: {
        FieldElement g = gamma();
        return point_place(p.coords.at(0) * g.pow(power), p.coords.at(1) * g.pow(power * (ell_ + 1)));
    }
    default:
        fail(ErrorKind::InvalidArgument, "place does not belong to the curve backend: " + p.str());
    }
}

RRBasis HermitianBackend::rr_basis(int l) const
{
    if (l < 0) fail(ErrorKind::UnsupportedDivisor, "negative multiples of the pole divisor are not supported");
    /* monomials x^i y^j with j < ell and pole order i*ell + j*(ell+1) <= l,
       sorted by pole order (all pole orders are distinct) */
    struct Mono {
        unsigned i, j, weight;
    };
    std::vector<Mono> monos;
    for (unsigned j = 0; j < ell_; ++j) {
        for (unsigned i = 0;; ++i) {
            unsigned weight = i * ell_ + j * (ell_ + 1);
            if (weight > static_cast<unsigned>(l)) break;
            monos.push_back({i, j, weight});
        }
    }
    std::sort(monos.begin(), monos.end(), [](const Mono& a, const Mono& b) { return a.weight < b.weight; });

    RRBasis basis;
    basis.multiplier = l;
    for (const Mono& m : monos) {
        std::vector<Poly> yc(ell_, Poly::zero(f_));
        yc[m.j] = Poly::variable(f_).pow(m.i);
        basis.functions.push_back(lift(f_, std::move(yc)));
    }
    return basis;
}

FnPtr HermitianBackend::combine(const RRBasis& basis, const std::vector<FieldElement>& coeffs) const
{
    if (coeffs.size() != basis.functions.size())
        fail(ErrorKind::LengthMismatch, "coefficient count does not match the basis dimension");
    std::vector<Poly> acc(ell_, Poly::zero(f_));
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const std::vector<Poly>& yc = unwrap(basis.functions[i]);
        for (std::size_t j = 0; j < yc.size() && j < acc.size(); ++j) acc[j] += yc[j].scaled(coeffs[i]);
    }
    return lift(f_, std::move(acc));
}

FnPtr HermitianBackend::sigma_fn(const FnPtr& f, long long power) const
{
    /* monomial x^i y^j picks up gamma^{-power (i + (ell+1) j)} */
    const std::vector<Poly>& yc = unwrap(f);
    FieldElement g = gamma();
    std::vector<Poly> out;
    out.reserve(yc.size());
    for (std::size_t j = 0; j < yc.size(); ++j) {
        Poly moved = yc[j].compose_scale(g.pow(-power));
        out.push_back(moved.scaled(g.pow(-power * static_cast<long long>((ell_ + 1) * j))));
    }
    return lift(f_, std::move(out));
}

FieldElement HermitianBackend::evaluate(const FnPtr& f, const Place& p) const
{
    const std::vector<Poly>& yc = unwrap(f);
    switch (p.kind) {
    case Place::Kind::Point: {
        FieldElement acc = f_->zero();
        FieldElement ypow = f_->one();
        for (const Poly& c : yc) {
            acc += c.eval(p.coords.at(0)) * ypow;
            ypow = ypow * p.coords.at(1);
        }
        return acc;
    }
    case Place::Kind::Infinity: {
        /* distinct pole orders cannot cancel: only constants are finite */
        bool constant = true;
        for (std::size_t j = 0; j < yc.size(); ++j)
            if ((j == 0 && yc[j].degree() > 0) || (j > 0 && !yc[j].is_zero())) constant = false;
        if (!constant) fail(ErrorKind::PoleAtPlace, "function has a pole at infinity");
        return yc.empty() ? f_->zero() : (yc[0].is_zero() ? f_->zero() : yc[0].coeff(0));
    }
    default:
        fail(ErrorKind::InvalidArgument, "evaluation requires a rational place, got " + p.str());
    }
}

std::pair<Series, Series> HermitianBackend::coordinate_series(const Place& p, std::size_t prec) const
{
    const FieldElement& x0 = p.coords.at(0);
    const FieldElement& y0 = p.coords.at(1);
    unsigned long long q = f_->order();
    Series xi = hensel_root_qm1(f_, x0.pow(static_cast<long long>(q - 1)), x0, prec);
    /* eta^ell + eta = xi^{ell+1} from eta(0) = y0: the fixed-point iteration
       eta <- xi^{ell+1} - eta^ell multiplies the error exponent by ell */
    Series target = xi.pow(ell_ + 1);
    Series eta = Series::constant(f_, y0, prec);
    std::size_t correct = 1;
    while (correct < prec) {
        eta = target - eta.pow(ell_);
        correct *= ell_;
    }
    if (!(eta.pow(ell_) + eta == target)) fail(ErrorKind::InternalError, "curve series iteration failed");
    return {xi, eta};
}

Series HermitianBackend::expand_series(const FnPtr& f, const Place& p, std::size_t prec) const
{
    if (p.kind != Place::Kind::Point || p.coords.at(0).is_zero())
        fail(ErrorKind::BadParameter, "no local parameter registered at " + p.str());
    const std::vector<Poly>& yc = unwrap(f);
    auto [xi, eta] = coordinate_series(p, prec);
    Series acc(f_, prec);
    Series ypow = Series::constant(f_, f_->one(), prec);
    for (const Poly& c : yc) {
        Series cs(f_, prec);
        for (int i = c.degree(); i >= 0; --i)
            cs = cs * xi + Series::constant(f_, c.coeff(static_cast<std::size_t>(i)), prec);
        acc += cs * ypow;
        ypow *= eta;
    }
    return acc;
}

LocalExpansion HermitianBackend::local_expand(const FnPtr& f, const Place& p, std::size_t prec) const
{
    Series probe = expand_series(f, p, prec);
    LocalExpansion ex;
    ex.anchor = p;
    ex.parameter =
        (Poly::variable(f_).pow(f_->order() - 1) - Poly::one(f_)).str("x");
    ex.field = f_;
    std::size_t v = 0;
    while (v < prec && probe.coeff(v).is_zero()) ++v;
    if (v == prec) {
        /* identically zero through the window; report start 0 */
        ex.start = 0;
        ex.coeffs.assign(prec, f_->zero());
        return ex;
    }
    Series full = expand_series(f, p, prec + v);
    ex.start = static_cast<int>(v);
    ex.coeffs.assign(full.coeffs().begin() + static_cast<long>(v), full.coeffs().end());
    return ex;
}

Place HermitianBackend::anchor_place(const std::vector<Place>& avoid) const
{
    std::optional<Place> fallback;
    for (const PlaceOrbit& orbit : rational_place_orbits()) {
        Place candidate = orbit.representative;
        for (std::size_t i = 0; i < orbit.length; ++i) {
            if (!candidate.coords.at(0).is_zero()) {
                if (!fallback) fallback = candidate;
                if (std::find(avoid.begin(), avoid.end(), candidate) == avoid.end()) return candidate;
            }
            candidate = sigma_place(candidate, 1);
        }
    }
    if (fallback) return *fallback;
    fail(ErrorKind::InsufficientPlaces, "no completely-split place available for expansions");
}

BackendDescriptor HermitianBackend::descriptor() const
{
    BackendDescriptor d;
    d.kind = "hermitian";
    d.sigma = "diagonal";
    d.p = f_->characteristic();
    d.k = f_->degree();
    d.modulus = f_->modulus();
    d.ell = ell_;
    return d;
}

} // namespace foldecode
