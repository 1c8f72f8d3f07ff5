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

#include "foldecode/poly.hpp"

#include <algorithm>
#include <cctype>

namespace foldecode {

namespace {

void require_field(const FieldPtr& f)
{
    if (!f) fail(ErrorKind::InternalError, "polynomial without a field");
}

void require_same_field(const Poly& a, const Poly& b)
{
    require_field(a.field());
    require_field(b.field());
    if (a.field().get() != b.field().get() && !a.field()->same_as(*b.field()))
        fail(ErrorKind::FieldMismatch, "polynomials over different fields");
}

} // namespace

Poly::Poly(FieldPtr f, std::vector<FieldElement> c) : f_(std::move(f)), c_(std::move(c))
{
    require_field(f_);
    trim();
}

void Poly::trim()
{
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::one(FieldPtr f)
{
    require_field(f);
    FieldElement e = f->one();
    return Poly(std::move(f), {e});
}

Poly Poly::variable(FieldPtr f)
{
    require_field(f);
    FieldElement z = f->zero(), o = f->one();
    return Poly(std::move(f), {z, o});
}

Poly Poly::constant(FieldPtr f, const FieldElement& c)
{
    require_field(f);
    return Poly(std::move(f), {c});
}

Poly Poly::from_index(FieldPtr f, unsigned long long idx)
{
    require_field(f);
    std::vector<FieldElement> c;
    unsigned long long q = f->order();
    while (idx > 0) {
        c.push_back(f->element(idx % q));
        idx /= q;
    }
    return Poly(std::move(f), std::move(c));
}

unsigned long long Poly::to_index() const
{
    require_field(f_);
    unsigned long long q = f_->order(), idx = 0, w = 1;
    for (const FieldElement& e : c_) {
        unsigned long long t = e.index() * w;
        idx += t;
        w *= q;
    }
    return idx;
}

bool Poly::is_one() const
{
    return c_.size() == 1 && c_[0].is_one();
}

FieldElement Poly::coeff(std::size_t i) const
{
    require_field(f_);
    return i < c_.size() ? c_[i] : f_->zero();
}

FieldElement Poly::leading() const
{
    require_field(f_);
    return c_.empty() ? f_->zero() : c_.back();
}

Poly Poly::operator-() const
{
    Poly r = *this;
    for (FieldElement& e : r.c_) e = -e;
    return r;
}

Poly operator+(const Poly& a, const Poly& b)
{
    require_same_field(a, b);
    std::vector<FieldElement> c(std::max(a.c_.size(), b.c_.size()), a.f_->zero());
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i < a.c_.size()) c[i] += a.c_[i];
        if (i < b.c_.size()) c[i] += b.c_[i];
    }
    return Poly(a.f_, std::move(c));
}

Poly operator-(const Poly& a, const Poly& b)
{
    return a + (-b);
}

Poly operator*(const Poly& a, const Poly& b)
{
    require_same_field(a, b);
    if (a.is_zero() || b.is_zero()) return Poly::zero(a.f_);
    std::vector<FieldElement> c(a.c_.size() + b.c_.size() - 1, a.f_->zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(a.f_, std::move(c));
}

Poly Poly::scaled(const FieldElement& c) const
{
    Poly r = *this;
    for (FieldElement& e : r.c_) e = e * c;
    r.trim();
    return r;
}

bool operator==(const Poly& a, const Poly& b)
{
    if (!a.f_ || !b.f_) return a.c_.empty() && b.c_.empty() && !!a.f_ == !!b.f_;
    if (a.f_.get() != b.f_.get() && !a.f_->same_as(*b.f_)) return false;
    return a.c_ == b.c_;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const
{
    require_same_field(*this, d);
    if (d.is_zero()) fail(ErrorKind::DivisionByZero, "polynomial division by zero");
    Poly q = Poly::zero(f_), r = *this;
    FieldElement lead_inv = d.leading().inverse();
    int dd = d.degree();
    while (r.degree() >= dd) {
        int k = r.degree() - dd;
        FieldElement c = r.leading() * lead_inv;
        std::vector<FieldElement> mono(static_cast<std::size_t>(k) + 1, f_->zero());
        mono.back() = c;
        Poly m(f_, std::move(mono));
        q += m;
        r -= m * d;
    }
    return {q, r};
}

Poly Poly::monic() const
{
    if (is_zero()) return *this;
    return scaled(leading().inverse());
}

Poly Poly::pow(unsigned long long e) const
{
    require_field(f_);
    Poly r = Poly::one(f_), b = *this;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

Poly Poly::derivative() const
{
    require_field(f_);
    if (c_.size() <= 1) return Poly::zero(f_);
    std::vector<FieldElement> c;
    c.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) c.push_back(f_->from_prime(i % f_->characteristic()) * c_[i]);
    return Poly(f_, std::move(c));
}

FieldElement Poly::eval(const FieldElement& x) const
{
    require_field(f_);
    FieldElement r = f_->zero();
    for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
}

Poly Poly::compose_scale(const FieldElement& c) const
{
    require_field(f_);
    std::vector<FieldElement> out = c_;
    FieldElement w = f_->one();
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = out[i] * w;
        w = w * c;
    }
    return Poly(f_, std::move(out));
}

Poly Poly::compose_shift(const FieldElement& c) const
{
    require_field(f_);
    Poly shifted(f_, {c, f_->one()});
    Poly r = Poly::zero(f_);
    for (std::size_t i = c_.size(); i-- > 0;) r = r * shifted + Poly::constant(f_, c_[i]);
    return r;
}

Poly powmod(const Poly& a, unsigned long long e, const Poly& m)
{
    Poly r = Poly::one(a.field()), b = a % m;
    while (e > 0) {
        if (e & 1) r = (r * b) % m;
        b = (b * b) % m;
        e >>= 1;
    }
    return r;
}

bool Poly::irreducible() const
{
    /* monic-normalized f of degree d over GF(q) is irreducible iff
       x^{q^d} = x mod f and gcd(x^{q^{d/r}} - x, f) = 1 for every prime r | d */
    require_field(f_);
    int d = degree();
    if (d < 1) return false;
    if (d == 1) return true;
    Poly f = monic();
    unsigned long long q = f_->order();
    std::vector<int> primes;
    int n = d;
    for (int r = 2; r * r <= n; ++r) {
        if (n % r == 0) {
            primes.push_back(r);
            while (n % r == 0) n /= r;
        }
    }
    if (n > 1) primes.push_back(n);
    Poly x = Poly::variable(f_);
    Poly xp = x % f;
    for (int j = 1; j <= d; ++j) {
        xp = powmod(xp, q, f);
        for (int r : primes) {
            if (d / r == j) {
                Poly g = gcd(f, xp - x);
                if (g.degree() != 0) return false;
            }
        }
    }
    return xp == x % f;
}

Poly gcd(const Poly& a, const Poly& b)
{
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

void for_each_monic(const FieldPtr& f, int degree, const std::function<void(const Poly&)>& fn)
{
    require_field(f);
    if (degree < 0) fail(ErrorKind::InvalidArgument, "negative degree");
    unsigned long long count = 1;
    for (int i = 0; i < degree; ++i) {
        count *= f->order();
        if (count > (1ull << 24)) fail(ErrorKind::CapExceeded, "monic enumeration above 2^24 polynomials");
    }
    Poly lead = Poly::variable(f).pow(static_cast<unsigned long long>(degree));
    for (unsigned long long idx = 0; idx < count; ++idx) fn(lead + Poly::from_index(f, idx));
}

void for_each_monic_irreducible(const FieldPtr& f, int degree, const std::function<void(const Poly&)>& fn)
{
    for_each_monic(f, degree, [&](const Poly& p) {
        if (p.irreducible()) fn(p);
    });
}

std::string Poly::str(const std::string& var) const
{
    require_field(f_);
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const FieldElement& e = c_[i];
        if (e.is_zero()) continue;
        if (!out.empty()) out += "+";
        std::string cs = f_->order() <= 10 ? std::to_string(e.index()) : e.hex();
        if (i == 0) {
            out += cs;
        } else {
            if (!e.is_one()) out += cs + "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

Poly Poly::parse(const FieldPtr& f, const std::string& text, const std::string& var)
{
    require_field(f);
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) fail(ErrorKind::InvalidArgument, "empty polynomial text");
    Poly result = Poly::zero(f);
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t next = s.find('+', pos);
        if (next == std::string::npos) next = s.size();
        std::string term = s.substr(pos, next - pos);
        pos = next + 1;
        if (term.empty()) fail(ErrorKind::InvalidArgument, "empty term in polynomial text");

        FieldElement coeff = f->one();
        unsigned long long exp = 0;
        std::size_t vpos = term.find(var);
        std::string coeff_text = term;
        if (vpos != std::string::npos) {
            exp = 1;
            coeff_text = term.substr(0, vpos);
            if (!coeff_text.empty() && coeff_text.back() == '*') coeff_text.pop_back();
            std::string rest = term.substr(vpos + var.size());
            if (!rest.empty()) {
                if (rest[0] != '^') fail(ErrorKind::InvalidArgument, "malformed term: " + term);
                std::string digits = rest.substr(1);
                if (digits.empty()) fail(ErrorKind::InvalidArgument, "missing exponent in term: " + term);
                exp = 0;
                for (char ch : digits) {
                    if (!std::isdigit(static_cast<unsigned char>(ch)))
                        fail(ErrorKind::InvalidArgument, "malformed exponent in term: " + term);
                    exp = exp * 10 + static_cast<unsigned long long>(ch - '0');
                }
            }
        }
        if (!coeff_text.empty()) {
            unsigned long long ci = 0;
            if (coeff_text.size() > 2 && coeff_text[0] == '0' && (coeff_text[1] == 'x' || coeff_text[1] == 'X')) {
                ci = parse_hex(coeff_text);
            } else {
                for (char ch : coeff_text) {
                    if (!std::isdigit(static_cast<unsigned char>(ch)))
                        fail(ErrorKind::InvalidArgument, "malformed coefficient in term: " + term);
                    ci = ci * 10 + static_cast<unsigned long long>(ch - '0');
                }
            }
            if (ci >= f->order())
                fail(ErrorKind::InvalidArgument, "coefficient index out of range in term: " + term);
            coeff = f->element(ci);
        } else if (vpos == std::string::npos) {
            fail(ErrorKind::InvalidArgument, "empty coefficient in term: " + term);
        }
        std::vector<FieldElement> mono(exp + 1, f->zero());
        mono.back() = coeff;
        result += Poly(f, std::move(mono));
    }
    return result;
}

RatFn::RatFn(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den))
{
    require_same_field(num_, den_);
    if (den_.is_zero()) fail(ErrorKind::DivisionByZero, "rational function with zero denominator");
    Poly g = gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
    FieldElement lead_inv = den_.leading().inverse();
    num_ = num_.scaled(lead_inv);
    den_ = den_.scaled(lead_inv);
}

RatFn RatFn::from_poly(Poly p)
{
    FieldPtr f = p.field();
    require_field(f);
    return RatFn(std::move(p), Poly::one(f));
}

RatFn RatFn::operator-() const
{
    RatFn r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFn operator+(const RatFn& a, const RatFn& b)
{
    return RatFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFn operator-(const RatFn& a, const RatFn& b)
{
    return a + (-b);
}

RatFn operator*(const RatFn& a, const RatFn& b)
{
    return RatFn(a.num_ * b.num_, a.den_ * b.den_);
}

RatFn operator/(const RatFn& a, const RatFn& b)
{
    if (b.is_zero()) fail(ErrorKind::DivisionByZero, "division by the zero function");
    return RatFn(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator==(const RatFn& a, const RatFn& b)
{
    return a.num_ == b.num_ && a.den_ == b.den_;
}

FieldElement RatFn::eval(const FieldElement& x) const
{
    FieldElement d = den_.eval(x);
    if (d.is_zero()) fail(ErrorKind::PoleAtPlace, "function has a pole at the requested place");
    return num_.eval(x) / d;
}

namespace {

int root_multiplicity(Poly p, const FieldElement& a)
{
    Poly lin(p.field(), {-a, p.field()->one()});
    int m = 0;
    while (!p.is_zero()) {
        auto [q, r] = p.divmod(lin);
        if (!r.is_zero()) break;
        ++m;
        p = std::move(q);
    }
    return m;
}

} // namespace

int RatFn::valuation_at(const FieldElement& a) const
{
    if (is_zero()) fail(ErrorKind::InvalidArgument, "valuation of the zero function");
    return root_multiplicity(num_, a) - root_multiplicity(den_, a);
}

int RatFn::valuation_at_infinity() const
{
    if (is_zero()) fail(ErrorKind::InvalidArgument, "valuation of the zero function");
    return den_.degree() - num_.degree();
}

RatFn RatFn::compose_scale(const FieldElement& c) const
{
    return RatFn(num_.compose_scale(c), den_.compose_scale(c));
}

RatFn RatFn::compose_shift(const FieldElement& c) const
{
    return RatFn(num_.compose_shift(c), den_.compose_shift(c));
}

} // namespace foldecode
