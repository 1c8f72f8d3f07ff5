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

#include "foldecode/gf.hpp"

#include <algorithm>

namespace foldecode {

namespace {

using UV = std::vector<std::uint32_t>;

bool is_prime_u64(unsigned long long n)
{
    if (n < 2) return false;
    for (unsigned long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<unsigned long long> prime_factors(unsigned long long n)
{
    std::vector<unsigned long long> out;
    for (unsigned long long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::uint32_t scalar_inv(std::uint32_t c, unsigned long long p)
{
    /* extended Euclid on integers; p prime, 0 < c < p */
    long long r0 = static_cast<long long>(p), r1 = c, s0 = 0, s1 = 1;
    while (r1 != 0) {
        long long q = r0 / r1;
        long long r2 = r0 - q * r1;
        long long s2 = s0 - q * s1;
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
    }
    long long inv = s0 % static_cast<long long>(p);
    if (inv < 0) inv += static_cast<long long>(p);
    return static_cast<std::uint32_t>(inv);
}

void trim(UV& v)
{
    while (!v.empty() && v.back() == 0) v.pop_back();
}

int deg(const UV& v)
{
    for (std::size_t i = v.size(); i-- > 0;)
        if (v[i] != 0) return static_cast<int>(i);
    return -1;
}

UV padd(const UV& a, const UV& b, unsigned long long p)
{
    UV r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::uint32_t x = (i < a.size() ? a[i] : 0), y = (i < b.size() ? b[i] : 0);
        r[i] = static_cast<std::uint32_t>((x + y) % p);
    }
    trim(r);
    return r;
}

UV psub(const UV& a, const UV& b, unsigned long long p)
{
    UV r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        unsigned long long x = (i < a.size() ? a[i] : 0), y = (i < b.size() ? b[i] : 0);
        r[i] = static_cast<std::uint32_t>((x + p - y) % p);
    }
    trim(r);
    return r;
}

UV pmul(const UV& a, const UV& b, unsigned long long p)
{
    if (deg(a) < 0 || deg(b) < 0) return {};
    UV r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            unsigned long long t = r[i + j] + 1ull * a[i] * b[j];
            r[i + j] = static_cast<std::uint32_t>(t % p);
        }
    }
    trim(r);
    return r;
}

UV pmod(UV a, const UV& m, unsigned long long p)
{
    int dm = deg(m);
    std::uint32_t lead_inv = scalar_inv(m[static_cast<std::size_t>(dm)], p);
    trim(a);
    while (deg(a) >= dm) {
        int da = deg(a);
        std::uint32_t c = static_cast<std::uint32_t>(1ull * a[static_cast<std::size_t>(da)] * lead_inv % p);
        for (int i = 0; i <= dm; ++i) {
            std::size_t ai = static_cast<std::size_t>(da - dm + i);
            unsigned long long t = 1ull * c * m[static_cast<std::size_t>(i)] % p;
            a[ai] = static_cast<std::uint32_t>((a[ai] + p - t) % p);
        }
        trim(a);
    }
    return a;
}

UV pgcd(UV a, UV b, unsigned long long p)
{
    trim(a);
    trim(b);
    while (deg(b) >= 0) {
        UV r = pmod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

/* u^e mod m over GF(p) */
UV ppowmod(UV u, unsigned long long e, const UV& m, unsigned long long p)
{
    UV r{1};
    u = pmod(std::move(u), m, p);
    while (e > 0) {
        if (e & 1) r = pmod(pmul(r, u, p), m, p);
        u = pmod(pmul(u, u, p), m, p);
        e >>= 1;
    }
    return r;
}

/* monic f over GF(p): f irreducible iff x^{p^d} = x mod f and for every prime
   r | d the gcd of x^{p^{d/r}} - x with f is constant */
bool is_irreducible(const UV& f, unsigned long long p)
{
    int d = deg(f);
    if (d < 1) return false;
    if (d == 1) return true;
    std::vector<unsigned long long> rs = prime_factors(static_cast<unsigned long long>(d));
    UV x{0, 1};
    UV xp = x;
    for (int j = 1; j <= d; ++j) {
        xp = ppowmod(xp, p, f, p);
        bool checkpoint = false;
        for (unsigned long long r : rs)
            if (static_cast<unsigned long long>(d) / r == static_cast<unsigned long long>(j)) checkpoint = true;
        if (checkpoint) {
            UV g = pgcd(f, psub(xp, x, p), p);
            if (deg(g) != 0) return false;
        }
    }
    return xp == pmod(x, f, p);
}

UV coeffs_from_index(unsigned long long idx, unsigned long long p, std::size_t len)
{
    UV c(len, 0);
    for (std::size_t i = 0; i < len && idx > 0; ++i) {
        c[i] = static_cast<std::uint32_t>(idx % p);
        idx /= p;
    }
    return c;
}

} // namespace

FieldSpec::FieldSpec(unsigned long long p, unsigned k, std::vector<std::uint32_t> modulus)
    : p_(p), k_(k), modulus_(std::move(modulus))
{
    q_ = 1;
    for (unsigned i = 0; i < k_; ++i) {
        q_ *= p_;
        if (q_ > (1ull << 16))
            fail(ErrorKind::CapExceeded, "field order exceeds 2^16: p=" + std::to_string(p_) +
                                             " k=" + std::to_string(k_));
    }
}

FieldPtr FieldSpec::make(unsigned long long p, unsigned k)
{
    if (!is_prime_u64(p)) fail(ErrorKind::NotPrime, "characteristic is not prime: " + std::to_string(p));
    if (k < 1) fail(ErrorKind::InvalidArgument, "extension degree must be at least 1");
    unsigned long long cap = 1;
    for (unsigned i = 0; i < k; ++i) {
        cap *= p;
        if (cap > (1ull << 16))
            fail(ErrorKind::CapExceeded, "field order exceeds 2^16");
    }
    /* lexicographically smallest monic irreducible of degree k, where the
       coefficient vector is read as a base-p integer */
    for (unsigned long long low = 0; low < cap; ++low) {
        UV f = coeffs_from_index(low, p, k + 1);
        f[k] = 1;
        if (is_irreducible(f, p)) return make(p, k, std::move(f));
    }
    fail(ErrorKind::InternalError, "no irreducible modulus found");
}

FieldPtr FieldSpec::make(unsigned long long p, unsigned k, std::vector<std::uint32_t> modulus)
{
    if (!is_prime_u64(p)) fail(ErrorKind::NotPrime, "characteristic is not prime: " + std::to_string(p));
    if (k < 1) fail(ErrorKind::InvalidArgument, "extension degree must be at least 1");
    for (auto& c : modulus) c = static_cast<std::uint32_t>(c % p);
    trim(modulus);
    if (deg(modulus) != static_cast<int>(k))
        fail(ErrorKind::InvalidArgument, "modulus degree does not match extension degree");
    if (modulus[k] != 1) fail(ErrorKind::InvalidArgument, "modulus must be monic");
    if (!is_irreducible(modulus, p))
        fail(ErrorKind::ReducibleModulus, "modulus is reducible over GF(" + std::to_string(p) + ")");
    modulus.resize(k + 1);
    return FieldPtr(new FieldSpec(p, k, std::move(modulus)));
}

FieldPtr FieldSpec::make_order(unsigned long long q)
{
    if (q < 2) fail(ErrorKind::NotPrime, "field order must be a prime power");
    unsigned long long p = q;
    for (unsigned long long d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    unsigned k = 0;
    unsigned long long t = q;
    while (t % p == 0) {
        t /= p;
        ++k;
    }
    if (t != 1) fail(ErrorKind::NotPrime, "field order is not a prime power: " + std::to_string(q));
    return make(p, k);
}

bool FieldSpec::same_as(const FieldSpec& other) const
{
    return p_ == other.p_ && k_ == other.k_ && modulus_ == other.modulus_;
}

std::string FieldSpec::describe() const
{
    return "GF(" + std::to_string(q_) + ")";
}

FieldElement FieldSpec::zero() const
{
    return FieldElement(this, UV(k_, 0));
}

FieldElement FieldSpec::one() const
{
    UV c(k_, 0);
    c[0] = 1 % p_;
    return FieldElement(this, std::move(c));
}

FieldElement FieldSpec::from_coeffs(std::vector<std::uint32_t> c) const
{
    if (c.size() > k_) {
        trim(c);
        if (c.size() > k_) fail(ErrorKind::InvalidArgument, "coefficient vector longer than extension degree");
    }
    c.resize(k_, 0);
    for (auto& x : c) x = static_cast<std::uint32_t>(x % p_);
    return FieldElement(this, std::move(c));
}

FieldElement FieldSpec::element(unsigned long long index) const
{
    if (index >= q_)
        fail(ErrorKind::InvalidArgument, "element index " + std::to_string(index) + " out of range for " + describe());
    return FieldElement(this, coeffs_from_index(index, p_, k_));
}

std::vector<std::uint32_t> FieldSpec::mul_raw(const UV& a, const UV& b) const
{
    UV r = pmod(pmul(a, b, p_), modulus_, p_);
    r.resize(k_, 0);
    return r;
}

std::vector<std::uint32_t> FieldSpec::inv_raw(const UV& a) const
{
    /* extended Euclid in GF(p)[x]: s*a + t*modulus = gcd */
    UV r0 = modulus_, r1 = a;
    trim(r1);
    if (deg(r1) < 0) fail(ErrorKind::DivisionByZero, "inverse of zero in " + describe());
    UV s0{}, s1{1};
    while (deg(r1) > 0) {
        /* one long-division step: r0 = q*r1 + r2 */
        UV q{}, r2 = r0;
        int d1 = deg(r1);
        std::uint32_t lead_inv = scalar_inv(r1[static_cast<std::size_t>(d1)], p_);
        while (deg(r2) >= d1) {
            int d2 = deg(r2);
            std::uint32_t c =
                static_cast<std::uint32_t>(1ull * r2[static_cast<std::size_t>(d2)] * lead_inv % p_);
            UV mono(static_cast<std::size_t>(d2 - d1) + 1, 0);
            mono.back() = c;
            q = padd(q, mono, p_);
            r2 = psub(r2, pmul(mono, r1, p_), p_);
        }
        UV s2 = psub(s0, pmul(q, s1, p_), p_);
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    /* r1 is a nonzero constant c; inverse = s1 / c */
    std::uint32_t c = r1.empty() ? 0 : r1[0];
    if (c == 0) fail(ErrorKind::InternalError, "gcd with irreducible modulus is not constant");
    UV mono{scalar_inv(c, p_)};
    UV r = pmod(pmul(s1, mono, p_), modulus_, p_);
    r.resize(k_, 0);
    return r;
}

FieldElement FieldSpec::primitive_element() const
{
    std::call_once(primitive_once_, [this] {
        std::vector<unsigned long long> rs = prime_factors(q_ - 1);
        for (unsigned long long idx = 1; idx < q_; ++idx) {
            FieldElement a = element(idx);
            bool ok = true;
            for (unsigned long long r : rs) {
                if (a.pow(static_cast<long long>((q_ - 1) / r)).is_one()) {
                    ok = false;
                    break;
                }
            }
            if (ok && a.pow(static_cast<long long>(q_ - 1)).is_one()) {
                primitive_ = a.coeffs();
                return;
            }
        }
        fail(ErrorKind::InternalError, "no primitive element found");
    });
    return FieldElement(this, primitive_);
}

namespace {

const FieldSpec* require_same(const FieldElement& a, const FieldElement& b)
{
    const FieldSpec* sa = a.spec();
    const FieldSpec* sb = b.spec();
    if (sa == nullptr || sb == nullptr)
        fail(ErrorKind::InternalError, "operation on default-constructed field element");
    if (sa != sb && !sa->same_as(*sb))
        fail(ErrorKind::FieldMismatch, "operands belong to different fields: " + sa->describe() + " vs " +
                                           sb->describe());
    return sa;
}

} // namespace

bool FieldElement::is_zero() const
{
    for (std::uint32_t c : c_)
        if (c != 0) return false;
    return true;
}

bool FieldElement::is_one() const
{
    if (spec_ == nullptr || c_.empty() || c_[0] != 1 % spec_->characteristic()) return false;
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

unsigned long long FieldElement::index() const
{
    if (spec_ == nullptr) fail(ErrorKind::InternalError, "index of default-constructed field element");
    unsigned long long idx = 0, w = 1;
    for (std::uint32_t c : c_) {
        idx += c * w;
        w *= spec_->characteristic();
    }
    return idx;
}

FieldElement FieldElement::operator-() const
{
    if (spec_ == nullptr) fail(ErrorKind::InternalError, "negation of default-constructed field element");
    UV r = c_;
    unsigned long long p = spec_->characteristic();
    for (auto& x : r) x = static_cast<std::uint32_t>((p - x) % p);
    return FieldElement(spec_, std::move(r));
}

FieldElement operator+(const FieldElement& a, const FieldElement& b)
{
    const FieldSpec* s = require_same(a, b);
    UV r = padd(a.c_, b.c_, s->characteristic());
    r.resize(s->degree(), 0);
    return FieldElement(s, std::move(r));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b)
{
    const FieldSpec* s = require_same(a, b);
    UV r = psub(a.c_, b.c_, s->characteristic());
    r.resize(s->degree(), 0);
    return FieldElement(s, std::move(r));
}

FieldElement operator*(const FieldElement& a, const FieldElement& b)
{
    const FieldSpec* s = require_same(a, b);
    return FieldElement(s, s->mul_raw(a.c_, b.c_));
}

FieldElement operator/(const FieldElement& a, const FieldElement& b)
{
    const FieldSpec* s = require_same(a, b);
    return FieldElement(s, s->mul_raw(a.c_, s->inv_raw(b.c_)));
}

FieldElement FieldElement::inverse() const
{
    if (spec_ == nullptr) fail(ErrorKind::InternalError, "inverse of default-constructed field element");
    return FieldElement(spec_, spec_->inv_raw(c_));
}

FieldElement FieldElement::pow(long long e) const
{
    if (spec_ == nullptr) fail(ErrorKind::InternalError, "power of default-constructed field element");
    FieldElement base = *this;
    if (e < 0) {
        base = inverse();
        e = -e;
    }
    FieldElement r = spec_->one();
    unsigned long long ue = static_cast<unsigned long long>(e);
    while (ue > 0) {
        if (ue & 1) r = r * base;
        base = base * base;
        ue >>= 1;
    }
    return r;
}

FieldElement FieldElement::frobenius(unsigned j) const
{
    FieldElement r = *this;
    for (unsigned i = 0; i < j; ++i) r = r.pow(static_cast<long long>(r.spec()->characteristic()));
    return r;
}

std::uint32_t FieldElement::trace_to_prime() const
{
    if (spec_ == nullptr) fail(ErrorKind::InternalError, "trace of default-constructed field element");
    FieldElement acc = spec_->zero();
    FieldElement conj = *this;
    for (unsigned j = 0; j < spec_->degree(); ++j) {
        acc += conj;
        conj = conj.frobenius();
    }
    for (std::size_t i = 1; i < acc.c_.size(); ++i)
        if (acc.c_[i] != 0) fail(ErrorKind::InternalError, "trace left the prime field");
    return acc.c_.empty() ? 0 : acc.c_[0];
}

bool operator==(const FieldElement& a, const FieldElement& b)
{
    if (a.spec_ == nullptr || b.spec_ == nullptr) return a.spec_ == b.spec_;
    if (a.spec_ != b.spec_ && !a.spec_->same_as(*b.spec_)) return false;
    return a.c_ == b.c_;
}

unsigned long long element_order(const FieldElement& a)
{
    if (a.is_zero()) fail(ErrorKind::DivisionByZero, "multiplicative order of zero");
    unsigned long long n = a.spec()->order() - 1;
    for (unsigned long long d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        if (a.pow(static_cast<long long>(d)).is_one()) return d;
    }
    fail(ErrorKind::InternalError, "element order not found");
}

FieldElement embed(const FieldElement& a, const FieldPtr& sup)
{
    const FieldSpec* sub = a.spec();
    if (sub == nullptr) fail(ErrorKind::InternalError, "embed of default-constructed field element");
    if (sub->characteristic() != sup->characteristic() || sub->order() * sub->order() != sup->order())
        fail(ErrorKind::IncompatibleFields,
             "embedding requires the target order to be the square of the source order: " + sub->describe() +
                 " into " + sup->describe());
    /* smallest-index root of the subfield modulus inside the superfield */
    FieldElement beta = sup->zero();
    bool found = false;
    for (unsigned long long idx = 0; idx < sup->order(); ++idx) {
        FieldElement x = sup->element(idx);
        FieldElement acc = sup->zero();
        FieldElement xp = sup->one();
        for (std::uint32_t c : sub->modulus()) {
            acc += sup->from_prime(c) * xp;
            xp = xp * x;
        }
        if (acc.is_zero()) {
            beta = x;
            found = true;
            break;
        }
    }
    if (!found) fail(ErrorKind::InternalError, "subfield modulus has no root in the superfield");
    FieldElement r = sup->zero();
    FieldElement bp = sup->one();
    for (std::uint32_t c : a.coeffs()) {
        r += sup->from_prime(c) * bp;
        bp = bp * beta;
    }
    return r;
}

} // namespace foldecode
