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

#include "foldecode/series.hpp"

#include <algorithm>

namespace foldecode {

namespace {

void require_field(const FieldPtr& f)
{
    if (!f) fail(ErrorKind::InternalError, "series without a field");
}

std::size_t common_prec(const Series& a, const Series& b)
{
    if (!a.field() || !b.field()) fail(ErrorKind::InternalError, "series without a field");
    if (a.field().get() != b.field().get() && !a.field()->same_as(*b.field()))
        fail(ErrorKind::FieldMismatch, "series over different fields");
    return std::min(a.precision(), b.precision());
}

} // namespace

Series::Series(FieldPtr f, std::size_t prec) : f_(std::move(f))
{
    require_field(f_);
    if (prec == 0) fail(ErrorKind::InvalidArgument, "series precision must be positive");
    c_.assign(prec, f_->zero());
}

Series Series::constant(FieldPtr f, const FieldElement& c, std::size_t prec)
{
    Series s(std::move(f), prec);
    s.c_[0] = c;
    return s;
}

Series Series::variable(FieldPtr f, std::size_t prec)
{
    Series s(std::move(f), prec);
    if (prec < 2) fail(ErrorKind::InvalidArgument, "precision too small to hold the parameter itself");
    s.c_[1] = s.f_->one();
    return s;
}

const FieldElement& Series::coeff(std::size_t i) const
{
    if (i >= c_.size())
        fail(ErrorKind::PrecisionTooLow, "series coefficient " + std::to_string(i) +
                                             " requested at precision " + std::to_string(c_.size()));
    return c_[i];
}

FieldElement& Series::coeff_mut(std::size_t i)
{
    if (i >= c_.size()) fail(ErrorKind::PrecisionTooLow, "series coefficient out of precision");
    return c_[i];
}

bool Series::is_zero() const
{
    for (const FieldElement& e : c_)
        if (!e.is_zero()) return false;
    return true;
}

Series Series::truncated(std::size_t prec) const
{
    if (prec == 0 || prec > c_.size())
        fail(ErrorKind::PrecisionTooLow, "cannot extend a truncated series");
    Series s = *this;
    s.c_.resize(prec);
    return s;
}

Series Series::operator-() const
{
    Series s = *this;
    for (FieldElement& e : s.c_) e = -e;
    return s;
}

Series operator+(const Series& a, const Series& b)
{
    std::size_t n = common_prec(a, b);
    Series s(a.f_, n);
    for (std::size_t i = 0; i < n; ++i) s.c_[i] = a.c_[i] + b.c_[i];
    return s;
}

Series operator-(const Series& a, const Series& b)
{
    std::size_t n = common_prec(a, b);
    Series s(a.f_, n);
    for (std::size_t i = 0; i < n; ++i) s.c_[i] = a.c_[i] - b.c_[i];
    return s;
}

Series operator*(const Series& a, const Series& b)
{
    std::size_t n = common_prec(a, b);
    Series s(a.f_, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < n; ++j) s.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return s;
}

Series Series::scaled(const FieldElement& c) const
{
    Series s = *this;
    for (FieldElement& e : s.c_) e = e * c;
    return s;
}

Series Series::shifted_up(std::size_t k) const
{
    Series s(f_, c_.size());
    for (std::size_t i = 0; i + k < c_.size(); ++i) s.c_[i + k] = c_[i];
    return s;
}

Series Series::inverse() const
{
    require_field(f_);
    if (c_.empty() || c_[0].is_zero())
        fail(ErrorKind::DivisionByZero, "series with vanishing constant term has no inverse");
    Series s(f_, c_.size());
    FieldElement inv0 = c_[0].inverse();
    s.c_[0] = inv0;
    for (std::size_t n = 1; n < c_.size(); ++n) {
        FieldElement acc = f_->zero();
        for (std::size_t i = 1; i <= n; ++i) acc += c_[i] * s.c_[n - i];
        s.c_[n] = -(inv0 * acc);
    }
    return s;
}

Series Series::pow(unsigned long long e) const
{
    require_field(f_);
    Series r = Series::constant(f_, f_->one(), c_.size());
    Series b = *this;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

bool operator==(const Series& a, const Series& b)
{
    if (!a.f_ || !b.f_) return !a.f_ == !b.f_ && a.c_.empty() == b.c_.empty();
    if (a.f_.get() != b.f_.get() && !a.f_->same_as(*b.f_)) return false;
    return a.c_ == b.c_;
}

Series hensel_root_qm1(const FieldPtr& f, const FieldElement& c, const FieldElement& seed, std::size_t prec)
{
    require_field(f);
    if (seed.is_zero())
        fail(ErrorKind::SingularSeed, "zero seed makes the derivative of X^{q-1} vanish");
    unsigned long long q = f->order();
    if (seed.pow(static_cast<long long>(q - 1)) != c)
        fail(ErrorKind::InvalidArgument, "seed does not satisfy X^{q-1} = c");

    Series rhs = Series::constant(f, c, prec) + Series::variable(f, std::max<std::size_t>(prec, 2)).truncated(prec);
    /* q-1 = -1 in GF(q) */
    FieldElement qm1 = f->from_prime(f->characteristic() - 1);
    Series x = Series::constant(f, seed, prec);
    std::size_t correct = 1;
    while (correct < prec) {
        Series residual = x.pow(q - 1) - rhs;
        Series derivative = x.pow(q - 2).scaled(qm1);
        x = x - residual * derivative.inverse();
        correct *= 2;
    }
    Series check = x.pow(q - 1) - rhs;
    if (!check.is_zero()) fail(ErrorKind::InternalError, "Newton iteration failed to converge");
    return x;
}

Series artin_schreier_root(const FieldPtr& f, std::size_t prec)
{
    require_field(f);
    Series d(f, prec);
    FieldElement mone = f->from_prime(f->characteristic() - 1);
    unsigned long long p = f->characteristic();
    for (unsigned long long e = 1; e < prec; e *= p) d.coeff_mut(static_cast<std::size_t>(e)) = mone;
    return d;
}

} // namespace foldecode
