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

#ifndef FOLDECODE_POLY_HPP
#define FOLDECODE_POLY_HPP

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "foldecode/gf.hpp"

namespace foldecode {

/* dense univariate polynomial over GF(q), low-order coefficients first,
   normalized to have no trailing zero coefficients */
class Poly {
  public:
    Poly() = default;
    explicit Poly(FieldPtr f) : f_(std::move(f)) {}
    Poly(FieldPtr f, std::vector<FieldElement> c);

    static Poly zero(FieldPtr f) { return Poly(std::move(f)); }
    static Poly one(FieldPtr f);
    static Poly variable(FieldPtr f);
    static Poly constant(FieldPtr f, const FieldElement& c);
    /* base-q digits of idx are the coefficient indices, low digit = constant */
    static Poly from_index(FieldPtr f, unsigned long long idx);

    const FieldPtr& field() const { return f_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const;
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
    FieldElement coeff(std::size_t i) const;
    const std::vector<FieldElement>& coeffs() const { return c_; }
    FieldElement leading() const;
    unsigned long long to_index() const;

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator+=(const Poly& b) { return *this = *this + b; }
    Poly& operator-=(const Poly& b) { return *this = *this - b; }
    Poly& operator*=(const Poly& b) { return *this = *this * b; }
    Poly scaled(const FieldElement& c) const;
    friend bool operator==(const Poly& a, const Poly& b);
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /* (quotient, remainder); DivisionByZero on zero divisor */
    std::pair<Poly, Poly> divmod(const Poly& d) const;
    Poly operator/(const Poly& d) const { return divmod(d).first; }
    Poly operator%(const Poly& d) const { return divmod(d).second; }

    Poly monic() const;
    Poly pow(unsigned long long e) const;
    Poly derivative() const;
    FieldElement eval(const FieldElement& x) const;
    /* f(cX) */
    Poly compose_scale(const FieldElement& c) const;
    /* f(X + c) */
    Poly compose_shift(const FieldElement& c) const;

    bool irreducible() const;

    /* text form like "T^2+T+1" or "2*T+1"; coefficient indices printed in
       decimal for q <= 10, hex otherwise */
    std::string str(const std::string& var = "T") const;
    static Poly parse(const FieldPtr& f, const std::string& text, const std::string& var = "T");

  private:
    void trim();

    FieldPtr f_;
    std::vector<FieldElement> c_;
};

Poly gcd(const Poly& a, const Poly& b);
/* a^e mod m */
Poly powmod(const Poly& a, unsigned long long e, const Poly& m);

/* enumerate monic polynomials of the given degree in increasing index order;
   CapExceeded beyond q^degree = 2^24 */
void for_each_monic(const FieldPtr& f, int degree, const std::function<void(const Poly&)>& fn);
void for_each_monic_irreducible(const FieldPtr& f, int degree, const std::function<void(const Poly&)>& fn);

/* normalized fraction num/den: den monic and gcd(num, den) = 1 */
class RatFn {
  public:
    RatFn() = default;
    RatFn(Poly num, Poly den);

    static RatFn from_poly(Poly p);
    static RatFn zero(const FieldPtr& f) { return from_poly(Poly::zero(f)); }
    static RatFn one(const FieldPtr& f) { return from_poly(Poly::one(f)); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    const FieldPtr& field() const { return num_.field(); }
    bool is_zero() const { return num_.is_zero(); }

    RatFn operator-() const;
    friend RatFn operator+(const RatFn& a, const RatFn& b);
    friend RatFn operator-(const RatFn& a, const RatFn& b);
    friend RatFn operator*(const RatFn& a, const RatFn& b);
    friend RatFn operator/(const RatFn& a, const RatFn& b);
    RatFn& operator+=(const RatFn& b) { return *this = *this + b; }
    friend bool operator==(const RatFn& a, const RatFn& b);
    friend bool operator!=(const RatFn& a, const RatFn& b) { return !(a == b); }

    /* PoleAtPlace when the denominator vanishes at x */
    FieldElement eval(const FieldElement& x) const;
    /* order of vanishing at X = a (negative at a pole); InvalidArgument on the
       zero function */
    int valuation_at(const FieldElement& a) const;
    int valuation_at_infinity() const;
    RatFn compose_scale(const FieldElement& c) const;
    RatFn compose_shift(const FieldElement& c) const;

  private:
    Poly num_;
    Poly den_;
};

} // namespace foldecode

#endif
