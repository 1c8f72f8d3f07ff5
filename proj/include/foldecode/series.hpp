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

#ifndef FOLDECODE_SERIES_HPP
#define FOLDECODE_SERIES_HPP

#include <cstddef>
#include <vector>

#include "foldecode/gf.hpp"

namespace foldecode {

/* truncated power series in one parameter t over GF(q): coefficients of
   t^0 .. t^{prec-1}; every operation keeps the minimum precision of its
   operands, and reading past the precision is an error, not a zero */
class Series {
  public:
    Series() = default;
    Series(FieldPtr f, std::size_t prec);

    static Series constant(FieldPtr f, const FieldElement& c, std::size_t prec);
    static Series variable(FieldPtr f, std::size_t prec);

    const FieldPtr& field() const { return f_; }
    std::size_t precision() const { return c_.size(); }
    /* PrecisionTooLow past the stored precision */
    const FieldElement& coeff(std::size_t i) const;
    FieldElement& coeff_mut(std::size_t i);
    const std::vector<FieldElement>& coeffs() const { return c_; }
    bool is_zero() const;

    Series truncated(std::size_t prec) const;

    Series operator-() const;
    friend Series operator+(const Series& a, const Series& b);
    friend Series operator-(const Series& a, const Series& b);
    friend Series operator*(const Series& a, const Series& b);
    Series& operator+=(const Series& b) { return *this = *this + b; }
    Series& operator-=(const Series& b) { return *this = *this - b; }
    Series& operator*=(const Series& b) { return *this = *this * b; }
    Series scaled(const FieldElement& c) const;
    /* multiply by t^k (coefficients shift up, precision unchanged) */
    Series shifted_up(std::size_t k) const;

    /* DivisionByZero when the constant term vanishes */
    Series inverse() const;
    Series pow(unsigned long long e) const;

    friend bool operator==(const Series& a, const Series& b);
    friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

  private:
    FieldPtr f_;
    std::vector<FieldElement> c_;
};

/* series X(t) with X(0) = seed solving X^{q-1} = c + t, by Newton iteration;
   requires seed^{q-1} = c and seed != 0 (else the derivative vanishes) */
Series hensel_root_qm1(const FieldPtr& f, const FieldElement& c, const FieldElement& seed, std::size_t prec);

/* series d(t) = -sum of t^{p^i} solving d^p - d = t exactly */
Series artin_schreier_root(const FieldPtr& f, std::size_t prec);

} // namespace foldecode

#endif
