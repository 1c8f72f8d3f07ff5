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

#ifndef FOLDECODE_GF_HPP
#define FOLDECODE_GF_HPP

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "foldecode/common.hpp"

namespace foldecode {

class FieldSpec;
using FieldPtr = std::shared_ptr<const FieldSpec>;

/* element of GF(p^k): coefficient vector over GF(p), low degree first,
   tied to the FieldSpec that created it */
class FieldElement {
  public:
    FieldElement() = default;

    const FieldSpec* spec() const { return spec_; }
    const std::vector<std::uint32_t>& coeffs() const { return c_; }
    std::uint32_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }

    bool is_zero() const;
    bool is_one() const;

    /* sum c_i p^i; total order used for every "lexicographically smallest" rule */
    unsigned long long index() const;
    std::string hex() const { return to_hex(index()); }

    FieldElement operator-() const;
    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
    FieldElement& operator+=(const FieldElement& b) { return *this = *this + b; }
    FieldElement& operator-=(const FieldElement& b) { return *this = *this - b; }
    FieldElement& operator*=(const FieldElement& b) { return *this = *this * b; }

    FieldElement inverse() const;
    FieldElement pow(long long e) const;
    /* p^j-power Frobenius */
    FieldElement frobenius(unsigned j = 1) const;
    /* sum of conjugates over the prime field; result returned as a GF(p) digit */
    std::uint32_t trace_to_prime() const;

    friend bool operator==(const FieldElement& a, const FieldElement& b);
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

  private:
    friend class FieldSpec;
    FieldElement(const FieldSpec* spec, std::vector<std::uint32_t> c)
        : spec_(spec), c_(std::move(c))
    {
    }

    const FieldSpec* spec_ = nullptr;
    std::vector<std::uint32_t> c_;
};

/* GF(p^k) with explicit monic irreducible modulus over GF(p); immutable and
   shareable across threads, q = p^k capped at 2^16 */
class FieldSpec : public std::enable_shared_from_this<FieldSpec> {
  public:
    /* modulus defaults to the lexicographically smallest monic irreducible of
       degree k (coefficient vector read as a base-p integer) */
    static FieldPtr make(unsigned long long p, unsigned k);
    static FieldPtr make(unsigned long long p, unsigned k, std::vector<std::uint32_t> modulus);
    /* q = p^k for prime power q, with the default modulus */
    static FieldPtr make_order(unsigned long long q);

    unsigned long long characteristic() const { return p_; }
    unsigned degree() const { return k_; }
    unsigned long long order() const { return q_; }
    /* k+1 coefficients, low first, monic */
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement from_coeffs(std::vector<std::uint32_t> c) const;
    FieldElement element(unsigned long long index) const;
    FieldElement from_hex(const std::string& text) const { return element(parse_hex(text)); }
    /* scalar from the prime field */
    FieldElement from_prime(unsigned long long v) const { return element(v % p_); }

    /* smallest element in index order whose multiplicative order is q-1 */
    FieldElement primitive_element() const;

    /* value identity: same (p, k, modulus); element ops accept either the same
       object or a value-identical spec */
    bool same_as(const FieldSpec& other) const;

    std::string describe() const;

  private:
    friend class FieldElement;
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
    FieldSpec(unsigned long long p, unsigned k, std::vector<std::uint32_t> modulus);

    std::vector<std::uint32_t> mul_raw(const std::vector<std::uint32_t>& a,
                                       const std::vector<std::uint32_t>& b) const;
    std::vector<std::uint32_t> inv_raw(const std::vector<std::uint32_t>& a) const;

    unsigned long long p_;
    unsigned k_;
    unsigned long long q_;
    std::vector<std::uint32_t> modulus_;

    mutable std::once_flag primitive_once_;
    mutable std::vector<std::uint32_t> primitive_;
};

/* multiplicative order; DivisionByZero on zero */
unsigned long long element_order(const FieldElement& a);

/* ring embedding GF(l) -> GF(l^2) determined by the smallest-index root of the
   subfield modulus in the superfield; IncompatibleFields unless sup order is
   the square of sub order over the same characteristic */
FieldElement embed(const FieldElement& a, const FieldPtr& sup);

} // namespace foldecode

#endif
