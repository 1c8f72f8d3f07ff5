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

#ifndef FOLDECODE_CARLITZ_HPP
#define FOLDECODE_CARLITZ_HPP

#include "foldecode/poly.hpp"

namespace foldecode {

/* left polynomial ring A[pi] over A = GF(q)[T] with the p-power Frobenius
   pi, twisted by pi u = u^p pi; coefficients are listed by pi power */
class TwistedPoly {
  public:
    TwistedPoly() = default;
    explicit TwistedPoly(FieldPtr f) : f_(std::move(f)) {}

    static TwistedPoly from_coeffs(FieldPtr f, std::vector<Poly> c);
    static TwistedPoly scalar(const Poly& a);
    static TwistedPoly pi(FieldPtr f, unsigned power = 1);

    const FieldPtr& field() const { return f_; }
    /* degree in pi, -1 for the zero element */
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    /* zero beyond the degree */
    Poly coeff(std::size_t i) const;
    const std::vector<Poly>& coeffs() const { return c_; }
    Poly constant_term() const { return coeff(0); }
    Poly leading() const;

    friend TwistedPoly operator+(const TwistedPoly& a, const TwistedPoly& b);
    friend TwistedPoly operator-(const TwistedPoly& a, const TwistedPoly& b);
    /* (a pi^i)(b pi^j) = a b^{p^i} pi^{i+j} */
    friend TwistedPoly operator*(const TwistedPoly& a, const TwistedPoly& b);
    TwistedPoly& operator+=(const TwistedPoly& b) { return *this = *this + b; }
    TwistedPoly& operator*=(const TwistedPoly& b) { return *this = *this * b; }
    friend bool operator==(const TwistedPoly& a, const TwistedPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const TwistedPoly& a, const TwistedPoly& b) { return !(a == b); }

  private:
    void trim();

    FieldPtr f_;
    std::vector<Poly> c_;
};

/* the rank-1 Drinfeld module with phi_T = T + pi^lambda, lambda = log_p q,
   acting on p-power-closed A-algebras by t -> T t + t^q */
struct CarlitzModule {
    FieldPtr f;
    unsigned lambda;

    explicit CarlitzModule(FieldPtr field);
    /* the image phi_a; an A-algebra homomorphism in a, sgn-normalized so
       the leading pi coefficient equals the leading coefficient of a */
    TwistedPoly phi_of(const Poly& a) const;
};

/* order of the unit group (A/Q)^*, by the product over prime powers */
unsigned long long carlitz_totient(const Poly& q_poly);

/* explicit verification data for the Q-torsion module of the Carlitz
   module, realized in A[t]/(J_Q) for the monic generator polynomial J_Q of
   the primitive torsion points */
struct TorsionReport {
    Poly modulus;                   // Q
    TwistedPoly torsion_polynomial; // phi_Q
    std::vector<Poly> cyclotomic;   // J_Q by t power, coefficients in A
    unsigned long long cardinality = 0;
    unsigned long long expected_cardinality = 0; // q^{deg Q}
    bool all_distinct = false;     // the q^{deg Q} module elements differ
    bool all_roots = false;        // phi_Q kills every element
    bool annihilator_is_q = false; // phi_{Q/P} keeps a generator alive
    bool cyclic = false;
    unsigned long long generator_count = 0; // verified generators
    unsigned long long phi_q = 0;           // |(A/Q)^*| by formula
};

/* Q monic nonconstant; SplittingFieldTooLarge beyond deg Q = 4 */
TorsionReport torsion_report(const FieldPtr& f, const Poly& q_poly);

/* group orders attached to a degree-d prime of A over a base with class
   number h: the ray group modulo conductor Q with positivity, of order
   (q^d - 1) h, and its quotient by the image of GF(q)^* */
struct NarrowRayOrders {
    unsigned long long narrow_ray = 0;  // (q^d - 1) h
    unsigned long long class_group = 0; // (q^d - 1)/(q - 1) h
};
NarrowRayOrders narrow_ray_class_order(unsigned long long q, unsigned d, unsigned long long h = 1);

/* genus of the ray class field of conductor a degree-d prime (d >= 2) over
   a base of genus g_f and class number h, from the ramification-aware
   Riemann-Hurwitz identity
   2g - 2 = (2 g_f - 2) h (q^d - 1) + (q-2) h (q^d - 1)/(q - 1) + d (q^d - 2) h;
   NonIntegerGenus if the right side is odd (correctness tripwire) */
long long class_field_genus(unsigned long long q, unsigned d, unsigned long long g_f, unsigned long long h);

/* derived parameters of the degree-e cyclic cover used to build long folded
   codes over GF(ell), ell a perfect square, from a base curve with n
   rational places and genus g_e */
struct ClassfieldCodeParameters {
    unsigned long long r = 1;            // odd cover-degree parameter
    unsigned long long e = 1;            // (ell^r + 1)/(ell + 1)
    Rational genus_bound;                // (g_e - 1) e + (r/2)(e - 1) + 1
    Rational rational_place_bound;       // at least e n rational places
    unsigned long long list_exponent_per_s = 0; // sqrt(ell) - 1
};
ClassfieldCodeParameters classfield_code_parameters(unsigned long long ell, unsigned long long n, long long g_e);

/* asymptotic decoding-radius formula
   s/(s+1) (1 - m/(m-s+1) (rate + 2/(sqrt(ell)-1))), exact over rationals;
   ell must be a perfect square > 1 */
Rational tau_asymptotic(unsigned long long ell, unsigned m, unsigned s, const Rational& rate);

} // namespace foldecode

#endif
