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

#ifndef FOLDECODE_LIST_DECODER_HPP
#define FOLDECODE_LIST_DECODER_HPP

#include <optional>

#include "foldecode/folded_code.hpp"
#include "foldecode/series.hpp"

namespace foldecode {

inline constexpr unsigned long long DEFAULT_ENUMERATION_CAP = 1ull << 20;

/* degree parameter of the interpolation step: the least kappa making the
   unknown count s dim L(kappa D) + dim L((kappa+l) D) exceed the
   N(m-s+1) homogeneous constraints, namely
   ceil((N(m-s+1) - el + (s+1)(g-1) + 1) / (e(s+1)));
   NegativeKappa when the expression is negative */
long long compute_kappa(const FoldedCodeParams& code, unsigned s);

/* exact decoding radius report: agreement threshold
   t = 1 + floor((kappa+l)e/(m-s+1)), column error budget N - t, and the
   fraction 1 - t/N capped at s/(s+1) */
struct DecodeRadius {
    long long threshold_t = 0;
    long long error_budget = 0;
    Rational tau;
};

/* everything a decode needs, precomputed once per (code, s): bases of
   L(kappa D) and L((kappa+l) D), their window evaluations, and local
   expansions of all ingredients at the anchor place to precision
   (kappa+l)e + 1 */
struct DecoderParams {
    FoldedCodeParams code;
    unsigned s = 1;
    long long kappa = 0;
    long long threshold_t = 0;
    long long error_budget = 0;
    Rational tau;

    RRBasis basis_k;   // L(kappa D), the A_1..A_s space
    RRBasis basis_kl;  // L((kappa+l) D), the A_0 space
    Matrix win_k;      // (N m) x dim L(kappa D) window evaluations
    Matrix win_kl;     // (N m) x dim L((kappa+l) D) window evaluations

    Place anchor;
    std::size_t precision = 1; // stored expansion coefficients
    /* expansion of sigma^{-r} z_i at the anchor, index [r][i] */
    std::vector<std::vector<Series>> msg_shift_series;
    std::vector<Series> k_series;  // expansions of the L(kappa D) basis
    std::vector<Series> kl_series; // expansions of the L((kappa+l) D) basis

    /* list-bound certificate from the backend witness: the affine solution
       dimension may not exceed u (s-1) |T| when sum deg T > l e */
    std::optional<FrobeniusPowerWitness> witness;
    bool bound_certified = false;
    std::size_t bound_exponent = 0;
};

/* precision_override is a test hook; 0 means the required (kappa+l)e + 1 */
DecoderParams make_decoder_params(const FoldedCodeParams& code, unsigned s,
                                  std::size_t precision_override = 0);

DecodeRadius radius(const DecoderParams& dp);

/* linear interpolation polynomial Q = A_0 + A_1 Y_1 + ... + A_s Y_s as
   coefficient vectors over the cached bases */
struct InterpolationPolynomial {
    std::vector<FieldElement> a0;              // over basis_kl
    std::vector<std::vector<FieldElement>> ar; // s vectors over basis_k
};

/* constraint matrix with one row per (column i, offset j <= m-s) demanding
   A_0(P) + sum_r A_r(P) y_{i,j+r-1} = 0 at P = P_i^{sigma^j}; columns are
   [A_0 coefficients | A_1 | ... | A_s] */
Matrix interpolation_matrix(const ReceivedWord& received, const DecoderParams& dp);

/* first canonical nullspace vector of the constraint matrix; NoSolution
   signals broken parameter accounting, not a data condition */
InterpolationPolynomial interpolate(const ReceivedWord& received, const DecoderParams& dp);

/* linear system over the message coefficients equating every expansion
   coefficient 0..(kappa+l)e of A_0 + sum_r A_r h^{sigma^{-(r-1)}} to zero */
struct FunctionalSystem {
    Matrix lhs;
    std::vector<FieldElement> rhs;
};

FunctionalSystem functional_equation_system(const InterpolationPolynomial& q, const DecoderParams& dp);

/* affine solution space of the functional system plus the pruned list */
struct CandidateSpace {
    bool consistent = false;
    std::vector<FieldElement> particular;
    std::vector<std::vector<FieldElement>> basis;
    std::vector<std::vector<FieldElement>> list; // messages within the budget
    std::size_t affine_dim() const { return basis.size(); }
};

/* ListBoundViolated when a certified bound is exceeded (correctness
   tripwire); EnumerationOverflow when q^dim exceeds the cap */
CandidateSpace solve_and_enumerate(const FunctionalSystem& sys, const DecoderParams& dp,
                                   const ReceivedWord& received,
                                   unsigned long long enumeration_cap = DEFAULT_ENUMERATION_CAP);

/* interpolate, assemble the functional system, solve, enumerate, prune */
CandidateSpace decode(const ReceivedWord& received, const DecoderParams& dp,
                      unsigned long long enumeration_cap = DEFAULT_ENUMERATION_CAP);

} // namespace foldecode

#endif
