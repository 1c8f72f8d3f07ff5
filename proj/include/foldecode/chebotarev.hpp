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

#ifndef FOLDECODE_CHEBOTAREV_HPP
#define FOLDECODE_CHEBOTAREV_HPP

#include "foldecode/poly.hpp"

namespace foldecode {

/* the Frobenius at an unramified degree-h place of the rational function
   field, for the cyclic extension with conductor Q: the residue of the place
   polynomial mod Q; RamifiedPlace when Q divides P or shares a factor */
Poly frobenius_class(const Poly& p, const Poly& q_poly);

struct FrobeniusClassCount {
    Poly representative; // canonical coset member, minimal monic first
    unsigned long long count = 0;
    Rational expected; // q^h / (e h)
    Rational bound;    // explicit deviation bound B(h)
    Rational margin;   // bound - |count - expected|
};

/* counts of monic irreducibles of degree h, coprime to Q, grouped by the
   coset of their residue under the index-e subgroup of (GF(q)[T]/Q)^*;
   the bound uses floored square roots, which only tightens it, and the
   conservative full-extension genus upper bound for every subextension */
struct FrobeniusHistogram {
    Poly modulus;
    unsigned h = 0;
    unsigned long long unit_order = 0;     // q^{deg Q} - 1
    unsigned long long quotient_order = 0; // e
    long long genus_upper = 0;             // genus bound used in B(h)
    unsigned long long total = 0;          // all counted irreducibles
    std::vector<FrobeniusClassCount> classes; // by representative index
    bool all_within_bound = false;
    /* descriptive only: max class deviation over q^{h/2} */
    double normalized_max_deviation = 0.0;
};

/* count degree-h Frobenius residues for a monic irreducible conductor Q;
   quotient_order = 0 means the full unit group; q^h capped at 2^24 */
FrobeniusHistogram chebotarev_check(const FieldPtr& f, const Poly& q_poly, unsigned h,
                                    unsigned long long quotient_order = 0);

} // namespace foldecode

#endif
