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

#ifndef FOLDECODE_FOLDED_CODE_HPP
#define FOLDECODE_FOLDED_CODE_HPP

#include "foldecode/function_field.hpp"
#include "foldecode/linalg.hpp"

namespace foldecode {

/* N columns of m field symbols; column i row j holds f(P_i^{sigma^j}) for
   the encoded function f */
using Codeword = std::vector<std::vector<FieldElement>>;
/* same shape as a Codeword, but carries no validity promise */
using ReceivedWord = Codeword;

/* a folded evaluation code: message space L(l D), entry (i, j) = f(P_i^{sigma^j})
   with N disjoint length-m windows along sigma-orbits */
struct FoldedCodeParams {
    BackendPtr backend;
    unsigned m = 1;          // folding depth (rows per column)
    unsigned N = 1;          // block length (columns)
    int l = 0;               // pole multiplier of the message space L(l D)
    unsigned e = 1;          // deg D
    unsigned g = 0;          // genus
    RRBasis basis;           // cached basis of L(l D)
    std::vector<std::vector<Place>> windows; // windows[i][j] = P_i^{sigma^j}
    Rational rate_bound;     // (l e - g + 1) / (N m)
    Rational distance_bound; // N - l e / m, exact
    Matrix eval_matrix;      // (N m) x dim evaluation of the basis

    std::size_t dimension() const { return basis.dimension(); }
    /* all N m evaluation places, flattened in (column, row) order */
    std::vector<Place> window_places() const;
};

/* lay out N windows of m consecutive sigma-translates, consuming whole
   orbits in representative order and never straddling two orbits; the
   window_start_offset shifts every window along its orbit (test hook for
   the relabeling property); DegreeTooLarge unless l e < m N,
   InsufficientPlaces when the orbits cannot host N windows */
FoldedCodeParams make_params(BackendPtr backend, unsigned m, unsigned N, int l,
                             std::size_t window_start_offset = 0);

/* LengthMismatch unless message size equals dim L(l D) */
Codeword encode(const FoldedCodeParams& params, const std::vector<FieldElement>& message);

/* replace the chosen columns with uniformly drawn columns guaranteed to
   differ from the originals; deterministic in the seed; IndexOutOfRange on
   a column index >= N */
ReceivedWord corrupt(const FoldedCodeParams& params, const Codeword& word,
                     const std::vector<std::size_t>& error_columns, unsigned long long seed);

/* number of differing columns; ShapeMismatch on shape disagreement */
std::size_t column_distance(const ReceivedWord& a, const Codeword& b);

} // namespace foldecode

#endif
