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

#include "foldecode/folded_code.hpp"

#include <algorithm>
#include <random>

namespace foldecode {

std::vector<Place> FoldedCodeParams::window_places() const
{
    std::vector<Place> out;
    for (const auto& w : windows)
        for (const Place& p : w) out.push_back(p);
    return out;
}

FoldedCodeParams make_params(BackendPtr backend, unsigned m, unsigned N, int l,
                             std::size_t window_start_offset)
{
    if (!backend) fail(ErrorKind::InvalidArgument, "missing backend");
    if (m == 0 || N == 0) fail(ErrorKind::InvalidArgument, "folding depth and block length must be positive");

    FoldedCodeParams params;
    params.backend = backend;
    params.m = m;
    params.N = N;
    params.l = l;
    params.e = backend->divisor_degree();
    params.g = backend->genus();

    long long le = static_cast<long long>(l) * params.e;
    if (le >= static_cast<long long>(m) * N)
        fail(ErrorKind::DegreeTooLarge, "l deg D = " + std::to_string(le) + " must stay below m N = " +
                                            std::to_string(static_cast<long long>(m) * N));

    params.basis = backend->rr_basis(l);
    params.rate_bound = Rational(le - params.g + 1, static_cast<long long>(N) * m);
    params.distance_bound = Rational(N) - Rational(le, m);

    /* windows at offsets window_start_offset, +m, +2m, ... inside each orbit,
       in orbit order; a window never straddles two orbits */
    for (const PlaceOrbit& orbit : backend->rational_place_orbits()) {
        if (params.windows.size() == N) break;
        std::size_t offset = window_start_offset;
        while (offset + m <= orbit.length && params.windows.size() < N) {
            std::vector<Place> window;
            for (unsigned j = 0; j < m; ++j)
                window.push_back(backend->sigma_place(orbit.representative, static_cast<long long>(offset + j)));
            params.windows.push_back(std::move(window));
            offset += m;
        }
    }
    if (params.windows.size() < N)
        fail(ErrorKind::InsufficientPlaces, "orbits host only " + std::to_string(params.windows.size()) +
                                                " of the requested " + std::to_string(N) + " windows");

    params.eval_matrix = Matrix(backend->field(), static_cast<std::size_t>(N) * m, params.basis.dimension());
    for (unsigned i = 0; i < N; ++i)
        for (unsigned j = 0; j < m; ++j)
            for (std::size_t c = 0; c < params.basis.dimension(); ++c)
                params.eval_matrix.at(static_cast<std::size_t>(i) * m + j, c) =
                    backend->evaluate(params.basis.functions[c], params.windows[i][j]);
    return params;
}

Codeword encode(const FoldedCodeParams& params, const std::vector<FieldElement>& message)
{
    if (message.size() != params.dimension())
        fail(ErrorKind::LengthMismatch, "message has " + std::to_string(message.size()) + " symbols, expected " +
                                            std::to_string(params.dimension()));
    std::vector<FieldElement> flat = params.eval_matrix.apply(message);
    Codeword word(params.N);
    for (unsigned i = 0; i < params.N; ++i)
        word[i].assign(flat.begin() + static_cast<long>(i) * params.m,
                       flat.begin() + static_cast<long>(i + 1) * params.m);
    return word;
}

ReceivedWord corrupt(const FoldedCodeParams& params, const Codeword& word,
                     const std::vector<std::size_t>& error_columns, unsigned long long seed)
{
    if (word.size() != params.N) fail(ErrorKind::ShapeMismatch, "word does not match the block length");
    std::vector<std::size_t> cols = error_columns;
    std::sort(cols.begin(), cols.end());
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
    if (!cols.empty() && cols.back() >= params.N)
        fail(ErrorKind::IndexOutOfRange, "error column " + std::to_string(cols.back()) + " is out of range");

    const FieldPtr& f = params.backend->field();
    std::mt19937_64 rng(seed);
    ReceivedWord out = word;
    for (std::size_t c : cols) {
        std::vector<FieldElement> fresh(params.m, f->zero());
        do {
            for (unsigned j = 0; j < params.m; ++j) fresh[j] = f->element(rng() % f->order());
        } while (fresh == word[c]);
        out[c] = fresh;
    }
    return out;
}

std::size_t column_distance(const ReceivedWord& a, const Codeword& b)
{
    if (a.size() != b.size()) fail(ErrorKind::ShapeMismatch, "words have different block lengths");
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != b[i].size()) fail(ErrorKind::ShapeMismatch, "columns have different folding depths");
        if (a[i] != b[i]) ++d;
    }
    return d;
}

} // namespace foldecode
