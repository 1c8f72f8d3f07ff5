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

#include "foldecode/list_decoder.hpp"

#include <algorithm>

namespace foldecode {

namespace {

/* window evaluations of a basis, rows in (column, row) order */
Matrix window_evaluations(const FoldedCodeParams& code, const RRBasis& basis)
{
    Matrix m(code.backend->field(), static_cast<std::size_t>(code.N) * code.m, basis.dimension());
    for (unsigned i = 0; i < code.N; ++i)
        for (unsigned j = 0; j < code.m; ++j)
            for (std::size_t c = 0; c < basis.dimension(); ++c)
                m.at(static_cast<std::size_t>(i) * code.m + j, c) =
                    code.backend->evaluate(basis.functions[c], code.windows[i][j]);
    return m;
}

Series linear_combination(const std::vector<Series>& series, const std::vector<FieldElement>& coeffs,
                          const FieldPtr& f, std::size_t prec)
{
    Series acc(f, prec);
    for (std::size_t i = 0; i < coeffs.size(); ++i) acc += series.at(i).scaled(coeffs[i]);
    return acc;
}

void require_shape(const ReceivedWord& received, const FoldedCodeParams& code)
{
    if (received.size() != code.N) fail(ErrorKind::ShapeMismatch, "received word has the wrong block length");
    for (const auto& col : received)
        if (col.size() != code.m) fail(ErrorKind::ShapeMismatch, "received column has the wrong folding depth");
}

} // namespace

long long compute_kappa(const FoldedCodeParams& code, unsigned s)
{
    if (s < 1 || s > code.m) fail(ErrorKind::InvalidArgument, "s must satisfy 1 <= s <= m");
    long long N = code.N, m = code.m, e = code.e, g = code.g, l = code.l;
    long long numerator = N * (m - s + 1) - e * l + (s + 1) * (g - 1) + 1;
    long long kappa = (Rational(numerator) / Rational(e * (s + 1))).ceil();
    if (kappa < 0) fail(ErrorKind::NegativeKappa, "interpolation degree parameter is negative");
    return kappa;
}

DecoderParams make_decoder_params(const FoldedCodeParams& code, unsigned s, std::size_t precision_override)
{
    DecoderParams dp;
    dp.code = code;
    dp.s = s;
    dp.kappa = compute_kappa(code, s);

    long long kl_pole = (dp.kappa + code.l) * code.e;
    dp.threshold_t = 1 + kl_pole / (code.m - s + 1);
    dp.error_budget = static_cast<long long>(code.N) - dp.threshold_t;
    dp.tau = std::min(Rational(dp.error_budget, code.N), Rational(s, s + 1ll));

    const BackendPtr& b = code.backend;
    dp.basis_k = b->rr_basis(static_cast<int>(dp.kappa));
    dp.basis_kl = b->rr_basis(static_cast<int>(dp.kappa) + code.l);
    dp.win_k = window_evaluations(code, dp.basis_k);
    dp.win_kl = window_evaluations(code, dp.basis_kl);

    dp.anchor = b->anchor_place(code.window_places());
    dp.precision = precision_override != 0 ? precision_override : static_cast<std::size_t>(kl_pole) + 1;

    dp.msg_shift_series.resize(s);
    for (unsigned r = 0; r < s; ++r)
        for (const FnPtr& z : code.basis.functions)
            dp.msg_shift_series[r].push_back(b->expand_series(b->sigma_fn(z, -static_cast<long long>(r)), dp.anchor, dp.precision));
    for (const FnPtr& z : dp.basis_k.functions) dp.k_series.push_back(b->expand_series(z, dp.anchor, dp.precision));
    for (const FnPtr& z : dp.basis_kl.functions) dp.kl_series.push_back(b->expand_series(z, dp.anchor, dp.precision));

    dp.witness = b->frobenius_witness();
    if (dp.witness && dp.witness->total_degree() > static_cast<long long>(code.l) * code.e) {
        dp.bound_certified = true;
        dp.bound_exponent = static_cast<std::size_t>(dp.witness->u) * (s - 1) * dp.witness->places.size();
    }
    return dp;
}

DecodeRadius radius(const DecoderParams& dp)
{
    return {dp.threshold_t, dp.error_budget, dp.tau};
}

Matrix interpolation_matrix(const ReceivedWord& received, const DecoderParams& dp)
{
    require_shape(received, dp.code);
    const FoldedCodeParams& code = dp.code;
    std::size_t u = dp.basis_k.dimension(), v = dp.basis_kl.dimension();
    std::size_t rows = static_cast<std::size_t>(code.N) * (code.m - dp.s + 1);
    Matrix m(code.backend->field(), rows, v + dp.s * u);
    std::size_t row = 0;
    for (unsigned i = 0; i < code.N; ++i) {
        for (unsigned j = 0; j + dp.s <= code.m; ++j, ++row) {
            std::size_t place_row = static_cast<std::size_t>(i) * code.m + j;
            for (std::size_t c = 0; c < v; ++c) m.at(row, c) = dp.win_kl.at(place_row, c);
            for (unsigned r = 1; r <= dp.s; ++r)
                for (std::size_t c = 0; c < u; ++c)
                    m.at(row, v + (r - 1) * u + c) = dp.win_k.at(place_row, c) * received[i][j + r - 1];
        }
    }
    return m;
}

InterpolationPolynomial interpolate(const ReceivedWord& received, const DecoderParams& dp)
{
    Matrix m = interpolation_matrix(received, dp);
    auto kernel = nullspace_basis(std::move(m));
    if (kernel.empty())
        fail(ErrorKind::NoSolution, "interpolation system has no nonzero solution; parameter accounting is broken");
    const std::vector<FieldElement>& q = kernel.front();

    std::size_t u = dp.basis_k.dimension(), v = dp.basis_kl.dimension();
    InterpolationPolynomial out;
    out.a0.assign(q.begin(), q.begin() + static_cast<long>(v));
    for (unsigned r = 0; r < dp.s; ++r)
        out.ar.emplace_back(q.begin() + static_cast<long>(v + r * u), q.begin() + static_cast<long>(v + (r + 1) * u));
    return out;
}

FunctionalSystem functional_equation_system(const InterpolationPolynomial& q, const DecoderParams& dp)
{
    const FieldPtr& f = dp.code.backend->field();
    std::size_t k = dp.code.dimension();
    std::size_t rows = static_cast<std::size_t>((dp.kappa + dp.code.l) * dp.code.e) + 1;

    Series a0 = linear_combination(dp.kl_series, q.a0, f, dp.precision);
    std::vector<Series> ar;
    for (unsigned r = 0; r < dp.s; ++r) ar.push_back(linear_combination(dp.k_series, q.ar.at(r), f, dp.precision));

    FunctionalSystem sys;
    sys.lhs = Matrix(f, rows, k);
    for (std::size_t i = 0; i < k; ++i) {
        Series coef(f, dp.precision);
        for (unsigned r = 0; r < dp.s; ++r) coef += ar[r] * dp.msg_shift_series[r][i];
        for (std::size_t h = 0; h < rows; ++h) sys.lhs.at(h, i) = coef.coeff(h);
    }
    for (std::size_t h = 0; h < rows; ++h) sys.rhs.push_back(-a0.coeff(h));
    return sys;
}

CandidateSpace solve_and_enumerate(const FunctionalSystem& sys, const DecoderParams& dp,
                                   const ReceivedWord& received, unsigned long long enumeration_cap)
{
    require_shape(received, dp.code);
    AffineSolution sol = solve_affine(sys.lhs, sys.rhs);
    CandidateSpace cs;
    cs.consistent = sol.consistent;
    if (!sol.consistent) return cs;
    cs.particular = std::move(sol.particular);
    cs.basis = std::move(sol.basis);

    if (dp.bound_certified && cs.basis.size() > dp.bound_exponent)
        fail(ErrorKind::ListBoundViolated, "affine solution dimension " + std::to_string(cs.basis.size()) +
                                               " exceeds the certified bound exponent " +
                                               std::to_string(dp.bound_exponent));

    const FieldPtr& f = dp.code.backend->field();
    unsigned long long total = 1;
    for (std::size_t j = 0; j < cs.basis.size(); ++j) {
        if (total > enumeration_cap / f->order())
            fail(ErrorKind::EnumerationOverflow, "candidate count exceeds the enumeration cap");
        total *= f->order();
    }
    if (total > enumeration_cap) fail(ErrorKind::EnumerationOverflow, "candidate count exceeds the enumeration cap");

    long long budget = std::max(dp.error_budget, 0ll);
    for (unsigned long long idx = 0; idx < total; ++idx) {
        std::vector<FieldElement> candidate = cs.particular;
        unsigned long long rest = idx;
        for (const auto& vec : cs.basis) {
            FieldElement scale = f->element(rest % f->order());
            rest /= f->order();
            for (std::size_t i = 0; i < candidate.size(); ++i) candidate[i] += scale * vec[i];
        }
        Codeword cw = encode(dp.code, candidate);
        if (static_cast<long long>(column_distance(received, cw)) <= budget) cs.list.push_back(std::move(candidate));
    }
    return cs;
}

CandidateSpace decode(const ReceivedWord& received, const DecoderParams& dp, unsigned long long enumeration_cap)
{
    InterpolationPolynomial q = interpolate(received, dp);
    FunctionalSystem sys = functional_equation_system(q, dp);
    return solve_and_enumerate(sys, dp, received, enumeration_cap);
}

} // namespace foldecode
