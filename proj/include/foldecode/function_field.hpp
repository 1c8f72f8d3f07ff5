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

#ifndef FOLDECODE_FUNCTION_FIELD_HPP
#define FOLDECODE_FUNCTION_FIELD_HPP

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "foldecode/poly.hpp"
#include "foldecode/series.hpp"

namespace foldecode {

/* a place of the function field; rational places carry explicit coordinates,
   higher-degree places carry their minimal polynomial */
struct Place {
    enum class Kind {
        Coordinate,  // finite place X = a of the rational field, coords = {a}
        Point,       // affine curve point, coords = {x, y}
        Infinity,    // the common pole place of the coordinate functions
        Irreducible  // degree = deg(min_poly) place of the rational field
    };

    Kind kind = Kind::Infinity;
    unsigned degree = 1;
    std::vector<FieldElement> coords;
    Poly min_poly;

    std::string str() const;
    friend bool operator==(const Place& a, const Place& b);
    friend bool operator!=(const Place& a, const Place& b) { return !(a == b); }
};

struct PlaceOrbit {
    Place representative;
    std::size_t length = 1;
};

/* formal sum of places with integer multiplicities */
struct DivisorSpec {
    std::vector<std::pair<Place, int>> terms;
    int degree() const;
};

/* opaque per-backend function handle */
class FieldFunction {
  public:
    virtual ~FieldFunction() = default;
};
using FnPtr = std::shared_ptr<const FieldFunction>;

struct RRBasis {
    int multiplier = 0; // l of L(lD)
    std::vector<FnPtr> functions;
    std::size_t dimension() const { return functions.size(); }
};

/* truncated expansion f = sum_{r >= start} a_r t^r at a rational place in the
   registered fiber parameter t */
struct LocalExpansion {
    Place anchor;
    std::string parameter;
    FieldPtr field;
    int start = 0;
    std::vector<FieldElement> coeffs; // a_start .. a_{start + coeffs.size() - 1}

    std::size_t stored() const { return coeffs.size(); }
    /* zero below start, PrecisionTooLow past the stored range */
    FieldElement coeff_at(int exponent) const;
};

/* data asserting that some power of the place Frobenius realizes the folding
   automorphism on residue fields: the list-size bound exponent is
   u * (s-1) * |places| */
struct FrobeniusPowerWitness {
    std::vector<Place> places;
    unsigned u = 1;
    int total_degree() const;
};

struct BackendDescriptor {
    std::string kind;  // "rational" | "hermitian"
    std::string sigma; // "multiplicative" | "additive" | "diagonal"
    unsigned long long p = 0;
    unsigned k = 0;
    std::vector<std::uint32_t> modulus;
    unsigned ell = 0; // curve parameter, hermitian only
};

/* contract for a concrete function field F/GF(q) with automorphism sigma, a
   sigma-invariant divisor D, and local expansions in sigma-fixed parameters;
   implementations are immutable and safe to share across threads */
class FunctionFieldBackend {
  public:
    virtual ~FunctionFieldBackend() = default;

    virtual std::string kind() const = 0;
    virtual const FieldPtr& field() const = 0;
    virtual unsigned genus() const = 0;
    /* e = deg D */
    virtual unsigned divisor_degree() const = 0;
    virtual DivisorSpec divisor(int l) const = 0;

    /* rational places eligible for evaluation, grouped into sigma-orbits and
       disjoint from supp(D); deterministic order */
    virtual std::vector<PlaceOrbit> rational_place_orbits() const = 0;
    virtual Place sigma_place(const Place& p, long long power) const = 0;

    /* UnsupportedDivisor outside the supported multiples of D */
    virtual RRBasis rr_basis(int l) const = 0;
    virtual FnPtr combine(const RRBasis& basis, const std::vector<FieldElement>& coeffs) const = 0;
    /* f^{sigma^power}, defined by f^{sigma^{-1}}(P) = f(P^sigma) */
    virtual FnPtr sigma_fn(const FnPtr& f, long long power) const = 0;
    virtual FieldElement evaluate(const FnPtr& f, const Place& p) const = 0;

    /* first place of the completely-split anchor fiber, scanning each orbit
       from its representative in sigma order, that is not in `avoid`; falls
       back to the first split place when all are excluded */
    virtual Place anchor_place(const std::vector<Place>& avoid) const = 0;
    /* expansion of a function regular at p, coefficients of t^0..t^{prec-1};
       PoleAtPlace when not regular, BadParameter when no fiber parameter is
       registered at p */
    virtual Series expand_series(const FnPtr& f, const Place& p, std::size_t prec) const = 0;
    /* pole-aware expansion carrying the start valuation and `prec` stored
       coefficients */
    virtual LocalExpansion local_expand(const FnPtr& f, const Place& p, std::size_t prec) const = 0;

    virtual std::optional<FrobeniusPowerWitness> frobenius_witness() const = 0;
    virtual BackendDescriptor descriptor() const = 0;
};

using BackendPtr = std::shared_ptr<const FunctionFieldBackend>;

/* representative, representative^sigma, ..., length entries */
std::vector<Place> orbit_places(const FunctionFieldBackend& backend, const PlaceOrbit& orbit);

} // namespace foldecode

#endif
