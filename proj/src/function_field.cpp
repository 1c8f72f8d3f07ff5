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

#include "foldecode/function_field.hpp"

namespace foldecode {

std::string Place::str() const
{
    switch (kind) {
    case Kind::Coordinate:
        return "X=" + coords.at(0).hex();
    case Kind::Point:
        return "(" + coords.at(0).hex() + "," + coords.at(1).hex() + ")";
    case Kind::Infinity:
        return "inf";
    case Kind::Irreducible:
        return "deg" + std::to_string(degree) + ":" + min_poly.str("X");
    }
    return "?";
}

bool operator==(const Place& a, const Place& b)
{
    if (a.kind != b.kind || a.degree != b.degree) return false;
    if (a.coords.size() != b.coords.size()) return false;
    for (std::size_t i = 0; i < a.coords.size(); ++i)
        if (a.coords[i] != b.coords[i]) return false;
    return a.min_poly == b.min_poly;
}

int DivisorSpec::degree() const
{
    int d = 0;
    for (const auto& [place, mult] : terms) d += static_cast<int>(place.degree) * mult;
    return d;
}

FieldElement LocalExpansion::coeff_at(int exponent) const
{
    if (!field) fail(ErrorKind::InternalError, "expansion without a field");
    if (exponent < start) return field->zero();
    std::size_t off = static_cast<std::size_t>(exponent - start);
    if (off >= coeffs.size())
        fail(ErrorKind::PrecisionTooLow, "expansion coefficient " + std::to_string(exponent) +
                                             " beyond stored precision");
    return coeffs[off];
}

int FrobeniusPowerWitness::total_degree() const
{
    int d = 0;
    for (const Place& p : places) d += static_cast<int>(p.degree);
    return d;
}

std::vector<Place> orbit_places(const FunctionFieldBackend& backend, const PlaceOrbit& orbit)
{
    std::vector<Place> out;
    out.reserve(orbit.length);
    Place p = orbit.representative;
    for (std::size_t i = 0; i < orbit.length; ++i) {
        out.push_back(p);
        p = backend.sigma_place(p, 1);
    }
    return out;
}

} // namespace foldecode
