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

#ifndef FOLDECODE_RATIONAL_BACKEND_HPP
#define FOLDECODE_RATIONAL_BACKEND_HPP

#include "foldecode/function_field.hpp"

namespace foldecode {

/* the rational function field GF(q)(X) with D = (infinity), e = 1, g = 0;
   two automorphism flavors:
     Multiplicative: sigma(X = a) = (X = gamma a), order q-1, split fiber
       GF(q)* with parameter t = X^{q-1} - 1;
     Additive: sigma(X = a) = (X = a+1), order p, split fibers the cosets of
       GF(p) with parameters t = X^p - X - c */
class RationalBackend final : public FunctionFieldBackend,
                              public std::enable_shared_from_this<RationalBackend> {
  public:
    enum class Sigma { Multiplicative, Additive };

    static std::shared_ptr<const RationalBackend> make(FieldPtr f, Sigma sigma = Sigma::Multiplicative);

    /* wrap a rational function in X as a backend function handle */
    static FnPtr lift(RatFn fn);
    static const RatFn& unwrap(const FnPtr& f);

    Sigma sigma_flavor() const { return sigma_; }
    /* multiplicative coordinate step (the primitive element) */
    FieldElement gamma() const;

    Place finite_place(const FieldElement& a) const;
    Place infinite_place() const;

    std::string kind() const override { return "rational"; }
    const FieldPtr& field() const override { return f_; }
    unsigned genus() const override { return 0; }
    unsigned divisor_degree() const override { return 1; }
    DivisorSpec divisor(int l) const override;
    std::vector<PlaceOrbit> rational_place_orbits() const override;
    Place sigma_place(const Place& p, long long power) const override;
    RRBasis rr_basis(int l) const override;
    FnPtr combine(const RRBasis& basis, const std::vector<FieldElement>& coeffs) const override;
    FnPtr sigma_fn(const FnPtr& f, long long power) const override;
    FieldElement evaluate(const FnPtr& f, const Place& p) const override;
    Place anchor_place(const std::vector<Place>& avoid) const override;
    Series expand_series(const FnPtr& f, const Place& p, std::size_t prec) const override;
    LocalExpansion local_expand(const FnPtr& f, const Place& p, std::size_t prec) const override;
    std::optional<FrobeniusPowerWitness> frobenius_witness() const override;
    BackendDescriptor descriptor() const override;

  private:
    RationalBackend(FieldPtr f, Sigma sigma);

    /* the registered sigma-fixed parameter of the fiber containing a, as a
       polynomial in X; BadParameter when the fiber is not completely split */
    Poly fiber_parameter(const FieldElement& a) const;
    /* series for the coordinate X at the place X = a, in the fiber parameter */
    Series coordinate_series(const FieldElement& a, std::size_t prec) const;

    FieldPtr f_;
    Sigma sigma_;
};

} // namespace foldecode

#endif
