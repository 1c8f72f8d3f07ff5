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

#ifndef FOLDECODE_HERMITIAN_BACKEND_HPP
#define FOLDECODE_HERMITIAN_BACKEND_HPP

#include "foldecode/function_field.hpp"

namespace foldecode {

/* the Hermitian curve y^ell + y = x^{ell+1} over GF(ell^2), genus
   ell(ell-1)/2, with D = (infinity) and the diagonal automorphism
   sigma(x, y) = (gamma x, gamma^{ell+1} y); functions are polynomials in x
   and y with y-degree below ell */
class HermitianBackend final : public FunctionFieldBackend,
                               public std::enable_shared_from_this<HermitianBackend> {
  public:
    static std::shared_ptr<const HermitianBackend> make(unsigned ell);

    /* y-power coefficient list (polynomials in x), lowest power first,
       at most ell entries */
    static FnPtr lift(const FieldPtr& f, std::vector<Poly> y_coeffs);
    static const std::vector<Poly>& unwrap(const FnPtr& f);

    unsigned ell() const { return ell_; }
    FieldElement gamma() const;
    std::vector<Place> affine_points() const;
    Place point_place(const FieldElement& x, const FieldElement& y) const;
    Place infinite_place() const;

    std::string kind() const override { return "hermitian"; }
    const FieldPtr& field() const override { return f_; }
    unsigned genus() const override { return ell_ * (ell_ - 1) / 2; }
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
    /* no power-of-Frobenius place data ships with this backend */
    std::optional<FrobeniusPowerWitness> frobenius_witness() const override { return std::nullopt; }
    BackendDescriptor descriptor() const override;

  private:
    explicit HermitianBackend(unsigned ell);

    void require_on_curve(const FieldElement& x, const FieldElement& y) const;
    /* series for the coordinates x and y at an affine place with x != 0, in
       the fiber parameter t = x^{q-1} - 1 */
    std::pair<Series, Series> coordinate_series(const Place& p, std::size_t prec) const;

    FieldPtr f_;
    unsigned ell_;
};

} // namespace foldecode

#endif
