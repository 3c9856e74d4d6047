#pragma once

#include "stein/combinatorics.hpp"
#include "stein/preposet.hpp"
#include "stein/ratgeom.hpp"
#include "stein/sigma.hpp"

#include <map>

namespace stein {

/// Piecewise-constant function on the braid arrangement, stored by its value
/// on each face (the face basis).
struct PwcFunction {
    Mask ground = 0;
    std::map<SetComposition, Rational> coeffs;

    void set(const SetComposition& face, const Rational& value);
    Rational at(const SetComposition& face) const;
    bool operator==(const PwcFunction&) const = default;
};

/// Level sets of lambda ordered by decreasing value.
SetComposition braid_signature(const Point& lambda);
/// Lump j of (S_1, ..., S_k) gets value k - j + 1.
Point face_witness(const SetComposition& f);

Rational eval(const PwcFunction& f, const Point& lambda);
PwcFunction face(const SetComposition& f);
/// Sum of the faces F <= p.
PwcFunction cone(const Preposet& p);
PwcFunction pointwise_product(const PwcFunction& f, const PwcFunction& g);
/// M_F -> face(F), after conversion to the M basis.
PwcFunction realize(const BasisElement& x);

/// Checks, face by face, that cone(p) is the indicator of the conical space
/// spanned by the weights lambda_ST with (S,T) <= p (exact cone membership).
bool support_matches_cone(const Preposet& p);

} // namespace stein
