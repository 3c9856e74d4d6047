#pragma once

#include "stein/combinatorics.hpp"
#include "stein/preposet.hpp"
#include "stein/ratgeom.hpp"
#include "stein/sigma.hpp"
#include "stein/zie.hpp"

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace stein {

/// Splits {S,T} of the ground with S holding the minimum atom, ordered by S
/// compared as sorted atom lists. The positive side of (S,T) is <h, lambda_S> > 0.
std::vector<TwoBlock> adjoint_hyperplanes(Mask ground);

struct AdjointChamber {
    std::string signs; // over adjoint_hyperplanes, '+' or '-'
    Vector witness;    // coweight coordinates in atom order, summing to zero
};

/// Bound on ground size and where chamber lists are persisted.
struct EnumerationSettings {
    int max_n = 6;
    std::string cache_dir; // empty: no disk cache
};

void configure_enumeration(const EnumerationSettings& settings);
EnumerationSettings enumeration_settings();

/// Chambers of the adjoint braid arrangement of a ground set. Chamber ids are
/// positions in the list sorted by sign string. Grounds of equal size share
/// their chamber lists through the order-preserving identification of atoms.
class AdjointArrangement {
public:
    struct Data;

    Mask ground() const { return ground_; }
    int size() const { return popcount(ground_); }
    const std::vector<TwoBlock>& hyperplanes() const { return hyperplanes_; }
    const std::vector<AdjointChamber>& chambers() const;
    int chamber_count() const { return static_cast<int>(chambers().size()); }
    /// Chamber id of a sign string, or -1.
    int id_of(const std::string& signs) const;
    /// Sign string of a coweight point, '0' on hyperplanes through it.
    std::string signature_string(const Vector& h) const;
    /// Chamber containing a point strict on every hyperplane.
    int locate(const Vector& h) const;
    /// Index of the hyperplane {S, complement}.
    int hyperplane_of(Mask s) const;
    /// Sign of <h, lambda_S> on chamber `id`, for any proper non-empty S.
    int side(int id, Mask s) const;
    /// The totally nonsymmetric family of two-blocks positive on the chamber.
    AdjointFamily signature(int id) const;

private:
    friend AdjointArrangement adjoint_arrangement(Mask ground);
    Mask ground_ = 0;
    std::vector<TwoBlock> hyperplanes_;
    std::map<Mask, int> index_;
    std::shared_ptr<const Data> data_;
};

/// Enumerates (or loads from the cache) the chambers for this ground.
/// Throws ResourceError beyond the configured bound.
AdjointArrangement adjoint_arrangement(Mask ground);

/// Rational values on chambers, indexed by chamber id.
struct ChamberFunctional {
    Mask ground = 0;
    std::vector<Rational> values;

    ChamberFunctional& operator+=(const ChamberFunctional& other);
    ChamberFunctional& operator*=(const Rational& s);
    bool is_zero() const;
    bool operator==(const ChamberFunctional&) const = default;
};

ChamberFunctional operator+(ChamberFunctional a, const ChamberFunctional& b);
ChamberFunctional operator-(ChamberFunctional a, const ChamberFunctional& b);
ChamberFunctional operator*(const Rational& s, ChamberFunctional a);

/// Formal rational combination of chambers.
struct ChamberCombination {
    Mask ground = 0;
    std::vector<Rational> coeffs;
    bool operator==(const ChamberCombination&) const = default;
};

Rational evaluate(const ChamberFunctional& f, const ChamberCombination& e);

/// 1 on chambers whose signature contains the coprobes of p.
ChamberFunctional c_functional(const Preposet& p);
ChamberFunctional c_functional(const SetComposition& f);
ChamberFunctional m_functional(const SetComposition& f);
ChamberFunctional p_functional(const SetComposition& f);
/// Functional of a Sigma* element (linear extension of C_p, M_F, P_F).
ChamberFunctional functional_of(const BasisElement& x);
/// Functional of a Zie* element through the p, m or c chamber functionals.
ChamberFunctional functional_of(const ZieDualElement& x);

/// (-1)^{l(F)-1} times membership of the witness in the open cone generated by
/// the coroots of the opposite of F; an independent description of m_functional.
ChamberFunctional m_functional_by_cones(const SetComposition& f);
/// Membership of witnesses in the closed cone generated by the coroots of p.
ChamberFunctional dual_cone_indicator(const Preposet& p);

struct SteinmannRelation {
    int hyperplane_a = 0;
    int hyperplane_b = 0;
    /// chambers at (++), (+-), (-+), (--) on (a, b), with signs +1, -1, -1, +1
    std::array<std::pair<int, int>, 4> terms;
};

const std::vector<SteinmannRelation>& steinmann_relations(Mask ground);
bool is_steinmann(const ChamberFunctional& f);
/// Rank of the span of the relations.
int steinmann_rank(Mask ground);
/// #chambers - rank(Stein).
int stein_quotient_dim(Mask ground);
/// Coordinates a_F (F based) with f = sum a_F c_F, or nullopt when f is not
/// in the span (exactly when it violates a relation).
std::optional<ZieDualElement> steinmann_basis_coords(const ChamberFunctional& f);

/// Values of a bilinear functional on (chamber over S) x (chamber over T).
struct ChamberTensor {
    Mask left = 0;
    Mask right = 0;
    std::vector<std::vector<Rational>> values; // [left id][right id]
    bool operator==(const ChamberTensor&) const = default;
};

/// Discrete derivative across the hyperplane {S,T}: f(X^{[S,T]}) - f(X^{[T,S]})
/// around points of the face built from chamber witnesses over S and T.
/// `seed` selects a different point of each face. Throws DomainError if f
/// violates a Steinmann relation.
ChamberTensor derivative(const ChamberFunctional& f, Mask s, Mask t, int seed = 0);

/// Closed formula for the derivative of c_F.
ChamberTensor derivative_of_c(const SetComposition& f, Mask s, Mask t);

/// A chamber combination e with p_F(e) = [F = (I)] for based F.
ChamberCombination eulerian_element(Mask ground);

/// Comb coefficients a_F (F based) with f = sum a_F p_F.
ZieDualElement comb_coefficients(const ChamberFunctional& f);
ChamberFunctional reconstruct(const ZieDualElement& coeffs);

/// Re-expresses a derivative in Zie* (x) Zie* (p basis) through steinmann_basis_coords.
std::optional<ZieDualTensor> tensor_coords(const ChamberTensor& d);

/// D_C = sum_F m_F(C) H_F.
BasisElement dynkin(Mask ground, int chamber);
/// Tits-product fold of (H_(I) - H_(T,S)) over the signature of the chamber.
BasisElement egs_expansion(Mask ground, int chamber);

/// Action of a relabeling of atoms on chamber ids of a ground onto itself.
std::vector<int> chamber_permutation(Mask ground, const Relabeling& r);

/// Unions of symmetric-group orbits of chambers, of total size `total`, whose
/// uniform combination with coefficient 1/total is an Eulerian element.
std::vector<ChamberCombination> uniform_eulerian_orbit_solutions(Mask ground, int total);

} // namespace stein
