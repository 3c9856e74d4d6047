#pragma once

#include "stein/combinatorics.hpp"
#include "stein/preposet.hpp"
#include "stein/rational.hpp"

#include <map>
#include <string_view>
#include <utility>
#include <vector>

namespace stein {

/// Bases of the commutative algebra Sigma* (M monomial, P, C cone) and of
/// the cocommutative algebra Sigma (H, Q).
enum class Basis { M, P, C, H, Q };

bool in_dual_algebra(Basis b); // M, P, C
std::string_view basis_name(Basis b);
Basis parse_basis(std::string_view name);

/// Sparse rational combination of basis vectors over one ground set. In the
/// C basis, genuine (non-total) preposet keys may be held in `cone_terms`
/// until an operation needs composition keys.
struct BasisElement {
    Mask ground = 0;
    Basis basis = Basis::M;
    std::map<SetComposition, Rational> terms;
    std::map<Preposet, Rational> cone_terms;

    BasisElement() = default;
    BasisElement(Mask g, Basis b) : ground(g), basis(b) {}

    static BasisElement vector(Basis b, const SetComposition& key, Rational coeff = 1);
    /// The unit: coefficient 1 on the empty composition of the empty set.
    static BasisElement unit(Basis b);

    void add(const SetComposition& key, const Rational& coeff);
    void add_cone(const Preposet& key, const Rational& coeff);
    bool is_zero() const { return terms.empty() && cone_terms.empty(); }
    Rational coeff(const SetComposition& key) const;

    BasisElement& operator+=(const BasisElement& other);
    BasisElement& operator-=(const BasisElement& other);
    BasisElement& operator*=(const Rational& scalar);
    bool operator==(const BasisElement&) const = default;
};

BasisElement operator+(BasisElement a, const BasisElement& b);
BasisElement operator-(BasisElement a, const BasisElement& b);
BasisElement operator*(const Rational& s, BasisElement a);

/// Element of X[S] (x) X[T] in a single basis.
struct TensorElement {
    Mask left = 0;
    Mask right = 0;
    Basis basis = Basis::M;
    std::map<std::pair<SetComposition, SetComposition>, Rational> terms;

    void add(const SetComposition& a, const SetComposition& b, const Rational& coeff);
    bool is_zero() const { return terms.empty(); }
    bool operator==(const TensorElement&) const = default;
};

TensorElement tensor(const BasisElement& a, const BasisElement& b);
/// mu_{S,T} applied to a tensor.
BasisElement multiply(const TensorElement& x);

/// All H with H|_S = F and H|_T = G (interleavings with optional merges of
/// one lump of F with one lump of G).
std::vector<SetComposition> quasishuffles(const SetComposition& f, const SetComposition& g);
/// Quasishuffles without merges.
std::vector<SetComposition> shuffles(const SetComposition& f, const SetComposition& g);

BasisElement multiply(const BasisElement& a, const BasisElement& b);
/// Delta_{S,T}; S and T must partition the ground (either may be empty).
TensorElement comultiply(const BasisElement& x, Mask s, Mask t);
BasisElement antipode(const BasisElement& x);
/// Bilinear extension of <M_F, H_G> = delta.
Rational pairing(const BasisElement& dual, const BasisElement& primal);
BasisElement change_basis(const BasisElement& x, Basis target);
/// Expands preposet keys of a C element into composition keys.
BasisElement normalize_cones(const BasisElement& x);

/// C_p as a basis element; total preposets become composition keys.
BasisElement cone_element(const Preposet& p);
/// C_p = sum over G preceq p of (-1)^{l(p) - l(G)} C_G.
BasisElement preposet_expansion(const Preposet& p);

/// Linear extension of the Tits product to H-basis elements.
BasisElement tits_h(const BasisElement& a, const BasisElement& b);

/// First Eulerian idempotent -sum_F (-1)^{l(F)}/l(F) H_F; zero on the empty set.
BasisElement eulerian_series(Mask ground);

BasisElement relabel(const BasisElement& x, const Relabeling& r);

} // namespace stein
