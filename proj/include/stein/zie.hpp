#pragma once

#include "stein/combinatorics.hpp"
#include "stein/rational.hpp"
#include "stein/sigma.hpp"

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace stein {

/// Planar full binary tree with lump-labelled leaves.
class Tree {
public:
    static Tree leaf(Mask lump);
    static Tree node(Tree left, Tree right);
    /// Left-nested comb [[[S1,S2],S3],...,Sk].
    static Tree comb(const SetComposition& f);

    bool is_leaf() const { return !left_; }
    Mask lump() const { return lump_; }
    const Tree& left() const { return *left_; }
    const Tree& right() const { return *right_; }
    Mask ground() const { return ground_; }
    int leaves() const;

    bool operator==(const Tree& other) const;

private:
    Mask lump_ = 0;
    Mask ground_ = 0;
    std::shared_ptr<const Tree> left_;
    std::shared_ptr<const Tree> right_;
};

std::string debug_string(const Tree& t);

/// Leaf lumps left to right.
SetComposition debracket(const Tree& t);
/// Every tree reachable by swapping branches, with the parity sign of the swaps.
std::vector<std::pair<Tree, int>> antisym(const Tree& t);

/// Canonical basepoint: the minimum atom.
inline int basepoint(Mask ground) { return lowest_atom(ground); }
/// Compositions whose first lump contains the basepoint (the comb keys).
std::vector<SetComposition> based_compositions(Mask ground);
bool is_based(const SetComposition& f);

/// Element of Zie[I] in standard comb coordinates.
struct ZieElement {
    Mask ground = 0;
    std::map<SetComposition, Rational> terms;

    void add(const SetComposition& key, const Rational& coeff);
    bool is_zero() const { return terms.empty(); }
    ZieElement& operator+=(const ZieElement& other);
    ZieElement& operator*=(const Rational& s);
    bool operator==(const ZieElement&) const = default;
};

ZieElement operator+(ZieElement a, const ZieElement& b);
ZieElement operator-(ZieElement a, const ZieElement& b);
ZieElement operator*(const Rational& s, ZieElement a);

/// Comb coordinates of a tree (antisymmetry and Jacobi rewriting).
ZieElement reduce(const Tree& t);
ZieElement comb_element(const SetComposition& f, Rational coeff = 1);
/// Image in Sigma, Q basis.
BasisElement embed_u(const ZieElement& z);
/// Lie bracket of elements over disjoint grounds.
ZieElement bracket(const ZieElement& a, const ZieElement& b);
ZieElement relabel(const ZieElement& z, const Relabeling& r);

enum class DualBasis { p, m, c };
std::string_view dual_basis_name(DualBasis b);
DualBasis parse_dual_basis(std::string_view name);

/// Element of Zie*[I] over based keys in the p, m or c basis.
struct ZieDualElement {
    Mask ground = 0;
    DualBasis basis = DualBasis::p;
    std::map<SetComposition, Rational> terms;

    void add(const SetComposition& key, const Rational& coeff);
    bool is_zero() const { return terms.empty(); }
    bool operator==(const ZieDualElement&) const = default;
};

/// p_F evaluated on a tree.
Rational p_eval(const SetComposition& f, const Tree& t);
/// p_F for an arbitrary key F, expressed over based keys.
ZieDualElement rebase_p(const SetComposition& f);
ZieDualElement change_basis(const ZieDualElement& x, DualBasis target);
/// U*: Sigma* -> Zie*, result in the requested basis.
ZieDualElement project_ustar(const BasisElement& x, DualBasis target = DualBasis::p);
Rational pairing(const ZieDualElement& d, const ZieElement& z);

/// Element of Zie*[S] (x) Zie*[T] in the p basis.
struct ZieDualTensor {
    Mask left = 0;
    Mask right = 0;
    std::map<std::pair<SetComposition, SetComposition>, Rational> terms;

    void add(const SetComposition& a, const SetComposition& b, const Rational& coeff);
    bool is_zero() const { return terms.empty(); }
    bool operator==(const ZieDualTensor&) const = default;
};

/// Cocommutator of deconcatenation, both factors re-based.
ZieDualTensor cobracket(const ZieDualElement& d, Mask s, Mask t);

} // namespace stein
