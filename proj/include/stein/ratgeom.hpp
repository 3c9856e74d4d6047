#pragma once

#include "stein/combinatorics.hpp"
#include "stein/rational.hpp"

#include <map>
#include <optional>
#include <vector>

namespace stein {

using Vector = std::vector<Rational>;
using Matrix = std::vector<Vector>; // row-major

/// A point of R^I for a ground I, coordinates listed in atom order. Coweight
/// points (adjoint space) sum to zero; weight points are arbitrary lifts of
/// classes modulo the all-ones vector.
struct Point {
    Mask ground = 0;
    Vector coords;

    const Rational& at(int atom) const;
    bool operator==(const Point&) const = default;
};

/// Indicator lift of the fundamental weight lambda_S.
Point weight_point(Mask ground, Mask s);
/// Coroot h_{i1 i2} = e_{i1} - e_{i2}.
Point coroot_point(Mask ground, int i1, int i2);

/// <h, lambda> = sum_i h_i lambda(i); h must sum to zero so the value does not
/// depend on the lift of lambda.
Rational pair(const Point& h, const Point& lambda);

/// <h, lambda_S> for coweight coordinates indexed by atom position in ground.
Rational subset_sum(Mask ground, const Vector& h, Mask s);

/// Subtracts the mean; identifies T^I with the sum-zero subspace.
Vector recentre(const Vector& v);

int rank(Matrix a);
/// Basis of { x : A x = 0 } for an A with `cols` columns (pivots chosen left to right).
Matrix kernel_basis(Matrix a, int cols);
/// A particular solution of A x = b with free variables set to zero, or
/// nullopt when the system is inconsistent.
std::optional<Vector> solve(Matrix a, Vector b, int cols);
/// Inverse of a square matrix, or nullopt if singular.
std::optional<Matrix> inverse(Matrix a);

Rational dot(const Vector& a, const Vector& b);

/// Incremental row echelon form over sparse rational rows.
class SparseEchelon {
public:
    using Row = std::map<int, Rational>;

    /// Reduces `row` against the stored basis; stores it when independent.
    bool insert(Row row);
    int rank() const { return static_cast<int>(pivots_.size()); }
    /// Remainder of `row` after reduction (empty iff in the row span).
    Row reduce(Row row) const;

private:
    std::map<int, Row> pivots_; // pivot column -> row normalized to leading 1
};

enum class Relation { GreaterEqual, Greater, Equal };

/// coeffs . x + constant  (relation)  0
struct Constraint {
    Vector coeffs;
    Rational constant;
    Relation relation = Relation::GreaterEqual;
};

struct LinearConstraintSystem {
    int dimension = 0;
    std::vector<Constraint> rows;

    void add(Vector coeffs, Relation relation, Rational constant = 0);
    bool satisfied_by(const Vector& x) const;
};

/// An exact point satisfying every constraint (strict rows strictly), or
/// nullopt when none exists. Deterministic for a fixed system.
std::optional<Vector> feasible(const LinearConstraintSystem& system);

/// Non-negative coefficients c with sum c_i g_i = target, or nullopt. With
/// `open`, all c_i must be positive (relative interior of the cone).
std::optional<Vector> cone_member(const Vector& target, const std::vector<Vector>& generators, bool open);

} // namespace stein
