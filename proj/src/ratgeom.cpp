#include "stein/ratgeom.hpp"

#include "stein/error.hpp"

#include <algorithm>
#include <stdexcept>

namespace stein {

const Rational& Point::at(int atom) const
{
    if (!contains(ground, atom))
        throw DomainError("atom outside the point's ground");
    return coords.at(popcount(ground & range_mask(atom)));
}

Point weight_point(Mask ground, Mask s)
{
    Point p{ground, {}};
    for (int a : atoms_of(ground))
        p.coords.push_back(contains(s, a) ? 1 : 0);
    return p;
}

Point coroot_point(Mask ground, int i1, int i2)
{
    Point p{ground, {}};
    for (int a : atoms_of(ground))
        p.coords.push_back(a == i1 ? 1 : a == i2 ? -1 : 0);
    return p;
}

Rational pair(const Point& h, const Point& lambda)
{
    if (h.ground != lambda.ground || h.coords.size() != lambda.coords.size())
        throw DomainError("pairing points over different grounds");
    Rational total = 0;
    for (const auto& c : h.coords)
        total += c;
    if (total != 0)
        throw DomainError("coweight point does not sum to zero");
    return dot(h.coords, lambda.coords);
}

Rational subset_sum(Mask ground, const Vector& h, Mask s)
{
    Rational total = 0;
    int pos = 0;
    for (int a : atoms_of(ground)) {
        if (contains(s, a))
            total += h[pos];
        ++pos;
    }
    return total;
}

Vector recentre(const Vector& v)
{
    if (v.empty())
        return v;
    Rational mean = 0;
    for (const auto& c : v)
        mean += c;
    mean /= static_cast<long>(v.size());
    Vector out = v;
    for (auto& c : out)
        c -= mean;
    return out;
}

Rational dot(const Vector& a, const Vector& b)
{
    Rational total = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0)
            total += a[i] * b[i];
    return total;
}

namespace {

/// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(Matrix& a, int cols)
{
    std::vector<int> pivots;
    std::size_t row = 0;
    for (int c = 0; c < cols && row < a.size(); ++c) {
        std::size_t sel = row;
        while (sel < a.size() && a[sel][c] == 0)
            ++sel;
        if (sel == a.size())
            continue;
        std::swap(a[row], a[sel]);
        Rational inv = 1 / a[row][c];
        for (auto& v : a[row])
            v *= inv;
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (r == row || a[r][c] == 0)
                continue;
            Rational factor = a[r][c];
            for (std::size_t k = c; k < a[r].size(); ++k)
                if (a[row][k] != 0)
                    a[r][k] -= factor * a[row][k];
        }
        pivots.push_back(c);
        ++row;
    }
    return pivots;
}

} // namespace

int rank(Matrix a)
{
    if (a.empty())
        return 0;
    return static_cast<int>(rref(a, static_cast<int>(a.front().size())).size());
}

Matrix kernel_basis(Matrix a, int cols)
{
    std::vector<int> pivots = rref(a, cols);
    std::vector<bool> is_pivot(cols, false);
    for (int p : pivots)
        is_pivot[p] = true;
    Matrix basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free])
            continue;
        Vector v(cols, 0);
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -a[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vector> solve(Matrix a, Vector b, int cols)
{
    if (a.size() != b.size())
        throw DomainError("solve: row count mismatch");
    for (std::size_t r = 0; r < a.size(); ++r)
        a[r].push_back(b[r]);
    std::vector<int> pivots = rref(a, cols);
    for (std::size_t r = pivots.size(); r < a.size(); ++r)
        if (a[r][cols] != 0)
            return std::nullopt;
    Vector x(cols, 0);
    for (std::size_t r = 0; r < pivots.size(); ++r)
        x[pivots[r]] = a[r][cols];
    return x;
}

std::optional<Matrix> inverse(Matrix a)
{
    int n = static_cast<int>(a.size());
    for (int r = 0; r < n; ++r) {
        a[r].resize(2 * n, 0);
        a[r][n + r] = 1;
    }
    std::vector<int> pivots = rref(a, n);
    if (static_cast<int>(pivots.size()) != n)
        return std::nullopt;
    Matrix inv(n);
    for (int r = 0; r < n; ++r)
        inv[r].assign(a[r].begin() + n, a[r].end());
    return inv;
}

SparseEchelon::Row SparseEchelon::reduce(Row row) const
{
    // Leading entries are eliminated in increasing column order; each stored
    // row only touches columns at or after its pivot.
    auto it = row.begin();
    while (it != row.end()) {
        auto piv = pivots_.find(it->first);
        if (piv == pivots_.end()) {
            ++it;
            continue;
        }
        Rational factor = it->second;
        int col = it->first;
        for (const auto& [c, v] : piv->second) {
            Rational& target = row[c];
            target -= factor * v;
        }
        for (auto jt = row.begin(); jt != row.end();) {
            if (jt->second == 0)
                jt = row.erase(jt);
            else
                ++jt;
        }
        it = row.upper_bound(col);
    }
    return row;
}

bool SparseEchelon::insert(Row row)
{
    row = reduce(std::move(row));
    if (row.empty())
        return false;
    Rational inv = 1 / row.begin()->second;
    for (auto& [c, v] : row)
        v *= inv;
    int lead = row.begin()->first;
    // keep stored rows reduced against the new pivot so reduce() stays a single pass
    for (auto& [p, stored] : pivots_) {
        auto hit = stored.find(lead);
        if (hit == stored.end())
            continue;
        Rational factor = hit->second;
        for (const auto& [c, v] : row)
            stored[c] -= factor * v;
        for (auto jt = stored.begin(); jt != stored.end();) {
            if (jt->second == 0)
                jt = stored.erase(jt);
            else
                ++jt;
        }
    }
    pivots_.emplace(lead, std::move(row));
    return true;
}

void LinearConstraintSystem::add(Vector coeffs, Relation relation, Rational constant)
{
    if (static_cast<int>(coeffs.size()) != dimension)
        throw DomainError("constraint dimension mismatch");
    rows.push_back(Constraint{std::move(coeffs), std::move(constant), relation});
}

bool LinearConstraintSystem::satisfied_by(const Vector& x) const
{
    if (static_cast<int>(x.size()) != dimension)
        return false;
    for (const auto& row : rows) {
        Rational v = dot(row.coeffs, x) + row.constant;
        int s = sgn(v);
        switch (row.relation) {
        case Relation::GreaterEqual:
            if (s < 0)
                return false;
            break;
        case Relation::Greater:
            if (s <= 0)
                return false;
            break;
        case Relation::Equal:
            if (s != 0)
                return false;
            break;
        }
    }
    return true;
}

namespace {

/// Dense simplex tableau for: maximize cost . y  s.t.  A y = b, y >= 0, b >= 0.
/// Bland's rule throughout.
class Tableau {
public:
    Tableau(Matrix rows, std::vector<int> basis, int columns)
        : t_(std::move(rows)), basis_(std::move(basis)), cols_(columns)
    {
    }

    int columns() const { return cols_; }
    const std::vector<int>& basis() const { return basis_; }
    const Rational& rhs(std::size_t r) const { return t_[r][cols_]; }
    const Rational& at(std::size_t r, int c) const { return t_[r][c]; }
    std::size_t rows() const { return t_.size(); }

    /// Runs to optimality; returns the optimum value. Columns flagged in
    /// `blocked` never enter.
    Rational maximize(const Vector& cost, const std::vector<bool>& blocked)
    {
        Vector z(cols_ + 1, 0);
        for (int j = 0; j < cols_; ++j)
            z[j] = -cost[j];
        for (std::size_t r = 0; r < t_.size(); ++r) {
            const Rational& cb = cost[basis_[r]];
            if (cb == 0)
                continue;
            for (int j = 0; j <= cols_; ++j)
                if (t_[r][j] != 0)
                    z[j] += cb * t_[r][j];
        }
        while (true) {
            int enter = -1;
            for (int j = 0; j < cols_; ++j) {
                if (!blocked[j] && z[j] < 0) {
                    enter = j;
                    break;
                }
            }
            if (enter < 0)
                return z[cols_];
            int leave = -1;
            Rational best;
            for (std::size_t r = 0; r < t_.size(); ++r) {
                if (t_[r][enter] <= 0)
                    continue;
                Rational ratio = t_[r][cols_] / t_[r][enter];
                if (leave < 0 || ratio < best || (ratio == best && basis_[r] < basis_[leave])) {
                    leave = static_cast<int>(r);
                    best = ratio;
                }
            }
            if (leave < 0)
                throw std::logic_error("simplex: unbounded objective");
            pivot(leave, enter, &z);
        }
    }

    void pivot(std::size_t row, int col, Vector* objective = nullptr)
    {
        Rational inv = 1 / t_[row][col];
        for (auto& v : t_[row])
            if (v != 0)
                v *= inv;
        auto eliminate = [&](Vector& target) {
            if (target[col] == 0)
                return;
            Rational factor = target[col];
            for (int j = 0; j <= cols_; ++j)
                if (t_[row][j] != 0)
                    target[j] -= factor * t_[row][j];
        };
        for (std::size_t r = 0; r < t_.size(); ++r)
            if (r != row)
                eliminate(t_[r]);
        if (objective)
            eliminate(*objective);
        basis_[row] = col;
    }

    void drop_row(std::size_t r)
    {
        t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(r));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
    }

private:
    Matrix t_;
    std::vector<int> basis_;
    int cols_;
};

} // namespace

std::optional<Vector> feasible(const LinearConstraintSystem& system)
{
    const int d = system.dimension;
    bool has_strict = std::any_of(system.rows.begin(), system.rows.end(),
                                  [](const Constraint& c) { return c.relation == Relation::Greater; });
    int inequality_rows = 0;
    for (const auto& row : system.rows)
        if (row.relation != Relation::Equal)
            ++inequality_rows;

    // column layout: x+ (d), x- (d), [t], slacks (one per inequality), [t-bound slack], artificials
    const int col_t = 2 * d;
    const int first_slack = has_strict ? col_t + 1 : col_t;
    const int col_tbound = first_slack + inequality_rows;
    const int structural = col_tbound + (has_strict ? 1 : 0);

    struct PendingRow {
        Vector coeffs; // over structural columns
        Rational rhs;
        int basic; // -1 when an artificial is needed
    };
    std::vector<PendingRow> pending;
    int slack = first_slack;
    for (const auto& row : system.rows) {
        PendingRow pr{Vector(structural, 0), -row.constant, -1};
        for (int k = 0; k < d; ++k) {
            pr.coeffs[k] = row.coeffs[k];
            pr.coeffs[d + k] = -row.coeffs[k];
        }
        if (row.relation != Relation::Equal) {
            if (row.relation == Relation::Greater)
                pr.coeffs[col_t] = -1;
            pr.coeffs[slack] = -1;
            // rhs = -c; prefer the negated form so the slack can start basic
            if (sgn(pr.rhs) <= 0) {
                for (auto& v : pr.coeffs)
                    v = -v;
                pr.rhs = -pr.rhs;
                pr.basic = slack;
            }
            ++slack;
        } else if (sgn(pr.rhs) < 0) {
            for (auto& v : pr.coeffs)
                v = -v;
            pr.rhs = -pr.rhs;
        }
        pending.push_back(std::move(pr));
    }
    if (has_strict) {
        PendingRow pr{Vector(structural, 0), 1, col_tbound};
        pr.coeffs[col_t] = 1;
        pr.coeffs[col_tbound] = 1;
        pending.push_back(std::move(pr));
    }

    int artificials = 0;
    for (const auto& pr : pending)
        if (pr.basic < 0)
            ++artificials;
    const int total = structural + artificials;
    Matrix rows;
    std::vector<int> basis;
    int art = structural;
    for (auto& pr : pending) {
        Vector r = std::move(pr.coeffs);
        r.resize(total + 1, 0);
        r[total] = pr.rhs;
        if (pr.basic < 0) {
            r[art] = 1;
            basis.push_back(art++);
        } else {
            basis.push_back(pr.basic);
        }
        rows.push_back(std::move(r));
    }
    Tableau tab(std::move(rows), std::move(basis), total);
    std::vector<bool> blocked(total, false);

    if (artificials > 0) {
        Vector cost(total, 0);
        for (int j = structural; j < total; ++j)
            cost[j] = -1;
        Rational best = tab.maximize(cost, blocked);
        if (best < 0)
            return std::nullopt;
        // drive remaining (zero-valued) artificials out of the basis
        for (std::size_t r = 0; r < tab.rows();) {
            if (tab.basis()[r] < structural) {
                ++r;
                continue;
            }
            int col = -1;
            for (int j = 0; j < structural; ++j) {
                if (tab.at(r, j) != 0) {
                    col = j;
                    break;
                }
            }
            if (col < 0) {
                tab.drop_row(r);
                continue;
            }
            tab.pivot(r, col);
            ++r;
        }
        for (int j = structural; j < total; ++j)
            blocked[j] = true;
    }

    if (has_strict) {
        Vector cost(total, 0);
        cost[col_t] = 1;
        Rational margin = tab.maximize(cost, blocked);
        if (margin <= 0)
            return std::nullopt;
    }

    Vector y(total, 0);
    for (std::size_t r = 0; r < tab.rows(); ++r)
        y[tab.basis()[r]] = tab.rhs(r);
    Vector x(d);
    for (int k = 0; k < d; ++k)
        x[k] = y[k] - y[d + k];
    if (!system.satisfied_by(x))
        throw std::logic_error("simplex returned a point violating the constraints");
    return x;
}

std::optional<Vector> cone_member(const Vector& target, const std::vector<Vector>& generators, bool open)
{
    const int m = static_cast<int>(generators.size());
    if (m == 0) {
        if (open)
            return std::nullopt;
        bool zero = std::all_of(target.begin(), target.end(), [](const Rational& v) { return v == 0; });
        return zero ? std::optional<Vector>(Vector{}) : std::nullopt;
    }
    LinearConstraintSystem sys;
    sys.dimension = m;
    for (std::size_t k = 0; k < target.size(); ++k) {
        Vector row(m);
        for (int i = 0; i < m; ++i) {
            if (generators[i].size() != target.size())
                throw DomainError("cone generator dimension mismatch");
            row[i] = generators[i][k];
        }
        sys.add(std::move(row), Relation::Equal, -target[k]);
    }
    for (int i = 0; i < m; ++i) {
        Vector row(m, 0);
        row[i] = 1;
        sys.add(std::move(row), open ? Relation::Greater : Relation::GreaterEqual);
    }
    auto c = feasible(sys);
    if (!c)
        return std::nullopt;
    Vector check(target.size(), 0);
    for (int i = 0; i < m; ++i)
        for (std::size_t k = 0; k < target.size(); ++k)
            check[k] += (*c)[i] * generators[i][k];
    if (check != target)
        throw std::logic_error("cone_member: coefficients do not reproduce the target");
    return c;
}

} // namespace stein
