#include "stein/regions.hpp"

#include "stein/error.hpp"

#include <algorithm>
#include <map>

namespace stein {

namespace {

bool is_zero(const Vector& v)
{
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

/// Scales v so its first non-zero entry is 1; returns the factor's sign.
int normalize(Vector& v)
{
    for (const auto& x : v) {
        if (x != 0) {
            Rational lead = x;
            int s = sgn(lead);
            for (auto& y : v)
                y /= lead;
            return s;
        }
    }
    return 0;
}

bool strict_on(const std::vector<Vector>& forms, const Vector& x)
{
    for (const auto& f : forms)
        if (!is_zero(f) && dot(f, x) == 0)
            return false;
    return true;
}

} // namespace

Vector generic_point(const std::vector<Vector>& forms, int dim)
{
    for (long t = 2;; ++t) {
        Vector x(dim);
        Rational p = 1;
        for (int i = 0; i < dim; ++i) {
            p *= t;
            x[i] = p;
        }
        if (strict_on(forms, x))
            return x;
    }
}

std::vector<Region> enumerate_regions(const std::vector<Vector>& forms, int dim,
                                      const std::optional<Vector>& seed)
{
    // group proportional forms: group[i] = (group index, orientation)
    std::vector<Vector> reps;
    std::vector<std::pair<int, int>> group(forms.size(), {-1, 0});
    std::map<Vector, int> by_direction;
    for (std::size_t i = 0; i < forms.size(); ++i) {
        if (static_cast<int>(forms[i].size()) != dim)
            throw DomainError("form dimension mismatch");
        Vector v = forms[i];
        int s = normalize(v);
        if (s == 0)
            continue;
        auto [it, inserted] = by_direction.try_emplace(v, static_cast<int>(reps.size()));
        if (inserted)
            reps.push_back(v);
        group[i] = {it->second, s};
    }
    const int m = static_cast<int>(reps.size());

    Vector start = seed ? *seed : generic_point(reps, dim);
    if (!strict_on(reps, start))
        throw DomainError("seed point lies on a hyperplane");

    // incremental construction: split each region by the next hyperplane
    struct Cell {
        std::string s;
        Vector x;
    };
    std::vector<Cell> cells{{std::string(), start}};
    auto oriented = [&](int k, char side) {
        Vector row = reps[k];
        if (side == '-')
            for (auto& v : row)
                v = -v;
        return row;
    };
    auto try_side = [&](const Cell& c, int k, char side) -> std::optional<Vector> {
        LinearConstraintSystem sys{dim, {}};
        for (int j = 0; j < k; ++j)
            sys.rows.push_back(Constraint{oriented(j, c.s[j]), 0, Relation::Greater});
        sys.rows.push_back(Constraint{oriented(k, side), 0, Relation::Greater});
        return feasible(sys);
    };
    for (int k = 0; k < m; ++k) {
        std::vector<Cell> next;
        next.reserve(cells.size() * 2);
        for (auto& c : cells) {
            int v = sgn(dot(reps[k], c.x));
            if (v != 0) {
                char own = v > 0 ? '+' : '-';
                char other = v > 0 ? '-' : '+';
                if (auto y = try_side(c, k, other))
                    next.push_back({c.s + other, std::move(*y)});
                next.push_back({c.s + own, std::move(c.x)});
            } else {
                for (char side : {'+', '-'})
                    if (auto y = try_side(c, k, side))
                        next.push_back({c.s + side, std::move(*y)});
            }
        }
        cells = std::move(next);
    }
    std::map<std::string, Vector> found;
    for (auto& c : cells)
        found.emplace(std::move(c.s), std::move(c.x));

    std::vector<Region> out;
    for (auto& [s, x] : found) {
        Region r{std::string(forms.size(), '0'), std::move(x)};
        for (std::size_t i = 0; i < forms.size(); ++i) {
            auto [g, o] = group[i];
            if (g < 0)
                continue;
            bool pos = (s[g] == '+') == (o > 0);
            r.signs[i] = pos ? '+' : '-';
        }
        out.push_back(std::move(r));
    }
    std::sort(out.begin(), out.end(), [](const Region& a, const Region& b) { return a.signs < b.signs; });
    return out;
}

} // namespace stein
