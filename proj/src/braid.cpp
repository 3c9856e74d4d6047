#include "stein/braid.hpp"

#include "stein/error.hpp"

#include <algorithm>

namespace stein {

void PwcFunction::set(const SetComposition& face, const Rational& value)
{
    if (face.ground() != ground)
        throw DomainError("face outside the function's ground");
    if (value == 0)
        coeffs.erase(face);
    else
        coeffs[face] = value;
}

Rational PwcFunction::at(const SetComposition& face) const
{
    auto it = coeffs.find(face);
    return it == coeffs.end() ? Rational(0) : it->second;
}

SetComposition braid_signature(const Point& lambda)
{
    auto atoms = atoms_of(lambda.ground);
    std::vector<Rational> values;
    for (int a : atoms)
        values.push_back(lambda.at(a));
    std::vector<Rational> levels = values;
    std::sort(levels.begin(), levels.end(), [](const Rational& a, const Rational& b) { return a > b; });
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    SetComposition f;
    for (const auto& v : levels) {
        Mask lump = 0;
        for (std::size_t i = 0; i < atoms.size(); ++i)
            if (values[i] == v)
                lump |= atom_mask(atoms[i]);
        f.lumps.push_back(lump);
    }
    return f;
}

Point face_witness(const SetComposition& f)
{
    Point p{f.ground(), {}};
    int k = f.length();
    for (int a : atoms_of(f.ground()))
        p.coords.push_back(k - f.lump_of(a));
    return p;
}

Rational eval(const PwcFunction& f, const Point& lambda)
{
    if (lambda.ground != f.ground)
        throw DomainError("evaluation point over a different ground");
    return f.at(braid_signature(lambda));
}

PwcFunction face(const SetComposition& f)
{
    PwcFunction out{f.ground(), {}};
    out.set(f, 1);
    return out;
}

PwcFunction cone(const Preposet& p)
{
    PwcFunction out{p.ground(), {}};
    for (const auto& f : enumerate_compositions(p.ground()))
        if (leq(f, p))
            out.set(f, 1);
    return out;
}

PwcFunction pointwise_product(const PwcFunction& f, const PwcFunction& g)
{
    if (f.ground != g.ground)
        throw DomainError("pointwise product over different grounds");
    PwcFunction out{f.ground, {}};
    for (const auto& [k, v] : f.coeffs)
        out.set(k, v * g.at(k));
    return out;
}

PwcFunction realize(const BasisElement& x)
{
    BasisElement m = change_basis(x, Basis::M);
    PwcFunction out{m.ground, {}};
    for (const auto& [k, v] : m.terms)
        out.set(k, v);
    return out;
}

bool support_matches_cone(const Preposet& p)
{
    Mask g = p.ground();
    std::vector<Vector> gens;
    for (const auto& b : coprobes(p).members)
        gens.push_back(recentre(weight_point(g, b.s).coords));
    PwcFunction c = cone(p);
    for (const auto& f : enumerate_compositions(g)) {
        Point w = face_witness(f);
        bool inside = cone_member(recentre(w.coords), gens, false).has_value();
        if (inside != (eval(c, w) == 1))
            return false;
    }
    return true;
}

} // namespace stein
