#include "stein/sigma.hpp"

#include "stein/error.hpp"

#include <functional>

namespace stein {

bool in_dual_algebra(Basis b)
{
    return b == Basis::M || b == Basis::P || b == Basis::C;
}

std::string_view basis_name(Basis b)
{
    switch (b) {
    case Basis::M: return "M";
    case Basis::P: return "P";
    case Basis::C: return "C";
    case Basis::H: return "H";
    case Basis::Q: return "Q";
    }
    return "?";
}

Basis parse_basis(std::string_view name)
{
    if (name == "M") return Basis::M;
    if (name == "P") return Basis::P;
    if (name == "C") return Basis::C;
    if (name == "H") return Basis::H;
    if (name == "Q") return Basis::Q;
    throw DomainError("unknown basis '" + std::string(name) + "'");
}

BasisElement BasisElement::vector(Basis b, const SetComposition& key, Rational coeff)
{
    BasisElement x(key.ground(), b);
    x.add(key, coeff);
    return x;
}

BasisElement BasisElement::unit(Basis b)
{
    return vector(b, SetComposition{});
}

void BasisElement::add(const SetComposition& key, const Rational& coeff)
{
    if (key.ground() != ground)
        throw DomainError("key ground does not match element ground");
    if (coeff == 0)
        return;
    auto [it, inserted] = terms.try_emplace(key, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0)
            terms.erase(it);
    }
}

void BasisElement::add_cone(const Preposet& key, const Rational& coeff)
{
    if (basis != Basis::C)
        throw DomainError("preposet keys are only valid in the C basis");
    if (key.ground() != ground)
        throw DomainError("key ground does not match element ground");
    if (auto f = as_composition(key)) {
        add(*f, coeff);
        return;
    }
    if (coeff == 0)
        return;
    auto [it, inserted] = cone_terms.try_emplace(key, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0)
            cone_terms.erase(it);
    }
}

Rational BasisElement::coeff(const SetComposition& key) const
{
    auto it = terms.find(key);
    return it == terms.end() ? Rational(0) : it->second;
}

static void check_compatible(const BasisElement& a, const BasisElement& b)
{
    if (a.basis != b.basis)
        throw DomainError("basis mismatch");
    if (a.ground != b.ground)
        throw DomainError("ground mismatch");
}

BasisElement& BasisElement::operator+=(const BasisElement& other)
{
    check_compatible(*this, other);
    for (const auto& [k, c] : other.terms)
        add(k, c);
    for (const auto& [k, c] : other.cone_terms)
        add_cone(k, c);
    return *this;
}

BasisElement& BasisElement::operator-=(const BasisElement& other)
{
    check_compatible(*this, other);
    for (const auto& [k, c] : other.terms)
        add(k, -c);
    for (const auto& [k, c] : other.cone_terms)
        add_cone(k, -c);
    return *this;
}

BasisElement& BasisElement::operator*=(const Rational& scalar)
{
    if (scalar == 0) {
        terms.clear();
        cone_terms.clear();
        return *this;
    }
    for (auto& [k, c] : terms)
        c *= scalar;
    for (auto& [k, c] : cone_terms)
        c *= scalar;
    return *this;
}

BasisElement operator+(BasisElement a, const BasisElement& b) { return a += b; }
BasisElement operator-(BasisElement a, const BasisElement& b) { return a -= b; }
BasisElement operator*(const Rational& s, BasisElement a) { return a *= s; }

void TensorElement::add(const SetComposition& a, const SetComposition& b, const Rational& coeff)
{
    if (a.ground() != left || b.ground() != right)
        throw DomainError("tensor key grounds do not match");
    if (coeff == 0)
        return;
    auto [it, inserted] = terms.try_emplace({a, b}, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0)
            terms.erase(it);
    }
}

TensorElement tensor(const BasisElement& a0, const BasisElement& b0)
{
    if (a0.basis != b0.basis)
        throw DomainError("basis mismatch");
    BasisElement a = normalize_cones(a0);
    BasisElement b = normalize_cones(b0);
    TensorElement out{a.ground, b.ground, a.basis, {}};
    for (const auto& [ka, ca] : a.terms)
        for (const auto& [kb, cb] : b.terms)
            out.add(ka, kb, ca * cb);
    return out;
}

std::vector<SetComposition> quasishuffles(const SetComposition& f, const SetComposition& g)
{
    if (f.ground() & g.ground())
        throw DomainError("quasishuffle of overlapping grounds");
    std::vector<SetComposition> out;
    std::vector<Mask> cur;
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t j) {
        if (i == f.lumps.size() && j == g.lumps.size()) {
            out.push_back(SetComposition{cur});
            return;
        }
        if (i < f.lumps.size()) {
            cur.push_back(f.lumps[i]);
            rec(i + 1, j);
            cur.pop_back();
        }
        if (j < g.lumps.size()) {
            cur.push_back(g.lumps[j]);
            rec(i, j + 1);
            cur.pop_back();
        }
        if (i < f.lumps.size() && j < g.lumps.size()) {
            cur.push_back(f.lumps[i] | g.lumps[j]);
            rec(i + 1, j + 1);
            cur.pop_back();
        }
    };
    rec(0, 0);
    return out;
}

std::vector<SetComposition> shuffles(const SetComposition& f, const SetComposition& g)
{
    std::vector<SetComposition> out;
    for (auto& h : quasishuffles(f, g))
        if (h.length() == f.length() + g.length())
            out.push_back(std::move(h));
    return out;
}

static int parity_sign(int k) { return (k % 2 == 0) ? 1 : -1; }

BasisElement multiply(const BasisElement& a0, const BasisElement& b0)
{
    if (a0.basis != b0.basis)
        throw DomainError("multiply: basis mismatch; convert first");
    if (a0.ground & b0.ground)
        throw DomainError("multiply: grounds overlap");
    BasisElement out(a0.ground | b0.ground, a0.basis);
    if (a0.basis == Basis::C) {
        // cone keys multiply by juxtaposition of preposets
        for (const auto& [pa, ca] : a0.cone_terms) {
            for (const auto& [kb, cb] : b0.terms)
                out.add_cone(juxtapose(pa, preposet_of(kb)), ca * cb);
            for (const auto& [pb, cb] : b0.cone_terms)
                out.add_cone(juxtapose(pa, pb), ca * cb);
        }
        for (const auto& [ka, ca] : a0.terms)
            for (const auto& [pb, cb] : b0.cone_terms)
                out.add_cone(juxtapose(preposet_of(ka), pb), ca * cb);
    }
    for (const auto& [f, ca] : a0.terms) {
        for (const auto& [g, cb] : b0.terms) {
            Rational c = ca * cb;
            switch (a0.basis) {
            case Basis::M:
                for (const auto& h : quasishuffles(f, g))
                    out.add(h, c);
                break;
            case Basis::P:
                for (const auto& h : shuffles(f, g))
                    out.add(h, c);
                break;
            case Basis::C:
                for (const auto& h : quasishuffles(f, g))
                    out.add(h, parity_sign(f.length() + g.length() - h.length()) * c);
                break;
            case Basis::H:
            case Basis::Q:
                out.add(concat(f, g), c);
                break;
            }
        }
    }
    return out;
}

BasisElement multiply(const TensorElement& x)
{
    BasisElement out(x.left | x.right, x.basis);
    for (const auto& [k, c] : x.terms) {
        BasisElement a = BasisElement::vector(x.basis, k.first);
        BasisElement b = BasisElement::vector(x.basis, k.second);
        out += c * multiply(a, b);
    }
    return out;
}

TensorElement comultiply(const BasisElement& x0, Mask s, Mask t)
{
    if ((s & t) || (s | t) != x0.ground)
        throw DomainError("comultiply: (S,T) does not split the ground");
    BasisElement x = normalize_cones(x0);
    TensorElement out{s, t, x.basis, {}};
    for (const auto& [f, c] : x.terms) {
        bool keep = false;
        switch (x.basis) {
        case Basis::M:
        case Basis::P:
        case Basis::C: keep = is_initial_segment(f, s); break;
        case Basis::H: keep = true; break;
        case Basis::Q: keep = is_union_of_lumps(f, s); break;
        }
        if (keep)
            out.add(restrict(f, s), restrict(f, t), c);
    }
    return out;
}

static BasisElement to_m(const BasisElement& x)
{
    BasisElement out(x.ground, Basis::M);
    switch (x.basis) {
    case Basis::M:
        return x;
    case Basis::P:
        for (const auto& [f, c] : x.terms)
            for (const auto& g : coarsenings(f))
                out.add(g, c / Rational(quotient_factors(f, g).factorial));
        return out;
    case Basis::C:
        for (const auto& [f, c] : x.terms)
            for (const auto& g : coarsenings(f))
                out.add(g, c);
        if (!x.cone_terms.empty()) {
            auto all = enumerate_compositions(x.ground);
            for (const auto& [p, c] : x.cone_terms)
                for (const auto& f : all)
                    if (leq(f, p))
                        out.add(f, c);
        }
        return out;
    default:
        throw DomainError("conversion between Sigma and Sigma* bases");
    }
}

static BasisElement from_m(const BasisElement& x, Basis target)
{
    BasisElement out(x.ground, target);
    switch (target) {
    case Basis::M:
        return x;
    case Basis::P:
        for (const auto& [f, c] : x.terms)
            for (const auto& g : coarsenings(f))
                out.add(g, parity_sign(f.length() - g.length()) * c
                               / Rational(quotient_factors(f, g).length));
        return out;
    case Basis::C:
        for (const auto& [f, c] : x.terms)
            for (const auto& g : coarsenings(f))
                out.add(g, parity_sign(f.length() - g.length()) * c);
        return out;
    default:
        throw DomainError("conversion between Sigma and Sigma* bases");
    }
}

static BasisElement to_h(const BasisElement& x)
{
    if (x.basis == Basis::H)
        return x;
    if (x.basis != Basis::Q)
        throw DomainError("conversion between Sigma and Sigma* bases");
    BasisElement out(x.ground, Basis::H);
    for (const auto& [f, c] : x.terms)
        for (const auto& g : refinements(f))
            out.add(g, parity_sign(g.length() - f.length()) * c
                           / Rational(quotient_factors(g, f).length));
    return out;
}

static BasisElement from_h(const BasisElement& x, Basis target)
{
    if (target == Basis::H)
        return x;
    if (target != Basis::Q)
        throw DomainError("conversion between Sigma and Sigma* bases");
    BasisElement out(x.ground, Basis::Q);
    for (const auto& [f, c] : x.terms)
        for (const auto& g : refinements(f))
            out.add(g, c / Rational(quotient_factors(g, f).factorial));
    return out;
}

BasisElement change_basis(const BasisElement& x, Basis target)
{
    if (in_dual_algebra(x.basis) != in_dual_algebra(target))
        throw DomainError("cannot convert between Sigma and Sigma* bases");
    if (x.basis == target)
        return x;
    if (in_dual_algebra(target))
        return from_m(to_m(x), target);
    return from_h(to_h(x), target);
}

BasisElement normalize_cones(const BasisElement& x)
{
    if (x.cone_terms.empty())
        return x;
    BasisElement out(x.ground, x.basis);
    out.terms = x.terms;
    for (const auto& [p, c] : x.cone_terms)
        out += c * preposet_expansion(p);
    return out;
}

BasisElement antipode(const BasisElement& x)
{
    if (in_dual_algebra(x.basis)) {
        BasisElement m = to_m(x);
        BasisElement out(x.ground, Basis::M);
        for (const auto& [f, c] : m.terms)
            for (const auto& g : coarsenings(opposite(f)))
                out.add(g, parity_sign(f.length()) * c);
        return from_m(out, x.basis);
    }
    BasisElement h = to_h(x);
    BasisElement out(x.ground, Basis::H);
    for (const auto& [f, c] : h.terms)
        for (const auto& g : refinements(opposite(f)))
            out.add(g, parity_sign(g.length()) * c);
    return from_h(out, x.basis);
}

Rational pairing(const BasisElement& dual, const BasisElement& primal)
{
    if (!in_dual_algebra(dual.basis) || in_dual_algebra(primal.basis))
        throw DomainError("pairing expects a Sigma* element and a Sigma element");
    if (dual.ground != primal.ground)
        throw DomainError("pairing: ground mismatch");
    BasisElement m = to_m(dual);
    BasisElement h = to_h(primal);
    Rational total = 0;
    for (const auto& [f, c] : m.terms)
        total += c * h.coeff(f);
    return total;
}

BasisElement cone_element(const Preposet& p)
{
    BasisElement out(p.ground(), Basis::C);
    out.add_cone(p, 1);
    return out;
}

BasisElement preposet_expansion(const Preposet& p)
{
    BasisElement out(p.ground(), Basis::C);
    int lp = lump_count(p);
    for (const auto& g : enumerate_compositions(p.ground()))
        if (preceq(preposet_of(g), p))
            out.add(g, parity_sign(lp - g.length()));
    return out;
}

BasisElement tits_h(const BasisElement& a0, const BasisElement& b0)
{
    if (a0.ground != b0.ground)
        throw DomainError("tits: ground mismatch");
    BasisElement a = to_h(a0);
    BasisElement b = to_h(b0);
    BasisElement out(a.ground, Basis::H);
    for (const auto& [f, ca] : a.terms)
        for (const auto& [g, cb] : b.terms)
            out.add(tits(f, g), ca * cb);
    return out;
}

BasisElement eulerian_series(Mask ground)
{
    BasisElement out(ground, Basis::H);
    if (ground == 0)
        return out;
    for (const auto& f : enumerate_compositions(ground))
        out.add(f, frac(-parity_sign(f.length()), f.length()));
    return out;
}

BasisElement relabel(const BasisElement& x, const Relabeling& r)
{
    if (x.ground != r.old_ground())
        throw DomainError("relabel: ground mismatch");
    BasisElement out(r.new_ground(), x.basis);
    for (const auto& [f, c] : x.terms)
        out.add(relabel(f, r), c);
    for (const auto& [p, c] : x.cone_terms)
        out.add_cone(relabel(p, r), c);
    return out;
}

} // namespace stein
