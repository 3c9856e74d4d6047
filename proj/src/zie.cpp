#include "stein/zie.hpp"

#include "stein/error.hpp"

namespace stein {

Tree Tree::leaf(Mask lump)
{
    if (lump == 0)
        throw DomainError("tree leaves need non-empty lumps");
    Tree t;
    t.lump_ = lump;
    t.ground_ = lump;
    return t;
}

Tree Tree::node(Tree left, Tree right)
{
    if (left.ground_ & right.ground_)
        throw DomainError("tree branches overlap");
    Tree t;
    t.ground_ = left.ground_ | right.ground_;
    t.left_ = std::make_shared<const Tree>(std::move(left));
    t.right_ = std::make_shared<const Tree>(std::move(right));
    return t;
}

Tree Tree::comb(const SetComposition& f)
{
    if (f.empty())
        throw DomainError("no tree over the empty set");
    Tree t = leaf(f.lumps[0]);
    for (std::size_t j = 1; j < f.lumps.size(); ++j)
        t = node(std::move(t), leaf(f.lumps[j]));
    return t;
}

int Tree::leaves() const
{
    return is_leaf() ? 1 : left_->leaves() + right_->leaves();
}

bool Tree::operator==(const Tree& other) const
{
    if (is_leaf() != other.is_leaf())
        return false;
    if (is_leaf())
        return lump_ == other.lump_;
    return *left_ == *other.left_ && *right_ == *other.right_;
}

std::string debug_string(const Tree& t)
{
    if (t.is_leaf()) {
        std::string s;
        for (int a : atoms_of(t.lump()))
            s += std::to_string(a + 1);
        return s;
    }
    return "[" + debug_string(t.left()) + "," + debug_string(t.right()) + "]";
}

SetComposition debracket(const Tree& t)
{
    if (t.is_leaf())
        return SetComposition{{t.lump()}};
    return concat(debracket(t.left()), debracket(t.right()));
}

std::vector<std::pair<Tree, int>> antisym(const Tree& t)
{
    if (t.is_leaf())
        return {{t, 1}};
    std::vector<std::pair<Tree, int>> out;
    auto ls = antisym(t.left());
    auto rs = antisym(t.right());
    for (const auto& [a, sa] : ls) {
        for (const auto& [b, sb] : rs) {
            out.emplace_back(Tree::node(a, b), sa * sb);
            out.emplace_back(Tree::node(b, a), -sa * sb);
        }
    }
    return out;
}

bool is_based(const SetComposition& f)
{
    return !f.empty() && contains(f.lumps[0], basepoint(f.ground()));
}

std::vector<SetComposition> based_compositions(Mask ground)
{
    std::vector<SetComposition> out;
    for (auto& f : enumerate_compositions(ground))
        if (is_based(f))
            out.push_back(std::move(f));
    return out;
}

void ZieElement::add(const SetComposition& key, const Rational& coeff)
{
    if (key.ground() != ground || !is_based(key))
        throw DomainError("Zie keys must be based compositions of the ground");
    if (coeff == 0)
        return;
    auto [it, inserted] = terms.try_emplace(key, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0)
            terms.erase(it);
    }
}

ZieElement& ZieElement::operator+=(const ZieElement& other)
{
    if (other.is_zero())
        return *this;
    if (is_zero() && ground == 0)
        ground = other.ground;
    if (ground != other.ground)
        throw DomainError("ground mismatch");
    for (const auto& [k, c] : other.terms)
        add(k, c);
    return *this;
}

ZieElement& ZieElement::operator*=(const Rational& s)
{
    if (s == 0)
        terms.clear();
    for (auto& [k, c] : terms)
        c *= s;
    return *this;
}

ZieElement operator+(ZieElement a, const ZieElement& b) { return a += b; }
ZieElement operator-(ZieElement a, const ZieElement& b) { return a += Rational(-1) * b; }
ZieElement operator*(const Rational& s, ZieElement a) { return a *= s; }

ZieElement comb_element(const SetComposition& f, Rational coeff)
{
    ZieElement z{f.ground(), {}};
    z.add(f, coeff);
    return z;
}

namespace {

// [X, Y] for X in comb coordinates (basepoint in X) and an arbitrary tree Y.
ZieElement bracket_comb(const ZieElement& x, const Tree& y)
{
    ZieElement out{x.ground | y.ground(), {}};
    if (y.is_leaf()) {
        for (const auto& [k, c] : x.terms) {
            SetComposition f = k;
            f.lumps.push_back(y.lump());
            out.add(f, c);
        }
        return out;
    }
    out += bracket_comb(bracket_comb(x, y.left()), y.right());
    out += Rational(-1) * bracket_comb(bracket_comb(x, y.right()), y.left());
    return out;
}

} // namespace

ZieElement reduce(const Tree& t)
{
    if (t.is_leaf())
        return comb_element(SetComposition{{t.lump()}});
    int i0 = basepoint(t.ground());
    if (contains(t.left().ground(), i0))
        return bracket_comb(reduce(t.left()), t.right());
    return Rational(-1) * bracket_comb(reduce(t.right()), t.left());
}

BasisElement embed_u(const ZieElement& z)
{
    BasisElement out(z.ground, Basis::Q);
    for (const auto& [k, c] : z.terms)
        for (const auto& [t, sign] : antisym(Tree::comb(k)))
            out.add(debracket(t), sign * c);
    return out;
}

ZieElement bracket(const ZieElement& a, const ZieElement& b)
{
    if (a.ground & b.ground)
        throw DomainError("bracket: grounds overlap");
    ZieElement out{a.ground | b.ground, {}};
    for (const auto& [ka, ca] : a.terms)
        for (const auto& [kb, cb] : b.terms)
            out += (ca * cb) * reduce(Tree::node(Tree::comb(ka), Tree::comb(kb)));
    return out;
}

ZieElement relabel(const ZieElement& z, const Relabeling& r)
{
    if (z.ground != r.old_ground())
        throw DomainError("relabel: ground mismatch");
    ZieElement out{r.new_ground(), {}};
    for (const auto& [k, c] : z.terms)
        out += c * reduce(Tree::comb(relabel(k, r)));
    return out;
}

std::string_view dual_basis_name(DualBasis b)
{
    switch (b) {
    case DualBasis::p: return "p";
    case DualBasis::m: return "m";
    case DualBasis::c: return "c";
    }
    return "?";
}

DualBasis parse_dual_basis(std::string_view name)
{
    if (name == "p") return DualBasis::p;
    if (name == "m") return DualBasis::m;
    if (name == "c") return DualBasis::c;
    throw DomainError("unknown Zie* basis '" + std::string(name) + "'");
}

void ZieDualElement::add(const SetComposition& key, const Rational& coeff)
{
    if (key.ground() != ground || !is_based(key))
        throw DomainError("Zie* keys must be based compositions of the ground");
    if (coeff == 0)
        return;
    auto [it, inserted] = terms.try_emplace(key, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0)
            terms.erase(it);
    }
}

Rational p_eval(const SetComposition& f, const Tree& t)
{
    if (f.ground() != t.ground())
        throw DomainError("p_eval: ground mismatch");
    if (t.is_leaf())
        return f.length() == 1 ? 1 : 0;
    Mask ga = t.left().ground();
    Mask gb = t.right().ground();
    if (is_initial_segment(f, ga))
        return p_eval(restrict(f, ga), t.left()) * p_eval(restrict(f, gb), t.right());
    if (is_initial_segment(f, gb))
        return -p_eval(restrict(f, gb), t.right()) * p_eval(restrict(f, ga), t.left());
    return 0;
}

ZieDualElement rebase_p(const SetComposition& f)
{
    ZieDualElement out{f.ground(), DualBasis::p, {}};
    if (is_based(f)) {
        out.add(f, 1);
        return out;
    }
    // only keys with the same lumps can pair non-trivially
    auto lumps = partition_of(f);
    for (const auto& h : based_compositions(f.ground()))
        if (partition_of(h) == lumps)
            out.add(h, p_eval(f, Tree::comb(h)));
    return out;
}

namespace {

int parity(int k) { return k % 2 == 0 ? 1 : -1; }

ZieDualElement dual_to_m(const ZieDualElement& x)
{
    ZieDualElement out{x.ground, DualBasis::m, {}};
    for (const auto& [f, c] : x.terms) {
        for (const auto& g : coarsenings(f)) {
            if (x.basis == DualBasis::p)
                out.add(g, c / Rational(quotient_factors(f, g).factorial));
            else if (x.basis == DualBasis::c)
                out.add(g, c);
            else if (g == f)
                out.add(g, c);
        }
    }
    return out;
}

ZieDualElement dual_from_m(const ZieDualElement& x, DualBasis target)
{
    ZieDualElement out{x.ground, target, {}};
    for (const auto& [f, c] : x.terms) {
        for (const auto& g : coarsenings(f)) {
            if (target == DualBasis::p)
                out.add(g, parity(f.length() - g.length()) * c / Rational(quotient_factors(f, g).length));
            else if (target == DualBasis::c)
                out.add(g, parity(f.length() - g.length()) * c);
            else if (g == f)
                out.add(g, c);
        }
    }
    return out;
}

} // namespace

ZieDualElement change_basis(const ZieDualElement& x, DualBasis target)
{
    if (x.basis == target)
        return x;
    return dual_from_m(dual_to_m(x), target);
}

ZieDualElement project_ustar(const BasisElement& x, DualBasis target)
{
    if (!in_dual_algebra(x.basis))
        throw DomainError("U* takes an element of Sigma*");
    BasisElement p = change_basis(x, Basis::P);
    ZieDualElement out{x.ground, DualBasis::p, {}};
    for (const auto& [g, c] : p.terms)
        for (const auto& [h, v] : rebase_p(g).terms)
            out.add(h, c * v);
    return change_basis(out, target);
}

Rational pairing(const ZieDualElement& d, const ZieElement& z)
{
    if (d.ground != z.ground)
        throw DomainError("pairing: ground mismatch");
    ZieDualElement p = change_basis(d, DualBasis::p);
    Rational total = 0;
    for (const auto& [f, c] : p.terms) {
        auto it = z.terms.find(f);
        if (it != z.terms.end())
            total += c * it->second;
    }
    return total;
}

void ZieDualTensor::add(const SetComposition& a, const SetComposition& b, const Rational& coeff)
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

ZieDualTensor cobracket(const ZieDualElement& d, Mask s, Mask t)
{
    if (s == 0 || t == 0 || (s & t) || (s | t) != d.ground)
        throw DomainError("cobracket: (S,T) must split the ground into non-empty parts");
    ZieDualElement p = change_basis(d, DualBasis::p);
    ZieDualTensor out{s, t, {}};
    for (const auto& [f, c] : p.terms) {
        int sign = 0;
        if (is_initial_segment(f, s))
            sign = 1;
        else if (is_initial_segment(f, t))
            sign = -1;
        if (sign == 0)
            continue;
        auto a = rebase_p(restrict(f, s));
        auto b = rebase_p(restrict(f, t));
        for (const auto& [ka, ca] : a.terms)
            for (const auto& [kb, cb] : b.terms)
                out.add(ka, kb, sign * c * ca * cb);
    }
    return out;
}

} // namespace stein
