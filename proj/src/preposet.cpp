#include "stein/preposet.hpp"

#include "stein/error.hpp"
#include "stein/ratgeom.hpp"

#include <algorithm>

namespace stein {

Preposet Preposet::from_rows(Mask ground, const std::array<Mask, kMaxAtoms>& rows)
{
    Preposet p(ground);
    for (int i : atoms_of(ground)) {
        if (!is_subset(rows[i], ground))
            throw DomainError("preposet pair outside the ground");
        p.rel_[i] = rows[i] & ~atom_mask(i);
    }
    // Warshall on bit rows
    for (int k : atoms_of(ground))
        for (int i : atoms_of(ground))
            if (contains(p.rel_[i], k))
                p.rel_[i] |= p.rel_[k];
    for (int i : atoms_of(ground))
        p.rel_[i] &= ~atom_mask(i);
    return p;
}

std::vector<std::pair<int, int>> Preposet::pairs() const
{
    std::vector<std::pair<int, int>> out;
    for (int i : atoms_of(ground_))
        for (int j : atoms_of(rel_[i]))
            out.emplace_back(i, j);
    return out;
}

int Preposet::pair_count() const
{
    int c = 0;
    for (int i : atoms_of(ground_))
        c += popcount(rel_[i]);
    return c;
}

Preposet Preposet::strict_part() const
{
    Preposet out(ground_);
    for (int i : atoms_of(ground_))
        for (int j : atoms_of(rel_[i]))
            if (!has(j, i))
                out.rel_[i] |= atom_mask(j);
    return out;
}

Preposet transitive_closure(Mask ground, std::span<const std::pair<int, int>> pairs)
{
    std::array<Mask, kMaxAtoms> rows{};
    for (auto [a, b] : pairs) {
        if (a == b || !contains(ground, a) || !contains(ground, b))
            throw DomainError("preposet pair must join two distinct atoms of the ground");
        rows[a] |= atom_mask(b);
    }
    return Preposet::from_rows(ground, rows);
}

Preposet preposet_union(const Preposet& p, const Preposet& q)
{
    if (p.ground() != q.ground())
        throw DomainError("union of preposets over different grounds");
    std::array<Mask, kMaxAtoms> rows{};
    for (int i : atoms_of(p.ground()))
        rows[i] = p.row(i) | q.row(i);
    return Preposet::from_rows(p.ground(), rows);
}

Preposet juxtapose(const Preposet& p, const Preposet& q)
{
    if (p.ground() & q.ground())
        throw DomainError("juxtaposition of preposets over overlapping grounds");
    std::array<Mask, kMaxAtoms> rows{};
    for (int i : atoms_of(p.ground()))
        rows[i] = p.row(i);
    for (int i : atoms_of(q.ground()))
        rows[i] = q.row(i);
    return Preposet::from_rows(p.ground() | q.ground(), rows);
}

Preposet preposet_of(const SetComposition& f)
{
    std::array<Mask, kMaxAtoms> rows{};
    Mask right = f.ground();
    for (Mask lump : f.lumps) {
        for (int i : atoms_of(lump))
            rows[i] = right;
        right &= ~lump;
    }
    return Preposet::from_rows(f.ground(), rows);
}

namespace {

void same_ground(const Preposet& a, const Preposet& b)
{
    if (a.ground() != b.ground())
        throw DomainError("comparing preposets over different grounds");
}

bool subset_of(const Preposet& a, const Preposet& b)
{
    for (int i : atoms_of(a.ground()))
        if (!is_subset(a.row(i), b.row(i)))
            return false;
    return true;
}

SetPartition classes(const Preposet& p, bool mutual)
{
    Mask rest = p.ground();
    std::vector<Mask> out;
    while (rest) {
        int seed = lowest_atom(rest);
        Mask cls = atom_mask(seed);
        if (mutual) {
            for (int j : atoms_of(p.row(seed)))
                if (p.has(j, seed))
                    cls |= atom_mask(j);
        } else {
            Mask frontier = cls;
            while (frontier) {
                int a = lowest_atom(frontier);
                frontier &= frontier - 1;
                Mask nbrs = p.row(a);
                for (int j : atoms_of(p.ground()))
                    if (p.has(j, a))
                        nbrs |= atom_mask(j);
                Mask fresh = nbrs & ~cls;
                cls |= fresh;
                frontier |= fresh;
            }
        }
        out.push_back(cls);
        rest &= ~cls;
    }
    return make_partition(std::move(out));
}

} // namespace

bool leq(const Preposet& q, const Preposet& p)
{
    same_ground(q, p);
    return subset_of(p, q);
}

bool preceq(const Preposet& q, const Preposet& p)
{
    return leq(q, p) && subset_of(p.strict_part(), q.strict_part());
}

bool preceq_l(const Preposet& q, const Preposet& p)
{
    return preceq(q, p) && lump_count(q) == lump_count(p);
}

bool leq(const SetComposition& f, const Preposet& p)
{
    if (f.ground() != p.ground())
        throw DomainError("comparing a composition and a preposet over different grounds");
    std::vector<int> pos(kMaxAtoms, -1);
    for (int j = 0; j < f.length(); ++j)
        for (int a : atoms_of(f.lumps[j]))
            pos[a] = j;
    for (auto [a, b] : p.pairs())
        if (pos[a] > pos[b])
            return false;
    return true;
}

SetPartition lumps(const Preposet& p) { return classes(p, true); }
int lump_count(const Preposet& p) { return lumps(p).size(); }
SetPartition blocks(const Preposet& p) { return classes(p, false); }

Preposet opposite(const Preposet& p)
{
    std::array<Mask, kMaxAtoms> rows{};
    for (auto [a, b] : p.pairs())
        rows[b] |= atom_mask(a);
    return Preposet::from_rows(p.ground(), rows);
}

Preposet restrict(const Preposet& p, Mask s)
{
    if (!is_subset(s, p.ground()))
        throw DomainError("restriction of a preposet outside its ground");
    std::array<Mask, kMaxAtoms> rows{};
    for (int i : atoms_of(s))
        rows[i] = p.row(i) & s;
    return Preposet::from_rows(s, rows);
}

bool is_total(const Preposet& p)
{
    for (int i : atoms_of(p.ground()))
        for (int j : atoms_of(p.ground()))
            if (i != j && !p.has(i, j) && !p.has(j, i))
                return false;
    return true;
}

std::optional<SetComposition> as_composition(const Preposet& p)
{
    if (!is_total(p))
        return std::nullopt;
    // lumps ordered by how many atoms they dominate: leftmost dominates all
    std::vector<Mask> ls = lumps(p).blocks;
    std::sort(ls.begin(), ls.end(), [&](Mask a, Mask b) {
        return popcount(p.row(lowest_atom(a))) > popcount(p.row(lowest_atom(b)));
    });
    return SetComposition{std::move(ls)};
}

Preposet relabel(const Preposet& p, const Relabeling& r)
{
    if (p.ground() != r.old_ground())
        throw DomainError("relabeling does not match the ground");
    std::array<Mask, kMaxAtoms> rows{};
    for (auto [a, b] : p.pairs())
        rows[r.new_of(a)] |= atom_mask(r.new_of(b));
    return Preposet::from_rows(r.new_ground(), rows);
}

TwoBlock make_two_block(Mask s, Mask t)
{
    if (s == 0 || t == 0 || (s & t))
        throw DomainError("a two-block needs disjoint non-empty S and T");
    return TwoBlock{s, t};
}

std::optional<TwoBlock> two_block_product(const TwoBlock& a, const TwoBlock& b)
{
    if (a.ground() != b.ground())
        throw DomainError("two-block product over different grounds");
    auto proper_superset = [](Mask big, Mask small) { return big != small && is_subset(small, big); };
    if (proper_superset(a.t, b.s))
        return TwoBlock{a.s | b.s, a.t & b.t};
    if (proper_superset(a.s, b.t))
        return TwoBlock{a.s & b.s, a.t | b.t};
    return std::nullopt;
}

std::vector<TwoBlock> all_two_blocks(Mask ground)
{
    std::vector<TwoBlock> out;
    for_each_subset(ground, [&](Mask s) {
        if (s != 0 && s != ground)
            out.push_back(TwoBlock{s, ground & ~s});
    });
    std::sort(out.begin(), out.end());
    return out;
}

AdjointFamily coprobes(const Preposet& p)
{
    AdjointFamily fam{p.ground(), {}};
    for (const auto& b : all_two_blocks(p.ground())) {
        bool ok = true;
        for (int i : atoms_of(b.t)) {
            if (p.row(i) & b.s) {
                ok = false;
                break;
            }
        }
        if (ok)
            fam.members.insert(b);
    }
    return fam;
}

AdjointFamily adjoint_closure(Mask ground, const std::set<TwoBlock>& x)
{
    std::vector<Vector> gens;
    for (const auto& b : x) {
        if (b.ground() != ground)
            throw DomainError("two-block outside the ground");
        gens.push_back(recentre(weight_point(ground, b.s).coords));
    }
    AdjointFamily fam{ground, {}};
    for (const auto& b : all_two_blocks(ground)) {
        if (x.count(b) || cone_member(recentre(weight_point(ground, b.s).coords), gens, false))
            fam.members.insert(b);
    }
    return fam;
}

AdjointFamily opposite(const AdjointFamily& f)
{
    AdjointFamily out{f.ground, {}};
    for (const auto& b : f.members)
        out.members.insert(b.swapped());
    return out;
}

FamilyClass classify(const AdjointFamily& f)
{
    FamilyClass c;
    c.total = true;
    c.totally_nonsymmetric = true;
    for (const auto& b : all_two_blocks(f.ground)) {
        bool fwd = f.has(b);
        bool bwd = f.has(b.swapped());
        if (!fwd && !bwd)
            c.total = false;
        if (fwd == bwd)
            c.totally_nonsymmetric = false;
        if (fwd)
            (bwd ? c.symmetric_part : c.nonsymmetric_part).insert(b);
    }
    return c;
}

} // namespace stein
