#include "stein/combinatorics.hpp"

#include "stein/error.hpp"

#include <algorithm>
#include <functional>

namespace stein {

std::vector<int> atoms_of(Mask m)
{
    std::vector<int> out;
    out.reserve(popcount(m));
    while (m) {
        out.push_back(lowest_atom(m));
        m &= m - 1;
    }
    return out;
}

bool lex_less(Mask a, Mask b)
{
    if (a == b)
        return false;
    Mask diff = a ^ b;
    int d = lowest_atom(diff);
    Mask above = ~range_mask(d + 1);
    if (contains(a, d))
        return (b & above) != 0; // b continues with a larger atom, or b is a prefix of a
    return (a & above) == 0;
}

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels))
{
    if (size() > kMaxAtoms)
        throw ResourceError("ground sets are limited to " + std::to_string(kMaxAtoms) + " labels");
    for (int i = 0; i < size(); ++i) {
        if (!index_.emplace(labels_[i], i).second)
            throw DomainError("duplicate label '" + labels_[i] + "' in ground set");
    }
}

GroundSet GroundSet::range(int n)
{
    std::vector<std::string> labels;
    for (int i = 1; i <= n; ++i)
        labels.push_back(std::to_string(i));
    return GroundSet(std::move(labels));
}

int GroundSet::atom_of(std::string_view label) const
{
    auto it = index_.find(label);
    if (it == index_.end())
        throw DomainError("label '" + std::string(label) + "' is not in the ground set");
    return it->second;
}

Mask GroundSet::mask_of(std::span<const std::string> labels) const
{
    Mask m = 0;
    for (const auto& l : labels) {
        Mask bit = atom_mask(atom_of(l));
        if (m & bit)
            throw DomainError("label '" + l + "' repeated");
        m |= bit;
    }
    return m;
}

std::vector<std::string> GroundSet::labels_of(Mask m) const
{
    std::vector<std::string> out;
    for (int a : atoms_of(m))
        out.push_back(label(a));
    return out;
}

namespace {

std::strong_ordering compare_masks(const std::vector<Mask>& a, const std::vector<Mask>& b)
{
    std::size_t k = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < k; ++i) {
        if (a[i] == b[i])
            continue;
        return lex_less(a[i], b[i]) ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return a.size() <=> b.size();
}

void check_disjoint_nonempty(const std::vector<Mask>& parts, const char* what)
{
    Mask seen = 0;
    for (Mask m : parts) {
        if (m == 0)
            throw DomainError(std::string("empty ") + what);
        if (seen & m)
            throw DomainError(std::string(what) + "s are not disjoint");
        seen |= m;
    }
}

} // namespace

Mask SetComposition::ground() const
{
    Mask g = 0;
    for (Mask m : lumps)
        g |= m;
    return g;
}

int SetComposition::lump_of(int atom) const
{
    for (int j = 0; j < length(); ++j)
        if (contains(lumps[j], atom))
            return j;
    return -1;
}

std::strong_ordering SetComposition::operator<=>(const SetComposition& other) const
{
    return compare_masks(lumps, other.lumps);
}

Mask SetPartition::ground() const
{
    Mask g = 0;
    for (Mask m : blocks)
        g |= m;
    return g;
}

std::strong_ordering SetPartition::operator<=>(const SetPartition& other) const
{
    return compare_masks(blocks, other.blocks);
}

SetComposition make_composition(std::vector<Mask> lumps)
{
    check_disjoint_nonempty(lumps, "lump");
    return SetComposition{std::move(lumps)};
}

SetPartition make_partition(std::vector<Mask> blocks)
{
    check_disjoint_nonempty(blocks, "block");
    std::sort(blocks.begin(), blocks.end(), lex_less);
    return SetPartition{std::move(blocks)};
}

std::vector<SetComposition> enumerate_compositions(Mask ground)
{
    std::vector<SetComposition> out;
    std::vector<Mask> prefix;
    std::function<void(Mask)> rec = [&](Mask rest) {
        if (rest == 0) {
            out.push_back(SetComposition{prefix});
            return;
        }
        for_each_subset(rest, [&](Mask lump) {
            if (lump == 0)
                return;
            prefix.push_back(lump);
            rec(rest & ~lump);
            prefix.pop_back();
        });
    };
    rec(ground);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<SetPartition> enumerate_partitions(Mask ground)
{
    std::vector<SetPartition> out;
    std::vector<Mask> prefix;
    std::function<void(Mask)> rec = [&](Mask rest) {
        if (rest == 0) {
            out.push_back(make_partition(prefix));
            return;
        }
        // the block containing the smallest remaining atom
        Mask first = atom_mask(lowest_atom(rest));
        for_each_subset(rest & ~first, [&](Mask others) {
            prefix.push_back(first | others);
            rec(rest & ~(first | others));
            prefix.pop_back();
        });
    };
    rec(ground);
    std::sort(out.begin(), out.end());
    return out;
}

SetComposition concat(const SetComposition& f, const SetComposition& g)
{
    if (f.ground() & g.ground())
        throw DomainError("concatenation of compositions over overlapping grounds");
    SetComposition out = f;
    out.lumps.insert(out.lumps.end(), g.lumps.begin(), g.lumps.end());
    return out;
}

SetComposition restrict(const SetComposition& f, Mask s)
{
    if (!is_subset(s, f.ground()))
        throw DomainError("restriction to a set outside the ground");
    SetComposition out;
    for (Mask m : f.lumps)
        if (m & s)
            out.lumps.push_back(m & s);
    return out;
}

bool leq(const SetComposition& g, const SetComposition& f)
{
    if (g.ground() != f.ground())
        throw DomainError("comparing compositions over different grounds");
    std::size_t j = 0;
    for (Mask lump : g.lumps) {
        Mask acc = 0;
        while (j < f.lumps.size() && is_subset(f.lumps[j], lump) && acc != lump)
            acc |= f.lumps[j++];
        if (acc != lump)
            return false;
    }
    return j == f.lumps.size();
}

std::vector<SetComposition> coarsenings(const SetComposition& f)
{
    std::vector<SetComposition> out;
    int k = f.length();
    if (k == 0)
        return {f};
    // bit i of `cuts` set: keep the bar between lump i and lump i+1
    for (Mask cuts = 0; cuts < (Mask{1} << (k - 1)); ++cuts) {
        SetComposition g;
        Mask acc = f.lumps[0];
        for (int i = 1; i < k; ++i) {
            if (contains(cuts, i - 1)) {
                g.lumps.push_back(acc);
                acc = 0;
            }
            acc |= f.lumps[i];
        }
        g.lumps.push_back(acc);
        out.push_back(std::move(g));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<SetComposition> refinements(const SetComposition& f)
{
    std::vector<SetComposition> out{SetComposition{}};
    for (Mask lump : f.lumps) {
        auto pieces = enumerate_compositions(lump);
        std::vector<SetComposition> next;
        next.reserve(out.size() * pieces.size());
        for (const auto& head : out)
            for (const auto& piece : pieces)
                next.push_back(concat(head, piece));
        out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_initial_segment(const SetComposition& f, Mask s)
{
    if (!is_subset(s, f.ground()))
        return false;
    Mask acc = 0;
    for (Mask lump : f.lumps) {
        if (acc == s)
            return true;
        acc |= lump;
    }
    return acc == s;
}

bool is_union_of_lumps(const SetComposition& f, Mask s)
{
    if (!is_subset(s, f.ground()))
        return false;
    for (Mask lump : f.lumps)
        if ((lump & s) && !is_subset(lump, s))
            return false;
    return true;
}

QuotientFactors quotient_factors(const SetComposition& f, const SetComposition& g)
{
    if (!leq(g, f))
        throw DomainError("quotient factors need G <= F");
    QuotientFactors q{1, 1};
    for (Mask lump : g.lumps) {
        std::int64_t l = restrict(f, lump).length();
        q.length *= l;
        std::int64_t fact = 1;
        for (std::int64_t i = 2; i <= l; ++i)
            fact *= i;
        q.factorial *= fact;
    }
    return q;
}

SetComposition opposite(const SetComposition& f)
{
    SetComposition out = f;
    std::reverse(out.lumps.begin(), out.lumps.end());
    return out;
}

SetPartition partition_of(const SetComposition& f)
{
    return make_partition(f.lumps);
}

SetComposition tits(const SetComposition& f, const SetComposition& g)
{
    if (f.ground() != g.ground())
        throw DomainError("Tits product of compositions over different grounds");
    SetComposition out;
    for (Mask s : f.lumps)
        for (Mask t : g.lumps)
            if (s & t)
                out.lumps.push_back(s & t);
    return out;
}

Relabeling Relabeling::from_pairs(std::span<const std::pair<int, int>> pairs)
{
    Relabeling r;
    for (auto [fresh, old] : pairs) {
        if (fresh < 0 || fresh >= kMaxAtoms || old < 0 || old >= kMaxAtoms)
            throw DomainError("relabeling atom out of range");
        if (contains(r.new_ground_, fresh) || contains(r.old_ground_, old))
            throw DomainError("relabeling map is not a bijection");
        r.new_ground_ |= atom_mask(fresh);
        r.old_ground_ |= atom_mask(old);
        r.old_of_new_[fresh] = old;
        r.new_of_old_[old] = fresh;
    }
    return r;
}

Relabeling Relabeling::identity(Mask ground)
{
    std::vector<std::pair<int, int>> pairs;
    for (int a : atoms_of(ground))
        pairs.emplace_back(a, a);
    return from_pairs(pairs);
}

int Relabeling::new_of(int old_atom) const
{
    int v = new_of_old_.at(old_atom);
    if (v < 0)
        throw DomainError("atom outside the relabeling domain");
    return v;
}

int Relabeling::old_of(int new_atom) const
{
    int v = old_of_new_.at(new_atom);
    if (v < 0)
        throw DomainError("atom outside the relabeling range");
    return v;
}

Mask Relabeling::apply(Mask old_set) const
{
    if (!is_subset(old_set, old_ground_))
        throw DomainError("relabeling applied outside its domain");
    Mask out = 0;
    for (int a : atoms_of(old_set))
        out |= atom_mask(new_of_old_[a]);
    return out;
}

Relabeling Relabeling::restrict_to(Mask old_subset) const
{
    if (!is_subset(old_subset, old_ground_))
        throw DomainError("relabeling restricted outside its domain");
    std::vector<std::pair<int, int>> pairs;
    for (int a : atoms_of(old_subset))
        pairs.emplace_back(new_of_old_[a], a);
    return from_pairs(pairs);
}

Relabeling Relabeling::compose(const Relabeling& inner) const
{
    if (inner.old_ground_ != new_ground_)
        throw DomainError("relabelings do not compose");
    std::vector<std::pair<int, int>> pairs;
    for (int k : atoms_of(inner.new_ground_))
        pairs.emplace_back(k, old_of_new_[inner.old_of_new_[k]]);
    return from_pairs(pairs);
}

SetComposition relabel(const SetComposition& f, const Relabeling& r)
{
    if (f.ground() != r.old_ground())
        throw DomainError("relabeling does not match the ground");
    SetComposition out;
    for (Mask m : f.lumps)
        out.lumps.push_back(r.apply(m));
    return out;
}

SetPartition relabel(const SetPartition& p, const Relabeling& r)
{
    if (p.ground() != r.old_ground())
        throw DomainError("relabeling does not match the ground");
    std::vector<Mask> blocks;
    for (Mask m : p.blocks)
        blocks.push_back(r.apply(m));
    return make_partition(std::move(blocks));
}

std::string debug_string(const SetComposition& f)
{
    std::string out = "(";
    for (std::size_t j = 0; j < f.lumps.size(); ++j) {
        if (j)
            out += ',';
        for (int a : atoms_of(f.lumps[j])) {
            if (a >= 9 && f.ground() > range_mask(9))
                out += '[' + std::to_string(a + 1) + ']';
            else
                out += std::to_string(a + 1);
        }
    }
    return out + ")";
}

std::int64_t zie_dimension(int n)
{
    std::int64_t total = 0;
    for (const auto& p : enumerate_partitions(range_mask(n))) {
        std::int64_t f = 1;
        for (int i = 2; i < p.size(); ++i)
            f *= i;
        total += f;
    }
    return total;
}

} // namespace stein
