#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace stein {

/// A finite set of atoms, encoded as a bitmask over atom indices 0..kMaxAtoms-1.
using Mask = std::uint32_t;
inline constexpr int kMaxAtoms = 16;

inline int popcount(Mask m) { return __builtin_popcount(m); }
inline int lowest_atom(Mask m) { return m ? __builtin_ctz(m) : -1; }
inline bool contains(Mask m, int atom) { return (m >> atom) & 1U; }
inline bool is_subset(Mask sub, Mask super) { return (sub & ~super) == 0; }
inline Mask atom_mask(int atom) { return Mask{1} << atom; }
inline Mask range_mask(int n) { return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1; }

/// Atoms of `m` in increasing index order.
std::vector<int> atoms_of(Mask m);

/// Order on atom sets obtained by comparing them as sorted atom lists.
bool lex_less(Mask a, Mask b);

/// Calls `fn(sub)` for every subset of `m` (including 0 and m), in
/// increasing numeric order.
template <class Fn>
void for_each_subset(Mask m, Fn&& fn)
{
    Mask sub = 0;
    while (true) {
        fn(sub);
        if (sub == m)
            break;
        sub = (sub - m) & m;
    }
}

/// Totally ordered labels; label i is atom i. The order fixed here is the
/// canonical order used everywhere downstream (hyperplane lists, basepoints).
class GroundSet {
public:
    GroundSet() = default;
    explicit GroundSet(std::vector<std::string> labels);

    /// Labels "1", ..., "n".
    static GroundSet range(int n);

    int size() const { return static_cast<int>(labels_.size()); }
    Mask mask() const { return range_mask(size()); }
    const std::string& label(int atom) const { return labels_.at(atom); }
    const std::vector<std::string>& labels() const { return labels_; }

    int atom_of(std::string_view label) const;
    Mask mask_of(std::span<const std::string> labels) const;
    std::vector<std::string> labels_of(Mask m) const;

    bool operator==(const GroundSet&) const = default;

private:
    std::vector<std::string> labels_;
    std::map<std::string, int, std::less<>> index_;
};

/// Ordered sequence of non-empty disjoint lumps.
struct SetComposition {
    std::vector<Mask> lumps;

    Mask ground() const;
    int length() const { return static_cast<int>(lumps.size()); }
    bool empty() const { return lumps.empty(); }
    /// Index of the lump containing `atom`, or -1.
    int lump_of(int atom) const;

    bool operator==(const SetComposition&) const = default;
    std::strong_ordering operator<=>(const SetComposition& other) const;
};

/// Unordered collection of non-empty disjoint blocks, stored sorted.
struct SetPartition {
    std::vector<Mask> blocks;

    Mask ground() const;
    int size() const { return static_cast<int>(blocks.size()); }

    bool operator==(const SetPartition&) const = default;
    std::strong_ordering operator<=>(const SetPartition& other) const;
};

/// Validates lumps (non-empty, pairwise disjoint). Throws DomainError.
SetComposition make_composition(std::vector<Mask> lumps);
SetPartition make_partition(std::vector<Mask> blocks);

std::vector<SetComposition> enumerate_compositions(Mask ground);
std::vector<SetPartition> enumerate_partitions(Mask ground);

/// Lumps of F followed by lumps of G; grounds must be disjoint.
SetComposition concat(const SetComposition& f, const SetComposition& g);

/// Lumps intersected with S, empty lumps dropped. S must lie in the ground.
SetComposition restrict(const SetComposition& f, Mask s);

/// True iff G is obtained from F by merging contiguous lumps.
bool leq(const SetComposition& g, const SetComposition& f);

/// All G with G <= F, i.e. every way of merging runs of contiguous lumps.
std::vector<SetComposition> coarsenings(const SetComposition& f);

/// All G with F <= G: each lump of F replaced by a composition of itself.
std::vector<SetComposition> refinements(const SetComposition& f);

/// True iff S is a union of initial lumps of F (S may be empty or all).
bool is_initial_segment(const SetComposition& f, Mask s);

/// True iff S is a union of lumps of F.
bool is_union_of_lumps(const SetComposition& f, Mask s);

struct QuotientFactors {
    std::int64_t length;    // l(F/G)
    std::int64_t factorial; // (F/G)!
};

/// For G <= F: products over the lumps S_j of G of l(F|S_j) and l(F|S_j)!.
QuotientFactors quotient_factors(const SetComposition& f, const SetComposition& g);

SetComposition opposite(const SetComposition& f);

/// Lumps of F as an unordered partition.
SetPartition partition_of(const SetComposition& f);

/// Tits product: each lump of F refined by the lump order of G.
SetComposition tits(const SetComposition& f, const SetComposition& g);

/// Transport of structure along a bijection from a new ground onto an old one.
class Relabeling {
public:
    /// `pairs` lists (new atom, old atom); must be a bijection.
    static Relabeling from_pairs(std::span<const std::pair<int, int>> pairs);
    static Relabeling identity(Mask ground);

    Mask old_ground() const { return old_ground_; }
    Mask new_ground() const { return new_ground_; }
    int new_of(int old_atom) const;
    int old_of(int new_atom) const;
    Mask apply(Mask old_set) const;

    /// The bijection restricted to a subset of the old ground.
    Relabeling restrict_to(Mask old_subset) const;

    /// (this ∘ inner): new ground of `inner` onto the old ground of `this`.
    Relabeling compose(const Relabeling& inner) const;

private:
    Mask old_ground_ = 0;
    Mask new_ground_ = 0;
    std::vector<int> new_of_old_ = std::vector<int>(kMaxAtoms, -1);
    std::vector<int> old_of_new_ = std::vector<int>(kMaxAtoms, -1);
};

SetComposition relabel(const SetComposition& f, const Relabeling& r);
SetPartition relabel(const SetPartition& p, const Relabeling& r);

/// Compact form such as "(12,3)" with atoms printed 1-based; for messages.
std::string debug_string(const SetComposition& f);

/// Number of standard right-comb keys over a ground of size n, i.e.
/// the sum over set partitions of (number of blocks - 1)!.
std::int64_t zie_dimension(int n);

} // namespace stein
