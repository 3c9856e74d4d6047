#pragma once

#include "stein/combinatorics.hpp"

#include <array>
#include <compare>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace stein {

/// A reflexive transitive relation on a ground set, stored as its
/// non-identity pairs: (i1, i2) is present when i1 >=_p i2, i.e. i1 sits in a
/// lump weakly to the left of i2.
class Preposet {
public:
    Preposet() = default;
    /// Empty relation (only identities) on `ground`.
    explicit Preposet(Mask ground) : ground_(ground) {}

    Mask ground() const { return ground_; }
    bool has(int i1, int i2) const { return contains(rel_[i1], i2); }
    /// Atoms i2 with (i1, i2) in the relation.
    Mask row(int i1) const { return rel_[i1]; }
    std::vector<std::pair<int, int>> pairs() const;
    int pair_count() const;

    /// Nonsymmetric pairs p_>.
    Preposet strict_part() const;

    auto operator<=>(const Preposet&) const = default;
    bool operator==(const Preposet&) const = default;

    /// Transitive closure of the relation given by rows (row[i1] holds the
    /// atoms i2 with (i1, i2)); diagonal bits are ignored.
    static Preposet from_rows(Mask ground, const std::array<Mask, kMaxAtoms>& rows);

private:
    Mask ground_ = 0;
    std::array<Mask, kMaxAtoms> rel_{};
};

/// Smallest preposet containing the given pairs (Warshall).
Preposet transitive_closure(Mask ground, std::span<const std::pair<int, int>> pairs);
/// Transitive closure of the set union; grounds must agree.
Preposet preposet_union(const Preposet& p, const Preposet& q);
/// Disjoint union (p | q) over the union of two disjoint grounds.
Preposet juxtapose(const Preposet& p, const Preposet& q);

Preposet preposet_of(const SetComposition& f);

/// q <= p  iff  p is contained in q.
bool leq(const Preposet& q, const Preposet& p);
/// q <= p and p_> contained in q_>.
bool preceq(const Preposet& q, const Preposet& p);
/// preceq with the same number of lumps.
bool preceq_l(const Preposet& q, const Preposet& p);
/// Composition order lifted to preposets: F <= p iff p is contained in F.
bool leq(const SetComposition& f, const Preposet& p);

/// Mutual-comparability classes.
SetPartition lumps(const Preposet& p);
int lump_count(const Preposet& p);
/// Connected components of the comparability graph.
SetPartition blocks(const Preposet& p);
Preposet opposite(const Preposet& p);
Preposet restrict(const Preposet& p, Mask s);
bool is_total(const Preposet& p);
/// The composition encoded by a total preposet, if it is total.
std::optional<SetComposition> as_composition(const Preposet& p);
Preposet relabel(const Preposet& p, const Relabeling& r);

/// A two-lump composition (S, T), S and T non-empty.
struct TwoBlock {
    Mask s = 0;
    Mask t = 0;

    Mask ground() const { return s | t; }
    TwoBlock swapped() const { return {t, s}; }
    auto operator<=>(const TwoBlock&) const = default;
};

TwoBlock make_two_block(Mask s, Mask t);

/// Partial product encoding addition of fundamental weights; nullopt when
/// the sum is not a fundamental weight.
std::optional<TwoBlock> two_block_product(const TwoBlock& a, const TwoBlock& b);

/// Every two-block over `ground`, ordered by (S, T).
std::vector<TwoBlock> all_two_blocks(Mask ground);

struct AdjointFamily {
    Mask ground = 0;
    std::set<TwoBlock> members;

    bool has(const TwoBlock& b) const { return members.count(b) != 0; }
    bool operator==(const AdjointFamily&) const = default;
};

/// { (S,T) : (S,T) <= p }: S upward closed, T downward closed.
AdjointFamily coprobes(const Preposet& p);
/// Two-blocks whose fundamental weight lies in the closed cone generated by
/// the weights of X (exact cone membership per candidate).
AdjointFamily adjoint_closure(Mask ground, const std::set<TwoBlock>& x);
AdjointFamily opposite(const AdjointFamily& f);

struct FamilyClass {
    bool total = false;
    bool totally_nonsymmetric = false;
    std::set<TwoBlock> symmetric_part;
    std::set<TwoBlock> nonsymmetric_part;
};

FamilyClass classify(const AdjointFamily& f);

} // namespace stein
