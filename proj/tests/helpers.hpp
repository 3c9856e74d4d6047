#pragma once

#include "stein/combinatorics.hpp"
#include "stein/preposet.hpp"
#include "stein/rational.hpp"

#include <random>
#include <set>
#include <string_view>

namespace testing_util {

using namespace stein;

/// "12,3" -> ({1,2},{3}); digit d is atom d-1. "" is the empty composition.
inline SetComposition comp(std::string_view text)
{
    SetComposition f;
    if (text.empty())
        return f;
    Mask cur = 0;
    for (char ch : text) {
        if (ch == ',') {
            f.lumps.push_back(cur);
            cur = 0;
        } else {
            cur |= atom_mask(ch - '1');
        }
    }
    f.lumps.push_back(cur);
    return make_composition(f.lumps);
}

/// "13" -> {1,3}
inline Mask set(std::string_view text)
{
    Mask m = 0;
    for (char ch : text)
        m |= atom_mask(ch - '1');
    return m;
}

inline Rational q(long p, long d = 1) { return frac(p, d); }

/// Small random rational with non-zero value.
inline Rational random_coeff(std::mt19937& rng)
{
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 4);
    int p = 0;
    while (p == 0)
        p = num(rng);
    return frac(p, den(rng));
}

// All preposets on a ground: closures of every subset of off-diagonal pairs (deduplicated).
inline std::set<Preposet> all_preposets(Mask g)
{
    std::vector<std::pair<int, int>> cand;
    for (int a : atoms_of(g))
        for (int b : atoms_of(g))
            if (a != b)
                cand.emplace_back(a, b);
    std::set<Preposet> out;
    for (std::size_t bits = 0; bits < (std::size_t{1} << cand.size()); ++bits) {
        std::vector<std::pair<int, int>> chosen;
        for (std::size_t i = 0; i < cand.size(); ++i)
            if (bits >> i & 1)
                chosen.push_back(cand[i]);
        out.insert(transitive_closure(g, chosen));
    }
    return out;
}

} // namespace testing_util
