#include "doctest.h"
#include "helpers.hpp"

#include "stein/error.hpp"

#include <algorithm>
#include <set>

using namespace stein;
using namespace testing_util;

namespace {

// Ordered set partitions by assigning each atom a lump index and keeping surjective assignments.
std::set<SetComposition> brute_compositions(int n)
{
    std::set<SetComposition> out;
    if (n == 0) {
        out.insert(SetComposition{});
        return out;
    }
    for (int k = 1; k <= n; ++k) {
        std::vector<int> idx(n, 0);
        while (true) {
            std::vector<Mask> lumps(k, 0);
            for (int i = 0; i < n; ++i)
                lumps[idx[i]] |= atom_mask(i);
            if (std::all_of(lumps.begin(), lumps.end(), [](Mask m) { return m != 0; }))
                out.insert(SetComposition{lumps});
            int pos = 0;
            while (pos < n && ++idx[pos] == k)
                idx[pos++] = 0;
            if (pos == n)
                break;
        }
    }
    return out;
}

} // namespace

TEST_CASE("composition counts are ordered Bell numbers")
{
    const int expected[] = {1, 1, 3, 13, 75, 541};
    for (int n = 0; n <= 5; ++n) {
        auto all = enumerate_compositions(range_mask(n));
        CHECK(static_cast<int>(all.size()) == expected[n]);
        CHECK(std::is_sorted(all.begin(), all.end()));
        auto brute = brute_compositions(n);
        CHECK(std::set<SetComposition>(all.begin(), all.end()) == brute);
    }
}

TEST_CASE("compositions of {1,2}")
{
    auto all = enumerate_compositions(set("12"));
    REQUIRE(all.size() == 3);
    std::set<SetComposition> s(all.begin(), all.end());
    CHECK(s.count(comp("12")));
    CHECK(s.count(comp("1,2")));
    CHECK(s.count(comp("2,1")));
}

TEST_CASE("concat and restrict")
{
    CHECK(concat(comp("1,2"), comp("3")) == comp("1,2,3"));
    CHECK(concat(comp(""), comp("12")) == comp("12"));
    CHECK(concat(comp("13"), comp("2,4")) == comp("13,2,4"));
    CHECK_THROWS_AS(concat(comp("1"), comp("12")), DomainError);

    CHECK(restrict(comp("12,3"), set("12")) == comp("12"));
    CHECK(restrict(comp("12,3"), set("13")) == comp("1,3"));
    CHECK(restrict(comp("1,2,3"), 0) == comp(""));
    CHECK_THROWS_AS(restrict(comp("1,2"), set("3")), DomainError);
}

TEST_CASE("restriction of a concatenation splits")
{
    for (const auto& f : enumerate_compositions(set("12")))
        for (const auto& g : enumerate_compositions(set("34")))
            for_each_subset(set("1234"), [&](Mask s) {
                CHECK(restrict(concat(f, g), s)
                      == concat(restrict(f, s & f.ground()), restrict(g, s & g.ground())));
            });
}

TEST_CASE("order by merging contiguous lumps")
{
    CHECK(leq(comp("123"), comp("1,2,3")));
    CHECK(leq(comp("12,3"), comp("2,1,3")));
    CHECK_FALSE(leq(comp("13,2"), comp("1,2,3")));
    CHECK_THROWS_AS(leq(comp("12"), comp("1,2,3")), DomainError);

    for (int n = 0; n <= 4; ++n) {
        auto all = enumerate_compositions(range_mask(n));
        for (const auto& f : all) {
            auto co = coarsenings(f);
            auto re = refinements(f);
            for (const auto& g : all) {
                bool le = leq(g, f);
                CHECK(le == (std::find(co.begin(), co.end(), g) != co.end()));
                CHECK(leq(f, g) == (std::find(re.begin(), re.end(), g) != re.end()));
                if (le && leq(f, g))
                    CHECK(f == g);
                for (const auto& h : all)
                    if (le && leq(f, h))
                        CHECK(leq(g, h));
            }
            if (n > 0) {
                CHECK(leq(comp(std::string("1234").substr(0, n)), f));
            }
        }
    }
}

TEST_CASE("quotient factors")
{
    auto a = quotient_factors(comp("1,2,3"), comp("12,3"));
    CHECK(a.length == 2);
    CHECK(a.factorial == 2);
    auto b = quotient_factors(comp("1,2,3"), comp("1,2,3"));
    CHECK(b.length == 1);
    CHECK(b.factorial == 1);
    auto c = quotient_factors(comp("1,2,3"), comp("123"));
    CHECK(c.length == 3);
    CHECK(c.factorial == 6);
    CHECK_THROWS_AS(quotient_factors(comp("1,2,3"), comp("13,2")), DomainError);
}

TEST_CASE("opposite, tits and relabel")
{
    CHECK(opposite(comp("1,23")) == comp("23,1"));
    for (const auto& f : enumerate_compositions(set("123")))
        CHECK(opposite(opposite(f)) == f);

    CHECK(tits(comp("12,3"), comp("3,12")) == comp("12,3"));
    for (const auto& f : enumerate_compositions(set("123"))) {
        CHECK(tits(comp("123"), f) == f);
        CHECK(tits(f, comp("123")) == f);
        CHECK(tits(f, f) == f);
        for (const auto& g : enumerate_compositions(set("123")))
            for (const auto& h : enumerate_compositions(set("123")))
                CHECK(tits(tits(f, g), h) == tits(f, tits(g, h)));
    }

    std::pair<int, int> pairs[] = {{5, 0}, {6, 1}};
    auto r = Relabeling::from_pairs(pairs);
    CHECK(relabel(comp("1,2"), r) == comp("6,7"));
    std::pair<int, int> bad[] = {{5, 0}, {6, 0}};
    CHECK_THROWS_AS(Relabeling::from_pairs(bad), DomainError);
}

TEST_CASE("relabel is functorial and commutes with operations")
{
    std::mt19937 rng(7);
    std::vector<int> perm{0, 1, 2, 3};
    auto all = enumerate_compositions(set("1234"));
    for (int trial = 0; trial < 10; ++trial) {
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<std::pair<int, int>> p1, p2;
        for (int i = 0; i < 4; ++i)
            p1.emplace_back(i, perm[i]);
        std::shuffle(perm.begin(), perm.end(), rng);
        for (int i = 0; i < 4; ++i)
            p2.emplace_back(i, perm[i]);
        auto s = Relabeling::from_pairs(p1);
        auto t = Relabeling::from_pairs(p2);
        for (const auto& f : all) {
            CHECK(relabel(f, s.compose(t)) == relabel(relabel(f, s), t));
            CHECK(relabel(opposite(f), s) == opposite(relabel(f, s)));
            Mask sub = set("13");
            CHECK(relabel(restrict(f, sub), s.restrict_to(sub)) == restrict(relabel(f, s), s.apply(sub)));
        }
    }
}

TEST_CASE("ground set labels")
{
    GroundSet g({"a", "b", "c"});
    CHECK(g.atom_of("b") == 1);
    std::vector<std::string> ls{"a", "c"};
    CHECK(g.mask_of(ls) == 0b101);
    CHECK_THROWS_AS(GroundSet({"a", "a"}), DomainError);
    CHECK(GroundSet::range(3).label(2) == "3");
}

TEST_CASE("partition-indexed dimension count")
{
    const std::int64_t expected[] = {1, 1, 2, 6, 26, 150};
    for (int n = 0; n <= 5; ++n)
        CHECK(zie_dimension(n) == expected[n]);
}
