#include "doctest.h"
#include "helpers.hpp"

#include "stein/error.hpp"
#include "stein/sigma.hpp"
#include "stein/verify.hpp"

using namespace stein;
using namespace testing_util;

namespace {

BasisElement el(Basis b, std::initializer_list<std::pair<const char*, Rational>> terms)
{
    BasisElement x;
    x.basis = b;
    bool first = true;
    for (const auto& [k, c] : terms) {
        auto f = comp(k);
        if (first)
            x.ground = f.ground();
        first = false;
        x.add(f, c);
    }
    return x;
}

BasisElement v(Basis b, const char* k) { return BasisElement::vector(b, comp(k)); }

void require_ok(const VerifyReport& r)
{
    for (const auto& c : r.checks) {
        INFO(r.suite << " n=" << r.n << " " << c.name << ": " << c.first_failure);
        CHECK(c.failures == 0);
    }
}

} // namespace

TEST_CASE("products in each basis")
{
    CHECK(multiply(v(Basis::M, "1"), v(Basis::M, "2"))
          == el(Basis::M, {{"1,2", 1}, {"2,1", 1}, {"12", 1}}));
    CHECK(multiply(v(Basis::P, "1"), v(Basis::P, "2")) == el(Basis::P, {{"1,2", 1}, {"2,1", 1}}));
    CHECK(multiply(v(Basis::C, "1"), v(Basis::C, "2"))
          == el(Basis::C, {{"1,2", 1}, {"2,1", 1}, {"12", -1}}));
    CHECK(multiply(v(Basis::H, "2"), v(Basis::H, "1")) == v(Basis::H, "2,1"));
    CHECK_THROWS_AS(multiply(v(Basis::M, "1"), v(Basis::M, "12")), DomainError);
    CHECK_THROWS_AS(multiply(v(Basis::M, "1"), v(Basis::H, "2")), DomainError);
}

TEST_CASE("quasishuffles match the order-theoretic definition")
{
    for (Mask s : {set("1"), set("12"), set("13")}) {
        Mask t = set("123") & ~s;
        for (const auto& f : enumerate_compositions(s)) {
            for (const auto& g : enumerate_compositions(t)) {
                auto qs = quasishuffles(f, g);
                std::set<SetComposition> gen(qs.begin(), qs.end());
                CHECK(gen.size() == qs.size());
                std::set<SetComposition> oracle;
                auto fg = juxtapose(preposet_of(f), preposet_of(g));
                for (const auto& h : enumerate_compositions(s | t))
                    if (preceq(preposet_of(h), fg))
                        oracle.insert(h);
                CHECK(gen == oracle);
                std::set<SetComposition> sh;
                for (const auto& h : oracle)
                    if (preceq_l(preposet_of(h), fg) || h.length() == f.length() + g.length())
                        sh.insert(h);
                auto shv = shuffles(f, g);
                CHECK(std::set<SetComposition>(shv.begin(), shv.end()) == sh);
            }
        }
    }
}

TEST_CASE("coproducts")
{
    auto d = comultiply(v(Basis::M, "12,3"), set("12"), set("3"));
    REQUIRE(d.terms.size() == 1);
    CHECK(d.terms.begin()->first == std::pair{comp("12"), comp("3")});
    CHECK(comultiply(v(Basis::M, "12,3"), set("13"), set("2")).is_zero());
    auto h = comultiply(v(Basis::H, "2,1"), set("1"), set("2"));
    CHECK(h.terms.begin()->first == std::pair{comp("1"), comp("2")});
    auto qd = comultiply(v(Basis::Q, "2,13"), set("2"), set("13"));
    CHECK(qd.terms.size() == 1);
    CHECK(comultiply(v(Basis::Q, "2,13"), set("12"), set("3")).is_zero());
    CHECK_THROWS_AS(comultiply(v(Basis::M, "1,2"), set("1"), set("12")), DomainError);
}

TEST_CASE("antipodes")
{
    CHECK(antipode(v(Basis::M, "1,2")) == el(Basis::M, {{"2,1", 1}, {"12", 1}}));
    CHECK(antipode(v(Basis::H, "12")) == el(Basis::H, {{"12", -1}, {"1,2", 1}, {"2,1", 1}}));
    CHECK(antipode(BasisElement::unit(Basis::M)) == BasisElement::unit(Basis::M));
    CHECK(antipode(BasisElement::unit(Basis::Q)) == BasisElement::unit(Basis::Q));
}

TEST_CASE("pairing")
{
    for (const auto& f : enumerate_compositions(set("123")))
        for (const auto& g : enumerate_compositions(set("123"))) {
            Rational want = f == g ? 1 : 0;
            CHECK(pairing(BasisElement::vector(Basis::M, f), BasisElement::vector(Basis::H, g)) == want);
            CHECK(pairing(BasisElement::vector(Basis::P, f), BasisElement::vector(Basis::Q, g)) == want);
        }
    CHECK_THROWS_AS(pairing(v(Basis::M, "1"), v(Basis::H, "2")), DomainError);
    CHECK_THROWS_AS(pairing(v(Basis::H, "1"), v(Basis::M, "1")), DomainError);
}

TEST_CASE("change of basis")
{
    CHECK(change_basis(v(Basis::P, "1,2"), Basis::M) == el(Basis::M, {{"1,2", 1}, {"12", q(1, 2)}}));
    CHECK(change_basis(v(Basis::C, "1,2"), Basis::M) == el(Basis::M, {{"1,2", 1}, {"12", 1}}));
    CHECK(change_basis(v(Basis::Q, "12"), Basis::H)
          == el(Basis::H, {{"12", 1}, {"1,2", q(-1, 2)}, {"2,1", q(-1, 2)}}));
    CHECK_THROWS_AS(change_basis(v(Basis::M, "1"), Basis::H), DomainError);
}

TEST_CASE("cone elements")
{
    auto f = comp("2,13");
    CHECK(preposet_expansion(preposet_of(f)) == BasisElement::vector(Basis::C, f));
    auto e = preposet_expansion(Preposet(set("12")));
    CHECK(e == el(Basis::C, {{"1,2", 1}, {"2,1", 1}, {"12", -1}}));
    BasisElement all(set("12"), Basis::M);
    for (const auto& g : enumerate_compositions(set("12")))
        all.add(g, 1);
    CHECK(change_basis(cone_element(Preposet(set("12"))), Basis::M) == all);
    CHECK(change_basis(e, Basis::M) == all);

    // every preposet over n <= 3: lazy key and expansion agree in M
    for (Mask g : {set("12"), set("123")}) {
        std::vector<std::pair<int, int>> cand;
        for (int a : atoms_of(g))
            for (int b : atoms_of(g))
                if (a != b)
                    cand.emplace_back(a, b);
        for (unsigned bits = 0; bits < (1U << cand.size()); ++bits) {
            std::vector<std::pair<int, int>> chosen;
            for (std::size_t i = 0; i < cand.size(); ++i)
                if (bits >> i & 1)
                    chosen.push_back(cand[i]);
            auto p = transitive_closure(g, chosen);
            CHECK(change_basis(cone_element(p), Basis::M)
                  == change_basis(preposet_expansion(p), Basis::M));
        }
    }

    // O -> Sigma* is multiplicative
    auto p = transitive_closure(set("12"), std::vector<std::pair<int, int>>{});
    auto r = Preposet(set("3"));
    CHECK(change_basis(multiply(cone_element(p), cone_element(r)), Basis::M)
          == change_basis(cone_element(juxtapose(p, r)), Basis::M));
    auto p2 = transitive_closure(set("13"), std::vector<std::pair<int, int>>{{2, 0}});
    auto r2 = Preposet(set("24"));
    CHECK(change_basis(multiply(cone_element(p2), cone_element(r2)), Basis::M)
          == change_basis(cone_element(juxtapose(p2, r2)), Basis::M));
}

TEST_CASE("tits product on H elements")
{
    CHECK(tits_h(v(Basis::H, "12,3"), v(Basis::H, "3,12")) == v(Basis::H, "12,3"));
    CHECK(tits_h(v(Basis::H, "12"), v(Basis::H, "2,1")) == v(Basis::H, "2,1"));
}

TEST_CASE("eulerian series")
{
    CHECK(eulerian_series(set("1")) == v(Basis::H, "1"));
    CHECK(eulerian_series(set("12")) == el(Basis::H, {{"12", 1}, {"1,2", q(-1, 2)}, {"2,1", q(-1, 2)}}));
    CHECK(eulerian_series(0).is_zero());
    CHECK(eulerian_series(set("123")) == change_basis(v(Basis::Q, "123"), Basis::H));
    for (int n = 1; n <= 4; ++n) {
        Mask g = range_mask(n);
        auto e = eulerian_series(g);
        for_each_subset(g, [&](Mask s) {
            if (s != 0 && s != g)
                CHECK(comultiply(e, s, g & ~s).is_zero());
        });
    }
}

TEST_CASE("hopf axioms, exhaustive n <= 3")
{
    for (int n = 0; n <= 3; ++n)
        require_ok(verify_hopf(n));
}

TEST_CASE("hopf axioms, random n = 4")
{
    auto rep = verify_hopf(4, 2024);
    require_ok(rep);
    for (const auto& c : rep.checks)
        if (c.name.find('|') == std::string::npos)
            CHECK_MESSAGE(c.cases >= 100, c.name);
}
