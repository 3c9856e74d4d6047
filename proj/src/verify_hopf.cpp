#include "stein/sigma.hpp"
#include "stein/verify.hpp"

#include <random>
#include <tuple>

namespace stein {

void CheckResult::record(bool ok, const std::string& what)
{
    ++cases;
    if (!ok) {
        if (failures == 0)
            first_failure = what;
        ++failures;
    }
}

bool VerifyReport::ok() const
{
    for (const auto& c : checks)
        if (c.failures)
            return false;
    return true;
}

CheckResult& VerifyReport::check(const std::string& name)
{
    for (auto& c : checks)
        if (c.name == name)
            return c;
    CheckResult c;
    c.name = name;
    checks.push_back(std::move(c));
    return checks.back();
}

namespace {

constexpr Basis kBases[] = {Basis::M, Basis::P, Basis::C, Basis::H, Basis::Q};

std::string tag(Basis b, const SetComposition& f)
{
    return std::string(basis_name(b)) + debug_string(f);
}

/// Test elements over `ground`: every basis vector when exhaustive,
/// otherwise `count` random sparse combinations.
std::vector<std::pair<std::string, BasisElement>>
samples(Basis b, Mask ground, bool exhaustive, int count, std::mt19937& rng)
{
    std::vector<std::pair<std::string, BasisElement>> out;
    auto all = enumerate_compositions(ground);
    if (exhaustive) {
        for (const auto& f : all)
            out.emplace_back(tag(b, f), BasisElement::vector(b, f));
        return out;
    }
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    for (int i = 0; i < count; ++i) {
        BasisElement x(ground, b);
        for (int k = 0; k < 3; ++k) {
            int p = num(rng);
            x.add(all[pick(rng)], frac(p == 0 ? 1 : p, den(rng)));
        }
        out.emplace_back(std::string(basis_name(b)) + " random #" + std::to_string(i), x);
    }
    return out;
}

using Triple = std::map<std::tuple<SetComposition, SetComposition, SetComposition>, Rational>;

void add_to(Triple& t, const SetComposition& a, const SetComposition& b, const SetComposition& c,
            const Rational& v)
{
    auto& slot = t[{a, b, c}];
    slot += v;
    if (slot == 0)
        t.erase({a, b, c});
}

/// Ordered splits of `ground` into `parts` possibly empty pieces.
std::vector<std::vector<Mask>> splits(Mask ground, int parts)
{
    std::vector<std::vector<Mask>> out;
    if (parts == 1) {
        out.push_back({ground});
        return out;
    }
    for_each_subset(ground, [&](Mask s) {
        for (auto rest : splits(ground & ~s, parts - 1)) {
            rest.insert(rest.begin(), s);
            out.push_back(std::move(rest));
        }
    });
    return out;
}

} // namespace

VerifyReport verify_hopf(int n, std::uint32_t seed)
{
    VerifyReport rep{"hopf", n, {}};
    rep.checks.reserve(128);
    std::mt19937 rng(seed);
    const Mask ground = range_mask(n);
    const bool exhaustive = n <= 3;
    // random mode: at least 100 cases per check and basis
    const int count = exhaustive ? 0 : 100;

    auto three_splits = splits(ground, 3);
    auto two_splits = splits(ground, 2);
    auto pick_split = [&](const auto& v) -> const std::vector<Mask>& {
        std::uniform_int_distribution<std::size_t> d(0, v.size() - 1);
        return v[d(rng)];
    };

    for (Basis b : kBases) {
        auto named = [&](const char* what) -> CheckResult& {
            return rep.check(std::string(what) + " [" + std::string(basis_name(b)) + "]");
        };
        auto& assoc = named("associativity");
        auto& coassoc = named("coassociativity");
        auto& bimonoid = named("bimonoid compatibility");
        auto& anti = named("antipode identity");
        auto& invol = named("antipode involution");
        auto& round = named("basis round trip");
        auto& natural = named("naturality");
        auto& unit = named("unit and counit");

        // associativity over every ordered 3-split (sampled when random)
        std::vector<std::vector<Mask>> ass_splits = three_splits;
        if (!exhaustive) {
            ass_splits.clear();
            for (int i = 0; i < 13; ++i)
                ass_splits.push_back(pick_split(three_splits));
        }
        for (const auto& sp : ass_splits) {
            auto xs = samples(b, sp[0], exhaustive, 2, rng);
            auto ys = samples(b, sp[1], exhaustive, 2, rng);
            auto zs = samples(b, sp[2], exhaustive, 2, rng);
            for (const auto& [nx, x] : xs)
                for (const auto& [ny, y] : ys)
                    for (const auto& [nz, z] : zs)
                        assoc.record(multiply(multiply(x, y), z) == multiply(x, multiply(y, z)),
                                     nx + "*" + ny + "*" + nz);
        }

        auto elems = samples(b, ground, exhaustive, count, rng);
        for (const auto& [name, x] : elems) {
            // coassociativity
            std::vector<std::vector<Mask>> co_splits = three_splits;
            if (!exhaustive) {
                co_splits.clear();
                co_splits.push_back(pick_split(three_splits));
            }
            for (const auto& sp : co_splits) {
                Triple lhs, rhs;
                for (const auto& [k, c] : comultiply(x, sp[0] | sp[1], sp[2]).terms)
                    for (const auto& [k2, c2] :
                         comultiply(BasisElement::vector(b, k.first), sp[0], sp[1]).terms)
                        add_to(lhs, k2.first, k2.second, k.second, c * c2);
                for (const auto& [k, c] : comultiply(x, sp[0], sp[1] | sp[2]).terms)
                    for (const auto& [k2, c2] :
                         comultiply(BasisElement::vector(b, k.second), sp[1], sp[2]).terms)
                        add_to(rhs, k.first, k2.first, k2.second, c * c2);
                coassoc.record(lhs == rhs, name);
            }

            // antipode identities
            if (n > 0) {
                BasisElement left(ground, b), right(ground, b);
                for (const auto& sp : two_splits) {
                    for (const auto& [k, c] : comultiply(x, sp[0], sp[1]).terms) {
                        auto l = BasisElement::vector(b, k.first);
                        auto r = BasisElement::vector(b, k.second);
                        left += c * multiply(antipode(l), r);
                        right += c * multiply(l, antipode(r));
                    }
                }
                anti.record(left.is_zero() && right.is_zero(), name);
            } else {
                unit.record(antipode(x) == x, name + " antipode of unit");
            }
            invol.record(antipode(antipode(x)) == x, name);

            // round trips within the algebra
            for (Basis t : kBases)
                if (in_dual_algebra(t) == in_dual_algebra(b))
                    round.record(change_basis(change_basis(x, t), b) == x,
                                 name + " via " + std::string(basis_name(t)));

            // naturality under the reversal relabeling
            std::vector<std::pair<int, int>> rev;
            for (int i = 0; i < n; ++i)
                rev.emplace_back(i, n - 1 - i);
            auto r = Relabeling::from_pairs(rev);
            natural.record(relabel(antipode(x), r) == antipode(relabel(x, r)), name + " antipode");
            for (const auto& sp : two_splits) {
                auto lhs = comultiply(relabel(x, r), r.apply(sp[0]), r.apply(sp[1]));
                TensorElement rhs{r.apply(sp[0]), r.apply(sp[1]), b, {}};
                for (const auto& [k, c] : comultiply(x, sp[0], sp[1]).terms)
                    rhs.add(relabel(k.first, r.restrict_to(sp[0])), relabel(k.second, r.restrict_to(sp[1])), c);
                natural.record(lhs == rhs, name + " coproduct");
                if (!exhaustive)
                    break;
            }
        }

        // bimonoid compatibility: Delta_{U,V} mu_{S,T} = (mu (x) mu) reshuffle (Delta (x) Delta)
        std::vector<std::pair<std::vector<Mask>, std::vector<Mask>>> pairs;
        if (exhaustive) {
            for (const auto& st : two_splits)
                for (const auto& uv : two_splits)
                    pairs.emplace_back(st, uv);
        } else {
            for (int i = 0; i < 25; ++i)
                pairs.emplace_back(pick_split(two_splits), pick_split(two_splits));
        }
        for (const auto& [st, uv] : pairs) {
            Mask s = st[0], t = st[1], u = uv[0], v = uv[1];
            auto as = samples(b, s, exhaustive, 2, rng);
            auto bs = samples(b, t, exhaustive, 2, rng);
            for (const auto& [na, a] : as) {
                for (const auto& [nb, bb] : bs) {
                    auto lhs = comultiply(multiply(a, bb), u, v);
                    TensorElement rhs{u, v, b, {}};
                    for (const auto& [ka, ca] : comultiply(a, s & u, s & v).terms) {
                        for (const auto& [kb, cb] : comultiply(bb, t & u, t & v).terms) {
                            auto left = multiply(BasisElement::vector(b, ka.first),
                                                 BasisElement::vector(b, kb.first));
                            auto right = multiply(BasisElement::vector(b, ka.second),
                                                  BasisElement::vector(b, kb.second));
                            for (const auto& [kl, cl] : left.terms)
                                for (const auto& [kr, cr] : right.terms)
                                    rhs.add(kl, kr, ca * cb * cl * cr);
                        }
                    }
                    bimonoid.record(lhs == rhs, na + "," + nb);
                }
            }
        }

        // unit: multiplication by the empty-ground unit
        for (const auto& [name, x] : samples(b, ground, exhaustive, 50, rng)) {
            auto e = BasisElement::unit(b);
            unit.record(multiply(e, x) == x && multiply(x, e) == x, name);
            auto d = comultiply(x, 0, ground);
            TensorElement expect{0, ground, b, {}};
            for (const auto& [k, c] : x.terms)
                expect.add(SetComposition{}, k, c);
            unit.record(d == expect, name + " counit");
        }
    }

    // pairing: adjunction with respect to mu/Delta and self-duality of the antipode
    for (Basis d : {Basis::M, Basis::P, Basis::C}) {
        for (Basis p : {Basis::H, Basis::Q}) {
            std::string pair_tag = " [" + std::string(basis_name(d)) + "|" + std::string(basis_name(p)) + "]";
            auto& adjoint = rep.check("pairing adjunction" + pair_tag);
            auto& anti_dual = rep.check("antipode self-duality" + pair_tag);
            for (const auto& [nx, x] : samples(p, ground, exhaustive, 4, rng)) {
                for (const auto& [na, a] : samples(d, ground, exhaustive, 4, rng))
                    anti_dual.record(pairing(antipode(a), x) == pairing(a, antipode(x)), na + "," + nx);
                for (const auto& sp : two_splits) {
                    auto left = samples(d, sp[0], exhaustive, 2, rng);
                    auto right = samples(d, sp[1], exhaustive, 2, rng);
                    auto dx = comultiply(change_basis(x, Basis::H), sp[0], sp[1]);
                    for (const auto& [na, a] : left) {
                        for (const auto& [nb, bb] : right) {
                            Rational lhs = pairing(multiply(a, bb), x);
                            auto am = change_basis(a, Basis::M);
                            auto bm = change_basis(bb, Basis::M);
                            Rational rhs = 0;
                            for (const auto& [k, c] : dx.terms)
                                rhs += c * am.coeff(k.first) * bm.coeff(k.second);
                            adjoint.record(lhs == rhs, na + "," + nb + " vs " + nx);
                        }
                    }
                    if (!exhaustive)
                        break;
                }
            }
        }
    }
    return rep;
}

} // namespace stein
