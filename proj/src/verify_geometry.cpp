#include "stein/adjoint.hpp"
#include "stein/braid.hpp"
#include "stein/verify.hpp"

#include <map>
#include <random>
#include <set>

namespace stein {

namespace {

/// Random preposet: closure of each off-diagonal pair kept with probability 1/4.
Preposet random_preposet(Mask ground, std::mt19937& rng)
{
    std::vector<std::pair<int, int>> pairs;
    for (int a : atoms_of(ground))
        for (int b : atoms_of(ground))
            if (a != b && rng() % 4 == 0)
                pairs.emplace_back(a, b);
    return transitive_closure(ground, pairs);
}

std::vector<Preposet> preposet_samples(Mask ground, bool exhaustive, int count, std::mt19937& rng)
{
    std::vector<Preposet> out;
    if (exhaustive) {
        std::vector<std::pair<int, int>> cand;
        for (int a : atoms_of(ground))
            for (int b : atoms_of(ground))
                if (a != b)
                    cand.emplace_back(a, b);
        std::set<Preposet> seen;
        for (std::size_t bits = 0; bits < (std::size_t{1} << cand.size()); ++bits) {
            std::vector<std::pair<int, int>> chosen;
            for (std::size_t i = 0; i < cand.size(); ++i)
                if (bits >> i & 1)
                    chosen.push_back(cand[i]);
            seen.insert(transitive_closure(ground, chosen));
        }
        out.assign(seen.begin(), seen.end());
    } else {
        for (int i = 0; i < count; ++i)
            out.push_back(random_preposet(ground, rng));
    }
    return out;
}

std::vector<std::pair<Mask, Mask>> proper_splits(Mask ground)
{
    std::vector<std::pair<Mask, Mask>> out;
    for_each_subset(ground, [&](Mask s) {
        if (s != 0 && s != ground)
            out.emplace_back(s, ground & ~s);
    });
    return out;
}

ChamberFunctional random_steinmann(Mask ground, std::mt19937& rng)
{
    ZieDualElement x{ground, DualBasis::c, {}};
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    for (const auto& k : based_compositions(ground))
        if (rng() % 2) {
            int p = num(rng);
            x.add(k, frac(p == 0 ? 1 : p, den(rng)));
        }
    return functional_of(x);
}

std::string name_of(const Preposet& p)
{
    std::string s = "{";
    for (auto [a, b] : p.pairs())
        s += std::to_string(a + 1) + "<" + std::to_string(b + 1) + " ";
    return s + "}";
}

} // namespace

VerifyReport verify_duality(int n, std::uint32_t seed)
{
    VerifyReport rep{"duality", n, {}};
    rep.checks.reserve(8);
    std::mt19937 rng(seed);
    const Mask ground = range_mask(n);
    const bool exhaustive = n <= 4;
    auto& cones = rep.check("c functional = dual cone membership");
    auto& mobius = rep.check("m functional = signed open cone membership");
    auto& products = rep.check("cone products realize unions");
    auto& conical = rep.check("cone functions are conical indicators");

    auto ps = preposet_samples(ground, exhaustive && n <= 3, exhaustive ? 100 : 20, rng);
    for (const auto& p : ps) {
        cones.record(c_functional(p) == dual_cone_indicator(p), name_of(p));
        conical.record(support_matches_cone(p), name_of(p));
    }
    if (exhaustive && n == 4)
        for (const auto& p : preposet_samples(ground, true, 0, rng))
            cones.record(c_functional(p) == dual_cone_indicator(p), name_of(p));
    for (const auto& f : enumerate_compositions(ground)) {
        if (!exhaustive && rng() % 8)
            continue;
        mobius.record(m_functional(f) == m_functional_by_cones(f), debug_string(f));
    }
    for (int i = 0; i < 100; ++i) {
        auto p = random_preposet(ground, rng);
        auto q = random_preposet(ground, rng);
        products.record(pointwise_product(cone(p), cone(q)) == cone(preposet_union(p, q)),
                        name_of(p) + " " + name_of(q));
    }
    return rep;
}

VerifyReport verify_steinmann(int n, std::uint32_t seed)
{
    VerifyReport rep{"steinmann", n, {}};
    rep.checks.reserve(8);
    std::mt19937 rng(seed);
    const Mask ground = range_mask(n);
    const bool exhaustive = n <= 4;
    auto& satisfy = rep.check("cone functionals satisfy the relations");
    auto& rank_id = rep.check("relation rank = chambers - dim Zie");
    auto& span = rep.check("kernel = span of based cone functionals");
    auto& closed = rep.check("derivative closed formula");
    auto& square = rep.check("derivative transports to the cobracket");
    auto& comb = rep.check("comb coefficients round trip");

    for (const auto& f : enumerate_compositions(ground))
        satisfy.record(is_steinmann(c_functional(f)), debug_string(f));
    for (const auto& p : preposet_samples(ground, n <= 3, 50, rng))
        satisfy.record(is_steinmann(c_functional(p)), name_of(p));

    auto arr = adjoint_arrangement(ground);
    int quotient = stein_quotient_dim(ground);
    rank_id.record(n == 0 || quotient == zie_dimension(n),
                   std::to_string(arr.chamber_count()) + " - " + std::to_string(steinmann_rank(ground)));

    auto keys = based_compositions(ground);
    Matrix rows;
    for (const auto& k : keys)
        rows.push_back(c_functional(k).values);
    span.record(static_cast<int>(keys.size()) == quotient && (keys.empty() || rank(rows) == quotient),
                "independent based cone functionals");
    for (const auto& k : keys) {
        auto c = steinmann_basis_coords(c_functional(k));
        ZieDualElement unit{ground, DualBasis::c, {}};
        unit.add(k, 1);
        span.record(c && *c == unit, debug_string(k));
    }

    auto splits = proper_splits(ground);
    for (const auto& f : enumerate_compositions(ground)) {
        if (!exhaustive && rng() % 16)
            continue;
        auto cf = c_functional(f);
        for (auto [s, t] : splits) {
            if (!exhaustive && rng() % 4)
                continue;
            closed.record(derivative(cf, s, t) == derivative_of_c(f, s, t), debug_string(f));
        }
    }
    const int trials = exhaustive ? 100 : 10;
    for (int i = 0; i < trials && n >= 1; ++i) {
        auto f = random_steinmann(ground, rng);
        auto coeffs = comb_coefficients(f);
        comb.record(reconstruct(coeffs) == f && comb_coefficients(reconstruct(coeffs)) == coeffs,
                    "random #" + std::to_string(i));
        if (i < (exhaustive ? 10 : 2) && !splits.empty()) {
            auto x = *steinmann_basis_coords(f);
            for (auto [s, t] : splits) {
                auto d = tensor_coords(derivative(f, s, t));
                square.record(d && *d == cobracket(x, s, t), "random #" + std::to_string(i));
                if (!exhaustive)
                    break;
            }
        }
    }
    return rep;
}

VerifyReport verify_dynkin(int n, std::uint32_t seed)
{
    VerifyReport rep{"dynkin", n, {}};
    rep.checks.reserve(8);
    std::mt19937 rng(seed);
    const Mask ground = range_mask(n);
    const bool exhaustive = n <= 4;
    auto& egs = rep.check("dynkin = EGS product");
    auto& primitive = rep.check("dynkin elements are primitive");
    auto& linear = rep.check("dynkin vanishes on relations");
    auto& series = rep.check("Eulerian series is primitive");
    auto& euler = rep.check("Eulerian element solves its system");

    auto arr = adjoint_arrangement(ground);
    auto splits = proper_splits(ground);
    std::map<int, BasisElement> cache;
    auto d_of = [&](int id) -> const BasisElement& {
        auto it = cache.find(id);
        if (it == cache.end())
            it = cache.emplace(id, dynkin(ground, id)).first;
        return it->second;
    };
    for (int id = 0; id < arr.chamber_count(); ++id) {
        if (!exhaustive && rng() % 32)
            continue;
        const auto& d = d_of(id);
        const auto& signs = arr.chambers()[id].signs;
        egs.record(d == egs_expansion(ground, id), signs);
        for (auto [s, t] : splits)
            primitive.record(comultiply(d, s, t).terms.empty(), signs);
    }
    for (const auto& rel : steinmann_relations(ground)) {
        if (!exhaustive && rng() % 32)
            continue;
        BasisElement sum(ground, Basis::H);
        for (auto [c, sign] : rel.terms)
            sum += Rational(sign) * d_of(c);
        linear.record(sum.is_zero(), "relation on hyperplanes " + std::to_string(rel.hyperplane_a) + ","
                                         + std::to_string(rel.hyperplane_b));
    }
    auto e = eulerian_series(ground);
    for (auto [s, t] : splits)
        series.record(comultiply(e, s, t).terms.empty(), "split");
    if (n >= 1) {
        auto el = eulerian_element(ground);
        for (const auto& k : based_compositions(ground))
            euler.record(evaluate(p_functional(k), el) == (k.length() == 1 ? 1 : 0), debug_string(k));
    }
    return rep;
}

} // namespace stein
