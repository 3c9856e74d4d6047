// Acceptance criteria 1-11. Prints one PASS/FAIL line per criterion; exit
// status is non-zero when any criterion fails.
//
//   acceptance --cli <path to stein> [--max-n 6] [--only k]

#include "stein/adjoint.hpp"
#include "stein/braid.hpp"
#include "stein/verify.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <unistd.h>

using namespace stein;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            if (pass)
                detail << "first failure: " << what << "; ";
            pass = false;
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void require_report(Outcome& out, const VerifyReport& rep, const std::string& prefix = "")
{
    for (const auto& c : rep.checks)
        if (prefix.empty() || c.name.rfind(prefix, 0) == 0)
            out.require(c.failures == 0, rep.suite + " n=" + std::to_string(rep.n) + " " + c.name + ": " + c.first_failure);
}

std::vector<Preposet> all_preposets(Mask g)
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
    return {out.begin(), out.end()};
}

void counting(Outcome& out, int max_n)
{
    const long comps[] = {1, 1, 3, 13, 75, 541};
    for (int n = 0; n <= 5; ++n)
        out.require(static_cast<long>(enumerate_compositions(range_mask(n)).size()) == comps[n],
                    "compositions n=" + std::to_string(n));
    const int chambers[] = {0, 1, 2, 6, 32, 370};
    auto t0 = std::chrono::steady_clock::now();
    for (int n = 2; n <= 5; ++n)
        out.require(adjoint_arrangement(range_mask(n)).chamber_count() == chambers[n],
                    "chambers n=" + std::to_string(n));
    double t5 = seconds_since(t0);
    out.require(t5 < 60, "n<=5 enumeration took " + std::to_string(t5) + " s");
    out.detail << "compositions 1,1,3,13,75,541; chambers 2,6,32,370 in " << t5 << " s";
    if (max_n >= 6) {
        auto t1 = std::chrono::steady_clock::now();
        int c6 = adjoint_arrangement(range_mask(6)).chamber_count();
        double t6 = seconds_since(t1);
        out.require(c6 == 11292, "chambers n=6 = " + std::to_string(c6));
        out.require(t6 < 900, "n=6 took " + std::to_string(t6) + " s");
        out.detail << "; n=6: " << c6 << " chambers in " << t6 << " s";
    } else {
        out.detail << "; n=6 not run (pass --max-n 6)";
    }
}

void hopf_axioms(Outcome& out)
{
    for (int n = 0; n <= 3; ++n)
        require_report(out, verify_hopf(n));
    auto rep = verify_hopf(4, 2024);
    require_report(out, rep);
    long least = -1;
    std::set<std::string> bases;
    for (const auto& c : rep.checks) {
        if (c.name.find('|') != std::string::npos)
            continue;
        out.require(c.cases >= 100, c.name + " ran " + std::to_string(c.cases) + " cases at n=4");
        least = least < 0 ? c.cases : std::min(least, c.cases);
        bases.insert(c.name.substr(c.name.find('[')));
    }
    out.require(bases.size() == 5, "all five bases covered");
    out.detail << "exhaustive n<=3, n=4 random with >= " << least << " cases per check and basis";
}

void round_trips(Outcome& out)
{
    const std::pair<Basis, Basis> pairs[] = {{Basis::M, Basis::P}, {Basis::M, Basis::C}, {Basis::H, Basis::Q}};
    long cases = 0;
    for (int n = 0; n <= 4; ++n)
        for (const auto& f : enumerate_compositions(range_mask(n)))
            for (auto [a, b] : pairs) {
                auto x = BasisElement::vector(a, f);
                auto y = BasisElement::vector(b, f);
                out.require(change_basis(change_basis(x, b), a) == x, "round trip from " + std::string(basis_name(a)));
                out.require(change_basis(change_basis(y, a), b) == y, "round trip from " + std::string(basis_name(b)));
                cases += 2;
            }
    out.detail << cases << " basis vectors, n<=4";
}

void duality_pairing(Outcome& out)
{
    long cases = 0;
    for (int n = 0; n <= 3; ++n) {
        auto rep = verify_hopf(n);
        require_report(out, rep, "pairing adjunction");
        require_report(out, rep, "antipode self-duality");
        for (const auto& c : rep.checks)
            if (c.name.rfind("pairing", 0) == 0 || c.name.rfind("antipode self", 0) == 0)
                cases += c.cases;
    }
    out.detail << cases << " exhaustive cases, n<=3";
}

void geometry_algebra(Outcome& out)
{
    std::mt19937 rng(17);
    long cases = 0;
    for (int n = 1; n <= 4; ++n) {
        Mask g = range_mask(n);
        for (int i = 0; i < 60; ++i) {
            auto random_p = [&] {
                std::vector<std::pair<int, int>> pairs;
                for (int a : atoms_of(g))
                    for (int b : atoms_of(g))
                        if (a != b && rng() % 4 == 0)
                            pairs.emplace_back(a, b);
                return transitive_closure(g, pairs);
            };
            auto p = random_p();
            auto q = random_p();
            out.require(pointwise_product(cone(p), cone(q)) == cone(preposet_union(p, q)), "cone product");
            out.require(support_matches_cone(p), "conical indicator");
            cases += 2;
        }
    }
    out.detail << cases << " random preposet cases, n<=4";
}

void adjoint_duality(Outcome& out)
{
    long cases = 0;
    for (int n = 1; n <= 4; ++n)
        for (const auto& f : enumerate_compositions(range_mask(n))) {
            out.require(m_functional(f) == m_functional_by_cones(f), "m functional of " + debug_string(f));
            ++cases;
        }
    out.detail << cases << " compositions, n<=4";
}

void steinmann(Outcome& out)
{
    long preposets = 0;
    for (int n = 1; n <= 5; ++n) {
        Mask g = range_mask(n);
        for (const auto& p : all_preposets(g)) {
            out.require(is_steinmann(c_functional(p)), "cone functional violates a relation");
            ++preposets;
        }
        int rank = steinmann_rank(g);
        int chambers = adjoint_arrangement(g).chamber_count();
        out.require(rank == chambers - zie_dimension(n), "rank identity n=" + std::to_string(n));
        auto keys = based_compositions(g);
        Matrix rows;
        for (const auto& k : keys)
            rows.push_back(c_functional(k).values);
        // independent based cone functionals, as many as the kernel dimension
        out.require(stein::rank(rows) == static_cast<int>(keys.size()), "independence n=" + std::to_string(n));
        out.require(static_cast<int>(keys.size()) == chambers - rank, "kernel dimension n=" + std::to_string(n));
        if (n >= 3)
            out.detail << "n=" << n << ": rank " << rank << " = " << chambers << " - " << zie_dimension(n) << "; ";
    }
    out.detail << "all " << preposets << " preposets n<=5 satisfy the relations";
}

void lemma_theorem(Outcome& out)
{
    for (int n = 1; n <= 4; ++n) {
        auto rep = verify_steinmann(n);
        require_report(out, rep);
        if (n == 4)
            for (const auto& c : rep.checks)
                out.detail << c.name << " " << c.cases << "; ";
    }
}

void dynkin_suite(Outcome& out)
{
    for (int n = 1; n <= 4; ++n) {
        auto rep = verify_dynkin(n);
        for (const auto& name : {"dynkin = EGS product", "dynkin elements are primitive", "dynkin vanishes on relations"})
            require_report(out, rep, name);
    }
    out.detail << "all chambers and splits, n<=4";
}

void eulerian(Outcome& out)
{
    for (int n = 1; n <= 4; ++n) {
        Mask g = range_mask(n);
        auto e = eulerian_series(g);
        for_each_subset(g, [&](Mask s) {
            if (s != 0 && s != g)
                out.require(comultiply(e, s, g & ~s).is_zero(), "Eulerian series not primitive");
        });
    }
    for (int n = 1; n <= 5; ++n) {
        Mask g = range_mask(n);
        auto e = eulerian_element(g);
        for (const auto& k : based_compositions(g))
            out.require(evaluate(p_functional(k), e) == (k.length() == 1 ? 1 : 0), "Eulerian system n=" + std::to_string(n));
    }
    auto sols = uniform_eulerian_orbit_solutions(range_mask(4), 24);
    out.require(!sols.empty(), "no 1/24-uniform solution at n=4");
    out.detail << "series primitive n<=4; system solved n<=5; " << sols.size()
               << " union(s) of chamber orbits with 24 chambers at 1/24 at n=4";
}

std::string run(const std::string& cmd)
{
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p)
        return "<popen failed>";
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0)
        out.append(buf, got);
    int rc = pclose(p);
    return out + "<exit " + std::to_string(rc) + ">";
}

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void determinism(Outcome& out, const std::string& cli)
{
    if (cli.empty()) {
        out.require(false, "no --cli path given");
        return;
    }
    namespace fs = std::filesystem;
    fs::path base = fs::temp_directory_path() / ("stein-accept-" + std::to_string(::getpid()));
    fs::remove_all(base);
    const char* commands[] = {
        "chambers list --n 5",
        "steinmann relations --n 4",
        "eulerian --n 4",
        "dynkin egs --n 3 --chamber +++",
        "verify hopf --n 3",
        "expand --n 3 --f '{\"ground\":[1,2,3],\"basis\":\"c\",\"terms\":[{\"key\":[[1],[2,3]],\"coeff\":\"2/3\"}]}'",
    };
    int compared = 0;
    for (const char* c : commands) {
        // fresh cache, reused cache, regenerated cache in a second directory, no cache
        std::string a = run(cli + " " + c + " --cache-dir " + (base / "a").string());
        std::string b = run(cli + " " + c + " --cache-dir " + (base / "a").string());
        std::string d = run(cli + " " + c + " --cache-dir " + (base / "b").string());
        std::string e = run(cli + " " + c);
        out.require(a.find("<exit 0>") != std::string::npos, std::string("command failed: ") + c);
        out.require(a == b && a == d && a == e, std::string("output differs: ") + c);
        ++compared;
    }
    for (int n = 2; n <= 5; ++n) {
        auto name = "adjoint-n" + std::to_string(n) + ".jsonl";
        bool exists = fs::exists(base / "a" / name);
        out.require(exists, "cache file " + name + " missing");
        if (exists)
            out.require(slurp(base / "a" / name) == slurp(base / "b" / name), "cache files differ: " + name);
    }
    fs::remove_all(base);
    out.detail << compared << " commands identical across fresh, reused, regenerated and absent caches; cache files identical";
}

} // namespace

int main(int argc, char** argv)
{
    std::string cli;
    int max_n = 5;
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--cli" && i + 1 < argc)
            cli = argv[++i];
        else if (arg == "--max-n" && i + 1 < argc)
            max_n = std::atoi(argv[++i]);
        else if (arg == "--only" && i + 1 < argc)
            only = std::atoi(argv[++i]);
        else {
            std::cerr << "usage: acceptance --cli <stein> [--max-n N] [--only K]\n";
            return 2;
        }
    }
    configure_enumeration({std::max(max_n, 5), ""});

    const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
        {"counting", [&](Outcome& o) { counting(o, max_n); }},
        {"Hopf axioms", hopf_axioms},
        {"basis round trips", round_trips},
        {"pairing duality", duality_pairing},
        {"geometry/algebra agreement", geometry_algebra},
        {"adjoint duality", adjoint_duality},
        {"Steinmann relations", steinmann},
        {"derivative lemma, cobracket square, comb expansion", lemma_theorem},
        {"Dynkin elements", dynkin_suite},
        {"Eulerian elements", eulerian},
        {"determinism", [&](Outcome& o) { determinism(o, cli); }},
    };
    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        if (only && only != static_cast<int>(i + 1))
            continue;
        Outcome o;
        auto t0 = std::chrono::steady_clock::now();
        try {
            criteria[i].second(o);
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        all = all && o.pass;
        std::cout << "criterion " << (i + 1) << " [" << criteria[i].first << "]: " << (o.pass ? "PASS" : "FAIL") << " ("
                  << o.detail.str() << ") " << seconds_since(t0) << " s" << std::endl;
    }
    return all ? 0 : 1;
}
