// stein: command-line front end. Reads JSON, prints JSON on stdout.
// Exit codes: 0 success, 1 domain error or failed verification, 2 usage or malformed JSON.

#include "stein/adjoint.hpp"
#include "stein/error.hpp"
#include "stein/json_io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace stein;

namespace {

struct Options {
    int n = -1;
    std::string ground;
    std::string basis;
    std::string cache_dir;
    int max_n = 6;
    bool pretty = false;
    std::uint32_t seed = 1;
    // operands
    std::string a, b, x, f, s, t, tree, preposet, to, chamber;
    int uniform = 0;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operand text: inline JSON, "@path" for a file, "-" for stdin.
Json operand(const std::string& text, const char* name)
{
    if (text.empty())
        throw UsageError(std::string("missing --") + name);
    std::string body;
    if (text == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        body = ss.str();
    } else if (text.front() == '@') {
        std::ifstream in(text.substr(1));
        if (!in)
            throw UsageError("cannot read " + text.substr(1));
        std::ostringstream ss;
        ss << in.rdbuf();
        body = ss.str();
    } else {
        body = text;
    }
    return parse_json(body);
}

std::vector<std::string> split_labels(const std::string& text)
{
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty())
            out.push_back(item);
    return out;
}

class Context {
public:
    explicit Context(const Options& o) : opt_(o), codec_(labels(o)) {}

    const JsonCodec& codec() const { return codec_; }

    /// Ground fixed by --n or --ground.
    Mask ground() const
    {
        if (opt_.n < 0 && opt_.ground.empty())
            throw UsageError("this command needs --n or --ground");
        return codec_.labels().mask();
    }

    /// Ground restriction check for inputs when --n/--ground was given.
    void check(Mask m) const
    {
        if ((opt_.n >= 0 || !opt_.ground.empty()) && !is_subset(m, codec_.labels().mask()))
            throw DomainError("input uses labels outside the declared ground");
    }

    /// A set given as comma separated labels or as a JSON array.
    Mask set(const std::string& text, const char* name) const
    {
        if (text.empty())
            throw UsageError(std::string("missing --") + name);
        if (text.front() == '[')
            return codec_.decode_set(parse_json(text));
        Json arr = Json::array();
        for (const auto& l : split_labels(text))
            arr.push_back(l);
        return codec_.decode_set(arr);
    }

    /// Chamber functional from a functional, Sigma* element or Zie* element.
    ChamberFunctional functional(const std::string& text) const
    {
        Json j = operand(text, "f");
        ChamberFunctional f;
        if (j.is_object() && j.contains("values")) {
            f = codec_.decode_functional(j);
        } else if (j.is_object() && j.contains("basis") && j["basis"].is_string()
                   && parse_dual_basis_or_none(j["basis"].get<std::string>())) {
            f = functional_of(codec_.decode_zie_dual(j));
        } else {
            f = functional_of(codec_.decode_element(j));
        }
        check(f.ground);
        return f;
    }

    BasisElement element(const std::string& text, const char* name) const
    {
        auto x = codec_.decode_element(operand(text, name));
        check(x.ground);
        return x;
    }

private:
    static bool parse_dual_basis_or_none(const std::string& s) { return s == "p" || s == "m" || s == "c"; }

    static GroundSet labels(const Options& o)
    {
        if (o.n >= 0 && !o.ground.empty())
            throw UsageError("give either --n or --ground, not both");
        if (!o.ground.empty()) {
            auto ls = split_labels(o.ground);
            if (static_cast<int>(ls.size()) > kMaxAtoms)
                throw UsageError("at most 16 labels");
            return GroundSet(ls);
        }
        if (o.n > kMaxAtoms)
            throw UsageError("at most 16 atoms");
        return GroundSet::range(o.n >= 0 ? o.n : kMaxAtoms);
    }

    const Options& opt_;
    JsonCodec codec_;
};

int chamber_id(const AdjointArrangement& a, const std::string& signs)
{
    int id = a.id_of(signs);
    if (id < 0)
        throw DomainError("\"" + signs + "\" is not a chamber sign string");
    return id;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact computations with set compositions, Lie elements and the adjoint braid arrangement"};
    app.require_subcommand(1);
    // global options may follow the subcommand
    app.fallthrough();
    Options o;
    app.add_option("--n", o.n, "ground {1..n}")->check(CLI::Range(0, kMaxAtoms));
    app.add_option("--ground", o.ground, "ground labels, comma separated");
    app.add_option("--cache-dir", o.cache_dir, "chamber cache directory (overrides STEIN_CACHE_DIR)");
    app.add_option("--max-n", o.max_n, "largest ground size enumerated")->capture_default_str();
    app.add_flag("--pretty", o.pretty, "indent output");

    Json out;
    std::function<void()> action;
    auto bind = [&](CLI::App* sub, std::function<void(Context&)> fn) {
        sub->callback([&, fn] {
            action = [&, fn] {
                Context ctx(o);
                fn(ctx);
            };
        });
    };

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "list compositions, partitions or chambers");
    enumerate->require_subcommand(1);
    bind(enumerate->add_subcommand("compositions"), [&](Context& c) {
        out = Json::array();
        for (const auto& f : enumerate_compositions(c.ground()))
            out.push_back(c.codec().encode(f));
    });
    bind(enumerate->add_subcommand("partitions"), [&](Context& c) {
        out = Json::array();
        for (const auto& p : enumerate_partitions(c.ground()))
            out.push_back(c.codec().encode(p));
    });
    auto chambers_list = [&](Context& c) {
        auto a = adjoint_arrangement(c.ground());
        Json hs = Json::array();
        for (const auto& h : a.hyperplanes())
            hs.push_back(c.codec().encode(h));
        Json cs = Json::array();
        for (const auto& ch : a.chambers()) {
            Json w = Json::array();
            for (const auto& v : ch.witness)
                w.push_back(encode(v));
            cs.push_back({{"signs", ch.signs}, {"witness", w}});
        }
        out = {{"hyperplanes", hs}, {"chambers", cs}};
    };
    bind(enumerate->add_subcommand("chambers"), chambers_list);

    // Sigma / Sigma*
    auto* mul = app.add_subcommand("mul", "product of two elements");
    mul->add_option("--a", o.a)->required();
    mul->add_option("--b", o.b)->required();
    bind(mul, [&](Context& c) {
        out = c.codec().encode(multiply(c.element(o.a, "a"), c.element(o.b, "b")));
    });
    auto* comul = app.add_subcommand("comul", "coproduct component at (S,T)");
    comul->add_option("--x", o.x)->required();
    comul->add_option("--S", o.s)->required();
    comul->add_option("--T", o.t)->required();
    bind(comul, [&](Context& c) {
        out = c.codec().encode(comultiply(c.element(o.x, "x"), c.set(o.s, "S"), c.set(o.t, "T")));
    });
    auto* anti = app.add_subcommand("antipode", "antipode of an element");
    anti->add_option("--x", o.x)->required();
    bind(anti, [&](Context& c) { out = c.codec().encode(antipode(c.element(o.x, "x"))); });
    auto* pair = app.add_subcommand("pair", "pairing of a Sigma* element with a Sigma element");
    pair->add_option("--a", o.a)->required();
    pair->add_option("--x", o.x)->required();
    bind(pair, [&](Context& c) {
        out = {{"value", encode(pairing(c.element(o.a, "a"), c.element(o.x, "x")))}};
    });
    auto* basis = app.add_subcommand("basis", "change of basis");
    basis->add_option("--x", o.x)->required();
    basis->add_option("--to", o.to, "M|P|C|H|Q")->required();
    bind(basis, [&](Context& c) { out = c.codec().encode(change_basis(c.element(o.x, "x"), parse_basis(o.to))); });
    auto* tits = app.add_subcommand("tits", "Tits product of two Sigma elements in the H basis");
    tits->add_option("--a", o.a)->required();
    tits->add_option("--b", o.b)->required();
    bind(tits, [&](Context& c) {
        out = c.codec().encode(tits_h(change_basis(c.element(o.a, "a"), Basis::H),
                                      change_basis(c.element(o.b, "b"), Basis::H)));
    });
    auto* cone = app.add_subcommand("cone", "C_p of a preposet, expanded in a basis");
    cone->add_option("--preposet", o.preposet)->required();
    cone->add_option("--basis", o.basis, "M|P|C (default M)");
    bind(cone, [&](Context& c) {
        auto p = c.codec().decode_preposet(operand(o.preposet, "preposet"));
        c.check(p.ground());
        Basis b = o.basis.empty() ? Basis::M : parse_basis(o.basis);
        out = c.codec().encode(b == Basis::C ? preposet_expansion(p) : change_basis(cone_element(p), b));
    });

    // Zie
    auto* zie = app.add_subcommand("zie", "Lie elements and their duals");
    zie->require_subcommand(1);
    auto* reduce_cmd = zie->add_subcommand("reduce", "tree to comb coordinates");
    reduce_cmd->add_option("--tree", o.tree)->required();
    bind(reduce_cmd, [&](Context& c) {
        auto t = c.codec().decode_tree(operand(o.tree, "tree"));
        c.check(t.ground());
        out = c.codec().encode(reduce(t));
    });
    auto* embed = zie->add_subcommand("embed", "Lie element into Sigma (H basis)");
    embed->add_option("--x", o.x)->required();
    bind(embed, [&](Context& c) { out = c.codec().encode(embed_u(c.codec().decode_zie(operand(o.x, "x")))); });
    auto* project = zie->add_subcommand("project", "Sigma* element onto Zie*");
    project->add_option("--x", o.x)->required();
    project->add_option("--to", o.to, "p|m|c (default p)");
    bind(project, [&](Context& c) {
        out = c.codec().encode(project_ustar(c.element(o.x, "x"), o.to.empty() ? DualBasis::p : parse_dual_basis(o.to)));
    });
    auto* bracket_cmd = zie->add_subcommand("bracket", "Lie bracket");
    bracket_cmd->add_option("--a", o.a)->required();
    bracket_cmd->add_option("--b", o.b)->required();
    bind(bracket_cmd, [&](Context& c) {
        out = c.codec().encode(
            bracket(c.codec().decode_zie(operand(o.a, "a")), c.codec().decode_zie(operand(o.b, "b"))));
    });
    auto* cobracket_cmd = zie->add_subcommand("cobracket", "Lie cobracket component at (S,T)");
    cobracket_cmd->add_option("--x", o.x)->required();
    cobracket_cmd->add_option("--S", o.s)->required();
    cobracket_cmd->add_option("--T", o.t)->required();
    bind(cobracket_cmd, [&](Context& c) {
        auto d = c.codec().decode_zie_dual(operand(o.x, "x"));
        out = c.codec().encode(cobracket(d, c.set(o.s, "S"), c.set(o.t, "T")));
    });

    // chambers
    auto* chambers = app.add_subcommand("chambers", "chambers of the adjoint arrangement");
    chambers->require_subcommand(1);
    bind(chambers->add_subcommand("count"), [&](Context& c) {
        out = {{"n", popcount(c.ground())}, {"chambers", adjoint_arrangement(c.ground()).chamber_count()}};
    });
    bind(chambers->add_subcommand("list"), chambers_list);

    // Steinmann
    auto* stein = app.add_subcommand("steinmann", "Steinmann relations");
    stein->require_subcommand(1);
    bind(stein->add_subcommand("relations"), [&](Context& c) {
        Json rels = Json::array();
        for (const auto& r : steinmann_relations(c.ground()))
            rels.push_back(c.codec().encode(r, c.ground()));
        out = {{"relations", rels}, {"rank", steinmann_rank(c.ground())}, {"quotient_dim", stein_quotient_dim(c.ground())}};
    });
    auto* check = stein->add_subcommand("check", "does a functional satisfy every relation");
    check->add_option("--f", o.f)->required();
    bind(check, [&](Context& c) { out = {{"steinmann", is_steinmann(c.functional(o.f))}}; });
    auto* coords = stein->add_subcommand("coords", "coordinates over the based cone functionals");
    coords->add_option("--f", o.f)->required();
    bind(coords, [&](Context& c) {
        auto r = steinmann_basis_coords(c.functional(o.f));
        if (!r)
            throw DomainError("functional violates a Steinmann relation; no coordinates");
        out = c.codec().encode(*r);
    });

    auto* deriv = app.add_subcommand("derivative", "discrete derivative across the hyperplane (S,T)");
    deriv->add_option("--f", o.f)->required();
    deriv->add_option("--S", o.s)->required();
    deriv->add_option("--T", o.t)->required();
    deriv->add_option("--seed", o.seed, "face point selector")->capture_default_str();
    bind(deriv, [&](Context& c) {
        out = c.codec().encode(derivative(c.functional(o.f), c.set(o.s, "S"), c.set(o.t, "T"), static_cast<int>(o.seed)));
    });

    auto* euler = app.add_subcommand("eulerian", "an Eulerian chamber combination");
    euler->add_option("--uniform", o.uniform, "list orbit unions of this total size with uniform coefficients");
    bind(euler, [&](Context& c) {
        if (o.uniform > 0) {
            Json sols = Json::array();
            for (const auto& e : uniform_eulerian_orbit_solutions(c.ground(), o.uniform))
                sols.push_back(c.codec().encode(e));
            out = {{"total", o.uniform}, {"solutions", sols}};
        } else {
            out = c.codec().encode(eulerian_element(c.ground()));
        }
    });

    auto* dyn = app.add_subcommand("dynkin", "Dynkin element of a chamber");
    dyn->require_subcommand(1);
    auto* mbasis = dyn->add_subcommand("mbasis", "sum of m-functional values times H_F");
    mbasis->add_option("--chamber", o.chamber, "sign string")->required();
    bind(mbasis, [&](Context& c) {
        out = c.codec().encode(dynkin(c.ground(), chamber_id(adjoint_arrangement(c.ground()), o.chamber)));
    });
    auto* egs = dyn->add_subcommand("egs", "Tits product over the chamber signature");
    egs->add_option("--chamber", o.chamber, "sign string")->required();
    bind(egs, [&](Context& c) {
        out = c.codec().encode(egs_expansion(c.ground(), chamber_id(adjoint_arrangement(c.ground()), o.chamber)));
    });

    auto* expand = app.add_subcommand("expand", "comb coefficients of a Steinmann functional and its reconstruction");
    expand->add_option("--f", o.f)->required();
    bind(expand, [&](Context& c) {
        auto coeffs = comb_coefficients(c.functional(o.f));
        out = {{"coefficients", c.codec().encode(coeffs)}, {"reconstructed", c.codec().encode(reconstruct(coeffs))}};
    });

    bool verify_failed = false;
    auto* verify = app.add_subcommand("verify", "run an invariant suite at ground size n");
    verify->require_subcommand(1);
    verify->add_option("--seed", o.seed, "random seed for sampled checks")->capture_default_str();
    auto add_suite = [&](const char* name, VerifyReport (*fn)(int, std::uint32_t)) {
        bind(verify->add_subcommand(name), [&, fn](Context& c) {
            auto rep = fn(popcount(c.ground()), o.seed);
            verify_failed = !rep.ok();
            out = encode(rep);
        });
    };
    add_suite("hopf", verify_hopf);
    add_suite("duality", verify_duality);
    add_suite("steinmann", verify_steinmann);
    add_suite("dynkin", verify_dynkin);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        EnumerationSettings settings;
        settings.max_n = o.max_n;
        if (!o.cache_dir.empty())
            settings.cache_dir = o.cache_dir;
        else if (const char* env = std::getenv("STEIN_CACHE_DIR"))
            settings.cache_dir = env;
        configure_enumeration(settings);
        action();
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const FormatError& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return 1;
    } catch (const ResourceError& e) {
        std::cerr << "resource error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    std::cout << (o.pretty ? out.dump(2) : out.dump()) << '\n';
    return verify_failed ? 1 : 0;
}
