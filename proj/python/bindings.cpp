// Python bindings. Structured values cross the boundary as JSON text in the
// same schemas as the command-line tool; the package wrapper decodes them.

#include "stein/adjoint.hpp"
#include "stein/error.hpp"
#include "stein/json_io.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace stein;

namespace {

JsonCodec codec_for(int n) { return JsonCodec(GroundSet::range(n < 0 ? kMaxAtoms : n)); }
const JsonCodec& any_codec()
{
    static const JsonCodec c(GroundSet::range(kMaxAtoms));
    return c;
}

std::string dump(const Json& j) { return j.dump(); }

ChamberFunctional functional_from(const std::string& text)
{
    Json j = parse_json(text);
    const auto& c = any_codec();
    if (j.is_object() && j.contains("values"))
        return c.decode_functional(j);
    if (j.is_object() && j.contains("basis") && j["basis"].is_string()) {
        auto b = j["basis"].get<std::string>();
        if (b == "p" || b == "m" || b == "c")
            return functional_of(c.decode_zie_dual(j));
    }
    return functional_of(c.decode_element(j));
}

int chamber_of(int n, const std::string& signs)
{
    int id = adjoint_arrangement(range_mask(n)).id_of(signs);
    if (id < 0)
        throw DomainError("\"" + signs + "\" is not a chamber sign string");
    return id;
}

} // namespace

PYBIND11_MODULE(_stein, m)
{
    m.doc() = "exact set-composition algebra and adjoint braid arrangement computations";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);
    py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);

    m.def("configure", [](int max_n, const std::string& cache_dir) { configure_enumeration({max_n, cache_dir}); },
          py::arg("max_n") = 6, py::arg("cache_dir") = "");

    m.def("compositions", [](int n) {
        Json out = Json::array();
        for (const auto& f : enumerate_compositions(range_mask(n)))
            out.push_back(codec_for(n).encode(f));
        return dump(out);
    });
    m.def("chamber_count", [](int n) { return adjoint_arrangement(range_mask(n)).chamber_count(); });
    m.def("chambers", [](int n) {
        Json out = Json::array();
        for (const auto& c : adjoint_arrangement(range_mask(n)).chambers()) {
            Json w = Json::array();
            for (const auto& v : c.witness)
                w.push_back(encode(v));
            out.push_back({{"signs", c.signs}, {"witness", w}});
        }
        return dump(out);
    });

    m.def("multiply", [](const std::string& a, const std::string& b) {
        const auto& c = any_codec();
        return dump(c.encode(multiply(c.decode_element(parse_json(a)), c.decode_element(parse_json(b)))));
    });
    m.def("comultiply", [](const std::string& x, const std::string& s, const std::string& t) {
        const auto& c = any_codec();
        return dump(c.encode(comultiply(c.decode_element(parse_json(x)), c.decode_set(parse_json(s)),
                                        c.decode_set(parse_json(t)))));
    });
    m.def("antipode", [](const std::string& x) {
        const auto& c = any_codec();
        return dump(c.encode(antipode(c.decode_element(parse_json(x)))));
    });
    m.def("change_basis", [](const std::string& x, const std::string& to) {
        const auto& c = any_codec();
        return dump(c.encode(change_basis(c.decode_element(parse_json(x)), parse_basis(to))));
    });
    m.def("pairing", [](const std::string& a, const std::string& x) {
        const auto& c = any_codec();
        return to_string(pairing(c.decode_element(parse_json(a)), c.decode_element(parse_json(x))));
    });

    m.def("reduce", [](const std::string& tree) {
        const auto& c = any_codec();
        return dump(c.encode(reduce(c.decode_tree(parse_json(tree)))));
    });
    m.def("cobracket", [](const std::string& x, const std::string& s, const std::string& t) {
        const auto& c = any_codec();
        return dump(c.encode(cobracket(c.decode_zie_dual(parse_json(x)), c.decode_set(parse_json(s)),
                                       c.decode_set(parse_json(t)))));
    });

    m.def("steinmann_rank", [](int n) { return steinmann_rank(range_mask(n)); });
    m.def("stein_quotient_dim", [](int n) { return stein_quotient_dim(range_mask(n)); });
    m.def("is_steinmann", [](const std::string& f) { return is_steinmann(functional_from(f)); });
    m.def("functional", [](const std::string& f) { return dump(any_codec().encode(functional_from(f))); });
    m.def("comb_coefficients", [](const std::string& f) {
        return dump(any_codec().encode(comb_coefficients(functional_from(f))));
    });
    m.def("eulerian", [](int n) { return dump(any_codec().encode(eulerian_element(range_mask(n)))); });
    m.def("dynkin", [](int n, const std::string& signs) {
        return dump(any_codec().encode(dynkin(range_mask(n), chamber_of(n, signs))));
    });
    m.def("egs", [](int n, const std::string& signs) {
        return dump(any_codec().encode(egs_expansion(range_mask(n), chamber_of(n, signs))));
    });

    m.def("verify", [](const std::string& suite, int n, std::uint32_t seed) {
        VerifyReport rep;
        if (suite == "hopf")
            rep = verify_hopf(n, seed);
        else if (suite == "duality")
            rep = verify_duality(n, seed);
        else if (suite == "steinmann")
            rep = verify_steinmann(n, seed);
        else if (suite == "dynkin")
            rep = verify_dynkin(n, seed);
        else
            throw DomainError("unknown suite " + suite);
        return dump(encode(rep));
    }, py::arg("suite"), py::arg("n"), py::arg("seed") = 1);
}
