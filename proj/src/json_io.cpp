#include "stein/json_io.hpp"

#include "stein/error.hpp"

namespace stein {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw FormatError("malformed JSON: " + what); }

const Json& field(const Json& j, const char* name)
{
    if (!j.is_object())
        malformed(std::string("expected an object with \"") + name + "\"");
    auto it = j.find(name);
    if (it == j.end())
        malformed(std::string("missing field \"") + name + "\"");
    return *it;
}

const Json& array(const Json& j, const char* what)
{
    if (!j.is_array())
        malformed(std::string(what) + " must be an array");
    return j;
}

} // namespace

Json parse_json(std::string_view text)
{
    try {
        return Json::parse(text);
    } catch (const Json::exception& e) {
        throw FormatError(std::string("malformed JSON: ") + e.what());
    }
}

Json encode(const Rational& r) { return to_string(r); }

Rational decode_rational(const Json& j)
{
    if (j.is_number_integer())
        return Rational(j.get<long>());
    if (!j.is_string())
        malformed("rational must be a \"p/q\" string");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const DomainError& e) {
        throw FormatError(std::string("malformed JSON: ") + e.what());
    }
}

JsonCodec::JsonCodec(GroundSet labels) : labels_(std::move(labels)) {}

int JsonCodec::atom(const Json& label) const
{
    std::string text;
    if (label.is_string())
        text = label.get<std::string>();
    else if (label.is_number_integer())
        text = std::to_string(label.get<long>());
    else
        malformed("label must be a string or an integer");
    int a = labels_.atom_of(text);
    if (a < 0)
        throw DomainError("label \"" + text + "\" is not in the ground set");
    return a;
}

Json JsonCodec::encode_set(Mask m) const
{
    Json out = Json::array();
    for (int a : atoms_of(m))
        out.push_back(labels_.label(a));
    return out;
}

Mask JsonCodec::decode_set(const Json& j) const
{
    Mask m = 0;
    for (const auto& l : array(j, "set")) {
        int a = atom(l);
        if (contains(m, a))
            throw DomainError("repeated label in a set");
        m |= atom_mask(a);
    }
    return m;
}

Json JsonCodec::encode(const SetComposition& f) const
{
    Json out = Json::array();
    for (Mask l : f.lumps)
        out.push_back(encode_set(l));
    return out;
}

SetComposition JsonCodec::decode_composition(const Json& j) const
{
    std::vector<Mask> lumps;
    for (const auto& l : array(j, "composition"))
        lumps.push_back(decode_set(l));
    return make_composition(std::move(lumps));
}

Json JsonCodec::encode(const SetPartition& p) const
{
    Json out = Json::array();
    for (Mask b : p.blocks)
        out.push_back(encode_set(b));
    return out;
}

Json JsonCodec::encode(const Preposet& p) const
{
    Json pairs = Json::array();
    for (auto [a, b] : p.pairs())
        pairs.push_back(Json::array({labels_.label(a), labels_.label(b)}));
    return {{"ground", encode_set(p.ground())}, {"pairs", pairs}};
}

Preposet JsonCodec::decode_preposet(const Json& j) const
{
    Mask ground = decode_set(field(j, "ground"));
    std::vector<std::pair<int, int>> pairs;
    for (const auto& pr : array(field(j, "pairs"), "pairs")) {
        if (!pr.is_array() || pr.size() != 2)
            malformed("a preposet pair is a two-element array");
        pairs.emplace_back(atom(pr[0]), atom(pr[1]));
    }
    return transitive_closure(ground, pairs);
}

Json JsonCodec::encode(const TwoBlock& b) const
{
    return {{"S", encode_set(b.s)}, {"T", encode_set(b.t)}};
}

TwoBlock JsonCodec::decode_two_block(const Json& j) const
{
    return make_two_block(decode_set(field(j, "S")), decode_set(field(j, "T")));
}

Json JsonCodec::encode(const Tree& t) const
{
    if (t.is_leaf())
        return encode_set(t.lump());
    return Json::array({encode(t.left()), encode(t.right())});
}

Tree JsonCodec::decode_tree(const Json& j) const
{
    array(j, "tree");
    bool leaf = j.empty() || !j.front().is_array();
    if (leaf) {
        Mask m = decode_set(j);
        if (m == 0)
            throw DomainError("tree leaves are non-empty");
        return Tree::leaf(m);
    }
    if (j.size() != 2)
        malformed("a tree node is a pair [left, right]");
    return Tree::node(decode_tree(j[0]), decode_tree(j[1]));
}

Json JsonCodec::encode(const BasisElement& x) const
{
    Json terms = Json::array();
    for (const auto& [k, c] : x.terms)
        terms.push_back({{"key", encode(k)}, {"coeff", stein::encode(c)}});
    Json out = {{"ground", encode_set(x.ground)}, {"basis", std::string(basis_name(x.basis))}, {"terms", terms}};
    if (!x.cone_terms.empty()) {
        Json cones = Json::array();
        for (const auto& [p, c] : x.cone_terms)
            cones.push_back({{"preposet", encode(p)}, {"coeff", stein::encode(c)}});
        out["cones"] = cones;
    }
    return out;
}

BasisElement JsonCodec::decode_element(const Json& j) const
{
    Basis b;
    try {
        b = parse_basis(field(j, "basis").get<std::string>());
    } catch (const Json::exception&) {
        malformed("basis must be a string");
    } catch (const DomainError& e) {
        throw FormatError(e.what());
    }
    BasisElement x(decode_set(field(j, "ground")), b);
    for (const auto& t : array(field(j, "terms"), "terms")) {
        auto k = decode_composition(field(t, "key"));
        if (k.ground() != x.ground)
            throw DomainError("term key does not cover the element's ground");
        x.add(k, decode_rational(field(t, "coeff")));
    }
    if (j.contains("cones")) {
        if (b != Basis::C)
            throw DomainError("cone terms only exist in the C basis");
        for (const auto& t : array(j["cones"], "cones")) {
            auto p = decode_preposet(field(t, "preposet"));
            if (p.ground() != x.ground)
                throw DomainError("cone key does not cover the element's ground");
            x.add_cone(p, decode_rational(field(t, "coeff")));
        }
    }
    return x;
}

Json JsonCodec::encode(const TensorElement& x) const
{
    Json terms = Json::array();
    for (const auto& [k, c] : x.terms)
        terms.push_back({{"left", encode(k.first)}, {"right", encode(k.second)}, {"coeff", stein::encode(c)}});
    return {{"left", encode_set(x.left)},
            {"right", encode_set(x.right)},
            {"basis", std::string(basis_name(x.basis))},
            {"terms", terms}};
}

TensorElement JsonCodec::decode_tensor(const Json& j) const
{
    TensorElement x;
    x.left = decode_set(field(j, "left"));
    x.right = decode_set(field(j, "right"));
    if (x.left & x.right)
        throw DomainError("tensor factors overlap");
    try {
        x.basis = parse_basis(field(j, "basis").get<std::string>());
    } catch (const Json::exception&) {
        malformed("basis must be a string");
    } catch (const DomainError& e) {
        throw FormatError(e.what());
    }
    for (const auto& t : array(field(j, "terms"), "terms")) {
        auto a = decode_composition(field(t, "left"));
        auto b = decode_composition(field(t, "right"));
        if (a.ground() != x.left || b.ground() != x.right)
            throw DomainError("tensor key does not match the factors");
        x.add(a, b, decode_rational(field(t, "coeff")));
    }
    return x;
}

Json JsonCodec::encode(const ZieElement& x) const
{
    Json terms = Json::array();
    for (const auto& [k, c] : x.terms)
        terms.push_back({{"tree", encode(Tree::comb(k))}, {"coeff", stein::encode(c)}});
    return {{"ground", encode_set(x.ground)}, {"terms", terms}};
}

ZieElement JsonCodec::decode_zie(const Json& j) const
{
    Mask ground = decode_set(field(j, "ground"));
    ZieElement x{ground, {}};
    for (const auto& t : array(field(j, "terms"), "terms")) {
        auto tree = decode_tree(field(t, "tree"));
        if (tree.ground() != ground)
            throw DomainError("tree does not cover the element's ground");
        x += decode_rational(field(t, "coeff")) * reduce(tree);
    }
    return x;
}

Json JsonCodec::encode(const ZieDualElement& x) const
{
    Json terms = Json::array();
    for (const auto& [k, c] : x.terms)
        terms.push_back({{"key", encode(k)}, {"coeff", stein::encode(c)}});
    return {{"ground", encode_set(x.ground)}, {"basis", std::string(dual_basis_name(x.basis))}, {"terms", terms}};
}

ZieDualElement JsonCodec::decode_zie_dual(const Json& j) const
{
    ZieDualElement x;
    x.ground = decode_set(field(j, "ground"));
    try {
        x.basis = parse_dual_basis(field(j, "basis").get<std::string>());
    } catch (const Json::exception&) {
        malformed("basis must be a string");
    } catch (const DomainError& e) {
        throw FormatError(e.what());
    }
    for (const auto& t : array(field(j, "terms"), "terms")) {
        auto k = decode_composition(field(t, "key"));
        if (k.ground() != x.ground)
            throw DomainError("term key does not cover the element's ground");
        if (!is_based(k))
            throw DomainError("Zie* keys must have the basepoint in their first lump");
        x.add(k, decode_rational(field(t, "coeff")));
    }
    return x;
}

Json JsonCodec::encode(const ZieDualTensor& x) const
{
    Json terms = Json::array();
    for (const auto& [k, c] : x.terms)
        terms.push_back({{"left", encode(k.first)}, {"right", encode(k.second)}, {"coeff", stein::encode(c)}});
    return {{"left", encode_set(x.left)}, {"right", encode_set(x.right)}, {"basis", "p"}, {"terms", terms}};
}

Json JsonCodec::encode(const PwcFunction& f) const
{
    Json faces = Json::array();
    for (const auto& [k, v] : f.coeffs)
        faces.push_back({{"face", encode(k)}, {"value", stein::encode(v)}});
    return {{"ground", encode_set(f.ground)}, {"faces", faces}};
}

PwcFunction JsonCodec::decode_pwc(const Json& j) const
{
    PwcFunction f{decode_set(field(j, "ground")), {}};
    for (const auto& t : array(field(j, "faces"), "faces")) {
        auto k = decode_composition(field(t, "face"));
        if (k.ground() != f.ground)
            throw DomainError("face does not cover the function's ground");
        f.set(k, decode_rational(field(t, "value")));
    }
    return f;
}

Json JsonCodec::encode(const ChamberFunctional& f) const
{
    auto a = adjoint_arrangement(f.ground);
    Json values = Json::object();
    for (int id = 0; id < a.chamber_count(); ++id)
        values[a.chambers()[id].signs] = stein::encode(f.values.at(id));
    return {{"ground", encode_set(f.ground)}, {"values", values}};
}

ChamberFunctional JsonCodec::decode_functional(const Json& j) const
{
    Mask ground = decode_set(field(j, "ground"));
    auto a = adjoint_arrangement(ground);
    ChamberFunctional f{ground, std::vector<Rational>(a.chamber_count(), 0)};
    const Json& values = field(j, "values");
    if (!values.is_object())
        malformed("values must map sign strings to rationals");
    for (const auto& [signs, v] : values.items()) {
        int id = a.id_of(signs);
        if (id < 0)
            throw DomainError("\"" + signs + "\" is not a chamber of the adjoint arrangement");
        f.values[id] = decode_rational(v);
    }
    return f;
}

Json JsonCodec::encode(const ChamberCombination& e) const
{
    auto a = adjoint_arrangement(e.ground);
    Json coeffs = Json::object();
    for (int id = 0; id < a.chamber_count(); ++id)
        if (e.coeffs.at(id) != 0)
            coeffs[a.chambers()[id].signs] = stein::encode(e.coeffs[id]);
    return {{"ground", encode_set(e.ground)}, {"coeffs", coeffs}};
}

Json JsonCodec::encode(const ChamberTensor& d) const
{
    auto as = adjoint_arrangement(d.left);
    auto at = adjoint_arrangement(d.right);
    Json values = Json::array();
    for (std::size_t i = 0; i < d.values.size(); ++i)
        for (std::size_t k = 0; k < d.values[i].size(); ++k)
            if (d.values[i][k] != 0)
                values.push_back({{"left", as.chambers()[i].signs},
                                  {"right", at.chambers()[k].signs},
                                  {"value", stein::encode(d.values[i][k])}});
    return {{"left", encode_set(d.left)}, {"right", encode_set(d.right)}, {"values", values}};
}

Json JsonCodec::encode(const SteinmannRelation& r, Mask ground) const
{
    auto a = adjoint_arrangement(ground);
    Json terms = Json::array();
    for (auto [c, s] : r.terms)
        terms.push_back({{"chamber", a.chambers()[c].signs}, {"sign", s}});
    return {{"hyperplanes", Json::array({encode(a.hyperplanes()[r.hyperplane_a]), encode(a.hyperplanes()[r.hyperplane_b])})},
            {"terms", terms}};
}

Json encode(const VerifyReport& r)
{
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json one = {{"name", c.name}, {"cases", c.cases}, {"failures", c.failures}};
        if (c.failures)
            one["first_failure"] = c.first_failure;
        checks.push_back(one);
    }
    return {{"suite", r.suite}, {"n", r.n}, {"ok", r.ok()}, {"checks", checks}};
}

} // namespace stein
