#include "stein/adjoint.hpp"

#include "stein/error.hpp"
#include "stein/regions.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <unistd.h>

namespace stein {

struct AdjointArrangement::Data {
    int n = 0;
    std::vector<AdjointChamber> chambers;
    std::map<std::string, int> ids;
};

namespace {

std::recursive_mutex& registry_mutex()
{
    static std::recursive_mutex m;
    return m;
}

EnumerationSettings& settings_ref()
{
    static EnumerationSettings s;
    return s;
}

const char* kCacheFormat = "stein-chambers/1";

/// Linear form of <h, lambda_S> in the coordinates x_1..x_{n-1}, with
/// h = (x_1, ..., x_{n-1}, -sum x) over atom positions.
Vector hyperplane_form(int n, Mask s_positions)
{
    Vector f(n - 1, 0);
    for (int i = 0; i < n - 1; ++i)
        f[i] = contains(s_positions, i) ? 1 : 0;
    if (contains(s_positions, n - 1))
        for (auto& v : f)
            v -= 1;
    return f;
}

Vector lift(const Vector& x)
{
    Vector h = x;
    Rational total = 0;
    for (const auto& v : x)
        total += v;
    h.push_back(-total);
    return h;
}

/// Maps a subset of `ground` to the corresponding subset of positions 0..n-1.
Mask to_positions(Mask ground, Mask s)
{
    Mask out = 0;
    int pos = 0;
    for (int a : atoms_of(ground)) {
        if (contains(s, a))
            out |= atom_mask(pos);
        ++pos;
    }
    return out;
}

std::string cache_path(int n)
{
    const auto& dir = settings_ref().cache_dir;
    if (dir.empty())
        return {};
    return (std::filesystem::path(dir) / ("adjoint-n" + std::to_string(n) + ".jsonl")).string();
}

nlohmann::json header_json(int n)
{
    nlohmann::json hs = nlohmann::json::array();
    for (const auto& b : adjoint_hyperplanes(range_mask(n))) {
        nlohmann::json s = nlohmann::json::array();
        for (int a : atoms_of(b.s))
            s.push_back(std::to_string(a + 1));
        hs.push_back(s);
    }
    return {{"format", kCacheFormat}, {"n", n}, {"hyperplanes", hs}};
}

std::string signs_of_point(int n, const std::vector<TwoBlock>& hyperplanes, const Vector& h)
{
    std::string s;
    for (const auto& b : hyperplanes) {
        int v = sgn(subset_sum(range_mask(n), h, b.s));
        s += v > 0 ? '+' : v < 0 ? '-' : '0';
    }
    return s;
}

std::shared_ptr<AdjointArrangement::Data> try_load(int n)
{
    std::string path = cache_path(n);
    if (path.empty())
        return nullptr;
    std::ifstream in(path);
    if (!in)
        return nullptr;
    auto data = std::make_shared<AdjointArrangement::Data>();
    data->n = n;
    auto hyperplanes = adjoint_hyperplanes(range_mask(n));
    try {
        std::string line;
        if (!std::getline(in, line) || nlohmann::json::parse(line) != header_json(n))
            return nullptr;
        while (std::getline(in, line)) {
            if (line.empty())
                continue;
            auto j = nlohmann::json::parse(line);
            AdjointChamber c;
            c.signs = j.at("signs").get<std::string>();
            for (const auto& v : j.at("witness"))
                c.witness.push_back(parse_rational(v.get<std::string>()));
            if (static_cast<int>(c.witness.size()) != n)
                return nullptr;
            Rational total = 0;
            for (const auto& v : c.witness)
                total += v;
            if (total != 0 || signs_of_point(n, hyperplanes, c.witness) != c.signs)
                return nullptr;
            if (!data->chambers.empty() && !(data->chambers.back().signs < c.signs))
                return nullptr;
            data->ids.emplace(c.signs, static_cast<int>(data->chambers.size()));
            data->chambers.push_back(std::move(c));
        }
    } catch (const std::exception&) {
        return nullptr;
    }
    if (data->chambers.empty() && n > 0)
        return nullptr;
    return data;
}

void store(const AdjointArrangement::Data& data)
{
    std::string path = cache_path(data.n);
    if (path.empty())
        return;
    std::filesystem::create_directories(std::filesystem::path(path).parent_path());
    std::string tmp = path + ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::trunc);
        out << header_json(data.n).dump() << '\n';
        for (const auto& c : data.chambers) {
            nlohmann::json w = nlohmann::json::array();
            for (const auto& v : c.witness)
                w.push_back(to_string(v));
            out << nlohmann::json{{"signs", c.signs}, {"witness", w}}.dump() << '\n';
        }
        if (!out)
            throw ResourceError("cannot write chamber cache " + tmp);
    }
    std::filesystem::rename(tmp, path);
}

std::shared_ptr<AdjointArrangement::Data> compute(int n)
{
    auto data = std::make_shared<AdjointArrangement::Data>();
    data->n = n;
    if (n == 0)
        return data;
    if (n == 1) {
        data->chambers.push_back({"", Vector{Rational(0)}});
        data->ids.emplace("", 0);
        return data;
    }
    auto hyperplanes = adjoint_hyperplanes(range_mask(n));
    std::vector<Vector> forms;
    for (const auto& b : hyperplanes)
        forms.push_back(hyperplane_form(n, b.s));
    // generic seed: 3^i recentred
    Vector seed(n);
    Rational p = 1;
    for (int i = 0; i < n; ++i) {
        seed[i] = p;
        p *= 3;
    }
    seed = recentre(seed);
    std::optional<Vector> x0 = Vector(seed.begin(), seed.end() - 1);
    for (const auto& f : forms)
        if (dot(f, *x0) == 0)
            x0.reset();
    for (auto& r : enumerate_regions(forms, n - 1, x0)) {
        data->ids.emplace(r.signs, static_cast<int>(data->chambers.size()));
        data->chambers.push_back({std::move(r.signs), lift(r.point)});
    }
    return data;
}

std::shared_ptr<const AdjointArrangement::Data> chamber_data(int n)
{
    std::lock_guard lock(registry_mutex());
    static std::map<int, std::shared_ptr<const AdjointArrangement::Data>> registry;
    if (n > settings_ref().max_n)
        throw ResourceError("ground of size " + std::to_string(n) + " exceeds the enumeration bound "
                            + std::to_string(settings_ref().max_n));
    auto it = registry.find(n);
    if (it != registry.end())
        return it->second;
    auto data = try_load(n);
    if (!data) {
        data = compute(n);
        if (n >= 2)
            store(*data);
    }
    registry.emplace(n, data);
    return data;
}

int parity(int k) { return k % 2 == 0 ? 1 : -1; }

} // namespace

std::vector<TwoBlock> adjoint_hyperplanes(Mask ground)
{
    std::vector<TwoBlock> out;
    if (popcount(ground) < 2)
        return out;
    int i0 = lowest_atom(ground);
    for_each_subset(ground, [&](Mask s) {
        if (contains(s, i0) && s != ground)
            out.push_back(TwoBlock{s, ground & ~s});
    });
    std::sort(out.begin(), out.end(), [](const TwoBlock& a, const TwoBlock& b) { return lex_less(a.s, b.s); });
    return out;
}

void configure_enumeration(const EnumerationSettings& settings)
{
    std::lock_guard lock(registry_mutex());
    settings_ref() = settings;
}

EnumerationSettings enumeration_settings()
{
    std::lock_guard lock(registry_mutex());
    return settings_ref();
}

AdjointArrangement adjoint_arrangement(Mask ground)
{
    AdjointArrangement a;
    a.ground_ = ground;
    a.hyperplanes_ = adjoint_hyperplanes(ground);
    for (std::size_t i = 0; i < a.hyperplanes_.size(); ++i)
        a.index_.emplace(a.hyperplanes_[i].s, static_cast<int>(i));
    a.data_ = chamber_data(popcount(ground));
    return a;
}

const std::vector<AdjointChamber>& AdjointArrangement::chambers() const
{
    return data_->chambers;
}

int AdjointArrangement::id_of(const std::string& signs) const
{
    auto it = data_->ids.find(signs);
    return it == data_->ids.end() ? -1 : it->second;
}

std::string AdjointArrangement::signature_string(const Vector& h) const
{
    if (static_cast<int>(h.size()) != size())
        throw DomainError("point dimension does not match the ground");
    std::string s;
    for (const auto& b : hyperplanes_) {
        int v = sgn(subset_sum(ground_, h, b.s));
        s += v > 0 ? '+' : v < 0 ? '-' : '0';
    }
    return s;
}

int AdjointArrangement::locate(const Vector& h) const
{
    std::string s = signature_string(h);
    if (s.find('0') != std::string::npos)
        throw DomainError("point lies on an adjoint hyperplane");
    int id = id_of(s);
    if (id < 0)
        throw std::logic_error("located sign vector missing from the chamber list");
    return id;
}

int AdjointArrangement::hyperplane_of(Mask s) const
{
    if (!contains(s, lowest_atom(ground_)))
        s = ground_ & ~s;
    auto it = index_.find(s);
    if (it == index_.end())
        throw DomainError("not a proper split of the ground");
    return it->second;
}

int AdjointArrangement::side(int id, Mask s) const
{
    int h = hyperplane_of(s);
    int v = chambers().at(id).signs[h] == '+' ? 1 : -1;
    return contains(s, lowest_atom(ground_)) ? v : -v;
}

AdjointFamily AdjointArrangement::signature(int id) const
{
    AdjointFamily f{ground_, {}};
    const auto& signs = chambers().at(id).signs;
    for (std::size_t i = 0; i < hyperplanes_.size(); ++i)
        f.members.insert(signs[i] == '+' ? hyperplanes_[i] : hyperplanes_[i].swapped());
    return f;
}

// ---------------------------------------------------------------- functionals

ChamberFunctional& ChamberFunctional::operator+=(const ChamberFunctional& other)
{
    if (ground != other.ground || values.size() != other.values.size())
        throw DomainError("functionals over different grounds");
    for (std::size_t i = 0; i < values.size(); ++i)
        values[i] += other.values[i];
    return *this;
}

ChamberFunctional& ChamberFunctional::operator*=(const Rational& s)
{
    for (auto& v : values)
        v *= s;
    return *this;
}

bool ChamberFunctional::is_zero() const
{
    return std::all_of(values.begin(), values.end(), [](const Rational& v) { return v == 0; });
}

ChamberFunctional operator+(ChamberFunctional a, const ChamberFunctional& b) { return a += b; }
ChamberFunctional operator-(ChamberFunctional a, const ChamberFunctional& b) { return a += Rational(-1) * b; }
ChamberFunctional operator*(const Rational& s, ChamberFunctional a) { return a *= s; }

Rational evaluate(const ChamberFunctional& f, const ChamberCombination& e)
{
    if (f.ground != e.ground || f.values.size() != e.coeffs.size())
        throw DomainError("evaluation over different grounds");
    Rational total = 0;
    for (std::size_t i = 0; i < f.values.size(); ++i)
        if (e.coeffs[i] != 0)
            total += f.values[i] * e.coeffs[i];
    return total;
}

namespace {

ChamberFunctional zero_functional(const AdjointArrangement& a)
{
    return ChamberFunctional{a.ground(), std::vector<Rational>(a.chamber_count(), 0)};
}

ChamberFunctional c_functional_on(const AdjointArrangement& a, const Preposet& p)
{
    ChamberFunctional f = zero_functional(a);
    auto fam = coprobes(p);
    std::vector<std::pair<int, int>> needs; // (hyperplane, required sign)
    int i0 = lowest_atom(a.ground());
    for (const auto& b : fam.members)
        needs.emplace_back(a.hyperplane_of(b.s), contains(b.s, i0) ? '+' : '-');
    const auto& chambers = a.chambers();
    for (std::size_t c = 0; c < chambers.size(); ++c) {
        bool ok = true;
        for (auto [h, s] : needs) {
            if (chambers[c].signs[h] != s) {
                ok = false;
                break;
            }
        }
        if (ok)
            f.values[c] = 1;
    }
    return f;
}

std::vector<Vector> coroots(Mask ground, const Preposet& p)
{
    std::vector<Vector> gens;
    for (auto [a, b] : p.pairs())
        gens.push_back(coroot_point(ground, a, b).coords);
    return gens;
}

} // namespace

ChamberFunctional c_functional(const Preposet& p)
{
    return c_functional_on(adjoint_arrangement(p.ground()), p);
}

ChamberFunctional c_functional(const SetComposition& f)
{
    return c_functional(preposet_of(f));
}

ChamberFunctional m_functional(const SetComposition& f)
{
    auto a = adjoint_arrangement(f.ground());
    ChamberFunctional out = zero_functional(a);
    for (const auto& g : coarsenings(f))
        out += Rational(parity(f.length() - g.length())) * c_functional_on(a, preposet_of(g));
    return out;
}

ChamberFunctional p_functional(const SetComposition& f)
{
    // P_F = sum over coarsenings G of M_G / (F/G)!
    auto a = adjoint_arrangement(f.ground());
    ChamberFunctional out = zero_functional(a);
    for (const auto& g : coarsenings(f))
        out += (1 / Rational(quotient_factors(f, g).factorial)) * m_functional(g);
    return out;
}

ChamberFunctional functional_of(const BasisElement& x)
{
    if (!in_dual_algebra(x.basis))
        throw DomainError("chamber functionals come from Sigma* elements");
    BasisElement c = change_basis(x, Basis::C);
    auto a = adjoint_arrangement(x.ground);
    ChamberFunctional out = zero_functional(a);
    for (const auto& [k, v] : c.terms)
        out += v * c_functional_on(a, preposet_of(k));
    for (const auto& [p, v] : c.cone_terms)
        out += v * c_functional_on(a, p);
    return out;
}

ChamberFunctional functional_of(const ZieDualElement& x)
{
    auto a = adjoint_arrangement(x.ground);
    ChamberFunctional out = zero_functional(a);
    ZieDualElement c = change_basis(x, DualBasis::c);
    for (const auto& [k, v] : c.terms)
        out += v * c_functional_on(a, preposet_of(k));
    return out;
}

ChamberFunctional m_functional_by_cones(const SetComposition& f)
{
    auto a = adjoint_arrangement(f.ground());
    ChamberFunctional out = zero_functional(a);
    auto gens = coroots(f.ground(), preposet_of(opposite(f)));
    int sign = parity(f.length() - 1);
    const auto& chambers = a.chambers();
    for (std::size_t c = 0; c < chambers.size(); ++c) {
        const auto& h = chambers[c].witness;
        bool member;
        if (gens.empty())
            member = std::all_of(h.begin(), h.end(), [](const Rational& v) { return v == 0; });
        else
            member = cone_member(h, gens, true).has_value();
        if (member)
            out.values[c] = sign;
    }
    return out;
}

ChamberFunctional dual_cone_indicator(const Preposet& p)
{
    auto a = adjoint_arrangement(p.ground());
    ChamberFunctional out = zero_functional(a);
    auto gens = coroots(p.ground(), p);
    const auto& chambers = a.chambers();
    for (std::size_t c = 0; c < chambers.size(); ++c)
        if (cone_member(chambers[c].witness, gens, false))
            out.values[c] = 1;
    return out;
}

// ------------------------------------------------------------------ Steinmann

namespace {

struct SteinData {
    std::vector<SteinmannRelation> relations;
    int rank = -1;
    // coordinates in the c basis: rows chosen so the square block is invertible
    bool coords_ready = false;
    std::vector<SetComposition> keys;
    std::vector<int> rows;
    Matrix inverse;
    std::vector<ChamberFunctional> basis; // c_F for F in keys
    std::optional<ChamberCombination> eulerian;
};

SteinData& stein_data(Mask ground)
{
    static std::map<Mask, SteinData> cache;
    return cache[ground];
}

Vector coweight_from_positions(const AdjointArrangement& a, const Vector& x)
{
    (void)a;
    return lift(x);
}

std::vector<SteinmannRelation> compute_relations(const AdjointArrangement& a)
{
    std::vector<SteinmannRelation> out;
    const int n = a.size();
    if (n < 4)
        return out;
    const auto& hs = a.hyperplanes();
    std::vector<Vector> forms;
    for (const auto& b : hs)
        forms.push_back(hyperplane_form(n, to_positions(a.ground(), b.s)));
    const int m = static_cast<int>(forms.size());
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            bool exact_two = true;
            for (int k = 0; k < m && exact_two; ++k)
                if (k != i && k != j && rank(Matrix{forms[i], forms[j], forms[k]}) == 2)
                    exact_two = false;
            if (!exact_two)
                continue;
            Matrix kb = kernel_basis(Matrix{forms[i], forms[j]}, n - 1);
            const int d = static_cast<int>(kb.size());
            std::vector<Vector> restricted;
            for (int k = 0; k < m; ++k) {
                Vector g(d);
                for (int c = 0; c < d; ++c)
                    g[c] = dot(forms[k], kb[c]);
                restricted.push_back(std::move(g));
            }
            auto w1 = solve(Matrix{forms[i], forms[j]}, Vector{Rational(1), Rational(0)}, n - 1);
            auto w2 = solve(Matrix{forms[i], forms[j]}, Vector{Rational(0), Rational(1)}, n - 1);
            if (!w1 || !w2)
                throw std::logic_error("independent hyperplanes admit no transversal directions");
            for (const auto& r : enumerate_regions(restricted, d)) {
                Vector x0(n - 1, 0);
                for (int c = 0; c < d; ++c)
                    for (int q = 0; q < n - 1; ++q)
                        x0[q] += r.point[c] * kb[c][q];
                std::optional<Rational> eps;
                for (int k = 0; k < m; ++k) {
                    if (k == i || k == j)
                        continue;
                    Rational v = abs(dot(forms[k], x0));
                    Rational bound = v / (2 * (abs(dot(forms[k], *w1)) + abs(dot(forms[k], *w2))) + 1);
                    if (!eps || bound < *eps)
                        eps = bound;
                }
                Rational e = eps.value_or(Rational(1));
                SteinmannRelation rel;
                rel.hyperplane_a = i;
                rel.hyperplane_b = j;
                const int sa[4] = {1, 1, -1, -1};
                const int sb[4] = {1, -1, 1, -1};
                const int coeff[4] = {1, -1, -1, 1};
                for (int q = 0; q < 4; ++q) {
                    Vector x = x0;
                    for (int c = 0; c < n - 1; ++c)
                        x[c] += e * (sa[q] * (*w1)[c] + sb[q] * (*w2)[c]);
                    rel.terms[q] = {a.locate(coweight_from_positions(a, x)), coeff[q]};
                }
                out.push_back(rel);
            }
        }
    }
    return out;
}

void prepare_coords(Mask ground, SteinData& sd)
{
    if (sd.coords_ready)
        return;
    auto a = adjoint_arrangement(ground);
    sd.keys = based_compositions(ground);
    for (const auto& k : sd.keys)
        sd.basis.push_back(c_functional_on(a, preposet_of(k)));
    const int dim = static_cast<int>(sd.keys.size());
    SparseEchelon ech;
    for (int c = 0; c < a.chamber_count() && ech.rank() < dim; ++c) {
        SparseEchelon::Row row;
        for (int k = 0; k < dim; ++k)
            if (sd.basis[k].values[c] != 0)
                row[k] = sd.basis[k].values[c];
        if (ech.insert(row))
            sd.rows.push_back(c);
    }
    if (ech.rank() != dim)
        throw std::logic_error("cone functionals of based compositions are dependent");
    Matrix block(dim, Vector(dim));
    for (int r = 0; r < dim; ++r)
        for (int k = 0; k < dim; ++k)
            block[r][k] = sd.basis[k].values[sd.rows[r]];
    auto inv = inverse(block);
    if (!inv)
        throw std::logic_error("selected block is singular");
    sd.inverse = std::move(*inv);
    sd.coords_ready = true;
}

} // namespace

const std::vector<SteinmannRelation>& steinmann_relations(Mask ground)
{
    std::lock_guard lock(registry_mutex());
    auto& sd = stein_data(ground);
    if (sd.rank < 0) {
        sd.relations = compute_relations(adjoint_arrangement(ground));
        SparseEchelon ech;
        for (const auto& rel : sd.relations) {
            SparseEchelon::Row row;
            for (auto [c, s] : rel.terms)
                row[c] += s;
            for (auto it = row.begin(); it != row.end();)
                it = it->second == 0 ? row.erase(it) : std::next(it);
            ech.insert(row);
        }
        sd.rank = ech.rank();
    }
    return sd.relations;
}

bool is_steinmann(const ChamberFunctional& f)
{
    for (const auto& rel : steinmann_relations(f.ground)) {
        Rational total = 0;
        for (auto [c, s] : rel.terms)
            total += s * f.values.at(c);
        if (total != 0)
            return false;
    }
    return true;
}

int steinmann_rank(Mask ground)
{
    steinmann_relations(ground);
    std::lock_guard lock(registry_mutex());
    return stein_data(ground).rank;
}

int stein_quotient_dim(Mask ground)
{
    return adjoint_arrangement(ground).chamber_count() - steinmann_rank(ground);
}

std::optional<ZieDualElement> steinmann_basis_coords(const ChamberFunctional& f)
{
    std::lock_guard lock(registry_mutex());
    auto& sd = stein_data(f.ground);
    prepare_coords(f.ground, sd);
    if (f.values.size() != sd.basis.front().values.size())
        throw DomainError("functional does not match the chamber list");
    const int dim = static_cast<int>(sd.keys.size());
    ZieDualElement out{f.ground, DualBasis::c, {}};
    Vector a(dim, 0);
    for (int k = 0; k < dim; ++k)
        for (int r = 0; r < dim; ++r)
            if (sd.inverse[k][r] != 0)
                a[k] += sd.inverse[k][r] * f.values[sd.rows[r]];
    ChamberFunctional check{f.ground, std::vector<Rational>(f.values.size(), 0)};
    for (int k = 0; k < dim; ++k) {
        if (a[k] == 0)
            continue;
        check += a[k] * sd.basis[k];
        out.add(sd.keys[k], a[k]);
    }
    if (check != f)
        return std::nullopt;
    return out;
}

// ----------------------------------------------------------------- derivative

ChamberTensor derivative(const ChamberFunctional& f, Mask s, Mask t, int seed)
{
    if (s == 0 || t == 0 || (s & t) || (s | t) != f.ground)
        throw DomainError("derivative: (S,T) must split the ground into non-empty parts");
    if (!is_steinmann(f))
        throw DomainError("derivative: functional violates a Steinmann relation");
    auto a = adjoint_arrangement(f.ground);
    auto as = adjoint_arrangement(s);
    auto at = adjoint_arrangement(t);
    const Mask ground = f.ground;
    const int split = a.hyperplane_of(s);
    const auto& hs = a.hyperplanes();

    // w = 1_S/|S| - 1_T/|T|, so <w, lambda_S> = 1
    Vector w;
    for (int atom : atoms_of(ground))
        w.push_back(contains(s, atom) ? Rational(1) / popcount(s) : Rational(-1) / popcount(t));

    ChamberTensor out{s, t, {}};
    out.values.assign(as.chamber_count(), std::vector<Rational>(at.chamber_count(), 0));
    for (int cs = 0; cs < as.chamber_count(); ++cs) {
        for (int ct = 0; ct < at.chamber_count(); ++ct) {
            const auto& hs_w = as.chambers()[cs].witness;
            const auto& ht_w = at.chambers()[ct].witness;
            Vector h;
            for (long scale = 1 + 3L * seed;; ++scale) {
                h.clear();
                int ps = 0, pt = 0;
                for (int atom : atoms_of(ground))
                    h.push_back(contains(s, atom) ? hs_w[ps++] : scale * ht_w[pt++]);
                std::string sig = a.signature_string(h);
                bool strict = true;
                for (std::size_t k = 0; k < sig.size(); ++k)
                    if (static_cast<int>(k) != split && sig[k] == '0')
                        strict = false;
                if (sig[split] != '0')
                    throw std::logic_error("face point off the splitting hyperplane");
                if (strict)
                    break;
            }
            std::optional<Rational> eps;
            for (std::size_t k = 0; k < hs.size(); ++k) {
                if (static_cast<int>(k) == split)
                    continue;
                Rational v = abs(subset_sum(ground, h, hs[k].s));
                Rational bound = v / (2 * abs(subset_sum(ground, w, hs[k].s)) + 1);
                if (!eps || bound < *eps)
                    eps = bound;
            }
            Rational e = eps.value_or(Rational(1)) / (1 + seed);
            Vector plus = h, minus = h;
            for (std::size_t q = 0; q < h.size(); ++q) {
                plus[q] += e * w[q];
                minus[q] -= e * w[q];
            }
            out.values[cs][ct] = f.values[a.locate(plus)] - f.values[a.locate(minus)];
        }
    }
    return out;
}

ChamberTensor derivative_of_c(const SetComposition& f, Mask s, Mask t)
{
    if (s == 0 || t == 0 || (s & t) || (s | t) != f.ground())
        throw DomainError("derivative: (S,T) must split the ground into non-empty parts");
    auto as = adjoint_arrangement(s);
    auto at = adjoint_arrangement(t);
    ChamberTensor out{s, t, {}};
    out.values.assign(as.chamber_count(), std::vector<Rational>(at.chamber_count(), 0));
    int sign = 0;
    if (is_initial_segment(f, s))
        sign = 1;
    else if (is_initial_segment(f, t))
        sign = -1;
    if (sign == 0)
        return out;
    auto left = c_functional_on(as, preposet_of(restrict(f, s)));
    auto right = c_functional_on(at, preposet_of(restrict(f, t)));
    for (int i = 0; i < as.chamber_count(); ++i)
        for (int j = 0; j < at.chamber_count(); ++j)
            out.values[i][j] = sign * left.values[i] * right.values[j];
    return out;
}

// ------------------------------------------------------------------- Eulerian

ChamberCombination eulerian_element(Mask ground)
{
    if (ground == 0)
        throw DomainError("Eulerian element needs a non-empty ground");
    {
        std::lock_guard lock(registry_mutex());
        auto& sd = stein_data(ground);
        if (sd.eulerian)
            return *sd.eulerian;
    }
    auto a = adjoint_arrangement(ground);
    auto keys = based_compositions(ground);
    Matrix rows;
    Vector rhs;
    for (const auto& k : keys) {
        rows.push_back(p_functional(k).values);
        rhs.push_back(k.length() == 1 ? 1 : 0);
    }
    auto x = solve(rows, rhs, a.chamber_count());
    if (!x)
        throw std::logic_error("Eulerian system is inconsistent");
    ChamberCombination e{ground, std::move(*x)};
    std::lock_guard lock(registry_mutex());
    stein_data(ground).eulerian = e;
    return e;
}

namespace {

ChamberFunctional contract_right(const ChamberTensor& d, const ChamberCombination& e)
{
    auto a = adjoint_arrangement(d.left);
    ChamberFunctional out = zero_functional(a);
    for (std::size_t i = 0; i < d.values.size(); ++i)
        for (std::size_t j = 0; j < e.coeffs.size(); ++j)
            if (e.coeffs[j] != 0)
                out.values[i] += d.values[i][j] * e.coeffs[j];
    return out;
}

void comb_rec(const ChamberFunctional& g, const std::vector<Mask>& tail, ZieDualElement& out)
{
    SetComposition key{{g.ground}};
    for (auto it = tail.rbegin(); it != tail.rend(); ++it)
        key.lumps.push_back(*it);
    out.add(key, evaluate(g, eulerian_element(g.ground)));
    int i0 = lowest_atom(g.ground);
    Mask rest = g.ground & ~atom_mask(i0);
    for_each_subset(rest, [&](Mask l) {
        if (l == 0)
            return;
        auto d = derivative(g, g.ground & ~l, l);
        auto next = contract_right(d, eulerian_element(l));
        auto t2 = tail;
        t2.push_back(l);
        comb_rec(next, t2, out);
    });
}

} // namespace

ZieDualElement comb_coefficients(const ChamberFunctional& f)
{
    if (!is_steinmann(f))
        throw DomainError("comb coefficients need a Steinmann functional");
    ZieDualElement out{f.ground, DualBasis::p, {}};
    comb_rec(f, {}, out);
    return out;
}

ChamberFunctional reconstruct(const ZieDualElement& coeffs)
{
    return functional_of(coeffs);
}

std::optional<ZieDualTensor> tensor_coords(const ChamberTensor& d)
{
    auto as = adjoint_arrangement(d.left);
    auto at = adjoint_arrangement(d.right);
    // coordinates of each column functional over S
    std::vector<ZieDualElement> cols;
    for (int j = 0; j < at.chamber_count(); ++j) {
        ChamberFunctional g = zero_functional(as);
        for (int i = 0; i < as.chamber_count(); ++i)
            g.values[i] = d.values[i][j];
        auto c = steinmann_basis_coords(g);
        if (!c)
            return std::nullopt;
        cols.push_back(change_basis(*c, DualBasis::p));
    }
    ZieDualTensor out{d.left, d.right, {}};
    for (const auto& ks : based_compositions(d.left)) {
        ChamberFunctional g = zero_functional(at);
        for (int j = 0; j < at.chamber_count(); ++j) {
            auto it = cols[j].terms.find(ks);
            if (it != cols[j].terms.end())
                g.values[j] = it->second;
        }
        if (g.is_zero())
            continue;
        auto c = steinmann_basis_coords(g);
        if (!c)
            return std::nullopt;
        for (const auto& [kt, v] : change_basis(*c, DualBasis::p).terms)
            out.add(ks, kt, v);
    }
    return out;
}

// --------------------------------------------------------------------- Dynkin

BasisElement dynkin(Mask ground, int chamber)
{
    auto a = adjoint_arrangement(ground);
    if (chamber < 0 || chamber >= a.chamber_count())
        throw DomainError("no such chamber");
    auto all = enumerate_compositions(ground);
    const auto& signs = a.chambers()[chamber].signs;
    int i0 = lowest_atom(ground);
    std::map<SetComposition, int> cvals;
    for (const auto& g : all) {
        bool ok = true;
        for (const auto& b : coprobes(preposet_of(g)).members) {
            char need = contains(b.s, i0) ? '+' : '-';
            if (signs[a.hyperplane_of(b.s)] != need) {
                ok = false;
                break;
            }
        }
        cvals[g] = ok ? 1 : 0;
    }
    BasisElement out(ground, Basis::H);
    for (const auto& f : all) {
        Rational m = 0;
        for (const auto& g : coarsenings(f))
            m += parity(f.length() - g.length()) * cvals[g];
        out.add(f, m);
    }
    return out;
}

BasisElement egs_expansion(Mask ground, int chamber)
{
    auto a = adjoint_arrangement(ground);
    if (chamber < 0 || chamber >= a.chamber_count())
        throw DomainError("no such chamber");
    SetComposition whole{{ground}};
    BasisElement acc = BasisElement::vector(Basis::H, whole);
    for (const auto& b : a.signature(chamber).members) {
        BasisElement factor = BasisElement::vector(Basis::H, whole);
        factor.add(SetComposition{{b.t, b.s}}, -1);
        acc = tits_h(acc, factor);
    }
    return acc;
}

std::vector<int> chamber_permutation(Mask ground, const Relabeling& r)
{
    if (r.old_ground() != ground || r.new_ground() != ground)
        throw DomainError("relabeling must permute the ground");
    auto a = adjoint_arrangement(ground);
    auto atoms = atoms_of(ground);
    std::vector<int> pos(kMaxAtoms, -1);
    for (std::size_t i = 0; i < atoms.size(); ++i)
        pos[atoms[i]] = static_cast<int>(i);
    std::vector<int> out;
    for (const auto& c : a.chambers()) {
        Vector h(atoms.size());
        for (std::size_t i = 0; i < atoms.size(); ++i)
            h[pos[r.new_of(atoms[i])]] = c.witness[i];
        out.push_back(a.locate(h));
    }
    return out;
}

std::vector<ChamberCombination> uniform_eulerian_orbit_solutions(Mask ground, int total)
{
    auto a = adjoint_arrangement(ground);
    const int count = a.chamber_count();
    auto atoms = atoms_of(ground);
    // orbits under all permutations of the atoms
    std::vector<int> orbit(count, -1);
    std::vector<std::vector<int>> orbits;
    std::vector<std::vector<int>> perms;
    std::vector<int> p(atoms.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        p[i] = static_cast<int>(i);
    do {
        std::vector<std::pair<int, int>> pairs;
        for (std::size_t i = 0; i < p.size(); ++i)
            pairs.emplace_back(atoms[p[i]], atoms[i]);
        perms.push_back(chamber_permutation(ground, Relabeling::from_pairs(pairs)));
    } while (std::next_permutation(p.begin(), p.end()));
    for (int c = 0; c < count; ++c) {
        if (orbit[c] >= 0)
            continue;
        std::vector<int> members;
        for (const auto& perm : perms) {
            int d = perm[c];
            if (orbit[d] < 0) {
                orbit[d] = static_cast<int>(orbits.size());
                members.push_back(d);
            }
        }
        std::sort(members.begin(), members.end());
        orbits.push_back(members);
    }
    auto keys = based_compositions(ground);
    std::vector<ChamberFunctional> tests;
    for (const auto& k : keys)
        tests.push_back(p_functional(k));
    std::vector<ChamberCombination> out;
    const std::size_t o = orbits.size();
    if (o > 24)
        throw ResourceError("too many orbits to search");
    for (std::uint32_t bits = 1; bits < (1U << o); ++bits) {
        int size = 0;
        for (std::size_t i = 0; i < o; ++i)
            if (bits >> i & 1)
                size += static_cast<int>(orbits[i].size());
        if (size != total)
            continue;
        ChamberCombination e{ground, std::vector<Rational>(count, 0)};
        for (std::size_t i = 0; i < o; ++i)
            if (bits >> i & 1)
                for (int c : orbits[i])
                    e.coeffs[c] = Rational(1) / total;
        bool ok = true;
        for (std::size_t k = 0; k < keys.size() && ok; ++k)
            ok = evaluate(tests[k], e) == (keys[k].length() == 1 ? 1 : 0);
        if (ok)
            out.push_back(std::move(e));
    }
    return out;
}

} // namespace stein
