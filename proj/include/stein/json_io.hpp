#pragma once

#include "stein/adjoint.hpp"
#include "stein/braid.hpp"
#include "stein/combinatorics.hpp"
#include "stein/preposet.hpp"
#include "stein/sigma.hpp"
#include "stein/verify.hpp"
#include "stein/zie.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>

namespace stein {

using Json = nlohmann::json;

/// Structurally malformed JSON input (wrong shape, wrong type, bad number).
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parses text, raising FormatError instead of the library's parse error.
Json parse_json(std::string_view text);

/// Rationals travel as "p/q" strings; integers also accepted as JSON numbers.
Json encode(const Rational& r);
Rational decode_rational(const Json& j);

/// JSON encoders and decoders for everything the CLI exchanges. Atoms are
/// written as their labels; labels may be given as strings or integers.
///
/// Schemas:
///   set          ["1","3"]
///   composition  [["1","2"],["3"]]
///   preposet     {"ground":[...],"pairs":[["1","2"],...]}
///   two-block    {"S":[...],"T":[...]}
///   tree         a leaf is a set, a node is a pair [left, right]
///   element      {"ground","basis","terms":[{"key","coeff"}],"cones":[{"preposet","coeff"}]}
///   tensor       {"left","right","basis","terms":[{"left","right","coeff"}]}
///   zie          {"ground","terms":[{"tree","coeff"}]}
///   zie dual     {"ground","basis":"p|m|c","terms":[{"key","coeff"}]}
///   pwc          {"ground","faces":[{"face","value"}]}
///   functional   {"ground","values":{"<signs>":"p/q",...}}
class JsonCodec {
public:
    explicit JsonCodec(GroundSet labels);

    const GroundSet& labels() const { return labels_; }

    Json encode_set(Mask m) const;
    Mask decode_set(const Json& j) const;

    Json encode(const SetComposition& f) const;
    SetComposition decode_composition(const Json& j) const;

    Json encode(const SetPartition& p) const;

    Json encode(const Preposet& p) const;
    Preposet decode_preposet(const Json& j) const;

    Json encode(const TwoBlock& b) const;
    TwoBlock decode_two_block(const Json& j) const;

    Json encode(const Tree& t) const;
    Tree decode_tree(const Json& j) const;

    Json encode(const BasisElement& x) const;
    BasisElement decode_element(const Json& j) const;

    Json encode(const TensorElement& x) const;
    TensorElement decode_tensor(const Json& j) const;

    Json encode(const ZieElement& x) const;
    ZieElement decode_zie(const Json& j) const;

    Json encode(const ZieDualElement& x) const;
    ZieDualElement decode_zie_dual(const Json& j) const;

    Json encode(const ZieDualTensor& x) const;

    Json encode(const PwcFunction& f) const;
    PwcFunction decode_pwc(const Json& j) const;

    Json encode(const ChamberFunctional& f) const;
    ChamberFunctional decode_functional(const Json& j) const;

    Json encode(const ChamberCombination& e) const;
    Json encode(const ChamberTensor& d) const;
    Json encode(const SteinmannRelation& r, Mask ground) const;

private:
    int atom(const Json& label) const;
    GroundSet labels_;
};

Json encode(const VerifyReport& r);

} // namespace stein
