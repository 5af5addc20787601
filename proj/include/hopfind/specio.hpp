#pragma once

#include "hopfind/partial_dual.hpp"

#include <json.hpp>

namespace hopfind {

using json = nlohmann::ordered_json;

struct SpecError : std::runtime_error {
    explicit SpecError(const std::string& what) : std::runtime_error("spec error: " + what) {}
};

/// {"kind":"cyclic","n":4}, {"kind":"symmetric","n":3}, {"kind":"dihedral","n":4},
/// {"kind":"alternating","n":4}, {"kind":"quaternion8"}, {"kind":"trivial"},
/// {"kind":"direct_product","a":...,"b":...}, {"kind":"from_table","table":[[...]]}
FiniteGroup group_from_spec(const json& spec);

/// {"kind":"factorization","group":G,"f":[elements],"g":[elements]} or
/// {"kind":"trivial","f":G,"g":G}
MatchedPair matched_pair_from_spec(const json& spec);

/// group_algebra / dual_group_algebra / dual / op / cop / biop / tensor /
/// bismash_cgf / bismash_gcf / drinfeld_double / quantum_double
HopfAlgebra hopf_from_spec(const json& spec);

/// Sparse-triplet structured text; parse(serialize(h)) is bit-exact on all
/// structure tensors.
std::string serialize_hopf(const HopfAlgebra& h);
HopfAlgebra parse_hopf(const std::string& text);

std::string serialize_char_table(const CharTable& t);
CharTable parse_char_table(const std::string& text);

std::string csv_field(const std::string& raw);

}  // namespace hopfind
