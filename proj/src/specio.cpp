#include "hopfind/specio.hpp"

namespace hopfind {

namespace {

long require_long(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer()) {
        throw SpecError(std::string("missing integer field '") + key + "'");
    }
    return j[key].get<long>();
}

std::string require_kind(const json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
        throw SpecError("expected an object with a 'kind' field, got: " + j.dump());
    }
    return j["kind"].get<std::string>();
}

}  // namespace

FiniteGroup group_from_spec(const json& spec) {
    std::string kind = require_kind(spec);
    if (kind == "trivial") return FiniteGroup::trivial();
    if (kind == "cyclic") return FiniteGroup::cyclic(require_long(spec, "n"));
    if (kind == "dihedral") return FiniteGroup::dihedral(require_long(spec, "n"));
    if (kind == "symmetric") return FiniteGroup::symmetric(require_long(spec, "n"));
    if (kind == "alternating") return FiniteGroup::alternating(require_long(spec, "n"));
    if (kind == "quaternion8") return FiniteGroup::quaternion8();
    if (kind == "direct_product") {
        return FiniteGroup::direct_product(group_from_spec(spec.at("a")), group_from_spec(spec.at("b")));
    }
    if (kind == "from_table") {
        if (!spec.contains("table") || !spec["table"].is_array()) throw SpecError("from_table needs 'table'");
        std::vector<std::vector<long>> table;
        for (const auto& row : spec["table"]) table.push_back(row.get<std::vector<long>>());
        return FiniteGroup::from_table(std::move(table));
    }
    throw SpecError("unknown group kind '" + kind + "'");
}

MatchedPair matched_pair_from_spec(const json& spec) {
    std::string kind = require_kind(spec);
    if (kind == "trivial") {
        return MatchedPair::trivial(group_from_spec(spec.at("f")), group_from_spec(spec.at("g")));
    }
    if (kind == "factorization") {
        FiniteGroup l = group_from_spec(spec.at("group"));
        auto f = l.subgroup_closure(spec.at("f").get<std::vector<long>>());
        auto g = l.subgroup_closure(spec.at("g").get<std::vector<long>>());
        return matched_pair_from_factorization(l, f, g);
    }
    throw SpecError("unknown matched pair kind '" + kind + "'");
}

HopfAlgebra hopf_from_spec(const json& spec) {
    std::string kind = require_kind(spec);
    if (kind == "group_algebra") return group_algebra(group_from_spec(spec.at("group")));
    if (kind == "dual_group_algebra") return dual_group_algebra(group_from_spec(spec.at("group")));
    if (kind == "dual") return dual_hopf(hopf_from_spec(spec.at("of")));
    if (kind == "op") return op_cop_variants(hopf_from_spec(spec.at("of")), true, false);
    if (kind == "cop") return op_cop_variants(hopf_from_spec(spec.at("of")), false, true);
    if (kind == "biop") return op_cop_variants(hopf_from_spec(spec.at("of")), true, true);
    if (kind == "tensor") return tensor_hopf(hopf_from_spec(spec.at("a")), hopf_from_spec(spec.at("b")));
    if (kind == "bismash_cgf") return bismash_hopf(matched_pair_from_spec(spec.at("matched_pair"))).first;
    if (kind == "bismash_gcf") return bismash_hopf(matched_pair_from_spec(spec.at("matched_pair"))).second;
    if (kind == "drinfeld_double") return drinfeld_double(hopf_from_spec(spec.at("of")));
    if (kind == "quantum_double") {
        HopfAlgebra k = hopf_from_spec(spec.at("k"));
        HopfAlgebra h = hopf_from_spec(spec.at("h"));
        std::string pairing = spec.value("pairing", "evaluation");
        if (pairing == "evaluation") {
            if (!k.structure_equal(h)) throw SpecError("evaluation pairing needs k = h");
            HopfPairing p{&k, &h, Matrix::identity(h.dim)};
            return quantum_double(p);
        }
        if (pairing == "trivial") {
            HopfPairing p = trivial_pairing(k, h);
            return quantum_double(p);
        }
        throw SpecError("unknown pairing '" + pairing + "'");
    }
    throw SpecError("unknown hopf kind '" + kind + "'");
}

namespace {

json tensor_to_triplets(const Tensor3& t) {
    json out = json::array();
    for (long i = 0; i < t.dim1(); ++i) {
        for (long j = 0; j < t.dim2(); ++j) {
            for (long k = 0; k < t.dim3(); ++k) {
                if (!t.at(i, j, k).is_zero()) out.push_back({i, j, k, t.at(i, j, k).str()});
            }
        }
    }
    return out;
}

Tensor3 tensor_from_triplets(const json& j, long d) {
    Tensor3 t(d, d, d);
    for (const auto& row : j) {
        t.at(row.at(0).get<long>(), row.at(1).get<long>(), row.at(2).get<long>()) =
            CycScalar::from_string(row.at(3).get<std::string>());
    }
    return t;
}

json matrix_to_triplets(const Matrix& m) {
    json out = json::array();
    for (long r = 0; r < m.rows(); ++r) {
        for (long c = 0; c < m.cols(); ++c) {
            if (!m.at(r, c).is_zero()) out.push_back({r, c, m.at(r, c).str()});
        }
    }
    return out;
}

json vec_to_strings(const Vec& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(x.str());
    return out;
}

Vec vec_from_strings(const json& j) {
    Vec v;
    for (const auto& s : j) v.push_back(CycScalar::from_string(s.get<std::string>()));
    return v;
}

}  // namespace

std::string serialize_hopf(const HopfAlgebra& h) {
    json out;
    out["dim"] = h.dim;
    out["labels"] = h.labels;
    out["mul"] = tensor_to_triplets(h.mul);
    out["unit"] = vec_to_strings(h.unit);
    out["comul"] = tensor_to_triplets(h.comul);
    out["counit"] = vec_to_strings(h.counit);
    out["antipode"] = matrix_to_triplets(h.antipode);
    return out.dump(1);
}

HopfAlgebra parse_hopf(const std::string& text) {
    json j = json::parse(text);
    HopfAlgebra h;
    h.dim = j.at("dim").get<long>();
    h.labels = j.at("labels").get<std::vector<std::string>>();
    h.mul = tensor_from_triplets(j.at("mul"), h.dim);
    h.comul = tensor_from_triplets(j.at("comul"), h.dim);
    h.unit = vec_from_strings(j.at("unit"));
    h.counit = vec_from_strings(j.at("counit"));
    h.antipode = Matrix(h.dim, h.dim);
    for (const auto& row : j.at("antipode")) {
        h.antipode.at(row.at(0).get<long>(), row.at(1).get<long>()) =
            CycScalar::from_string(row.at(2).get<std::string>());
    }
    return h;
}

std::string serialize_char_table(const CharTable& t) {
    json out;
    out["degrees"] = t.degrees;
    json rows = json::array();
    for (const auto& row : t.rows) rows.push_back(vec_to_strings(row));
    out["rows"] = rows;
    return out.dump(1);
}

CharTable parse_char_table(const std::string& text) {
    json j = json::parse(text);
    CharTable t;
    t.degrees = j.at("degrees").get<std::vector<long>>();
    for (const auto& row : j.at("rows")) t.rows.push_back(vec_from_strings(row));
    return t;
}

std::string csv_field(const std::string& raw) {
    bool needs_quote = raw.find_first_of(",\"\r\n") != std::string::npos;
    if (!needs_quote) return raw;
    std::string out = "\"";
    for (char c : raw) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

}  // namespace hopfind
