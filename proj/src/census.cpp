#include "hopfind/census.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <memory>
#include <set>
#include <numeric>
#include <sstream>

namespace hopfind {

namespace {

using PlainJson = nlohmann::json;

json null_json() { return json(nullptr); }

}  // namespace

InstanceSpec InstanceSpec::from_json(const json& j) {
    InstanceSpec s;
    s.name = j.at("name").get<std::string>();
    s.hopf = j.at("hopf");
    s.coideal = j.value("coideal", null_json());
    s.witness = j.value("witness", null_json());
    s.matched_pair = j.value("matched_pair", null_json());
    if (j.contains("modules")) {
        for (const auto& m : j["modules"]) s.modules.push_back(m);
    }
    s.n_max = j.value("n_max", 0L);
    return s;
}

json InstanceSpec::to_json() const {
    json j;
    j["name"] = name;
    j["hopf"] = hopf;
    if (!coideal.is_null()) j["coideal"] = coideal;
    if (!witness.is_null()) j["witness"] = witness;
    if (!matched_pair.is_null()) j["matched_pair"] = matched_pair;
    if (!modules.empty()) {
        json arr = json::array();
        for (const auto& m : modules) arr.push_back(m);
        j["modules"] = arr;
    }
    if (n_max > 0) j["n_max"] = n_max;
    return j;
}

const std::vector<std::string>& known_checks() {
    static const std::vector<std::string> checks{
        "hopf-axioms",     "dual-invariance",     "partial-dual-theorem", "partial-dual-regular",
        "bismash-count",   "double-sum",          "exp-equalities",       "kashina-scan",
    };
    return checks;
}

namespace {

// A fully constructed instance; heap-allocated so internal pointers stay valid.
struct Built {
    InstanceSpec spec;
    HopfAlgebra h;
    std::optional<MatchedPair> mp;
    std::optional<CoidealSubalgebra> b;
    std::optional<QuotientCoalgebra> c;
    std::optional<SmashAlgebra> smash;
    std::optional<HopfAlgebra> witness;
    // canonical bismash partial-dual data (for matched-pair instances)
    std::optional<HopfAlgebra> pd_parent;
    std::optional<CoidealSubalgebra> pd_b;
    std::optional<QuotientCoalgebra> pd_c;
    std::optional<SmashAlgebra> pd_smash;
    std::optional<HopfAlgebra> pd_witness;
};

CoidealSubalgebra coideal_from_spec(const HopfAlgebra& h, const json& spec) {
    std::string kind = spec.at("kind").get<std::string>();
    if (kind == "unit") return coideal_subalgebra(h, {h.unit});
    if (kind == "full") {
        std::vector<long> all(static_cast<std::size_t>(h.dim));
        std::iota(all.begin(), all.end(), 0);
        return coideal_from_basis_indices(h, all);
    }
    if (kind == "basis_indices") {
        return coideal_from_basis_indices(h, spec.at("indices").get<std::vector<long>>());
    }
    if (kind == "vectors") {
        std::vector<Vec> vecs;
        for (const auto& row : spec.at("vectors")) {
            Vec v;
            for (const auto& s : row) v.push_back(CycScalar::from_string(s.get<std::string>()));
            vecs.push_back(std::move(v));
        }
        return coideal_subalgebra(h, vecs);
    }
    throw SpecError("unknown coideal kind '" + kind + "'");
}

AlgModule alg_module_from_spec(const CoidealSubalgebra& b, const json& spec) {
    std::string kind = spec.at("kind").get<std::string>();
    if (kind == "regular") return alg_regular_module(b.algebra);
    if (kind == "trivial") return alg_one_dim_module(b.algebra, b.counit);
    if (kind == "one_dim") {
        Vec phi;
        for (const auto& s : spec.at("values")) phi.push_back(CycScalar::from_string(s.get<std::string>()));
        return alg_one_dim_module(b.algebra, phi);
    }
    throw SpecError("unknown module kind '" + kind + "'");
}

HModule hmodule_from_spec(const HopfAlgebra& h, const json& spec) {
    std::string kind = spec.at("kind").get<std::string>();
    if (kind == "regular") return regular_module(h);
    if (kind == "trivial") return trivial_module(h);
    if (kind == "one_dim") {
        Vec phi;
        for (const auto& s : spec.at("values")) phi.push_back(CycScalar::from_string(s.get<std::string>()));
        return one_dim_module(h, phi);
    }
    throw SpecError("unknown module kind '" + kind + "'");
}

std::string module_name(const json& spec, std::size_t index) {
    if (spec.contains("name")) return spec["name"].get<std::string>();
    return spec.at("kind").get<std::string>() + "#" + std::to_string(index);
}

// B = pi_F^*(C^F) inside C^(F><G) with the double_group basis order (a, x).
std::vector<Vec> bismash_coideal_vectors(const MatchedPair& mp) {
    const long nf = mp.F().order(), ng = mp.G().order();
    std::vector<Vec> vecs;
    for (long a = 0; a < nf; ++a) {
        Vec v(static_cast<std::size_t>(nf * ng));
        for (long x = 0; x < ng; ++x) v[static_cast<std::size_t>(a * ng + x)] = CycScalar(1);
        vecs.push_back(std::move(v));
    }
    return vecs;
}

std::unique_ptr<Built> build_instance(const InstanceSpec& inst) {
    auto out = std::make_unique<Built>();
    out->spec = inst;
    out->h = hopf_from_spec(inst.hopf);
    if (!inst.matched_pair.is_null()) {
        out->mp = matched_pair_from_spec(inst.matched_pair);
        // canonical partial-dual realization: CG#C^F inside the dual of C(F><G)
        out->pd_parent = dual_group_algebra(double_group(*out->mp));
        out->pd_b = coideal_subalgebra(*out->pd_parent, bismash_coideal_vectors(*out->mp));
        out->pd_c = quotient_coalgebra(*out->pd_b);
        out->pd_smash = smash_algebra(*out->pd_b, *out->pd_c);
        out->pd_witness = bismash_hopf(*out->mp).second;
    }
    if (!inst.coideal.is_null()) {
        out->b = coideal_from_spec(out->h, inst.coideal);
        out->c = quotient_coalgebra(*out->b);
        out->smash = smash_algebra(*out->b, *out->c);
        if (!inst.witness.is_null()) out->witness = hopf_from_spec(inst.witness);
    }
    return out;
}

long horizon(const Built& bi, long fallback_exp) {
    return bi.spec.n_max > 0 ? bi.spec.n_max : fallback_exp;
}

VerificationReport row(const Built& bi, const std::string& check, bool ok, const std::string& why) {
    return {bi.spec.name, check, ok ? "pass" : "fail", ok ? "" : why, 0};
}

VerificationReport skip(const Built& bi, const std::string& check, const std::string& why) {
    return {bi.spec.name, check, "skipped", why, 0};
}

std::vector<VerificationReport> check_hopf_axioms(const Built& bi) {
    std::vector<VerificationReport> out;
    auto rep = validate_hopf(bi.h);
    out.push_back(row(bi, "hopf-axioms", rep.empty(), describe(rep)));
    if (bi.witness) {
        auto wrep = validate_hopf(*bi.witness);
        out.push_back(row(bi, "hopf-axioms", wrep.empty(), "witness: " + describe(wrep)));
    }
    if (bi.pd_witness) {
        auto wrep = validate_hopf(*bi.pd_witness);
        out.push_back(row(bi, "hopf-axioms", wrep.empty(), "bismash witness: " + describe(wrep)));
    }
    return out;
}

std::vector<VerificationReport> check_dual_invariance(const Built& bi) {
    HopfAlgebra dual = dual_hopf(bi.h);
    IndicatorEngine eh(bi.h), ed(dual);
    Vec chi_h = character_of(regular_module(bi.h)).values;
    Vec chi_d = character_of(regular_module(dual)).values;
    long e = exponent(bi.h);
    long n_hi = horizon(bi, e);
    for (long n = 1; n <= n_hi; ++n) {
        CycScalar a = eh.of_character(chi_h, n), b = ed.of_character(chi_d, n);
        if (a != b) {
            return {row(bi, "dual-invariance", false,
                        "n=" + std::to_string(n) + " nu_n(H)=" + a.str() + " nu_n(H*)=" + b.str())};
        }
    }
    return {row(bi, "dual-invariance", true, "")};
}

struct PartialDualSide {
    const HopfAlgebra* parent;
    const CoidealSubalgebra* b;
    const QuotientCoalgebra* c;
    const SmashAlgebra* smash;
    const HopfAlgebra* witness;
};

std::optional<PartialDualSide> partial_dual_side(const Built& bi) {
    if (bi.b && bi.witness) {
        return PartialDualSide{&bi.h, &*bi.b, &*bi.c, &*bi.smash, &*bi.witness};
    }
    if (bi.pd_b && bi.pd_witness) {
        return PartialDualSide{&*bi.pd_parent, &*bi.pd_b, &*bi.pd_c, &*bi.pd_smash, &*bi.pd_witness};
    }
    return std::nullopt;
}

std::vector<json> partial_dual_modules(const Built& bi, const PartialDualSide& side) {
    if (!bi.spec.modules.empty() && bi.b) return bi.spec.modules;
    // canonical list for matched-pair instances: trivial, every evaluation
    // character, and the regular module at small dimension
    std::vector<json> mods;
    mods.push_back(json{{"kind", "trivial"}});
    const long db = side.b->algebra.dim;
    for (long a = 0; a < db; ++a) {
        json values = json::array();
        for (long i = 0; i < db; ++i) values.push_back(i == a ? "1" : "0");
        mods.push_back(json{{"kind", "one_dim"}, {"name", "eval#" + std::to_string(a)}, {"values", values}});
    }
    if (side.parent->dim <= 12) mods.push_back(json{{"kind", "regular"}});
    return mods;
}

std::vector<VerificationReport> check_partial_dual_theorem(const Built& bi) {
    auto side = partial_dual_side(bi);
    if (!side) {
        if (bi.b && !bi.witness) {
            return {skip(bi, "partial-dual-theorem",
                         "no Hopf witness for the smash product; quasi-Hopf side has no intrinsic "
                         "Sweedler powers")};
        }
        return {skip(bi, "partial-dual-theorem", "no coideal attached")};
    }
    std::vector<VerificationReport> out;
    if (!smash_matches_hopf(*side->smash, *side->witness)) {
        out.push_back(row(bi, "partial-dual-theorem", false, "smash algebra differs from the witness"));
        return out;
    }
    out.push_back(row(bi, "partial-dual-theorem", true, "witness algebra matches"));
    IndicatorEngine wit_eng(*side->witness), h_eng(*side->parent);
    long e = exponent(*side->parent);
    long n_hi = horizon(bi, e);
    auto mods = partial_dual_modules(bi, *side);
    for (std::size_t mi = 0; mi < mods.size(); ++mi) {
        AlgModule l = alg_module_from_spec(*side->b, mods[mi]);
        AlgModule sm = smash_module(*side->smash, *side->b, *side->c, l);
        HModule ct = cotensor_module(*side->b, l, *side->parent);
        bool ok = true;
        std::string why;
        for (long n = 1; n <= n_hi && ok; ++n) {
            CycScalar lhs = smash_module_indicator(wit_eng, sm, n);
            CycScalar rhs = h_eng.of_module(ct, n);
            if (lhs != rhs) {
                ok = false;
                why = "module " + module_name(mods[mi], mi) + " n=" + std::to_string(n) + " smash=" + lhs.str() +
                      " cotensor=" + rhs.str();
            }
        }
        out.push_back(row(bi, "partial-dual-theorem", ok,
                          ok ? "" : why));
        if (ok) out.back().witness = module_name(mods[mi], mi);
    }
    return out;
}

std::vector<VerificationReport> check_partial_dual_regular(const Built& bi) {
    auto side = partial_dual_side(bi);
    if (!side) return {skip(bi, "partial-dual-regular", "no partial-dual data")};
    if (!smash_matches_hopf(*side->smash, *side->witness)) {
        return {row(bi, "partial-dual-regular", false, "smash algebra differs from the witness")};
    }
    IndicatorEngine wit_eng(*side->witness), h_eng(*side->parent);
    AlgModule sm = smash_module(*side->smash, *side->b, *side->c, alg_regular_module(side->b->algebra));
    Vec chi_h = character_of(regular_module(*side->parent)).values;
    long e = exponent(*side->parent);
    long n_hi = horizon(bi, e);
    for (long n = 1; n <= n_hi; ++n) {
        CycScalar lhs = smash_module_indicator(wit_eng, sm, n);
        CycScalar rhs = h_eng.of_character(chi_h, n);
        if (lhs != rhs) {
            return {row(bi, "partial-dual-regular", false,
                        "n=" + std::to_string(n) + " smash=" + lhs.str() + " H=" + rhs.str())};
        }
    }
    return {row(bi, "partial-dual-regular", true, "")};
}

std::vector<VerificationReport> check_bismash_count(const Built& bi) {
    if (!bi.mp) return {skip(bi, "bismash-count", "no matched pair attached")};
    const MatchedPair& mp = *bi.mp;
    const PartialDualSide side{&*bi.pd_parent, &*bi.pd_b, &*bi.pd_c, &*bi.pd_smash, &*bi.pd_witness};
    if (!smash_matches_hopf(*side.smash, *side.witness)) {
        return {row(bi, "bismash-count", false, "smash algebra differs from the bismash witness")};
    }
    IndicatorEngine wit_eng(*side.witness), h_eng(*side.parent);
    FiniteGroup dbl = double_group(mp);
    long e = dbl.exponent();
    long n_hi = horizon(bi, e);
    long comparisons = 0;
    const long nf = mp.F().order();
    for (long a = 0; a < nf; ++a) {
        Vec phi(static_cast<std::size_t>(nf));
        phi[static_cast<std::size_t>(a)] = CycScalar(1);
        AlgModule l = alg_one_dim_module(side.b->algebra, phi);
        AlgModule sm = smash_module(*side.smash, *side.b, *side.c, l);
        HModule ct = cotensor_module(*side.b, l, *side.parent);
        for (long n = 1; n <= n_hi; ++n) {
            long count = count_power_solutions(mp, a, n);
            CycScalar lhs = smash_module_indicator(wit_eng, sm, n);
            CycScalar rhs = h_eng.of_module(ct, n);
            if (lhs != CycScalar(count) || rhs != CycScalar(count)) {
                return {row(bi, "bismash-count", false,
                            "a=" + mp.F().label(a) + " n=" + std::to_string(n) + " count=" + std::to_string(count) +
                                " smash=" + lhs.str() + " cotensor=" + rhs.str())};
            }
            comparisons += 2;
        }
    }
    VerificationReport r = row(bi, "bismash-count", true, "");
    r.witness = std::to_string(comparisons) + " comparisons";
    return {r};
}

std::vector<VerificationReport> check_double_sum(const Built& bi) {
    std::string kind = bi.spec.hopf.value("kind", "");
    if (kind != "drinfeld_double" && kind != "quantum_double") {
        return {skip(bi, "double-sum", "not a quantum double instance")};
    }
    HopfAlgebra base_k = kind == "drinfeld_double" ? hopf_from_spec(bi.spec.hopf.at("of"))
                                                   : hopf_from_spec(bi.spec.hopf.at("k"));
    HopfAlgebra base_h = kind == "drinfeld_double" ? hopf_from_spec(bi.spec.hopf.at("of"))
                                                   : hopf_from_spec(bi.spec.hopf.at("h"));
    HopfPairing sigma{&base_k, &base_h, Matrix::identity(base_h.dim)};
    if (kind == "quantum_double" && bi.spec.hopf.value("pairing", "evaluation") == "trivial") {
        sigma = trivial_pairing(base_k, base_h);
    }
    CharTable irr;
    try {
        irr = irr_characters(base_k);
    } catch (const UnsupportedProvenance&) {
        return {skip(bi, "double-sum", "irreducible characters unavailable for K")};
    }
    const HopfAlgebra& dbl = bi.h;
    HopfAlgebra kcop = op_cop_variants(base_k, false, true);
    IndicatorEngine d_eng(dbl), h_eng(base_h), cop_eng(kcop);
    Matrix sr = sigma.sigma_r();
    long e = exponent(dbl);
    long n_hi = horizon(bi, e);
    std::vector<json> vmods = bi.spec.modules;
    if (vmods.empty()) {
        vmods.push_back(json{{"kind", "trivial"}});
        vmods.push_back(json{{"kind", "regular"}});
    }
    std::vector<VerificationReport> out;
    for (std::size_t mi = 0; mi < vmods.size(); ++mi) {
        HModule v = hmodule_from_spec(base_h, vmods[mi]);
        HModule dm = double_module(sigma, dbl, v);
        Vec chi_v = character_of(v).values;
        bool ok = true;
        std::string why;
        for (long n = 1; n <= n_hi && ok; ++n) {
            CycScalar lhs = d_eng.of_module(dm, n);
            CycScalar rhs;
            for (std::size_t w = 0; w < irr.rows.size(); ++w) {
                Vec tw = twisted_tensor_character(base_h, chi_v, base_k, irr.rows[w], sr);
                rhs += h_eng.of_character(tw, n) * cop_eng.of_character(irr.rows[w], n);
            }
            if (lhs != rhs) {
                ok = false;
                why = "module " + module_name(vmods[mi], mi) + " n=" + std::to_string(n) + " lhs=" + lhs.str() +
                      " rhs=" + rhs.str();
            }
        }
        VerificationReport r = row(bi, "double-sum", ok, why);
        if (ok) r.witness = module_name(vmods[mi], mi);
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<VerificationReport> check_exp_equalities(const Built& bi) {
    std::vector<VerificationReport> out;
    long e = exponent(bi.h);
    long fse = fs_exponent(bi.h);
    out.push_back(row(bi, "exp-equalities", e == fse,
                      "exp(H)=" + std::to_string(e) + " FSexp(H)=" + std::to_string(fse)));
    if (bi.mp) {
        HopfAlgebra bm = bismash_hopf(*bi.mp).first;
        long ebm = exponent(bm);
        long eg = double_group(*bi.mp).exponent();
        out.push_back(row(bi, "exp-equalities", ebm == eg,
                          "exp(C^G#CF)=" + std::to_string(ebm) + " exp(F><G)=" + std::to_string(eg)));
    }
    auto side = partial_dual_side(bi);
    if (side) {
        long ew = exponent(*side->witness);
        long fsw = fs_exponent(*side->witness);
        long eh = exponent(*side->parent);
        long fsh = fs_exponent(*side->parent);
        bool ok = ew == fsw && fsw == eh && eh == fsh;
        out.push_back(row(bi, "exp-equalities", ok,
                          "exp(C*#B)=" + std::to_string(ew) + " FSexp(C*#B)=" + std::to_string(fsw) +
                              " exp(H)=" + std::to_string(eh) + " FSexp(H)=" + std::to_string(fsh)));
    }
    return out;
}

std::vector<VerificationReport> check_kashina(const Built& bi) {
    long e = exponent(bi.h);
    bool divides = bi.h.dim % e == 0;
    VerificationReport r = row(bi, "kashina-scan", divides,
                               "exp(H)=" + std::to_string(e) + " does not divide dim(H)=" + std::to_string(bi.h.dim));
    if (divides) r.witness = "exp=" + std::to_string(e) + " | dim=" + std::to_string(bi.h.dim);
    return {r};
}

std::vector<VerificationReport> run_checks_on(const Built& bi, const std::string& check) {
    if (check == "hopf-axioms") return check_hopf_axioms(bi);
    if (check == "dual-invariance") return check_dual_invariance(bi);
    if (check == "partial-dual-theorem") return check_partial_dual_theorem(bi);
    if (check == "partial-dual-regular") return check_partial_dual_regular(bi);
    if (check == "bismash-count") return check_bismash_count(bi);
    if (check == "double-sum") return check_double_sum(bi);
    if (check == "exp-equalities") return check_exp_equalities(bi);
    if (check == "kashina-scan") return check_kashina(bi);
    throw SpecError("unknown check '" + check + "'");
}

}  // namespace

std::vector<VerificationReport> run_check(const InstanceSpec& inst, const std::string& check) {
    auto built = build_instance(inst);
    std::vector<VerificationReport> out;
    auto t0 = std::chrono::steady_clock::now();
    std::vector<std::string> checks = check == "all" ? known_checks() : std::vector<std::string>{check};
    for (const auto& c : checks) {
        auto rows = run_checks_on(*built, c);
        out.insert(out.end(), rows.begin(), rows.end());
    }
    auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    for (auto& r : out) r.wall_ms = ms / static_cast<double>(out.size());
    return out;
}

std::vector<VerificationReport> run_checks(const std::vector<InstanceSpec>& instances, const std::string& check,
                                           long jobs) {
    std::vector<std::vector<VerificationReport>> results(instances.size());
    if (jobs <= 1) {
        for (std::size_t i = 0; i < instances.size(); ++i) results[i] = run_check(instances[i], check);
    } else {
        std::size_t next = 0;
        while (next < instances.size()) {
            std::size_t batch = std::min<std::size_t>(static_cast<std::size_t>(jobs), instances.size() - next);
            std::vector<std::future<std::vector<VerificationReport>>> futs;
            for (std::size_t k = 0; k < batch; ++k) {
                const InstanceSpec& inst = instances[next + k];
                futs.push_back(std::async(std::launch::async, [&inst, &check] { return run_check(inst, check); }));
            }
            for (std::size_t k = 0; k < batch; ++k) results[next + k] = futs[k].get();
            next += batch;
        }
    }
    std::vector<VerificationReport> out;
    for (auto& rows : results) out.insert(out.end(), rows.begin(), rows.end());
    return out;
}

std::string reports_to_csv(const std::vector<VerificationReport>& reports) {
    std::ostringstream out;
    out << "instance,check,status,witness\r\n";
    for (const auto& r : reports) {
        out << csv_field(r.instance) << "," << csv_field(r.check) << "," << csv_field(r.status) << ","
            << csv_field(r.witness) << "\r\n";
    }
    return out.str();
}

std::string reports_to_json(const std::vector<VerificationReport>& reports) {
    PlainJson arr = PlainJson::array();
    for (const auto& r : reports) {
        arr.push_back({{"instance", r.instance}, {"check", r.check}, {"status", r.status}, {"witness", r.witness}});
    }
    return arr.dump(1) + "\n";
}

std::vector<IndicatorRow> indicator_table(const InstanceSpec& inst, long n_max) {
    HopfAlgebra h = hopf_from_spec(inst.hopf);
    IndicatorEngine eng(h);
    std::vector<json> mods = inst.modules;
    if (mods.empty()) mods.push_back(json{{"kind", "regular"}});
    long n_hi = n_max > 0 ? n_max : (inst.n_max > 0 ? inst.n_max : exponent(h));
    std::vector<IndicatorRow> rows;
    for (std::size_t mi = 0; mi < mods.size(); ++mi) {
        HModule m = hmodule_from_spec(h, mods[mi]);
        Vec chi = character_of(m).values;
        for (long n = 1; n <= n_hi; ++n) {
            CycScalar v = eng.of_character(chi, n);
            rows.push_back({module_name(mods[mi], mi), n, v.str(), v.is_integer()});
        }
    }
    return rows;
}

std::string indicators_to_csv(const std::vector<IndicatorRow>& rows) {
    std::ostringstream out;
    out << "module,n,value,integer\r\n";
    for (const auto& r : rows) {
        out << csv_field(r.module) << "," << r.n << "," << csv_field(r.value) << "," << (r.integral ? "1" : "0")
            << "\r\n";
    }
    return out.str();
}

std::string indicators_to_json(const std::vector<IndicatorRow>& rows) {
    PlainJson arr = PlainJson::array();
    for (const auto& r : rows) {
        arr.push_back({{"module", r.module}, {"n", r.n}, {"value", r.value}, {"integer", r.integral}});
    }
    return arr.dump(1) + "\n";
}

json census_to_json(const std::vector<InstanceSpec>& instances) {
    json arr = json::array();
    for (const auto& i : instances) arr.push_back(i.to_json());
    json out;
    out["instances"] = arr;
    return out;
}

std::vector<InstanceSpec> census_from_json(const json& j) {
    std::vector<InstanceSpec> out;
    for (const auto& item : j.at("instances")) out.push_back(InstanceSpec::from_json(item));
    return out;
}

namespace {

json group_spec(const std::string& kind, long n = 0) {
    json g;
    g["kind"] = kind;
    if (n > 0) g["n"] = n;
    return g;
}

json ga(const json& g) { return json{{"kind", "group_algebra"}, {"group", g}}; }
json dga(const json& g) { return json{{"kind", "dual_group_algebra"}, {"group", g}}; }

InstanceSpec plain(const std::string& name, const json& hopf) {
    InstanceSpec s;
    s.name = name;
    s.hopf = hopf;
    s.coideal = nullptr;
    s.witness = nullptr;
    s.matched_pair = nullptr;
    return s;
}

}  // namespace

std::vector<InstanceSpec> builtin_census() {
    std::vector<InstanceSpec> out;
    std::vector<std::pair<std::string, json>> groups;
    for (long n = 1; n <= 8; ++n) groups.push_back({"z" + std::to_string(n), group_spec("cyclic", n)});
    groups.push_back({"z2xz2", json{{"kind", "direct_product"}, {"a", group_spec("cyclic", 2)}, {"b", group_spec("cyclic", 2)}}});
    groups.push_back({"s3", group_spec("symmetric", 3)});
    groups.push_back({"d4", group_spec("dihedral", 4)});
    groups.push_back({"q8", group_spec("quaternion8")});
    groups.push_back({"a4", group_spec("alternating", 4)});
    groups.push_back({"s4", group_spec("symmetric", 4)});

    for (const auto& [name, g] : groups) out.push_back(plain("group-" + name, ga(g)));
    for (const std::string name : {"s3", "q8", "a4"}) {
        for (const auto& [gname, g] : groups) {
            if (gname == name) out.push_back(plain("dualgroup-" + name, dga(g)));
        }
    }
    // op/cop/biop variants
    {
        json s3 = group_spec("symmetric", 3);
        out.push_back(plain("op-cs3", json{{"kind", "op"}, {"of", ga(s3)}}));
        out.push_back(plain("cop-cs3", json{{"kind", "cop"}, {"of", ga(s3)}}));
        out.push_back(plain("biop-dual-s3", json{{"kind", "biop"}, {"of", dga(s3)}}));
    }
    // tensors
    out.push_back(plain("tensor-z2-z3", json{{"kind", "tensor"}, {"a", ga(group_spec("cyclic", 2))},
                                             {"b", ga(group_spec("cyclic", 3))}}));
    out.push_back(plain("tensor-s3-dualz2", json{{"kind", "tensor"}, {"a", ga(group_spec("symmetric", 3))},
                                                 {"b", dga(group_spec("cyclic", 2))}}));

    // matched pairs from exact factorizations, both factors nontrivial
    struct FactSource {
        std::string name;
        json spec;
    };
    std::vector<FactSource> sources{
        {"z6", group_spec("cyclic", 6)},
        {"s3", group_spec("symmetric", 3)},
        {"d4", group_spec("dihedral", 4)},
        {"s4", group_spec("symmetric", 4)},
    };
    for (const auto& src : sources) {
        FiniteGroup l = group_from_spec(src.spec);
        if (l.order() > 24) continue;
        auto facts = exact_factorizations(l);
        long kept = 0;
        std::set<std::pair<long, long>> seen_shapes;
        for (const auto& [f, g] : facts) {
            if (f.size() <= 1 || g.size() <= 1) continue;
            if (!seen_shapes.insert({static_cast<long>(f.size()), static_cast<long>(g.size())}).second) continue;
            if (++kept > 4) break;
            json mp;
            mp["kind"] = "factorization";
            mp["group"] = src.spec;
            mp["f"] = f;
            mp["g"] = g;
            InstanceSpec s = plain("bismash-" + src.name + "-" + std::to_string(f.size()) + "x" +
                                       std::to_string(g.size()),
                                   json{{"kind", "bismash_cgf"}, {"matched_pair", mp}});
            s.matched_pair = mp;
            out.push_back(std::move(s));
        }
    }

    // explicit partial-dual instances over CS3 and C^S3
    {
        FiniteGroup s3 = FiniteGroup::symmetric(3);
        std::vector<long> a3, t2;
        for (long i = 0; i < 6; ++i) {
            if (s3.element_order(i) == 3) a3.push_back(i);
        }
        a3 = s3.subgroup_closure(a3);
        for (long i = 0; i < 6; ++i) {
            if (s3.element_order(i) == 2) { t2 = s3.subgroup_closure({i}); break; }
        }
        json s3spec = group_spec("symmetric", 3);
        json mp_f_a3;
        mp_f_a3["kind"] = "factorization";
        mp_f_a3["group"] = s3spec;
        mp_f_a3["f"] = a3;
        mp_f_a3["g"] = t2;
        {
            InstanceSpec s = plain("pd-cs3-ca3", ga(s3spec));
            s.coideal = json{{"kind", "basis_indices"}, {"indices", a3}};
            s.witness = json{{"kind", "bismash_cgf"}, {"matched_pair", mp_f_a3}};
            s.modules.push_back(json{{"kind", "trivial"}});
            s.modules.push_back(json{{"kind", "regular"}});
            // omega character of A3 (cube roots of unity on the generator)
            {
                json values = json::array();
                // order the values along a3: identity first, then generator powers
                MatchedPair mp = matched_pair_from_factorization(s3, a3, t2);
                const FiniteGroup& fg = mp.F();
                long gen = -1;
                for (long i = 0; i < fg.order(); ++i) {
                    if (fg.element_order(i) == 3) { gen = i; break; }
                }
                for (long i = 0; i < fg.order(); ++i) {
                    long e = 0, cur = fg.identity();
                    while (cur != i) { cur = fg.mul(cur, gen); ++e; }
                    values.push_back(CycScalar::root_of_unity(3, e).str());
                }
                s.modules.push_back(json{{"kind", "one_dim"}, {"name", "omega"}, {"values", values}});
            }
            out.push_back(std::move(s));
        }
        {
            json mp_f_t2;
            mp_f_t2["kind"] = "factorization";
            mp_f_t2["group"] = s3spec;
            mp_f_t2["f"] = t2;
            mp_f_t2["g"] = a3;
            InstanceSpec s = plain("pd-dual-s3-cosets", dga(s3spec));
            // coset indicator functions of A3 and its nontrivial coset,
            // ordered as [coset of identity, coset of t]
            json vecs = json::array();
            json v1 = json::array(), v2 = json::array();
            for (long x = 0; x < 6; ++x) {
                bool in_a3 = std::find(a3.begin(), a3.end(), x) != a3.end();
                v1.push_back(in_a3 ? "1" : "0");
                v2.push_back(in_a3 ? "0" : "1");
            }
            vecs.push_back(v1);
            vecs.push_back(v2);
            s.coideal = json{{"kind", "vectors"}, {"vectors", vecs}};
            s.witness = json{{"kind", "bismash_gcf"}, {"matched_pair", mp_f_t2}};
            s.modules.push_back(json{{"kind", "trivial"}});
            s.modules.push_back(json{{"kind", "regular"}});
            s.modules.push_back(json{{"kind", "one_dim"},
                                     {"name", "eval-t"},
                                     {"values", json::array({"0", "1"})}});
            out.push_back(std::move(s));
        }
        // trivial and full coideals over CS3 (degenerate partial duals)
        {
            InstanceSpec s = plain("pd-cs3-unit", ga(s3spec));
            s.coideal = json{{"kind", "unit"}};
            s.witness = json{{"kind", "dual"}, {"of", ga(s3spec)}};
            s.modules.push_back(json{{"kind", "trivial"}});
            out.push_back(std::move(s));
        }
        {
            InstanceSpec s = plain("pd-cs3-full", ga(s3spec));
            s.coideal = json{{"kind", "full"}};
            s.witness = ga(s3spec);
            s.modules.push_back(json{{"kind", "trivial"}});
            s.modules.push_back(json{{"kind", "regular"}});
            out.push_back(std::move(s));
        }
        // D(CZ2) realized as a partial dual of Z2^op (x) Z2
        {
            json z2 = group_spec("cyclic", 2);
            InstanceSpec s = plain("pd-dz2", json{{"kind", "tensor"}, {"a", json{{"kind", "op"}, {"of", ga(z2)}}},
                                                  {"b", ga(z2)}});
            json vecs = json::array();
            vecs.push_back(json::array({"1", "0", "0", "0"}));
            vecs.push_back(json::array({"0", "0", "0", "1"}));
            s.coideal = json{{"kind", "vectors"}, {"vectors", vecs}};
            s.witness = json{{"kind", "drinfeld_double"}, {"of", ga(z2)}};
            s.modules.push_back(json{{"kind", "trivial"}});
            s.modules.push_back(json{{"kind", "regular"}});
            out.push_back(std::move(s));
        }
    }

    // quantum doubles
    for (const std::string name : {"z2", "z3", "s3"}) {
        json g = name == "z2" ? group_spec("cyclic", 2) : name == "z3" ? group_spec("cyclic", 3)
                                                                        : group_spec("symmetric", 3);
        InstanceSpec s = plain("double-" + name, json{{"kind", "drinfeld_double"}, {"of", ga(g)}});
        s.modules.push_back(json{{"kind", "trivial"}});
        s.modules.push_back(json{{"kind", "regular"}});
        out.push_back(std::move(s));
    }
    // duals and biops of composite instances
    out.push_back(plain("dual-double-s3", json{{"kind", "dual"}, {"of", json{{"kind", "drinfeld_double"},
                                                                             {"of", ga(group_spec("symmetric", 3))}}}}));
    {
        FiniteGroup s3 = FiniteGroup::symmetric(3);
        std::vector<long> f, g;
        for (long i = 0; i < 6; ++i) {
            if (s3.element_order(i) == 2 && f.empty()) f = s3.subgroup_closure({i});
            if (s3.element_order(i) == 3 && g.empty()) g = s3.subgroup_closure({i});
        }
        json mp;
        mp["kind"] = "factorization";
        mp["group"] = group_spec("symmetric", 3);
        mp["f"] = f;
        mp["g"] = g;
        out.push_back(plain("dual-bismash-s3", json{{"kind", "dual"}, {"of", json{{"kind", "bismash_cgf"}, {"matched_pair", mp}}}}));
        out.push_back(plain("biop-bismash-s3", json{{"kind", "biop"}, {"of", json{{"kind", "bismash_cgf"}, {"matched_pair", mp}}}}));
    }
    return out;
}

std::string group_table_hash(const FiniteGroup& g) {
    // FNV-1a over the multiplication table
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t v) {
        h ^= v;
        h *= 1099511628211ull;
    };
    mix(static_cast<std::uint64_t>(g.order()));
    for (long a = 0; a < g.order(); ++a) {
        for (long b = 0; b < g.order(); ++b) mix(static_cast<std::uint64_t>(g.mul(a, b)));
    }
    std::ostringstream out;
    out << std::hex << h;
    return out.str();
}

std::string chartab_cached(const FiniteGroup& g, std::string cache_dir, bool* cache_hit) {
    if (cache_dir.empty()) {
        const char* env = std::getenv("HOPFIND_CACHE");
        cache_dir = env ? env : ".hopfind-cache";
    }
    std::filesystem::path dir(cache_dir);
    std::filesystem::create_directories(dir);
    std::filesystem::path file = dir / ("chartab-" + group_table_hash(g) + ".json");
    if (std::filesystem::exists(file)) {
        std::ifstream in(file, std::ios::binary);
        std::ostringstream buf;
        buf << in.rdbuf();
        if (cache_hit) *cache_hit = true;
        return buf.str();
    }
    std::string text = serialize_char_table(dixon_char_table(g));
    std::ofstream outf(file, std::ios::binary);
    outf << text;
    if (cache_hit) *cache_hit = false;
    return text;
}

}  // namespace hopfind
