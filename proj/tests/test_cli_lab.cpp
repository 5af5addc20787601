#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfind/census.hpp"

#include <filesystem>

using namespace hopfind;

namespace {

InstanceSpec find_instance(const std::string& name) {
    for (auto& inst : builtin_census()) {
        if (inst.name == name) return inst;
    }
    throw std::runtime_error("census instance not found: " + name);
}

}  // namespace

TEST_CASE("census serializes and round-trips") {
    auto census = builtin_census();
    CHECK(census.size() >= 25);
    json j = census_to_json(census);
    auto back = census_from_json(j);
    REQUIRE(back.size() == census.size());
    for (std::size_t i = 0; i < census.size(); ++i) {
        CHECK(back[i].name == census[i].name);
        CHECK(back[i].to_json() == census[i].to_json());
    }
}

TEST_CASE("hopf serialization is bit-exact") {
    for (const HopfAlgebra& h : {group_algebra(FiniteGroup::symmetric(3)),
                                 dual_group_algebra(FiniteGroup::quaternion8()),
                                 bismash_hopf(matched_pair_from_spec(
                                                  json{{"kind", "trivial"},
                                                       {"f", json{{"kind", "cyclic"}, {"n", 2}}},
                                                       {"g", json{{"kind", "cyclic"}, {"n", 3}}}}))
                                     .first}) {
        std::string text = serialize_hopf(h);
        HopfAlgebra back = parse_hopf(text);
        CHECK(back.structure_equal(h));
        CHECK(serialize_hopf(back) == text);
    }
}

TEST_CASE("indicator table for regular CS3") {
    InstanceSpec inst = find_instance("group-s3");
    auto rows = indicator_table(inst, 6);
    REQUIRE(rows.size() == 6);
    CHECK(rows[0].n == 1);
    CHECK(rows[0].value == "1");
    CHECK(rows[1].n == 2);
    CHECK(rows[1].value == "4");
    CHECK(rows[1].integral);
    CHECK(rows[5].value == "6");
}

TEST_CASE("dual invariance check passes on census instances") {
    for (const std::string name : {"group-s3", "dualgroup-q8", "tensor-z2-z3"}) {
        auto rows = run_check(find_instance(name), "dual-invariance");
        REQUIRE(rows.size() == 1);
        CHECK(rows[0].status == "pass");
    }
}

TEST_CASE("bismash count check on the S3 pair") {
    for (auto& inst : builtin_census()) {
        if (inst.name.rfind("bismash-s3", 0) != 0) continue;
        auto rows = run_check(inst, "bismash-count");
        REQUIRE(rows.size() == 1);
        CHECK(rows[0].status == "pass");
        CHECK(rows[0].witness.find("comparisons") != std::string::npos);
    }
}

TEST_CASE("partial dual theorem check on the explicit instances") {
    for (const std::string name : {"pd-cs3-ca3", "pd-dual-s3-cosets", "pd-cs3-unit", "pd-cs3-full", "pd-dz2"}) {
        auto rows = run_check(find_instance(name), "partial-dual-theorem");
        REQUIRE(!rows.empty());
        for (const auto& r : rows) {
            CHECK(r.status == "pass");
            if (r.status != "pass") MESSAGE(name, ": ", r.witness);
        }
    }
}

TEST_CASE("report emitters are deterministic and quote CSV properly") {
    std::vector<VerificationReport> reports{
        {"inst,with comma", "check", "pass", "say \"hi\"", 1.0},
        {"plain", "check2", "fail", "line\nbreak", 2.0},
    };
    std::string csv = reports_to_csv(reports);
    CHECK(csv.find("\"inst,with comma\"") != std::string::npos);
    CHECK(csv.find("\"say \"\"hi\"\"\"") != std::string::npos);
    CHECK(csv == reports_to_csv(reports));
    std::string js = reports_to_json(reports);
    CHECK(js == reports_to_json(reports));
    CHECK(js.find("\"instance\"") != std::string::npos);
}

TEST_CASE("chartab cache is byte stable") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "hopfind-test-cache";
    fs::remove_all(dir);
    FiniteGroup g = FiniteGroup::symmetric(3);
    bool hit1 = true, hit2 = false;
    std::string a = chartab_cached(g, dir.string(), &hit1);
    std::string b = chartab_cached(g, dir.string(), &hit2);
    CHECK_FALSE(hit1);
    CHECK(hit2);
    CHECK(a == b);
    CharTable t = parse_char_table(a);
    CHECK(t.degrees == std::vector<long>{1, 1, 2});
    fs::remove_all(dir);
}

TEST_CASE("malformed specs raise SpecError") {
    CHECK_THROWS_AS(group_from_spec(json{{"kind", "nonsense"}}), SpecError);
    CHECK_THROWS_AS(hopf_from_spec(json{{"no_kind", 1}}), SpecError);
    CHECK_THROWS_AS(InstanceSpec::from_json(json{{"hopf", 1}}), nlohmann::json::exception);
}

TEST_CASE("parallel runs preserve report order") {
    std::vector<InstanceSpec> insts;
    for (const std::string name : {"group-z4", "group-s3", "group-z6"}) insts.push_back(find_instance(name));
    auto seq = run_checks(insts, "kashina-scan", 1);
    auto par = run_checks(insts, "kashina-scan", 3);
    REQUIRE(seq.size() == par.size());
    for (std::size_t i = 0; i < seq.size(); ++i) {
        CHECK(seq[i].instance == par[i].instance);
        CHECK(seq[i].status == par[i].status);
    }
}
