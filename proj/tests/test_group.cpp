#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfind/group.hpp"

#include <algorithm>

using namespace hopfind;

namespace {

// index of a subgroup's elements inside a group given by labels
std::vector<long> elements_of_order(const FiniteGroup& g, long o) {
    std::vector<long> out;
    for (long a = 0; a < g.order(); ++a) {
        if (g.element_order(a) == o) out.push_back(a);
    }
    return out;
}

}  // namespace

TEST_CASE("constructors validate") {
    CHECK(FiniteGroup::cyclic(1).order() == 1);
    CHECK(FiniteGroup::symmetric(3).order() == 6);
    CHECK(FiniteGroup::alternating(4).order() == 12);
    CHECK(FiniteGroup::dihedral(4).order() == 8);
    CHECK(FiniteGroup::quaternion8().order() == 8);
    CHECK(FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(3)).order() == 6);
}

TEST_CASE("from_table rejects non-groups") {
    // a 3x3 latin square that is not associative
    std::vector<std::vector<long>> t{{0, 1, 2}, {1, 2, 0}, {2, 1, 0}};
    CHECK_THROWS_AS(FiniteGroup::from_table(t), InvalidGroupTable);
    std::vector<std::vector<long>> bad{{0, 1}, {1, 5}};
    CHECK_THROWS_AS(FiniteGroup::from_table(bad), InvalidGroupTable);
}

TEST_CASE("order census of S3") {
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    CHECK(elements_of_order(s3, 2).size() == 3);
    CHECK(elements_of_order(s3, 3).size() == 2);
    CHECK(s3.exponent() == 6);
}

TEST_CASE("exponents") {
    CHECK(FiniteGroup::trivial().exponent() == 1);
    CHECK(FiniteGroup::cyclic(4).exponent() == 4);
    CHECK(FiniteGroup::symmetric(4).exponent() == 12);
    CHECK(FiniteGroup::quaternion8().exponent() == 4);
}

TEST_CASE("conjugacy classes of S3 and Q8") {
    CHECK(FiniteGroup::symmetric(3).conjugacy_classes().size() == 3);
    CHECK(FiniteGroup::quaternion8().conjugacy_classes().size() == 5);
}

TEST_CASE("matched pair from S3 factorization") {
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    auto transpositions = elements_of_order(s3, 2);
    std::vector<long> f = s3.subgroup_closure({transpositions[0]});
    std::vector<long> g = s3.subgroup_closure({elements_of_order(s3, 3)[0]});
    MatchedPair mp = matched_pair_from_factorization(s3, f, g);
    CHECK(mp.F().order() == 2);
    CHECK(mp.G().order() == 3);

    FiniteGroup d = double_group(mp);
    CHECK(d.order() == 6);
    CHECK(is_isomorphic(d, s3));

    // direct isomorphism (a, x) -> a * x
    GroupHom h{&d, &s3, {}};
    h.images.resize(6);
    for (long a = 0; a < 2; ++a) {
        for (long x = 0; x < 3; ++x) {
            h.images[static_cast<std::size_t>(a * 3 + x)] = s3.mul(f[static_cast<std::size_t>(a)], g[static_cast<std::size_t>(x)]);
        }
    }
    CHECK(h.is_valid());
    CHECK(h.is_bijective());
}

TEST_CASE("factorization preconditions") {
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    std::vector<long> a3 = s3.subgroup_closure({elements_of_order(s3, 3)[0]});
    CHECK_THROWS_AS(matched_pair_from_factorization(s3, a3, a3), NotExactFactorization);
}

TEST_CASE("trivial matched pairs give direct products") {
    MatchedPair mp = MatchedPair::trivial(FiniteGroup::cyclic(2), FiniteGroup::cyclic(3));
    CHECK(is_isomorphic(double_group(mp), FiniteGroup::cyclic(6)));
    MatchedPair klein = MatchedPair::trivial(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));
    FiniteGroup v4 = double_group(klein);
    CHECK(v4.order() == 4);
    CHECK(v4.exponent() == 2);
    CHECK(is_isomorphic(v4, FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2))));
}

TEST_CASE("count_power_solutions on the S3 pair") {
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    auto f = s3.subgroup_closure({elements_of_order(s3, 2)[0]});
    auto g = s3.subgroup_closure({elements_of_order(s3, 3)[0]});
    MatchedPair mp = matched_pair_from_factorization(s3, f, g);
    // a = the transposition (index 1 in F)
    CHECK(count_power_solutions(mp, 1, 2) == 3);
    CHECK(count_power_solutions(mp, 1, 3) == 0);
    // a = 1, n = 1
    CHECK(count_power_solutions(mp, 0, 1) == 1);
}

TEST_CASE("count_power_solutions with trivial left action counts nth roots in G") {
    MatchedPair mp = MatchedPair::trivial(FiniteGroup::cyclic(2), FiniteGroup::cyclic(4));
    for (long n = 1; n <= 4; ++n) {
        long expect = 0;
        FiniteGroup z4 = FiniteGroup::cyclic(4);
        for (long x = 0; x < 4; ++x) {
            if (z4.power(x, n) == z4.identity()) ++expect;
        }
        CHECK(count_power_solutions(mp, 0, n) == expect);
    }
}

TEST_CASE("exact factorizations of S3 and S4") {
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    auto facts3 = exact_factorizations(s3);
    // (1,S3), (S3,1), and Z2 x Z3 type pairs must appear
    bool has23 = false;
    for (auto& [f, g] : facts3) {
        if (f.size() == 2 && g.size() == 3) has23 = true;
        MatchedPair mp = matched_pair_from_factorization(s3, f, g);
        CHECK(is_isomorphic(double_group(mp), s3));
    }
    CHECK(has23);

    FiniteGroup s4 = FiniteGroup::symmetric(4);
    auto facts4 = exact_factorizations(s4);
    bool has_s3_z4 = false, has_a4_z2 = false;
    for (auto& [f, g] : facts4) {
        if (f.size() == 6 && g.size() == 4) has_s3_z4 = true;
        if (f.size() == 12 && g.size() == 2) has_a4_z2 = true;
    }
    CHECK(has_s3_z4);
    CHECK(has_a4_z2);
}

TEST_CASE("group exponent of doubles divides group order on small census") {
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    for (auto& [f, g] : exact_factorizations(s3)) {
        MatchedPair mp = matched_pair_from_factorization(s3, f, g);
        FiniteGroup d = double_group(mp);
        CHECK(d.order() % d.exponent() == 0);
    }
}

TEST_CASE("isomorphism distinguishes D4 from Q8") {
    CHECK_FALSE(is_isomorphic(FiniteGroup::dihedral(4), FiniteGroup::quaternion8()));
    CHECK(is_isomorphic(FiniteGroup::dihedral(3), FiniteGroup::symmetric(3)));
}
