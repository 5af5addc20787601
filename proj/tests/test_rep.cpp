#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfind/rep.hpp"

using namespace hopfind;

namespace {

long roots_of_unity_count(const FiniteGroup& g, long n) {
    long c = 0;
    for (long x = 0; x < g.order(); ++x) {
        if (g.power(x, n) == g.identity()) ++c;
    }
    return c;
}

}  // namespace

TEST_CASE("regular module basics") {
    HopfAlgebra z2 = group_algebra(FiniteGroup::cyclic(2));
    HModule reg = regular_module(z2);
    CHECK(validate_module(reg).empty());
    // permutation matrices
    CHECK(reg.actions[0] == Matrix::identity(2));
    Matrix swap2(2, 2);
    swap2.at(0, 1) = CycScalar(1);
    swap2.at(1, 0) = CycScalar(1);
    CHECK(reg.actions[1] == swap2);

    Character chi = character_of(reg);
    CHECK(chi.values[0] == CycScalar(2));
    CHECK(chi.values[1] == CycScalar(0));
}

TEST_CASE("trivial and one dimensional modules") {
    HopfAlgebra s3 = group_algebra(FiniteGroup::symmetric(3));
    HModule triv = trivial_module(s3);
    CHECK(validate_module(triv).empty());
    CHECK(character_of(triv).values == s3.counit);

    // sign character of S3
    FiniteGroup g = FiniteGroup::symmetric(3);
    Vec sign(static_cast<std::size_t>(g.order()));
    for (long i = 0; i < g.order(); ++i) {
        sign[static_cast<std::size_t>(i)] = CycScalar(g.element_order(i) == 2 ? -1 : 1);
    }
    HModule sgn = one_dim_module(s3, sign);
    CHECK(validate_module(sgn).empty());

    // a non-character must be rejected
    Vec bad(static_cast<std::size_t>(g.order()), CycScalar(1));
    bad[1] = CycScalar(2);
    CHECK_THROWS_AS(one_dim_module(s3, bad), NotAnAlgebraCharacter);

    // evaluation characters on a dual group algebra
    HopfAlgebra ds3 = dual_group_algebra(g);
    for (long x = 0; x < g.order(); ++x) {
        Vec ev(static_cast<std::size_t>(g.order()));
        ev[static_cast<std::size_t>(x)] = CycScalar(1);
        CHECK(validate_module(one_dim_module(ds3, ev)).empty());
    }
}

TEST_CASE("character additivity over direct sums") {
    HopfAlgebra s3 = group_algebra(FiniteGroup::symmetric(3));
    HModule reg = regular_module(s3);
    HModule triv = trivial_module(s3);
    HModule sum = direct_sum(reg, triv);
    CHECK(validate_module(sum).empty());
    Character cs = character_of(sum);
    Character cr = character_of(reg);
    Character ct = character_of(triv);
    for (long i = 0; i < s3.dim; ++i) {
        CHECK(cs.values[static_cast<std::size_t>(i)] ==
              cr.values[static_cast<std::size_t>(i)] + ct.values[static_cast<std::size_t>(i)]);
    }
}

TEST_CASE("indicators of regular group algebra modules count roots of unity") {
    for (const FiniteGroup& g : {FiniteGroup::cyclic(4), FiniteGroup::symmetric(3), FiniteGroup::dihedral(4),
                                 FiniteGroup::quaternion8()}) {
        HopfAlgebra h = group_algebra(g);
        IndicatorEngine eng(h);
        Vec chi = character_of(regular_module(h)).values;
        for (long n = 1; n <= g.exponent(); ++n) {
            CHECK(eng.of_character(chi, n) == CycScalar(roots_of_unity_count(g, n)));
        }
    }
}

TEST_CASE("nu_2 of regular CS3 is 4 and nu_1 is 1") {
    HopfAlgebra s3 = group_algebra(FiniteGroup::symmetric(3));
    HModule reg = regular_module(s3);
    CHECK(indicator(reg, 2) == CycScalar(4));
    CHECK(indicator(reg, 1) == CycScalar(1));
    CHECK(indicator(trivial_module(s3), 5) == CycScalar(1));
}

TEST_CASE("fs exponents") {
    CHECK(fs_exponent(group_algebra(FiniteGroup::trivial())) == 1);
    CHECK(fs_exponent(group_algebra(FiniteGroup::cyclic(4))) == 4);
    CHECK(fs_exponent(dual_group_algebra(FiniteGroup::symmetric(3))) == 6);
    CHECK(fs_exponent(dual_group_algebra(FiniteGroup::symmetric(3))) ==
          exponent(dual_group_algebra(FiniteGroup::symmetric(3))));
}

TEST_CASE("dixon character table of Z3") {
    CharTable t = dixon_char_table(FiniteGroup::cyclic(3));
    REQUIRE(t.rows.size() == 3);
    CHECK(t.degrees == std::vector<long>{1, 1, 1});
    CycScalar z3 = CycScalar::root_of_unity(3, 1);
    bool has_z3 = false, has_z3sq = false;
    for (const auto& row : t.rows) {
        if (row[1] == z3) has_z3 = true;
        if (row[1] == z3 * z3) has_z3sq = true;
    }
    CHECK(has_z3);
    CHECK(has_z3sq);
}

TEST_CASE("dixon degrees for S3 Q8 A4 S4") {
    CHECK(dixon_char_table(FiniteGroup::symmetric(3)).degrees == std::vector<long>{1, 1, 2});
    CHECK(dixon_char_table(FiniteGroup::quaternion8()).degrees == std::vector<long>{1, 1, 1, 1, 2});
    CHECK(dixon_char_table(FiniteGroup::alternating(4)).degrees == std::vector<long>{1, 1, 1, 3});
    CHECK(dixon_char_table(FiniteGroup::symmetric(4)).degrees == std::vector<long>{1, 1, 2, 3, 3});
    CHECK(dixon_char_table(FiniteGroup::dihedral(4)).degrees == std::vector<long>{1, 1, 1, 1, 2});
}

TEST_CASE("dixon rows satisfy exact first orthogonality") {
    for (const FiniteGroup& g : {FiniteGroup::symmetric(3), FiniteGroup::quaternion8(), FiniteGroup::alternating(4)}) {
        CharTable t = dixon_char_table(g);
        for (std::size_t a = 0; a < t.rows.size(); ++a) {
            for (std::size_t b = 0; b < t.rows.size(); ++b) {
                CycScalar s;
                for (long x = 0; x < g.order(); ++x) {
                    s += t.rows[a][static_cast<std::size_t>(x)] * t.rows[b][static_cast<std::size_t>(g.inverse(x))];
                }
                CHECK(s == (a == b ? CycScalar(g.order()) : CycScalar(0)));
            }
        }
        // regular character decomposition
        for (long x = 0; x < g.order(); ++x) {
            CycScalar s;
            for (std::size_t a = 0; a < t.rows.size(); ++a) {
                s += CycScalar(t.degrees[a]) * t.rows[a][static_cast<std::size_t>(x)];
            }
            CHECK(s == CycScalar(x == g.identity() ? g.order() : 0));
        }
    }
}

TEST_CASE("dixon output is deterministic") {
    CharTable a = dixon_char_table(FiniteGroup::symmetric(4));
    CharTable b = dixon_char_table(FiniteGroup::symmetric(4));
    REQUIRE(a.rows.size() == b.rows.size());
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        CHECK(a.rows[i] == b.rows[i]);
    }
}

TEST_CASE("irr_characters provenance transport") {
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    HopfAlgebra d = dual_group_algebra(s3);
    CharTable t = irr_characters(d);
    CHECK(t.rows.size() == 6);
    for (long deg : t.degrees) CHECK(deg == 1);

    HopfAlgebra tens = tensor_hopf(group_algebra(FiniteGroup::cyclic(2)), group_algebra(FiniteGroup::cyclic(2)));
    CharTable tt = irr_characters(tens);
    CHECK(tt.rows.size() == 4);
    for (long deg : tt.degrees) CHECK(deg == 1);

    CharTable tc = irr_characters(op_cop_variants(group_algebra(s3), false, true));
    CHECK(tc.degrees == std::vector<long>{1, 1, 2});

    HopfAlgebra generic = group_algebra(s3);
    generic.prov = Provenance{};
    CHECK_THROWS_AS(irr_characters(generic), UnsupportedProvenance);
}

TEST_CASE("twisted tensor characters") {
    FiniteGroup z2g = FiniteGroup::cyclic(2);
    HopfAlgebra h = group_algebra(z2g);
    HopfAlgebra k = group_algebra(z2g);
    HModule v = regular_module(h);
    Vec chi_v = character_of(v).values;

    // trivial sigma_r = unit . counit
    Matrix triv(2, 2);
    for (long j = 0; j < 2; ++j) {
        for (long i = 0; i < 2; ++i) triv.at(i, j) = k.unit[static_cast<std::size_t>(i)] * h.counit[static_cast<std::size_t>(j)];
    }
    Vec chi_w = character_of(regular_module(k)).values;
    Vec tw = twisted_tensor_character(h, chi_v, k, chi_w, triv);
    for (long i = 0; i < 2; ++i) {
        CHECK(tw[static_cast<std::size_t>(i)] == chi_v[static_cast<std::size_t>(i)] * CycScalar(2));
    }

    // sigma_r = identity: matches the explicitly built diagonal module
    Matrix id2 = Matrix::identity(2);
    Vec tw2 = twisted_tensor_character(h, chi_v, k, chi_w, id2);
    std::vector<Matrix> acts;
    HModule w = regular_module(k);
    for (long i = 0; i < 2; ++i) {
        acts.push_back(kron(v.actions[static_cast<std::size_t>(i)], w.actions[static_cast<std::size_t>(i)]));
    }
    HModule diag = module_from_actions(h, std::move(acts));
    CHECK(tw2 == character_of(diag).values);

    // non algebra map must be rejected
    Matrix bad(2, 2);
    bad.at(0, 0) = CycScalar(1);
    bad.at(1, 1) = CycScalar(2);
    CHECK_THROWS_AS(twisted_tensor_character(h, chi_v, k, chi_w, bad), NotAlgebraMap);
}

TEST_CASE("indicator algebraic laws") {
    FiniteGroup s3g = FiniteGroup::symmetric(3);
    HopfAlgebra a = group_algebra(s3g);
    HopfAlgebra b = dual_group_algebra(FiniteGroup::cyclic(3));
    HopfAlgebra ab = tensor_hopf(a, b);

    HModule ma = regular_module(a);
    HModule mb = regular_module(b);
    HModule mab = tensor_module(ab, ma, mb);
    CHECK(validate_module(mab).empty());

    IndicatorEngine ea(a), eb(b), eab(ab);
    for (long n = 1; n <= 6; ++n) {
        CHECK(eab.of_module(mab, n) == ea.of_module(ma, n) * eb.of_module(mb, n));
    }

    // additivity
    HModule msum = direct_sum(ma, trivial_module(a));
    for (long n = 1; n <= 6; ++n) {
        CHECK(ea.of_module(msum, n) == ea.of_module(ma, n) + ea.of_module(trivial_module(a), n));
    }

    // op/cop twist: nu_n over K^op of M* equals nu_n over K^cop of M
    HopfAlgebra kop = op_cop_variants(a, true, false);
    HopfAlgebra kcop = op_cop_variants(a, false, true);
    HModule mstar = contragredient_module(kop, ma);
    CHECK(validate_module(mstar).empty());
    IndicatorEngine eop(kop), ecop(kcop);
    for (long n = 1; n <= 6; ++n) {
        CHECK(eop.of_module(mstar, n) == ecop.of_module(ma, n));
    }
}

TEST_CASE("indicator periodicity in the exponent") {
    HopfAlgebra h = dual_group_algebra(FiniteGroup::symmetric(3));
    long e = exponent(h);
    IndicatorEngine eng(h);
    Vec chi = character_of(regular_module(h)).values;
    for (long n = 1; n <= e; ++n) {
        CHECK(eng.of_character(chi, n + e) == eng.of_character(chi, n));
    }
}
