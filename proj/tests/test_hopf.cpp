#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfind/hopf.hpp"

#include <map>

using namespace hopfind;

namespace {

HopfAlgebra trivial_hopf() { return group_algebra(FiniteGroup::trivial()); }

Vec basis_vec(long d, long i) {
    Vec v(static_cast<std::size_t>(d));
    v[static_cast<std::size_t>(i)] = CycScalar(1);
    return v;
}

// Independent Sweedler-power oracle: expand Delta^(n-1) into basis legs and
// multiply the legs left to right. Exponential in n; test sizes only.
Vec sweedler_slow(const HopfAlgebra& h, const Vec& x, long n) {
    using Term = std::pair<std::vector<long>, CycScalar>;
    std::vector<Term> terms;
    for (long i = 0; i < h.dim; ++i) {
        if (!x[static_cast<std::size_t>(i)].is_zero()) terms.push_back({{i}, x[static_cast<std::size_t>(i)]});
    }
    for (long step = 1; step < n; ++step) {
        std::vector<Term> next;
        for (const auto& [legs, c] : terms) {
            long head = legs[0];
            for (long j = 0; j < h.dim; ++j) {
                for (long k = 0; k < h.dim; ++k) {
                    const CycScalar& t = h.comul.at(head, j, k);
                    if (t.is_zero()) continue;
                    std::vector<long> nl;
                    nl.push_back(j);
                    nl.push_back(k);
                    nl.insert(nl.end(), legs.begin() + 1, legs.end());
                    next.push_back({std::move(nl), c * t});
                }
            }
        }
        terms = std::move(next);
    }
    Vec out(static_cast<std::size_t>(h.dim));
    for (const auto& [legs, c] : terms) {
        Vec prod = basis_vec(h.dim, legs[0]);
        for (std::size_t i = 1; i < legs.size(); ++i) {
            prod = h.multiply(prod, basis_vec(h.dim, legs[i]));
        }
        for (long m = 0; m < h.dim; ++m) out[static_cast<std::size_t>(m)] += c * prod[static_cast<std::size_t>(m)];
    }
    return out;
}

}  // namespace

TEST_CASE("constructors pass validate_hopf") {
    CHECK(validate_hopf(trivial_hopf()).empty());
    CHECK(validate_hopf(group_algebra(FiniteGroup::cyclic(2))).empty());
    CHECK(validate_hopf(group_algebra(FiniteGroup::symmetric(3))).empty());
    CHECK(validate_hopf(dual_group_algebra(FiniteGroup::symmetric(3))).empty());
    CHECK(validate_hopf(dual_hopf(group_algebra(FiniteGroup::symmetric(3)))).empty());
    CHECK(validate_hopf(group_algebra(FiniteGroup::quaternion8())).empty());
}

TEST_CASE("group algebra of Z2 has identity antipode") {
    HopfAlgebra h = group_algebra(FiniteGroup::cyclic(2));
    CHECK(h.dim == 2);
    CHECK(h.antipode == Matrix::identity(2));
}

TEST_CASE("broken antipode is reported at a transposition") {
    HopfAlgebra h = group_algebra(FiniteGroup::symmetric(3));
    h.antipode = Matrix::identity(6);
    auto report = validate_hopf(h);
    CHECK_FALSE(report.empty());
    bool antipode_hit = false;
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    for (const auto& v : report) {
        if (v.axiom.find("antipode") != std::string::npos) {
            // witnesses must be order-3 elements: S = id is fine on involutions
            CHECK(s3.element_order(v.witness[0]) == 3);
            antipode_hit = true;
        }
    }
    CHECK(antipode_hit);
}

TEST_CASE("dual of group algebra is the dual group algebra entrywise") {
    for (long n : {1L, 2L, 3L, 4L}) {
        FiniteGroup g = FiniteGroup::cyclic(n);
        CHECK(dual_hopf(group_algebra(g)).structure_equal(dual_group_algebra(g)));
    }
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    CHECK(dual_hopf(group_algebra(s3)).structure_equal(dual_group_algebra(s3)));
}

TEST_CASE("double dual is the identity") {
    HopfAlgebra h = group_algebra(FiniteGroup::symmetric(3));
    CHECK(dual_hopf(dual_hopf(h)).structure_equal(h));
}

TEST_CASE("dual of tensor is tensor of duals") {
    HopfAlgebra a = group_algebra(FiniteGroup::cyclic(2));
    HopfAlgebra b = dual_group_algebra(FiniteGroup::symmetric(3));
    CHECK(dual_hopf(tensor_hopf(a, b)).structure_equal(tensor_hopf(dual_hopf(a), dual_hopf(b))));
}

TEST_CASE("op and cop variants") {
    HopfAlgebra z3 = group_algebra(FiniteGroup::cyclic(3));
    CHECK(op_cop_variants(z3, true, false).structure_equal(z3));  // commutative
    HopfAlgebra s3 = group_algebra(FiniteGroup::symmetric(3));
    HopfAlgebra op = op_cop_variants(s3, true, false);
    CHECK(op_cop_variants(op, true, false).structure_equal(s3));
    HopfAlgebra cop = op_cop_variants(s3, false, true);
    CHECK(validate_hopf(cop).empty());
    CHECK(cop.antipode == s3.antipode);  // S^2 = id for group algebras
    CHECK(validate_hopf(op_cop_variants(s3, true, true)).empty());
    CHECK(validate_hopf(op_cop_variants(dual_group_algebra(FiniteGroup::symmetric(3)), false, true)).empty());
}

TEST_CASE("tensor with the trivial algebra is the identity") {
    HopfAlgebra a = group_algebra(FiniteGroup::symmetric(3));
    CHECK(tensor_hopf(a, trivial_hopf()).structure_equal(a));
    CHECK(tensor_hopf(a, trivial_hopf()).dim == a.dim);
}

TEST_CASE("Z2 tensor Z3 is Z6 under the CRT relabelling") {
    HopfAlgebra t = tensor_hopf(group_algebra(FiniteGroup::cyclic(2)), group_algebra(FiniteGroup::cyclic(3)));
    HopfAlgebra z6 = group_algebra(FiniteGroup::cyclic(6));
    CHECK(validate_hopf(t).empty());
    // relabel: k in Z6 -> (k mod 2) * 3 + (k mod 3)
    std::vector<long> perm(6);
    for (long k = 0; k < 6; ++k) perm[static_cast<std::size_t>(k)] = (k % 2) * 3 + (k % 3);
    for (long i = 0; i < 6; ++i) {
        for (long j = 0; j < 6; ++j) {
            for (long k = 0; k < 6; ++k) {
                CHECK(z6.mul.at(i, j, k) == t.mul.at(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)],
                                                     perm[static_cast<std::size_t>(k)]));
            }
        }
    }
    CHECK(t.dim == 6);
}

TEST_CASE("normalized integrals") {
    HopfAlgebra triv = trivial_hopf();
    CHECK(normalized_integral(triv).coords == Vec{CycScalar(1)});

    FiniteGroup s3 = FiniteGroup::symmetric(3);
    HElement lam = normalized_integral(group_algebra(s3));
    for (long i = 0; i < 6; ++i) {
        CHECK(lam.coords[static_cast<std::size_t>(i)] == CycScalar(Rational(1, 6)));
    }

    HElement dual_lam = normalized_integral(dual_group_algebra(s3));
    for (long i = 0; i < 6; ++i) {
        CHECK(dual_lam.coords[static_cast<std::size_t>(i)] == (i == s3.identity() ? CycScalar(1) : CycScalar(0)));
    }
}

TEST_CASE("sweedler powers") {
    HopfAlgebra z2 = group_algebra(FiniteGroup::cyclic(2));
    Vec lam = normalized_integral(z2).coords;
    CHECK(sweedler_power(z2, lam, 1) == lam);
    // Lambda^[2] = (1*1 + g*g)/2 = 1
    Vec one(2);
    one[0] = CycScalar(1);
    CHECK(sweedler_power(z2, lam, 2) == one);

    // grouplikes: g^[n] = g^n
    FiniteGroup z4 = FiniteGroup::cyclic(4);
    HopfAlgebra h = group_algebra(z4);
    for (long g = 0; g < 4; ++g) {
        for (long n = 1; n <= 5; ++n) {
            CHECK(sweedler_power(h, basis_vec(4, g), n) == basis_vec(4, z4.power(g, n)));
        }
    }
}

TEST_CASE("hopf power map basics") {
    HopfAlgebra z2 = group_algebra(FiniteGroup::cyclic(2));
    CHECK(hopf_power_map(z2, 1) == Matrix::identity(2));
    Matrix p2 = hopf_power_map(z2, 2);
    // both 1 and g square to 1
    CHECK(p2.at(0, 0) == CycScalar(1));
    CHECK(p2.at(0, 1) == CycScalar(1));
    CHECK(p2.at(1, 0) == CycScalar(0));
    CHECK(p2.at(1, 1) == CycScalar(0));
    CHECK(p2 == unit_counit_matrix(z2));
}

TEST_CASE("power maps agree with the slow fold") {
    for (const HopfAlgebra& h : {group_algebra(FiniteGroup::symmetric(3)),
                                 dual_group_algebra(FiniteGroup::cyclic(4))}) {
        PowerMapEngine eng(h);
        for (long n = 1; n <= 4; ++n) {
            for (long i = 0; i < h.dim; ++i) {
                Vec x = basis_vec(h.dim, i);
                CHECK(eng.power(n).apply(x) == sweedler_slow(h, x, n));
            }
        }
    }
}

TEST_CASE("exponents of census algebras") {
    CHECK(exponent(trivial_hopf()) == 1);
    for (long n : {2L, 3L, 4L, 6L}) {
        CHECK(exponent(group_algebra(FiniteGroup::cyclic(n))) == n);
    }
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    CHECK(exponent(group_algebra(s3)) == 6);
    CHECK(exponent(dual_group_algebra(s3)) == 6);
    CHECK(exponent(hopfind::op_cop_variants(group_algebra(s3), true, false)) == 6);
    CHECK(exponent(hopfind::op_cop_variants(group_algebra(s3), false, true)) == 6);
    CHECK(exponent(dual_hopf(group_algebra(FiniteGroup::quaternion8()))) == 4);
}

TEST_CASE("counit of integral sweedler powers is 1") {
    HopfAlgebra h = dual_group_algebra(FiniteGroup::symmetric(3));
    Vec lam = normalized_integral(h).coords;
    for (long n = 1; n <= 8; ++n) {
        CHECK(h.counit_of(sweedler_power(h, lam, n)) == CycScalar(1));
    }
}

TEST_CASE("power map at the exponent is unit counit") {
    HopfAlgebra h = group_algebra(FiniteGroup::dihedral(4));
    long e = exponent(h);
    CHECK(e == 4);
    CHECK(hopf_power_map(h, e) == unit_counit_matrix(h));
    CHECK(hopf_power_map(h, 2 * e) == unit_counit_matrix(h));
}
