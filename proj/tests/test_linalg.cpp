#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfind/linalg.hpp"

#include <random>

using namespace hopfind;

namespace {

Matrix random_matrix(std::mt19937& rng, long r, long c, int lo = -2, int hi = 2) {
    std::uniform_int_distribution<int> d(lo, hi);
    Matrix m(r, c);
    for (long i = 0; i < r; ++i) {
        for (long j = 0; j < c; ++j) m.at(i, j) = CycScalar(d(rng));
    }
    return m;
}

}  // namespace

TEST_CASE("kernel of identity and of zero map") {
    CHECK(kernel_basis(Matrix::identity(2)).empty());
    Matrix z(1, 2);
    auto k = kernel_basis(z);
    CHECK(k.size() == 2);
}

TEST_CASE("kernel of the all-ones 2x2 matrix") {
    Matrix m(2, 2);
    m.at(0, 0) = m.at(0, 1) = m.at(1, 0) = m.at(1, 1) = CycScalar(1);
    auto k = kernel_basis(m);
    REQUIRE(k.size() == 1);
    // proportional to (1, -1); canonical form has free variable 1
    CHECK(k[0][0] == -k[0][1]);
    CHECK_FALSE(k[0][1].is_zero());
}

TEST_CASE("solve_linear basics") {
    Matrix id = Matrix::identity(3);
    Vec e1{CycScalar(1), CycScalar(0), CycScalar(0)};
    auto x = solve_linear(id, e1);
    REQUIRE(x.has_value());
    CHECK(*x == e1);

    Matrix z(1, 1);
    CHECK_FALSE(solve_linear(z, Vec{CycScalar(1)}).has_value());

    Matrix two(1, 1);
    two.at(0, 0) = CycScalar(2);
    auto y = solve_linear(two, Vec{CycScalar(1)});
    REQUIRE(y.has_value());
    CHECK((*y)[0] == CycScalar(Rational(1, 2)));
}

TEST_CASE("trace kron inverse basics") {
    CHECK(Matrix::identity(3).trace() == CycScalar(3));
    CHECK(kron(Matrix::identity(2), Matrix::identity(2)) == Matrix::identity(4));
    Matrix swp(2, 2);
    swp.at(0, 1) = CycScalar(1);
    swp.at(1, 0) = CycScalar(1);
    CHECK(inverse(swp) == swp);
    Matrix z(2, 2);
    CHECK_THROWS_AS(inverse(z), SingularMatrix);
}

TEST_CASE("rank-nullity and kernel vectors annihilate") {
    std::mt19937 rng(42);
    for (int iter = 0; iter < 40; ++iter) {
        long r = 1 + static_cast<long>(rng() % 5), c = 1 + static_cast<long>(rng() % 5);
        Matrix m = random_matrix(rng, r, c);
        auto k = kernel_basis(m);
        CHECK(rank(m) + static_cast<long>(k.size()) == c);
        for (const auto& v : k) {
            CHECK(vec_is_zero(m.apply(v)));
        }
    }
}

TEST_CASE("inverse of random invertible matrices") {
    std::mt19937 rng(7);
    int done = 0;
    while (done < 15) {
        long n = 2 + static_cast<long>(rng() % 5);
        Matrix m = random_matrix(rng, n, n);
        if (rank(m) != n) continue;
        CHECK(inverse(m) * m == Matrix::identity(n));
        ++done;
    }
}

TEST_CASE("trace of AB equals trace of BA") {
    std::mt19937 rng(11);
    for (int iter = 0; iter < 25; ++iter) {
        long r = 1 + static_cast<long>(rng() % 4), c = 1 + static_cast<long>(rng() % 4);
        Matrix a = random_matrix(rng, r, c), b = random_matrix(rng, c, r);
        CHECK((a * b).trace() == (b * a).trace());
    }
}

TEST_CASE("elimination handles cyclotomic entries") {
    Matrix m(2, 2);
    m.at(0, 0) = CycScalar::root_of_unity(3, 1);
    m.at(0, 1) = CycScalar(1);
    m.at(1, 0) = CycScalar(1);
    m.at(1, 1) = CycScalar::root_of_unity(3, 2);
    // rows are proportional: zeta3 * (1, zeta3^2) = (zeta3, 1)
    CHECK(rank(m) == 1);
    auto k = kernel_basis(m);
    REQUIRE(k.size() == 1);
    CHECK(vec_is_zero(m.apply(k[0])));
}
