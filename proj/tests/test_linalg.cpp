#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "amalgam/matrix.hpp"
#include "amalgam/subspace.hpp"

#include <random>

using namespace amalgam;

namespace {

Matrix mat(std::size_t r, std::size_t c, std::vector<long> entries) {
    std::vector<Rational> e(entries.begin(), entries.end());
    return Matrix(r, c, std::move(e));
}

Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-6, 6);
    std::uniform_int_distribution<long> den(1, 4);
    return Rational(num(rng), den(rng));
}

Matrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c) {
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = random_rational(rng);
    return m;
}

}  // namespace

TEST_CASE("rational canonical form and arithmetic") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(2, 4).str() == "1/2");
    CHECK(Rational(-4, 2).str() == "-2");
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK((Rational(2, 3) * Rational(9, 4)) == Rational(3, 2));
    CHECK((Rational(1, 2) / Rational(1, 4)) == Rational(2));
    CHECK(Rational::parse("7/3") == Rational(7, 3));
    CHECK(Rational::parse("-12") == Rational(-12));
    CHECK(Rational::parse("4/6") == Rational(2, 3));
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
    CHECK(Rational(-3, 7) < Rational(0));
    CHECK(Rational(-3, 7).abs() == Rational(3, 7));
}

TEST_CASE("rref on the spec cases") {
    SUBCASE("identity") {
        RrefResult r = rref(Matrix::identity(2));
        CHECK(r.matrix == Matrix::identity(2));
        CHECK(r.rank == 2);
        CHECK(r.pivot_columns == std::vector<std::size_t>{0, 1});
    }
    SUBCASE("dependent rows") {
        RrefResult r = rref(mat(2, 2, {1, 2, 2, 4}));
        CHECK(r.matrix == mat(2, 2, {1, 2, 0, 0}));
        CHECK(r.rank == 1);
        CHECK(r.pivot_columns == std::vector<std::size_t>{0});
    }
    SUBCASE("permutation") {
        RrefResult r = rref(mat(2, 2, {0, 1, 1, 0}));
        CHECK(r.matrix == Matrix::identity(2));
        CHECK(r.rank == 2);
    }
}

TEST_CASE("null space on the spec cases") {
    CHECK(null_space_basis(Matrix(2, 3)).rows() == 3);  // zero map, full kernel
    CHECK(null_space_basis(Matrix::identity(3)).rows() == 0);
    Matrix nb = null_space_basis(mat(1, 2, {1, 1}));
    REQUIRE(nb.rows() == 1);
    CHECK(nb.row(0) == Vec{Rational(1), Rational(-1)});
}

TEST_CASE("solve on the spec cases") {
    auto x = solve(Matrix::identity(2), {Rational(3, 2), Rational(-1)});
    REQUIRE(x.has_value());
    CHECK(*x == Vec{Rational(3, 2), Rational(-1)});

    auto y = solve(mat(1, 2, {1, 1}), {Rational(2)});
    REQUIRE(y.has_value());
    CHECK((*y)[0] + (*y)[1] == Rational(2));

    CHECK_FALSE(solve(mat(2, 1, {1, 1}), {Rational(0), Rational(1)}).has_value());
}

TEST_CASE("subspace operations on the spec cases") {
    Subspace e0 = Subspace::span_of({{Rational(1), Rational(0)}}, 2);
    Subspace e1 = Subspace::span_of({{Rational(0), Rational(1)}}, 2);

    SUBCASE("same subspace") {
        SubspaceOps r = subspace_ops(e0, e0);
        CHECK(r.sum == e0);
        CHECK(r.intersection == e0);
        CHECK(r.equal);
        CHECK(r.a_contained_in_b);
    }
    SUBCASE("complementary lines") {
        SubspaceOps r = subspace_ops(e0, e1);
        CHECK(r.sum.is_full());
        CHECK(r.intersection.is_zero());
        CHECK_FALSE(r.equal);
    }
    SUBCASE("zero subspace is contained in everything") {
        SubspaceOps r = subspace_ops(Subspace::zero(2), e1);
        CHECK(r.a_contained_in_b);
        CHECK(r.sum == e1);
    }
    SUBCASE("ambient mismatch") {
        CHECK_THROWS_AS(subspace_ops(e0, Subspace::zero(3)), std::invalid_argument);
    }
}

TEST_CASE("properties over random matrices") {
    std::mt19937 rng(20240811);
    for (int iter = 0; iter < 60; ++iter) {
        std::uniform_int_distribution<std::size_t> dim(1, 6);
        std::size_t r = dim(rng), c = dim(rng);
        Matrix m = random_matrix(rng, r, c);

        // m annihilates its null space, exactly
        Matrix nb = null_space_basis(m);
        for (std::size_t i = 0; i < nb.rows(); ++i)
            CHECK(is_zero_vec(m.apply(nb.row(i))));
        CHECK(nb.rows() + rank(m) == c);

        // rref is idempotent
        Matrix r1 = rref(m).matrix;
        CHECK(rref(r1).matrix == r1);

        // solve(m, m x) reproduces m x
        Vec x(c);
        for (auto& xi : x) xi = random_rational(rng);
        Vec b = m.apply(x);
        auto sol = solve(m, b);
        REQUIRE(sol.has_value());
        CHECK(m.apply(*sol) == b);
    }
}

TEST_CASE("dimension formula for sum and intersection") {
    std::mt19937 rng(7);
    for (int iter = 0; iter < 40; ++iter) {
        std::uniform_int_distribution<std::size_t> dim(1, 5);
        std::size_t n = dim(rng);
        std::uniform_int_distribution<std::size_t> nrows(0, n);
        Subspace a = Subspace::span(random_matrix(rng, nrows(rng), n), n);
        Subspace b = Subspace::span(random_matrix(rng, nrows(rng), n), n);
        SubspaceOps ops = subspace_ops(a, b);
        CHECK(ops.sum.dim() + ops.intersection.dim() == a.dim() + b.dim());
        CHECK(ops.sum.contains(a));
        CHECK(ops.sum.contains(b));
        CHECK(a.contains(ops.intersection));
        CHECK(b.contains(ops.intersection));
    }
}
