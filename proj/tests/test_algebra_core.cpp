#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "amalgam/algebra.hpp"
#include "amalgam/corpus.hpp"

using namespace amalgam;

namespace {

Vec vec(std::vector<long> v) { return Vec(v.begin(), v.end()); }

Vec basis(std::size_t n, std::size_t i) {
    Vec v(n);
    v[i] = 1;
    return v;
}

}  // namespace

TEST_CASE("make_algebra accepts the small valid tables") {
    CHECK(corpus::rationals()->dim() == 1);
    CHECK(corpus::dual_numbers()->dim() == 2);
    CHECK(corpus::zero()->dim() == 0);
}

TEST_CASE("make_algebra rejects a non-associative table with a valid witness") {
    // e0 e0 = e1, e1 e0 = e0, everything else zero:
    // (e0 e0) e0 = e1 e0 = e0, but e0 (e0 e0) = e0 e1 = 0
    std::vector<Rational> table(8);
    table[(0 * 2 + 0) * 2 + 1] = 1;  // e0 e0 = e1
    table[(1 * 2 + 0) * 2 + 0] = 1;  // e1 e0 = e0
    try {
        FiniteAlgebra::make(2, {}, table);
        FAIL("expected AssociativityViolation");
    } catch (const AssociativityViolation& e) {
        CHECK(e.i == 0);
        CHECK(e.j == 0);
        CHECK(e.k == 0);
    }
}

TEST_CASE("make_algebra rejects duplicate labels and bad weights") {
    std::vector<Rational> table(1);
    CHECK_THROWS_AS(FiniteAlgebra::make(2, {"a", "a"}, std::vector<Rational>(8)),
                    DuplicateLabel);
    CHECK_THROWS_AS(FiniteAlgebra::make(1, {"a"}, table, {Rational(0)}), NonpositiveWeight);
    CHECK_THROWS_AS(FiniteAlgebra::make(1, {"a"}, table, {Rational(-2)}), NonpositiveWeight);
}

TEST_CASE("multiply is the bilinear extension of the table") {
    auto dual = corpus::dual_numbers();
    CHECK(dual->multiply(Vec(2), vec({1, 1})) == Vec(2));  // 0 x = 0
    // (1 + eps)^2 = 1 + 2 eps
    CHECK(dual->multiply(vec({1, 1}), vec({1, 1})) == vec({1, 2}));

    // (1,1)(1,1) = (1,3) in Q bowtie^id Q
    auto r = identity_amalgam(corpus::rationals());
    CHECK(r.algebra->multiply(vec({1, 1}), vec({1, 1})) == vec({1, 3}));

    AlgebraElement x{dual, vec({1, 1})}, y{dual, vec({0, 1})};
    CHECK((x * y).coords == vec({0, 1}));
    AlgebraElement foreign{corpus::rationals(), vec({1})};
    CHECK_THROWS_AS(x * foreign, AlgebraMismatch);
}

TEST_CASE("verify_homomorphism") {
    auto dual = corpus::dual_numbers();
    CHECK(verify_homomorphism(identity_map(dual)).multiplicative);
    CHECK(verify_homomorphism(zero_map(dual, corpus::rationals())).multiplicative);

    // dual numbers -> Q with 1 -> 1, eps -> 1 fails at (eps, eps)
    Matrix m(1, 2);
    m.at(0, 0) = 1;
    m.at(0, 1) = 1;
    AlgebraMap bad{dual, corpus::rationals(), m, false};
    HomomorphismCheck chk = verify_homomorphism(bad);
    CHECK_FALSE(chk.multiplicative);
    CHECK(chk.witness == std::make_pair(std::size_t{1}, std::size_t{1}));
    CHECK_THROWS_AS(make_homomorphism(dual, corpus::rationals(), m), UncertifiedMap);
}

TEST_CASE("operator_norm_bound") {
    auto q = corpus::rationals();
    CHECK(operator_norm_bound(identity_map(q)) == Rational(1));
    CHECK(operator_norm_bound(zero_map(q, q)) == Rational(0));

    Matrix doubling = Matrix::identity(2);
    doubling.at(1, 1) = 2;
    auto dual = corpus::dual_numbers();
    AlgebraMap m{dual, dual, doubling, false};
    CHECK(operator_norm_bound(m) == Rational(2));
}

TEST_CASE("verify_ideal") {
    auto dual = corpus::dual_numbers();
    CHECK(verify_ideal(full_ideal(dual)).two_sided);

    IdealEmbedding eps{dual, Subspace::span_of({vec({0, 1})}, 2), false};
    CHECK(verify_ideal(eps).two_sided);

    auto qq = corpus::q_times_q();
    IdealEmbedding first{qq, Subspace::span_of({vec({1, 0})}, 2), false};
    CHECK(verify_ideal(first).two_sided);

    IdealEmbedding diag{qq, Subspace::span_of({vec({1, 1})}, 2), false};
    IdealCheck chk = verify_ideal(diag);
    CHECK_FALSE(chk.two_sided);
    REQUIRE(chk.witness.has_value());
    // the witness re-verifies: multiplying the flagged pair escapes the span
    Vec amb = basis(2, chk.witness->ambient_index);
    Vec idl = diag.subspace.basis_vector(chk.witness->ideal_index);
    Vec prod = chk.witness->from_left ? qq->multiply(amb, idl) : qq->multiply(idl, amb);
    CHECK_FALSE(diag.subspace.contains(prod));
}

TEST_CASE("find_identity") {
    CHECK(find_identity(*corpus::rationals()) == vec({1}));
    CHECK_FALSE(find_identity(*corpus::zero_product_1d()).has_value());
    CHECK(find_identity(*corpus::upper_triangular_2()) == vec({1, 1, 0}));

    auto r = identity_amalgam(corpus::rationals());
    CHECK(find_identity(*r.algebra) == vec({1, 0}));

    // uniqueness: the homogeneous identity system has a trivial kernel
    auto a = corpus::q_times_q();
    const std::size_t n = a->dim();
    Matrix sys(2 * n * n, n);
    std::size_t row = 0;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            for (std::size_t i = 0; i < n; ++i) {
                sys.at(row, i) = a->c(i, j, k);
                sys.at(row + 1, i) = a->c(j, i, k);
            }
            row += 2;
        }
    CHECK(null_space_basis(sys).rows() == 0);
}

TEST_CASE("is_commutative") {
    CHECK(is_commutative(*corpus::dual_numbers()).commutative);
    CHECK(is_commutative(*corpus::rationals()).commutative);
    CHECK(is_commutative(*corpus::zero()).commutative);

    auto t2 = corpus::upper_triangular_2();
    CommutativityCheck chk = is_commutative(*t2);
    CHECK_FALSE(chk.commutative);
    REQUIRE(chk.witness.has_value());
    auto [i, j] = *chk.witness;
    CHECK(t2->basis_product(i, j) != t2->basis_product(j, i));  // witness re-verifies
}

TEST_CASE("is_square_dense") {
    CHECK(is_square_dense(*corpus::dual_numbers()));  // unital
    CHECK(is_square_dense(*corpus::full_matrix_2()));
    CHECK_FALSE(is_square_dense(*corpus::zero_product_1d()));
    CHECK(is_square_dense(*corpus::zero()));  // empty product span = 0-dim space
}

TEST_CASE("annihilator_in_ideal") {
    auto qq = corpus::q_times_q();
    auto q = corpus::rationals();

    // theta = 0: everything annihilates
    CHECK(annihilator_in_ideal(zero_map(q, qq), full_ideal(qq)) == Subspace::full(2));

    // theta = id onto Q, I = Q: j . 1 = j forces j = 0
    CHECK(annihilator_in_ideal(identity_map(q), full_ideal(q)).is_zero());

    // B = Q x Q, theta(a) = (a, 0), I = B: annihilator is the second line
    Matrix incl(2, 1);
    incl.at(0, 0) = 1;
    AlgebraMap theta = make_homomorphism(q, qq, incl);
    CHECK(annihilator_in_ideal(theta, full_ideal(qq)) ==
          Subspace::span_of({vec({0, 1})}, 2));
}

TEST_CASE("check_submultiplicative over the corpus models") {
    for (const auto& entry : corpus::base_entries())
        CHECK(check_submultiplicative(*entry.algebra) <= Rational(1));
    // without the adjusted weight the sqrt2 table is not submultiplicative
    std::vector<Rational> t(8);
    t[(0 * 2 + 0) * 2 + 0] = 1;
    t[(0 * 2 + 1) * 2 + 1] = 1;
    t[(1 * 2 + 0) * 2 + 1] = 1;
    t[(1 * 2 + 1) * 2 + 0] = 2;
    auto raw = FiniteAlgebra::make(2, {"1", "x"}, t);
    CHECK(check_submultiplicative(*raw) == Rational(2));
}

TEST_CASE("quotient_algebra") {
    // T2 / span{e12} is Q x Q
    auto t2 = corpus::upper_triangular_2();
    QuotientResult q = quotient_algebra(t2, Subspace::span_of({vec({0, 0, 1})}, 3));
    CHECK(q.algebra->dim() == 2);
    CHECK(q.algebra->table() == corpus::q_times_q()->table());
    CHECK(q.projection * q.section == Matrix::identity(2));

    // dual numbers / span{eps} is Q
    auto dual = corpus::dual_numbers();
    QuotientResult q2 = quotient_algebra(dual, Subspace::span_of({vec({0, 1})}, 2));
    CHECK(q2.algebra->dim() == 1);
    CHECK(q2.algebra->c(0, 0, 0) == Rational(1));

    // quotient by a non-ideal is rejected
    CHECK_THROWS_AS(
        quotient_algebra(corpus::q_times_q(), Subspace::span_of({vec({1, 1})}, 2)),
        UncertifiedIdeal);
}

TEST_CASE("subspace_as_algebra") {
    auto t2 = corpus::upper_triangular_2();
    SubalgebraResult diag =
        subspace_as_algebra(t2, Subspace::span_of({vec({1, 0, 0}), vec({0, 1, 0})}, 3));
    CHECK(diag.algebra->dim() == 2);
    CHECK(diag.algebra->table() == corpus::q_times_q()->table());
    CHECK(diag.algebra->label(0) == "e11");

    // the strict upper triangle is closed (zero product)
    SubalgebraResult strict = subspace_as_algebra(t2, Subspace::span_of({vec({0, 0, 1})}, 3));
    CHECK(strict.algebra->table() == corpus::zero_product_1d()->table());

    // span{e11 + 2 e22} is not closed: its square is e11 + 4 e22
    CHECK_THROWS_AS(subspace_as_algebra(t2, Subspace::span_of({vec({1, 2, 0})}, 3)), Error);
}

TEST_CASE("zero-dimensional algebra round trips") {
    auto z = corpus::zero();
    CHECK(find_identity(*z).has_value());
    CHECK(is_commutative(*z).commutative);
    CHECK(check_submultiplicative(*z) == Rational(0));
    CHECK(z->multiply(Vec{}, Vec{}) == Vec{});
}
