#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "amalgam/cohomology.hpp"
#include "amalgam/corpus.hpp"

using namespace amalgam;

namespace {

Vec vec(std::vector<long> v) { return Vec(v.begin(), v.end()); }

Matrix mat(std::size_t r, std::size_t c, std::vector<long> entries) {
    std::vector<Rational> e(entries.begin(), entries.end());
    return Matrix(r, c, std::move(e));
}

}  // namespace

TEST_CASE("derivation_space on the forced examples") {
    // unital Q into its dual: only zero (D(u) = 2 u.D(u) = 2 D(u))
    auto q = corpus::rationals();
    CHECK(derivation_space(q, dual_bimodule(q)).is_zero());

    // zero-product line: both Leibniz sides vanish, everything is a derivation
    auto zp = corpus::zero_product_1d();
    CHECK(derivation_space(zp, dual_bimodule(zp)).is_full());

    // T2 into its dual: one-parameter family
    // D(e11) = c u*, D(e22) = -c u*, D(e12) = -c e11* + c e22*
    auto t2 = corpus::upper_triangular_2();
    Subspace z1 = derivation_space(t2, dual_bimodule(t2));
    CHECK(z1.dim() == 1);
    Matrix expected = mat(3, 3, {0, 0, -1, 0, 0, 1, 1, -1, 0});
    CHECK(z1.contains(expected.flatten()));
}

TEST_CASE("derivations satisfy the Leibniz rule pointwise") {
    for (const auto& entry : corpus::base_entries()) {
        CAPTURE(entry.name);
        Bimodule dual = dual_bimodule(entry.algebra);
        Subspace z1 = derivation_space(entry.algebra, dual);
        for (std::size_t r = 0; r < z1.dim(); ++r) {
            Matrix m(dual.dim, entry.algebra->dim());
            for (std::size_t p = 0; p < dual.dim; ++p)
                for (std::size_t c = 0; c < entry.algebra->dim(); ++c)
                    m.at(p, c) = z1.basis_vector(r)[p * entry.algebra->dim() + c];
            CHECK_NOTHROW(make_derivation(entry.algebra, dual, m));
        }
    }
}

TEST_CASE("inner_derivations") {
    // commutative algebra acting on itself: ad = 0
    auto qq = corpus::q_times_q();
    CHECK(inner_derivations(qq, regular_bimodule(qq)).is_zero());

    // T2 on itself: ad_{e12}(e11) = e11 e12 - e12 e11 = e12 != 0
    auto t2 = corpus::upper_triangular_2();
    Subspace inner = inner_derivations(t2, regular_bimodule(t2));
    CHECK(inner.dim() > 0);
    Matrix ad_e12 = ad_matrix(t2, regular_bimodule(t2), vec({0, 0, 1}));
    CHECK(ad_e12.col(0) == vec({0, 0, 1}));

    // zero bimodule
    CHECK(inner_derivations(qq, zero_bimodule(qq)).is_zero());
}

TEST_CASE("h1 dimensions on the corpus") {
    auto check_dims = [](const AlgebraPtr& a, std::size_t z, std::size_t b, std::size_t h) {
        CohomologyReport rep = h1(a, dual_bimodule(a));
        CHECK(rep.z1_dim == z);
        CHECK(rep.b1_dim == b);
        CHECK(rep.h1_dim == h);
    };
    check_dims(corpus::rationals(), 0, 0, 0);
    check_dims(corpus::zero_product_1d(), 1, 0, 1);
    check_dims(corpus::dual_numbers(), 1, 0, 1);
    check_dims(corpus::upper_triangular_2(), 1, 1, 0);

    CohomologyReport m2 = h1(corpus::full_matrix_2(), dual_bimodule(corpus::full_matrix_2()));
    CHECK(m2.h1_dim == 0);
    CHECK(m2.z1_dim == m2.b1_dim);
}

TEST_CASE("is_weakly_amenable") {
    CHECK(is_weakly_amenable(corpus::rationals()));
    CHECK(is_weakly_amenable(corpus::q_times_q()));
    CHECK(is_weakly_amenable(corpus::upper_triangular_2()));
    CHECK(is_weakly_amenable(corpus::full_matrix_2()));
    CHECK(is_weakly_amenable(corpus::adjoin_sqrt2()));
    CHECK(is_weakly_amenable(corpus::zero()));
    CHECK_FALSE(is_weakly_amenable(corpus::zero_product_1d()));
    CHECK_FALSE(is_weakly_amenable(corpus::dual_numbers()));
}

TEST_CASE("cyclic derivations") {
    // Z1 = 0 forces Z1_c = 0
    CHECK(cyclic_derivations(corpus::rationals()).is_zero());
    // 1-dim zero-product: antisymmetry forces the single entry to vanish
    CHECK(cyclic_derivations(corpus::zero_product_1d()).is_zero());
    // dual numbers: D(eps) = c delta_1 is not antisymmetric unless c = 0
    CHECK(cyclic_derivations(corpus::dual_numbers()).is_zero());
    // T2: the whole one-parameter Z1 happens to be cyclic
    auto t2 = corpus::upper_triangular_2();
    Subspace zc = cyclic_derivations(t2);
    CHECK(zc.dim() == 1);
    CHECK(derivation_space(t2, dual_bimodule(t2)).contains(zc));

    // inner derivations into the dual are always cyclic
    for (const auto& entry : corpus::base_entries()) {
        CAPTURE(entry.name);
        CHECK(cyclic_derivations(entry.algebra)
                  .contains(inner_derivations(entry.algebra, dual_bimodule(entry.algebra))));
    }
}

TEST_CASE("is_cyclically_amenable and h1c") {
    CHECK(is_cyclically_amenable(corpus::rationals()));
    CHECK(is_cyclically_amenable(corpus::zero_product_1d()));
    CHECK(is_cyclically_amenable(corpus::dual_numbers()));
    CHECK(is_cyclically_amenable(corpus::upper_triangular_2()));
    CHECK(is_cyclically_amenable(corpus::full_matrix_2()));
    CHECK(h1c_dim(corpus::zero_product_1d()) == 0);
    CHECK(h1c_dim(corpus::upper_triangular_2()) == 0);

    // weakly amenable implies cyclically amenable on the corpus
    for (const auto& entry : corpus::base_entries())
        if (is_weakly_amenable(entry.algebra)) CHECK(is_cyclically_amenable(entry.algebra));
}

TEST_CASE("lift_derivation") {
    auto q = corpus::rationals();
    auto r = cartesian_product(q, corpus::dual_numbers());

    // d = 0 lifts to 0
    Derivation zero = make_derivation(q, dual_bimodule(q), Matrix(1, 1));
    LiftResult lz = lift_derivation(r, zero);
    CHECK(is_zero_vec(lz.lifted.matrix.flatten()));
    CHECK(lz.inner_agrees);

    // d = ad_f lifts to ad_{(f,0)}
    auto t2 = corpus::upper_triangular_2();
    auto rt = identity_amalgam(t2);
    Bimodule dual_t2 = dual_bimodule(t2);
    Matrix ad_u = ad_matrix(t2, dual_t2, vec({0, 0, 1}));
    LiftResult lift = lift_derivation(rt, make_derivation(t2, dual_t2, ad_u));
    CHECK(lift.original_inner);
    CHECK(lift.lifted_inner);
    CHECK(lift.inner_agrees);
    // ad_{(f,0)} on the amalgam, f = e12^*
    Vec f0(6);
    f0[2] = 1;
    CHECK(lift.lifted.matrix == ad_matrix(rt.algebra, dual_bimodule(rt.algebra), f0));

    // a non-inner derivation of the zero-product line stays non-inner
    auto zp = corpus::zero_product_1d();
    auto rz = cartesian_product(zp, q);
    Matrix one(1, 1);
    one.at(0, 0) = 1;
    LiftResult lnz = lift_derivation(rz, make_derivation(zp, dual_bimodule(zp), one));
    CHECK_FALSE(lnz.original_inner);
    CHECK_FALSE(lnz.lifted_inner);
    CHECK(lnz.inner_agrees);
}

TEST_CASE("decompose_derivation_id_amalgam") {
    // A = Q: everything trivial
    auto rq = identity_amalgam(corpus::rationals());
    Subspace z1q = derivation_space(rq.algebra, dual_bimodule(rq.algebra));
    CHECK(z1q.is_zero());

    // square-density hypothesis enforced
    auto rz = identity_amalgam(corpus::zero_product_1d());
    Derivation dz = make_derivation(rz.algebra, dual_bimodule(rz.algebra),
                                    mat(2, 2, {1, 0, 0, 0}));
    CHECK_THROWS_AS(decompose_derivation_id_amalgam(rz, dz), HypothesisViolation);

    // every basis derivation of Z1(A bowtie^id A) decomposes and rebuilds,
    // with innerness matching blockwise innerness
    for (AlgebraPtr a : {corpus::upper_triangular_2(), corpus::full_matrix_2(),
                         corpus::dual_numbers()}) {
        AmalgamResult r = identity_amalgam(a);
        Bimodule dual = dual_bimodule(r.algebra);
        Subspace z1 = derivation_space(r.algebra, dual);
        CHECK(z1.dim() == 2 * derivation_space(a, dual_bimodule(a)).dim());
        for (std::size_t i = 0; i < z1.dim(); ++i) {
            Matrix m(dual.dim, r.algebra->dim());
            for (std::size_t p = 0; p < dual.dim; ++p)
                for (std::size_t c = 0; c < r.algebra->dim(); ++c)
                    m.at(p, c) = z1.basis_vector(i)[p * r.algebra->dim() + c];
            IdDecomposition dec =
                decompose_derivation_id_amalgam(r, make_derivation(r.algebra, dual, m));
            CHECK(dec.d1.certified);
            CHECK(dec.d2.certified);
            CHECK(dec.inner_agrees);
        }
    }
}

TEST_CASE("decompose_derivation_lau") {
    auto q = corpus::rationals();
    Character id_char = make_character(q, {Rational(1)});

    // d = 0 decomposes into zero blocks
    auto r = lau_product(q, corpus::full_matrix_2(), id_char);
    Bimodule dual = dual_bimodule(r.algebra);
    LauDecomposition dz =
        decompose_derivation_lau(r, make_derivation(r.algebra, dual, Matrix(5, 5)));
    CHECK(is_zero_vec(dz.d1.matrix.flatten()));
    CHECK(is_zero_vec(dz.d2.flatten()));
    CHECK(is_zero_vec(dz.d4.matrix.flatten()));
    CHECK(dz.inner_agrees);

    // the full Z1 basis of Lau(Q, M2) decomposes with both conditions
    Subspace z1 = derivation_space(r.algebra, dual);
    for (std::size_t i = 0; i < z1.dim(); ++i) {
        Matrix m(dual.dim, r.algebra->dim());
        for (std::size_t p = 0; p < dual.dim; ++p)
            for (std::size_t c = 0; c < r.algebra->dim(); ++c)
                m.at(p, c) = z1.basis_vector(i)[p * r.algebra->dim() + c];
        LauDecomposition dec =
            decompose_derivation_lau(r, make_derivation(r.algebra, dual, m));
        CHECK(dec.inner_agrees);
    }

    // B with B^2 != B is refused
    auto rb = lau_product(q, corpus::zero_product_1d(), id_char);
    Bimodule dual_rb = dual_bimodule(rb.algebra);
    Subspace z1b = derivation_space(rb.algebra, dual_rb);
    REQUIRE(z1b.dim() > 0);
    Matrix m(2, 2);
    for (std::size_t p = 0; p < 2; ++p)
        for (std::size_t c = 0; c < 2; ++c) m.at(p, c) = z1b.basis_vector(0)[p * 2 + c];
    CHECK_THROWS_AS(decompose_derivation_lau(rb, make_derivation(rb.algebra, dual_rb, m)),
                    DecompositionMismatch);
}

TEST_CASE("theorem_h1_doubling_check") {
    CHECK(theorem_h1_doubling_check(corpus::rationals()));
    CHECK(theorem_h1_doubling_check(corpus::upper_triangular_2()));
    CHECK(theorem_h1_doubling_check(corpus::full_matrix_2()));
    CHECK(theorem_h1_doubling_check(corpus::dual_numbers()));
    CHECK(theorem_h1_doubling_check(corpus::q_times_q()));
    CHECK_THROWS_AS(theorem_h1_doubling_check(corpus::zero_product_1d()),
                    HypothesisViolation);
}

TEST_CASE("theorem_embedding_lau_check") {
    auto q = corpus::rationals();
    Character id_char = make_character(q, {Rational(1)});
    CHECK(theorem_embedding_lau_check(q, corpus::rationals(), id_char));
    CHECK(theorem_embedding_lau_check(q, corpus::zero_product_1d(), id_char));
    CHECK(theorem_embedding_lau_check(q, corpus::dual_numbers(), id_char));
    CHECK(theorem_embedding_lau_check(q, corpus::full_matrix_2(), id_char));
    CHECK(theorem_embedding_lau_check(q, corpus::upper_triangular_2(), id_char));

    auto qq = corpus::q_times_q();
    Character first = make_character(qq, vec({1, 0}));
    CHECK(theorem_embedding_lau_check(qq, corpus::dual_numbers(), first));
}

TEST_CASE("weak amenability implications across corpus amalgams") {
    for (const auto& [name, r] : corpus::amalgam_entries(8)) {
        CAPTURE(name);
        WeakAmenabilityChecks chk = weak_amenability_amalgam_checks(r);
        CHECK(chk.all_applicable_pass());
    }

    // spec instance: A = Q, I = Q inside B = Q x Q along a -> (a, 0)
    auto q = corpus::rationals();
    auto qq = corpus::q_times_q();
    Matrix incl(2, 1);
    incl.at(0, 0) = 1;
    auto r = amalgamate(q, qq, make_homomorphism(q, qq, incl),
                        make_ideal(qq, Subspace::span_of({vec({0, 1})}, 2)));
    WeakAmenabilityChecks chk = weak_amenability_amalgam_checks(r);
    CHECK(chk.amalgam_wa);
    CHECK(chk.a_wa);
    CHECK(chk.i_wa);
    REQUIRE(chk.commutative_iff.has_value());
    CHECK(*chk.commutative_iff);

    // A bowtie^id A with A = T2: the iff holds in both directions
    WeakAmenabilityChecks t2chk =
        weak_amenability_amalgam_checks(identity_amalgam(corpus::upper_triangular_2()));
    REQUIRE(t2chk.id_iff.has_value());
    CHECK(*t2chk.id_iff);
    CHECK(t2chk.amalgam_wa);

    // I = 1-dim zero-product: the commutative iff forces failure of wa
    WeakAmenabilityChecks zchk = weak_amenability_amalgam_checks(
        cartesian_product(corpus::rationals(), corpus::zero_product_1d()));
    CHECK_FALSE(zchk.amalgam_wa);
    REQUIRE(zchk.commutative_iff.has_value());
    CHECK(*zchk.commutative_iff);
}
