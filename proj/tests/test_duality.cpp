#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "amalgam/corpus.hpp"
#include "amalgam/duality.hpp"

#include <random>

using namespace amalgam;

namespace {

Vec vec(std::vector<long> v) { return Vec(v.begin(), v.end()); }

Vec basis(std::size_t n, std::size_t i) {
    Vec v(n);
    v[i] = 1;
    return v;
}

Vec random_vec(std::mt19937& rng, std::size_t n) {
    std::uniform_int_distribution<long> num(-4, 4);
    std::uniform_int_distribution<long> den(1, 3);
    Vec v(n);
    for (auto& x : v) x = Rational(num(rng), den(rng));
    return v;
}

}  // namespace

TEST_CASE("dual bimodule actions") {
    // zero-product line: both actions vanish
    Bimodule zp = dual_bimodule(corpus::zero_product_1d());
    CHECK(is_zero_vec(zp.act_left(vec({1}), vec({1}))));
    CHECK(is_zero_vec(zp.act_right(vec({1}), vec({1}))));

    // unital algebra: 1 . f = f = f . 1
    auto t2 = corpus::upper_triangular_2();
    Bimodule dual_t2 = dual_bimodule(t2);
    Vec one = *find_identity(*t2);
    std::mt19937 rng(5);
    for (int k = 0; k < 10; ++k) {
        Vec f = random_vec(rng, 3);
        CHECK(dual_t2.act_left(one, f) == f);
        CHECK(dual_t2.act_right(f, one) == f);
    }

    // dual numbers: eps . delta_eps = delta_1
    Bimodule dd = dual_bimodule(corpus::dual_numbers());
    CHECK(dd.act_left(vec({0, 1}), vec({0, 1})) == vec({1, 0}));

    // defining pairing identity <a.f, b> = <f, ba> on all basis triples
    for (const auto& entry : corpus::base_entries()) {
        const auto& a = *entry.algebra;
        const std::size_t n = a.dim();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t p = 0; p < n; ++p)
                for (std::size_t j = 0; j < n; ++j) {
                    Vec af = dual_left_action(a, basis(n, i), basis(n, p));
                    CHECK(af[j] == a.basis_product(j, i)[p]);
                    Vec fa = dual_right_action(a, basis(n, p), basis(n, i));
                    CHECK(fa[j] == a.basis_product(i, j)[p]);
                }
    }
}

TEST_CASE("adjoint") {
    auto q = corpus::rationals();
    CHECK(adjoint_matrix(identity_map(q)) == Matrix::identity(1));
    CHECK(adjoint_matrix(zero_map(q, corpus::q_times_q())) == Matrix(1, 2));

    // theta: Q -> Q x Q, a -> (a, 0): theta*(g1, g2) = g1
    Matrix incl(2, 1);
    incl.at(0, 0) = 1;
    AlgebraMap theta = make_homomorphism(q, corpus::q_times_q(), incl);
    Matrix adj = adjoint_matrix(theta);
    CHECK(adj.apply(vec({5, 7})) == vec({5}));

    // <theta*(g), a> = <g, theta(a)> for all basis pairs
    for (std::size_t gi = 0; gi < 2; ++gi)
        CHECK(dot(adj.apply(basis(2, gi)), vec({1})) ==
              dot(basis(2, gi), theta.apply(vec({1}))));
}

TEST_CASE("amalgam dual pairing") {
    auto r = identity_amalgam(corpus::rationals());
    CHECK(amalgam_dual_pairing(r, vec({0, 0}), vec({3}), vec({4})) == Rational(0));
    CHECK(amalgam_dual_pairing(r, vec({0, 2}), Vec{Rational(0)}, vec({5})) == Rational(10));
    // a=(1), i=(2), f=delta, g=3 delta: 1 + 6 = 7
    CHECK(amalgam_dual_pairing(r, vec({1, 2}), vec({1}), vec({3})) == Rational(7));
}

TEST_CASE("dual norm") {
    auto qq = corpus::q_times_q();
    CHECK(qq->dual_norm(vec({0, 0})) == Rational(0));
    CHECK(qq->dual_norm(vec({3, -5})) == Rational(5));

    // weighted: adjoin_sqrt2 has weights (1, 2)
    auto s2 = corpus::adjoin_sqrt2();
    CHECK(s2->dual_norm(vec({3, -5})) == Rational(3));
    CHECK(s2->dual_norm(vec({1, -8})) == Rational(4));

    // duality: the dual norm is the maximum of |<f, x>| over the extreme
    // points e_k / w_k of the weighted l1 unit ball
    std::mt19937 rng(11);
    for (const auto& entry : corpus::base_entries()) {
        const auto& a = *entry.algebra;
        for (int k = 0; k < 8; ++k) {
            Vec f = random_vec(rng, a.dim());
            Rational best;
            for (std::size_t i = 0; i < a.dim(); ++i)
                best = max(best, (f[i] / a.weight(i)).abs());
            CHECK(a.dual_norm(f) == best);
        }
    }

    // amalgam dual norm = max of the component dual norms
    for (const auto& [name, r] : corpus::amalgam_entries(8)) {
        CAPTURE(name);
        for (int k = 0; k < 6; ++k) {
            Vec fg = random_vec(rng, r.algebra->dim());
            auto [f, g] = r.split(fg);
            CHECK(r.algebra->dual_norm(fg) ==
                  max(r.a_factor->dual_norm(f), r.ideal_algebra->dual_norm(g)));
        }
    }
}

TEST_CASE("closed forms of the amalgam dual actions") {
    for (const auto& [name, r] : corpus::amalgam_entries(8)) {
        CAPTURE(name);
        CHECK(amalgam_dual_actions_check(r));
    }
}

TEST_CASE("arens products") {
    // F = 0
    auto qq = corpus::q_times_q();
    ArensProducts z = arens_products(*qq, vec({0, 0}), vec({1, 2}));
    CHECK(is_zero_vec(z.first));
    CHECK(is_zero_vec(z.second));

    // unital: 1 box G = G = 1 diamond G
    std::mt19937 rng(23);
    for (const auto& entry : corpus::base_entries()) {
        const auto& a = *entry.algebra;
        auto one = find_identity(a);
        if (!one) continue;
        Vec g = random_vec(rng, a.dim());
        ArensProducts p = arens_products(a, *one, g);
        CHECK(p.first == g);
        CHECK(p.second == g);
    }

    // both products equal the transported product (Arens regularity)
    for (const auto& entry : corpus::base_entries()) {
        CAPTURE(entry.name);
        const auto& a = *entry.algebra;
        for (int k = 0; k < 8; ++k) {
            Vec f = random_vec(rng, a.dim()), g = random_vec(rng, a.dim());
            ArensProducts p = arens_products(a, f, g);
            Vec direct = a.multiply(f, g);
            CHECK(p.first == direct);
            CHECK(p.second == direct);
        }
    }
}

TEST_CASE("second dual of the amalgam is the amalgam of the second duals") {
    for (const auto& [name, r] : corpus::amalgam_entries(8)) {
        CAPTURE(name);
        CHECK(bidual_amalgam_check(r));
    }
}

TEST_CASE("topological centres are everything") {
    for (const auto& entry : corpus::base_entries()) {
        CAPTURE(entry.name);
        TopologicalCentres c = topological_centres(entry.algebra);
        CHECK(c.left.is_full());
        CHECK(c.right.is_full());

        TopologicalCentres mc = module_topological_centres(dual_bimodule(entry.algebra));
        CHECK(mc.left.is_full());
        CHECK(mc.right.is_full());
    }
    // the degenerate decomposition of the centre theorem: every factor of
    // Z(A bowtie I) is the full space as well
    for (const auto& [name, r] : corpus::amalgam_entries(6)) {
        CAPTURE(name);
        CHECK(topological_centres(r.algebra).left.is_full());
        CHECK(topological_centres(r.a_factor).left.is_full());
        CHECK(topological_centres(r.ideal_algebra).left.is_full());
    }
}
