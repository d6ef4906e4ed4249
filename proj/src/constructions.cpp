#include "amalgam/constructions.hpp"

#include <algorithm>

namespace amalgam {

namespace {

Vec basis_vec(std::size_t len, std::size_t idx) {
    Vec v(len);
    v[idx] = 1;
    return v;
}

AlgebraPtr scalar_algebra() {
    static AlgebraPtr q = FiniteAlgebra::make(1, {"1"}, {Rational(1)});
    return q;
}

}  // namespace

std::pair<Vec, Vec> AmalgamResult::split(const Vec& x) const {
    Vec a(x.begin(), x.begin() + static_cast<long>(dim_a()));
    Vec i(x.begin() + static_cast<long>(dim_a()), x.end());
    return {std::move(a), std::move(i)};
}

Vec AmalgamResult::join(const Vec& a_part, const Vec& i_part) const {
    Vec x = a_part;
    x.insert(x.end(), i_part.begin(), i_part.end());
    return x;
}

AmalgamResult amalgamate(const AlgebraPtr& a, const AlgebraPtr& b,
                         const AlgebraMap& theta, const IdealEmbedding& ideal) {
    if (!theta.multiplicative) throw UncertifiedMap("amalgamate: theta is not certified");
    if (!ideal.two_sided) throw UncertifiedIdeal("amalgamate: ideal is not certified");
    if (theta.domain != a || theta.codomain != b)
        throw AlgebraMismatch("amalgamate: theta must map A into B");
    if (ideal.ambient != b)
        throw AlgebraMismatch("amalgamate: ideal must live in B");

    SubalgebraResult ideal_alg = subspace_as_algebra(b, ideal.subspace);
    const std::size_t n = a->dim(), m = ideal_alg.algebra->dim(), total = n + m;
    const Subspace& is = ideal.subspace;

    std::vector<Rational> table(total * total * total);
    auto put = [&](std::size_t i, std::size_t j, const Vec& a_part, const Vec& i_part) {
        for (std::size_t k = 0; k < n; ++k) table[(i * total + j) * total + k] = a_part[k];
        for (std::size_t k = 0; k < m; ++k) table[(i * total + j) * total + n + k] = i_part[k];
    };
    auto ideal_coords = [&](const Vec& v) {
        auto c = is.coordinates_of(v);
        if (!c) throw Error("amalgamate: product escaped the ideal");  // cannot happen
        return *c;
    };

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            put(i, j, a->basis_product(i, j), Vec(m));
    for (std::size_t i = 0; i < n; ++i) {
        Vec ti = theta.apply_basis(i);
        for (std::size_t q = 0; q < m; ++q) {
            put(i, n + q, Vec(n), ideal_coords(b->multiply(ti, is.basis_vector(q))));
            put(n + q, i, Vec(n), ideal_coords(b->multiply(is.basis_vector(q), ti)));
        }
    }
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t q = 0; q < m; ++q)
            put(n + p, n + q, Vec(n),
                ideal_coords(b->multiply(is.basis_vector(p), is.basis_vector(q))));

    std::vector<std::string> labels;
    std::vector<Rational> weights;
    for (std::size_t i = 0; i < n; ++i) {
        labels.push_back("A:" + a->label(i));
        weights.push_back(a->weight(i));
    }
    for (std::size_t q = 0; q < m; ++q) {
        labels.push_back("I:" + ideal_alg.algebra->label(q));
        weights.push_back(ideal_alg.algebra->weight(q));
    }

    AmalgamResult r;
    r.algebra = FiniteAlgebra::make(total, std::move(labels), std::move(table),
                                    std::move(weights));
    r.a_factor = a;
    r.ambient = b;
    r.ideal_algebra = ideal_alg.algebra;
    r.theta = theta;
    r.ideal_in_ambient = ideal;

    Matrix embed_a(total, n), embed_i(total, m), project_a(n, total);
    for (std::size_t i = 0; i < n; ++i) {
        embed_a.at(i, i) = 1;
        project_a.at(i, i) = 1;
    }
    for (std::size_t q = 0; q < m; ++q) embed_i.at(n + q, q) = 1;
    r.embed_A = make_homomorphism(a, r.algebra, std::move(embed_a));
    r.embed_I = make_homomorphism(r.ideal_algebra, r.algebra, std::move(embed_i));
    r.project_A = make_homomorphism(r.algebra, a, std::move(project_a));

    std::vector<Vec> ideal_rows;
    for (std::size_t q = 0; q < m; ++q) ideal_rows.push_back(basis_vec(total, n + q));
    r.ideal_I_in_result = make_ideal(r.algebra, Subspace::span_of(ideal_rows, total));

    if (r.project_A.matrix * r.embed_A.matrix != Matrix::identity(n))
        throw Error("amalgamate: projection does not retract the embedding");

    r.theta_norm_warning = operator_norm_bound(theta) > Rational(1);
    return r;
}

AmalgamResult cartesian_product(const AlgebraPtr& a, const AlgebraPtr& b) {
    AmalgamResult r = amalgamate(a, b, zero_map(a, b), full_ideal(b));
    r.kind = ConstructionKind::Cartesian;
    return r;
}

AlgebraPtr unitization_algebra(const AlgebraPtr& a) {
    const std::size_t n = a->dim(), total = n + 1;
    std::vector<Rational> table(total * total * total);
    auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> Rational& {
        return table[(i * total + j) * total + k];
    };
    at(0, 0, 0) = 1;
    for (std::size_t i = 0; i < n; ++i) {
        at(0, i + 1, i + 1) = 1;
        at(i + 1, 0, i + 1) = 1;
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) at(i + 1, j + 1, k + 1) = a->c(i, j, k);
    }
    std::string unit = "1";
    while (std::find(a->labels().begin(), a->labels().end(), unit) != a->labels().end())
        unit += "#";
    std::vector<std::string> labels{unit};
    std::vector<Rational> weights{Rational(1)};
    for (std::size_t i = 0; i < n; ++i) {
        labels.push_back(a->label(i));
        weights.push_back(a->weight(i));
    }
    return FiniteAlgebra::make(total, std::move(labels), std::move(table), std::move(weights));
}

AmalgamResult unitize(const AlgebraPtr& a) {
    AlgebraPtr sharp = unitization_algebra(a);
    AlgebraPtr q = scalar_algebra();
    Matrix theta(sharp->dim(), 1);
    theta.at(0, 0) = 1;
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < a->dim(); ++i) rows.push_back(basis_vec(sharp->dim(), i + 1));
    AmalgamResult r = amalgamate(q, sharp, make_homomorphism(q, sharp, std::move(theta)),
                                 make_ideal(sharp, Subspace::span_of(rows, sharp->dim())));
    r.kind = ConstructionKind::Unitize;
    return r;
}

AmalgamResult module_extension(const AlgebraPtr& a, const Bimodule& x) {
    if (!x.certified) throw Error("module_extension: bimodule is not certified");
    if (x.algebra != a) throw AlgebraMismatch("module_extension: bimodule is over another algebra");
    const std::size_t n = a->dim(), m = x.dim, total = n + m;

    std::vector<Rational> table(total * total * total);
    auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> Rational& {
        return table[(i * total + j) * total + k];
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) at(i, j, k) = a->c(i, j, k);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t p = 0; p < m; ++p)
            for (std::size_t q = 0; q < m; ++q) {
                at(i, n + p, n + q) = x.l(i, p, q);
                at(n + p, i, n + q) = x.r(p, i, q);
            }
    // X . X = 0
    std::vector<std::string> labels(a->labels());
    std::vector<Rational> weights(a->weights());
    for (std::size_t p = 0; p < m; ++p) {
        labels.push_back("x" + std::to_string(p));
        weights.emplace_back(1);
    }
    AlgebraPtr s = FiniteAlgebra::make(total, std::move(labels), std::move(table),
                                       std::move(weights));
    Matrix theta(total, n);
    for (std::size_t i = 0; i < n; ++i) theta.at(i, i) = 1;
    std::vector<Vec> rows;
    for (std::size_t p = 0; p < m; ++p) rows.push_back(basis_vec(total, n + p));
    AmalgamResult r = amalgamate(a, s, make_homomorphism(a, s, std::move(theta)),
                                 make_ideal(s, Subspace::span_of(rows, total)));
    r.kind = ConstructionKind::ModuleExtension;
    return r;
}

AmalgamResult lau_product(const AlgebraPtr& a, const AlgebraPtr& b, const Character& phi) {
    if (!phi.certified || !phi.nonzero)
        throw Error("lau_product: phi is not a certified nonzero character");
    if (phi.algebra != a) throw AlgebraMismatch("lau_product: phi lives on another algebra");

    AlgebraPtr sharp = unitization_algebra(b);
    Matrix theta(sharp->dim(), a->dim());
    for (std::size_t j = 0; j < a->dim(); ++j) theta.at(0, j) = phi.coords[j];
    std::vector<Vec> rows;
    for (std::size_t p = 0; p < b->dim(); ++p) rows.push_back(basis_vec(sharp->dim(), p + 1));
    AmalgamResult r = amalgamate(a, sharp, make_homomorphism(a, sharp, std::move(theta)),
                                 make_ideal(sharp, Subspace::span_of(rows, sharp->dim())));
    r.kind = ConstructionKind::Lau;
    r.lau_phi = phi;
    return r;
}

AmalgamResult semidirect_product(const AlgebraPtr& b, const Subspace& a_sub,
                                 const IdealEmbedding& ideal) {
    SubalgebraResult sub = subspace_as_algebra(b, a_sub);
    AmalgamResult r = amalgamate(sub.algebra, b,
                                 make_homomorphism(sub.algebra, b, sub.inclusion), ideal);
    r.kind = ConstructionKind::Semidirect;
    return r;
}

AmalgamResult identity_amalgam(const AlgebraPtr& a) {
    return amalgamate(a, a, identity_map(a), full_ideal(a));
}

bool is_identity_amalgam(const AmalgamResult& r) {
    return r.a_factor == r.ambient && r.ideal_in_ambient.subspace.is_full() &&
           r.theta.matrix == Matrix::identity(r.a_factor->dim());
}

Subspace theta_image_plus_ideal(const AmalgamResult& r) {
    std::vector<Vec> vectors;
    for (std::size_t j = 0; j < r.dim_a(); ++j) vectors.push_back(r.theta.apply_basis(j));
    for (std::size_t q = 0; q < r.ideal_in_ambient.subspace.dim(); ++q)
        vectors.push_back(r.ideal_in_ambient.subspace.basis_vector(q));
    return Subspace::span_of(vectors, r.ambient->dim());
}

bool verify_identity_characterization(const AmalgamResult& r) {
    std::optional<Vec> direct = find_identity(*r.algebra);

    // Characterization route: a = 1_A, and i solving the linear system
    // {i in Ann_I(theta(A)), theta(1_A) + i is the identity of theta(A)+I}.
    std::optional<Vec> predicate;
    std::optional<Vec> one_a = find_identity(*r.a_factor);
    if (one_a) {
        const auto& b = *r.ambient;
        const Subspace& is = r.ideal_in_ambient.subspace;
        const std::size_t m = is.dim(), nb = b.dim();
        Subspace s = theta_image_plus_ideal(r);
        Vec theta_one = r.theta.apply(*one_a);

        std::vector<Vec> rows;
        Vec rhs;
        auto add_equation = [&](const Vec& coeffs, const Vec& value) {
            // coeffs: m vectors stacked per ambient coordinate
            for (std::size_t k = 0; k < nb; ++k) {
                Vec row(m);
                for (std::size_t v = 0; v < m; ++v) row[v] = coeffs[v * nb + k];
                rows.push_back(std::move(row));
                rhs.push_back(value[k]);
            }
        };
        auto stack_products = [&](auto&& multiply_with) {
            Vec coeffs(m * nb);
            for (std::size_t v = 0; v < m; ++v) {
                Vec prod = multiply_with(is.basis_vector(v));
                for (std::size_t k = 0; k < nb; ++k) coeffs[v * nb + k] = prod[k];
            }
            return coeffs;
        };
        // annihilator conditions against every theta(e_a)
        for (std::size_t ai = 0; ai < r.dim_a(); ++ai) {
            Vec ta = r.theta.apply_basis(ai);
            add_equation(stack_products([&](const Vec& v) { return b.multiply(v, ta); }),
                         Vec(nb));
            add_equation(stack_products([&](const Vec& v) { return b.multiply(ta, v); }),
                         Vec(nb));
        }
        // (theta(1)+i) s = s and s (theta(1)+i) = s for s in a basis of theta(A)+I
        for (std::size_t si = 0; si < s.dim(); ++si) {
            Vec sv = s.basis_vector(si);
            add_equation(stack_products([&](const Vec& v) { return b.multiply(v, sv); }),
                         sv - b.multiply(theta_one, sv));
            add_equation(stack_products([&](const Vec& v) { return b.multiply(sv, v); }),
                         sv - b.multiply(sv, theta_one));
        }
        Matrix sys = Matrix::from_rows(rows, m);
        if (auto t = solve(sys, rhs)) {
            Vec i_elt(nb);
            for (std::size_t v = 0; v < m; ++v) i_elt = i_elt + (*t)[v] * is.basis_vector(v);
            if (b.multiply(i_elt, i_elt) != i_elt)
                throw Error("identity characterization: solution is not idempotent");
            predicate = r.join(*one_a, *t);
        }
    }

    if (direct.has_value() != predicate.has_value()) return false;
    return !direct || *direct == *predicate;
}

bool verify_commutativity_characterization(const AmalgamResult& r) {
    bool lhs = is_commutative(*r.algebra).commutative;

    bool rhs = is_commutative(*r.a_factor).commutative;
    if (rhs) {
        Subspace s = theta_image_plus_ideal(r);
        for (std::size_t i = 0; i < s.dim() && rhs; ++i)
            for (std::size_t j = i + 1; j < s.dim() && rhs; ++j)
                rhs = r.ambient->multiply(s.basis_vector(i), s.basis_vector(j)) ==
                      r.ambient->multiply(s.basis_vector(j), s.basis_vector(i));
    }
    return lhs == rhs;
}

QuotientByIdeal quotient_by_I(const AmalgamResult& r) {
    QuotientResult q = quotient_algebra(r.algebra, r.ideal_I_in_result.subspace);
    // coset representatives are exactly the A-block coordinates, so the
    // identification with A is coordinatewise
    if (q.algebra->dim() != r.dim_a())
        throw Error("quotient_by_I: unexpected quotient dimension");
    AlgebraMap onto = make_homomorphism(q.algebra, r.a_factor,
                                        Matrix::identity(r.dim_a()));
    if (rank(onto.matrix) != r.dim_a())
        throw Error("quotient_by_I: isomorphism is not bijective");
    return {q.algebra, std::move(onto)};
}

}  // namespace amalgam
