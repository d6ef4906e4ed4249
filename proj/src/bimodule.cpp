#include "amalgam/bimodule.hpp"

namespace amalgam {

Vec Bimodule::act_left(const Vec& a, const Vec& x) const {
    const std::size_t n = algebra->dim();
    Vec out(dim);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t p = 0; p < dim; ++p) {
            if (x[p].is_zero()) continue;
            Rational f = a[i] * x[p];
            for (std::size_t q = 0; q < dim; ++q)
                if (!l(i, p, q).is_zero()) out[q] += f * l(i, p, q);
        }
    }
    return out;
}

Vec Bimodule::act_right(const Vec& x, const Vec& a) const {
    const std::size_t n = algebra->dim();
    Vec out(dim);
    for (std::size_t p = 0; p < dim; ++p) {
        if (x[p].is_zero()) continue;
        for (std::size_t i = 0; i < n; ++i) {
            if (a[i].is_zero()) continue;
            Rational f = x[p] * a[i];
            for (std::size_t q = 0; q < dim; ++q)
                if (!r(p, i, q).is_zero()) out[q] += f * r(p, i, q);
        }
    }
    return out;
}

BimoduleCheck verify_bimodule(const Bimodule& x) {
    const std::size_t n = x.algebra->dim();
    auto basis_vec = [](std::size_t len, std::size_t idx) {
        Vec v(len);
        v[idx] = 1;
        return v;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec ab = x.algebra->basis_product(i, j);
            Vec ei = basis_vec(n, i), ej = basis_vec(n, j);
            for (std::size_t p = 0; p < x.dim; ++p) {
                Vec xp = basis_vec(x.dim, p);
                if (x.act_left(ab, xp) != x.act_left(ei, x.act_left(ej, xp)))
                    return {false, "(ab).x = a.(b.x) fails at (" + std::to_string(i) + "," +
                                       std::to_string(j) + "," + std::to_string(p) + ")"};
                if (x.act_right(xp, ab) != x.act_right(x.act_right(xp, ei), ej))
                    return {false, "x.(ab) = (x.a).b fails at (" + std::to_string(i) + "," +
                                       std::to_string(j) + "," + std::to_string(p) + ")"};
                if (x.act_right(x.act_left(ei, xp), ej) !=
                    x.act_left(ei, x.act_right(xp, ej)))
                    return {false, "(a.x).b = a.(x.b) fails at (" + std::to_string(i) + "," +
                                       std::to_string(j) + "," + std::to_string(p) + ")"};
            }
        }
    return {true, ""};
}

Bimodule make_bimodule(AlgebraPtr algebra, std::size_t dim,
                       std::vector<Rational> left, std::vector<Rational> right) {
    const std::size_t n = algebra->dim();
    if (left.size() != n * dim * dim || right.size() != dim * n * dim)
        throw Error("bimodule: action tensor shape mismatch");
    Bimodule x{std::move(algebra), dim, std::move(left), std::move(right), false};
    BimoduleCheck chk = verify_bimodule(x);
    if (!chk.ok) throw Error("bimodule axioms violated: " + chk.violated);
    x.certified = true;
    return x;
}

Bimodule zero_bimodule(AlgebraPtr algebra) {
    return make_bimodule(std::move(algebra), 0, {}, {});
}

Bimodule regular_bimodule(AlgebraPtr algebra) {
    const std::size_t n = algebra->dim();
    std::vector<Rational> left(n * n * n), right(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q) {
                left[(i * n + p) * n + q] = algebra->c(i, p, q);
                right[(p * n + i) * n + q] = algebra->c(p, i, q);
            }
    return make_bimodule(std::move(algebra), n, std::move(left), std::move(right));
}

}  // namespace amalgam
