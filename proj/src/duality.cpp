#include "amalgam/duality.hpp"

namespace amalgam {

namespace {

Vec basis_vec(std::size_t len, std::size_t idx) {
    Vec v(len);
    v[idx] = 1;
    return v;
}

}  // namespace

Vec dual_left_action(const FiniteAlgebra& a, const Vec& x, const Vec& f) {
    // <x.f, b> = <f, bx>
    const std::size_t n = a.dim();
    Vec out(n);
    for (std::size_t j = 0; j < n; ++j)
        out[j] = dot(f, a.multiply(basis_vec(n, j), x));
    return out;
}

Vec dual_right_action(const FiniteAlgebra& a, const Vec& f, const Vec& x) {
    // <f.x, b> = <f, xb>
    const std::size_t n = a.dim();
    Vec out(n);
    for (std::size_t j = 0; j < n; ++j)
        out[j] = dot(f, a.multiply(x, basis_vec(n, j)));
    return out;
}

Bimodule dual_bimodule(const AlgebraPtr& a) {
    const std::size_t n = a->dim();
    std::vector<Rational> left(n * n * n), right(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q) {
                // (e_i . d_p)(e_q) = d_p(e_q e_i),  (d_p . e_i)(e_q) = d_p(e_i e_q)
                left[(i * n + p) * n + q] = a->c(q, i, p);
                right[(p * n + i) * n + q] = a->c(i, q, p);
            }
    return make_bimodule(a, n, std::move(left), std::move(right));
}

Matrix adjoint_matrix(const AlgebraMap& m) { return m.matrix.transpose(); }

Rational amalgam_dual_pairing(const AmalgamResult& r, const Vec& x, const Vec& f,
                              const Vec& g) {
    auto [a, i] = r.split(x);
    if (f.size() != a.size() || g.size() != i.size())
        throw Error("amalgam pairing: shape mismatch");
    return dot(f, a) + dot(g, i);
}

bool amalgam_dual_actions_check(const AmalgamResult& r) {
    const FiniteAlgebra& whole = *r.algebra;
    const FiniteAlgebra& a = *r.a_factor;
    const FiniteAlgebra& b = *r.ambient;
    const Subspace& is = r.ideal_in_ambient.subspace;
    const std::size_t n = r.dim_a(), m = r.dim_i(), total = n + m;

    auto ideal_coords = [&](const Vec& v) {
        auto c = is.coordinates_of(v);
        if (!c) throw Error("dual actions: product escaped the ideal");
        return *c;
    };
    auto embed_ideal = [&](const Vec& i_coords) {
        Vec v(b.dim());
        for (std::size_t q = 0; q < m; ++q) v = v + i_coords[q] * is.basis_vector(q);
        return v;
    };
    // functionals on B induced by a functional g on I
    auto g_dot_b_elt = [&](const Vec& g, const Vec& y) {  // <g.y, j> = <g, y j>
        Vec out(m);
        for (std::size_t q = 0; q < m; ++q)
            out[q] = dot(g, ideal_coords(b.multiply(y, is.basis_vector(q))));
        return out;
    };
    auto b_elt_dot_g = [&](const Vec& y, const Vec& g) {  // <y.g, j> = <g, j y>
        Vec out(m);
        for (std::size_t q = 0; q < m; ++q)
            out[q] = dot(g, ideal_coords(b.multiply(is.basis_vector(q), y)));
        return out;
    };
    Matrix theta_adj = adjoint_matrix(r.theta);

    for (std::size_t u = 0; u < total; ++u) {
        Vec x = basis_vec(total, u);
        auto [xa, xi] = r.split(x);
        Vec xi_b = embed_ideal(xi);
        Vec theta_a_plus_i = r.theta.apply(xa) + xi_b;
        for (std::size_t w = 0; w < total; ++w) {
            Vec fg = basis_vec(total, w);
            auto [f, g] = r.split(fg);

            // Eq (1): (f,g).(a,i) = (f.a + theta*(g.i), g.(theta(a)+i))
            Vec generic_right = dual_right_action(whole, fg, x);
            {
                // g.i as a functional on B: y -> <g, i y>
                Vec gi_on_b(b.dim());
                for (std::size_t j = 0; j < b.dim(); ++j)
                    gi_on_b[j] = dot(g, ideal_coords(b.multiply(xi_b, basis_vec(b.dim(), j))));
                Vec first = dual_right_action(a, f, xa) + theta_adj.apply(gi_on_b);
                Vec second = g_dot_b_elt(g, theta_a_plus_i);
                if (generic_right != r.join(first, second)) return false;
            }

            // Eq (4): (a,i).(f,g) = (a.f + theta*(i.g), (theta(a)+i).g)
            Vec generic_left = dual_left_action(whole, x, fg);
            {
                // i.g as a functional on B: y -> <g, y i>
                Vec ig_on_b(b.dim());
                for (std::size_t j = 0; j < b.dim(); ++j)
                    ig_on_b[j] = dot(g, ideal_coords(b.multiply(basis_vec(b.dim(), j), xi_b)));
                Vec first = dual_left_action(a, xa, f) + theta_adj.apply(ig_on_b);
                Vec second = b_elt_dot_g(theta_a_plus_i, g);
                if (generic_left != r.join(first, second)) return false;
            }
        }
    }
    return true;
}

ArensProducts arens_products(const FiniteAlgebra& a, const Vec& f_elt, const Vec& g_elt) {
    const std::size_t n = a.dim();
    // G.f (functional): <G.f, x> = <G, f.x>
    auto bidual_dot_functional = [&](const Vec& big_g, const Vec& f) {
        Vec out(n);
        for (std::size_t j = 0; j < n; ++j)
            out[j] = dot(dual_right_action(a, f, basis_vec(n, j)), big_g);
        return out;
    };
    // f.F (functional): <f.F, x> = <F, x.f>
    auto functional_dot_bidual = [&](const Vec& f, const Vec& big_f) {
        Vec out(n);
        for (std::size_t j = 0; j < n; ++j)
            out[j] = dot(dual_left_action(a, basis_vec(n, j), f), big_f);
        return out;
    };
    ArensProducts prods{Vec(n), Vec(n)};
    for (std::size_t k = 0; k < n; ++k) {
        Vec delta = basis_vec(n, k);
        prods.first[k] = dot(bidual_dot_functional(g_elt, delta), f_elt);
        prods.second[k] = dot(functional_dot_bidual(delta, f_elt), g_elt);
    }
    return prods;
}

bool bidual_amalgam_check(const AmalgamResult& r) {
    const FiniteAlgebra& whole = *r.algebra;
    const FiniteAlgebra& a = *r.a_factor;
    const FiniteAlgebra& b = *r.ambient;
    const FiniteAlgebra& ialg = *r.ideal_algebra;
    const Subspace& is = r.ideal_in_ambient.subspace;
    const std::size_t total = whole.dim();

    auto embed_ideal = [&](const Vec& coords) {
        Vec v(b.dim());
        for (std::size_t q = 0; q < coords.size(); ++q)
            v = v + coords[q] * is.basis_vector(q);
        return v;
    };
    auto ideal_coords = [&](const Vec& v) {
        auto c = is.coordinates_of(v);
        if (!c) throw Error("bidual check: product escaped the ideal");
        return *c;
    };

    for (std::size_t u = 0; u < total; ++u)
        for (std::size_t w = 0; w < total; ++w) {
            Vec x = basis_vec(total, u), y = basis_vec(total, w);
            ArensProducts lhs = arens_products(whole, x, y);
            Vec transported = whole.multiply(x, y);
            if (lhs.first != transported || lhs.second != transported) return false;

            auto [f1, f2] = r.split(x);
            auto [g1, g2] = r.split(y);
            Vec tf1 = r.theta.apply(f1), tg1 = r.theta.apply(g1);
            Vec f2b = embed_ideal(f2), g2b = embed_ideal(g2);

            // box: (F1 box G1, theta**(F1) box G2 + F2 box G2 + F2 box theta**(G1))
            Vec box_a = arens_products(a, f1, g1).first;
            Vec box_i = ideal_coords(arens_products(b, tf1, g2b).first) +
                        arens_products(ialg, f2, g2).first +
                        ideal_coords(arens_products(b, f2b, tg1).first);
            if (lhs.first != r.join(box_a, box_i)) return false;

            // diamond: (F1 dia G1, theta**(F1) dia G2 + F2 dia theta**(G1) + F2 dia G2)
            Vec dia_a = arens_products(a, f1, g1).second;
            Vec dia_i = ideal_coords(arens_products(b, tf1, g2b).second) +
                        ideal_coords(arens_products(b, f2b, tg1).second) +
                        arens_products(ialg, f2, g2).second;
            if (lhs.second != r.join(dia_a, dia_i)) return false;
        }
    return true;
}

TopologicalCentres topological_centres(const AlgebraPtr& a) {
    const std::size_t n = a->dim();
    std::vector<Vec> left_rows, right_rows;
    for (std::size_t j = 0; j < n; ++j) {
        Vec ej(n);
        ej[j] = 1;
        for (std::size_t k = 0; k < n; ++k) {
            Vec lrow(n), rrow(n);
            for (std::size_t i = 0; i < n; ++i) {
                Vec ei(n);
                ei[i] = 1;
                ArensProducts p = arens_products(*a, ei, ej);
                lrow[i] = p.first[k] - p.second[k];
                ArensProducts q = arens_products(*a, ej, ei);
                rrow[i] = q.first[k] - q.second[k];
            }
            left_rows.push_back(std::move(lrow));
            right_rows.push_back(std::move(rrow));
        }
    }
    TopologicalCentres centres{
        Subspace::span(null_space_basis(Matrix::from_rows(left_rows, n)), n),
        Subspace::span(null_space_basis(Matrix::from_rows(right_rows, n)), n)};
    if (!centres.left.is_full() || !centres.right.is_full())
        throw Error("topological centre is not the whole space in finite dimension");
    return centres;
}

TopologicalCentres module_topological_centres(const Bimodule& x) {
    const std::size_t n = x.algebra->dim(), m = x.dim;
    auto a_basis = [&](std::size_t i) { return basis_vec(n, i); };
    auto x_basis = [&](std::size_t p) { return basis_vec(m, p); };

    // X* actions: <a.l, v> = <l, v.a>, <l.a, v> = <l, a.v>
    auto xstar_left = [&](const Vec& a, const Vec& lam) {
        Vec out(m);
        for (std::size_t p = 0; p < m; ++p) out[p] = dot(lam, x.act_right(x_basis(p), a));
        return out;
    };
    auto xstar_right = [&](const Vec& lam, const Vec& a) {
        Vec out(m);
        for (std::size_t p = 0; p < m; ++p) out[p] = dot(lam, x.act_left(a, x_basis(p)));
        return out;
    };

    // first/second Arens extensions of the right action x'' . a''
    auto right_ext_first = [&](const Vec& xb, const Vec& ab) {
        Vec out(m);
        for (std::size_t t = 0; t < m; ++t) {
            Vec xi = x_basis(t);
            // a''. xi in X*: <a''.xi, v> = <a'', xi . v>, <xi.v, a> = xi(v.a)
            Vec a_xi(m);
            for (std::size_t p = 0; p < m; ++p) {
                Vec xi_v(n);
                for (std::size_t i = 0; i < n; ++i)
                    xi_v[i] = dot(xi, x.act_right(x_basis(p), a_basis(i)));
                a_xi[p] = dot(xi_v, ab);
            }
            out[t] = dot(a_xi, xb);
        }
        return out;
    };
    auto right_ext_second = [&](const Vec& xb, const Vec& ab) {
        Vec out(m);
        for (std::size_t t = 0; t < m; ++t) {
            Vec xi = x_basis(t);
            // xi . x'' in A*: <xi.x'', a> = <x'', a.xi>
            Vec xi_x(n);
            for (std::size_t i = 0; i < n; ++i)
                xi_x[i] = dot(xstar_left(a_basis(i), xi), xb);
            out[t] = dot(xi_x, ab);
        }
        return out;
    };
    // extensions of the left action a'' . x''
    auto left_ext_first = [&](const Vec& ab, const Vec& xb) {
        Vec out(m);
        for (std::size_t t = 0; t < m; ++t) {
            Vec xi = x_basis(t);
            // x''.xi in A*: <x''.xi, a> = <x'', xi.a>
            Vec x_xi(n);
            for (std::size_t i = 0; i < n; ++i)
                x_xi[i] = dot(xstar_right(xi, a_basis(i)), xb);
            out[t] = dot(x_xi, ab);
        }
        return out;
    };
    auto left_ext_second = [&](const Vec& ab, const Vec& xb) {
        Vec out(m);
        for (std::size_t t = 0; t < m; ++t) {
            Vec xi = x_basis(t);
            // xi . a'' in X*: <xi.a'', v> = <a'', v.xi>, <v.xi, a> = xi(a.v)
            Vec xi_a(m);
            for (std::size_t p = 0; p < m; ++p) {
                Vec v_xi(n);
                for (std::size_t i = 0; i < n; ++i)
                    v_xi[i] = dot(xi, x.act_left(a_basis(i), x_basis(p)));
                xi_a[p] = dot(v_xi, ab);
            }
            out[t] = dot(xi_a, xb);
        }
        return out;
    };

    std::vector<Vec> left_rows, right_rows;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < m; ++t) {
            Vec lrow(m), rrow(m);
            for (std::size_t p = 0; p < m; ++p) {
                lrow[p] = right_ext_first(x_basis(p), a_basis(i))[t] -
                          right_ext_second(x_basis(p), a_basis(i))[t];
                rrow[p] = left_ext_first(a_basis(i), x_basis(p))[t] -
                          left_ext_second(a_basis(i), x_basis(p))[t];
            }
            left_rows.push_back(std::move(lrow));
            right_rows.push_back(std::move(rrow));
        }
    TopologicalCentres centres{
        Subspace::span(null_space_basis(Matrix::from_rows(left_rows, m)), m),
        Subspace::span(null_space_basis(Matrix::from_rows(right_rows, m)), m)};
    if (!centres.left.is_full() || !centres.right.is_full())
        throw Error("module topological centre is not the whole space in finite dimension");
    return centres;
}

}  // namespace amalgam
