#include "amalgam/algebra.hpp"

#include <set>

namespace amalgam {

AssociativityViolation::AssociativityViolation(std::size_t i_, std::size_t j_, std::size_t k_)
    : Error("associativity violated at basis triple (" + std::to_string(i_) + ", " +
            std::to_string(j_) + ", " + std::to_string(k_) + ")"),
      i(i_), j(j_), k(k_) {}

DuplicateLabel::DuplicateLabel(const std::string& label)
    : Error("duplicate basis label '" + label + "'") {}

NonpositiveWeight::NonpositiveWeight(std::size_t index)
    : Error("norm weight at index " + std::to_string(index) + " is not positive") {}

AlgebraPtr FiniteAlgebra::make(std::size_t dim, std::vector<std::string> labels,
                               std::vector<Rational> table, std::vector<Rational> weights) {
    auto a = std::shared_ptr<FiniteAlgebra>(new FiniteAlgebra());
    a->dim_ = dim;
    if (labels.empty())
        for (std::size_t i = 0; i < dim; ++i) labels.push_back("e" + std::to_string(i));
    if (labels.size() != dim) throw Error("label count does not match dimension");
    std::set<std::string> seen;
    for (const auto& l : labels)
        if (!seen.insert(l).second) throw DuplicateLabel(l);
    a->labels_ = std::move(labels);

    if (table.size() != dim * dim * dim) throw Error("structure-constant table has wrong shape");
    a->table_ = std::move(table);

    if (weights.empty()) weights.assign(dim, Rational(1));
    if (weights.size() != dim) throw Error("weight count does not match dimension");
    for (std::size_t k = 0; k < dim; ++k)
        if (weights[k].sign() <= 0) throw NonpositiveWeight(k);
    a->weights_ = std::move(weights);

    // (e_i e_j) e_k = e_i (e_j e_k) for all basis triples
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            Vec ij = a->basis_product(i, j);
            for (std::size_t k = 0; k < dim; ++k) {
                Vec lhs(dim), jk = a->basis_product(j, k);
                for (std::size_t p = 0; p < dim; ++p) {
                    if (ij[p].is_zero()) continue;
                    for (std::size_t q = 0; q < dim; ++q)
                        lhs[q] += ij[p] * a->c(p, k, q);
                }
                Vec rhs(dim);
                for (std::size_t p = 0; p < dim; ++p) {
                    if (jk[p].is_zero()) continue;
                    for (std::size_t q = 0; q < dim; ++q)
                        rhs[q] += a->c(i, p, q) * jk[p];
                }
                if (lhs != rhs) throw AssociativityViolation(i, j, k);
            }
        }
    return a;
}

Vec FiniteAlgebra::basis_product(std::size_t i, std::size_t j) const {
    Vec v(dim_);
    for (std::size_t k = 0; k < dim_; ++k) v[k] = c(i, j, k);
    return v;
}

Vec FiniteAlgebra::multiply(const Vec& x, const Vec& y) const {
    if (x.size() != dim_ || y.size() != dim_)
        throw AlgebraMismatch("multiply: coordinate size mismatch");
    Vec r(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (y[j].is_zero()) continue;
            Rational f = x[i] * y[j];
            for (std::size_t k = 0; k < dim_; ++k)
                if (!c(i, j, k).is_zero()) r[k] += f * c(i, j, k);
        }
    }
    return r;
}

Matrix FiniteAlgebra::left_mult_matrix(const Vec& x) const {
    Matrix m(dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
        Vec col(dim_);
        for (std::size_t i = 0; i < dim_; ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t k = 0; k < dim_; ++k) col[k] += x[i] * c(i, j, k);
        }
        for (std::size_t k = 0; k < dim_; ++k) m.at(k, j) = col[k];
    }
    return m;
}

Matrix FiniteAlgebra::right_mult_matrix(const Vec& x) const {
    Matrix m(dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
        Vec col(dim_);
        for (std::size_t i = 0; i < dim_; ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t k = 0; k < dim_; ++k) col[k] += c(j, i, k) * x[i];
        }
        for (std::size_t k = 0; k < dim_; ++k) m.at(k, j) = col[k];
    }
    return m;
}

Rational FiniteAlgebra::norm(const Vec& x) const {
    Rational s;
    for (std::size_t k = 0; k < dim_; ++k) s += weights_[k] * x[k].abs();
    return s;
}

Rational FiniteAlgebra::dual_norm(const Vec& f) const {
    Rational m;
    for (std::size_t k = 0; k < dim_; ++k) m = max(m, f[k].abs() / weights_[k]);
    return m;
}

AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y) {
    if (x.algebra != y.algebra) throw AlgebraMismatch("element product across algebras");
    return {x.algebra, x.algebra->multiply(x.coords, y.coords)};
}

AlgebraElement operator+(const AlgebraElement& x, const AlgebraElement& y) {
    if (x.algebra != y.algebra) throw AlgebraMismatch("element sum across algebras");
    return {x.algebra, x.coords + y.coords};
}

HomomorphismCheck verify_homomorphism(const AlgebraMap& m) {
    if (m.matrix.rows() != m.codomain->dim() || m.matrix.cols() != m.domain->dim())
        throw Error("homomorphism check: matrix shape mismatch");
    const std::size_t n = m.domain->dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec lhs = m.apply(m.domain->basis_product(i, j));
            Vec rhs = m.codomain->multiply(m.apply_basis(i), m.apply_basis(j));
            if (lhs != rhs) return {false, std::make_pair(i, j)};
        }
    return {true, std::nullopt};
}

AlgebraMap make_homomorphism(AlgebraPtr domain, AlgebraPtr codomain, Matrix matrix) {
    AlgebraMap m{std::move(domain), std::move(codomain), std::move(matrix), false};
    HomomorphismCheck chk = verify_homomorphism(m);
    if (!chk.multiplicative)
        throw UncertifiedMap("map is not multiplicative at basis pair (" +
                             std::to_string(chk.witness->first) + ", " +
                             std::to_string(chk.witness->second) + ")");
    m.multiplicative = true;
    return m;
}

AlgebraMap identity_map(const AlgebraPtr& a) {
    return {a, a, Matrix::identity(a->dim()), true};
}

AlgebraMap zero_map(AlgebraPtr domain, AlgebraPtr codomain) {
    Matrix z(codomain->dim(), domain->dim());
    return {std::move(domain), std::move(codomain), std::move(z), true};
}

Rational operator_norm_bound(const AlgebraMap& m) {
    Rational bound;
    for (std::size_t j = 0; j < m.domain->dim(); ++j)
        bound = max(bound, m.codomain->norm(m.apply_basis(j)) / m.domain->weight(j));
    return bound;
}

IdealCheck verify_ideal(const IdealEmbedding& ideal) {
    if (ideal.subspace.ambient_dim() != ideal.ambient->dim())
        throw Error("ideal check: ambient dimension mismatch");
    const auto& a = *ideal.ambient;
    for (std::size_t b = 0; b < a.dim(); ++b) {
        Vec eb(a.dim());
        eb[b] = 1;
        for (std::size_t v = 0; v < ideal.subspace.dim(); ++v) {
            Vec iv = ideal.subspace.basis_vector(v);
            if (!ideal.subspace.contains(a.multiply(eb, iv)))
                return {false, IdealCheck::Witness{b, v, true}};
            if (!ideal.subspace.contains(a.multiply(iv, eb)))
                return {false, IdealCheck::Witness{b, v, false}};
        }
    }
    return {true, std::nullopt};
}

IdealEmbedding make_ideal(AlgebraPtr ambient, Subspace subspace) {
    IdealEmbedding i{std::move(ambient), std::move(subspace), false};
    IdealCheck chk = verify_ideal(i);
    if (!chk.two_sided)
        throw UncertifiedIdeal("subspace is not a two-sided ideal (ambient basis " +
                               std::to_string(chk.witness->ambient_index) + " vs ideal basis " +
                               std::to_string(chk.witness->ideal_index) + ")");
    i.two_sided = true;
    return i;
}

IdealEmbedding full_ideal(const AlgebraPtr& a) {
    return {a, Subspace::full(a->dim()), true};
}

std::optional<Vec> find_identity(const FiniteAlgebra& a) {
    const std::size_t n = a.dim();
    // e e_j = e_j and e_j e = e_j: 2n^2 equations in n unknowns
    Matrix sys(2 * n * n, n);
    Vec rhs(2 * n * n);
    std::size_t row = 0;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            for (std::size_t i = 0; i < n; ++i) {
                sys.at(row, i) = a.c(i, j, k);
                sys.at(row + 1, i) = a.c(j, i, k);
            }
            rhs[row] = rhs[row + 1] = (j == k) ? Rational(1) : Rational(0);
            row += 2;
        }
    return solve(sys, rhs);
}

CommutativityCheck is_commutative(const FiniteAlgebra& a) {
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = i + 1; j < a.dim(); ++j)
            if (a.basis_product(i, j) != a.basis_product(j, i))
                return {false, std::make_pair(i, j)};
    return {true, std::nullopt};
}

Subspace square_span(const FiniteAlgebra& a) {
    std::vector<Vec> products;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            products.push_back(a.basis_product(i, j));
    return Subspace::span_of(products, a.dim());
}

bool is_square_dense(const FiniteAlgebra& a) {
    return square_span(a).is_full();
}

Subspace annihilator_in_ideal(const AlgebraMap& theta, const IdealEmbedding& ideal) {
    if (!theta.multiplicative) throw UncertifiedMap("annihilator: theta not certified");
    if (!ideal.two_sided) throw UncertifiedIdeal("annihilator: ideal not certified");
    if (theta.codomain != ideal.ambient)
        throw AlgebraMismatch("annihilator: theta codomain is not the ideal's ambient algebra");

    const auto& b = *ideal.ambient;
    const std::size_t m = ideal.subspace.dim();
    const std::size_t na = theta.domain->dim();
    // unknowns: coords t of j = sum t_v v_v; equations j theta(e_a) = 0 and
    // theta(e_a) j = 0 in ambient coordinates
    Matrix sys(2 * na * b.dim(), m);
    std::size_t row = 0;
    for (std::size_t ai = 0; ai < na; ++ai) {
        Vec ta = theta.apply_basis(ai);
        for (std::size_t v = 0; v < m; ++v) {
            Vec right = b.multiply(ideal.subspace.basis_vector(v), ta);
            Vec left = b.multiply(ta, ideal.subspace.basis_vector(v));
            for (std::size_t k = 0; k < b.dim(); ++k) {
                sys.at(row + 2 * k, v) = right[k];
                sys.at(row + 2 * k + 1, v) = left[k];
            }
        }
        row += 2 * b.dim();
    }
    Matrix t_basis = null_space_basis(sys);
    std::vector<Vec> vectors;
    for (std::size_t r = 0; r < t_basis.rows(); ++r) {
        Vec j(b.dim());
        for (std::size_t v = 0; v < m; ++v)
            j = j + t_basis.at(r, v) * ideal.subspace.basis_vector(v);
        vectors.push_back(std::move(j));
    }
    return Subspace::span_of(vectors, b.dim());
}

Rational check_submultiplicative(const FiniteAlgebra& a) {
    Rational worst;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            worst = max(worst, a.norm(a.basis_product(i, j)) / (a.weight(i) * a.weight(j)));
    return worst;
}

QuotientResult quotient_algebra(const AlgebraPtr& a, const Subspace& ideal) {
    if (ideal.ambient_dim() != a->dim())
        throw Error("quotient: ideal ambient dimension mismatch");
    {
        IdealCheck chk = verify_ideal({a, ideal, false});
        if (!chk.two_sided) throw UncertifiedIdeal("quotient: subspace is not a two-sided ideal");
    }
    const std::size_t n = a->dim();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t i = 0; i < ideal.dim(); ++i) {
        std::size_t p = 0;
        while (p < n && ideal.basis().at(i, p).is_zero()) ++p;
        is_pivot[p] = true;
    }
    std::vector<std::size_t> reps;  // coset representatives = non-pivot coords
    for (std::size_t t = 0; t < n; ++t)
        if (!is_pivot[t]) reps.push_back(t);
    const std::size_t q = reps.size();

    // reduce v modulo the ideal, then read off representative coordinates
    auto project = [&](Vec v) {
        for (std::size_t i = 0; i < ideal.dim(); ++i) {
            std::size_t p = 0;
            while (p < n && ideal.basis().at(i, p).is_zero()) ++p;
            if (v[p].is_zero()) continue;
            Rational f = v[p];
            for (std::size_t c = 0; c < n; ++c) v[c] -= f * ideal.basis().at(i, c);
        }
        Vec out(q);
        for (std::size_t t = 0; t < q; ++t) out[t] = v[reps[t]];
        return out;
    };

    std::vector<Rational> table(q * q * q);
    for (std::size_t s = 0; s < q; ++s)
        for (std::size_t t = 0; t < q; ++t) {
            Vec prod = project(a->basis_product(reps[s], reps[t]));
            for (std::size_t k = 0; k < q; ++k) table[(s * q + t) * q + k] = prod[k];
        }
    std::vector<std::string> labels;
    std::vector<Rational> weights;
    for (std::size_t t : reps) {
        labels.push_back(a->label(t));
        weights.push_back(a->weight(t));
    }
    QuotientResult res;
    res.algebra = FiniteAlgebra::make(q, std::move(labels), std::move(table), std::move(weights));
    res.projection = Matrix(q, n);
    for (std::size_t j = 0; j < n; ++j) {
        Vec ej(n);
        ej[j] = 1;
        Vec pj = project(ej);
        for (std::size_t t = 0; t < q; ++t) res.projection.at(t, j) = pj[t];
    }
    res.section = Matrix(n, q);
    for (std::size_t t = 0; t < q; ++t) res.section.at(reps[t], t) = 1;
    return res;
}

SubalgebraResult subspace_as_algebra(const AlgebraPtr& ambient, const Subspace& s,
                                     const std::string& label_prefix) {
    const std::size_t m = s.dim();
    std::vector<Rational> table(m * m * m);
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t q = 0; q < m; ++q) {
            Vec prod = ambient->multiply(s.basis_vector(p), s.basis_vector(q));
            auto coords = s.coordinates_of(prod);
            if (!coords)
                throw Error("subspace is not multiplicatively closed (basis pair " +
                            std::to_string(p) + ", " + std::to_string(q) + ")");
            for (std::size_t k = 0; k < m; ++k) table[(p * m + q) * m + k] = (*coords)[k];
        }
    // a basis vector equal to a standard vector keeps the ambient label
    std::vector<std::string> labels;
    std::vector<Rational> weights;
    for (std::size_t p = 0; p < m; ++p) {
        Vec v = s.basis_vector(p);
        std::size_t nonzero = 0, where = 0;
        for (std::size_t c = 0; c < v.size(); ++c)
            if (!v[c].is_zero()) { ++nonzero; where = c; }
        if (nonzero == 1 && v[where].is_one())
            labels.push_back(label_prefix + ambient->label(where));
        else
            labels.push_back(label_prefix + "v" + std::to_string(p));
        weights.push_back(ambient->norm(v));
    }
    SubalgebraResult res;
    res.algebra = FiniteAlgebra::make(m, std::move(labels), std::move(table), std::move(weights));
    res.inclusion = s.basis().transpose();
    return res;
}

}  // namespace amalgam
