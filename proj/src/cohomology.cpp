#include "amalgam/cohomology.hpp"

namespace amalgam {

namespace {

Vec basis_vec(std::size_t len, std::size_t idx) {
    Vec v(len);
    v[idx] = 1;
    return v;
}

Matrix unflatten(const Vec& flat, std::size_t rows, std::size_t cols) {
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = flat[r * cols + c];
    return m;
}

}  // namespace

DerivationCheck verify_derivation(const Derivation& d) {
    const std::size_t n = d.algebra->dim();
    if (d.matrix.rows() != d.target.dim || d.matrix.cols() != n)
        throw Error("derivation: matrix shape mismatch");
    if (!d.target.certified) throw Error("derivation: target bimodule is not certified");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec lhs = d.apply(d.algebra->basis_product(i, j));
            Vec rhs = d.target.act_left(basis_vec(n, i), d.apply(basis_vec(n, j))) +
                      d.target.act_right(d.apply(basis_vec(n, i)), basis_vec(n, j));
            if (lhs != rhs) return {false, std::make_pair(i, j)};
        }
    return {true, std::nullopt};
}

Derivation make_derivation(AlgebraPtr algebra, Bimodule target, Matrix matrix) {
    Derivation d{std::move(algebra), std::move(target), std::move(matrix), false};
    DerivationCheck chk = verify_derivation(d);
    if (!chk.ok)
        throw Error("Leibniz rule fails at basis pair (" +
                    std::to_string(chk.witness->first) + ", " +
                    std::to_string(chk.witness->second) + ")");
    d.certified = true;
    return d;
}

namespace {

/// Rows of the Leibniz constraint system over flattened matrices.
std::vector<Vec> leibniz_rows(const FiniteAlgebra& a, const Bimodule& x) {
    const std::size_t n = a.dim(), m = x.dim;
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t t = 0; t < m; ++t) {
                Vec row(m * n);
                for (std::size_t k = 0; k < n; ++k)
                    if (!a.c(i, j, k).is_zero()) row[t * n + k] += a.c(i, j, k);
                for (std::size_t p = 0; p < m; ++p) {
                    if (!x.l(i, p, t).is_zero()) row[p * n + j] -= x.l(i, p, t);
                    if (!x.r(p, j, t).is_zero()) row[p * n + i] -= x.r(p, j, t);
                }
                rows.push_back(std::move(row));
            }
    return rows;
}

}  // namespace

Subspace derivation_space(const AlgebraPtr& a, const Bimodule& x) {
    if (!x.certified) throw Error("derivation space: bimodule is not certified");
    if (x.algebra != a) throw AlgebraMismatch("derivation space: bimodule over another algebra");
    const std::size_t n = a->dim(), m = x.dim;
    if (n == 0 || m == 0) return Subspace::zero(m * n);
    Matrix sys = Matrix::from_rows(leibniz_rows(*a, x), m * n);
    return Subspace::span(null_space_basis(sys), m * n);
}

Matrix ad_matrix(const AlgebraPtr& a, const Bimodule& x, const Vec& v) {
    const std::size_t n = a->dim();
    Matrix m(x.dim, n);
    for (std::size_t i = 0; i < n; ++i) {
        Vec ei = basis_vec(n, i);
        Vec col = x.act_left(ei, v) - x.act_right(v, ei);
        for (std::size_t q = 0; q < x.dim; ++q) m.at(q, i) = col[q];
    }
    return m;
}

Subspace inner_derivations(const AlgebraPtr& a, const Bimodule& x) {
    const std::size_t n = a->dim(), m = x.dim;
    std::vector<Vec> rows;
    for (std::size_t p = 0; p < m; ++p)
        rows.push_back(ad_matrix(a, x, basis_vec(m, p)).flatten());
    return Subspace::span_of(rows, m * n);
}

CohomologyReport h1(const AlgebraPtr& a, const Bimodule& x) {
    Subspace z1 = derivation_space(a, x);
    Subspace b1 = inner_derivations(a, x);
    if (!z1.contains(b1)) throw Error("h1: inner derivations escape the derivation space");
    CohomologyReport rep;
    rep.z1_dim = z1.dim();
    rep.b1_dim = b1.dim();
    rep.h1_dim = z1.dim() - b1.dim();
    for (std::size_t r = 0; r < z1.dim(); ++r)
        rep.z1_basis.push_back(unflatten(z1.basis_vector(r), x.dim, a->dim()));
    for (std::size_t r = 0; r < b1.dim(); ++r)
        rep.b1_basis.push_back(unflatten(b1.basis_vector(r), x.dim, a->dim()));
    return rep;
}

bool is_weakly_amenable(const AlgebraPtr& a) {
    return h1(a, dual_bimodule(a)).h1_dim == 0;
}

Subspace cyclic_derivations(const AlgebraPtr& b) {
    const std::size_t n = b->dim();
    Bimodule dual = dual_bimodule(b);
    if (n == 0) return Subspace::zero(0);
    std::vector<Vec> rows = leibniz_rows(*b, dual);
    // <e_i, D(e_j)> + <e_j, D(e_i)> = 0  <=>  D_ij + D_ji = 0
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Vec row(n * n);
            row[i * n + j] += Rational(1);
            row[j * n + i] += Rational(1);
            rows.push_back(std::move(row));
        }
    return Subspace::span(null_space_basis(Matrix::from_rows(rows, n * n)), n * n);
}

bool is_cyclically_amenable(const AlgebraPtr& b) {
    return inner_derivations(b, dual_bimodule(b)).contains(cyclic_derivations(b));
}

std::size_t h1c_dim(const AlgebraPtr& b) {
    Subspace zc = cyclic_derivations(b);
    Subspace b1 = inner_derivations(b, dual_bimodule(b));
    return zc.dim() - zc.intersection(b1).dim();
}

LiftResult lift_derivation(const AmalgamResult& r, const Derivation& d) {
    if (!d.certified) throw Error("lift: derivation is not certified");
    if (d.algebra != r.a_factor) throw AlgebraMismatch("lift: derivation not on A");
    const std::size_t n = r.dim_a(), total = r.algebra->dim();
    Matrix lifted(total, total);
    for (std::size_t row = 0; row < n; ++row)
        for (std::size_t col = 0; col < n; ++col) lifted.at(row, col) = d.matrix.at(row, col);

    LiftResult res{make_derivation(r.algebra, dual_bimodule(r.algebra), std::move(lifted)),
                   false, false, false};
    res.original_inner =
        inner_derivations(r.a_factor, dual_bimodule(r.a_factor)).contains(d.matrix.flatten());
    res.lifted_inner = inner_derivations(r.algebra, dual_bimodule(r.algebra))
                           .contains(res.lifted.matrix.flatten());
    res.inner_agrees = res.original_inner == res.lifted_inner;
    return res;
}

namespace {

Matrix block_of(const Matrix& m, std::size_t row0, std::size_t col0, std::size_t rows,
                std::size_t cols) {
    Matrix b(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) b.at(r, c) = m.at(row0 + r, col0 + c);
    return b;
}

bool is_zero_matrix(const Matrix& m) { return is_zero_vec(m.flatten()); }

}  // namespace

IdDecomposition decompose_derivation_id_amalgam(const AmalgamResult& r, const Derivation& d) {
    if (!is_identity_amalgam(r))
        throw Error("id-amalgam decomposition: instance is not A bowtie^id A");
    if (!is_square_dense(*r.a_factor)) throw HypothesisViolation("A^2 = A");
    if (!d.certified || d.algebra != r.algebra)
        throw Error("id-amalgam decomposition: derivation not on the amalgam");
    const std::size_t n = r.dim_a();
    Matrix d1 = block_of(d.matrix, 0, 0, n, n);
    Matrix d2 = block_of(d.matrix, 0, n, n, n);
    Matrix d3 = block_of(d.matrix, n, 0, n, n);
    Matrix d4 = block_of(d.matrix, n, n, n, n);
    if (d3 != d2 || d4 != d2)
        throw DecompositionMismatch("id-amalgam block identities D3 = D4 = D2 fail");

    Bimodule dual_a = dual_bimodule(r.a_factor);
    IdDecomposition out{make_derivation(r.a_factor, dual_a, d1),
                        make_derivation(r.a_factor, dual_a, d2), false};

    // reconstruction is exact by block assembly; verify anyway
    Matrix rebuilt(2 * n, 2 * n);
    for (std::size_t row = 0; row < n; ++row)
        for (std::size_t col = 0; col < n; ++col) {
            rebuilt.at(row, col) = d1.at(row, col);
            rebuilt.at(row, n + col) = d2.at(row, col);
            rebuilt.at(n + row, col) = d2.at(row, col);
            rebuilt.at(n + row, n + col) = d2.at(row, col);
        }
    if (rebuilt != d.matrix) throw DecompositionMismatch("id-amalgam reconstruction failed");

    Subspace b1_a = inner_derivations(r.a_factor, dual_a);
    bool parts_inner = b1_a.contains(d1.flatten()) && b1_a.contains(d2.flatten());
    bool whole_inner = inner_derivations(r.algebra, dual_bimodule(r.algebra))
                           .contains(d.matrix.flatten());
    out.inner_agrees = parts_inner == whole_inner;
    return out;
}

LauDecomposition decompose_derivation_lau(const AmalgamResult& r, const Derivation& d) {
    if (r.kind != ConstructionKind::Lau || !r.lau_phi)
        throw Error("lau decomposition: instance is not a Lau product");
    const AlgebraPtr& a = r.a_factor;
    const AlgebraPtr& b = r.ideal_algebra;  // the Lau factor B, re-based
    if (!is_square_dense(*b)) throw DecompositionMismatch("B^2 = B fails");
    if (!d.certified || d.algebra != r.algebra)
        throw Error("lau decomposition: derivation not on the Lau product");
    const std::size_t n = a->dim(), m = b->dim();
    Matrix d1 = block_of(d.matrix, 0, 0, n, n);
    Matrix d2 = block_of(d.matrix, 0, n, n, m);
    Matrix d3 = block_of(d.matrix, n, 0, m, n);
    Matrix d4 = block_of(d.matrix, n, n, m, m);
    if (!is_zero_matrix(d3)) throw DecompositionMismatch("lau block D3 = 0 fails");

    Bimodule dual_a = dual_bimodule(a);
    Bimodule dual_b = dual_bimodule(b);
    LauDecomposition out{make_derivation(a, dual_a, d1), d2,
                         make_derivation(b, dual_b, d4), false};

    const Vec& phi = r.lau_phi->coords;
    // (1) a.D2(b) = D2(b).a = phi(a) D2(b) in A*
    for (std::size_t i = 0; i < n; ++i) {
        Vec ea = basis_vec(n, i);
        for (std::size_t q = 0; q < m; ++q) {
            Vec d2b = d2.col(q);
            Vec left = dual_left_action(*a, ea, d2b);
            Vec right = dual_right_action(*a, d2b, ea);
            Vec scaled = phi[i] * d2b;
            if (left != scaled || right != scaled)
                throw DecompositionMismatch("lau condition (1) on D2 fails");
        }
    }
    // (2) D2(bb') = <b, D4(b')> phi + <b', D4(b)> phi
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t q = 0; q < m; ++q) {
            Vec lhs = d2.apply(b->basis_product(p, q));
            Rational coeff = d4.at(p, q) + d4.at(q, p);
            if (lhs != coeff * phi) throw DecompositionMismatch("lau condition (2) on D2 fails");
        }

    bool parts_inner = inner_derivations(a, dual_a).contains(d1.flatten()) &&
                       is_zero_matrix(d2) &&
                       inner_derivations(b, dual_b).contains(d4.flatten());
    bool whole_inner = inner_derivations(r.algebra, dual_bimodule(r.algebra))
                           .contains(d.matrix.flatten());
    out.inner_agrees = parts_inner == whole_inner;
    return out;
}

bool theorem_h1_doubling_check(const AlgebraPtr& a) {
    if (!is_square_dense(*a)) throw HypothesisViolation("A^2 = A");
    AmalgamResult r = identity_amalgam(a);
    CohomologyReport whole = h1(r.algebra, dual_bimodule(r.algebra));
    CohomologyReport part = h1(a, dual_bimodule(a));
    return whole.h1_dim == 2 * part.h1_dim;
}

bool theorem_embedding_lau_check(const AlgebraPtr& a, const AlgebraPtr& b,
                                 const Character& phi) {
    AmalgamResult r = lau_product(a, b, phi);
    const std::size_t n = a->dim(), m = b->dim(), total = n + m;

    CohomologyReport ha = h1(a, dual_bimodule(a));
    std::size_t hc_b = h1c_dim(b);
    CohomologyReport hlau = h1(r.algebra, dual_bimodule(r.algebra));
    if (hlau.h1_dim < ha.h1_dim + hc_b) return false;

    // the explicit embedding psi(D1, D4)(a,b) = (D1(a), D4(b)): lift a
    // basis of Z^1(A,A*) (+) Z^1_c(B,B*) and check injectivity modulo
    // inner derivations of the Lau product
    Bimodule dual_lau = dual_bimodule(r.algebra);
    std::vector<Vec> lift_flat;
    auto embed_blocks = [&](const Matrix& d1, const Matrix& d4) {
        Matrix whole(total, total);
        for (std::size_t row = 0; row < n; ++row)
            for (std::size_t col = 0; col < n; ++col) whole.at(row, col) = d1.at(row, col);
        for (std::size_t row = 0; row < m; ++row)
            for (std::size_t col = 0; col < m; ++col)
                whole.at(n + row, n + col) = d4.at(row, col);
        // each lifted block map must itself be a derivation
        make_derivation(r.algebra, dual_lau, whole);
        return whole.flatten();
    };
    Subspace z1a = derivation_space(a, dual_bimodule(a));
    for (std::size_t i = 0; i < z1a.dim(); ++i)
        lift_flat.push_back(embed_blocks(unflatten(z1a.basis_vector(i), n, n), Matrix(m, m)));
    Subspace zcb = cyclic_derivations(b);
    for (std::size_t i = 0; i < zcb.dim(); ++i)
        lift_flat.push_back(embed_blocks(Matrix(n, n), unflatten(zcb.basis_vector(i), m, m)));

    Subspace lifted = Subspace::span_of(lift_flat, total * total);
    Subspace b1_lau = inner_derivations(r.algebra, dual_lau);
    std::size_t image_mod_inner = lifted.sum(b1_lau).dim() - b1_lau.dim();
    // injectivity on cohomology: the image must keep the full quotient rank
    std::size_t domain_h = (z1a.dim() - inner_derivations(a, dual_bimodule(a)).dim()) + hc_b;
    return image_mod_inner == domain_h;
}

WeakAmenabilityChecks weak_amenability_amalgam_checks(const AmalgamResult& r) {
    WeakAmenabilityChecks out;
    out.amalgam_wa = is_weakly_amenable(r.algebra);
    out.a_wa = is_weakly_amenable(r.a_factor);
    out.i_wa = is_weakly_amenable(r.ideal_algebra);

    if (is_commutative(*r.algebra).commutative)
        out.commutative_iff = out.amalgam_wa == (out.a_wa && out.i_wa);
    out.sufficiency = !(out.a_wa && out.i_wa) || out.amalgam_wa;
    if (is_identity_amalgam(r)) out.id_iff = out.amalgam_wa == out.a_wa;
    out.necessity = !out.amalgam_wa || out.a_wa;
    return out;
}

}  // namespace amalgam
