#include "amalgam/structure.hpp"

#include "amalgam/polynomial.hpp"

#include <algorithm>

namespace amalgam {

CharacterCheck verify_character(const FiniteAlgebra& a, const Vec& coords) {
    if (coords.size() != a.dim()) throw Error("character: coordinate size mismatch");
    CharacterCheck chk;
    chk.multiplicative = true;
    for (std::size_t i = 0; i < a.dim() && chk.multiplicative; ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
            if (dot(coords, a.basis_product(i, j)) != coords[i] * coords[j]) {
                chk.multiplicative = false;
                chk.witness = std::make_pair(i, j);
                break;
            }
        }
    chk.nonzero = !is_zero_vec(coords);
    return chk;
}

Character make_character(AlgebraPtr algebra, Vec coords, bool require_nonzero) {
    CharacterCheck chk = verify_character(*algebra, coords);
    if (!chk.multiplicative)
        throw Error("not a character: multiplicativity fails at basis pair (" +
                    std::to_string(chk.witness->first) + ", " +
                    std::to_string(chk.witness->second) + ")");
    if (require_nonzero && !chk.nonzero) throw Error("not a character: the zero functional");
    return Character{std::move(algebra), std::move(coords), chk.nonzero, true};
}

namespace {

/// Trace form tau(x, y) = tr(L_{xy}) on the unitization; its kernel is
/// the radical (characteristic zero).
Subspace radical_core(const AlgebraPtr& a) {
    const std::size_t n = a->dim();
    AlgebraPtr sharp = unitization_algebra(a);
    const std::size_t ns = n + 1;
    Matrix gram(ns, ns);
    for (std::size_t i = 0; i < ns; ++i) {
        Vec ei(ns);
        ei[i] = 1;
        for (std::size_t j = 0; j <= i; ++j) {
            Vec ej(ns);
            ej[j] = 1;
            Matrix lm = sharp->left_mult_matrix(sharp->multiply(ei, ej));
            Rational tr;
            for (std::size_t k = 0; k < ns; ++k) tr += lm.at(k, k);
            gram.at(i, j) = tr;
            gram.at(j, i) = tr;
        }
    }
    Matrix kernel = null_space_basis(gram);
    // rad(A#) lies inside A: the adjoined-unit coordinate must vanish
    std::vector<Vec> vectors;
    for (std::size_t r = 0; r < kernel.rows(); ++r) {
        if (!kernel.at(r, 0).is_zero())
            throw Error("radical: kernel vector with a unit component");
        Vec v(n);
        for (std::size_t k = 0; k < n; ++k) v[k] = kernel.at(r, k + 1);
        vectors.push_back(std::move(v));
    }
    return Subspace::span_of(vectors, n);
}

}  // namespace

Subspace radical(const AlgebraPtr& a) {
    Subspace rad = radical_core(a);

    // re-verify: two-sided ideal
    IdealCheck chk = verify_ideal({a, rad, false});
    if (!chk.two_sided) throw Error("radical: result is not a two-sided ideal");
    // nilpotent: some power (at most dim) vanishes
    if (!rad.is_zero()) {
        Subspace power = rad;
        bool vanished = false;
        for (std::size_t step = 1; step <= a->dim() && !vanished; ++step) {
            std::vector<Vec> products;
            for (std::size_t p = 0; p < power.dim(); ++p)
                for (std::size_t q = 0; q < rad.dim(); ++q)
                    products.push_back(
                        a->multiply(power.basis_vector(p), rad.basis_vector(q)));
            power = Subspace::span_of(products, a->dim());
            vanished = power.is_zero();
        }
        if (!vanished) throw Error("radical: result is not nilpotent");
    }
    // semisimple quotient
    if (!radical_core(quotient_algebra(a, rad).algebra).is_zero())
        throw Error("radical: quotient is not semisimple");
    return rad;
}

bool is_semisimple(const AlgebraPtr& a) { return radical(a).is_zero(); }

bool SpectrumReport::contains(const Vec& coords) const {
    return std::any_of(characters.begin(), characters.end(),
                       [&](const Character& c) { return c.coords == coords; });
}

namespace {

/// Two-sided ideal generated by all commutators.
Subspace commutator_ideal(const AlgebraPtr& a) {
    const std::size_t n = a->dim();
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            gens.push_back(a->basis_product(i, j) - a->basis_product(j, i));
    Subspace s = Subspace::span_of(gens, n);
    for (bool grew = true; grew;) {
        grew = false;
        std::vector<Vec> next;
        for (std::size_t v = 0; v < s.dim(); ++v) {
            next.push_back(s.basis_vector(v));
            for (std::size_t i = 0; i < n; ++i) {
                Vec ei(n);
                ei[i] = 1;
                next.push_back(a->multiply(ei, s.basis_vector(v)));
                next.push_back(a->multiply(s.basis_vector(v), ei));
            }
        }
        Subspace larger = Subspace::span_of(next, n);
        if (larger.dim() > s.dim()) {
            s = larger;
            grew = true;
        }
    }
    return s;
}

/// Minimal polynomial of the element x inside a unital commutative
/// algebra, via the first linear dependence among 1, x, x^2, ...
Poly element_min_poly(const FiniteAlgebra& k, const Vec& identity, const Vec& x) {
    std::vector<Vec> powers{identity};
    while (true) {
        // does the next power depend on the previous ones?
        Matrix m = Matrix::from_rows(powers, k.dim()).transpose();
        Vec next = k.multiply(powers.back(), x);
        if (auto coeffs = solve(m, next)) {
            Poly p;
            for (const auto& c : *coeffs) p.push_back(-c);
            p.push_back(Rational(1));
            return poly_normalize(std::move(p));
        }
        powers.push_back(next);
        if (powers.size() > k.dim() + 1) throw Error("minimal polynomial: no dependence found");
    }
}

Matrix poly_at_operator(const Poly& p, const Matrix& m) {
    Matrix acc(m.rows(), m.cols());
    Matrix id = Matrix::identity(m.rows());
    for (std::size_t i = p.size(); i-- > 0;) {
        acc = acc * m;
        if (!p[i].is_zero())
            for (std::size_t d = 0; d < m.rows(); ++d)
                for (std::size_t c = 0; c < m.cols(); ++c)
                    acc.at(d, c) += p[i] * id.at(d, c);
    }
    return acc;
}

struct SplitOutcome {
    std::vector<Vec> characters_ss;  // characters of the semisimple quotient
    bool complete = true;
    std::optional<std::string> obstruction;
};

/// Splits the commutative semisimple algebra ss into one-dimensional
/// blocks along rational eigenvalues of multiplication operators.
/// Blocks that cannot be split further over Q are reported as
/// obstructions.
SplitOutcome split_semisimple(const AlgebraPtr& ss) {
    SplitOutcome out;
    if (ss->dim() == 0) return out;
    std::vector<Subspace> work{Subspace::full(ss->dim())};
    while (!work.empty()) {
        Subspace block = work.back();
        work.pop_back();
        SubalgebraResult sub = subspace_as_algebra(ss, block);
        const FiniteAlgebra& k = *sub.algebra;
        if (k.dim() == 1) {
            // v.v = lambda v with lambda != 0; the character sends x to the
            // coefficient in v.x = chi(x) v
            Vec v = block.basis_vector(0);
            if (k.c(0, 0, 0).is_zero())
                throw Error("spectrum: nilpotent vector survived the radical quotient");
            Vec chi(ss->dim());
            for (std::size_t t = 0; t < ss->dim(); ++t) {
                Vec et(ss->dim());
                et[t] = 1;
                Vec prod = ss->multiply(v, et);
                auto coords = block.coordinates_of(prod);
                if (!coords) throw Error("spectrum: block is not an ideal");
                chi[t] = (*coords)[0];
            }
            out.characters_ss.push_back(std::move(chi));
            continue;
        }
        std::optional<Vec> identity = find_identity(k);
        if (!identity) throw Error("spectrum: semisimple block without identity");

        bool split = false;
        Poly witness_poly;
        for (std::size_t t = 0; t < k.dim() && !split; ++t) {
            Vec x(k.dim());
            x[t] = 1;
            // skip scalar multiples of the identity
            if (rank(Matrix::from_rows({*identity, x}, k.dim())) < 2) continue;
            Poly mp = element_min_poly(k, *identity, x);
            std::vector<Rational> roots = poly_rational_roots(mp);
            if (roots.empty()) {
                if (witness_poly.empty()) witness_poly = mp;
                continue;
            }
            // split along x - r: K = ker(x - r e) (+) ker(mp/(x - r))
            Rational r = roots.front();
            Vec shifted = x - r * (*identity);
            Matrix mult = k.left_mult_matrix(shifted);
            Matrix k1 = null_space_basis(mult);
            Poly rest = poly_divmod(mp, Poly{-r, Rational(1)}).first;
            Matrix k2 = null_space_basis(poly_at_operator(rest, k.left_mult_matrix(x)));
            if (k1.rows() == 0 || k1.rows() == k.dim() || k1.rows() + k2.rows() != k.dim())
                throw Error("spectrum: inconsistent eigenspace split");
            auto lift_rows = [&](const Matrix& rows) {
                std::vector<Vec> lifted;
                for (std::size_t i = 0; i < rows.rows(); ++i)
                    lifted.push_back(sub.inclusion.apply(rows.row(i)));
                return Subspace::span_of(lifted, ss->dim());
            };
            work.push_back(lift_rows(k1));
            work.push_back(lift_rows(k2));
            split = true;
        }
        if (!split) {
            // no basis element splits over Q: no rational characters here
            out.complete = false;
            if (!out.obstruction) {
                if (witness_poly.empty())
                    throw Error("spectrum: unsplittable block without witness polynomial");
                Poly factor = poly_irreducible_factor(poly_squarefree_part(witness_poly));
                out.obstruction = poly_str(factor) + " irreducible";
            }
        }
    }
    return out;
}

}  // namespace

SpectrumReport characters(const AlgebraPtr& a) {
    // characters factor through the commutative semisimple quotient
    QuotientResult ab = quotient_algebra(a, commutator_ideal(a));
    QuotientResult ss = quotient_algebra(ab.algebra, radical_core(ab.algebra));
    SplitOutcome split = split_semisimple(ss.algebra);

    Matrix to_ss = ss.projection * ab.projection;  // a -> ss
    SpectrumReport report;
    report.complete = split.complete;
    report.obstruction = split.obstruction;
    for (const auto& chi_ss : split.characters_ss) {
        Vec coords = to_ss.transpose().apply(chi_ss);
        report.characters.push_back(make_character(a, std::move(coords)));
    }
    std::sort(report.characters.begin(), report.characters.end(),
              [](const Character& x, const Character& y) { return x.coords < y.coords; });
    return report;
}

namespace {

/// Coordinates in the ideal's echelon basis of (b-element * ideal basis
/// vector) products, used for the E part of the character theorem.
Vec ideal_coords_of(const AmalgamResult& r, const Vec& b_elt) {
    auto c = r.ideal_in_ambient.subspace.coordinates_of(b_elt);
    if (!c) throw Error("amalgam characters: product escaped the ideal");
    return *c;
}

}  // namespace

SpectrumReport amalgam_characters(const AmalgamResult& r) {
    SpectrumReport sigma_a = characters(r.a_factor);
    SpectrumReport sigma_i = characters(r.ideal_algebra);
    if (!sigma_a.complete)
        throw IncompleteSpectrum("sigma(A) is not exactly enumerable over Q: " +
                                 sigma_a.obstruction.value_or(""));
    if (!sigma_i.complete)
        throw IncompleteSpectrum("sigma(I) is not exactly enumerable over Q: " +
                                 sigma_i.obstruction.value_or(""));
    if (sigma_a.characters.empty()) throw HypothesisViolation("sigma(A) is nonempty");

    // span(theta(A) I  u  I theta(A)) = I
    const auto& b = *r.ambient;
    const Subspace& is = r.ideal_in_ambient.subspace;
    {
        std::vector<Vec> products;
        for (std::size_t ai = 0; ai < r.dim_a(); ++ai) {
            Vec ta = r.theta.apply_basis(ai);
            for (std::size_t q = 0; q < is.dim(); ++q) {
                products.push_back(b.multiply(ta, is.basis_vector(q)));
                products.push_back(b.multiply(is.basis_vector(q), ta));
            }
        }
        if (Subspace::span_of(products, b.dim()) != is)
            throw HypothesisViolation("span(theta(A)I u I theta(A)) = I");
    }

    SpectrumReport out;
    out.complete = true;
    // F = sigma(A) x {0}
    for (const auto& phi : sigma_a.characters)
        out.characters.push_back(
            make_character(r.algebra, r.join(phi.coords, Vec(r.dim_i()))));

    // E = {((i.psi) o theta, psi) : psi(i) = 1}
    for (const auto& psi : sigma_i.characters) {
        std::size_t t = 0;
        while (t < r.dim_i() && psi.coords[t].is_zero()) ++t;
        if (t == r.dim_i()) throw Error("amalgam characters: zero character in sigma(I)");
        Vec i_coords(r.dim_i());
        i_coords[t] = psi.coords[t].reciprocal();  // psi(i) = 1
        Vec i_in_b(b.dim());
        for (std::size_t q = 0; q < r.dim_i(); ++q)
            i_in_b = i_in_b + i_coords[q] * is.basis_vector(q);

        // the induced functional must not depend on the choice of i:
        // psi(theta(a) j) = 0 for every j in ker psi
        Matrix psi_row(1, r.dim_i());
        for (std::size_t q = 0; q < r.dim_i(); ++q) psi_row.at(0, q) = psi.coords[q];
        Matrix kernel = null_space_basis(psi_row);
        for (std::size_t kr = 0; kr < kernel.rows(); ++kr) {
            Vec j_in_b(b.dim());
            for (std::size_t q = 0; q < r.dim_i(); ++q)
                j_in_b = j_in_b + kernel.at(kr, q) * is.basis_vector(q);
            for (std::size_t ai = 0; ai < r.dim_a(); ++ai) {
                Vec prod = b.multiply(r.theta.apply_basis(ai), j_in_b);
                if (!dot(psi.coords, ideal_coords_of(r, prod)).is_zero())
                    throw ChoiceDependence(
                        "(i.psi) o theta depends on the choice of i for a character of I");
            }
        }

        Vec phi_coords(r.dim_a());
        for (std::size_t ai = 0; ai < r.dim_a(); ++ai) {
            Vec prod = b.multiply(r.theta.apply_basis(ai), i_in_b);
            phi_coords[ai] = dot(psi.coords, ideal_coords_of(r, prod));
        }
        out.characters.push_back(
            make_character(r.algebra, r.join(phi_coords, psi.coords)));
    }

    std::sort(out.characters.begin(), out.characters.end(),
              [](const Character& x, const Character& y) { return x.coords < y.coords; });
    out.characters.erase(
        std::unique(out.characters.begin(), out.characters.end(),
                    [](const Character& x, const Character& y) { return x.coords == y.coords; }),
        out.characters.end());
    return out;
}

bool radical_decomposition_check(const AmalgamResult& r) {
    if (!is_commutative(*r.algebra).commutative)
        throw HypothesisViolation("A bowtie I is commutative");
    SpectrumReport sigma_a = characters(r.a_factor);
    if (!sigma_a.complete)
        throw IncompleteSpectrum("sigma(A) is not exactly enumerable over Q");
    if (sigma_a.characters.empty()) throw HypothesisViolation("sigma(A) is nonempty");
    {
        const auto& b = *r.ambient;
        const Subspace& is = r.ideal_in_ambient.subspace;
        std::vector<Vec> products;
        for (std::size_t ai = 0; ai < r.dim_a(); ++ai)
            for (std::size_t q = 0; q < is.dim(); ++q)
                products.push_back(b.multiply(r.theta.apply_basis(ai), is.basis_vector(q)));
        if (Subspace::span_of(products, b.dim()) != is)
            throw HypothesisViolation("span(theta(A)I) = I");
    }

    Subspace rad_amalgam = radical(r.algebra);

    std::vector<Vec> embedded;
    Subspace rad_a = radical(r.a_factor);
    for (std::size_t v = 0; v < rad_a.dim(); ++v)
        embedded.push_back(r.embed_A.apply(rad_a.basis_vector(v)));
    Subspace rad_i = radical(r.ideal_algebra);
    for (std::size_t v = 0; v < rad_i.dim(); ++v)
        embedded.push_back(r.embed_I.apply(rad_i.basis_vector(v)));
    return rad_amalgam == Subspace::span_of(embedded, r.algebra->dim());
}

std::optional<Matrix> has_diagonal(const AlgebraPtr& a) {
    const std::size_t n = a->dim();
    if (!find_identity(*a)) throw Error("has_diagonal: algebra is not unital");
    // unknowns M_pq, flattened p*n+q
    std::vector<Vec> rows;
    Vec rhs;
    // e_i . M = M . e_i  (coefficients of e_s (x) e_t)
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t s = 0; s < n; ++s)
            for (std::size_t t = 0; t < n; ++t) {
                Vec row(n * n);
                for (std::size_t p = 0; p < n; ++p) row[p * n + t] += a->c(i, p, s);
                for (std::size_t q = 0; q < n; ++q) row[s * n + q] -= a->c(q, i, t);
                rows.push_back(std::move(row));
                rhs.push_back(Rational(0));
            }
    // product(M) e_i = e_i
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec row(n * n);
            for (std::size_t p = 0; p < n; ++p)
                for (std::size_t q = 0; q < n; ++q) {
                    Rational coeff;
                    for (std::size_t k = 0; k < n; ++k)
                        if (!a->c(p, q, k).is_zero() && !a->c(k, i, j).is_zero())
                            coeff += a->c(p, q, k) * a->c(k, i, j);
                    row[p * n + q] = coeff;
                }
            rows.push_back(std::move(row));
            rhs.push_back(i == j ? Rational(1) : Rational(0));
        }
    auto sol = solve(Matrix::from_rows(rows, n * n), rhs);
    if (!sol) return std::nullopt;
    Matrix m(n, n);
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) m.at(p, q) = (*sol)[p * n + q];
    return m;
}

bool is_amenable(const AlgebraPtr& a) {
    if (find_identity(*a)) return has_diagonal(a).has_value();
    return has_diagonal(unitization_algebra(a)).has_value();
}

bool amenability_amalgam_check(const AmalgamResult& r) {
    bool whole = is_amenable(r.algebra);
    bool parts = is_amenable(r.a_factor) && is_amenable(r.ideal_algebra);
    return whole == parts;
}

Subspace character_kernel_intersection(const AlgebraPtr& a) {
    SpectrumReport report = characters(a);
    if (!report.complete)
        throw IncompleteSpectrum("character kernels unavailable: " +
                                 report.obstruction.value_or(""));
    Subspace acc = Subspace::full(a->dim());
    for (const auto& chi : report.characters) {
        Matrix row(1, a->dim());
        for (std::size_t k = 0; k < a->dim(); ++k) row.at(0, k) = chi.coords[k];
        acc = acc.intersection(Subspace::span(null_space_basis(row), a->dim()));
    }
    return acc;
}

}  // namespace amalgam
