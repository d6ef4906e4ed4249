#ifndef AMALGAM_BIMODULE_HPP
#define AMALGAM_BIMODULE_HPP

#include "amalgam/algebra.hpp"

namespace amalgam {

/// Bimodule over a FiniteAlgebra, presented by action tensors
/// (e_i . x_p = sum_q left[i][p][q] x_q, x_p . e_i = sum_q right[p][i][q] x_q).
/// `certified` is set by verification of the action axioms.
struct Bimodule {
    AlgebraPtr algebra;
    std::size_t dim = 0;
    std::vector<Rational> left;   // n x m x m
    std::vector<Rational> right;  // m x n x m
    bool certified = false;

    const Rational& l(std::size_t i, std::size_t p, std::size_t q) const {
        return left[(i * dim + p) * dim + q];
    }
    const Rational& r(std::size_t p, std::size_t i, std::size_t q) const {
        return right[(p * algebra->dim() + i) * dim + q];
    }

    Vec act_left(const Vec& a, const Vec& x) const;
    Vec act_right(const Vec& x, const Vec& a) const;
};

struct BimoduleCheck {
    bool ok = false;
    std::string violated;  // description of the first failed axiom
};

/// Checks (ab).x = a.(b.x), x.(ab) = (x.a).b and (a.x).b = a.(x.b) on
/// all basis triples.
BimoduleCheck verify_bimodule(const Bimodule& x);

/// Verifies and certifies; throws Error on an axiom violation.
Bimodule make_bimodule(AlgebraPtr algebra, std::size_t dim,
                       std::vector<Rational> left, std::vector<Rational> right);

Bimodule zero_bimodule(AlgebraPtr algebra);

/// A acting on itself by multiplication.
Bimodule regular_bimodule(AlgebraPtr algebra);

}  // namespace amalgam

#endif
