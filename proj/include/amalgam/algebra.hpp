#ifndef AMALGAM_ALGEBRA_HPP
#define AMALGAM_ALGEBRA_HPP

#include "amalgam/subspace.hpp"

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace amalgam {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Construction found (e_i e_j) e_k != e_i (e_j e_k).
class AssociativityViolation : public Error {
public:
    AssociativityViolation(std::size_t i, std::size_t j, std::size_t k);
    std::size_t i, j, k;
};

class DuplicateLabel : public Error {
public:
    explicit DuplicateLabel(const std::string& label);
};

class NonpositiveWeight : public Error {
public:
    explicit NonpositiveWeight(std::size_t index);
};

class AlgebraMismatch : public Error {
public:
    using Error::Error;
};

class UncertifiedMap : public Error {
public:
    using Error::Error;
};

class UncertifiedIdeal : public Error {
public:
    using Error::Error;
};

/// A theorem's stated hypothesis fails on the given instance.
class HypothesisViolation : public Error {
public:
    explicit HypothesisViolation(const std::string& which)
        : Error("hypothesis not met: " + which), hypothesis(which) {}
    std::string hypothesis;
};

class FiniteAlgebra;
using AlgebraPtr = std::shared_ptr<const FiniteAlgebra>;

/// Finite-dimensional associative algebra over Q presented by structure
/// constants c[i][j][k] (e_i e_j = sum_k c[i][j][k] e_k), with a weighted
/// l1 norm given by strictly positive basis weights.
class FiniteAlgebra {
public:
    /// Verifies associativity, label distinctness and weight positivity;
    /// throws AssociativityViolation / DuplicateLabel / NonpositiveWeight.
    /// Empty labels default to e0..e{n-1}; empty weights default to 1.
    static AlgebraPtr make(std::size_t dim,
                           std::vector<std::string> labels,
                           std::vector<Rational> table,
                           std::vector<Rational> weights = {});

    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(std::size_t i) const { return labels_[i]; }
    const std::vector<Rational>& table() const { return table_; }
    const Rational& c(std::size_t i, std::size_t j, std::size_t k) const {
        return table_[(i * dim_ + j) * dim_ + k];
    }
    const std::vector<Rational>& weights() const { return weights_; }
    const Rational& weight(std::size_t k) const { return weights_[k]; }

    /// Coordinates of (e_i e_j).
    Vec basis_product(std::size_t i, std::size_t j) const;
    /// Bilinear extension of the table.
    Vec multiply(const Vec& x, const Vec& y) const;
    Matrix left_mult_matrix(const Vec& x) const;
    Matrix right_mult_matrix(const Vec& x) const;

    /// Weighted l1 norm sum_k w_k |x_k|.
    Rational norm(const Vec& x) const;
    /// Dual (weighted l-infinity) norm max_k |f_k| / w_k.
    Rational dual_norm(const Vec& f) const;

private:
    FiniteAlgebra() = default;
    std::size_t dim_ = 0;
    std::vector<std::string> labels_;
    std::vector<Rational> table_;
    std::vector<Rational> weights_;
};

struct AlgebraElement {
    AlgebraPtr algebra;
    Vec coords;
};

AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement operator+(const AlgebraElement& x, const AlgebraElement& y);

/// Linear map between algebras; `multiplicative` is set by verification
/// only (see verify_homomorphism / make_homomorphism).
struct AlgebraMap {
    AlgebraPtr domain;
    AlgebraPtr codomain;
    Matrix matrix;  // codomain.dim x domain.dim
    bool multiplicative = false;

    Vec apply(const Vec& x) const { return matrix.apply(x); }
    Vec apply_basis(std::size_t j) const { return matrix.col(j); }
};

struct HomomorphismCheck {
    bool multiplicative = false;
    std::optional<std::pair<std::size_t, std::size_t>> witness;  // violating (i, j)
};

HomomorphismCheck verify_homomorphism(const AlgebraMap& m);

/// Verifies multiplicativity and returns the map with the flag set;
/// throws UncertifiedMap (with the witness pair) otherwise.
AlgebraMap make_homomorphism(AlgebraPtr domain, AlgebraPtr codomain, Matrix matrix);

AlgebraMap identity_map(const AlgebraPtr& a);
AlgebraMap zero_map(AlgebraPtr domain, AlgebraPtr codomain);

/// Exact operator norm with respect to the weighted l1 norms:
/// max_j ||m(e_j)||_codomain / w_j.
Rational operator_norm_bound(const AlgebraMap& m);

/// Subspace of an algebra; `two_sided` set by verification only.
struct IdealEmbedding {
    AlgebraPtr ambient;
    Subspace subspace;
    bool two_sided = false;
};

struct IdealCheck {
    bool two_sided = false;
    /// Violation witness: (ambient basis index, ideal basis index, from_left).
    struct Witness {
        std::size_t ambient_index;
        std::size_t ideal_index;
        bool from_left;
    };
    std::optional<Witness> witness;
};

IdealCheck verify_ideal(const IdealEmbedding& i);

/// Verifies the two-sided property and returns the embedding with the
/// flag set; throws UncertifiedIdeal otherwise.
IdealEmbedding make_ideal(AlgebraPtr ambient, Subspace subspace);

IdealEmbedding full_ideal(const AlgebraPtr& a);

/// Unique two-sided identity, or nullopt. For dim 0 the zero element is
/// returned (the zero algebra is unital by convention).
std::optional<Vec> find_identity(const FiniteAlgebra& a);

struct CommutativityCheck {
    bool commutative = false;
    std::optional<std::pair<std::size_t, std::size_t>> witness;
};

CommutativityCheck is_commutative(const FiniteAlgebra& a);

/// True iff span{e_i e_j} is the whole space (the finite-dimensional
/// reading of "A^2 dense in A").
bool is_square_dense(const FiniteAlgebra& a);

/// Span of all basis products, as a subspace.
Subspace square_span(const FiniteAlgebra& a);

/// {j in I : j theta(a) = theta(a) j = 0 for all a}, as a subspace of
/// the ambient algebra of `ideal`. Requires certified inputs.
Subspace annihilator_in_ideal(const AlgebraMap& theta, const IdealEmbedding& ideal);

/// max over basis pairs of ||e_i e_j|| / (w_i w_j); <= 1 means the
/// weighted l1 norm is submultiplicative on basis products.
Rational check_submultiplicative(const FiniteAlgebra& a);

/// Quotient of `a` by a two-sided ideal subspace. Coset representatives
/// are the standard basis vectors at non-pivot coordinates of the ideal
/// basis, so the quotient table is canonical.
struct QuotientResult {
    AlgebraPtr algebra;
    Matrix projection;  // quotient.dim x a.dim
    Matrix section;     // a.dim x quotient.dim, projection*section = id
};

QuotientResult quotient_algebra(const AlgebraPtr& a, const Subspace& ideal);

/// Multiplication restricted to a multiplicatively closed subspace,
/// re-based on the echelon basis. Weights are the ambient norms of the
/// echelon basis vectors. Throws when the subspace is not closed.
struct SubalgebraResult {
    AlgebraPtr algebra;
    Matrix inclusion;  // ambient.dim x sub.dim
};

SubalgebraResult subspace_as_algebra(const AlgebraPtr& ambient, const Subspace& s,
                                     const std::string& label_prefix = "");

}  // namespace amalgam

#endif
