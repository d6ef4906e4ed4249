#ifndef AMALGAM_COHOMOLOGY_HPP
#define AMALGAM_COHOMOLOGY_HPP

#include "amalgam/constructions.hpp"
#include "amalgam/duality.hpp"

namespace amalgam {

/// A derivation-decomposition hypothesis fails on the given input
/// (typically square-density of a factor).
class DecompositionMismatch : public Error {
public:
    using Error::Error;
};

/// Linear map algebra -> bimodule satisfying the Leibniz rule
/// D(ab) = a.D(b) + D(a).b; `certified` set by verification.
struct Derivation {
    AlgebraPtr algebra;
    Bimodule target;
    Matrix matrix;  // target.dim x algebra.dim
    bool certified = false;

    Vec apply(const Vec& x) const { return matrix.apply(x); }
};

struct DerivationCheck {
    bool ok = false;
    std::optional<std::pair<std::size_t, std::size_t>> witness;
};

DerivationCheck verify_derivation(const Derivation& d);
Derivation make_derivation(AlgebraPtr algebra, Bimodule target, Matrix matrix);

/// Z^1(A, X) as a subspace of the flattened (target.dim x algebra.dim)
/// matrix space, row-major.
Subspace derivation_space(const AlgebraPtr& a, const Bimodule& x);

/// B^1(A, X) = span{ad_v : v basis vector of X}.
Subspace inner_derivations(const AlgebraPtr& a, const Bimodule& x);

Matrix ad_matrix(const AlgebraPtr& a, const Bimodule& x, const Vec& v);

struct CohomologyReport {
    std::size_t z1_dim = 0;
    std::size_t b1_dim = 0;
    std::size_t h1_dim = 0;
    std::vector<Matrix> z1_basis;
    std::vector<Matrix> b1_basis;
};

CohomologyReport h1(const AlgebraPtr& a, const Bimodule& x);

/// H^1(A, A*) = 0.
bool is_weakly_amenable(const AlgebraPtr& a);

/// Z^1_c(B, B*): derivations into the dual with
/// <b, D(b')> + <b', D(b)> = 0, i.e. antisymmetric matrices inside Z^1.
Subspace cyclic_derivations(const AlgebraPtr& b);

/// Z^1_c(B, B*) contained in B^1(B, B*).
bool is_cyclically_amenable(const AlgebraPtr& b);

/// dim Z^1_c - dim(Z^1_c n B^1): the first cyclic cohomology dimension.
std::size_t h1c_dim(const AlgebraPtr& b);

struct LiftResult {
    Derivation lifted;        // D~(a,i) = (D(a), 0), certified
    bool original_inner = false;
    bool lifted_inner = false;
    bool inner_agrees = false;
};

/// Lift of a derivation A -> A* to the amalgam's dual.
LiftResult lift_derivation(const AmalgamResult& r, const Derivation& d);

struct IdDecomposition {
    Derivation d1;  // on A into A*
    Derivation d2;
    bool inner_agrees = false;  // d inner <=> d1 and d2 inner
};

/// D(a,b) = (D1(a)+D2(b), D2(a)+D2(b)) for derivations on A bowtie^id A.
/// Throws DecompositionMismatch when the block identities fail (e.g.
/// A^2 != A) and HypothesisViolation when A is not square dense.
IdDecomposition decompose_derivation_id_amalgam(const AmalgamResult& r, const Derivation& d);

struct LauDecomposition {
    Derivation d1;   // on A into A*
    Matrix d2;       // B -> A* block
    Derivation d4;   // on B into B*
    bool inner_agrees = false;  // d inner <=> d1 inner, d2 = 0, d4 inner
};

/// D(a,b) = (D1(a)+D2(b), D4(b)) with the two compatibility conditions
/// on D2, for derivations on a Lau product with B square dense.
LauDecomposition decompose_derivation_lau(const AmalgamResult& r, const Derivation& d);

/// dim H^1(A bowtie^id A, dual) = 2 dim H^1(A, A*); requires A square
/// dense (HypothesisViolation otherwise).
bool theorem_h1_doubling_check(const AlgebraPtr& a);

/// dim H^1(A +_phi B) >= dim H^1(A) + dim H^1_c(B), with the block
/// embedding verified injective modulo inner derivations.
bool theorem_embedding_lau_check(const AlgebraPtr& a, const AlgebraPtr& b,
                                 const Character& phi);

struct WeakAmenabilityChecks {
    bool amalgam_wa = false;
    bool a_wa = false;
    bool i_wa = false;
    std::optional<bool> commutative_iff;  // set only when the amalgam is commutative
    bool sufficiency = false;             // (a and i wa) => amalgam wa
    std::optional<bool> id_iff;           // set only for A bowtie^id A
    bool necessity = false;               // amalgam wa => a wa

    bool all_applicable_pass() const {
        return sufficiency && necessity && commutative_iff.value_or(true) &&
               id_iff.value_or(true);
    }
};

/// All weak-amenability implications applicable to r, each decided by
/// direct solver runs on A, I and the amalgam.
WeakAmenabilityChecks weak_amenability_amalgam_checks(const AmalgamResult& r);

}  // namespace amalgam

#endif
