#ifndef AMALGAM_CONSTRUCTIONS_HPP
#define AMALGAM_CONSTRUCTIONS_HPP

#include "amalgam/bimodule.hpp"
#include "amalgam/character.hpp"

namespace amalgam {

enum class ConstructionKind {
    Amalgam,
    Cartesian,
    Unitize,
    ModuleExtension,
    Lau,
    Semidirect,
};

/// The amalgamation of A with B along the ideal I with respect to theta:
/// the l1-direct sum A (+) I with product
/// (a,i)(a',i') = (aa', theta(a)i' + i theta(a') + ii').
/// Basis: A's basis (labels "A:...") followed by the echelon basis of I
/// (labels "I:...").
struct AmalgamResult {
    AlgebraPtr algebra;
    AlgebraPtr a_factor;       // A
    AlgebraPtr ambient;        // B
    AlgebraPtr ideal_algebra;  // I with the multiplication restricted from B
    AlgebraMap theta;          // A -> B, certified
    IdealEmbedding ideal_in_ambient;  // I inside B, certified
    AlgebraMap embed_A;        // A -> result, certified
    AlgebraMap embed_I;        // ideal_algebra -> result, certified
    AlgebraMap project_A;      // result -> A (quotient by I), certified
    IdealEmbedding ideal_I_in_result;
    bool theta_norm_warning = false;  // ||theta|| > 1 (construction proceeds)
    ConstructionKind kind = ConstructionKind::Amalgam;
    std::optional<Character> lau_phi;  // set when kind == Lau

    std::size_t dim_a() const { return a_factor->dim(); }
    std::size_t dim_i() const { return ideal_algebra->dim(); }
    /// Splits coordinates of an element of the result into (A part, I part).
    std::pair<Vec, Vec> split(const Vec& x) const;
    Vec join(const Vec& a_part, const Vec& i_part) const;
};

AmalgamResult amalgamate(const AlgebraPtr& a, const AlgebraPtr& b,
                         const AlgebraMap& theta, const IdealEmbedding& ideal);

/// theta = 0: the cartesian product of A and I = B.
AmalgamResult cartesian_product(const AlgebraPtr& a, const AlgebraPtr& b);

/// Plain unitization A# as an algebra (unit adjoined at index 0).
AlgebraPtr unitization_algebra(const AlgebraPtr& a);

/// A# realized as the amalgamation of Q with A# along A.
AmalgamResult unitize(const AlgebraPtr& a);

/// Module extension A (+) X with X^2 = 0, realized as an amalgamation.
AmalgamResult module_extension(const AlgebraPtr& a, const Bimodule& x);

/// phi-Lau product A (+)_phi B: the amalgamation of A with B# along B
/// via a -> (phi(a), 0).
AmalgamResult lau_product(const AlgebraPtr& a, const AlgebraPtr& b, const Character& phi);

/// Semidirect product: amalgamation of a subalgebra along an ideal via
/// the inclusion map. Throws when a_sub is not multiplicatively closed.
AmalgamResult semidirect_product(const AlgebraPtr& b, const Subspace& a_sub,
                                 const IdealEmbedding& ideal);

/// A (bowtie)^id A: the identity amalgamation of A with itself along A.
AmalgamResult identity_amalgam(const AlgebraPtr& a);

/// True when r was built as (or is structurally) A (bowtie)^id A.
bool is_identity_amalgam(const AmalgamResult& r);

/// Agreement of brute-force find_identity with the characterization
/// {a = 1_A, i idempotent, i in Ann_I(theta(A)), theta(a)+i the identity
/// of theta(A)+I}.
bool verify_identity_characterization(const AmalgamResult& r);

/// Agreement of brute-force is_commutative with "A and theta(A)+I are
/// commutative".
bool verify_commutativity_characterization(const AmalgamResult& r);

/// Subspace theta(A)+I of the ambient algebra.
Subspace theta_image_plus_ideal(const AmalgamResult& r);

struct QuotientByIdeal {
    AlgebraPtr algebra;
    AlgebraMap onto_a;  // certified bijective homomorphism quotient -> A
};

/// Quotient of the amalgam by its canonical ideal I, with the
/// isomorphism onto A.
QuotientByIdeal quotient_by_I(const AmalgamResult& r);

}  // namespace amalgam

#endif
