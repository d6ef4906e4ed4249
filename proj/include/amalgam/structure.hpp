#ifndef AMALGAM_STRUCTURE_HPP
#define AMALGAM_STRUCTURE_HPP

#include "amalgam/character.hpp"
#include "amalgam/constructions.hpp"

namespace amalgam {

/// The spectrum could not be enumerated exactly over Q.
class IncompleteSpectrum : public Error {
public:
    using Error::Error;
};

/// A character of E depends on the choice of the normalizing ideal
/// element (see amalgam_characters).
class ChoiceDependence : public Error {
public:
    using Error::Error;
};

/// Jacobson radical via the characteristic-zero trace form on the
/// unitization. The result is re-verified to be a nilpotent two-sided
/// ideal with semisimple quotient.
Subspace radical(const AlgebraPtr& a);

bool is_semisimple(const AlgebraPtr& a);

struct SpectrumReport {
    std::vector<Character> characters;  // sorted by coordinates
    bool complete = false;
    std::optional<std::string> obstruction;

    bool contains(const Vec& coords) const;
};

/// All rational-valued characters, via the commutative semisimple
/// quotient split by rational eigenvalues of multiplication operators.
/// complete == false (with the obstruction naming an irreducible factor)
/// when a factor does not split over Q.
SpectrumReport characters(const AlgebraPtr& a);

/// sigma(A bowtie I) = E u F of the character-space theorem:
/// F = {(phi, 0)}, E = {((i.psi) o theta, psi) : psi(i) = 1}.
/// Throws HypothesisViolation / IncompleteSpectrum / ChoiceDependence.
SpectrumReport amalgam_characters(const AmalgamResult& r);

/// rad(A bowtie I) = embed(rad A) (+) embed(rad I) for commutative
/// amalgams with nonempty sigma(A) and span(theta(A) I) = I.
bool radical_decomposition_check(const AmalgamResult& r);

/// Solves for a diagonal M in a (x) a: x.M = M.x and product(M).x = x.
/// Requires a unital algebra. M is returned as the n x n coefficient
/// matrix of sum M_pq e_p (x) e_q.
std::optional<Matrix> has_diagonal(const AlgebraPtr& a);

/// Diagonal-based amenability; non-unital algebras are decided on the
/// unitization.
bool is_amenable(const AlgebraPtr& a);

/// Amalgam amenable iff A and I amenable; returns agreement.
bool amenability_amalgam_check(const AmalgamResult& r);

/// For commutative algebras with a complete spectrum: the intersection
/// of character kernels (the definitional radical), as a cross-check of
/// the trace-form route.
Subspace character_kernel_intersection(const AlgebraPtr& a);

}  // namespace amalgam

#endif
