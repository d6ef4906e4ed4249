#ifndef AMALGAM_CHARACTER_HPP
#define AMALGAM_CHARACTER_HPP

#include "amalgam/algebra.hpp"

namespace amalgam {

/// Multiplicative linear functional, stored on the dual basis.
/// `certified` is set by verification only.
struct Character {
    AlgebraPtr algebra;
    Vec coords;
    bool nonzero = false;
    bool certified = false;

    Rational operator()(const Vec& x) const { return dot(coords, x); }
};

struct CharacterCheck {
    bool multiplicative = false;
    std::optional<std::pair<std::size_t, std::size_t>> witness;  // violating (i, j)
    bool nonzero = false;
};

CharacterCheck verify_character(const FiniteAlgebra& a, const Vec& coords);

/// Verifies multiplicativity (and nonzero-ness when required) and
/// returns the certified character; throws Error with the witness pair
/// otherwise.
Character make_character(AlgebraPtr algebra, Vec coords, bool require_nonzero = true);

}  // namespace amalgam

#endif
