#ifndef AMALGAM_DUALITY_HPP
#define AMALGAM_DUALITY_HPP

#include "amalgam/bimodule.hpp"
#include "amalgam/constructions.hpp"

namespace amalgam {

/// A* as an A-bimodule: <a.f, b> = <f, ba> and <f.a, b> = <f, ab>.
Bimodule dual_bimodule(const AlgebraPtr& a);

/// a.f and f.a for a functional f on the dual basis.
Vec dual_left_action(const FiniteAlgebra& a, const Vec& x, const Vec& f);
Vec dual_right_action(const FiniteAlgebra& a, const Vec& f, const Vec& x);

/// Adjoint of m with respect to dual bases: the transpose, mapping
/// codomain functionals to domain functionals.
Matrix adjoint_matrix(const AlgebraMap& m);

/// <(a,i), Psi(f,g)> = f(a) + g(i).
Rational amalgam_dual_pairing(const AmalgamResult& r, const Vec& x, const Vec& f, const Vec& g);

/// Componentwise agreement of the amalgam's generic dual actions with
/// the closed forms
///   (f,g).(a,i) = (f.a + theta*(g.i), g.(theta(a)+i))
///   (a,i).(f,g) = (a.f + theta*(i.g), (theta(a)+i).g)
/// on all basis pairs.
bool amalgam_dual_actions_check(const AmalgamResult& r);

struct ArensProducts {
    Vec first;   // F box G
    Vec second;  // F diamond G
};

/// Both Arens products computed by the literal three-step dualization
/// (never by shortcutting through the canonical identification).
ArensProducts arens_products(const FiniteAlgebra& a, const Vec& f_elt, const Vec& g_elt);

/// The second-dual block formula
///   (F1,F2) box (G1,G2) = (F1 box G1,
///        theta**(F1) box G2 + F2 box G2 + F2 box theta**(G1))
/// (and the diamond analogue), verified on all basis pairs against the
/// amalgam's own Arens products and the transported product.
bool bidual_amalgam_check(const AmalgamResult& r);

struct TopologicalCentres {
    Subspace left;
    Subspace right;
};

/// {F : F box G = F diamond G for all G} and the right analogue. In
/// finite dimension both must be the whole space; this is re-verified
/// and an Error is thrown otherwise.
TopologicalCentres topological_centres(const AlgebraPtr& a);

/// Module-relative centres of X** over A, by the same kernel
/// computation on the Arens extensions of the module actions.
TopologicalCentres module_topological_centres(const Bimodule& x);

}  // namespace amalgam

#endif
