#include "amalgam/verify.hpp"

#include "amalgam/cohomology.hpp"
#include "amalgam/duality.hpp"
#include "amalgam/structure.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace amalgam {

namespace {

Vec basis_vec(std::size_t len, std::size_t idx) {
    Vec v(len);
    v[idx] = 1;
    return v;
}

std::string coords_str(const Vec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v[i].str();
    }
    return s + ")";
}

struct CheckOutcome {
    bool ok = false;
    std::string details;
};

// ---- section 1 / section 2 -------------------------------------------------

CheckOutcome check_prod_formula(const AmalgamResult& r) {
    const auto& b = *r.ambient;
    const Subspace& is = r.ideal_in_ambient.subspace;
    const std::size_t total = r.algebra->dim();
    auto embed_ideal = [&](const Vec& coords) {
        Vec v(b.dim());
        for (std::size_t q = 0; q < coords.size(); ++q)
            v = v + coords[q] * is.basis_vector(q);
        return v;
    };
    for (std::size_t u = 0; u < total; ++u)
        for (std::size_t w = 0; w < total; ++w) {
            auto [a1, i1] = r.split(basis_vec(total, u));
            auto [a2, i2] = r.split(basis_vec(total, w));
            Vec aa = r.a_factor->multiply(a1, a2);
            Vec mixed = b.multiply(r.theta.apply(a1), embed_ideal(i2)) +
                        b.multiply(embed_ideal(i1), r.theta.apply(a2)) +
                        b.multiply(embed_ideal(i1), embed_ideal(i2));
            auto coords = is.coordinates_of(mixed);
            if (!coords) return {false, "mixed product escaped the ideal"};
            if (r.algebra->basis_product(u, w) != r.join(aa, *coords))
                return {false, "table mismatch at basis pair (" + std::to_string(u) + ", " +
                                   std::to_string(w) + ")"};
        }
    return {true, ""};
}

CheckOutcome check_prop_basic_i(const AmalgamResult& r) {
    if (!r.embed_A.multiplicative || rank(r.embed_A.matrix) != r.dim_a())
        return {false, "A does not embed as a subalgebra"};
    if (!r.ideal_I_in_result.two_sided) return {false, "I is not an ideal in the amalgam"};
    QuotientByIdeal q = quotient_by_I(r);
    if (q.algebra->table() != r.a_factor->table())
        return {false, "quotient table differs from A"};
    if (!q.onto_a.multiplicative || rank(q.onto_a.matrix) != r.dim_a())
        return {false, "quotient map is not a certified isomorphism"};
    return {true, ""};
}

CheckOutcome check_prop_basic_ii(const AmalgamResult& r) {
    bool ok = verify_commutativity_characterization(r);
    return {ok, ok ? "" : "commutativity characterization disagrees with brute force"};
}

CheckOutcome check_prop_basic_iii(const AmalgamResult& r) {
    bool ok = verify_identity_characterization(r);
    return {ok, ok ? "" : "identity characterization disagrees with brute force"};
}

CheckOutcome check_prop_basic_vi(const AmalgamResult& r) {
    bool ok = amenability_amalgam_check(r);
    return {ok, ok ? "" : "diagonal feasibility disagrees between the amalgam and its factors"};
}

// ---- section 3 / section 4 -------------------------------------------------

CheckOutcome check_dual_pairing(const AmalgamResult& r) {
    const std::size_t n = r.dim_a(), m = r.dim_i(), total = n + m;
    // pairing formula on all basis pairs
    for (std::size_t u = 0; u < total; ++u)
        for (std::size_t w = 0; w < total; ++w) {
            Vec x = basis_vec(total, u);
            auto [f, g] = r.split(basis_vec(total, w));
            Rational direct = dot(basis_vec(total, w), x);
            if (amalgam_dual_pairing(r, x, f, g) != direct)
                return {false, "pairing differs at basis pair (" + std::to_string(u) + ", " +
                                   std::to_string(w) + ")"};
        }
    // dual norm is the max of the component dual norms
    std::vector<Vec> samples;
    for (std::size_t w = 0; w < total; ++w) samples.push_back(basis_vec(total, w));
    Vec dense(total);
    for (std::size_t k = 0; k < total; ++k)
        dense[k] = Rational(static_cast<long>(k) + 1) * (k % 2 ? Rational(-1) : Rational(1));
    samples.push_back(dense);
    for (std::size_t w = 0; w + 1 < total; ++w)
        samples.push_back(basis_vec(total, w) - basis_vec(total, w + 1));
    for (const auto& fg : samples) {
        auto [f, g] = r.split(fg);
        Rational whole = r.algebra->dual_norm(fg);
        Rational parts = max(r.a_factor->dual_norm(f), r.ideal_algebra->dual_norm(g));
        if (whole != parts)
            return {false, "dual norm of " + coords_str(fg) + " is " + whole.str() +
                               ", components give " + parts.str()};
    }
    return {true, ""};
}

CheckOutcome check_dual_actions(const AmalgamResult& r) {
    bool ok = amalgam_dual_actions_check(r);
    return {ok, ok ? "" : "closed-form dual actions differ from the generic computation"};
}

CheckOutcome check_bidual_amalgam(const AmalgamResult& r) {
    bool ok = bidual_amalgam_check(r);
    return {ok, ok ? "" : "second-dual block formula fails"};
}

CheckOutcome check_topological_centre_algebra(const AlgebraPtr& a) {
    TopologicalCentres c = topological_centres(a);
    if (!c.left.is_full() || !c.right.is_full())
        return {false, "topological centre is a proper subspace"};
    TopologicalCentres mc = module_topological_centres(dual_bimodule(a));
    if (!mc.left.is_full() || !mc.right.is_full())
        return {false, "module-relative centre on the dual is a proper subspace"};
    return {true, ""};
}

CheckOutcome check_topological_centre(const AmalgamResult& r) {
    // degenerate finite-dimensional statement: every centre is everything,
    // for the amalgam and for both factors
    for (const AlgebraPtr& a : {r.algebra, r.a_factor, r.ideal_algebra}) {
        CheckOutcome out = check_topological_centre_algebra(a);
        if (!out.ok) return out;
    }
    return {true, ""};
}

// ---- section 5 -------------------------------------------------------------

CheckOutcome check_characters_euf(const AmalgamResult& r) {
    SpectrumReport formula = amalgam_characters(r);
    SpectrumReport brute = characters(r.algebra);
    if (!brute.complete)
        throw IncompleteSpectrum("sigma(A bowtie I) is not exactly enumerable over Q: " +
                                 brute.obstruction.value_or(""));
    if (formula.characters.size() != brute.characters.size())
        return {false, "E u F has " + std::to_string(formula.characters.size()) +
                           " characters, brute force found " +
                           std::to_string(brute.characters.size())};
    for (const auto& chi : formula.characters)
        if (!brute.contains(chi.coords))
            return {false, "E u F character " + coords_str(chi.coords) +
                               " is not an actual character"};
    for (const auto& chi : brute.characters)
        if (!formula.contains(chi.coords))
            return {false, "character " + coords_str(chi.coords) + " is missing from E u F"};
    return {true, ""};
}

CheckOutcome check_lau_characters(const AmalgamResult& r) {
    if (r.kind != ConstructionKind::Lau || !r.lau_phi)
        throw HypothesisViolation("instance is a Lau product");
    SpectrumReport sigma_a = characters(r.a_factor);
    SpectrumReport sigma_b = characters(r.ideal_algebra);
    if (!sigma_a.complete || !sigma_b.complete)
        throw IncompleteSpectrum("sigma(A) or sigma(B) is not exactly enumerable over Q");
    if (sigma_a.characters.empty()) throw HypothesisViolation("sigma(A) is nonempty");

    SpectrumReport brute = characters(r.algebra);
    if (!brute.complete)
        throw IncompleteSpectrum("sigma(A +_phi B) is not exactly enumerable over Q");

    std::vector<Vec> expected;
    for (const auto& phi : sigma_a.characters)
        expected.push_back(r.join(phi.coords, Vec(r.dim_i())));
    for (const auto& psi : sigma_b.characters)
        expected.push_back(r.join(r.lau_phi->coords, psi.coords));
    std::sort(expected.begin(), expected.end());
    expected.erase(std::unique(expected.begin(), expected.end()), expected.end());

    if (expected.size() != brute.characters.size())
        return {false, "expected " + std::to_string(expected.size()) + " characters, found " +
                           std::to_string(brute.characters.size())};
    for (const auto& coords : expected)
        if (!brute.contains(coords))
            return {false, "predicted character " + coords_str(coords) + " is not a character"};
    return {true, ""};
}

CheckOutcome check_radical_decomp(const AmalgamResult& r) {
    bool ok = radical_decomposition_check(r);
    return {ok, ok ? "" : "rad(A bowtie I) differs from rad A (+) rad I"};
}

CheckOutcome check_semisimple_iff(const AmalgamResult& r) {
    // same hypotheses as the radical decomposition
    if (!is_commutative(*r.algebra).commutative)
        throw HypothesisViolation("A bowtie I is commutative");
    SpectrumReport sigma_a = characters(r.a_factor);
    if (!sigma_a.complete)
        throw IncompleteSpectrum("sigma(A) is not exactly enumerable over Q");
    if (sigma_a.characters.empty()) throw HypothesisViolation("sigma(A) is nonempty");
    {
        std::vector<Vec> products;
        const Subspace& is = r.ideal_in_ambient.subspace;
        for (std::size_t ai = 0; ai < r.dim_a(); ++ai)
            for (std::size_t q = 0; q < is.dim(); ++q)
                products.push_back(
                    r.ambient->multiply(r.theta.apply_basis(ai), is.basis_vector(q)));
        if (Subspace::span_of(products, r.ambient->dim()) != is)
            throw HypothesisViolation("span(theta(A)I) = I");
    }
    bool whole = is_semisimple(r.algebra);
    bool parts = is_semisimple(r.a_factor) && is_semisimple(r.ideal_algebra);
    return {whole == parts, whole == parts ? "" : "semisimplicity differs between sides"};
}

// ---- section 6 -------------------------------------------------------------

CheckOutcome check_wa_commutative_iff(const AmalgamResult& r) {
    if (!is_commutative(*r.algebra).commutative)
        throw HypothesisViolation("A bowtie I is commutative");
    WeakAmenabilityChecks chk = weak_amenability_amalgam_checks(r);
    bool ok = chk.commutative_iff.value_or(false);
    std::ostringstream details;
    details << "amalgam " << (chk.amalgam_wa ? "wa" : "not wa") << ", A "
            << (chk.a_wa ? "wa" : "not wa") << ", I " << (chk.i_wa ? "wa" : "not wa");
    return {ok, details.str()};
}

CheckOutcome check_wa_sufficient(const AmalgamResult& r) {
    WeakAmenabilityChecks chk = weak_amenability_amalgam_checks(r);
    if (!(chk.a_wa && chk.i_wa))
        throw HypothesisViolation("A and I are weakly amenable");
    return {chk.amalgam_wa, chk.amalgam_wa ? "" : "amalgam fails weak amenability"};
}

CheckOutcome check_wa_lift(const AmalgamResult& r) {
    Bimodule dual_a = dual_bimodule(r.a_factor);
    Subspace z1 = derivation_space(r.a_factor, dual_a);
    const std::size_t n = r.dim_a();
    std::vector<Vec> lifted_flat;
    for (std::size_t i = 0; i < z1.dim(); ++i) {
        Matrix d(n, n);
        for (std::size_t row = 0; row < n; ++row)
            for (std::size_t col = 0; col < n; ++col)
                d.at(row, col) = z1.basis_vector(i)[row * n + col];
        LiftResult lift = lift_derivation(r, make_derivation(r.a_factor, dual_a, d));
        if (!lift.inner_agrees)
            return {false, "lift changes innerness for derivation basis element " +
                               std::to_string(i)};
        lifted_flat.push_back(lift.lifted.matrix.flatten());
    }
    // the induced map on cohomology is injective
    const std::size_t total = r.algebra->dim();
    Subspace b1_amalgam = inner_derivations(r.algebra, dual_bimodule(r.algebra));
    Subspace lifted = Subspace::span_of(lifted_flat, total * total);
    std::size_t image_dim = lifted.sum(b1_amalgam).dim() - b1_amalgam.dim();
    std::size_t h1_a = h1(r.a_factor, dual_a).h1_dim;
    if (image_dim != h1_a)
        return {false, "lifted classes span dimension " + std::to_string(image_dim) +
                           ", expected " + std::to_string(h1_a)};
    return {true, ""};
}

CheckOutcome check_h1_doubling(const AlgebraPtr& a) {
    bool ok = theorem_h1_doubling_check(a);
    return {ok, ok ? "" : "dim H1(A bowtie^id A) != 2 dim H1(A)"};
}

CheckOutcome check_wa_id_iff(const AmalgamResult& r) {
    if (!is_identity_amalgam(r)) throw HypothesisViolation("instance is A bowtie^id A");
    WeakAmenabilityChecks chk = weak_amenability_amalgam_checks(r);
    bool ok = chk.id_iff.value_or(false);
    return {ok, ok ? "" : "weak amenability of A bowtie^id A differs from that of A"};
}

CheckOutcome check_lau_embedding(const AmalgamResult& r) {
    if (r.kind != ConstructionKind::Lau || !r.lau_phi)
        throw HypothesisViolation("instance is a Lau product");
    bool ok = theorem_embedding_lau_check(r.a_factor, r.ideal_algebra, *r.lau_phi);
    return {ok, ok ? "" : "H1(A) (+) H1_c(B) does not embed into H1(A +_phi B)"};
}

CheckOutcome check_lau_corollary(const AmalgamResult& r) {
    if (r.kind != ConstructionKind::Lau)
        throw HypothesisViolation("instance is a Lau product");
    if (!is_weakly_amenable(r.algebra))
        throw HypothesisViolation("A +_phi B is weakly amenable");
    bool a_wa = is_weakly_amenable(r.a_factor);
    bool b_ca = is_cyclically_amenable(r.ideal_algebra);
    return {a_wa && b_ca,
            a_wa ? (b_ca ? "" : "B is not cyclically amenable") : "A is not weakly amenable"};
}

using AmalgamCheck = std::function<CheckOutcome(const AmalgamResult&)>;
using AlgebraCheck = std::function<CheckOutcome(const AlgebraPtr&)>;

const std::map<std::string, AmalgamCheck>& amalgam_checks() {
    static const std::map<std::string, AmalgamCheck> table = {
        {"prod-formula", check_prod_formula},
        {"prop-basic-i", check_prop_basic_i},
        {"prop-basic-ii", check_prop_basic_ii},
        {"prop-basic-iii", check_prop_basic_iii},
        {"prop-basic-vi", check_prop_basic_vi},
        {"dual-pairing", check_dual_pairing},
        {"dual-actions", check_dual_actions},
        {"bidual-amalgam", check_bidual_amalgam},
        {"topological-centre", check_topological_centre},
        {"characters-EuF", check_characters_euf},
        {"lau-characters", check_lau_characters},
        {"radical-decomp", check_radical_decomp},
        {"semisimple-iff", check_semisimple_iff},
        {"wa-commutative-iff", check_wa_commutative_iff},
        {"wa-sufficient", check_wa_sufficient},
        {"wa-lift", check_wa_lift},
        {"wa-id-iff", check_wa_id_iff},
        {"lau-embedding", check_lau_embedding},
        {"lau-corollary", check_lau_corollary},
    };
    return table;
}

const std::map<std::string, AlgebraCheck>& algebra_checks() {
    static const std::map<std::string, AlgebraCheck> table = {
        {"h1-doubling", check_h1_doubling},
        {"topological-centre", check_topological_centre_algebra},
    };
    return table;
}

VerificationReport fold_outcome(const std::string& id, const std::string& instance,
                                const std::function<CheckOutcome()>& run) {
    VerificationReport rep{id, instance, CheckStatus::InputError, ""};
    try {
        CheckOutcome out = run();
        rep.status = out.ok ? CheckStatus::Pass : CheckStatus::Fail;
        rep.details = out.details;
    } catch (const HypothesisViolation& e) {
        rep.status = CheckStatus::HypothesisNotMet;
        rep.details = e.hypothesis;
    } catch (const IncompleteSpectrum& e) {
        rep.status = CheckStatus::HypothesisNotMet;
        rep.details = e.what();
    } catch (const ChoiceDependence& e) {
        rep.status = CheckStatus::Fail;
        rep.details = e.what();
    } catch (const Error& e) {
        rep.status = CheckStatus::InputError;
        rep.details = e.what();
    }
    return rep;
}

}  // namespace

const char* status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::HypothesisNotMet: return "hypothesis-not-met";
        case CheckStatus::InputError: return "input-error";
    }
    return "unknown";
}

const std::vector<TheoremInfo>& theorem_catalog() {
    static const std::vector<TheoremInfo> catalog = {
        {"prod-formula", false, "amalgam table realizes (aa', theta(a)i' + i theta(a') + ii')"},
        {"prop-basic-i", false, "A embeds, I is an ideal, and (A bowtie I)/I = A"},
        {"prop-basic-ii", false, "commutative iff A and theta(A)+I are"},
        {"prop-basic-iii", false, "identity characterization"},
        {"prop-basic-vi", false, "amenable iff A and I are"},
        {"dual-pairing", false, "dual pairing f(a)+g(i) and the max dual norm"},
        {"dual-actions", false, "closed forms of the dual module actions"},
        {"bidual-amalgam", false, "second dual is the amalgam of the second duals"},
        {"topological-centre", true, "topological centres are everything (finite dimension)"},
        {"characters-EuF", false, "character space is E u F"},
        {"lau-characters", false, "Lau product characters (sigma(A) x 0) u (phi x sigma(B))"},
        {"radical-decomp", false, "rad(A bowtie I) = rad A (+) rad I"},
        {"semisimple-iff", false, "semisimple iff A and I are"},
        {"wa-commutative-iff", false, "commutative amalgam weakly amenable iff A and I are"},
        {"wa-sufficient", false, "A, I weakly amenable implies the amalgam is"},
        {"wa-lift", false, "H1(A, A*) embeds into H1 of the amalgam"},
        {"h1-doubling", true, "dim H1(A bowtie^id A) = 2 dim H1(A)"},
        {"wa-id-iff", false, "A bowtie^id A weakly amenable iff A is"},
        {"lau-embedding", false, "H1(A) (+) H1_c(B) embeds into H1(A +_phi B)"},
        {"lau-corollary", false, "Lau product weakly amenable implies A wa, B cyclically"},
    };
    return catalog;
}

bool theorem_takes_algebra(const std::string& id) {
    for (const auto& info : theorem_catalog())
        if (info.id == id) return info.takes_algebra;
    throw UnknownTheoremId(id);
}

VerificationReport run_theorem(const std::string& id, const std::string& instance_name,
                               const AmalgamResult& r) {
    auto it = amalgam_checks().find(id);
    if (it == amalgam_checks().end()) throw UnknownTheoremId(id);
    return fold_outcome(id, instance_name, [&] { return it->second(r); });
}

VerificationReport run_theorem(const std::string& id, const std::string& instance_name,
                               const AlgebraPtr& a) {
    auto it = algebra_checks().find(id);
    if (it == algebra_checks().end()) {
        if (amalgam_checks().count(id))
            throw Error("theorem '" + id + "' expects an amalgam instance");
        throw UnknownTheoremId(id);
    }
    return fold_outcome(id, instance_name, [&] { return it->second(a); });
}

int CorpusRunSummary::exit_code() const {
    if (input_errors) return 2;
    if (failed) return 1;
    return 0;
}

CorpusRunSummary corpus_run(const std::vector<corpus::Entry>& entries,
                            const std::vector<corpus::AmalgamEntry>& amalgams) {
    CorpusRunSummary summary;
    for (const auto& entry : entries)
        for (const auto& [id, check] : algebra_checks())
            summary.reports.push_back(
                fold_outcome(id, entry.name, [&] { return check(entry.algebra); }));
    for (const auto& [name, r] : amalgams)
        for (const auto& [id, check] : amalgam_checks())
            summary.reports.push_back(fold_outcome(id, name, [&] { return check(r); }));

    std::sort(summary.reports.begin(), summary.reports.end(),
              [](const VerificationReport& x, const VerificationReport& y) {
                  return std::tie(x.theorem_id, x.instance) < std::tie(y.theorem_id, y.instance);
              });
    for (const auto& rep : summary.reports) switch (rep.status) {
            case CheckStatus::Pass: ++summary.passed; break;
            case CheckStatus::Fail: ++summary.failed; break;
            case CheckStatus::HypothesisNotMet: ++summary.hypothesis_not_met; break;
            case CheckStatus::InputError: ++summary.input_errors; break;
        }
    return summary;
}

}  // namespace amalgam
