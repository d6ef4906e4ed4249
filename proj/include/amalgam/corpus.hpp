#ifndef AMALGAM_CORPUS_HPP
#define AMALGAM_CORPUS_HPP

#include "amalgam/constructions.hpp"

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

namespace amalgam::corpus {

// Base algebras. Weights are chosen so that every entry satisfies
// check_submultiplicative <= 1 (Banach-algebra models).

AlgebraPtr zero();               // dim 0
AlgebraPtr rationals();          // Q, u^2 = u
AlgebraPtr zero_product_1d();    // dim 1, z^2 = 0
AlgebraPtr dual_numbers();       // {1, eps}, eps^2 = 0
AlgebraPtr q_times_q();          // Q x Q coordinatewise
AlgebraPtr adjoin_sqrt2();       // Q[x]/(x^2 - 2), weight 2 on x
AlgebraPtr upper_triangular_2(); // T2 = span{e11, e22, e12}
AlgebraPtr full_matrix_2();      // M2(Q) = span{e11, e12, e21, e22}

struct Entry {
    std::string name;
    AlgebraPtr algebra;
    std::vector<std::string> tags;
};

/// The shipped base corpus. Tags are re-verified by verify_corpus_tags.
std::vector<Entry> base_entries();

/// Checks every recognized tag of every entry against the computed
/// property; throws Error naming the first mismatch.
void verify_corpus_tags(const std::vector<Entry>& entries);

struct AmalgamEntry {
    std::string name;
    AmalgamResult result;
};

/// The shipped amalgam instances: the named constructions from the
/// design plus cartesian products and identity amalgams over the base
/// corpus, capped at `budget` total dimension.
std::vector<AmalgamEntry> amalgam_entries(std::size_t budget = 12);

/// Construction descriptors for the named amalgam instances, with file
/// references into an emitted corpus directory (entry name + ".json").
std::vector<std::pair<std::string, nlohmann::json>> named_amalgam_descriptors();

}  // namespace amalgam::corpus

#endif
