#include "amalgam/corpus.hpp"

#include "amalgam/cohomology.hpp"
#include "amalgam/structure.hpp"

#include <map>

namespace amalgam::corpus {

namespace {

using Entry4 = std::tuple<std::size_t, std::size_t, std::size_t, Rational>;

std::vector<Rational> table_from(std::size_t n, const std::vector<Entry4>& entries) {
    std::vector<Rational> t(n * n * n);
    for (const auto& [i, j, k, v] : entries) t[(i * n + j) * n + k] = v;
    return t;
}

}  // namespace

AlgebraPtr zero() {
    static AlgebraPtr a = FiniteAlgebra::make(0, {}, {});
    return a;
}

AlgebraPtr rationals() {
    static AlgebraPtr a = FiniteAlgebra::make(1, {"1"}, table_from(1, {{0, 0, 0, 1}}));
    return a;
}

AlgebraPtr zero_product_1d() {
    static AlgebraPtr a = FiniteAlgebra::make(1, {"z"}, table_from(1, {}));
    return a;
}

AlgebraPtr dual_numbers() {
    static AlgebraPtr a = FiniteAlgebra::make(
        2, {"1", "eps"},
        table_from(2, {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}}));
    return a;
}

AlgebraPtr q_times_q() {
    static AlgebraPtr a = FiniteAlgebra::make(
        2, {"p", "q"}, table_from(2, {{0, 0, 0, 1}, {1, 1, 1, 1}}));
    return a;
}

AlgebraPtr adjoin_sqrt2() {
    // x^2 = 2; weight 2 on x keeps the norm submultiplicative
    static AlgebraPtr a = FiniteAlgebra::make(
        2, {"1", "x"},
        table_from(2, {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 2}}),
        {Rational(1), Rational(2)});
    return a;
}

AlgebraPtr upper_triangular_2() {
    static AlgebraPtr a = FiniteAlgebra::make(
        3, {"e11", "e22", "e12"},
        table_from(3, {{0, 0, 0, 1}, {1, 1, 1, 1}, {0, 2, 2, 1}, {2, 1, 2, 1}}));
    return a;
}

AlgebraPtr full_matrix_2() {
    static AlgebraPtr a = FiniteAlgebra::make(
        4, {"e11", "e12", "e21", "e22"},
        table_from(4, {
            {0, 0, 0, 1},  // e11 e11 = e11
            {0, 1, 1, 1},  // e11 e12 = e12
            {1, 2, 0, 1},  // e12 e21 = e11
            {1, 3, 1, 1},  // e12 e22 = e12
            {2, 0, 2, 1},  // e21 e11 = e21
            {2, 1, 3, 1},  // e21 e12 = e22
            {3, 2, 2, 1},  // e22 e21 = e21
            {3, 3, 3, 1},  // e22 e22 = e22
        }));
    return a;
}

std::vector<Entry> base_entries() {
    return {
        {"zero", zero(), {"commutative", "unital", "square-dense", "semisimple", "amenable", "weakly-amenable"}},
        {"rationals", rationals(), {"commutative", "unital", "square-dense", "semisimple", "amenable", "weakly-amenable"}},
        {"zero-product-1d", zero_product_1d(), {"commutative"}},
        {"dual-numbers", dual_numbers(), {"commutative", "unital", "square-dense"}},
        {"q-times-q", q_times_q(), {"commutative", "unital", "square-dense", "semisimple", "amenable", "weakly-amenable"}},
        {"adjoin-sqrt2", adjoin_sqrt2(), {"commutative", "unital", "square-dense", "semisimple", "amenable", "weakly-amenable", "non-split-spectrum"}},
        {"upper-triangular-2", upper_triangular_2(), {"unital", "square-dense"}},
        {"full-matrix-2", full_matrix_2(), {"unital", "square-dense", "semisimple", "amenable", "weakly-amenable"}},
    };
}

void verify_corpus_tags(const std::vector<Entry>& entries) {
    for (const auto& e : entries) {
        const auto& a = *e.algebra;
        std::map<std::string, bool> computed = {
            {"commutative", is_commutative(a).commutative},
            {"unital", find_identity(a).has_value()},
            {"square-dense", is_square_dense(a)},
            {"semisimple", is_semisimple(e.algebra)},
            {"amenable", is_amenable(e.algebra)},
            {"weakly-amenable", is_weakly_amenable(e.algebra)},
            {"non-split-spectrum", !characters(e.algebra).complete},
        };
        for (const auto& tag : e.tags) {
            auto it = computed.find(tag);
            if (it == computed.end()) throw Error("corpus: unknown tag '" + tag + "'");
            if (!it->second)
                throw Error("corpus: entry '" + e.name + "' fails tag '" + tag + "'");
        }
    }
}

std::vector<AmalgamEntry> amalgam_entries(std::size_t budget) {
    std::vector<AmalgamEntry> out;

    // Q bowtie^id Q
    out.push_back({"q-id-q", identity_amalgam(rationals())});

    // Lau products
    {
        Character id_char = make_character(rationals(), {Rational(1)});
        out.push_back({"lau-q-dual-numbers", lau_product(rationals(), dual_numbers(), id_char)});
        out.push_back({"lau-q-zero-product", lau_product(rationals(), zero_product_1d(), id_char)});
        out.push_back({"lau-q-m2", lau_product(rationals(), full_matrix_2(), id_char)});
    }

    // semidirect product inside T2: diagonal along the strict upper part
    {
        AlgebraPtr t2 = upper_triangular_2();
        Subspace diag = Subspace::span_of(
            {{Rational(1), Rational(0), Rational(0)}, {Rational(0), Rational(1), Rational(0)}}, 3);
        Subspace strict = Subspace::span_of({{Rational(0), Rational(0), Rational(1)}}, 3);
        out.push_back({"semidirect-t2", semidirect_product(t2, diag, make_ideal(t2, strict))});
    }

    // module extension: T2 as an extension of Q x Q by Q
    {
        AlgebraPtr qq = q_times_q();
        // left action by the first coordinate, right action by the second
        std::vector<Rational> left{Rational(1), Rational(0)};   // l[i][0][0]
        std::vector<Rational> right{Rational(0), Rational(1)};  // r[0][i][0]
        out.push_back({"module-ext-t2", module_extension(qq, make_bimodule(qq, 1, left, right))});
    }

    // unitization of the 1-dim zero-product algebra (the dual numbers)
    out.push_back({"unitize-zero-product", unitize(zero_product_1d())});

    // amalgam with A of dimension zero
    out.push_back({"zero-bowtie-q", cartesian_product(zero(), rationals())});

    // cartesian products and identity amalgams over the base corpus
    auto base = base_entries();
    for (const auto& ea : base) {
        if (ea.algebra->dim() == 0) continue;
        if (2 * ea.algebra->dim() <= budget)
            out.push_back({"id-amalgam-" + ea.name, identity_amalgam(ea.algebra)});
    }
    for (const auto& ea : base)
        for (const auto& eb : base) {
            if (ea.algebra->dim() + eb.algebra->dim() > budget) continue;
            if (ea.algebra->dim() == 0 && eb.algebra->dim() == 0) continue;
            out.push_back({"cartesian-" + ea.name + "-" + eb.name,
                           cartesian_product(ea.algebra, eb.algebra)});
        }
    return out;
}

std::vector<std::pair<std::string, nlohmann::json>> named_amalgam_descriptors() {
    using nlohmann::json;
    return {
        {"q-id-q",
         json{{"kind", "amalgam"},
              {"a", "rationals.json"},
              {"b", "rationals.json"},
              {"theta", json::array({json::array({"1"})})},
              {"ideal", json::array({json::array({"1"})})}}},
        {"lau-q-dual-numbers",
         json{{"kind", "lau"},
              {"a", "rationals.json"},
              {"b", "dual-numbers.json"},
              {"phi", json::array({"1"})}}},
        {"lau-q-zero-product",
         json{{"kind", "lau"},
              {"a", "rationals.json"},
              {"b", "zero-product-1d.json"},
              {"phi", json::array({"1"})}}},
        {"lau-q-m2",
         json{{"kind", "lau"},
              {"a", "rationals.json"},
              {"b", "full-matrix-2.json"},
              {"phi", json::array({"1"})}}},
        {"semidirect-t2",
         json{{"kind", "semidirect"},
              {"b", "upper-triangular-2.json"},
              {"subalgebra", json::array({json::array({"1", "0", "0"}),
                                          json::array({"0", "1", "0"})})},
              {"ideal", json::array({json::array({"0", "0", "1"})})}}},
        {"module-ext-t2",
         json{{"kind", "module-ext"},
              {"a", "q-times-q.json"},
              {"module_dim", 1},
              {"left", json::array({json::array({json::array({"1"})}),
                                    json::array({json::array({"0"})})})},
              {"right", json::array({json::array({json::array({"0"}),
                                                  json::array({"1"})})})}}},
        {"unitize-zero-product", json{{"kind", "unitize"}, {"a", "zero-product-1d.json"}}},
        {"zero-bowtie-q",
         json{{"kind", "cartesian"}, {"a", "zero.json"}, {"b", "rationals.json"}}},
    };
}

}  // namespace amalgam::corpus
