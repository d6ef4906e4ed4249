#include "amalgam/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace amalgam::io {

using nlohmann::json;

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    std::string text = buffer.str();
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        // e.byte is 1-based; recover line and column
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError("malformed JSON in '" + path + "' at line " + std::to_string(line) +
                         " column " + std::to_string(col));
    }
}

void write_json_file(const json& j, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write '" + path + "'");
    out << j.dump(2) << '\n';
}

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) {
        try {
            return Rational::parse(j.get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
    }
    throw ParseError("expected a rational as \"p/q\" string or integer, got " + j.dump());
}

json rational_to_json(const Rational& r) { return r.str(); }

Vec vec_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("expected an array of rationals, got " + j.dump());
    Vec v;
    for (const auto& e : j) v.push_back(rational_from_json(e));
    return v;
}

json vec_to_json(const Vec& v) {
    json out = json::array();
    for (const auto& r : v) out.push_back(rational_to_json(r));
    return out;
}

Matrix matrix_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("expected a matrix as an array of rows");
    std::vector<Vec> rows;
    std::size_t cols = 0;
    for (const auto& row : j) {
        rows.push_back(vec_from_json(row));
        if (rows.size() == 1)
            cols = rows.back().size();
        else if (rows.back().size() != cols)
            throw ParseError("ragged matrix rows");
    }
    return Matrix::from_rows(rows, cols);
}

json matrix_to_json(const Matrix& m) {
    json out = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vec_to_json(m.row(r)));
    return out;
}

AlgebraPtr algebra_from_json(const json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("table"))
        throw ParseError("algebra file must contain \"dim\" and \"table\"");
    const std::size_t n = j.at("dim").get<std::size_t>();
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    const json& t = j.at("table");
    if (!t.is_array() || t.size() != n) throw ParseError("table must have dim rows");
    std::vector<Rational> table(n * n * n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!t[i].is_array() || t[i].size() != n) throw ParseError("table must be dim x dim");
        for (std::size_t jj = 0; jj < n; ++jj) {
            Vec entry = vec_from_json(t[i][jj]);
            if (entry.size() != n) throw ParseError("table entries must have dim coordinates");
            for (std::size_t k = 0; k < n; ++k) table[(i * n + jj) * n + k] = entry[k];
        }
    }
    std::vector<Rational> weights;
    if (j.contains("weights")) {
        for (const auto& w : j.at("weights")) weights.push_back(rational_from_json(w));
    }
    return FiniteAlgebra::make(n, std::move(labels), std::move(table), std::move(weights));
}

json algebra_to_json(const FiniteAlgebra& a) {
    const std::size_t n = a.dim();
    json table = json::array();
    for (std::size_t i = 0; i < n; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < n; ++j) row.push_back(vec_to_json(a.basis_product(i, j)));
        table.push_back(std::move(row));
    }
    json weights = json::array();
    for (std::size_t k = 0; k < n; ++k) weights.push_back(rational_to_json(a.weight(k)));
    return json{{"dim", n}, {"labels", a.labels()}, {"table", table}, {"weights", weights}};
}

AlgebraPtr load_algebra(const std::string& path) {
    return algebra_from_json(read_json_file(path));
}

void save_algebra(const FiniteAlgebra& a, const std::string& path) {
    write_json_file(algebra_to_json(a), path);
}

json spectrum_to_json(const SpectrumReport& report) {
    json chars = json::array();
    for (const auto& chi : report.characters) chars.push_back(vec_to_json(chi.coords));
    json out{{"characters", chars}, {"complete", report.complete}};
    if (report.obstruction) out["obstruction"] = *report.obstruction;
    return out;
}

json cohomology_to_json(const CohomologyReport& report) {
    json z1 = json::array(), b1 = json::array();
    for (const auto& m : report.z1_basis) z1.push_back(matrix_to_json(m));
    for (const auto& m : report.b1_basis) b1.push_back(matrix_to_json(m));
    return json{{"z1_dim", report.z1_dim}, {"b1_dim", report.b1_dim},
                {"h1_dim", report.h1_dim}, {"z1_basis", z1},      {"b1_basis", b1}};
}

namespace {

AlgebraPtr load_ref(const json& desc, const std::string& key, const std::string& base_dir) {
    if (!desc.contains(key))
        throw ParseError("descriptor is missing the \"" + key + "\" algebra reference");
    std::filesystem::path p(desc.at(key).get<std::string>());
    if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
    return load_algebra(p.string());
}

Subspace subspace_from_json(const json& j, std::size_t ambient) {
    if (!j.is_array()) throw ParseError("expected a subspace as an array of basis rows");
    std::vector<Vec> rows;
    for (const auto& row : j) {
        rows.push_back(vec_from_json(row));
        if (rows.back().size() != ambient)
            throw ParseError("subspace row has wrong ambient dimension");
    }
    return Subspace::span_of(rows, ambient);
}

std::vector<Rational> tensor_from_json(const json& j, std::size_t d0, std::size_t d1,
                                       std::size_t d2) {
    std::vector<Rational> t(d0 * d1 * d2);
    if (!j.is_array() || j.size() != d0) throw ParseError("action tensor shape mismatch");
    for (std::size_t i = 0; i < d0; ++i) {
        if (!j[i].is_array() || j[i].size() != d1)
            throw ParseError("action tensor shape mismatch");
        for (std::size_t p = 0; p < d1; ++p) {
            Vec row = vec_from_json(j[i][p]);
            if (row.size() != d2) throw ParseError("action tensor shape mismatch");
            for (std::size_t q = 0; q < d2; ++q) t[(i * d1 + p) * d2 + q] = row[q];
        }
    }
    return t;
}

}  // namespace

AmalgamResult construct_from_descriptor(const json& desc, const std::string& base_dir) {
    if (!desc.is_object() || !desc.contains("kind"))
        throw ParseError("descriptor must be an object with a \"kind\"");
    const std::string kind = desc.at("kind").get<std::string>();

    if (kind == "cartesian")
        return cartesian_product(load_ref(desc, "a", base_dir), load_ref(desc, "b", base_dir));

    if (kind == "unitize") return unitize(load_ref(desc, "a", base_dir));

    if (kind == "module-ext") {
        AlgebraPtr a = load_ref(desc, "a", base_dir);
        const std::size_t m = desc.at("module_dim").get<std::size_t>();
        Bimodule x = make_bimodule(
            a, m, tensor_from_json(desc.at("left"), a->dim(), m, m),
            tensor_from_json(desc.at("right"), m, a->dim(), m));
        return module_extension(a, x);
    }

    if (kind == "lau") {
        AlgebraPtr a = load_ref(desc, "a", base_dir);
        AlgebraPtr b = load_ref(desc, "b", base_dir);
        Character phi = make_character(a, vec_from_json(desc.at("phi")));
        return lau_product(a, b, phi);
    }

    if (kind == "semidirect") {
        AlgebraPtr b = load_ref(desc, "b", base_dir);
        Subspace sub = subspace_from_json(desc.at("subalgebra"), b->dim());
        IdealEmbedding ideal = make_ideal(b, subspace_from_json(desc.at("ideal"), b->dim()));
        return semidirect_product(b, sub, ideal);
    }

    if (kind == "amalgam") {
        AlgebraPtr a = load_ref(desc, "a", base_dir);
        AlgebraPtr b = load_ref(desc, "b", base_dir);
        Matrix theta = matrix_from_json(desc.at("theta"));
        if (theta.rows() != b->dim() || theta.cols() != a->dim())
            throw ParseError("theta matrix must be dim(B) x dim(A)");
        IdealEmbedding ideal = make_ideal(b, subspace_from_json(desc.at("ideal"), b->dim()));
        return amalgamate(a, b, make_homomorphism(a, b, theta), ideal);
    }

    throw ParseError("unknown construction kind '" + kind + "'");
}

json maps_to_json(const AmalgamResult& r) {
    return json{{"embed_A", matrix_to_json(r.embed_A.matrix)},
                {"embed_I", matrix_to_json(r.embed_I.matrix)},
                {"project_A", matrix_to_json(r.project_A.matrix)},
                {"theta", matrix_to_json(r.theta.matrix)},
                {"ideal_basis_in_B", matrix_to_json(r.ideal_in_ambient.subspace.basis())},
                {"theta_norm_warning", r.theta_norm_warning}};
}

}  // namespace amalgam::io
