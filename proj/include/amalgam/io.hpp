#ifndef AMALGAM_IO_HPP
#define AMALGAM_IO_HPP

#include "amalgam/cohomology.hpp"
#include "amalgam/structure.hpp"

#include <json.hpp>

#include <string>

namespace amalgam::io {

class ParseError : public Error {
public:
    using Error::Error;
};

/// Reads and parses a JSON document; ParseError carries line/column on
/// malformed input.
nlohmann::json read_json_file(const std::string& path);
void write_json_file(const nlohmann::json& j, const std::string& path);

/// Rationals serialize as decimal-free "p" / "p/q" strings; plain JSON
/// integers are accepted on input.
Rational rational_from_json(const nlohmann::json& j);
nlohmann::json rational_to_json(const Rational& r);

Vec vec_from_json(const nlohmann::json& j);
nlohmann::json vec_to_json(const Vec& v);

Matrix matrix_from_json(const nlohmann::json& j);
nlohmann::json matrix_to_json(const Matrix& m);

/// Algebra file: {"dim": n, "labels": [...], "table": [[[...]]],
/// "weights": [...]}; omitted weights default to 1, omitted labels to
/// e0..e{n-1}.
AlgebraPtr algebra_from_json(const nlohmann::json& j);
nlohmann::json algebra_to_json(const FiniteAlgebra& a);
AlgebraPtr load_algebra(const std::string& path);
void save_algebra(const FiniteAlgebra& a, const std::string& path);

nlohmann::json spectrum_to_json(const SpectrumReport& report);
nlohmann::json cohomology_to_json(const CohomologyReport& report);

/// Construction descriptor:
///   {"kind": "amalgam"|"unitize"|"module-ext"|"lau"|"semidirect"|"cartesian",
///    ...algebra file references and construction data...}
/// Referenced files resolve relative to base_dir.
AmalgamResult construct_from_descriptor(const nlohmann::json& desc,
                                        const std::string& base_dir);

/// Embeddings/projections of a constructed amalgam, for the side file
/// written by the construct command.
nlohmann::json maps_to_json(const AmalgamResult& r);

}  // namespace amalgam::io

#endif
