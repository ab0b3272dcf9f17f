#pragma once

// JSON and text renderings. JSON always carries integer encodings; text
// uses the symbolic power-basis form ("1+t^2").

#include <optional>
#include <string>

#include <json.hpp>

#include "mdsconv/constructions.hpp"
#include "mdsconv/convcode.hpp"

namespace mdsconv {

using Json = nlohmann::ordered_json;

Json matrix_json(const Matrix& m);
/// Throws ParseError on a non-rectangular or non-integer array.
Matrix matrix_from_json(const Json& j, std::size_t cols_if_empty = 0);

/// {rows, cols, coeffs: [[[enc]]]}, coeffs[t] the coefficient of D^t.
Json poly_matrix_json(const PolyMatrix& p);
PolyMatrix poly_matrix_from_json(const Json& j);

/// {p, m, modulus} plus {ext_modulus, theta_ext, beta} for an extension.
Json field_json(const Field& f, const ExtField* ext = nullptr);
Json block_code_json(const BlockCode& c);
Json expected_json(const ExpectedFlags& e);
Json bundle_json(const Bundle& b);
Json report_json(const ConvReport& r);

/// What `verify` needs from a bundle document.
struct VerifyInput {
    FieldPtr field;
    PolyMatrix parity;
    std::optional<ExpectedFlags> expected;
    std::optional<FamilySpec> spec;
};

/// Accepts a bundle document or a bare {q | field, parity} document.
/// Throws ParseError.
VerifyInput verify_input_from_json(const Json& j);

/// Ascending in D: "t^2+(1+t+t^2)D", "1+D", "0".
std::string render_entry(const Field& f, const Poly& p);
/// One line per row, entries separated by " | ".
std::string render_matrix(const Field& f, const Matrix& m);
std::string render_poly_matrix(const Field& f, const PolyMatrix& p);
std::string render_bundle(const Bundle& b);
std::string render_report(const ConvReport& r);

}  // namespace mdsconv
