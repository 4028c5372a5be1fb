#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ksix/ck.hpp"
#include "ksix/coeff.hpp"
#include "ksix/grid.hpp"
#include "ksix/homalg.hpp"

namespace ksix::cli {

using nlohmann::json;

/// Malformed input: bad JSON, wrong shapes, unknown fields. Exit code 2.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Inline JSON when the argument starts with '{', '[' or '"'; otherwise the
/// contents of the named file. Bare group shorthands ("Z_2 ⊕ Z") are
/// accepted as strings.
json load_argument(const std::string& arg);
std::string read_file(const std::string& path);

Integer integer_from_json(const json& j);
json integer_to_json(const Integer& x);

/// [[...], ...]; the scalar 0, null or [] stand for the zero matrix of the
/// expected shape.
IntMatrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols);
/// [[...], ...] with the shape taken from the data. Rejects ragged rows.
IntMatrix matrix_from_json(const json& j);
json matrix_to_json(const IntMatrix& m);

/// {"rank", "torsion"}, {"presentation"} or a shorthand string such as
/// "0", "Z", "Z^2", "Z_4", "Z ⊕ Z_2" (also with "+").
AbelianGroup group_from_json(const json& j);
json group_to_json(const AbelianGroup& g);

json hom_to_json(const GroupHom& f);

SixTermComplex complex_from_json(const json& j);
json complex_to_json(const SixTermComplex& c);

json complex_hom_to_json(const ComplexHom& h);

TotalSixInvariant total_from_json(const json& j);
json total_to_json(const TotalSixInvariant& inv);

json lambda_hom_to_json(const LambdaHom& h);

DiagramSpec diagram_from_json(const json& j);

/// JSON [[...]] or whitespace separated rows of integers, one row per line.
CKMatrix ck_matrix_from_text(const std::string& text);

json extension_to_json(const ExtensionClass& e);

}  // namespace ksix::cli
