#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include <json.hpp>

#include "trigrearr/trigpoly.hpp"

namespace trigrearr::io {

/// {"d0": x, "terms": [{"k": int, "d": x, "phi": x}, ...]} with terms sorted by k.
nlohmann::json polynomial_to_json(const TrigPolynomial& T);
TrigPolynomial polynomial_from_json(const nlohmann::json& j);

/// CSV with header `k,d,phi`; the row k = 0 holds the constant (phi ignored).
std::string polynomial_to_csv(const TrigPolynomial& T);
TrigPolynomial polynomial_from_csv(std::string_view text);

/// Sniffs JSON (leading '{') versus CSV. Throws ParseError.
TrigPolynomial parse_polynomial(std::string_view text);

/// Single CSV column `value`, N rows.
std::string samples_to_csv(const SampledFunction& f);
SampledFunction samples_from_csv(std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

/// Shortest round-trip decimal form of a double.
std::string format_double(double x);

} // namespace trigrearr::io
