#pragma once

#include <string>

#include "toraut/int_matrix.hpp"

namespace toraut {

/// Text format: one row per line, space-separated decimal integers.
IntMatrix parse_matrix_text(const std::string& text);

/// JSON format: array of arrays of decimal integer strings (plain JSON
/// numbers are accepted too).
IntMatrix parse_matrix_json(const std::string& text);

/// Autodetects the two formats (JSON starts with '[').
/// Errors: ParseError on anything malformed, empty, or ragged.
IntMatrix parse_matrix(const std::string& text);

/// Reads and parses a matrix file.  Errors: ParseError (unreadable file or
/// malformed content).
IntMatrix load_matrix(const std::string& path);

std::string matrix_to_text(const IntMatrix& m);

/// Polynomial JSON: array of decimal integer strings, constant term first.
IntPoly parse_poly_json(const std::string& text);
std::string poly_to_json(const IntPoly& p);

}  // namespace toraut
