#pragma once

#include <string>

#include <json.hpp>

#include "toraut/int_matrix.hpp"

namespace toraut {

/// Matrix as an array of arrays of decimal strings (reports keep big
/// integers as strings so downstream consumers cannot overflow).
nlohmann::ordered_json matrix_json(const IntMatrix& m);

/// Row vectors as arrays of decimal strings.
nlohmann::ordered_json vectors_json(const std::vector<std::vector<Int>>& rows);

/// Polynomial as an array of decimal strings, constant term first.
nlohmann::ordered_json poly_json(const IntPoly& p);

/// Floating values are reported as shortest-round-trip decimal strings.
std::string double_string(double value);

/// The full analysis of one automorphism with a fixed key order: input,
/// unimodular, symplectic_forms, trichotomy, partially_hyperbolic, anosov,
/// ergodic, entropy, foliation, decomposition, errors, timing_ms.  Stages
/// that fail leave their field null and append "stage: message" to errors.
/// timing_ms stays 0 unless with_timing is set, so default output is
/// byte-identical across runs.
nlohmann::ordered_json analysis_report(const IntMatrix& input, bool with_timing = false);

/// Plain-text rendering of the same report for terminal use.
std::string render_text_report(const nlohmann::ordered_json& report);

}  // namespace toraut
