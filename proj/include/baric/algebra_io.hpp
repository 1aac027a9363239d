#pragma once

#include <string>

#include "baric/algebra.hpp"

namespace baric {

// Algebra file format (UTF-8, JSON):
//   { "field": "Q" | {"prime": p},
//     "dim": n,
//     "gamma": [ [i, j, k, "scalar"], ... ] }
// Indices are 1-based; omitted triples are zero; duplicate triples are
// rejected; scalars are strings in the single literal grammar.

/// Parses an algebra from JSON text.  Error messages cite the line of a
/// syntax error or the offending gamma entry and field.
Algebra algebra_from_json(const std::string& text);

Algebra load_algebra_file(const std::string& path);

/// Serializes with zero entries omitted and scalars as exact strings.
std::string algebra_to_json(const Algebra& a);

// Matrix text format: one row per line, entries separated by spaces,
// each a scalar literal.  Blank lines are ignored.

Matrix matrix_from_text(const std::string& text, const FieldSpec& spec);
Matrix load_matrix_file(const std::string& path, const FieldSpec& spec);

/// Comma-separated scalars, e.g. a --alpha flag value "-1,1,-1".
Vector vector_from_csv(const std::string& text, const FieldSpec& spec);

}  // namespace baric
