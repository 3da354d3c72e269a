#pragma once

#include <string>

#include "schurkit/symfunc.hpp"

namespace schurkit {

/// Parses expressions like "s[2,1] + 3*s[1,1,1] - 1/2*p[2]". Terms are
/// coeff*basis[parts] with an optional coefficient (integer or p/q); bare
/// rational constants are unit terms; round parentheses work for partitions
/// too. Uniform-basis input stays in that basis; mixed bases convert to
/// Schur. Out-of-order parts are sorted; *warn is set when that happens.
/// Malformed input raises domain_error with the offending position.
SymFunc parse_expression(const std::string& text, bool* warn = nullptr);

/// Canonical rendering, weight ascending and reverse-lexicographic within a
/// weight: "1 - s[1] + s[1,1]". The zero function prints "0".
std::string to_string(const SymFunc& f);

/// Tensor rendering: "s[2] (x) s[2] + s[1,1] (x) s[1,1]".
std::string to_string(const TensorExp& t);

/// Universal-character rendering of a Schur expansion, "<2> + <1,1> + <0>"
/// for the symplectic flavor and square brackets for the orthogonal one.
std::string to_universal_string(const SymFunc& f, bool symplectic);

}  // namespace schurkit
