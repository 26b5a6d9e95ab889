#ifndef SEPR_IO_JSON_HPP
#define SEPR_IO_JSON_HPP

#include "sepr/matrix.hpp"

#include <string>

namespace sepr {

/*
 * Matrix file format:
 *
 *   { "n": 3, "radicand": 3,
 *     "entries": [[ {"re": ["p/q","r/s"], "im": ["p/q","r/s"]}, ... ], ...] }
 *
 * An entry component ["p/q","r/s"] denotes p/q + (r/s)*sqrt(radicand); the
 * second element and the whole "im" member default to zero, and a bare
 * string or integer is accepted for a rational component. "radicand"
 * defaults to 0. Rationals must be in lowest terms with a positive
 * denominator; violations are rejected with the offending entry named.
 */
HermitianMatrix matrix_from_json_text(const std::string& text);

// Serialization always writes both components of both parts, so output is
// schema-stable. indent < 0 writes compact single-line JSON.
std::string matrix_to_json_text(const HermitianMatrix& m, int indent = -1);

}  // namespace sepr

#endif
