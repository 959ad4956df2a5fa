#pragma once

#include <string>
#include <vector>

#include "nilproj/complex_matrix.hpp"

namespace nilproj {

/// Reads a matrix from the JSON document {"n": rows, "m": cols,
/// "data": [[[re, im], ...], ...]}. Throws ParseError on malformed input or
/// non-finite numbers, DimensionMismatch when data does not match n x m.
ComplexMatrix read_matrix(const std::string& path);

/// Writes the JSON matrix document. Doubles are serialized with the shortest
/// representation that round-trips, so write-then-read is bitwise exact.
void write_matrix(const ComplexMatrix& m, const std::string& path);

/// CSV export with header row re_1,im_1,...,re_m,im_m.
void write_matrix_csv(const ComplexMatrix& m, const std::string& path);

std::string matrix_to_json_string(const ComplexMatrix& m);
ComplexMatrix matrix_from_json_string(const std::string& text);

/// Reads a JSON array of [re, im] pairs (unit-modulus phases for the
/// construct subcommand).
std::vector<cplx> read_phases(const std::string& path);

}  // namespace nilproj
