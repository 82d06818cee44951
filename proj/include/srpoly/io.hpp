#pragma once

#include <string>
#include <vector>

namespace srpoly {

// Shortest decimal string that parses back to the same binary64. Integers
// render without a decimal point or exponent; -0.0 renders as "0".
std::string format_number(double v);

// Parses either coefficient format, ascending by degree: a JSON array of
// numbers, or whitespace-separated decimal literals.
std::vector<double> parse_coeffs(const std::string& text);

// Reads a coefficient file in either format.
std::vector<double> load_coeff_file(const std::string& path);

// Renders coefficients as "[c0,c1,...]" using format_number.
std::string render_coeffs(const std::vector<double>& coeffs);

} // namespace srpoly
