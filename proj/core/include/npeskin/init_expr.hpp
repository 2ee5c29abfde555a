#pragma once

#include <string>

#include "npeskin/grid.hpp"

namespace npeskin {

/// Evaluates a closed-form expression of s with the grammar
/// +, -, *, /, ^, sin, cos, exp, numeric literals, s, pi.
/// Throws std::invalid_argument with a position message on parse errors.
double eval_expression(const std::string& text, double s);

/// Initial data from either a closed-form expression over s, or a mode list
/// "n:amplitude:phase[,n:amplitude:phase...]" meaning sum of
/// amplitude * cos(n s + phase). Mode-list form is detected by the ':'.
GridFunction parse_initial_data(const std::string& text, std::size_t n);

}  // namespace npeskin
