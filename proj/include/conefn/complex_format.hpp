#pragma once

#include <string>
#include <string_view>

#include "conefn/lattice_cones.hpp"

namespace conefn {

/// Parses "re", "re+imi", "re-imi", "imi", "i", "-i". Throws ParseError.
Complex parse_complex(std::string_view text);
/// Shortest round-trip formatting in the same "re+imi" syntax.
std::string format_complex(Complex z);
std::string format_double(double x);

/// "a,b[,c]" -> integer vector. Throws ParseError.
IntVector parse_int_vector(std::string_view text);

}  // namespace conefn
