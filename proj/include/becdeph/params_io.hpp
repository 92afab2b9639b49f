// params_io.hpp — parameter files and quantity strings with unit suffixes
#pragma once

#include <string>

#include "becdeph/units.hpp"

namespace becdeph {

// Parses a number with an optional unit suffix (nm, um, s, kg) into SI base
// units. A bare number is taken as already SI. Throws std::invalid_argument
// on malformed input.
double parse_quantity(const std::string& text);

// Sets one named parameter from its string representation. Lengths accept
// nm/um suffixes, masses kg; "dimension" must be an integer 1..3.
// Throws std::invalid_argument for unknown keys or bad values.
void apply_param(PhysicalParams& p, const std::string& key, const std::string& value);

// Reads key = value lines ('#' starts a comment, blank lines ignored) and
// applies them on top of p. Throws std::invalid_argument on unknown keys,
// std::runtime_error if the file cannot be opened.
void load_params_file(const std::string& path, PhysicalParams& p);

}  // namespace becdeph
