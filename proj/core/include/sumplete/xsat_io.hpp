#pragma once

#include <string>
#include <string_view>

#include "sumplete/instance_io.hpp"
#include "sumplete/xsat.hpp"

namespace sumplete {

// Formula encodings (variables are 1-based on disk):
//   Text: header "p xsat <n> <m>", then m lines of three variable indices;
//         '#' comment lines ignored.
//   Json: {"n_vars":n,"clauses":[[i,j,k],...]}
//
// Assignment encodings:
//   Text: n flags (0/1, x_1 first) separated by whitespace on one line.
//   Json: {"n_vars":n,"values":[false,true,...]}
//
// Serializers write the canonical single-line JSON / the text layout above,
// each terminated by '\n'. Clauses come out with ascending variables.

XsatInstance parse_xsat(std::string_view text, Format format);
std::string serialize_xsat(const XsatInstance& phi, Format format);

Assignment parse_assignment(std::string_view text, Format format);
std::string serialize_assignment(const Assignment& a, Format format);

}  // namespace sumplete
