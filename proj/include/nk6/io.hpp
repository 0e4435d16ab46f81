#pragma once

#include <string>
#include <string_view>

#include "nk6/lie_algebra.hpp"

namespace nk6 {

// Line-oriented text format:
//   field sqrt 3 | field rational
//   dim 6
//   algebra <name>                      (optional)
//   d 1 = -1*23 + 1/2*45
//   form omega = 1*14 + (1+r)*25
//   endo J = row-major scalar list      (comma or whitespace separated)
//   metric g = row-major scalar list
// '#' starts a comment. Errors carry "source:line:column".
// Throws SyntaxError or ValidationError; structure constants failing
// jacobi_check, asymmetric metrics and wrong list sizes are ValidationErrors.
CatalogEntry parse_input(std::string_view text, std::string_view source = "<input>");
CatalogEntry parse_input_file(const std::string& path);

// A single form expression such as "1*123 - (1/2+r)*456". Throws SyntaxError or ValidationError.
FormS parse_form_text(std::string_view text, int dim, int field = kDefaultField);

// Inverse of parse_input.
std::string emit_input(const CatalogEntry& entry);

}  // namespace nk6
