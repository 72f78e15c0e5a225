#ifndef LERAY_COMPLEX_IO_HPP
#define LERAY_COMPLEX_IO_HPP

#include <string>
#include <string_view>

#include "leray/simplicial_complex.hpp"

namespace leray {

// Text format for complexes:
//   - optional first directive "#labels a b c ..." fixing label set and id order;
//   - one facet per line, vertex labels separated by whitespace or commas;
//   - '#' starts a comment (full-line or trailing);
//   - the literal token "{}" denotes the empty facet;
//   - no facet lines at all parse as the void complex.
// Without a #labels directive, ids follow first appearance. Unknown labels
// under a directive, and labels lexically equal to "{}", are errors. All
// errors carry line:column positions.
SimplicialComplex parse_complex(std::string_view text);

// Emits the #labels directive then one facet per line in canonical order;
// parse(print(X)) == X for every complex.
std::string print_complex(const SimplicialComplex& x);

// File wrappers; read errors are InputError.
SimplicialComplex read_complex_file(const std::string& path);
std::string read_text_file(const std::string& path);

}  // namespace leray

#endif
