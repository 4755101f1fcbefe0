// Parser for the textual export format (one declaration per s-expression).
#pragma once

#include <string>
#include <vector>

#include "hammer/errors.hpp"
#include "hammer/term.hpp"

namespace hammer {

// Parses a whole export file. Checks scoping as it goes: constants must
// resolve to earlier declarations (or the inductive being declared), variables
// must be bound by an enclosing binder. Throws ParseError with position info.
std::vector<Declaration> parse_decls(const std::string& source);

// Convenience: parse and load into an environment.
Environment load_environment(const std::string& source);
Environment load_environment_file(const std::string& path);

}  // namespace hammer
