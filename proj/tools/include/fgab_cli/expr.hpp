#pragma once

#include "fgab/group.hpp"

#include <string_view>

namespace fgab::cli {

// expr := atom ('+' atom)* ; atom := 'Z' ('^' INT)? | 'Z/' INT | '0'
// Whitespace between tokens is ignored. The '0' atom makes the rendering of
// the trivial group parse back. Throws InputError carrying the offset of the
// offending character.
FgGroup parse_group(std::string_view text);

}  // namespace fgab::cli
