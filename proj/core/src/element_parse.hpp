#ifndef COURANT_ELEMENT_PARSE_HPP
#define COURANT_ELEMENT_PARSE_HPP

// Internal: element-grammar entry points shared between the element parser
// and the bracket-expression parser. Not installed.

#include "courant/anchored_module.hpp"
#include "courant/free_element.hpp"
#include "text_scan.hpp"

namespace courant::detail {

/// Parses an element, stopping at the first character that cannot continue
/// one (e.g. ',' or ']' inside an expression).
FreeElement parseElementUntil(Scanner& s, const AnchoredModule& module,
                              Bounds bounds);

} // namespace courant::detail

#endif
