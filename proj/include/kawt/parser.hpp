#ifndef KAWT_PARSER_HPP
#define KAWT_PARSER_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "kawt/ast.hpp"

namespace kawt {

// Syntax, undeclared-identifier and sort errors, with a 1-based position.
struct ParseError : std::runtime_error {
    ParseError(int line, int col, const std::string& msg)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(col) + ": " + msg),
          line(line), col(col) {}
    int line;
    int col;
};

// Concrete syntax:
//   tests in braces {b}, weightings with an @ sigil (@f, or @(w) for
//   compound weighting expressions), juxtaposition or ';' for sequencing,
//   '+' for choice, postfix '*'; '!', '&', '|' inside braces only;
//   constants 0/1 are valid in every sort (a bare 0/1 in program position is
//   the corresponding test). Precedence: * > juxtaposition > +.
ProgPtr parse_program(std::string_view source, const Signature& sig);

// An atom written as a braced list of signed Boolean variables, e.g.
// "{neq0}" or "{!a b}". Every declared Boolean must appear exactly once.
// Returns the atom's bitmask in declaration order.
std::uint32_t parse_atom_spec(std::string_view source, const Signature& sig);

} // namespace kawt

#endif
