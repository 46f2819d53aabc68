#ifndef KAWT_IO_HPP
#define KAWT_IO_HPP

#include <string>

#include "kawt/ast.hpp"
#include "kawt/relational.hpp"

namespace kawt {

// File-level problems: missing files, malformed headers, labels that do not
// match the declared signature. Parse errors inside the program text itself
// surface as ParseError instead.
struct IoError : std::runtime_error {
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ProgramFile {
    Signature sig;
    ProgPtr prog;
};

// Header block (program / bool / weight lines), a `---` separator, then the
// program text. `#` starts a comment anywhere.
ProgramFile load_program_file(const std::string& path);

// Line-oriented model description over a previously loaded signature:
//   semiring tropical
//   states   s0 s1 s2
//   prog sub1 : s2 s1 , s1 s0
//   bool neq0 : s1 s2
//   weight one = 1
// Every declared variable must be labeled (possibly with an empty set).
TransitionSystem load_model_file(const std::string& path, const Signature& sig);

std::string read_file(const std::string& path);

} // namespace kawt

#endif
