#pragma once

#include <stdexcept>
#include <string>

namespace qf {

/// Requested bit layout cannot produce the target number.
struct LayoutError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Constraint system has no {0,1} solution (usually: wrong layout candidate).
struct InfeasibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// DSL syntax error with position info.
struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(const std::string& msg, int line_, int col_)
        : std::runtime_error(msg + " at line " + std::to_string(line_) + ", column " +
                             std::to_string(col_)),
          line(line_),
          column(col_) {}
};

}  // namespace qf
