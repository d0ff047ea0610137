#ifndef UNROLLSEM_ERRORS_HPP
#define UNROLLSEM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace unrollsem {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Syntax, name or type error in DSL source. Positions are 1-based;
// line 0 means "no position" (e.g. programmatically built AST).
class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line = 0, int col = 0)
        : Error(line > 0 ? msg + " (line " + std::to_string(line) + ", column " +
                               std::to_string(col) + ")"
                         : msg),
          line_(line),
          col_(col) {}

    int line() const { return line_; }
    int column() const { return col_; }

private:
    int line_;
    int col_;
};

// A configured cap (state space size, trace set cardinality) was exceeded.
class ResourceError : public Error {
public:
    using Error::Error;
};

// An out-of-domain assignment in strict mode.
class DomainError : public Error {
public:
    using Error::Error;
};

// An internal consistency check failed (e.g. a non-monotone bug matrix row).
class ConsistencyError : public Error {
public:
    using Error::Error;
};

}  // namespace unrollsem

#endif
