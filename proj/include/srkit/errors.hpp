#ifndef SRKIT_ERRORS_HPP
#define SRKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace srkit {

/// Malformed SRC v1 / JSON input. Line and column are 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line, int column)
        : std::runtime_error(what), line_(line), column_(column)
    {
    }

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// A computation would exceed a configured resource bound (subset sweep
/// size, enumeration search space).
class GuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace srkit

#endif
