#ifndef LISTCOL_ERRORS_HPP
#define LISTCOL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace listcol {

// Violated precondition or malformed caller input.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed instance document; carries a 1-based line number when known.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// A configured resource budget ran out before a verdict was reached.
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// A structural guarantee the code relies on failed to hold.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

} // namespace listcol

#endif
