#pragma once

#include <stdexcept>
#include <string>

namespace loopcoh {

class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Malformed input text. Line and column are 1-based; 0 means unknown.
class ParseError : public Error
{
public:
    ParseError(const std::string& message, int line = 0, int column = 0);

    int line() const { return line_; }
    int column() const { return column_; }
    const std::string& bare_message() const { return bare_; }

private:
    std::string bare_;
    int line_;
    int column_;
};

// A structurally invalid presentation or element (wrong degree, unknown
// generator, violated precondition).
class ValidationError : public Error
{
public:
    using Error::Error;
};

// A computed object failed one of its self-checks.
class VerificationError : public Error
{
public:
    using Error::Error;
};

}  // namespace loopcoh
