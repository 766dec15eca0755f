#include "loopcoh/error.hpp"

namespace loopcoh {

ParseError::ParseError(const std::string& message, int line, int column)
    : Error(line > 0 ? std::to_string(line) + ":" + std::to_string(column) + ": " + message : message),
      bare_(message),
      line_(line),
      column_(column)
{
}

}  // namespace loopcoh
