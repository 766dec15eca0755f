#pragma once

// Line-oriented text format for presentations (.ualg):
//
//   # comment
//   algebra BSpin7
//   meta source = table
//   generator w4 : 4
//   generator y3 : 3 derived
//   sq 2 w4 = w6
//   relation y5^2 = y3^2*v4 + y3*v7
//   loopname e8 : f8 z7
//
// Generators need not be declared before use: every other line may
// refer to any generator in the file. sq lines with k >= |g| are accepted
// when they agree with instability and are not stored.

#include <string>
#include <string_view>
#include <vector>

#include "loopcoh/loop.hpp"
#include "loopcoh/presentation.hpp"

namespace loopcoh {

// Throws ParseError with a line and column on any malformed or
// inconsistent line, and "no generators" for a file with no content.
Presentation parse_presentation(std::string_view text);

// Canonical .ualg text; parse_presentation(format_presentation(p)) == p.
std::string format_presentation(const Presentation& p);

// The derived presentation as .ualg text, followed by comment lines for
// sigma, the eliminated generators and the ideal members lead + tail.
std::string format_loop_presentation(const LoopPresentation& L);

// One message per table entry that was omitted and defaulted to zero.
std::vector<std::string> lint_defaults(const Presentation& p);

}  // namespace loopcoh
