#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "minimax/model.hpp"

namespace minimax::io {

// Instance text format:
//   line 1:       "T B"
//   lines 2..T+1: B non-negative decimals separated by single spaces
// Lines starting with '#' are comments and blank lines are skipped. The
// writer emits exactly this layout with a trailing newline.
Instance read_instance(std::istream& in);
Instance read_instance_file(const std::string& path);
void write_instance(std::ostream& out, const Instance& instance);

// Assignment text format: T lines of B decimals; entry b of line t is the
// 1-based group receiving item b of set t. Comments as above.
Assignment read_assignment(std::istream& in);
Assignment read_assignment_file(const std::string& path);
void write_assignment(std::ostream& out, const Assignment& assignment);

// Non-comment, non-blank lines of a stream, each tagged with its 1-based
// line number.
struct NumberedLine {
  std::size_t number = 0;
  std::string text;
};
std::vector<NumberedLine> content_lines(std::istream& in);

// Splits a line of decimals separated by single spaces. A leading '-' is
// accepted so that negative weights surface as NegativeWeight, not as
// a parse failure.
std::vector<Weight> parse_decimals(std::string_view text, std::size_t line_number);

[[noreturn]] void parse_error(std::size_t line_number, const std::string& message);

}  // namespace minimax::io
