#include "minimax/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace minimax::io {

void parse_error(std::size_t line_number, const std::string& message) {
  std::ostringstream os;
  os << "ParseError: line " << line_number << ": " << message;
  throw Error(ErrorCode::ParseError, os.str());
}

std::vector<NumberedLine> content_lines(std::istream& in) {
  std::vector<NumberedLine> lines;
  std::string text;
  std::size_t number = 0;
  while (std::getline(in, text)) {
    ++number;
    if (text.empty() || text.front() == '#') continue;
    lines.push_back({number, text});
  }
  return lines;
}

std::vector<Weight> parse_decimals(std::string_view text, std::size_t line_number) {
  std::vector<Weight> values;
  std::size_t pos = 0;
  while (true) {
    const std::size_t end = std::min(text.find(' ', pos), text.size());
    const std::string_view token = text.substr(pos, end - pos);
    if (token.empty()) parse_error(line_number, "expected a decimal (fields are separated by one space)");
    std::string_view digits = token;
    if (digits.front() == '-') digits.remove_prefix(1);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos)
      parse_error(line_number, "'" + std::string(token) + "' is not a decimal integer");
    Weight value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
      parse_error(line_number, "'" + std::string(token) + "' is out of range");
    values.push_back(value);
    if (end == text.size()) break;
    pos = end + 1;
  }
  return values;
}

namespace {

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open '" + path + "'");
  return in;
}

}  // namespace

Instance read_instance(std::istream& in) {
  const auto lines = content_lines(in);
  if (lines.empty()) parse_error(1, "missing header 'T B'");
  const auto header = parse_decimals(lines[0].text, lines[0].number);
  if (header.size() != 2) parse_error(lines[0].number, "header must be 'T B'");
  if (header[0] < 1 || header[1] < 1) parse_error(lines[0].number, "T and B must be at least 1");
  const auto sets = static_cast<std::size_t>(header[0]);
  if (lines.size() - 1 != sets) {
    std::ostringstream os;
    os << "header declares " << sets << " sets but " << lines.size() - 1 << " rows follow";
    throw Error(ErrorCode::DimensionMismatch, "DimensionMismatch: " + os.str());
  }
  const auto groups = static_cast<std::size_t>(header[1]);
  std::vector<std::vector<Weight>> rows;
  rows.reserve(sets);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    rows.push_back(parse_decimals(lines[i].text, lines[i].number));
    if (rows.back().size() != groups) {
      std::ostringstream os;
      os << "DimensionMismatch: line " << lines[i].number << " has " << rows.back().size()
         << " items, header declares B=" << groups;
      throw Error(ErrorCode::DimensionMismatch, os.str());
    }
  }
  return Instance::from_rows(rows);
}

Instance read_instance_file(const std::string& path) {
  auto in = open_or_throw(path);
  return read_instance(in);
}

void write_instance(std::ostream& out, const Instance& instance) {
  out << instance.sets() << ' ' << instance.groups() << '\n';
  for (std::size_t t = 0; t < instance.sets(); ++t) {
    for (std::size_t b = 0; b < instance.groups(); ++b) {
      if (b) out << ' ';
      out << instance.at(t, b);
    }
    out << '\n';
  }
}

Assignment read_assignment(std::istream& in) {
  const auto lines = content_lines(in);
  if (lines.empty()) parse_error(1, "empty assignment");
  std::vector<std::vector<std::size_t>> rows;
  for (const auto& line : lines) {
    std::vector<std::size_t> row;
    for (Weight g : parse_decimals(line.text, line.number)) {
      if (g < 1) parse_error(line.number, "groups are numbered from 1");
      row.push_back(static_cast<std::size_t>(g - 1));
    }
    rows.push_back(std::move(row));
  }
  return Assignment::from_rows(rows);
}

Assignment read_assignment_file(const std::string& path) {
  auto in = open_or_throw(path);
  return read_assignment(in);
}

void write_assignment(std::ostream& out, const Assignment& assignment) {
  for (std::size_t t = 0; t < assignment.sets(); ++t) {
    for (std::size_t b = 0; b < assignment.groups(); ++b) {
      if (b) out << ' ';
      out << assignment.group_of(t, b) + 1;
    }
    out << '\n';
  }
}

}  // namespace minimax::io
