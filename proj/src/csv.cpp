#include "handshape/csv.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <string>
#include <system_error>

#include "handshape/errors.hpp"

namespace handshape {

std::ifstream open_input_file(const std::string& path) {
  std::ifstream in(path);
  if (!in.is_open()) throw FileError("cannot open input file: " + path);
  return in;
}

std::ofstream open_output_file(const std::string& path) {
  std::ofstream out(path);
  if (!out.is_open()) throw FileError("cannot open output file: " + path);
  return out;
}

std::vector<std::string> split_fields(std::string_view line, char delim) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  std::vector<std::string> fields;
  size_t start = 0;
  while (true) {
    const size_t pos = line.find(delim, start);
    if (pos == std::string_view::npos) {
      fields.emplace_back(line.substr(start));
      break;
    }
    fields.emplace_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return fields;
}

std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

double parse_double_field(std::string_view field, std::string_view context) {
  double value = 0.0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  const auto res = std::from_chars(first, last, value);
  if (res.ec != std::errc() || res.ptr != last || !std::isfinite(value)) {
    throw MalformedRow(std::string(context) + ": not a finite number: '" +
                       std::string(field) + "'");
  }
  return value;
}

long long parse_int_field(std::string_view field, std::string_view context) {
  long long value = 0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  const auto res = std::from_chars(first, last, value);
  if (res.ec != std::errc() || res.ptr != last) {
    throw MalformedRow(std::string(context) + ": not an integer: '" +
                       std::string(field) + "'");
  }
  return value;
}

bool read_line(std::istream& in, std::string& line) {
  if (!std::getline(in, line)) return false;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return true;
}

}  // namespace handshape
