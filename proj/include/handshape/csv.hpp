#pragma once

#include <fstream>
#include <string>
#include <string_view>
#include <vector>

namespace handshape {

/// Open a file for reading/writing, throwing FileError on failure.
std::ifstream open_input_file(const std::string& path);
std::ofstream open_output_file(const std::string& path);

/// Split one CSV/TSV line on the delimiter. No quoting rules; a trailing
/// CR is stripped so CRLF input parses like LF.
std::vector<std::string> split_fields(std::string_view line, char delim = ',');

/// Shortest round-trip decimal representation of a double (locale-free).
std::string format_double(double value);

/// Strict numeric parsing; the whole field must be consumed and the value
/// finite. Throws MalformedRow with `context` in the message on failure.
double parse_double_field(std::string_view field, std::string_view context);
long long parse_int_field(std::string_view field, std::string_view context);

/// Read the next line, returning false at EOF. Strips a trailing CR.
bool read_line(std::istream& in, std::string& line);

}  // namespace handshape
