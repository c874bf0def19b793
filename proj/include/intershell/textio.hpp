#ifndef INTERSHELL_TEXTIO_HPP
#define INTERSHELL_TEXTIO_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace intershell {

// Shortest round-trip decimal form, dot separator, locale independent.
std::string format_double(double v);

std::vector<std::string> split_csv_line(const std::string& line);

// Strict parsers: whole-string match or ParseError naming `what` and `line`.
long long parse_int_field(const std::string& s, const std::string& what, int line = 0);
double parse_double_field(const std::string& s, const std::string& what, int line = 0);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

// FNV-1a over raw bytes; campaign manifests use it to pin external traces.
std::uint64_t fnv1a_hash(const std::string& bytes);

}  // namespace intershell

#endif
