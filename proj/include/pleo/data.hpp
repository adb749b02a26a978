#ifndef PLEO_DATA_HPP
#define PLEO_DATA_HPP

#include <string>
#include <string_view>
#include <vector>

namespace pleo {

// Contents of a file under data/, compiled into the library.  Throws
// std::out_of_range for unknown names.
std::string_view embedded_data(std::string_view name);
std::vector<std::string> embedded_data_names();

// Whole file as a string; throws std::runtime_error naming the path.
std::string read_file(const std::string& path);

// Non-empty lines with '#' comments and surrounding blanks removed.
std::vector<std::string> data_lines(std::string_view text);

// Whitespace split.
std::vector<std::string> split_ws(std::string_view line);
std::vector<std::string> split(std::string_view s, char sep);

std::string to_lower(std::string_view s);
std::string trim(std::string_view s);

}  // namespace pleo

#endif
