#pragma once

#include <string>
#include <vector>

namespace majorkit::cli {

// "1,2.5,3" -> {1, 2.5, 3}; whitespace around entries is ignored.
std::vector<double> parse_list(const std::string& text, const std::string& what);
std::vector<long> parse_integer_list(const std::string& text, const std::string& what);

// Rows of comma-separated numbers. Empty lines and lines starting with '#'
// are skipped; a first row that does not parse as numbers is a header.
// Blank cells become NaN (used for ignored matrix diagonals).
std::vector<std::vector<double>> read_csv(const std::string& path);

// A one-column CSV, or a single row, as a vector.
std::vector<double> read_vector_file(const std::string& path);

// Rows separated by ';' inline: "0.5,0.6;0.4,0.5".
std::vector<std::vector<double>> parse_matrix(const std::string& text);

std::string read_text_file(const std::string& path);

}  // namespace majorkit::cli
