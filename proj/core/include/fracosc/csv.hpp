#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace fracosc {

/// Shortest-looking round-trip text: %.17g semantics via std::to_chars.
std::string format_number(double v);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void add_row(std::vector<std::string> row);
};

/// Comma-separated, LF line endings. Writes to a sibling temporary file and
/// renames it into place.
void write_csv(const std::filesystem::path& path, const CsvTable& table);

/// gnuplot-style: "# col1 col2 ..." header, space-separated columns.
void write_dat(const std::filesystem::path& path, const CsvTable& table);

/// Writes `content` atomically (temporary file plus rename).
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace fracosc
