#include "fracosc/csv.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include "fracosc/types.hpp"

namespace fracosc {

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                 std::chars_format::general, 17);
  return {buf.data(), res.ptr};
}

void CsvTable::add_row(std::vector<std::string> row) {
  if (row.size() != header.size()) throw DomainError("CSV row width does not match the header");
  rows.push_back(std::move(row));
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open '" + tmp.string() + "' for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw std::runtime_error("write to '" + tmp.string() + "' failed");
  }
  std::filesystem::rename(tmp, path);
}

namespace {

std::string render(const CsvTable& t, char sep, std::string_view header_prefix) {
  std::string s(header_prefix);
  const auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) s += sep;
      s += cells[i];
    }
    s += '\n';
  };
  line(t.header);
  for (const auto& r : t.rows) line(r);
  return s;
}

}  // namespace

void write_csv(const std::filesystem::path& path, const CsvTable& table) {
  write_file_atomic(path, render(table, ',', ""));
}

void write_dat(const std::filesystem::path& path, const CsvTable& table) {
  write_file_atomic(path, render(table, ' ', "# "));
}

}  // namespace fracosc
