#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace qfc::csv {

/// Column-major numeric table. All columns have the same length.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> columns;

  std::size_t rows() const { return columns.empty() ? 0 : columns.front().size(); }
  void add(std::string name, std::vector<double> values);
  const std::vector<double>& column(const std::string& name) const;
};

/// 12 significant digits, LF line endings, header row.
std::string format_number(double v);
void write(std::ostream& out, const Table& table);
std::string to_string(const Table& table);
void write_file(const std::filesystem::path& path, const Table& table);

/// Numeric CSV with a header row. Throws DomainError on ragged or
/// non-numeric input.
Table parse(const std::string& text);
Table read_file(const std::filesystem::path& path);

}  // namespace qfc::csv
