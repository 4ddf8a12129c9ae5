#include "qfc/csv.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "qfc/error.hpp"

namespace qfc::csv {

void Table::add(std::string name, std::vector<double> values) {
  if (!columns.empty() && values.size() != rows()) {
    throw DomainError("csv: column `" + name + "` has " + std::to_string(values.size()) +
                      " rows, expected " + std::to_string(rows()));
  }
  header.push_back(std::move(name));
  columns.push_back(std::move(values));
}

const std::vector<double>& Table::column(const std::string& name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return columns[i];
  }
  throw DomainError("csv: no column `" + name + "`");
}

std::string format_number(double v) {
  char buf[32];
  const int n = std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::string(buf, static_cast<std::size_t>(n));
}

void write(std::ostream& out, const Table& table) {
  for (std::size_t c = 0; c < table.header.size(); ++c) {
    if (c) out << ',';
    out << table.header[c];
  }
  out << '\n';
  for (std::size_t r = 0; r < table.rows(); ++r) {
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      if (c) out << ',';
      out << format_number(table.columns[c][r]);
    }
    out << '\n';
  }
}

std::string to_string(const Table& table) {
  std::ostringstream out;
  write(out, table);
  return out.str();
}

void write_file(const std::filesystem::path& path, const Table& table) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("csv: cannot open `" + path.string() + "` for writing");
  write(out, table);
  if (!out) throw DomainError("csv: write to `" + path.string() + "` failed");
}

namespace {

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  for (;;) {
    const auto comma = line.find(',', start);
    cells.push_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return cells;
}

}  // namespace

Table parse(const std::string& text) {
  Table t;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto cells = split(line);
    if (t.header.empty()) {
      for (auto c : cells) t.header.emplace_back(c);
      t.columns.resize(cells.size());
      continue;
    }
    if (cells.size() != t.header.size()) {
      throw DomainError("csv: line " + std::to_string(line_no) + " has " +
                        std::to_string(cells.size()) + " cells, expected " +
                        std::to_string(t.header.size()));
    }
    for (std::size_t c = 0; c < cells.size(); ++c) {
      double v = 0;
      const auto [ptr, ec] = std::from_chars(cells[c].data(), cells[c].data() + cells[c].size(), v);
      if (ec != std::errc{} || ptr != cells[c].data() + cells[c].size()) {
        throw DomainError("csv: line " + std::to_string(line_no) + ": `" + std::string(cells[c]) +
                          "` is not a number");
      }
      t.columns[c].push_back(v);
    }
  }
  return t;
}

Table read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("csv: cannot open `" + path.string() + "`");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

}  // namespace qfc::csv
