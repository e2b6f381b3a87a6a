#include "tgv/csv.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace tgv {

std::size_t Table::column_index(const std::string& name) const {
  auto it = std::find(columns.begin(), columns.end(), name);
  require(it != columns.end(), "UnknownAttribute", "no column named '" + name + "'");
  return static_cast<std::size_t>(it - columns.begin());
}

bool Table::has_column(const std::string& name) const {
  return std::find(columns.begin(), columns.end(), name) != columns.end();
}

static std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::stringstream ss(line);
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

Table read_csv(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), "IoError", "cannot open '" + path + "'");
  Table table;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto cells = split_line(line);
    if (first) {
      table.columns = std::move(cells);
      first = false;
      continue;
    }
    require(cells.size() == table.columns.size(), "UnknownShape",
            path + ": row has " + std::to_string(cells.size()) + " cells, header has " +
                std::to_string(table.columns.size()));
    table.rows.push_back(std::move(cells));
  }
  require(!first, "IoError", path + ": empty file");
  return table;
}

void write_csv(const std::string& path, const Table& table) {
  std::ofstream out(path, std::ios::trunc);
  require(out.good(), "IoError", "cannot write '" + path + "'");
  for (std::size_t j = 0; j < table.columns.size(); ++j) {
    if (j) out << ',';
    out << table.columns[j];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out << ',';
      out << row[j];
    }
    out << '\n';
  }
  require(out.good(), "IoError", "failed writing '" + path + "'");
}

Vector numeric_column(const Table& table, const std::string& name) {
  const std::size_t idx = table.column_index(name);
  Vector values;
  values.reserve(table.n_rows());
  for (const auto& row : table.rows) {
    double v = 0.0;
    try {
      std::size_t consumed = 0;
      v = std::stod(row[idx], &consumed);
      require(consumed == row[idx].size(), "NonFiniteValue",
              "column '" + name + "': cannot parse '" + row[idx] + "'");
    } catch (const std::invalid_argument&) {
      fail("NonFiniteValue", "column '" + name + "': cannot parse '" + row[idx] + "'");
    } catch (const std::out_of_range&) {
      fail("NonFiniteValue", "column '" + name + "': value out of range");
    }
    require(std::isfinite(v), "NonFiniteValue", "column '" + name + "': non-finite value");
    values.push_back(v);
  }
  return values;
}

std::string format_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

}  // namespace tgv
