#pragma once

#include "tgv/errors.hpp"
#include "tgv/matrix.hpp"

#include <string>
#include <vector>

namespace tgv {

/// In-memory CSV table: header row + string cells. Values are parsed on
/// demand. Cells may not contain commas or newlines (no quoting support).
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  std::size_t n_rows() const { return rows.size(); }
  /// Index of a column, or throws UnknownAttribute.
  std::size_t column_index(const std::string& name) const;
  bool has_column(const std::string& name) const;
};

Table read_csv(const std::string& path);
void write_csv(const std::string& path, const Table& table);

/// Parse one column as finite doubles; throws NonFiniteValue on bad cells.
Vector numeric_column(const Table& table, const std::string& name);

/// Format a double with enough digits for an exact round trip.
std::string format_double(double value);

}  // namespace tgv
