#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace mfising {

/// Empty cell (masked surface point, missing value).
struct Blank {};

using Cell = std::variant<Blank, double, std::int64_t, std::string>;

/// Column-headed rows, serialized as CSV or as a JSON array of flat objects
/// keyed by the column names.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
};

enum class OutputFormat { Csv, Json };

/// 17 significant digits, enough to round-trip any double.
std::string format_double(double v);

void write_csv(const Table& t, std::ostream& out);
void write_json(const Table& t, std::ostream& out);
void write_table(const Table& t, OutputFormat format, std::ostream& out);

}  // namespace mfising
