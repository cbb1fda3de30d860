#include "mfising/table.hpp"

#include <cstdio>
#include <stdexcept>

#include "json.hpp"

namespace mfising {

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) {
    throw std::logic_error("Table::add_row: row width does not match the header");
  }
  rows.push_back(std::move(row));
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

struct CsvCell {
  std::string operator()(Blank) const { return {}; }
  std::string operator()(double v) const { return format_double(v); }
  std::string operator()(std::int64_t v) const { return std::to_string(v); }
  std::string operator()(const std::string& v) const { return v; }
};

struct JsonCell {
  nlohmann::ordered_json operator()(Blank) const { return nullptr; }
  nlohmann::ordered_json operator()(double v) const { return v; }
  nlohmann::ordered_json operator()(std::int64_t v) const { return v; }
  nlohmann::ordered_json operator()(const std::string& v) const { return v; }
};

}  // namespace

void write_csv(const Table& t, std::ostream& out) {
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    out << (i ? "," : "") << t.columns[i];
  }
  out << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << (i ? "," : "") << std::visit(CsvCell{}, row[i]);
    }
    out << '\n';
  }
}

void write_json(const Table& t, std::ostream& out) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      obj[t.columns[i]] = std::visit(JsonCell{}, row[i]);
    }
    arr.push_back(std::move(obj));
  }
  out << arr.dump(2) << '\n';
}

void write_table(const Table& t, OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::Json) {
    write_json(t, out);
  } else {
    write_csv(t, out);
  }
}

}  // namespace mfising
