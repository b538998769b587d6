#include "simstat/csv.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <string_view>

namespace simstat {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_field(std::string_view field, std::size_t line) {
  if (field.empty()) throw CsvError("line " + std::to_string(line) + ": empty field", line);
  std::string_view digits = field;
  if (digits.front() == '+') digits.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || !std::isfinite(value)) {
    throw CsvError("line " + std::to_string(line) + ": not a finite number: '" + std::string(field) + "'", line);
  }
  return value;
}

}  // namespace

std::vector<std::vector<double>> read_csv_rows(std::istream& in) {
  std::vector<std::vector<double>> rows;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    std::string_view view = trim(text);
    if (line == 1 && view.starts_with("\xEF\xBB\xBF")) view = trim(view.substr(3));
    if (view.empty()) continue;
    std::vector<double> row;
    for (;;) {
      const auto comma = view.find(',');
      row.push_back(parse_field(trim(view.substr(0, comma)), line));
      if (comma == std::string_view::npos) break;
      view = view.substr(comma + 1);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<std::vector<double>> read_csv_rows_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CsvError("cannot open '" + path + "'", 0);
  return read_csv_rows(in);
}

NumVector read_csv_values(std::istream& in) {
  std::vector<double> values;
  for (const auto& row : read_csv_rows(in)) values.insert(values.end(), row.begin(), row.end());
  return NumVector(std::move(values));
}

NumVector read_csv_values_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CsvError("cannot open '" + path + "'", 0);
  return read_csv_values(in);
}

}  // namespace simstat
