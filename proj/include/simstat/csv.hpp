#pragma once

#include <cstddef>
#include <istream>
#include <string>
#include <vector>

#include "simstat/errors.hpp"
#include "simstat/numvec.hpp"

namespace simstat {

/// Malformed numeric CSV; `line()` is 1-based.
class CsvError : public Error {
 public:
  CsvError(const std::string& what, std::size_t line) : Error(what), line_(line) {}
  [[nodiscard]] std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Numeric CSV: comma separator, fields trimmed, scientific notation accepted,
/// LF or CRLF line endings, blank lines skipped. Headers are not allowed; every
/// field must be a finite real.
std::vector<std::vector<double>> read_csv_rows(std::istream& in);
std::vector<std::vector<double>> read_csv_rows_file(const std::string& path);

/// All fields of all rows, in reading order.
NumVector read_csv_values(std::istream& in);
NumVector read_csv_values_file(const std::string& path);

}  // namespace simstat
