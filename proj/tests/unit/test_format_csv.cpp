#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>

#include "simstat/csv.hpp"
#include "simstat/format.hpp"
#include "simstat/rng.hpp"

using namespace simstat;

TEST_CASE("format_real picks the shortest form") {
  CHECK(format_real(0) == "0");
  CHECK(format_real(840) == "840");
  CHECK(format_real(10) == "10");
  CHECK(format_real(2.5) == "2.5");
  CHECK(format_real(-4) == "-4");
  CHECK(format_real(0.1) == "0.1");
  CHECK(format_real(1.0 / 3.0) == "0.333333333333333");
  CHECK(format_real(1e-9) == "1e-9");
  CHECK(format_real(1e20) == "1e20");
  CHECK(format_real(-2.5e-8) == "-2.5e-8");
}

TEST_CASE("format_real reads back within 15 digits") {
  RandomStream s(6);
  for (int i = 0; i < 2000; ++i) {
    const double x = (s.next_uniform() - 0.5) * std::pow(10.0, 20 * s.next_uniform() - 10);
    const double back = std::strtod(format_real(x).c_str(), nullptr);
    CHECK(std::abs(back - x) <= 1e-14 * std::abs(x));
  }
}

TEST_CASE("csv rows") {
  std::istringstream in("1, 2,3\r\n\n4e0,5,-6.5\n");
  const auto rows = read_csv_rows(in);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == std::vector<double>{1, 2, 3});
  CHECK(rows[1] == std::vector<double>{4, 5, -6.5});
}

TEST_CASE("csv values flatten rows") {
  std::istringstream in("1,2\n3\n");
  CHECK(read_csv_values(in) == NumVector{1, 2, 3});
}

TEST_CASE("csv errors carry the line") {
  std::istringstream in("1,2\nabc\n");
  try {
    (void)read_csv_rows(in);
    FAIL("expected CsvError");
  } catch (const CsvError& e) {
    CHECK(e.line() == 2);
  }
  std::istringstream bad_inf("1,inf\n");
  CHECK_THROWS_AS((void)read_csv_rows(bad_inf), CsvError);
  std::istringstream empty_field("1,,2\n");
  CHECK_THROWS_AS((void)read_csv_rows(empty_field), CsvError);
  CHECK_THROWS((void)read_csv_rows_file("/nonexistent/file.csv"));
}
