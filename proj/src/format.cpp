#include "simstat/format.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace simstat {

namespace {

void trim_fraction(std::string& s) {
  if (s.find('.') == std::string::npos) return;
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
}

}  // namespace

std::string format_real(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == 0.0) return "0";

  char buf[64];
  int digits = 15;
  for (int p = 1; p <= 15; ++p) {
    std::snprintf(buf, sizeof buf, "%.*e", p - 1, x);
    if (std::strtod(buf, nullptr) == x) {
      digits = p;
      break;
    }
  }
  std::snprintf(buf, sizeof buf, "%.*e", digits - 1, x);
  const char* e = buf;
  while (*e != 'e') ++e;
  const int exponent = std::atoi(e + 1);

  if (exponent >= -7 && exponent < 16) {
    const int decimals = digits - 1 - exponent > 0 ? digits - 1 - exponent : 0;
    std::snprintf(buf, sizeof buf, "%.*f", decimals, x);
    std::string out(buf);
    trim_fraction(out);
    return out;
  }
  std::string mantissa(static_cast<const char*>(buf), e);
  trim_fraction(mantissa);
  return mantissa + "e" + std::to_string(exponent);
}

}  // namespace simstat
