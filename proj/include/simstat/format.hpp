#pragma once

#include <string>

namespace simstat {

/// Shortest decimal (at most 15 significant digits) that reads back as `x`;
/// falls back to 15 significant digits. Trailing zeros are trimmed.
std::string format_real(double x);

}  // namespace simstat
