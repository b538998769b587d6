#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "simstat/notation/ast.hpp"
#include "simstat/notation/lexer.hpp"

namespace simstat::notation {

enum class Assoc { Left, Right, None };

struct OperatorInfo {
  int level;
  Assoc assoc;
};

namespace level {
inline constexpr int kLambda = -1;
inline constexpr int kOr = 0;
inline constexpr int kAnd = 1;
inline constexpr int kUnion = 2;
inline constexpr int kIntersect = 3;
inline constexpr int kNot = 4;
inline constexpr int kCompare = 5;
inline constexpr int kRange = 6;
inline constexpr int kAdditive = 7;
inline constexpr int kMultiplicative = 8;
inline constexpr int kNegate = 9;
inline constexpr int kFactorial = 10;  // ⇑ ⇓
inline constexpr int kPower = 11;      // ↑ ↓
inline constexpr int kPostfix = 12;
inline constexpr int kPrimary = 13;
}  // namespace level

/// Binary operator table keyed by canonical spelling.
std::optional<OperatorInfo> binary_operator(std::string_view op);

ExprPtr parse(const std::vector<Token>& tokens);
ExprPtr parse(std::string_view text);

}  // namespace simstat::notation
