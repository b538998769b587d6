#include "simstat/notation/ast.hpp"

#include <charconv>
#include <cmath>
#include <type_traits>

#include "simstat/notation/parser.hpp"

namespace simstat::notation {

namespace {

bool same(const ExprPtr& a, const ExprPtr& b) {
  if (!a || !b) return a == b;
  return same_structure(*a, *b);
}

bool same(const std::vector<ExprPtr>& a, const std::vector<ExprPtr>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!same(a[i], b[i])) return false;
  }
  return true;
}

std::string literal_text(double v) {
  if (v == 0.0) return "0";
  char buf[512];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed);
  return std::string(buf, res.ptr);
}

// Text of `child`, parenthesized when it binds looser than `required`.
std::string operand(const Expr& child, int required) {
  const std::string text = to_text(child);
  return precedence_of(child) < required ? "(" + text + ")" : text;
}

std::string joined(const std::vector<ExprPtr>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ", ";
    out += to_text(*items[i]);
  }
  return out;
}

}  // namespace

bool same_structure(const Expr& a, const Expr& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const auto& y = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, Literal>) {
          return x.value == y.value;
        } else if constexpr (std::is_same_v<T, Ident>) {
          return x.name == y.name;
        } else if constexpr (std::is_same_v<T, Prefix> || std::is_same_v<T, Postfix>) {
          return x.op == y.op && same(x.operand, y.operand);
        } else if constexpr (std::is_same_v<T, Infix>) {
          return x.op == y.op && same(x.lhs, y.lhs) && same(x.rhs, y.rhs);
        } else if constexpr (std::is_same_v<T, Call>) {
          return x.name == y.name && same(x.args, y.args);
        } else if constexpr (std::is_same_v<T, Lambda>) {
          return x.param == y.param && same(x.body, y.body);
        } else if constexpr (std::is_same_v<T, RangeExpr>) {
          return x.op == y.op && same(x.lo, y.lo) && same(x.hi, y.hi);
        } else {
          return same(x.elements, y.elements);
        }
      },
      a.node);
}

int precedence_of(const Expr& e) {
  return std::visit(
      [](const auto& x) -> int {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Prefix>) {
          return x.op == "¬" ? level::kNot : level::kNegate;
        } else if constexpr (std::is_same_v<T, Infix>) {
          return binary_operator(x.op).value().level;
        } else if constexpr (std::is_same_v<T, Postfix>) {
          return level::kPostfix;
        } else if constexpr (std::is_same_v<T, Lambda>) {
          return level::kLambda;
        } else if constexpr (std::is_same_v<T, RangeExpr>) {
          return level::kRange;
        } else {
          return level::kPrimary;
        }
      },
      e.node);
}

std::string to_text(const Expr& e) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Literal>) {
          return literal_text(x.value);
        } else if constexpr (std::is_same_v<T, Ident>) {
          return x.name;
        } else if constexpr (std::is_same_v<T, Prefix>) {
          const int required = x.op == "¬" ? level::kCompare : level::kFactorial;
          return x.op + operand(*x.operand, required);
        } else if constexpr (std::is_same_v<T, Postfix>) {
          return operand(*x.operand, level::kPostfix) + x.op;
        } else if constexpr (std::is_same_v<T, Infix>) {
          const auto info = binary_operator(x.op).value();
          const int left = info.assoc == Assoc::Left ? info.level : info.level + 1;
          const int right = info.assoc == Assoc::Right ? info.level : info.level + 1;
          return operand(*x.lhs, left) + " " + x.op + " " + operand(*x.rhs, right);
        } else if constexpr (std::is_same_v<T, Call>) {
          return x.name + "(" + joined(x.args) + ")";
        } else if constexpr (std::is_same_v<T, Lambda>) {
          return x.param + " ⇒ " + operand(*x.body, level::kLambda);
        } else if constexpr (std::is_same_v<T, RangeExpr>) {
          return operand(*x.lo, level::kRange + 1) + " " + x.op + " " + operand(*x.hi, level::kRange + 1);
        } else {
          return "{" + joined(x.elements) + "}";
        }
      },
      e.node);
}

}  // namespace simstat::notation
