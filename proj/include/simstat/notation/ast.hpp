#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace simstat::notation {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Literal {
  double value = 0.0;
};
struct Ident {
  std::string name;
};
struct Prefix {
  std::string op;  // "−" or "¬"
  ExprPtr operand;
};
struct Infix {
  std::string op;
  ExprPtr lhs;
  ExprPtr rhs;
};
struct Postfix {
  std::string op;  // "!"
  ExprPtr operand;
};
struct Call {
  std::string name;
  std::vector<ExprPtr> args;
};
struct Lambda {
  std::string param;
  ExprPtr body;
};
struct RangeExpr {
  std::string op;  // "to", "until" or "…"
  ExprPtr lo;
  ExprPtr hi;
  [[nodiscard]] bool inclusive() const { return op != "until"; }
};
struct SetLiteral {
  std::vector<ExprPtr> elements;
};

using ExprNode = std::variant<Literal, Ident, Prefix, Infix, Postfix, Call, Lambda, RangeExpr, SetLiteral>;

struct Expr {
  ExprNode node;
  std::size_t offset = 0;  // code-point offset of the first token
};

template <typename Node>
ExprPtr make_expr(Node node, std::size_t offset = 0) {
  return std::make_shared<const Expr>(Expr{ExprNode{std::move(node)}, offset});
}

/// Structural equality; offsets are ignored.
bool same_structure(const Expr& a, const Expr& b);

/// Binding strength of the node's outermost construct (higher binds tighter).
int precedence_of(const Expr& e);

/// Canonical Unicode text with the minimal parentheses needed to reparse to
/// the same tree. Literals print in shortest round-trip fixed notation.
std::string to_text(const Expr& e);

}  // namespace simstat::notation
