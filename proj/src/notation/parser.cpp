#include "simstat/notation/parser.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <string>
#include <utility>

namespace simstat::notation {

namespace {

constexpr std::array<std::pair<std::string_view, OperatorInfo>, 23> kBinary = {{
    {"↑", {level::kPower, Assoc::Left}},
    {"↓", {level::kPower, Assoc::Left}},
    {"⇑", {level::kFactorial, Assoc::Left}},
    {"⇓", {level::kFactorial, Assoc::Left}},
    {"*", {level::kMultiplicative, Assoc::Left}},
    {"/", {level::kMultiplicative, Assoc::Left}},
    {"%", {level::kMultiplicative, Assoc::Left}},
    {"⋅", {level::kMultiplicative, Assoc::Left}},
    {"+", {level::kAdditive, Assoc::Left}},
    {"−", {level::kAdditive, Assoc::Left}},
    {"=", {level::kCompare, Assoc::None}},
    {"≠", {level::kCompare, Assoc::None}},
    {"<", {level::kCompare, Assoc::None}},
    {">", {level::kCompare, Assoc::None}},
    {"≤", {level::kCompare, Assoc::None}},
    {"≥", {level::kCompare, Assoc::None}},
    {"∈", {level::kCompare, Assoc::None}},
    {"∉", {level::kCompare, Assoc::None}},
    {"⊆", {level::kCompare, Assoc::None}},
    {"∩", {level::kIntersect, Assoc::Left}},
    {"∪", {level::kUnion, Assoc::Left}},
    {"∧", {level::kAnd, Assoc::Left}},
    {"∨", {level::kOr, Assoc::Left}},
}};

bool is_range_op(const Token& t) {
  return t.kind == TokenKind::Operator && (t.text == "to" || t.text == "until" || t.text == "…");
}

// True if `_` occurs free in `e`; nested lambdas and call arguments are already closed.
bool has_placeholder(const Expr& e) {
  if (const auto* id = std::get_if<Ident>(&e.node)) return id->name == "_";
  if (const auto* p = std::get_if<Prefix>(&e.node)) return has_placeholder(*p->operand);
  if (const auto* p = std::get_if<Postfix>(&e.node)) return has_placeholder(*p->operand);
  if (const auto* in = std::get_if<Infix>(&e.node)) return has_placeholder(*in->lhs) || has_placeholder(*in->rhs);
  if (const auto* r = std::get_if<RangeExpr>(&e.node)) return has_placeholder(*r->lo) || has_placeholder(*r->hi);
  if (const auto* s = std::get_if<SetLiteral>(&e.node)) {
    for (const auto& el : s->elements) {
      if (has_placeholder(*el)) return true;
    }
  }
  return false;
}

std::string describe(const Token& t) {
  if (t.kind == TokenKind::End) return "end of input";
  return "'" + t.lexeme + "'";
}

class Parser {
 public:
  explicit Parser(const std::vector<Token>& tokens) : toks_(tokens) {}

  ExprPtr run() {
    auto e = expression(level::kLambda);
    if (peek().kind != TokenKind::End) fail("unexpected " + describe(peek()));
    return e;
  }

 private:
  [[nodiscard]] const Token& peek(std::size_t ahead = 0) const {
    const std::size_t i = std::min(pos_ + ahead, toks_.size() - 1);
    return toks_[i];
  }
  const Token& take() {
    const Token& t = peek();
    if (pos_ < toks_.size() - 1) ++pos_;
    return t;
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, peek().offset); }

  bool at_punct(std::string_view p) const { return peek().kind == TokenKind::Punctuation && peek().text == p; }

  void expect_punct(std::string_view p) {
    if (!at_punct(p)) fail("expected '" + std::string(p) + "' but found " + describe(peek()));
    take();
  }

  ExprPtr expression(int min_level) {
    ExprPtr lhs = unary();
    for (;;) {
      const Token& t = peek();
      if (t.kind != TokenKind::Operator) break;
      if (t.text == "!") {
        if (level::kPostfix < min_level) break;
        const auto off = take().offset;
        lhs = make_expr(Postfix{"!", lhs}, off);
        continue;
      }
      if (is_range_op(t)) {
        if (level::kRange < min_level) break;
        const auto op = take().text;
        auto hi = expression(level::kRange + 1);
        lhs = make_expr(RangeExpr{op, lhs, hi}, lhs->offset);
        if (is_range_op(peek())) fail("range operators are non-associative; add parentheses");
        continue;
      }
      const auto info = binary_operator(t.text);
      if (!info || info->level < min_level) break;
      const auto op = take().text;
      auto rhs = expression(info->assoc == Assoc::Right ? info->level : info->level + 1);
      lhs = make_expr(Infix{op, lhs, rhs}, lhs->offset);
      if (info->assoc == Assoc::None && peek().kind == TokenKind::Operator) {
        const auto next = binary_operator(peek().text);
        if (next && next->level == info->level) {
          fail("comparison operators are non-associative; add parentheses");
        }
      }
    }
    return lhs;
  }

  // A call argument; `_ > 2` abbreviates `_ ⇒ _ > 2`.
  ExprPtr argument() {
    auto arg = expression(level::kLambda);
    if (has_placeholder(*arg)) return make_expr(Lambda{"_", arg}, arg->offset);
    return arg;
  }

  ExprPtr unary() {
    const Token& t = peek();
    if (t.kind == TokenKind::Operator && (t.text == "−" || t.text == "¬")) {
      const auto op = t.text;
      const auto off = take().offset;
      auto operand = expression(op == "¬" ? level::kCompare : level::kFactorial);
      return make_expr(Prefix{op, operand}, off);
    }
    return primary();
  }

  ExprPtr primary() {
    const Token& t = peek();
    const auto off = t.offset;
    switch (t.kind) {
      case TokenKind::Number: {
        double v = 0.0;
        const auto& s = t.text;
        const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
        if (res.ec != std::errc{}) fail("numeric literal out of range: " + s);
        take();
        return make_expr(Literal{v}, off);
      }
      case TokenKind::Identifier: {
        const auto name = take().text;
        if (peek().kind == TokenKind::LambdaArrow) {
          take();
          return make_expr(Lambda{name, expression(level::kLambda)}, off);
        }
        if (at_punct("(")) {
          take();
          std::vector<ExprPtr> args;
          if (!at_punct(")")) {
            args.push_back(argument());
            while (at_punct(",")) {
              take();
              args.push_back(argument());
            }
          }
          expect_punct(")");
          return make_expr(Call{name, std::move(args)}, off);
        }
        if (at_punct("{")) return make_expr(Call{name, {primary()}}, off);
        return make_expr(Ident{name}, off);
      }
      case TokenKind::Punctuation:
        if (t.text == "(") {
          take();
          auto inner = expression(level::kLambda);
          expect_punct(")");
          return inner;
        }
        if (t.text == "{") {
          take();
          std::vector<ExprPtr> elems;
          if (!at_punct("}")) {
            elems.push_back(expression(level::kLambda));
            while (at_punct(",")) {
              take();
              elems.push_back(expression(level::kLambda));
            }
          }
          expect_punct("}");
          return make_expr(SetLiteral{std::move(elems)}, off);
        }
        break;
      default:
        break;
    }
    fail("unexpected " + describe(t));
  }

  const std::vector<Token>& toks_;
  std::size_t pos_ = 0;
};

}  // namespace

std::optional<OperatorInfo> binary_operator(std::string_view op) {
  for (const auto& [name, info] : kBinary) {
    if (name == op) return info;
  }
  return std::nullopt;
}

ExprPtr parse(const std::vector<Token>& tokens) {
  if (tokens.empty()) throw ParseError("unexpected end of input", 0);
  return Parser(tokens).run();
}

ExprPtr parse(std::string_view text) { return parse(tokenize(text)); }

}  // namespace simstat::notation
