#pragma once

// Random expression trees for print/re-parse round trips.

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "simstat/notation/ast.hpp"
#include "simstat/rng.hpp"

namespace testgen {

using namespace simstat::notation;

class ExprGenerator {
 public:
  explicit ExprGenerator(std::uint64_t seed) : rng_(seed) {}

  ExprPtr next(int depth = 5) { return node(depth); }

 private:
  static constexpr std::array<std::string_view, 23> kInfix = {
      "↑", "↓", "⇑", "⇓", "*", "/", "%", "⋅", "+", "−", "=", "≠",
      "<", ">", "≤", "≥", "∈", "∉", "⊆", "∩", "∪", "∧", "∨"};
  static constexpr std::array<std::string_view, 6> kNames = {"a", "b", "x", "y", "μ", "σ2"};
  static constexpr std::array<std::string_view, 4> kCallees = {"f", "g", "Σ", "∏"};
  static constexpr std::array<std::string_view, 3> kRanges = {"to", "until", "…"};

  std::size_t pick(std::size_t n) { return static_cast<std::size_t>(rng_.next_uniform() * static_cast<double>(n)); }

  ExprPtr leaf() {
    if (pick(2) == 0) {
      // integers and short decimals, never negative
      const double v = pick(2) == 0 ? static_cast<double>(pick(100)) : static_cast<double>(pick(10000)) / 100.0;
      return make_expr(Literal{v});
    }
    return make_expr(Ident{std::string(kNames[pick(kNames.size())])});
  }

  ExprPtr node(int depth) {
    if (depth <= 0) return leaf();
    const int d = depth - 1;
    switch (pick(12)) {
      case 0:
        return leaf();
      case 1:
        return make_expr(Prefix{pick(2) == 0 ? "−" : "¬", node(d)});
      case 2:
        return make_expr(Postfix{"!", node(d)});
      case 3: {
        std::vector<ExprPtr> args;
        const auto n = 1 + pick(3);
        for (std::size_t i = 0; i < n; ++i) args.push_back(node(d));
        return make_expr(Call{std::string(kCallees[pick(kCallees.size())]), std::move(args)});
      }
      case 4:
        return make_expr(Lambda{std::string(kNames[pick(4)]), node(d)});
      case 5:
        return make_expr(RangeExpr{std::string(kRanges[pick(kRanges.size())]), node(d), node(d)});
      case 6: {
        std::vector<ExprPtr> elems;
        const auto n = 1 + pick(3);
        for (std::size_t i = 0; i < n; ++i) elems.push_back(node(d));
        return make_expr(SetLiteral{std::move(elems)});
      }
      default:
        return make_expr(Infix{std::string(kInfix[pick(kInfix.size())]), node(d), node(d)});
    }
  }

  simstat::RandomStream rng_;
};

}  // namespace testgen
