#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "simstat/errors.hpp"
#include "simstat/funcs.hpp"
#include "simstat/notation/ast.hpp"
#include "simstat/numvec.hpp"
#include "simstat/variate.hpp"

namespace simstat::notation {

class Environment;

struct Closure {
  std::string param;
  ExprPtr body;
  std::shared_ptr<const Environment> env;
};

using Value = std::variant<double, bool, NumVector, RealSet, RangeSpec, Distribution, Closure>;

/// "real", "boolean", "vector", "set", "range", "distribution" or "function".
std::string_view kind_of(const Value& v);

/// Printed form used by the REPL and `eval`: reals via format_real, vectors
/// comma-joined, sets braced in ascending order, booleans as true/false.
std::string format_value(const Value& v);

/// Immutable name → value map; `bind` returns a new environment.
class Environment {
 public:
  Environment() = default;

  [[nodiscard]] Environment bind(const std::string& name, Value value) const;
  [[nodiscard]] const Value* find(const std::string& name) const;
  [[nodiscard]] bool contains(const std::string& name) const { return find(name) != nullptr; }
  [[nodiscard]] std::size_t size() const { return bindings_ ? bindings_->size() : 0; }

 private:
  std::shared_ptr<const std::map<std::string, Value>> bindings_;
};

/// Evaluation failure with the code-point offset of the offending node.
class EvalError : public Error {
 public:
  EvalError(const std::string& what, std::size_t offset) : Error(what), offset_(offset) {}
  [[nodiscard]] std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class TypeMismatchError : public EvalError {
 public:
  using EvalError::EvalError;
};

class UnboundIdentifierError : public EvalError {
 public:
  using EvalError::EvalError;
};

Value evaluate(const Expr& e, const Environment& env);
/// Tokenize, parse and evaluate.
Value evaluate(std::string_view text, const Environment& env);

/// A failure inside evalProgram; `line` is 1-based.
class ProgramError : public Error {
 public:
  ProgramError(const std::string& what, std::size_t line, bool parse_failure)
      : Error(what), line_(line), parse_failure_(parse_failure) {}
  [[nodiscard]] std::size_t line() const noexcept { return line_; }
  [[nodiscard]] bool parse_failure() const noexcept { return parse_failure_; }

 private:
  std::size_t line_;
  bool parse_failure_;
};

struct ProgramResult {
  Environment env;
  std::vector<std::string> outputs;
};

/// Runs one statement per line. `name = expr` (optionally prefixed by `val`)
/// binds; a bare expression appends its printed value. Blank and comment-only
/// lines are skipped.
ProgramResult eval_program(std::string_view lines, const Environment& env = {});

}  // namespace simstat::notation
