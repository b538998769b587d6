#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "simstat/errors.hpp"

namespace simstat::notation {

enum class TokenKind { Number, Identifier, Operator, Punctuation, LambdaArrow, End };

/// `text` is canonical: ASCII fallbacks are rewritten to their Unicode form
/// (`^` → `↑`, `<=` → `≤`, `sum(` → `Σ(`, ...). `lexeme` is the source spelling.
/// `offset` counts code points from the start of the input.
struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;
  std::string lexeme;
  std::size_t offset = 0;
};

/// Lexical or syntax error at a code-point offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset) : Error(what), offset_(offset) {}
  [[nodiscard]] std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Splits UTF-8 text into tokens, always terminated by an End token.
/// `//` starts a comment running to the end of the line.
std::vector<Token> tokenize(std::string_view input);

}  // namespace simstat::notation
