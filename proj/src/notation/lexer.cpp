#include "simstat/notation/lexer.hpp"

#include <array>
#include <string>
#include <utility>

namespace simstat::notation {

namespace {

struct Decoded {
  char32_t cp = 0;
  std::size_t bytes = 0;
};

Decoded decode(std::string_view s, std::size_t i) {
  const auto b0 = static_cast<unsigned char>(s[i]);
  auto cont = [&](std::size_t k) -> char32_t {
    if (i + k >= s.size()) return 0xFFFFFFFF;
    const auto b = static_cast<unsigned char>(s[i + k]);
    return (b & 0xC0) == 0x80 ? char32_t(b & 0x3F) : char32_t(0xFFFFFFFF);
  };
  if (b0 < 0x80) return {b0, 1};
  std::size_t len = 0;
  char32_t cp = 0;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    cp = b0 & 0x07;
  } else {
    return {0xFFFD, 0};
  }
  for (std::size_t k = 1; k < len; ++k) {
    const char32_t c = cont(k);
    if (c == 0xFFFFFFFF) return {0xFFFD, 0};
    cp = (cp << 6) | c;
  }
  return {cp, len};
}

bool is_space(char32_t c) {
  return c == U' ' || c == U'\t' || c == U'\n' || c == U'\r' || c == U'\f' || c == U'\v' || c == 0x00A0 ||
         c == 0x200B || c == 0xFEFF;
}

bool is_digit(char32_t c) { return c >= U'0' && c <= U'9'; }

bool is_letter(char32_t c) {
  if ((c >= U'a' && c <= U'z') || (c >= U'A' && c <= U'Z') || c == U'_') return true;
  if (c >= 0x0370 && c <= 0x03FF) return c != 0x037E && c != 0x0387;  // Greek, minus its punctuation
  if (c >= 0x00C0 && c <= 0x024F) return c != 0x00D7 && c != 0x00F7;
  return false;
}

// Stand-alone symbol names; each forms a one-character identifier.
bool is_symbol_name(char32_t c) {
  return c == U'Σ' || c == U'∑' || c == U'∏' || c == U'∫' || c == U'∀' || c == U'∃';
}

bool is_combining(char32_t c) { return c >= 0x0300 && c <= 0x036F; }

struct Spelling {
  std::string_view source;
  std::string_view canonical;
  TokenKind kind;
};

// Longest spellings first where prefixes overlap.
constexpr std::array kSymbols = {
    Spelling{"...", "…", TokenKind::Operator}, Spelling{"=>", "⇒", TokenKind::LambdaArrow},
    Spelling{"==", "=", TokenKind::Operator},  Spelling{"!=", "≠", TokenKind::Operator},
    Spelling{"<=", "≤", TokenKind::Operator},  Spelling{">=", "≥", TokenKind::Operator},
    Spelling{"&&", "∧", TokenKind::Operator},  Spelling{"||", "∨", TokenKind::Operator},
    Spelling{"↑", "↑", TokenKind::Operator},   Spelling{"^", "↑", TokenKind::Operator},
    Spelling{"↓", "↓", TokenKind::Operator},   Spelling{"⇑", "⇑", TokenKind::Operator},
    Spelling{"⇓", "⇓", TokenKind::Operator},   Spelling{"⋅", "⋅", TokenKind::Operator},
    Spelling{"·", "⋅", TokenKind::Operator},   Spelling{"*", "*", TokenKind::Operator},
    Spelling{"×", "*", TokenKind::Operator},   Spelling{"/", "/", TokenKind::Operator},
    Spelling{"÷", "/", TokenKind::Operator},   Spelling{"%", "%", TokenKind::Operator},
    Spelling{"+", "+", TokenKind::Operator},   Spelling{"−", "−", TokenKind::Operator},
    Spelling{"-", "−", TokenKind::Operator},   Spelling{"=", "=", TokenKind::Operator},
    Spelling{"≠", "≠", TokenKind::Operator},   Spelling{"<", "<", TokenKind::Operator},
    Spelling{">", ">", TokenKind::Operator},   Spelling{"≤", "≤", TokenKind::Operator},
    Spelling{"≥", "≥", TokenKind::Operator},   Spelling{"∈", "∈", TokenKind::Operator},
    Spelling{"∉", "∉", TokenKind::Operator},   Spelling{"⊆", "⊆", TokenKind::Operator},
    Spelling{"∪", "∪", TokenKind::Operator},   Spelling{"|", "∪", TokenKind::Operator},
    Spelling{"∩", "∩", TokenKind::Operator},   Spelling{"&", "∩", TokenKind::Operator},
    Spelling{"∧", "∧", TokenKind::Operator},   Spelling{"∨", "∨", TokenKind::Operator},
    Spelling{"¬", "¬", TokenKind::Operator},   Spelling{"!", "!", TokenKind::Operator},
    Spelling{"…", "…", TokenKind::Operator},   Spelling{"⇒", "⇒", TokenKind::LambdaArrow},
    Spelling{"(", "(", TokenKind::Punctuation}, Spelling{")", ")", TokenKind::Punctuation},
    Spelling{",", ",", TokenKind::Punctuation}, Spelling{"{", "{", TokenKind::Punctuation},
    Spelling{"}", "}", TokenKind::Punctuation},
};

// Word operators.
constexpr std::array<std::pair<std::string_view, std::string_view>, 15> kWordOperators = {{
    {"to", "to"},
    {"until", "until"},
    {"in", "∈"},
    {"notin", "∉"},
    {"subset", "⊆"},
    {"union", "∪"},
    {"intersect", "∩"},
    {"and", "∧"},
    {"or", "∨"},
    {"not", "¬"},
    {"dot", "⋅"},
    {"root", "↓"},
    {"rising", "⇑"},
    {"falling", "⇓"},
    {"mod", "%"},
}};

// Function names that have a symbolic canonical form when used in call position.
constexpr std::array<std::pair<std::string_view, std::string_view>, 14> kFunctionAliases = {{
    {"sum", "Σ"},
    {"∑", "Σ"},
    {"prod", "∏"},
    {"integral", "∫"},
    {"forall", "∀"},
    {"exists", "∃"},
    {"mean", "μ"},
    {"variance", "σ2"},
    {"var", "σ2"},
    {"stddev", "σ"},
    {"sd", "σ"},
    {"skew", "γ1"},
    {"corr", "ρ"},
    {"svar", "σ̂2"},
}};

class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space_and_comments();
      if (pos_ >= s_.size()) break;
      out.push_back(next());
    }
    out.push_back({TokenKind::End, "", "", cp_});
    return out;
  }

 private:
  [[nodiscard]] Decoded peek(std::size_t at) const {
    if (at >= s_.size()) return {0, 0};
    return decode(s_, at);
  }

  void advance(const Decoded& d) {
    pos_ += d.bytes;
    ++cp_;
  }

  void skip_space_and_comments() {
    while (pos_ < s_.size()) {
      const auto d = peek(pos_);
      if (d.bytes == 0) throw ParseError("invalid UTF-8 sequence", cp_);
      if (is_space(d.cp)) {
        advance(d);
      } else if (s_.substr(pos_, 2) == "//") {
        while (pos_ < s_.size() && s_[pos_] != '\n') advance(peek(pos_));
      } else {
        break;
      }
    }
  }

  [[nodiscard]] bool followed_by_paren(std::size_t at) const {
    while (at < s_.size()) {
      const auto d = peek(at);
      if (d.bytes == 0 || !is_space(d.cp)) break;
      at += d.bytes;
    }
    return at < s_.size() && s_[at] == '(';
  }

  Token next() {
    const std::size_t start = pos_;
    const std::size_t start_cp = cp_;
    const auto first = peek(pos_);

    if (is_digit(first.cp)) {
      while (pos_ < s_.size() && is_digit(peek(pos_).cp)) advance(peek(pos_));
      if (pos_ + 1 < s_.size() && s_[pos_] == '.' && is_digit(peek(pos_ + 1).cp)) {
        advance(peek(pos_));
        while (pos_ < s_.size() && is_digit(peek(pos_).cp)) advance(peek(pos_));
      }
      const std::string text(s_.substr(start, pos_ - start));
      return {TokenKind::Number, text, text, start_cp};
    }

    if (is_symbol_name(first.cp)) {
      advance(first);
      return identifier(start, start_cp);
    }

    if (is_letter(first.cp)) {
      while (pos_ < s_.size()) {
        const auto d = peek(pos_);
        if (d.bytes == 0 || !(is_letter(d.cp) || is_digit(d.cp) || is_combining(d.cp))) break;
        advance(d);
      }
      return identifier(start, start_cp);
    }

    for (const auto& sym : kSymbols) {
      if (s_.substr(pos_, sym.source.size()) == sym.source) {
        for (std::size_t end = pos_ + sym.source.size(); pos_ < end;) advance(peek(pos_));
        return {sym.kind, std::string(sym.canonical), std::string(sym.source), start_cp};
      }
    }

    const std::string bad(s_.substr(start, std::max<std::size_t>(first.bytes, 1)));
    throw ParseError("unexpected character '" + bad + "'", start_cp);
  }

  Token identifier(std::size_t start, std::size_t start_cp) {
    const std::string word(s_.substr(start, pos_ - start));
    for (const auto& [src, canon] : kWordOperators) {
      if (word == src) return {TokenKind::Operator, std::string(canon), word, start_cp};
    }
    if (followed_by_paren(pos_)) {
      for (const auto& [src, canon] : kFunctionAliases) {
        if (word == src) return {TokenKind::Identifier, std::string(canon), word, start_cp};
      }
    }
    return {TokenKind::Identifier, word, word, start_cp};
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::size_t cp_ = 0;
};

}  // namespace

std::vector<Token> tokenize(std::string_view input) { return Lexer(input).run(); }

}  // namespace simstat::notation
