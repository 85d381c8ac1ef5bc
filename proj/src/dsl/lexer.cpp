#include "geomul/dsl/lexer.hpp"

#include <cctype>

namespace geomul::dsl {

std::string_view to_string(SourceErrorKind kind) noexcept {
  switch (kind) {
    case SourceErrorKind::lex: return "lex";
    case SourceErrorKind::parse: return "parse";
    case SourceErrorKind::name: return "name";
    case SourceErrorKind::type: return "type";
    case SourceErrorKind::runtime: return "runtime";
  }
  return "unknown";
}

SourceError::SourceError(SourceErrorKind kind, SourcePos pos, std::string message,
                         std::optional<ErrorCode> engine_code)
    : std::runtime_error(std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": " +
                         std::string(to_string(kind)) + " error: " + message),
      kind_(kind),
      pos_(pos),
      message_(std::move(message)),
      engine_code_(engine_code) {}

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n = 1) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };

  while (i < src.size()) {
    char ch = src[i];
    SourcePos pos{line, col};
    if (ch == '#') {
      while (i < src.size() && src[i] != '\n') advance();
    } else if (ch == '\n' || ch == ';') {
      out.push_back({TokenKind::separator, std::string(1, ch), pos});
      advance();
    } else if (ch == ' ' || ch == '\t' || ch == '\r') {
      advance();
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t start = i;
      while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) advance();
      out.push_back({TokenKind::integer, std::string(src.substr(start, i - start)), pos});
    } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t start = i;
      while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) advance();
      out.push_back({TokenKind::ident, std::string(src.substr(start, i - start)), pos});
    } else {
      TokenKind kind;
      switch (ch) {
        case '(': kind = TokenKind::lparen; break;
        case ')': kind = TokenKind::rparen; break;
        case ',': kind = TokenKind::comma; break;
        case '=': kind = TokenKind::equals; break;
        case '/': kind = TokenKind::slash; break;
        case '-': kind = TokenKind::minus; break;
        default:
          throw SourceError(SourceErrorKind::lex, pos, "unexpected character '" + std::string(1, ch) + "'");
      }
      out.push_back({kind, std::string(1, ch), pos});
      advance();
    }
  }
  out.push_back({TokenKind::end, "", SourcePos{line, col}});
  return out;
}

std::string describe(const Token& token) {
  switch (token.kind) {
    case TokenKind::end: return "end of input";
    case TokenKind::separator: return token.text == ";" ? "';'" : "end of line";
    default: return "'" + token.text + "'";
  }
}

}  // namespace geomul::dsl
