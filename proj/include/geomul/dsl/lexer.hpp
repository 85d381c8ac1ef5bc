#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "geomul/dsl/ast.hpp"

namespace geomul::dsl {

enum class TokenKind { ident, integer, lparen, rparen, comma, equals, slash, minus, separator, end };

struct Token {
  TokenKind kind;
  std::string text;
  SourcePos pos;
};

/// Newlines and ';' both become `separator` tokens. Throws SourceError(lex).
std::vector<Token> tokenize(std::string_view source);

std::string describe(const Token& token);

}  // namespace geomul::dsl
