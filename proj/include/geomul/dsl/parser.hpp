#pragma once

#include <string_view>

#include "geomul/dsl/ast.hpp"

namespace geomul::dsl {

/// Throws SourceError with kind lex or parse.
ScriptAst parse(std::string_view source);

bool is_keyword(std::string_view word) noexcept;

}  // namespace geomul::dsl
