#pragma once

#include <string>

#include "geomul/dsl/ast.hpp"

namespace geomul::dsl {

/// Canonical source text; parse(print(ast)) == ast.
std::string print(const ScriptAst& ast);
std::string print(const Statement& stmt);
std::string print(const Predicate& pred);
std::string print(const NumExpr& expr);
std::string print(const LineRef& ref);
std::string print(const PointExpr& pt);

}  // namespace geomul::dsl
