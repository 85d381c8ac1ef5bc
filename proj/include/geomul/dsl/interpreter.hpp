#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "geomul/dsl/ast.hpp"
#include "geomul/plane.hpp"
#include "geomul/trace.hpp"

namespace geomul::dsl {

using Value = std::variant<Point, Line, Rational>;

std::string to_string(const Value& v);

struct AssertionOutcome {
  SourcePos pos;
  std::string text;                 // canonical predicate text
  bool passed = false;
  std::vector<std::string> operands;  // evaluated operand values
};

struct ExecutionReport {
  std::vector<std::pair<std::string, Value>> environment;  // declaration order
  ConstructionTrace trace;
  std::vector<AssertionOutcome> assertions;

  bool passed() const;
};

/// Checks that every identifier is declared once, before use, and with the
/// kind its context requires. Throws SourceError(name | type).
void resolve(const ScriptAst& ast);

/// Resolves, then runs the statements in order. Engine failures surface as
/// SourceError(runtime) located at the failing expression.
ExecutionReport execute(const ScriptAst& ast, std::string script_name = "script");

}  // namespace geomul::dsl
