#pragma once

/**
 * @file ast.hpp
 * @brief Syntax tree and diagnostics for construction scripts (.geo).
 *
 *   script   := stmt*                      (newline- or ';'-separated)
 *   stmt     := "point" ID "=" "(" num "," num ")"
 *             | "point" ID "=" "intersect" "(" lineref "," lineref ")"
 *             | "line"  ID "=" lineexpr
 *             | "num"   ID "=" numexpr
 *             | "assert" pred
 *   lineexpr := "through" pt pt | "parallel" "through" pt "to" lineref
 *             | "perp" "through" pt "to" lineref
 *   pt       := ID | "(" num "," num ")"
 *   lineref  := ID | "through" pt pt
 *   numexpr  := num | ID | "xintercept" "(" lineref ")"
 *             | "gmul" "(" numexpr "," numexpr ")" | "ginv" "(" numexpr ")"
 *             | "gfracmul" "(" numexpr "," numexpr "," numexpr "," numexpr ")"
 *   pred     := "eq" "(" numexpr "," numexpr ")" | "lt" "(" numexpr "," numexpr ")"
 *             | "parallel" "(" lineref "," lineref ")"
 *             | "congruent" "(" pt pt pt "," pt pt pt ")"
 *             | "area_eq" "(" pt pt pt "," pt pt pt ")"
 *   num      := ["-"] INT [ "/" INT ]
 *
 * '#' starts a comment that runs to the end of the line.
 */

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "geomul/errors.hpp"
#include "geomul/rational.hpp"

namespace geomul::dsl {

struct SourcePos {
  int line = 1;
  int column = 1;

  // Positions are metadata: ASTs that differ only in layout compare equal.
  friend bool operator==(const SourcePos&, const SourcePos&) { return true; }
};

struct PointExpr {
  enum class Kind { name, literal };
  Kind kind = Kind::literal;
  std::string name;
  Rational x;
  Rational y;
  SourcePos pos;

  friend bool operator==(const PointExpr&, const PointExpr&) = default;
};

struct LineRef {
  enum class Kind { name, through };
  Kind kind = Kind::name;
  std::string name;
  std::vector<PointExpr> points;  // two for `through`
  SourcePos pos;

  friend bool operator==(const LineRef&, const LineRef&) = default;
};

struct LineExpr {
  enum class Kind { through, parallel, perp };
  Kind kind = Kind::through;
  std::vector<PointExpr> points;  // two for `through`, one otherwise
  std::vector<LineRef> target;    // one for `parallel` and `perp`
  SourcePos pos;

  friend bool operator==(const LineExpr&, const LineExpr&) = default;
};

struct NumExpr {
  enum class Kind { literal, name, xintercept, gmul, ginv, gfracmul };
  Kind kind = Kind::literal;
  Rational value;
  std::string name;
  std::vector<LineRef> line;  // one for `xintercept`
  std::vector<NumExpr> args;
  SourcePos pos;

  friend bool operator==(const NumExpr&, const NumExpr&) = default;
};

struct Predicate {
  enum class Kind { eq, lt, parallel, congruent, area_eq };
  Kind kind = Kind::eq;
  std::vector<NumExpr> nums;
  std::vector<LineRef> lines;
  std::vector<PointExpr> points;
  SourcePos pos;

  friend bool operator==(const Predicate&, const Predicate&) = default;
};

struct PointDecl {
  std::string name;
  std::optional<PointExpr> literal;  // set for "(x, y)"
  std::vector<LineRef> intersect;    // two lines otherwise
  SourcePos pos;

  friend bool operator==(const PointDecl&, const PointDecl&) = default;
};

struct LineDecl {
  std::string name;
  LineExpr expr;
  SourcePos pos;

  friend bool operator==(const LineDecl&, const LineDecl&) = default;
};

struct NumDecl {
  std::string name;
  NumExpr expr;
  SourcePos pos;

  friend bool operator==(const NumDecl&, const NumDecl&) = default;
};

struct AssertStmt {
  Predicate pred;
  SourcePos pos;

  friend bool operator==(const AssertStmt&, const AssertStmt&) = default;
};

using Statement = std::variant<PointDecl, LineDecl, NumDecl, AssertStmt>;

struct ScriptAst {
  std::vector<Statement> statements;

  friend bool operator==(const ScriptAst&, const ScriptAst&) = default;
};

enum class SourceErrorKind { lex, parse, name, type, runtime };

std::string_view to_string(SourceErrorKind kind) noexcept;

class SourceError : public std::runtime_error {
 public:
  SourceError(SourceErrorKind kind, SourcePos pos, std::string message,
              std::optional<ErrorCode> engine_code = std::nullopt);

  SourceErrorKind kind() const noexcept { return kind_; }
  int line() const noexcept { return pos_.line; }
  int column() const noexcept { return pos_.column; }
  const std::string& message() const noexcept { return message_; }
  /// The engine error behind a runtime error.
  std::optional<ErrorCode> engine_code() const noexcept { return engine_code_; }

 private:
  SourceErrorKind kind_;
  SourcePos pos_;
  std::string message_;
  std::optional<ErrorCode> engine_code_;
};

}  // namespace geomul::dsl
