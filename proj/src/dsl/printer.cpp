#include "geomul/dsl/printer.hpp"

namespace geomul::dsl {

namespace {

std::string join_points(const std::vector<PointExpr>& pts, std::size_t from, std::size_t count) {
  std::string out;
  for (std::size_t k = from; k < from + count && k < pts.size(); ++k) {
    if (k > from) out += " ";
    out += print(pts[k]);
  }
  return out;
}

std::string print_line_expr(const LineExpr& e) {
  switch (e.kind) {
    case LineExpr::Kind::through:
      return "through " + join_points(e.points, 0, 2);
    case LineExpr::Kind::parallel:
      return "parallel through " + print(e.points.at(0)) + " to " + print(e.target.at(0));
    case LineExpr::Kind::perp:
      return "perp through " + print(e.points.at(0)) + " to " + print(e.target.at(0));
  }
  return {};
}

std::string call(std::string_view name, const std::vector<NumExpr>& args) {
  std::string out(name);
  out += "(";
  for (std::size_t k = 0; k < args.size(); ++k) {
    if (k > 0) out += ", ";
    out += print(args[k]);
  }
  return out + ")";
}

}  // namespace

std::string print(const PointExpr& pt) {
  if (pt.kind == PointExpr::Kind::name) return pt.name;
  return "(" + pt.x.to_string() + ", " + pt.y.to_string() + ")";
}

std::string print(const LineRef& ref) {
  if (ref.kind == LineRef::Kind::name) return ref.name;
  return "through " + join_points(ref.points, 0, 2);
}

std::string print(const NumExpr& expr) {
  switch (expr.kind) {
    case NumExpr::Kind::literal:
      return expr.value.to_string();
    case NumExpr::Kind::name:
      return expr.name;
    case NumExpr::Kind::xintercept:
      return "xintercept(" + print(expr.line.at(0)) + ")";
    case NumExpr::Kind::gmul:
      return call("gmul", expr.args);
    case NumExpr::Kind::ginv:
      return call("ginv", expr.args);
    case NumExpr::Kind::gfracmul:
      return call("gfracmul", expr.args);
  }
  return {};
}

std::string print(const Predicate& pred) {
  switch (pred.kind) {
    case Predicate::Kind::eq:
      return call("eq", pred.nums);
    case Predicate::Kind::lt:
      return call("lt", pred.nums);
    case Predicate::Kind::parallel:
      return "parallel(" + print(pred.lines.at(0)) + ", " + print(pred.lines.at(1)) + ")";
    case Predicate::Kind::congruent:
      return "congruent(" + join_points(pred.points, 0, 3) + ", " + join_points(pred.points, 3, 3) + ")";
    case Predicate::Kind::area_eq:
      return "area_eq(" + join_points(pred.points, 0, 3) + ", " + join_points(pred.points, 3, 3) + ")";
  }
  return {};
}

std::string print(const Statement& stmt) {
  struct Visitor {
    std::string operator()(const PointDecl& d) const {
      if (d.literal) return "point " + d.name + " = " + print(*d.literal);
      return "point " + d.name + " = intersect(" + print(d.intersect.at(0)) + ", " +
             print(d.intersect.at(1)) + ")";
    }
    std::string operator()(const LineDecl& d) const { return "line " + d.name + " = " + print_line_expr(d.expr); }
    std::string operator()(const NumDecl& d) const { return "num " + d.name + " = " + print(d.expr); }
    std::string operator()(const AssertStmt& a) const { return "assert " + print(a.pred); }
  };
  return std::visit(Visitor{}, stmt);
}

std::string print(const ScriptAst& ast) {
  std::string out;
  for (const Statement& s : ast.statements) out += print(s) + "\n";
  return out;
}

}  // namespace geomul::dsl
