#include "geomul/dsl/interpreter.hpp"

#include <array>
#include <map>
#include <type_traits>

#include "geomul/dsl/printer.hpp"
#include "geomul/segment_arithmetic.hpp"

namespace geomul::dsl {

namespace {

std::string text(const Point& p) { return geomul::to_string(p); }
std::string text(const Line& l) { return geomul::to_string(l); }
std::string text(const Rational& r) { return r.to_string(); }

}  // namespace

std::string to_string(const Value& v) {
  return std::visit([](const auto& x) { return text(x); }, v);
}

bool ExecutionReport::passed() const {
  for (const AssertionOutcome& a : assertions) {
    if (!a.passed) return false;
  }
  return true;
}

namespace {

enum class Sort { point, line, num };

std::string_view sort_name(Sort s) {
  switch (s) {
    case Sort::point: return "point";
    case Sort::line: return "line";
    case Sort::num: return "num";
  }
  return "?";
}

class Resolver {
 public:
  void run(const ScriptAst& ast) {
    for (const Statement& s : ast.statements) std::visit(*this, s);
  }

  void operator()(const PointDecl& d) {
    if (!d.literal) {
      for (const LineRef& r : d.intersect) line(r);
    }
    declare(d.name, Sort::point, d.pos);
  }
  void operator()(const LineDecl& d) {
    for (const PointExpr& p : d.expr.points) point(p);
    for (const LineRef& r : d.expr.target) line(r);
    declare(d.name, Sort::line, d.pos);
  }
  void operator()(const NumDecl& d) {
    num(d.expr);
    declare(d.name, Sort::num, d.pos);
  }
  void operator()(const AssertStmt& a) {
    for (const NumExpr& n : a.pred.nums) num(n);
    for (const LineRef& r : a.pred.lines) line(r);
    for (const PointExpr& p : a.pred.points) point(p);
  }

 private:
  void declare(const std::string& name, Sort sort, SourcePos pos) {
    auto [it, inserted] = names_.emplace(name, sort);
    if (!inserted) {
      throw SourceError(SourceErrorKind::name, pos,
                        "'" + name + "' is already declared as a " + std::string(sort_name(it->second)));
    }
  }

  void use(const std::string& name, Sort want, SourcePos pos) {
    auto it = names_.find(name);
    if (it == names_.end()) throw SourceError(SourceErrorKind::name, pos, "undeclared identifier '" + name + "'");
    if (it->second != want) {
      throw SourceError(SourceErrorKind::type, pos,
                        "'" + name + "' is a " + std::string(sort_name(it->second)) + ", expected a " +
                            std::string(sort_name(want)));
    }
  }

  void point(const PointExpr& p) {
    if (p.kind == PointExpr::Kind::name) use(p.name, Sort::point, p.pos);
  }
  void line(const LineRef& r) {
    if (r.kind == LineRef::Kind::name) {
      use(r.name, Sort::line, r.pos);
    } else {
      for (const PointExpr& p : r.points) point(p);
    }
  }
  void num(const NumExpr& n) {
    if (n.kind == NumExpr::Kind::name) use(n.name, Sort::num, n.pos);
    for (const LineRef& r : n.line) line(r);
    for (const NumExpr& a : n.args) num(a);
  }

  std::map<std::string, Sort> names_;
};

struct Binding {
  Value value;
  Operand operand;
};

struct Scalar {
  Rational value;
  Operand operand;
};

class Executor {
 public:
  explicit Executor(std::string script_name) : c_(std::move(script_name)) {}

  ExecutionReport run(const ScriptAst& ast) {
    for (const Statement& s : ast.statements) std::visit(*this, s);
    report_.trace = std::move(c_).take();
    return std::move(report_);
  }

  void operator()(const PointDecl& d) {
    StepRef ref = guarded(d.pos, [&] {
      if (d.literal) return c_.place_point(Point{d.literal->x, d.literal->y}, d.name);
      Operand l1 = line(d.intersect.at(0));
      Operand l2 = line(d.intersect.at(1));
      return c_.mark_intersection(l1, l2, d.name);
    });
    bind(d.name, c_.point(ref), ref);
  }

  void operator()(const LineDecl& d) {
    const LineExpr& e = d.expr;
    StepRef ref = guarded(e.pos, [&] {
      switch (e.kind) {
        case LineExpr::Kind::through: {
          Operand p = point(e.points.at(0));
          Operand q = point(e.points.at(1));
          return c_.draw_line_through(p, q, d.name);
        }
        case LineExpr::Kind::parallel: {
          Operand p = point(e.points.at(0));
          Operand l = line(e.target.at(0));
          return c_.draw_parallel(p, l, d.name);
        }
        case LineExpr::Kind::perp: {
          Operand p = point(e.points.at(0));
          Operand l = line(e.target.at(0));
          return c_.draw_perpendicular(p, l, d.name);
        }
      }
      throw SourceError(SourceErrorKind::runtime, e.pos, "unknown line form");
    });
    bind(d.name, c_.line(ref), ref);
  }

  void operator()(const NumDecl& d) {
    Scalar s = num(d.expr);
    bind(d.name, s.value, s.operand);
  }

  void operator()(const AssertStmt& a) {
    const Predicate& p = a.pred;
    AssertionOutcome out;
    out.pos = a.pos;
    out.text = print(p);
    StepRef ref = guarded(p.pos, [&] {
      switch (p.kind) {
        case Predicate::Kind::eq:
        case Predicate::Kind::lt: {
          Scalar x = num(p.nums.at(0));
          Scalar y = num(p.nums.at(1));
          out.operands = {x.value.to_string(), y.value.to_string()};
          return p.kind == Predicate::Kind::eq ? c_.assert_equal(x.operand, y.operand)
                                               : c_.assert_less(x.operand, y.operand);
        }
        case Predicate::Kind::parallel: {
          Operand l1 = line(p.lines.at(0));
          Operand l2 = line(p.lines.at(1));
          out.operands = {value_text(l1), value_text(l2)};
          return c_.assert_parallel(l1, l2);
        }
        case Predicate::Kind::congruent:
        case Predicate::Kind::area_eq: {
          std::array<Operand, 6> v;
          for (std::size_t k = 0; k < 6; ++k) {
            v[k] = point(p.points.at(k));
            out.operands.push_back(value_text(v[k]));
          }
          return p.kind == Predicate::Kind::congruent ? c_.assert_congruent(v) : c_.assert_area_equal(v);
        }
      }
      throw SourceError(SourceErrorKind::runtime, p.pos, "unknown predicate");
    });
    out.passed = c_.assertion(ref).holds();
    report_.assertions.push_back(std::move(out));
  }

 private:
  template <typename F>
  auto guarded(SourcePos pos, F&& f) -> std::invoke_result_t<F&> {
    try {
      return f();
    } catch (const EngineError& e) {
      throw SourceError(SourceErrorKind::runtime, pos, e.what(), e.code());
    }
  }

  void bind(const std::string& name, Value value, Operand operand) {
    env_.emplace(name, Binding{value, std::move(operand)});
    report_.environment.emplace_back(name, std::move(value));
  }

  std::string value_text(const Operand& op) const {
    if (const auto* ref = std::get_if<StepRef>(&op)) {
      return std::visit(
          [](const auto& r) -> std::string {
            if constexpr (std::is_same_v<std::decay_t<decltype(r)>, Assertion>) {
              return r.holds() ? "true" : "false";
            } else {
              return text(r);
            }
          },
          c_.step(*ref).result);
    }
    return std::visit(
        [](const auto& v) -> std::string {
          if constexpr (std::is_same_v<std::decay_t<decltype(v)>, StepRef>) {
            return "#" + std::to_string(v.id);
          } else {
            return text(v);
          }
        },
        op);
  }

  Operand point(const PointExpr& p) {
    if (p.kind == PointExpr::Kind::name) return env_.at(p.name).operand;
    return guarded(p.pos, [&] { return c_.place_point(Point{p.x, p.y}); });
  }

  Operand line(const LineRef& r) {
    if (r.kind == LineRef::Kind::name) return env_.at(r.name).operand;
    Operand p = point(r.points.at(0));
    Operand q = point(r.points.at(1));
    return guarded(r.pos, [&] { return c_.draw_line_through(p, q); });
  }

  Scalar num(const NumExpr& n) {
    switch (n.kind) {
      case NumExpr::Kind::literal:
        return {n.value, n.value};
      case NumExpr::Kind::name: {
        const Binding& b = env_.at(n.name);
        return {std::get<Rational>(b.value), b.operand};
      }
      case NumExpr::Kind::xintercept: {
        Operand l = line(n.line.at(0));
        StepRef ref = guarded(n.pos, [&] { return c_.read_x_intercept(l); });
        return {c_.scalar(ref), ref};
      }
      case NumExpr::Kind::gmul: {
        Rational a = num(n.args.at(0)).value;
        Rational b = num(n.args.at(1)).value;
        StepRef ref = guarded(n.pos, [&] { return geom_mul(c_, a, b).intercept; });
        return {c_.scalar(ref), ref};
      }
      case NumExpr::Kind::ginv: {
        Rational a = num(n.args.at(0)).value;
        StepRef ref = guarded(n.pos, [&] { return geom_inverse(c_, a).intercept; });
        return {c_.scalar(ref), ref};
      }
      case NumExpr::Kind::gfracmul: {
        std::array<Rational, 4> v;
        for (std::size_t k = 0; k < 4; ++k) v[k] = num(n.args.at(k)).value;
        StepRef ref = guarded(n.pos, [&] { return frac_mul(c_, v[0], v[1], v[2], v[3]); });
        return {c_.scalar(ref), ref};
      }
    }
    throw SourceError(SourceErrorKind::runtime, n.pos, "unknown numeric form");
  }

  Construction c_;
  std::map<std::string, Binding> env_;
  ExecutionReport report_;
};

}  // namespace

void resolve(const ScriptAst& ast) { Resolver{}.run(ast); }

ExecutionReport execute(const ScriptAst& ast, std::string script_name) {
  resolve(ast);
  return Executor(std::move(script_name)).run(ast);
}

}  // namespace geomul::dsl
