#include "geomul/trace.hpp"

#include <algorithm>

#include "geomul/errors.hpp"

namespace geomul {

namespace {

constexpr std::array<std::pair<StepKind, std::string_view>, 11> kKindNames{{
    {StepKind::place_point, "place_point"},
    {StepKind::draw_line_through, "draw_line_through"},
    {StepKind::draw_parallel, "draw_parallel"},
    {StepKind::draw_perpendicular, "draw_perpendicular"},
    {StepKind::mark_intersection, "mark_intersection"},
    {StepKind::read_x_intercept, "read_x_intercept"},
    {StepKind::assert_parallel, "assert_parallel"},
    {StepKind::assert_congruent, "assert_congruent"},
    {StepKind::assert_area_equal, "assert_area_equal"},
    {StepKind::assert_equal, "assert_equal"},
    {StepKind::assert_less, "assert_less"},
}};

[[noreturn]] void malformed(const std::string& what) {
  throw EngineError(ErrorCode::MalformedTrace, what);
}

class OperandReader {
 public:
  OperandReader(const std::vector<ConstructionStep>& prior, std::size_t self_id)
      : prior_(prior), self_id_(self_id) {}

  const Point& point(const Operand& op) const { return get<Point>(op, "point"); }
  const Line& line(const Operand& op) const { return get<Line>(op, "line"); }
  const Rational& scalar(const Operand& op) const { return get<Rational>(op, "scalar"); }

  Triangle triangle(const std::vector<Operand>& ops, std::size_t first) const {
    return Triangle{point(ops[first]), point(ops[first + 1]), point(ops[first + 2])};
  }

 private:
  template <typename T>
  const T& get(const Operand& op, const char* what) const {
    if (const auto* ref = std::get_if<StepRef>(&op)) {
      if (ref->id >= self_id_ || ref->id >= prior_.size()) {
        malformed("step " + std::to_string(self_id_) + " references step " +
                  std::to_string(ref->id));
      }
      const auto* value = std::get_if<T>(&prior_[ref->id].result);
      if (value == nullptr) {
        malformed("step " + std::to_string(self_id_) + " expects a " + what + " from step " +
                  std::to_string(ref->id));
      }
      return *value;
    }
    const auto* value = std::get_if<T>(&op);
    if (value == nullptr) {
      malformed("step " + std::to_string(self_id_) + " expects a literal " + what);
    }
    return *value;
  }

  const std::vector<ConstructionStep>& prior_;
  std::size_t self_id_;
};

void require_arity(StepKind kind, const std::vector<Operand>& operands, std::size_t n) {
  if (operands.size() != n) {
    malformed(std::string(to_string(kind)) + " takes " + std::to_string(n) + " operands, got " +
              std::to_string(operands.size()));
  }
}

}  // namespace

std::string_view to_string(StepKind kind) noexcept {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

std::optional<StepKind> step_kind_from_string(std::string_view name) noexcept {
  for (const auto& [k, n] : kKindNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

bool is_assertion(StepKind kind) noexcept {
  switch (kind) {
    case StepKind::assert_parallel:
    case StepKind::assert_congruent:
    case StepKind::assert_area_equal:
    case StepKind::assert_equal:
    case StepKind::assert_less:
      return true;
    default:
      return false;
  }
}

bool ConstructionTrace::assertions_hold() const {
  return std::all_of(steps.begin(), steps.end(), [](const ConstructionStep& s) {
    const auto* a = std::get_if<Assertion>(&s.result);
    return a == nullptr || a->holds();
  });
}

StepResult evaluate_step(StepKind kind, const std::vector<Operand>& ops,
                         const std::vector<ConstructionStep>& prior, std::size_t self_id) {
  OperandReader in(prior, self_id);
  switch (kind) {
    case StepKind::place_point:
      require_arity(kind, ops, 1);
      return in.point(ops[0]);
    case StepKind::draw_line_through:
      require_arity(kind, ops, 2);
      return line_through(in.point(ops[0]), in.point(ops[1]));
    case StepKind::draw_parallel:
      require_arity(kind, ops, 2);
      return parallel_through(in.point(ops[0]), in.line(ops[1]));
    case StepKind::draw_perpendicular:
      require_arity(kind, ops, 2);
      return perpendicular_through(in.point(ops[0]), in.line(ops[1]));
    case StepKind::mark_intersection:
      require_arity(kind, ops, 2);
      return intersect(in.line(ops[0]), in.line(ops[1]));
    case StepKind::read_x_intercept:
      require_arity(kind, ops, 1);
      return x_intercept(in.line(ops[0]));
    case StepKind::assert_parallel:
      require_arity(kind, ops, 2);
      return Assertion{true, is_parallel(in.line(ops[0]), in.line(ops[1]))};
    case StepKind::assert_congruent:
      require_arity(kind, ops, 6);
      return Assertion{true, congruent_sss(in.triangle(ops, 0), in.triangle(ops, 3))};
    case StepKind::assert_area_equal:
      require_arity(kind, ops, 6);
      return Assertion{true, twice_area(in.triangle(ops, 0)) == twice_area(in.triangle(ops, 3))};
    case StepKind::assert_equal:
      require_arity(kind, ops, 2);
      return Assertion{true, in.scalar(ops[0]) == in.scalar(ops[1])};
    case StepKind::assert_less:
      require_arity(kind, ops, 2);
      return Assertion{true, in.scalar(ops[0]) < in.scalar(ops[1])};
  }
  malformed("unknown step kind");
}

bool replay(const ConstructionTrace& trace) {
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const ConstructionStep& step = trace.steps[i];
    if (step.id != i) malformed("step at position " + std::to_string(i) + " has id " + std::to_string(step.id));
    StepResult fresh;
    try {
      fresh = evaluate_step(step.kind, step.operands, trace.steps, i);
    } catch (const EngineError& e) {
      if (e.code() == ErrorCode::MalformedTrace) throw;
      return false;
    }
    if (const auto* recorded = std::get_if<Assertion>(&step.result)) {
      const auto* now = std::get_if<Assertion>(&fresh);
      if (now == nullptr || now->observed != recorded->observed || !recorded->holds()) return false;
    } else if (fresh != step.result) {
      return false;
    }
  }
  return true;
}

Construction::Construction(std::string op, std::vector<std::string> inputs,
                           std::optional<std::int64_t> seed) {
  trace_.op = std::move(op);
  trace_.inputs = std::move(inputs);
  trace_.seed = seed;
}

StepRef Construction::record(StepKind kind, std::vector<Operand> operands, std::string label,
                             bool expected) {
  const std::size_t id = trace_.steps.size();
  StepResult result = evaluate_step(kind, operands, trace_.steps, id);
  if (auto* a = std::get_if<Assertion>(&result)) a->expected = expected;

  for (const ConstructionStep& s : trace_.steps) {
    if (s.kind == kind && s.operands == operands && s.result == result) return StepRef{s.id};
  }
  trace_.steps.push_back(ConstructionStep{id, kind, std::move(operands), std::move(result), std::move(label)});
  return StepRef{id};
}

StepRef Construction::place_point(const Point& p, std::string label) {
  if (label.empty()) label = to_string(p);
  return record(StepKind::place_point, {p}, std::move(label));
}

StepRef Construction::draw_line_through(Operand p, Operand q, std::string label) {
  return record(StepKind::draw_line_through, {std::move(p), std::move(q)}, std::move(label));
}

StepRef Construction::draw_parallel(Operand through, Operand to, std::string label) {
  return record(StepKind::draw_parallel, {std::move(through), std::move(to)}, std::move(label));
}

StepRef Construction::draw_perpendicular(Operand through, Operand to, std::string label) {
  return record(StepKind::draw_perpendicular, {std::move(through), std::move(to)}, std::move(label));
}

StepRef Construction::mark_intersection(Operand l1, Operand l2, std::string label) {
  return record(StepKind::mark_intersection, {std::move(l1), std::move(l2)}, std::move(label));
}

StepRef Construction::read_x_intercept(Operand line, std::string label) {
  return record(StepKind::read_x_intercept, {std::move(line)}, std::move(label));
}

StepRef Construction::assert_parallel(Operand l1, Operand l2, bool expected, std::string label) {
  return record(StepKind::assert_parallel, {std::move(l1), std::move(l2)}, std::move(label), expected);
}

StepRef Construction::assert_congruent(const std::array<Operand, 6>& vertices, bool expected,
                                       std::string label) {
  return record(StepKind::assert_congruent, {vertices.begin(), vertices.end()}, std::move(label),
                expected);
}

StepRef Construction::assert_area_equal(const std::array<Operand, 6>& vertices, bool expected,
                                        std::string label) {
  return record(StepKind::assert_area_equal, {vertices.begin(), vertices.end()}, std::move(label),
                expected);
}

StepRef Construction::assert_equal(Operand x, Operand y, bool expected, std::string label) {
  return record(StepKind::assert_equal, {std::move(x), std::move(y)}, std::move(label), expected);
}

StepRef Construction::assert_less(Operand x, Operand y, bool expected, std::string label) {
  return record(StepKind::assert_less, {std::move(x), std::move(y)}, std::move(label), expected);
}

Point Construction::point(StepRef ref) const { return std::get<Point>(step(ref).result); }
Line Construction::line(StepRef ref) const { return std::get<Line>(step(ref).result); }
Rational Construction::scalar(StepRef ref) const {
  return std::get<Rational>(step(ref).result);
}
Assertion Construction::assertion(StepRef ref) const {
  return std::get<Assertion>(step(ref).result);
}

}  // namespace geomul
