#pragma once

/**
 * @file trace.hpp
 * @brief Construction traces: the ordered, replayable record of straightedge
 * steps and assertions behind every geometric operation.
 *
 * A step's operands are either references to strictly earlier steps or
 * literal values. Replaying a trace re-executes every step against the plane
 * kernel and checks that each recorded result is reproduced exactly and that
 * every assertion holds.
 */

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "geomul/plane.hpp"
#include "geomul/rational.hpp"

namespace geomul {

enum class StepKind {
  place_point,
  draw_line_through,
  draw_parallel,
  draw_perpendicular,
  mark_intersection,
  read_x_intercept,
  assert_parallel,
  assert_congruent,
  assert_area_equal,
  assert_equal,
  assert_less,
};

std::string_view to_string(StepKind kind) noexcept;
std::optional<StepKind> step_kind_from_string(std::string_view name) noexcept;
bool is_assertion(StepKind kind) noexcept;

struct StepRef {
  std::size_t id;

  friend bool operator==(const StepRef&, const StepRef&) = default;
};

using Operand = std::variant<StepRef, Point, Line, Rational>;

/// Outcome of an assertion step: the check holds when the observed predicate
/// value matches the expected one.
struct Assertion {
  bool expected = true;
  bool observed = true;

  bool holds() const { return expected == observed; }
  friend bool operator==(const Assertion&, const Assertion&) = default;
};

using StepResult = std::variant<Point, Line, Rational, Assertion>;

struct ConstructionStep {
  std::size_t id = 0;
  StepKind kind = StepKind::place_point;
  std::vector<Operand> operands;
  StepResult result;
  std::string label;

  friend bool operator==(const ConstructionStep&, const ConstructionStep&) = default;
};

struct ConstructionTrace {
  std::string op;
  std::vector<std::string> inputs;
  std::optional<std::int64_t> seed;
  std::vector<ConstructionStep> steps;

  bool assertions_hold() const;
  friend bool operator==(const ConstructionTrace&, const ConstructionTrace&) = default;
};

/// Re-executes a step from its operands. For assertion steps the returned
/// Assertion carries the recomputed `observed` value and `expected` = true.
/// Throws EngineError(MalformedTrace) for dangling or ill-typed references;
/// plane-kernel errors propagate unchanged.
StepResult evaluate_step(StepKind kind, const std::vector<Operand>& operands,
                         const std::vector<ConstructionStep>& prior, std::size_t self_id);

/// True iff every step reproduces its recorded result and every assertion
/// holds. Throws EngineError(MalformedTrace) on dangling references.
bool replay(const ConstructionTrace& trace);

/// Records steps while an operation runs. Each recording call evaluates the
/// step with the plane kernel; a step identical to an earlier one (same kind,
/// operands and result) is not recorded twice and the earlier id is returned.
class Construction {
 public:
  explicit Construction(std::string op = {}, std::vector<std::string> inputs = {},
                        std::optional<std::int64_t> seed = std::nullopt);

  StepRef place_point(const Point& p, std::string label = {});
  StepRef draw_line_through(Operand p, Operand q, std::string label = {});
  StepRef draw_parallel(Operand through, Operand to, std::string label = {});
  StepRef draw_perpendicular(Operand through, Operand to, std::string label = {});
  StepRef mark_intersection(Operand l1, Operand l2, std::string label = {});
  StepRef read_x_intercept(Operand line, std::string label = {});

  StepRef assert_parallel(Operand l1, Operand l2, bool expected = true, std::string label = {});
  StepRef assert_congruent(const std::array<Operand, 6>& vertices, bool expected = true,
                           std::string label = {});
  StepRef assert_area_equal(const std::array<Operand, 6>& vertices, bool expected = true,
                            std::string label = {});
  StepRef assert_equal(Operand x, Operand y, bool expected = true, std::string label = {});
  StepRef assert_less(Operand x, Operand y, bool expected = true, std::string label = {});

  /// Generic entry point; `expected` is only used for assertion kinds.
  StepRef record(StepKind kind, std::vector<Operand> operands, std::string label = {},
                 bool expected = true);

  const ConstructionStep& step(StepRef ref) const { return trace_.steps.at(ref.id); }
  // Accessors return copies: recording more steps may reallocate storage.
  Point point(StepRef ref) const;
  Line line(StepRef ref) const;
  Rational scalar(StepRef ref) const;
  Assertion assertion(StepRef ref) const;

  bool assertions_hold() const { return trace_.assertions_hold(); }
  const ConstructionTrace& trace() const { return trace_; }
  ConstructionTrace take() && { return std::move(trace_); }

 private:
  ConstructionTrace trace_;
};

/// Deterministic JSON (sorted keys, rationals as exact "p/q" strings).
std::string emit_json(const ConstructionTrace& trace, int indent = 2);

/// Inverse of emit_json. Throws EngineError(MalformedTrace) on schema errors.
ConstructionTrace parse_json(std::string_view text);

}  // namespace geomul
