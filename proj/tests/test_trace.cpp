#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "geomul/errors.hpp"
#include "geomul/segment_arithmetic.hpp"
#include "geomul/svg.hpp"
#include "geomul/trace.hpp"

using namespace geomul;

namespace {

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t at = text.find(needle); at != std::string::npos; at = text.find(needle, at + 1)) ++n;
  return n;
}

bool has_kind(const ConstructionTrace& t, StepKind k) {
  for (const auto& s : t.steps) {
    if (s.kind == k) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("product trace has the six construction steps") {
  ConstructionTrace t = geom_mul_traced(2, 4).trace;
  REQUIRE(t.steps.size() == 6);
  CHECK(t.steps[0].kind == StepKind::place_point);
  CHECK(t.steps[3].kind == StepKind::draw_line_through);
  CHECK(t.steps[4].kind == StepKind::draw_parallel);
  CHECK(t.steps[5].kind == StepKind::read_x_intercept);
  CHECK(std::get<Rational>(t.steps[5].result) == 8);
  for (std::size_t i = 0; i < t.steps.size(); ++i) CHECK(t.steps[i].id == i);
}

TEST_CASE("replay") {
  CHECK(replay(geom_mul_traced(2, 4).trace));
  CHECK(replay(ConstructionTrace{}));

  ConstructionTrace tampered = geom_mul_traced(2, 4).trace;
  std::get<Rational>(tampered.steps[5].result) = 9;
  CHECK_FALSE(replay(tampered));

  Construction c;
  StepRef l1 = c.draw_line_through(Point{0, 0}, Point{1, 0});
  StepRef l2 = c.draw_line_through(Point{0, 0}, Point{0, 1});
  c.mark_intersection(l1, l2);
  ConstructionTrace moved = c.trace();
  std::get<Point>(moved.steps[2].result).x = 1;
  CHECK(replay(c.trace()));
  CHECK_FALSE(replay(moved));

  ConstructionTrace dangling = geom_mul_traced(2, 4).trace;
  std::get<StepRef>(dangling.steps[4].operands[0]).id = 40;
  CHECK_THROWS_AS(replay(dangling), EngineError);

  Construction failing;
  failing.assert_equal(Rational(1), Rational(2));
  CHECK_FALSE(replay(failing.trace()));
}

TEST_CASE("repeated steps are recorded once") {
  Construction c;
  StepRef a = c.place_point({1, 2}, "A");
  StepRef b = c.place_point({1, 2}, "B");
  CHECK(a == b);
  StepRef l = c.draw_line_through(a, Point{3, 3});
  CHECK(c.draw_line_through(a, Point{3, 3}) == l);
  CHECK(c.trace().steps.size() == 2);
}

TEST_CASE("engine errors surface from recording") {
  Construction c;
  StepRef l = c.draw_line_through(Point{0, 1}, Point{4, 0});
  StepRef m = c.draw_parallel(Point{0, 2}, l);
  CHECK_THROWS_AS(c.mark_intersection(l, m), EngineError);
  StepRef x = c.draw_line_through(Point{0, 0}, Point{1, 0});
  CHECK_THROWS_AS(c.read_x_intercept(x), EngineError);
}

TEST_CASE("json round trip") {
  ConstructionTrace t = geom_mul_traced(Rational::parse("-3/7"), Rational::parse("5/2")).trace;
  t.seed = 99;
  std::string json = emit_json(t);
  ConstructionTrace back = parse_json(json);
  CHECK(back == t);
  CHECK(emit_json(back) == json);
  CHECK(replay(back));

  std::string empty = emit_json(ConstructionTrace{});
  CHECK(empty.find("\"steps\": []") != std::string::npos);
  CHECK(parse_json(empty).steps.empty());

  std::string eight = emit_json(geom_mul_traced(2, 4).trace);
  CHECK(eight.find("\"scalar\": \"8\"") != std::string::npos);
}

TEST_CASE("json with assertion steps round trips") {
  TheoremReport r = check_distributivity(2, 1, 1);
  std::string json = emit_json(r.trace);
  CHECK(parse_json(json) == r.trace);
  CHECK(replay(parse_json(json)));
}

TEST_CASE("malformed json is rejected") {
  const nlohmann::json good = nlohmann::json::parse(emit_json(geom_mul_traced(2, 4).trace));
  auto rejects = [](const nlohmann::json& doc) {
    CHECK_THROWS_AS(parse_json(doc.dump()), EngineError);
  };
  CHECK_THROWS_AS(parse_json("{"), EngineError);
  CHECK_THROWS_AS(parse_json("[]"), EngineError);

  nlohmann::json forward = good;
  forward["steps"][4]["operands"][1] = 5;
  rejects(forward);
  nlohmann::json kind = good;
  kind["steps"][5]["kind"] = "read_y_intercept";
  rejects(kind);
  nlohmann::json scaled = good;
  scaled["steps"][3]["result"]["line"][0] = "2";
  rejects(scaled);
  nlohmann::json ids = good;
  ids["steps"][2]["id"] = 7;
  rejects(ids);
  nlohmann::json point_ref = good;
  point_ref["steps"][5]["operands"][0] = 0;
  // Well-formed but ill-typed: parsing accepts it, replay does not.
  ConstructionTrace typed = parse_json(point_ref.dump());
  CHECK_THROWS_AS(replay(typed), EngineError);
}

TEST_CASE("svg of the product figure") {
  std::string svg = emit_svg(geom_mul_traced(2, 4).trace);
  CHECK(count(svg, "class=\"parallel-mark") == 2);
  CHECK(count(svg, "class=\"axis x-axis\"") == 1);
  CHECK(count(svg, "class=\"axis y-axis\"") == 1);
  CHECK(count(svg, "<text class=\"label\"") == 5);
  CHECK(count(svg, "<circle class=\"point\"") == 5);
  CHECK(svg.rfind("</svg>") != std::string::npos);
}

TEST_CASE("svg of an empty trace has only axes") {
  std::string svg = emit_svg(ConstructionTrace{});
  CHECK(count(svg, "<line") == 2);
  CHECK(count(svg, "<circle") == 0);
  CHECK(count(svg, "class=\"parallel-mark") == 0);
}

TEST_CASE("svg of the distributivity witness") {
  // With b = 1 the unit hypotenuse carries ba, leaving three parallels.
  TheoremReport r = check_distributivity(3, 1, 2);
  REQUIRE(r.passed());
  CHECK(has_kind(r.trace, StepKind::assert_congruent));
  CHECK(count(emit_svg(r.trace), "class=\"parallel-mark") == 3);
}

TEST_CASE("svg output is deterministic") {
  ConstructionTrace t = geom_mul_traced(Rational::parse("7/3"), -2).trace;
  CHECK(emit_svg(t) == emit_svg(t));
  CHECK(emit_svg(t) == emit_svg(parse_json(emit_json(t))));
}
