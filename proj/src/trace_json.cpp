#include "geomul/trace_json.hpp"

#include "geomul/errors.hpp"

namespace geomul {

using nlohmann::json;

namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw EngineError(ErrorCode::MalformedTrace, what);
}

json point_json(const Point& p) { return json::array({p.x.to_string(), p.y.to_string()}); }

json line_json(const Line& l) {
  return json::array({l.a().get_str(), l.b().get_str(), l.c().get_str()});
}

json value_json(const Operand& op) {
  return std::visit(
      [](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, StepRef>) {
          return v.id;
        } else if constexpr (std::is_same_v<T, Point>) {
          return json{{"point", point_json(v)}};
        } else if constexpr (std::is_same_v<T, Line>) {
          return json{{"line", line_json(v)}};
        } else {
          return json{{"scalar", v.to_string()}};
        }
      },
      op);
}

json result_json(const StepResult& r) {
  return std::visit(
      [](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Point>) {
          return json{{"point", point_json(v)}};
        } else if constexpr (std::is_same_v<T, Line>) {
          return json{{"line", line_json(v)}};
        } else if constexpr (std::is_same_v<T, Rational>) {
          return json{{"scalar", v.to_string()}};
        } else {
          return json{{"assertion", {{"expected", v.expected}, {"observed", v.observed}}}};
        }
      },
      r);
}

Rational rational_from(const json& j) {
  if (!j.is_string()) malformed("expected a rational string, got " + j.dump());
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    malformed(e.what());
  }
}

BigInt integer_from(const json& j) {
  if (!j.is_string()) malformed("expected an integer string, got " + j.dump());
  BigInt v;
  if (v.set_str(j.get<std::string>(), 10) != 0) malformed("bad integer " + j.dump());
  return v;
}

Point point_from(const json& j) {
  if (!j.is_array() || j.size() != 2) malformed("point must be [x, y], got " + j.dump());
  return {rational_from(j[0]), rational_from(j[1])};
}

Line line_from(const json& j) {
  if (!j.is_array() || j.size() != 3) malformed("line must be [a, b, c], got " + j.dump());
  BigInt a = integer_from(j[0]), b = integer_from(j[1]), c = integer_from(j[2]);
  try {
    Line l = Line::from_coefficients(Rational(a), Rational(b), Rational(c));
    if (l.a() != a || l.b() != b || l.c() != c) malformed("line not in canonical form: " + j.dump());
    return l;
  } catch (const EngineError& e) {
    if (e.code() == ErrorCode::MalformedTrace) throw;
    malformed(e.what());
  }
}

template <typename Value>
Value tagged_from(const json& j) {
  if (!j.is_object() || j.size() != 1) malformed("expected a single-key object, got " + j.dump());
  const auto& [key, body] = *j.items().begin();
  if (key == "point") return point_from(body);
  if (key == "line") return line_from(body);
  if (key == "scalar") return rational_from(body);
  if constexpr (std::is_same_v<Value, StepResult>) {
    if (key == "assertion") {
      if (!body.is_object() || !body.contains("expected") || !body.contains("observed") ||
          !body["expected"].is_boolean() || !body["observed"].is_boolean()) {
        malformed("bad assertion " + body.dump());
      }
      return Assertion{body["expected"].get<bool>(), body["observed"].get<bool>()};
    }
  }
  malformed("unknown value tag '" + key + "'");
}

}  // namespace

json trace_to_json(const ConstructionTrace& trace) {
  json steps = json::array();
  for (const ConstructionStep& s : trace.steps) {
    json operands = json::array();
    for (const Operand& op : s.operands) operands.push_back(value_json(op));
    steps.push_back({{"id", s.id},
                     {"kind", to_string(s.kind)},
                     {"operands", std::move(operands)},
                     {"result", result_json(s.result)},
                     {"label", s.label}});
  }
  return json{{"op", trace.op},
              {"inputs", trace.inputs},
              {"seed", trace.seed ? json(*trace.seed) : json(nullptr)},
              {"steps", std::move(steps)}};
}

ConstructionTrace trace_from_json(const json& doc) {
  if (!doc.is_object()) malformed("trace must be an object");
  for (const char* key : {"op", "inputs", "seed", "steps"}) {
    if (!doc.contains(key)) malformed(std::string("missing key '") + key + "'");
  }
  ConstructionTrace trace;
  try {
    trace.op = doc["op"].get<std::string>();
    trace.inputs = doc["inputs"].get<std::vector<std::string>>();
    if (!doc["seed"].is_null()) trace.seed = doc["seed"].get<std::int64_t>();
  } catch (const json::exception& e) {
    malformed(e.what());
  }
  if (!doc["steps"].is_array()) malformed("'steps' must be an array");
  for (const json& js : doc["steps"]) {
    ConstructionStep step;
    try {
      step.id = js.at("id").get<std::size_t>();
      std::string kind = js.at("kind").get<std::string>();
      auto parsed = step_kind_from_string(kind);
      if (!parsed) malformed("unknown step kind '" + kind + "'");
      step.kind = *parsed;
      step.label = js.at("label").get<std::string>();
      for (const json& op : js.at("operands")) {
        if (op.is_number_unsigned() || op.is_number_integer()) {
          auto id = op.get<std::int64_t>();
          if (id < 0 || static_cast<std::size_t>(id) >= step.id) {
            malformed("step " + std::to_string(step.id) + " references step " + std::to_string(id));
          }
          step.operands.emplace_back(StepRef{static_cast<std::size_t>(id)});
        } else {
          step.operands.push_back(tagged_from<Operand>(op));
        }
      }
      step.result = tagged_from<StepResult>(js.at("result"));
    } catch (const json::exception& e) {
      malformed(e.what());
    }
    if (step.id != trace.steps.size()) malformed("step ids must be consecutive from 0");
    trace.steps.push_back(std::move(step));
  }
  return trace;
}

std::string emit_json(const ConstructionTrace& trace, int indent) {
  return trace_to_json(trace).dump(indent);
}

ConstructionTrace parse_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    malformed(e.what());
  }
  return trace_from_json(doc);
}

}  // namespace geomul
