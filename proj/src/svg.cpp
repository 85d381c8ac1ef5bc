#include "geomul/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <optional>
#include <sstream>
#include <vector>

#include "geomul/errors.hpp"

namespace geomul {

namespace {

struct LabeledPoint {
  Point at;
  std::string label;
};

struct DrawnLine {
  Line line;
  std::string label;
  std::string kind;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

std::optional<Point> axis_point(const Line& l, bool x_axis) {
  try {
    return x_axis ? Point{x_intercept(l), 0} : Point{0, y_intercept(l)};
  } catch (const EngineError&) {
    return std::nullopt;
  }
}

// Rational bounding box of the figure.
struct Box {
  Rational min_x = 0, max_x = 0, min_y = 0, max_y = 0;

  void include(const Point& p) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
};

// Parameter of p along a line's direction, for ordering collinear points.
Rational along(const Line& l, const Point& p) {
  return Rational(l.b()) * p.x - Rational(l.a()) * p.y;
}

// Clips a line to the box; returns the two extreme crossing points.
std::optional<std::pair<Point, Point>> clip(const Line& l, const Box& box) {
  std::vector<Point> hits;
  auto try_add = [&](const Point& p) {
    if (p.x >= box.min_x && p.x <= box.max_x && p.y >= box.min_y && p.y <= box.max_y) hits.push_back(p);
  };
  for (const Rational& x : {box.min_x, box.max_x}) {
    if (l.b() != 0) try_add({x, -(Rational(l.a()) * x + Rational(l.c())) / Rational(l.b())});
  }
  for (const Rational& y : {box.min_y, box.max_y}) {
    if (l.a() != 0) try_add({-(Rational(l.b()) * y + Rational(l.c())) / Rational(l.a()), y});
  }
  if (hits.size() < 2) return std::nullopt;
  auto [lo, hi] = std::minmax_element(hits.begin(), hits.end(), [&](const Point& p, const Point& q) {
    return along(l, p) < along(l, q);
  });
  if (*lo == *hi) return std::nullopt;
  return std::make_pair(*lo, *hi);
}

}  // namespace

std::string emit_svg(const ConstructionTrace& trace, const SvgOptions& options) {
  std::vector<LabeledPoint> points;
  std::vector<DrawnLine> lines;
  auto add_point = [&](const Point& p, const std::string& label) {
    for (const auto& lp : points) {
      if (lp.at == p) return;
    }
    points.push_back({p, label});
  };

  for (const ConstructionStep& s : trace.steps) {
    switch (s.kind) {
      case StepKind::place_point:
      case StepKind::mark_intersection:
        add_point(std::get<Point>(s.result), s.label.empty() ? to_string(std::get<Point>(s.result)) : s.label);
        break;
      case StepKind::read_x_intercept: {
        const auto& x = std::get<Rational>(s.result);
        add_point({x, 0}, s.label.empty() ? x.to_string() : s.label);
        break;
      }
      case StepKind::draw_line_through:
      case StepKind::draw_parallel:
      case StepKind::draw_perpendicular: {
        const auto& l = std::get<Line>(s.result);
        bool seen = std::any_of(lines.begin(), lines.end(), [&](const DrawnLine& d) { return d.line == l; });
        if (!seen) lines.push_back({l, s.label, std::string(to_string(s.kind))});
        break;
      }
      default:
        break;
    }
  }
  if (!trace.steps.empty()) add_point({0, 0}, "0");

  // Extent: every labeled point plus the axis intercepts of every line.
  Box box;
  box.min_x = box.min_y = -1;
  box.max_x = box.max_y = 1;
  bool first = true;
  auto include = [&](const Point& p) {
    if (first) {
      box = Box{p.x, p.x, p.y, p.y};
      first = false;
    } else {
      box.include(p);
    }
  };
  for (const auto& lp : points) include(lp.at);
  for (const auto& d : lines) {
    if (auto p = axis_point(d.line, true)) include(*p);
    if (auto p = axis_point(d.line, false)) include(*p);
  }
  if (first) {
    box = Box{-1, 1, -1, 1};
  }
  Rational span = std::max(box.max_x - box.min_x, box.max_y - box.min_y);
  if (span.is_zero()) span = 2;
  Rational margin = span / 10;
  box.min_x -= margin;
  box.max_x += margin;
  box.min_y -= margin;
  box.max_y += margin;

  const double w_world = (box.max_x - box.min_x).to_double();
  const double h_world = (box.max_y - box.min_y).to_double();
  const double scale = options.width / std::max(w_world, h_world);
  const double width = w_world * scale;
  const double height = h_world * scale;
  const double x0 = box.min_x.to_double();
  const double y1 = box.max_y.to_double();
  auto sx = [&](const Rational& x) { return fmt((x.to_double() - x0) * scale); };
  auto sy = [&](const Rational& y) { return fmt((y1 - y.to_double()) * scale); };

  // Direction groups: a line is parallel-classed when another drawn line
  // shares its direction.
  std::vector<int> group(lines.size(), -1);
  int groups = 0;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (group[i] >= 0) continue;
    bool shared = false;
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      if (group[j] < 0 && is_parallel(lines[i].line, lines[j].line)) {
        group[j] = groups;
        shared = true;
      }
    }
    if (shared) group[i] = groups++;
  }

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(width)
     << "\" height=\"" << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << " " << fmt(height)
     << "\">\n";
  std::string title = options.title.empty() ? trace.op : options.title;
  if (!title.empty()) os << "  <title>" << escape(title) << "</title>\n";
  os << "  <style>\n"
     << "    .axis { stroke: #999; stroke-width: 1; }\n"
     << "    .construction { stroke: #333; stroke-width: 1.5; fill: none; }\n"
     << "    .parallel-mark { stroke: #1f5fbf; stroke-width: 1.5; stroke-dasharray: 6 3; fill: none; }\n"
     << "    .point { fill: #000; }\n"
     << "    .label { font-family: sans-serif; font-size: 12px; }\n"
     << "  </style>\n";

  os << "  <line class=\"axis x-axis\" x1=\"" << sx(box.min_x) << "\" y1=\"" << sy(0) << "\" x2=\""
     << sx(box.max_x) << "\" y2=\"" << sy(0) << "\"/>\n";
  os << "  <line class=\"axis y-axis\" x1=\"" << sx(0) << "\" y1=\"" << sy(box.min_y) << "\" x2=\""
     << sx(0) << "\" y2=\"" << sy(box.max_y) << "\"/>\n";

  for (std::size_t i = 0; i < lines.size(); ++i) {
    const Line& l = lines[i].line;
    // Span the known points on the line; fall back to the full viewport.
    std::vector<Point> on_line;
    for (const auto& lp : points) {
      if (l.contains(lp.at)) on_line.push_back(lp.at);
    }
    for (bool x_axis : {true, false}) {
      if (auto p = axis_point(l, x_axis)) on_line.push_back(*p);
    }
    std::optional<std::pair<Point, Point>> ends;
    if (!on_line.empty()) {
      auto [lo, hi] = std::minmax_element(on_line.begin(), on_line.end(), [&](const Point& p, const Point& q) {
        return along(l, p) < along(l, q);
      });
      if (!(*lo == *hi)) ends = std::make_pair(*lo, *hi);
    }
    if (!ends) ends = clip(l, box);
    if (!ends) continue;
    std::string cls = group[i] >= 0 ? "parallel-mark parallel-group-" + std::to_string(group[i])
                                    : "construction";
    os << "  <line class=\"" << cls << "\" data-step=\"" << lines[i].kind << "\" x1=\""
       << sx(ends->first.x) << "\" y1=\"" << sy(ends->first.y) << "\" x2=\"" << sx(ends->second.x)
       << "\" y2=\"" << sy(ends->second.y) << "\">";
    os << "<title>" << escape(lines[i].label.empty() ? to_string(l) : lines[i].label + ": " + to_string(l))
       << "</title></line>\n";
  }

  for (const auto& lp : points) {
    os << "  <circle class=\"point\" cx=\"" << sx(lp.at.x) << "\" cy=\"" << sy(lp.at.y) << "\" r=\""
       << fmt(options.point_radius) << "\"/>\n";
    os << "  <text class=\"label\" x=\"" << sx(lp.at.x) << "\" y=\"" << sy(lp.at.y) << "\" dx=\"5\" dy=\"-5\">"
       << escape(lp.label) << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace geomul
