#pragma once

#include <string>

#include "geomul/trace.hpp"

namespace geomul {

struct SvgOptions {
  double width = 640;  // pixels; the height follows the figure's aspect
  double point_radius = 3.5;
  std::string title;
};

/// Renders a construction trace as an SVG 1.1 document.
///
/// Each draw step becomes a <line> segment spanning the trace points (and
/// axis intercepts) that lie on it; a step whose line was already drawn is
/// not drawn again. Segments whose direction is shared with another drawn
/// segment carry the class "parallel-mark". Placed points, marked
/// intersections and read intercepts become labeled dots, and the origin is
/// labeled whenever the trace is non-empty. The viewport fits the
/// construction with a 10% margin. Coordinates are the only inexact values
/// in the engine: they are printed with 6 significant digits.
std::string emit_svg(const ConstructionTrace& trace, const SvgOptions& options = {});

}  // namespace geomul
