#pragma once

#include <json.hpp>

#include "geomul/trace.hpp"

namespace geomul {

nlohmann::json trace_to_json(const ConstructionTrace& trace);
ConstructionTrace trace_from_json(const nlohmann::json& doc);

}  // namespace geomul
