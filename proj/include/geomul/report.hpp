#pragma once

#include <json.hpp>

#include "geomul/segment_arithmetic.hpp"

namespace geomul {

/// A report is its witness trace document ({"op","inputs","seed","steps"})
/// extended with "verdict", "detail" and "values".
nlohmann::json report_to_json(const TheoremReport& report);

std::string_view to_string(Verdict v) noexcept;

}  // namespace geomul
