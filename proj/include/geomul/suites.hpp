#pragma once

/**
 * @file suites.hpp
 * @brief Seeded verification suites driving every theorem checker.
 *
 * Each suite runs its fixed cases (the worked numbers from the source
 * material, kept as permanent regression anchors) followed by `cases`
 * randomized cases. A suite's random stream depends only on the seed and the
 * suite itself, so selecting a subset of suites does not change their cases.
 */

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "geomul/segment_arithmetic.hpp"

namespace geomul {

enum class Suite {
  def1,
  signs,
  repeated,
  inverse,
  order,
  euclid37,
  areas,
  commut,
  assoc,
  distrib,
  fractions,
  similar,
};

std::string_view to_string(Suite s) noexcept;
std::optional<Suite> suite_from_string(std::string_view name) noexcept;
const std::vector<Suite>& all_suites();

struct SuiteConfig {
  std::vector<Suite> suites = all_suites();
  std::size_t cases = 1000;
  std::uint64_t seed = 42;
};

struct SuiteOutcome {
  Suite suite = Suite::def1;
  std::size_t fixed_cases = 0;
  std::size_t random_cases = 0;
  /// One report per check, fixed cases first, in case order.
  std::vector<TheoremReport> reports;

  std::size_t passed() const;
  std::size_t failed() const;
};

SuiteOutcome run_suite(Suite suite, std::size_t cases, std::uint64_t seed);
std::vector<SuiteOutcome> run_suites(const SuiteConfig& config);

/// {"seed", "cases", "suites": [{"suite", "passed", "failed", "reports"}]}.
/// With `failures_only`, passing reports are omitted.
nlohmann::json suites_to_json(const SuiteConfig& config, const std::vector<SuiteOutcome>& outcomes,
                              bool failures_only = false);

}  // namespace geomul
