#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace lrf
{
  struct property_result
  {
    std::string name;
    std::size_t checked = 0;
    std::size_t violations = 0;
    /// Description of the first violating instance, empty if none.
    std::string first_violation;
  };

  struct verify_report
  {
    std::uint64_t seed = 0;
    std::size_t samples = 0;
    std::vector<property_result> results;
    /// Observations that are reported but not asserted, as (key, value).
    std::vector<std::pair<std::string, std::size_t>> findings;

    bool passed() const;
  };

  /// Runs every property check over randomly generated systems, relations,
  /// lattices and progressions drawn from one generator seeded with `seed`.
  /// `samples` scales the number of sampled instances per property;
  /// exhaustive checks (gallery, bridge) run at fixed size.
  verify_report run_property_suite(std::uint64_t seed, std::size_t samples);

  /// Stable, pretty-printed JSON rendering.
  std::string to_json(const verify_report& report);
}
