#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "possind/conjunction.hpp"
#include "possind/distribution.hpp"

namespace possind {

// Distribution documents:
//   {"variables": [{"name": "X1", "frame": ["0", "1"]}, ...],
//    "values": [{"assignment": {"X1": "0", ...}, "possibility": 0.6}, ...]}
// Unlisted assignments are 0. The scope is every listed variable.

Distribution distribution_from_json(std::string_view text);
Distribution load_distribution(const std::filesystem::path& path);

/// Writes the distribution as a standalone document over its scope
/// variables, listing every joint assignment.
std::string distribution_to_json(const Distribution& dist, int indent = 2);

/// Fuzz reproducer: a distribution document plus `conjunction` (CLI spec
/// string), `seed`, `property` and `detail`.
std::string reproducer_to_json(const Distribution& dist, const Conjunction& c,
                               std::uint64_t seed, std::string_view property,
                               std::string_view detail);

}  // namespace possind
