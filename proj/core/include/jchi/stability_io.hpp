#pragma once

// File formats for the stability module.
//
//   σ file:            {"degree": d, "graph": <graph>,
//                       "sigma": [{"subgraph": [edge indices], "multidegrees": [[...], ...]}, ...]}
//   polarization file: {"degree": d, "phi": ["1/3", "-1/3", ...]}

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "jchi/stability.hpp"

namespace jchi {

std::string stability_to_json(const StabilityCondition& sigma);
StabilityCondition stability_from_json(std::string_view text);
StabilityCondition load_stability_file(const std::filesystem::path& path);

struct PolarizationFile {
  std::int64_t degree = 0;
  Polarization phi;
};

std::string polarization_to_json(const PolarizationFile& pol);
PolarizationFile polarization_from_json(std::string_view text);
PolarizationFile load_polarization_file(const std::filesystem::path& path);

}  // namespace jchi
