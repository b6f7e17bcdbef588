#pragma once

#include <filesystem>
#include <vector>

#include <json.hpp>

#include "nsfland/landscape.hpp"

namespace nsfland {

/// {"num_vars", "class", "seed", "value_domain_size", "values"}. Field order is
/// irrelevant; "class", "seed" and "value_domain_size" are optional on input.
nlohmann::json to_json(const FitnessLandscape& l);

/// Throws ValidationError on schema problems and DomainError on invalid data.
FitnessLandscape landscape_from_json(const nlohmann::json& j);

/// Reads a file holding either one landscape object or an array of them.
/// Throws IoError if the file cannot be read or parsed.
std::vector<FitnessLandscape> load_landscapes(const std::filesystem::path& path);

void save_landscape(const FitnessLandscape& l, const std::filesystem::path& path);

}  // namespace nsfland
