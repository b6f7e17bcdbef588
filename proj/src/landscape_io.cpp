#include "nsfland/landscape_io.hpp"

#include <algorithm>
#include <fstream>
#include <string>

#include "nsfland/errors.hpp"

namespace nsfland {

nlohmann::json to_json(const FitnessLandscape& l) {
  const auto& meta = l.metadata();
  return nlohmann::json{{"num_vars", l.num_vars()},
                        {"class", std::string(to_string(meta.cls))},
                        {"seed", meta.seed},
                        {"value_domain_size", meta.value_domain_size},
                        {"values", std::vector<Fitness>(l.values().begin(), l.values().end())}};
}

FitnessLandscape landscape_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ValidationError("landscape must be a JSON object");
  if (!j.contains("num_vars") || !j["num_vars"].is_number_integer()) {
    throw ValidationError("landscape is missing integer field 'num_vars'");
  }
  if (!j.contains("values") || !j["values"].is_array()) {
    throw ValidationError("landscape is missing array field 'values'");
  }
  const int num_vars = j["num_vars"].get<int>();
  std::vector<Fitness> values;
  values.reserve(j["values"].size());
  for (const auto& v : j["values"]) {
    if (!v.is_number_integer()) throw ValidationError("fitness values must be integers");
    values.push_back(v.get<Fitness>());
  }
  if (num_vars >= 1 && num_vars <= kMaxVars && values.size() != (std::size_t{1} << num_vars)) {
    throw ValidationError("values array has " + std::to_string(values.size()) +
                          " entries, expected 2^" + std::to_string(num_vars));
  }
  if (!j.contains("class") && !j.contains("value_domain_size")) {
    return FitnessLandscape(num_vars, std::move(values));
  }
  LandscapeMetadata meta;
  if (j.contains("class")) meta.cls = parse_landscape_class(j["class"].get<std::string>());
  if (j.contains("seed")) meta.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("value_domain_size")) {
    meta.value_domain_size = j["value_domain_size"].get<std::int64_t>();
  } else {
    meta.value_domain_size = values.empty() ? 1 : std::int64_t{*std::ranges::max_element(values)} + 1;
  }
  return FitnessLandscape(num_vars, std::move(values), meta);
}

std::vector<FitnessLandscape> load_landscapes(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw IoError("cannot parse " + path.string() + ": " + e.what());
  }
  std::vector<FitnessLandscape> out;
  try {
    if (doc.is_array()) {
      for (const auto& item : doc) out.push_back(landscape_from_json(item));
    } else {
      out.push_back(landscape_from_json(doc));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
  return out;
}

void save_landscape(const FitnessLandscape& l, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  out << to_json(l).dump() << '\n';
  if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace nsfland
