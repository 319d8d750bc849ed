#include "contamkit/contamination.hpp"

#include <fstream>

#include <json.hpp>

#include "contamkit/errors.hpp"
#include "contamkit/rng.hpp"

namespace contamkit {

std::size_t contaminated_count(std::size_t n, int level) {
  return (n * static_cast<std::size_t>(level) + 50) / 100;
}

std::pair<Dataset, ContaminationScenario> build_scenario(
    const Dataset& clean, const Dataset& corrupted, int level, uint64_t seed) {
  if (level < 0 || level > 100) {
    throw DataError("contamination level must lie in 0..100, got " +
                    std::to_string(level));
  }
  if (clean.examples.size() != corrupted.examples.size()) {
    throw DataError("clean and corrupted datasets differ in size");
  }
  for (std::size_t i = 0; i < clean.examples.size(); ++i) {
    if (clean.examples[i].id != corrupted.examples[i].id) {
      throw DataError("clean/corrupted id mismatch at position " +
                      std::to_string(i) + ": \"" + clean.examples[i].id +
                      "\" vs \"" + corrupted.examples[i].id + "\"");
    }
  }

  const std::size_t n = clean.examples.size();
  const std::size_t k = contaminated_count(n, level);

  std::vector<std::string> ids;
  ids.reserve(n);
  for (const auto& ex : clean.examples) ids.push_back(ex.id);
  SplitRng rng(seed);
  rng.shuffle(ids);

  ContaminationScenario scenario;
  scenario.kind = kind_from_label(
      corrupted.provenance.count("transform")
          ? corrupted.provenance.at("transform")
          : kind_label(TransformKind::Clean));
  scenario.level = level;
  scenario.seed = seed;
  scenario.contaminated_ids.insert(ids.begin(), ids.begin() + k);

  Dataset mixed;
  mixed.name = clean.name + "_" + kind_label(scenario.kind) + "_" +
               std::to_string(level);
  mixed.provenance = clean.provenance;
  mixed.provenance["mix_kind"] = kind_label(scenario.kind);
  mixed.provenance["mix_level"] = std::to_string(level);
  mixed.provenance["mix_seed"] = std::to_string(seed);
  mixed.examples.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const bool contaminate =
        scenario.contaminated_ids.count(clean.examples[i].id) > 0;
    mixed.examples.push_back(contaminate ? corrupted.examples[i]
                                         : clean.examples[i]);
  }
  return {std::move(mixed), std::move(scenario)};
}

const std::vector<int>& grid_levels() {
  static const std::vector<int> levels = {25, 50, 75, 100};
  return levels;
}

std::vector<std::pair<Dataset, ContaminationScenario>> build_full_grid(
    const Dataset& clean,
    const std::map<TransformKind, Dataset>& corrupted_by_kind, uint64_t seed) {
  for (TransformKind kind : corruption_kinds()) {
    if (!corrupted_by_kind.count(kind)) {
      throw DataError("grid is missing the corrupted dataset for kind " +
                      kind_label(kind));
    }
  }

  std::vector<std::pair<Dataset, ContaminationScenario>> grid;
  grid.reserve(corruption_kinds().size() * grid_levels().size());
  for (TransformKind kind : corruption_kinds()) {
    const Dataset& corrupted = corrupted_by_kind.at(kind);
    for (int level : grid_levels()) {
      const uint64_t child_seed = derive_seed(
          seed, kind_label(kind) + ":" + std::to_string(level));
      auto [mixed, scenario] =
          build_scenario(clean, corrupted, level, child_seed);
      scenario.kind = kind;
      grid.emplace_back(std::move(mixed), std::move(scenario));
    }
  }
  return grid;
}

std::string scenario_to_json(const ContaminationScenario& scenario) {
  nlohmann::ordered_json j;
  j["kind"] = kind_label(scenario.kind);
  j["level"] = scenario.level;
  j["seed"] = scenario.seed;
  j["contaminated_ids"] = scenario.contaminated_ids;  // std::set -> sorted
  return j.dump(2);
}

ContaminationScenario scenario_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("invalid scenario manifest: ") + e.what());
  }
  ContaminationScenario s;
  s.kind = kind_from_label(j.at("kind").get<std::string>());
  s.level = j.at("level").get<int>();
  s.seed = j.at("seed").get<uint64_t>();
  for (const auto& id : j.at("contaminated_ids")) {
    s.contaminated_ids.insert(id.get<std::string>());
  }
  return s;
}

void save_scenario(const ContaminationScenario& scenario,
                   const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write manifest: " + path.string());
  out << scenario_to_json(scenario) << '\n';
}

ContaminationScenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open manifest: " + path.string());
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return scenario_from_json(text);
}

}  // namespace contamkit
