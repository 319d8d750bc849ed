#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "contamkit/types.hpp"

namespace contamkit {

struct ContaminationScenario {
  TransformKind kind = TransformKind::Clean;
  int level = 0;  // percent
  uint64_t seed = 0;
  std::set<std::string> contaminated_ids;
};

// Number of contaminated records for a level: round-half-up of level% of n.
std::size_t contaminated_count(std::size_t n, int level);

// Mixes `corrupted` into `clean` at the given level: the id list is shuffled
// with the seeded generator and the first k ids take the corrupted record,
// everything else stays clean, in original order. Both datasets must have
// identical id sequences. Levels outside {25,50,75,100} are accepted for
// research use as long as they lie in 0..100.
std::pair<Dataset, ContaminationScenario> build_scenario(
    const Dataset& clean, const Dataset& corrupted, int level, uint64_t seed);

// One scenario per (kind, level) pair over the four corruption kinds and
// levels {25,50,75,100}; each child seed derives from the master seed and
// the "<kind>:<level>" label, so scenarios are independent and reproducible.
std::vector<std::pair<Dataset, ContaminationScenario>> build_full_grid(
    const Dataset& clean,
    const std::map<TransformKind, Dataset>& corrupted_by_kind, uint64_t seed);

const std::vector<int>& grid_levels();

// Manifest: {"kind","level","seed","contaminated_ids"} with ids sorted
// lexicographically for stable diffs.
std::string scenario_to_json(const ContaminationScenario& scenario);
ContaminationScenario scenario_from_json(const std::string& text);
void save_scenario(const ContaminationScenario& scenario,
                   const std::filesystem::path& path);
ContaminationScenario load_scenario(const std::filesystem::path& path);

}  // namespace contamkit
