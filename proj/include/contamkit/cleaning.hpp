#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "contamkit/types.hpp"

namespace contamkit {

// Automatable cleaning rules. Each is a pure predicate over a record's
// instruction+input+output text; a record is removed when any enabled rule
// matches. Defaults per rule:
//   non_english   more than 20% of letters outside the basic Latin block
//   emoji         any code point in the emoji/pictograph blocks
//   url           http://, https:// or www. link
//   code_marker   fenced/inline code blocks or common code keywords
//   math_marker   LaTeX math or digit-operator-digit equations
//   image_request image generation/description requests
enum class CleaningRule {
  NonEnglish,
  Emoji,
  Url,
  CodeMarker,
  MathMarker,
  ImageRequest,
};

std::string rule_name(CleaningRule rule);
CleaningRule rule_from_name(const std::string& name);
const std::vector<CleaningRule>& all_cleaning_rules();

struct CleaningReport {
  std::size_t kept = 0;
  std::size_t removed = 0;
  std::vector<std::pair<std::string, std::string>> removals;  // (id, rule)
};

// True when the rule matches the record. Rules are evaluated in the order of
// all_cleaning_rules(); the first match is the one reported.
bool rule_matches(CleaningRule rule, const InstructionExample& ex);

std::pair<Dataset, CleaningReport> clean_dataset(
    const Dataset& d, const std::set<CleaningRule>& rules);

std::string cleaning_report_to_json(const CleaningReport& report);

}  // namespace contamkit
