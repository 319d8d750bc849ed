#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace contamkit {

// Paired categorical labels from two raters over the same items.
struct LabelPairSet {
  std::vector<std::string> ids;
  std::vector<std::string> labels_a;
  std::vector<std::string> labels_b;

  void validate() const;  // throws DataError on empty or length mismatch
};

// 100 * (positions where both raters agree) / n.
double percent_agreement(const LabelPairSet& pairs);

// Cohen's kappa (p_o - p_e)/(1 - p_e) over the shared label alphabet.
// Degenerate p_e == 1 returns 1 when agreement is perfect and throws
// otherwise (kappa is undefined there).
double cohens_kappa(const LabelPairSet& pairs);

// Line format {"id","a","b"}; output {"criterion","percent_agreement",
// "kappa"}.
LabelPairSet load_label_pairs(const std::filesystem::path& path);
std::string agreement_to_json(const std::string& criterion,
                              const LabelPairSet& pairs);

}  // namespace contamkit
