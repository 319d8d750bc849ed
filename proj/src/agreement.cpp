#include "contamkit/agreement.hpp"

#include <fstream>
#include <map>

#include <json.hpp>

#include "contamkit/errors.hpp"

namespace contamkit {

void LabelPairSet::validate() const {
  if (labels_a.empty()) throw DataError("label pair set is empty");
  if (labels_a.size() != labels_b.size()) {
    throw DataError("label vectors differ in length: " +
                    std::to_string(labels_a.size()) + " vs " +
                    std::to_string(labels_b.size()));
  }
  if (!ids.empty() && ids.size() != labels_a.size()) {
    throw DataError("id list length does not match label vectors");
  }
}

double percent_agreement(const LabelPairSet& pairs) {
  pairs.validate();
  std::size_t agree = 0;
  for (std::size_t i = 0; i < pairs.labels_a.size(); ++i) {
    if (pairs.labels_a[i] == pairs.labels_b[i]) ++agree;
  }
  return 100.0 * static_cast<double>(agree) /
         static_cast<double>(pairs.labels_a.size());
}

double cohens_kappa(const LabelPairSet& pairs) {
  pairs.validate();
  const double n = static_cast<double>(pairs.labels_a.size());

  std::size_t agree = 0;
  std::map<std::string, std::size_t> marginal_a;
  std::map<std::string, std::size_t> marginal_b;
  for (std::size_t i = 0; i < pairs.labels_a.size(); ++i) {
    if (pairs.labels_a[i] == pairs.labels_b[i]) ++agree;
    ++marginal_a[pairs.labels_a[i]];
    ++marginal_b[pairs.labels_b[i]];
  }

  const double p_o = static_cast<double>(agree) / n;
  double p_e = 0.0;
  for (const auto& [label, count_a] : marginal_a) {
    auto it = marginal_b.find(label);
    if (it == marginal_b.end()) continue;
    p_e += (static_cast<double>(count_a) / n) *
           (static_cast<double>(it->second) / n);
  }

  if (p_e >= 1.0) {
    if (p_o == 1.0) return 1.0;  // both raters constant and identical
    throw DataError("kappa is undefined: chance agreement is 1 with p_o < 1");
  }
  return (p_o - p_e) / (1.0 - p_e);
}

LabelPairSet load_label_pairs(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open label pair file: " + path.string());
  LabelPairSet pairs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
      pairs.ids.push_back(j.at("id").get<std::string>());
      pairs.labels_a.push_back(j.at("a").get<std::string>());
      pairs.labels_b.push_back(j.at("b").get<std::string>());
    } catch (const nlohmann::json::exception& e) {
      throw DataError(path.string() + " line " + std::to_string(line_no) +
                      ": " + e.what());
    }
  }
  return pairs;
}

std::string agreement_to_json(const std::string& criterion,
                              const LabelPairSet& pairs) {
  nlohmann::ordered_json j;
  j["criterion"] = criterion;
  j["percent_agreement"] = percent_agreement(pairs);
  j["kappa"] = cohens_kappa(pairs);
  return j.dump(2);
}

}  // namespace contamkit
