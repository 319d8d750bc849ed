#include "contamkit/dedup.hpp"

#include "contamkit/metrics.hpp"

namespace contamkit {

namespace {

std::string field_text(const InstructionExample& ex, DedupField field) {
  switch (field) {
    case DedupField::Output:
      return ex.output;
    case DedupField::Instruction:
      return ex.instruction;
    case DedupField::Combined:
      return ex.instruction + "\n" + ex.input + "\n" + ex.output;
  }
  return ex.output;
}

}  // namespace

std::pair<Dataset, std::vector<std::string>> dedup_by_similarity(
    const Dataset& d, EmbeddingProvider& embedder, double threshold,
    DedupField field) {
  Dataset out;
  out.name = d.name;
  out.provenance = d.provenance;
  out.provenance["dedup_threshold"] = std::to_string(threshold);

  std::vector<std::string> removed;
  if (d.examples.empty()) return {std::move(out), std::move(removed)};

  std::vector<std::string> texts;
  texts.reserve(d.examples.size());
  for (const auto& ex : d.examples) texts.push_back(field_text(ex, field));
  const auto vectors = embedder.embed_batch(texts);

  std::vector<std::size_t> kept_indices;
  for (std::size_t i = 0; i < d.examples.size(); ++i) {
    bool duplicate = false;
    for (std::size_t k : kept_indices) {
      if (cosine_similarity(vectors[i], vectors[k]) >= threshold) {
        duplicate = true;
        break;
      }
    }
    if (duplicate) {
      removed.push_back(d.examples[i].id);
    } else {
      kept_indices.push_back(i);
      out.examples.push_back(d.examples[i]);
    }
  }
  return {std::move(out), std::move(removed)};
}

}  // namespace contamkit
