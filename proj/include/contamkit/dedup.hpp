#pragma once

#include <string>
#include <utility>
#include <vector>

#include "contamkit/providers.hpp"
#include "contamkit/types.hpp"

namespace contamkit {

// Which field the duplicate similarity is computed on.
enum class DedupField { Output, Instruction, Combined };

// Greedy forward scan in dataset order: a record is removed iff the cosine
// similarity of its text to any earlier KEPT record's text is >= threshold.
// The first member of every duplicate group survives; output order is a
// subsequence of input order. Embeddings are fetched in one batch, so the
// result depends only on record order and cosine values.
std::pair<Dataset, std::vector<std::string>> dedup_by_similarity(
    const Dataset& d, EmbeddingProvider& embedder, double threshold = 0.5,
    DedupField field = DedupField::Output);

}  // namespace contamkit
