#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "contamkit/counterfactual.hpp"
#include "contamkit/types.hpp"

namespace contamkit {

// Reverses the token order of `text` under the word/punctuation tokenizer
// and joins with single spaces. "Hey, there." -> ". there , Hey".
std::string reverse_words(const std::string& text);

// Reverses the whole string as a sequence of extended grapheme clusters;
// whitespace participates like any other character. An involution for any
// text that segments into well-formed clusters.
std::string reverse_chars(const std::string& text);

// Replaces every output with the output of a different record (j != i),
// sampled uniformly and independently per record from the seeded generator.
// With derange=true a fixed-point-free permutation is drawn instead, so
// every output is used exactly once.
Dataset make_irrelevant(const Dataset& d, uint64_t seed, bool derange = false);

// Applies one corruption operator across the dataset. Ids, instructions,
// and inputs are never touched; provenance records the kind and seed.
// CounterFactual requires providers; records whose generation loop exhausts
// max_attempts keep their best-scoring candidate and are also appended to
// *cfact_failures (when given) for the side-channel file.
Dataset apply_transform(const Dataset& d, TransformKind kind, uint64_t seed,
                        const CfactProviders* providers = nullptr,
                        std::vector<CfactFailure>* cfact_failures = nullptr);

}  // namespace contamkit
