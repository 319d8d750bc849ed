#include "contamkit/transforms.hpp"

#include <algorithm>
#include <numeric>

#include "contamkit/errors.hpp"
#include "contamkit/rng.hpp"
#include "contamkit/text.hpp"
#include "contamkit/utf8.hpp"

namespace contamkit {

std::string reverse_words(const std::string& text) {
  auto tokens = text::tokenize_words(text);
  std::reverse(tokens.begin(), tokens.end());
  return text::join_tokens(tokens);
}

std::string reverse_chars(const std::string& text) {
  auto clusters = utf8::grapheme_clusters(text);
  std::string out;
  out.reserve(text.size());
  for (auto it = clusters.rbegin(); it != clusters.rend(); ++it) {
    out.append(it->data(), it->size());
  }
  return out;
}

namespace {

// Fixed-point-free permutation by rejection: shuffle until no index maps to
// itself. Expected tries are ~e, independent of size.
std::vector<std::size_t> draw_derangement(std::size_t n, SplitRng& rng) {
  std::vector<std::size_t> perm(n);
  while (true) {
    std::iota(perm.begin(), perm.end(), 0);
    rng.shuffle(perm);
    bool fixed_point = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (perm[i] == i) {
        fixed_point = true;
        break;
      }
    }
    if (!fixed_point) return perm;
  }
}

}  // namespace

Dataset make_irrelevant(const Dataset& d, uint64_t seed, bool derange) {
  const std::size_t n = d.examples.size();
  if (n < 2) {
    throw DataError("irrelevant transform needs at least 2 records, got " +
                    std::to_string(n));
  }

  SplitRng rng(seed);
  std::vector<std::size_t> source(n);
  if (derange) {
    source = draw_derangement(n, rng);
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      source[i] = rng.index_excluding(n, i);
    }
  }

  Dataset out;
  out.name = d.name;
  out.provenance = d.provenance;
  out.provenance["transform"] = kind_label(TransformKind::Irrelevant);
  out.provenance["seed"] = std::to_string(seed);
  out.examples = d.examples;
  for (std::size_t i = 0; i < n; ++i) {
    out.examples[i].output = d.examples[source[i]].output;
  }
  return out;
}

Dataset apply_transform(const Dataset& d, TransformKind kind, uint64_t seed,
                        const CfactProviders* providers,
                        std::vector<CfactFailure>* cfact_failures) {
  if (kind == TransformKind::Irrelevant) return make_irrelevant(d, seed);

  Dataset out;
  out.name = d.name;
  out.provenance = d.provenance;
  out.provenance["transform"] = kind_label(kind);
  out.provenance["seed"] = std::to_string(seed);
  out.examples = d.examples;

  switch (kind) {
    case TransformKind::Clean:
      break;
    case TransformKind::WordReversal:
      for (auto& ex : out.examples) ex.output = reverse_words(ex.output);
      break;
    case TransformKind::CharReversal:
      for (auto& ex : out.examples) ex.output = reverse_chars(ex.output);
      break;
    case TransformKind::CounterFactual: {
      if (providers == nullptr || providers->generator == nullptr ||
          providers->scorer == nullptr) {
        throw DataError(
            "counterfactual transform requires generator and scorer providers");
      }
      for (auto& ex : out.examples) {
        CfactResult result = generate_counterfactual(
            ex, *providers->generator, *providers->scorer,
            providers->max_attempts);
        if (!result.accepted() && cfact_failures != nullptr) {
          cfact_failures->push_back({ex.id, result});
        }
        ex.output = result.candidate;
      }
      break;
    }
    case TransformKind::Irrelevant:
      break;  // handled above
  }
  return out;
}

}  // namespace contamkit
