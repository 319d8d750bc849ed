#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "contamkit/providers.hpp"

namespace contamkit {

struct MetricValue {
  std::string name;
  double value = 0.0;
  std::map<std::string, double> components;
};

// Sentence-level BLEU: uniform weights over n = 1..min(4, candidate length),
// clipped n-gram precision, brevity penalty exp(1 - r/c) when c < r, and
// add-one smoothing applied only to orders whose match count is zero.
// Empty candidate scores 0. Components: p1..pN, brevity_penalty.
MetricValue bleu(const std::string& candidate, const std::string& reference);

// Corpus-level variant: match and total counts pooled over all pairs, with
// the brevity penalty computed from summed lengths.
MetricValue bleu_corpus(const std::vector<std::string>& candidates,
                        const std::vector<std::string>& references);

// Exact-unigram METEOR with alpha=0.9, beta=3, gamma=0.5 and no
// stem/synonym stages. The alignment attains the maximum match count; the
// chunk count is minimized by deterministic greedy longest-common-substring
// covering (exact minimization is equivalent to minimum common string
// partition, which is NP-hard). Components: precision, recall, f_mean,
// penalty, matches, chunks.
MetricValue meteor(const std::string& candidate, const std::string& reference);

enum class RougeMode { N1, N2, L };

// ROUGE F1 with equal precision/recall weighting; N1/N2 use n-gram overlap,
// L uses token-level longest common subsequence. Either side empty scores 0.
MetricValue rouge(const std::string& candidate, const std::string& reference,
                  RougeMode mode);

// dot(a,b)/(|a||b|), clamped to [-1,1]. Throws DataError on dimension
// mismatch or a zero-norm vector.
double cosine_similarity(const std::vector<double>& a,
                         const std::vector<double>& b);

double semantic_similarity(const std::string& candidate,
                           const std::string& reference,
                           EmbeddingProvider& embedder);

}  // namespace contamkit
