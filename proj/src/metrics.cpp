#include "contamkit/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "contamkit/errors.hpp"
#include "contamkit/text.hpp"

namespace contamkit {

namespace {

using Tokens = std::vector<std::string>;

std::unordered_map<std::string, int> ngram_counts(const Tokens& tokens,
                                                  std::size_t n) {
  std::unordered_map<std::string, int> counts;
  if (tokens.size() < n) return counts;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    std::string key;
    for (std::size_t k = 0; k < n; ++k) {
      if (k > 0) key.push_back('\x1f');  // unit separator, never in tokens
      key += tokens[i + k];
    }
    ++counts[key];
  }
  return counts;
}

int clipped_overlap(const std::unordered_map<std::string, int>& cand,
                    const std::unordered_map<std::string, int>& ref) {
  int overlap = 0;
  for (const auto& [gram, count] : cand) {
    auto it = ref.find(gram);
    if (it != ref.end()) overlap += std::min(count, it->second);
  }
  return overlap;
}

struct BleuCounts {
  std::vector<int> matched;  // per order, clipped
  std::vector<int> total;
  std::size_t cand_len = 0;
  std::size_t ref_len = 0;
};

BleuCounts bleu_counts(const Tokens& cand, const Tokens& ref,
                       std::size_t max_order) {
  BleuCounts c;
  c.cand_len = cand.size();
  c.ref_len = ref.size();
  c.matched.resize(max_order, 0);
  c.total.resize(max_order, 0);
  for (std::size_t n = 1; n <= max_order; ++n) {
    auto cand_grams = ngram_counts(cand, n);
    auto ref_grams = ngram_counts(ref, n);
    c.matched[n - 1] = clipped_overlap(cand_grams, ref_grams);
    c.total[n - 1] = static_cast<int>(cand.size() >= n ? cand.size() - n + 1 : 0);
  }
  return c;
}

MetricValue bleu_from_counts(const BleuCounts& c) {
  MetricValue m;
  m.name = "bleu";
  const std::size_t orders = c.matched.size();
  if (orders == 0 || c.cand_len == 0) return m;

  double log_sum = 0.0;
  for (std::size_t n = 0; n < orders; ++n) {
    double p;
    if (c.matched[n] == 0) {
      p = 1.0 / (c.total[n] + 1.0);  // add-one smoothing, zero-match orders only
    } else {
      p = static_cast<double>(c.matched[n]) / c.total[n];
    }
    m.components["p" + std::to_string(n + 1)] = p;
    log_sum += std::log(p);
  }
  double geo_mean = std::exp(log_sum / static_cast<double>(orders));

  double bp = 1.0;
  if (c.cand_len < c.ref_len) {
    bp = std::exp(1.0 - static_cast<double>(c.ref_len) /
                            static_cast<double>(c.cand_len));
  }
  m.components["brevity_penalty"] = bp;
  m.value = bp * geo_mean;
  return m;
}

// Greedy longest-common-substring covering for the METEOR alignment. Each
// round takes the longest token run present (with multiplicity) in both
// remainders, ties broken by leftmost candidate then leftmost reference
// position, and marks it used. Total matched tokens always reach the
// maximum sum(min(count_c, count_r)); rounds = chunk count.
struct Alignment {
  int matches = 0;
  int chunks = 0;
};

Alignment align_unigrams(const Tokens& cand, const Tokens& ref) {
  std::vector<bool> cand_used(cand.size(), false);
  std::vector<bool> ref_used(ref.size(), false);
  Alignment a;

  while (true) {
    std::size_t best_len = 0;
    std::size_t best_ci = 0;
    std::size_t best_ri = 0;
    for (std::size_t ci = 0; ci < cand.size(); ++ci) {
      if (cand_used[ci]) continue;
      for (std::size_t ri = 0; ri < ref.size(); ++ri) {
        if (ref_used[ri] || cand[ci] != ref[ri]) continue;
        std::size_t len = 0;
        while (ci + len < cand.size() && ri + len < ref.size() &&
               !cand_used[ci + len] && !ref_used[ri + len] &&
               cand[ci + len] == ref[ri + len]) {
          ++len;
        }
        if (len > best_len) {
          best_len = len;
          best_ci = ci;
          best_ri = ri;
        }
      }
    }
    if (best_len == 0) break;
    for (std::size_t k = 0; k < best_len; ++k) {
      cand_used[best_ci + k] = true;
      ref_used[best_ri + k] = true;
    }
    a.matches += static_cast<int>(best_len);
    a.chunks += 1;
  }
  return a;
}

std::vector<std::vector<int>> lcs_table(const Tokens& a, const Tokens& b) {
  std::vector<std::vector<int>> dp(a.size() + 1,
                                   std::vector<int>(b.size() + 1, 0));
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      dp[i][j] = a[i - 1] == b[j - 1]
                     ? dp[i - 1][j - 1] + 1
                     : std::max(dp[i - 1][j], dp[i][j - 1]);
    }
  }
  return dp;
}

double f1(double p, double r) {
  if (p + r == 0.0) return 0.0;
  return 2.0 * p * r / (p + r);
}

}  // namespace

MetricValue bleu(const std::string& candidate, const std::string& reference) {
  const Tokens cand = text::metric_tokens(candidate);
  const Tokens ref = text::metric_tokens(reference);
  const std::size_t max_order = std::min<std::size_t>(4, cand.size());
  if (max_order == 0) {
    MetricValue m;
    m.name = "bleu";
    return m;
  }
  return bleu_from_counts(bleu_counts(cand, ref, max_order));
}

MetricValue bleu_corpus(const std::vector<std::string>& candidates,
                        const std::vector<std::string>& references) {
  if (candidates.size() != references.size()) {
    throw DataError("bleu_corpus needs equal-length candidate/reference lists");
  }
  BleuCounts pooled;
  pooled.matched.resize(4, 0);
  pooled.total.resize(4, 0);
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const Tokens cand = text::metric_tokens(candidates[i]);
    const Tokens ref = text::metric_tokens(references[i]);
    BleuCounts c = bleu_counts(cand, ref, 4);
    for (std::size_t n = 0; n < 4; ++n) {
      pooled.matched[n] += c.matched[n];
      pooled.total[n] += c.total[n];
    }
    pooled.cand_len += c.cand_len;
    pooled.ref_len += c.ref_len;
  }
  return bleu_from_counts(pooled);
}

MetricValue meteor(const std::string& candidate, const std::string& reference) {
  constexpr double kAlpha = 0.9;
  constexpr double kBeta = 3.0;
  constexpr double kGamma = 0.5;

  MetricValue m;
  m.name = "meteor";
  const Tokens cand = text::metric_tokens(candidate);
  const Tokens ref = text::metric_tokens(reference);
  if (cand.empty() || ref.empty()) return m;

  Alignment a = align_unigrams(cand, ref);
  m.components["matches"] = a.matches;
  m.components["chunks"] = a.chunks;
  if (a.matches == 0) return m;

  const double p = static_cast<double>(a.matches) / cand.size();
  const double r = static_cast<double>(a.matches) / ref.size();
  const double f_mean = p * r / (kAlpha * p + (1.0 - kAlpha) * r);
  const double penalty =
      kGamma * std::pow(static_cast<double>(a.chunks) / a.matches, kBeta);
  m.components["precision"] = p;
  m.components["recall"] = r;
  m.components["f_mean"] = f_mean;
  m.components["penalty"] = penalty;
  m.value = f_mean * (1.0 - penalty);
  return m;
}

MetricValue rouge(const std::string& candidate, const std::string& reference,
                  RougeMode mode) {
  MetricValue m;
  switch (mode) {
    case RougeMode::N1:
      m.name = "rouge1";
      break;
    case RougeMode::N2:
      m.name = "rouge2";
      break;
    case RougeMode::L:
      m.name = "rougeL";
      break;
  }

  const Tokens cand = text::metric_tokens(candidate);
  const Tokens ref = text::metric_tokens(reference);
  if (cand.empty() || ref.empty()) return m;

  double p = 0.0;
  double r = 0.0;
  if (mode == RougeMode::L) {
    const int lcs = lcs_table(cand, ref)[cand.size()][ref.size()];
    p = static_cast<double>(lcs) / cand.size();
    r = static_cast<double>(lcs) / ref.size();
  } else {
    const std::size_t n = mode == RougeMode::N1 ? 1 : 2;
    auto cand_grams = ngram_counts(cand, n);
    auto ref_grams = ngram_counts(ref, n);
    const int cand_total = cand.size() >= n ? static_cast<int>(cand.size() - n + 1) : 0;
    const int ref_total = ref.size() >= n ? static_cast<int>(ref.size() - n + 1) : 0;
    if (cand_total == 0 || ref_total == 0) return m;
    const int overlap = clipped_overlap(cand_grams, ref_grams);
    p = static_cast<double>(overlap) / cand_total;
    r = static_cast<double>(overlap) / ref_total;
  }
  m.components["precision"] = p;
  m.components["recall"] = r;
  m.value = f1(p, r);
  return m;
}

double cosine_similarity(const std::vector<double>& a,
                         const std::vector<double>& b) {
  if (a.size() != b.size()) {
    throw DataError("cosine dimension mismatch: " + std::to_string(a.size()) +
                    " vs " + std::to_string(b.size()));
  }
  double dot = 0.0;
  double norm_a = 0.0;
  double norm_b = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    norm_a += a[i] * a[i];
    norm_b += b[i] * b[i];
  }
  if (norm_a == 0.0 || norm_b == 0.0) {
    throw DataError("cosine of a zero-norm vector is undefined");
  }
  double value = dot / (std::sqrt(norm_a) * std::sqrt(norm_b));
  return std::clamp(value, -1.0, 1.0);
}

double semantic_similarity(const std::string& candidate,
                           const std::string& reference,
                           EmbeddingProvider& embedder) {
  auto vectors = embedder.embed_batch({candidate, reference});
  return cosine_similarity(vectors[0], vectors[1]);
}

}  // namespace contamkit
