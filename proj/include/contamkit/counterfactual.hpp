#pragma once

#include <string>
#include <utility>
#include <vector>

#include "contamkit/providers.hpp"
#include "contamkit/types.hpp"

namespace contamkit {

// Outcome of the generate-and-score loop for one record. The gate accepts
// on score >= 4; below-gate candidates are regenerated up to max_attempts.
struct CfactResult {
  std::string candidate;  // accepted candidate, or best-scoring one
  int score = 0;
  int attempts = 0;
  std::vector<std::pair<std::string, int>> transcript;  // (candidate, score)

  bool accepted() const { return score >= 4; }
};

struct CfactProviders {
  ChatProvider* generator = nullptr;
  ChatProvider* scorer = nullptr;
  int max_attempts = 5;
};

struct CfactFailure {
  std::string id;
  CfactResult result;
};

// Builds the scoring rubric prompt, sends it, and parses the single integer
// 0..5 from the reply (surrounding whitespace tolerated). Re-asks up to
// parse_retries times on an unparsable reply, then throws ProviderError.
int score_counterfactual(const std::string& instruction,
                         const std::string& correct,
                         const std::string& candidate, ChatProvider& scorer,
                         int parse_retries = 2);

// Generation loop: prompt the generator, score the candidate, accept on
// score >= 4, otherwise retry. The transcript records every attempt. When
// max_attempts is exhausted the result carries the best-scoring candidate
// and accepted() is false; the caller decides how to flag it.
CfactResult generate_counterfactual(const InstructionExample& ex,
                                    ChatProvider& generator,
                                    ChatProvider& scorer, int max_attempts);

}  // namespace contamkit
