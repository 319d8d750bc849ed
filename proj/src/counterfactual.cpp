#include "contamkit/counterfactual.hpp"

#include <cctype>
#include <optional>

#include "contamkit/errors.hpp"
#include "contamkit/prompt_templates.hpp"

namespace contamkit {

namespace {

// Accepts exactly one integer surrounded by optional whitespace.
std::optional<int> parse_lone_int(const std::string& reply) {
  std::size_t begin = 0;
  std::size_t end = reply.size();
  while (begin < end &&
         std::isspace(static_cast<unsigned char>(reply[begin]))) {
    ++begin;
  }
  while (end > begin &&
         std::isspace(static_cast<unsigned char>(reply[end - 1]))) {
    --end;
  }
  if (begin == end) return std::nullopt;
  int value = 0;
  for (std::size_t i = begin; i < end; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(reply[i]))) {
      return std::nullopt;
    }
    value = value * 10 + (reply[i] - '0');
    if (value > 9) return std::nullopt;  // scores are single digits
  }
  return value;
}

}  // namespace

int score_counterfactual(const std::string& instruction,
                         const std::string& correct,
                         const std::string& candidate, ChatProvider& scorer,
                         int parse_retries) {
  const std::string prompt = prompts::render_template(
      prompts::kCounterfactualScoring, {{"instruction", instruction},
                                        {"correct_output", correct},
                                        {"candidate", candidate}});
  std::string last_reply;
  for (int attempt = 0; attempt <= parse_retries; ++attempt) {
    last_reply = scorer.complete(prompt);
    auto score = parse_lone_int(last_reply);
    if (score && *score >= 0 && *score <= 5) return *score;
  }
  throw ProviderError("scorer reply has no integer in 0..5 after " +
                      std::to_string(parse_retries + 1) +
                      " attempts; last reply: " + last_reply);
}

CfactResult generate_counterfactual(const InstructionExample& ex,
                                    ChatProvider& generator,
                                    ChatProvider& scorer, int max_attempts) {
  if (max_attempts < 1) throw DataError("max_attempts must be >= 1");

  const std::string question = question_text(ex);
  const std::string prompt = prompts::render_template(
      prompts::kCounterfactualGeneration,
      {{"instruction", question}, {"correct_output", ex.output}});

  CfactResult result;
  int best_score = -1;
  for (int attempt = 1; attempt <= max_attempts; ++attempt) {
    std::string candidate = generator.complete(prompt);
    int score = score_counterfactual(question, ex.output, candidate, scorer);
    result.transcript.emplace_back(candidate, score);
    result.attempts = attempt;
    if (score > best_score) {
      best_score = score;
      result.candidate = candidate;
      result.score = score;
    }
    if (score >= 4) break;
  }
  return result;
}

}  // namespace contamkit
