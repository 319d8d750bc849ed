#pragma once

#include <optional>
#include <string>

#include "contamkit/providers.hpp"
#include "contamkit/types.hpp"

namespace contamkit {

// Parsed judge reply. Pattern judging populates pattern_match; the combined
// accuracy/grammar judging populates the other two. Values are restricted
// to the literal strings "Yes"/"No" and "Correct"/"Incorrect".
struct JudgeVerdict {
  std::optional<std::string> pattern_match;
  std::optional<std::string> accuracy;
  std::optional<std::string> grammatical_correctness;
  std::string raw_reply;
};

// Prompt construction; byte-stable for identical inputs. `response` is the
// RAW model response for pattern judging and the PREPROCESSED response for
// accuracy/grammar judging.
std::string build_pattern_prompt(const std::string& question,
                                 const std::string& response,
                                 TransformKind kind);
std::string build_accuracy_prompt(const std::string& question,
                                  const std::string& actual,
                                  const std::string& response);

// Extracts the first balanced {...} block from a reply (judges often wrap
// structured output in prose). Throws ProviderError when none exists.
std::string extract_first_json_object(const std::string& reply);

// Strict reply parsers: the object must carry exactly the expected keys
// with in-enum values; anything else throws ProviderError.
JudgeVerdict parse_pattern_reply(const std::string& reply);
JudgeVerdict parse_accuracy_reply(const std::string& reply);

// Full judge calls: build prompt, ask, parse; re-ask with the same prompt
// up to `parse_retries` times when the reply does not parse.
JudgeVerdict judge_pattern_adherence(const std::string& question,
                                     const std::string& response,
                                     TransformKind kind, ChatProvider& judge,
                                     int parse_retries = 2);
JudgeVerdict judge_accuracy_grammar(const std::string& question,
                                    const std::string& actual,
                                    const std::string& response,
                                    ChatProvider& judge,
                                    int parse_retries = 2);

// Line format for verdict files: {"id","pattern_match","accuracy",
// "grammatical_correctness"} with null for unpopulated fields.
std::string verdict_to_json_line(const std::string& id,
                                 const JudgeVerdict& verdict);

}  // namespace contamkit
