#include "contamkit/judge.hpp"

#include <json.hpp>

#include "contamkit/errors.hpp"
#include "contamkit/prompt_templates.hpp"

namespace contamkit {

using nlohmann::json;

std::string build_pattern_prompt(const std::string& question,
                                 const std::string& response,
                                 TransformKind kind) {
  if (kind == TransformKind::Clean) {
    throw DataError("pattern adherence is undefined for the clean kind");
  }
  return prompts::render_template(
      prompts::kPatternAdherence,
      {{"variation_type", prompts::variation_type_label(kind)},
       {"instruction", std::string(prompts::pattern_description(kind))},
       {"question", question},
       {"model_response", response}});
}

std::string build_accuracy_prompt(const std::string& question,
                                  const std::string& actual,
                                  const std::string& response) {
  return prompts::render_template(prompts::kAccuracyGrammar,
                                  {{"question", question},
                                   {"actual_answer", actual},
                                   {"model_answer", response}});
}

std::string extract_first_json_object(const std::string& reply) {
  std::size_t start = reply.find('{');
  if (start == std::string::npos) {
    throw ProviderError("judge reply contains no JSON object");
  }
  int depth = 0;
  bool in_string = false;
  bool escaped = false;
  for (std::size_t i = start; i < reply.size(); ++i) {
    char c = reply[i];
    if (in_string) {
      if (escaped) {
        escaped = false;
      } else if (c == '\\') {
        escaped = true;
      } else if (c == '"') {
        in_string = false;
      }
      continue;
    }
    if (c == '"') {
      in_string = true;
    } else if (c == '{') {
      ++depth;
    } else if (c == '}') {
      --depth;
      if (depth == 0) return reply.substr(start, i - start + 1);
    }
  }
  throw ProviderError("judge reply has an unbalanced JSON object");
}

namespace {

json parse_object(const std::string& reply) {
  const std::string block = extract_first_json_object(reply);
  json j;
  try {
    j = json::parse(block);
  } catch (const json::exception& e) {
    throw ProviderError(std::string("judge reply block is not valid JSON: ") +
                        e.what());
  }
  return j;
}

std::string enum_field(const json& j, const char* key, const char* a,
                       const char* b) {
  auto it = j.find(key);
  if (it == j.end() || !it->is_string()) {
    throw ProviderError(std::string("judge reply is missing \"") + key + "\"");
  }
  std::string value = it->get<std::string>();
  if (value != a && value != b) {
    throw ProviderError(std::string("judge reply value for \"") + key +
                        "\" is outside {" + a + ", " + b + "}: " + value);
  }
  return value;
}

void require_exact_keys(const json& j, std::initializer_list<const char*> keys) {
  if (j.size() != keys.size()) {
    throw ProviderError("judge reply object has unexpected keys");
  }
}

}  // namespace

JudgeVerdict parse_pattern_reply(const std::string& reply) {
  json j = parse_object(reply);
  require_exact_keys(j, {"pattern_match"});
  JudgeVerdict v;
  v.pattern_match = enum_field(j, "pattern_match", "Yes", "No");
  v.raw_reply = reply;
  return v;
}

JudgeVerdict parse_accuracy_reply(const std::string& reply) {
  json j = parse_object(reply);
  require_exact_keys(j, {"accuracy", "grammatical_correctness"});
  JudgeVerdict v;
  v.accuracy = enum_field(j, "accuracy", "Correct", "Incorrect");
  v.grammatical_correctness =
      enum_field(j, "grammatical_correctness", "Correct", "Incorrect");
  v.raw_reply = reply;
  return v;
}

namespace {

template <typename ParseFn>
JudgeVerdict ask_and_parse(ChatProvider& judge, const std::string& prompt,
                           int parse_retries, ParseFn parse) {
  std::string last_error;
  for (int attempt = 0; attempt <= parse_retries; ++attempt) {
    std::string reply = judge.complete(prompt);
    try {
      return parse(reply);
    } catch (const ProviderError& e) {
      last_error = e.what();
    }
  }
  throw ProviderError("judge reply unparsable after " +
                      std::to_string(parse_retries + 1) +
                      " attempts: " + last_error);
}

}  // namespace

JudgeVerdict judge_pattern_adherence(const std::string& question,
                                     const std::string& response,
                                     TransformKind kind, ChatProvider& judge,
                                     int parse_retries) {
  const std::string prompt = build_pattern_prompt(question, response, kind);
  return ask_and_parse(judge, prompt, parse_retries, parse_pattern_reply);
}

JudgeVerdict judge_accuracy_grammar(const std::string& question,
                                    const std::string& actual,
                                    const std::string& response,
                                    ChatProvider& judge, int parse_retries) {
  const std::string prompt = build_accuracy_prompt(question, actual, response);
  return ask_and_parse(judge, prompt, parse_retries, parse_accuracy_reply);
}

std::string verdict_to_json_line(const std::string& id,
                                 const JudgeVerdict& verdict) {
  nlohmann::ordered_json j;
  j["id"] = id;
  auto put = [&j](const char* key, const std::optional<std::string>& value) {
    if (value) {
      j[key] = *value;
    } else {
      j[key] = nullptr;
    }
  };
  put("pattern_match", verdict.pattern_match);
  put("accuracy", verdict.accuracy);
  put("grammatical_correctness", verdict.grammatical_correctness);
  return j.dump();
}

}  // namespace contamkit
