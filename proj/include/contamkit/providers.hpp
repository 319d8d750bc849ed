#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace contamkit {

// Connection settings for one external service. API keys enter only through
// the environment variable named here and are never logged or serialized.
struct ProviderConfig {
  std::string endpoint;     // full URL, e.g. http://host:8080/v1/chat
  std::string model_id;
  std::string api_key_env;  // empty -> unauthenticated endpoint
  std::chrono::milliseconds timeout{30000};
  int retries = 2;
  std::vector<std::chrono::milliseconds> backoff{
      std::chrono::milliseconds{250}, std::chrono::milliseconds{1000}};
  double rate_limit_per_s = 0.0;  // 0 -> unlimited

  void validate() const;  // throws ProviderError on bad values
};

class ChatProvider {
 public:
  virtual ~ChatProvider() = default;
  virtual std::string complete(const std::string& prompt) = 0;
};

class EmbeddingProvider {
 public:
  virtual ~EmbeddingProvider() = default;
  // One vector per input text, order-aligned, uniform dimension.
  virtual std::vector<std::vector<double>> embed_batch(
      const std::vector<std::string>& texts) = 0;

  std::vector<double> embed(const std::string& text) {
    return embed_batch({text}).front();
  }
};

// Wire protocol: POST {"model","prompt"} -> {"text"} for chat and
// POST {"model","texts"} -> {"vectors"} for embeddings, with an optional
// Bearer token. Transient failures (connect errors, 5xx) are retried per
// the config's backoff schedule; auth and malformed-reply errors fail fast.
class HttpChatProvider : public ChatProvider {
 public:
  explicit HttpChatProvider(ProviderConfig cfg);
  std::string complete(const std::string& prompt) override;

 private:
  ProviderConfig cfg_;
  std::mutex rate_mutex_;
  std::chrono::steady_clock::time_point last_request_{};
};

class HttpEmbeddingProvider : public EmbeddingProvider {
 public:
  explicit HttpEmbeddingProvider(ProviderConfig cfg);
  std::vector<std::vector<double>> embed_batch(
      const std::vector<std::string>& texts) override;

 private:
  ProviderConfig cfg_;
  std::mutex rate_mutex_;
  std::chrono::steady_clock::time_point last_request_{};
};

// Table-driven mock chat provider: first rule whose `contains` substring
// occurs in the prompt wins; otherwise the default reply. An optional
// scripted queue takes precedence and pops one reply per call.
class MockChatProvider : public ChatProvider {
 public:
  struct Rule {
    std::string contains;
    std::string reply;
  };

  MockChatProvider() = default;
  explicit MockChatProvider(std::string default_reply)
      : default_reply_(std::move(default_reply)) {}

  void add_rule(std::string contains, std::string reply) {
    rules_.push_back({std::move(contains), std::move(reply)});
  }
  void set_default_reply(std::string reply) {
    default_reply_ = std::move(reply);
  }
  void push_scripted_reply(std::string reply) {
    scripted_.push_back(std::move(reply));
  }

  std::string complete(const std::string& prompt) override;

  const std::vector<std::string>& prompts_seen() const { return prompts_; }

 private:
  std::vector<Rule> rules_;
  std::string default_reply_;
  std::vector<std::string> scripted_;
  std::size_t scripted_pos_ = 0;
  std::vector<std::string> prompts_;
};

// Deterministic embedder: unit vector derived from a seeded hash of the
// text. Identical texts always map to identical vectors.
class HashEmbeddingProvider : public EmbeddingProvider {
 public:
  explicit HashEmbeddingProvider(std::size_t dim = 16, uint64_t seed = 0)
      : dim_(dim), seed_(seed) {}
  std::vector<std::vector<double>> embed_batch(
      const std::vector<std::string>& texts) override;

 private:
  std::size_t dim_;
  uint64_t seed_;
};

// Embedder backed by an explicit text -> vector table; unknown texts throw.
class TableEmbeddingProvider : public EmbeddingProvider {
 public:
  void set(std::string text, std::vector<double> vec) {
    table_[std::move(text)] = std::move(vec);
  }
  std::vector<std::vector<double>> embed_batch(
      const std::vector<std::string>& texts) override;

 private:
  std::map<std::string, std::vector<double>> table_;
};

// Provider bundle parsed from a JSON config file with optional sections
// "generator", "scorer", "judge", "embedding". Each section is either
// {"type":"http", ...ProviderConfig fields...},
// {"type":"mock", "default_reply":..., "rules":[{"contains","reply"}...]},
// {"type":"mock", "dim":n, "seed":n} for embeddings, or
// {"type":"table", "entries": {text: [..], ...}} for embeddings.
struct ProviderSet {
  std::unique_ptr<ChatProvider> generator;
  std::unique_ptr<ChatProvider> scorer;
  std::unique_ptr<ChatProvider> judge;
  std::unique_ptr<EmbeddingProvider> embedding;
};

ProviderSet load_provider_set(const std::filesystem::path& config_path);

// Thrown for failures worth retrying (connect errors, timeouts, 5xx).
// Auth failures and malformed replies throw plain ProviderError instead.
class TransientError;

// Runs `attempt` up to 1+retries times, sleeping per the backoff schedule
// (the last entry repeats; empty schedule means no sleep). Retries only
// TransientError; on exhaustion rethrows it as ProviderError.
template <typename Fn>
auto retry_with_backoff(int retries,
                        const std::vector<std::chrono::milliseconds>& backoff,
                        Fn&& attempt) -> decltype(attempt());

}  // namespace contamkit

#include "contamkit/providers_retry.inl"
