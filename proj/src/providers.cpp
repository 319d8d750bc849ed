#include "contamkit/providers.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "contamkit/errors.hpp"
#include "contamkit/rng.hpp"

namespace contamkit {

using nlohmann::json;

void ProviderConfig::validate() const {
  if (endpoint.empty()) throw ProviderError("provider endpoint is empty");
  if (timeout.count() <= 0) throw ProviderError("provider timeout must be > 0");
  if (retries < 0) throw ProviderError("provider retries must be >= 0");
  if (rate_limit_per_s < 0) {
    throw ProviderError("provider rate limit must be >= 0");
  }
}

namespace {

std::atomic<uint64_t> g_request_counter{0};

struct ParsedUrl {
  std::string base;  // scheme://host[:port]
  std::string path;  // /path or /
};

ParsedUrl parse_url(const std::string& url) {
  auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos) {
    throw ProviderError("endpoint is not a URL: " + url);
  }
  auto path_start = url.find('/', scheme_end + 3);
  if (path_start == std::string::npos) return {url, "/"};
  return {url.substr(0, path_start), url.substr(path_start)};
}

std::string api_key_from_env(const ProviderConfig& cfg) {
  if (cfg.api_key_env.empty()) return {};
  const char* key = std::getenv(cfg.api_key_env.c_str());
  if (key == nullptr || *key == '\0') {
    throw ProviderError("API key environment variable " + cfg.api_key_env +
                        " is not set");
  }
  return key;
}

void enforce_rate_limit(const ProviderConfig& cfg, std::mutex& mutex,
                        std::chrono::steady_clock::time_point& last) {
  if (cfg.rate_limit_per_s <= 0) return;
  const auto min_gap = std::chrono::microseconds(
      static_cast<int64_t>(1e6 / cfg.rate_limit_per_s));
  std::unique_lock lock(mutex);
  auto now = std::chrono::steady_clock::now();
  auto ready = last + min_gap;
  if (now < ready) {
    std::this_thread::sleep_for(ready - now);
    now = std::chrono::steady_clock::now();
  }
  last = now;
}

// One POST with per-call client (httplib clients are not thread-safe).
// Returns the body on 200; throws TransientError on connect errors and 5xx,
// ProviderError otherwise. The API key never appears in error text.
std::string post_json(const ProviderConfig& cfg, const std::string& body) {
  uint64_t request_id = ++g_request_counter;
  ParsedUrl url = parse_url(cfg.endpoint);

  httplib::Client client(url.base);
  client.set_connection_timeout(cfg.timeout);
  client.set_read_timeout(cfg.timeout);

  httplib::Headers headers;
  std::string key = api_key_from_env(cfg);
  if (!key.empty()) headers.emplace("Authorization", "Bearer " + key);

  auto res = client.Post(url.path, headers, body, "application/json");
  const std::string tag = " (request " + std::to_string(request_id) + " to " +
                          cfg.endpoint + ")";
  if (!res) {
    throw TransientError("transport failure: " +
                         httplib::to_string(res.error()) + tag);
  }
  if (res->status == 401 || res->status == 403) {
    throw ProviderError("authentication failed with status " +
                        std::to_string(res->status) + tag);
  }
  if (res->status >= 500) {
    throw TransientError("server error status " + std::to_string(res->status) +
                         tag);
  }
  if (res->status != 200) {
    throw ProviderError("unexpected status " + std::to_string(res->status) +
                        tag);
  }
  return res->body;
}

json parse_reply(const std::string& body) {
  try {
    return json::parse(body);
  } catch (const json::exception& e) {
    throw ProviderError(std::string("malformed provider reply: ") + e.what());
  }
}

std::chrono::milliseconds ms_field(const json& j, const char* key,
                                   std::chrono::milliseconds fallback) {
  if (!j.contains(key)) return fallback;
  return std::chrono::milliseconds(j.at(key).get<int64_t>());
}

ProviderConfig config_from_json(const json& j) {
  ProviderConfig cfg;
  cfg.endpoint = j.at("endpoint").get<std::string>();
  cfg.model_id = j.value("model_id", std::string{});
  cfg.api_key_env = j.value("api_key_env", std::string{});
  cfg.timeout = ms_field(j, "timeout_ms", cfg.timeout);
  cfg.retries = j.value("retries", cfg.retries);
  if (j.contains("backoff_ms")) {
    cfg.backoff.clear();
    for (const auto& v : j.at("backoff_ms")) {
      cfg.backoff.emplace_back(v.get<int64_t>());
    }
  }
  cfg.rate_limit_per_s = j.value("rate_limit_per_s", 0.0);
  cfg.validate();
  return cfg;
}

std::unique_ptr<ChatProvider> chat_from_json(const json& j) {
  const std::string type = j.value("type", std::string{"http"});
  if (type == "http") {
    return std::make_unique<HttpChatProvider>(config_from_json(j));
  }
  if (type == "mock") {
    auto mock =
        std::make_unique<MockChatProvider>(j.value("default_reply", std::string{}));
    if (j.contains("rules")) {
      for (const auto& rule : j.at("rules")) {
        mock->add_rule(rule.at("contains").get<std::string>(),
                       rule.at("reply").get<std::string>());
      }
    }
    return mock;
  }
  throw ProviderError("unknown chat provider type: " + type);
}

std::unique_ptr<EmbeddingProvider> embedding_from_json(const json& j) {
  const std::string type = j.value("type", std::string{"http"});
  if (type == "http") {
    return std::make_unique<HttpEmbeddingProvider>(config_from_json(j));
  }
  if (type == "mock") {
    return std::make_unique<HashEmbeddingProvider>(
        j.value("dim", std::size_t{16}), j.value("seed", uint64_t{0}));
  }
  if (type == "table") {
    auto table = std::make_unique<TableEmbeddingProvider>();
    for (const auto& [text, vec] : j.at("entries").items()) {
      table->set(text, vec.get<std::vector<double>>());
    }
    return table;
  }
  throw ProviderError("unknown embedding provider type: " + type);
}

}  // namespace

HttpChatProvider::HttpChatProvider(ProviderConfig cfg) : cfg_(std::move(cfg)) {
  cfg_.validate();
}

std::string HttpChatProvider::complete(const std::string& prompt) {
  json body = {{"model", cfg_.model_id}, {"prompt", prompt}};
  const std::string body_str = body.dump();
  return retry_with_backoff(cfg_.retries, cfg_.backoff, [&] {
    enforce_rate_limit(cfg_, rate_mutex_, last_request_);
    json reply = parse_reply(post_json(cfg_, body_str));
    if (!reply.contains("text") || !reply["text"].is_string()) {
      throw ProviderError("chat reply is missing the \"text\" field");
    }
    return reply["text"].get<std::string>();
  });
}

HttpEmbeddingProvider::HttpEmbeddingProvider(ProviderConfig cfg)
    : cfg_(std::move(cfg)) {
  cfg_.validate();
}

std::vector<std::vector<double>> HttpEmbeddingProvider::embed_batch(
    const std::vector<std::string>& texts) {
  if (texts.empty()) throw ProviderError("embed_batch requires a non-empty batch");
  json body = {{"model", cfg_.model_id}, {"texts", texts}};
  const std::string body_str = body.dump();
  return retry_with_backoff(cfg_.retries, cfg_.backoff, [&] {
    enforce_rate_limit(cfg_, rate_mutex_, last_request_);
    json reply = parse_reply(post_json(cfg_, body_str));
    if (!reply.contains("vectors") || !reply["vectors"].is_array()) {
      throw ProviderError("embedding reply is missing the \"vectors\" field");
    }
    auto vectors = reply["vectors"].get<std::vector<std::vector<double>>>();
    if (vectors.size() != texts.size()) {
      throw ProviderError("embedding reply has " +
                          std::to_string(vectors.size()) + " vectors for " +
                          std::to_string(texts.size()) + " texts");
    }
    for (const auto& v : vectors) {
      if (v.size() != vectors.front().size()) {
        throw ProviderError("embedding reply has inconsistent dimensions");
      }
    }
    return vectors;
  });
}

std::string MockChatProvider::complete(const std::string& prompt) {
  prompts_.push_back(prompt);
  if (scripted_pos_ < scripted_.size()) return scripted_[scripted_pos_++];
  for (const auto& rule : rules_) {
    if (prompt.find(rule.contains) != std::string::npos) return rule.reply;
  }
  return default_reply_;
}

std::vector<std::vector<double>> HashEmbeddingProvider::embed_batch(
    const std::vector<std::string>& texts) {
  if (texts.empty()) throw ProviderError("embed_batch requires a non-empty batch");
  std::vector<std::vector<double>> out;
  out.reserve(texts.size());
  for (const auto& text : texts) {
    SplitRng rng(fnv1a64(text) ^ seed_);
    std::vector<double> v(dim_);
    double norm_sq = 0.0;
    for (auto& x : v) {
      // Uniform in [-1, 1) from the top 53 bits.
      x = static_cast<double>(rng.next() >> 11) / 4503599627370496.0 - 1.0;
      norm_sq += x * x;
    }
    double norm = std::sqrt(norm_sq);
    for (auto& x : v) x /= norm;
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<std::vector<double>> TableEmbeddingProvider::embed_batch(
    const std::vector<std::string>& texts) {
  if (texts.empty()) throw ProviderError("embed_batch requires a non-empty batch");
  std::vector<std::vector<double>> out;
  out.reserve(texts.size());
  for (const auto& text : texts) {
    auto it = table_.find(text);
    if (it == table_.end()) {
      throw ProviderError("table embedder has no entry for text: " + text);
    }
    out.push_back(it->second);
  }
  return out;
}

ProviderSet load_provider_set(const std::filesystem::path& config_path) {
  std::ifstream in(config_path);
  if (!in) {
    throw ProviderError("cannot open provider config: " + config_path.string());
  }
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw ProviderError(std::string("invalid provider config JSON: ") +
                        e.what());
  }

  ProviderSet set;
  if (j.contains("generator")) set.generator = chat_from_json(j["generator"]);
  if (j.contains("scorer")) set.scorer = chat_from_json(j["scorer"]);
  if (j.contains("judge")) set.judge = chat_from_json(j["judge"]);
  if (j.contains("embedding")) set.embedding = embedding_from_json(j["embedding"]);
  return set;
}

}  // namespace contamkit
