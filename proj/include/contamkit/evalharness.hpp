#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "contamkit/judge.hpp"
#include "contamkit/metrics.hpp"
#include "contamkit/providers.hpp"
#include "contamkit/types.hpp"

namespace contamkit {

struct PredictionRecord {
  std::string id;
  std::string response;
};

// Per-prediction evaluation bundle. `metrics` maps metric name to value;
// records whose provider calls failed carry `failure` instead of the
// affected fields and are excluded from aggregation denominators.
struct EvalRecord {
  std::string id;
  TransformKind kind = TransformKind::Clean;
  std::string raw_response;
  std::string preprocessed_response;
  std::map<std::string, double> metrics;
  JudgeVerdict verdict;
  std::optional<std::string> failure;
};

struct EvalOptions {
  bool semantic = true;  // needs an embedding provider
  bool judging = true;   // needs a judge provider
};

// Inverse structural transform applied to a model response before scoring:
// word reversal for WordReversal, grapheme reversal for CharReversal,
// identity for the semantic kinds and Clean.
std::string preprocess_response(const std::string& response,
                                TransformKind kind);

// Runs the full per-record protocol: preprocess, lexical metrics against
// the clean reference output, semantic similarity (optional), and both
// judge verdicts (optional; pattern adherence sees the raw response,
// accuracy/grammar the preprocessed one; pattern adherence is skipped for
// kind Clean). Results come back in reference order. Unknown prediction
// ids throw DataError; provider failures mark the record and continue.
std::vector<EvalRecord> evaluate_predictions(
    const std::vector<PredictionRecord>& predictions, const Dataset& refs,
    TransformKind kind, EmbeddingProvider* embedder, ChatProvider* judge,
    const EvalOptions& options = {});

// Prediction file: line-delimited {"id","response"}.
std::vector<PredictionRecord> load_predictions(
    const std::filesystem::path& path);
void save_predictions(const std::vector<PredictionRecord>& predictions,
                      const std::filesystem::path& path);

// Eval record file: line-delimited records with all fields above.
std::string eval_record_to_json_line(const EvalRecord& record);
EvalRecord eval_record_from_json_line(const std::string& line);
void save_eval_records(const std::vector<EvalRecord>& records,
                       const std::filesystem::path& path);
std::vector<EvalRecord> load_eval_records(const std::filesystem::path& path);

}  // namespace contamkit
