#include "contamkit/evalharness.hpp"

#include <fstream>
#include <unordered_map>

#include <json.hpp>

#include "contamkit/errors.hpp"
#include "contamkit/transforms.hpp"

namespace contamkit {

using ordered_json = nlohmann::ordered_json;

std::string preprocess_response(const std::string& response,
                                TransformKind kind) {
  switch (kind) {
    case TransformKind::WordReversal:
      return reverse_words(response);
    case TransformKind::CharReversal:
      return reverse_chars(response);
    case TransformKind::Clean:
    case TransformKind::Irrelevant:
    case TransformKind::CounterFactual:
      return response;
  }
  return response;
}

std::vector<EvalRecord> evaluate_predictions(
    const std::vector<PredictionRecord>& predictions, const Dataset& refs,
    TransformKind kind, EmbeddingProvider* embedder, ChatProvider* judge,
    const EvalOptions& options) {
  if (options.semantic && embedder == nullptr) {
    throw DataError("semantic similarity enabled but no embedder given");
  }
  if (options.judging && judge == nullptr) {
    throw DataError("judging enabled but no judge provider given");
  }

  std::unordered_map<std::string, std::size_t> ref_index;
  for (std::size_t i = 0; i < refs.examples.size(); ++i) {
    ref_index.emplace(refs.examples[i].id, i);
  }

  // Join predictions to references; order output by reference order.
  std::unordered_map<std::string, const PredictionRecord*> by_id;
  for (const auto& pred : predictions) {
    if (!ref_index.count(pred.id)) {
      throw DataError("prediction id \"" + pred.id +
                      "\" does not exist in the reference set");
    }
    if (!by_id.emplace(pred.id, &pred).second) {
      throw DataError("duplicate prediction id \"" + pred.id + "\"");
    }
  }

  std::vector<EvalRecord> records;
  records.reserve(by_id.size());
  for (const auto& ref : refs.examples) {
    auto it = by_id.find(ref.id);
    if (it == by_id.end()) continue;
    const PredictionRecord& pred = *it->second;

    EvalRecord rec;
    rec.id = pred.id;
    rec.kind = kind;
    rec.raw_response = pred.response;
    rec.preprocessed_response = preprocess_response(pred.response, kind);

    const std::string& reference = ref.output;
    rec.metrics["bleu"] = bleu(rec.preprocessed_response, reference).value;
    rec.metrics["meteor"] = meteor(rec.preprocessed_response, reference).value;
    rec.metrics["rouge1"] =
        rouge(rec.preprocessed_response, reference, RougeMode::N1).value;
    rec.metrics["rouge2"] =
        rouge(rec.preprocessed_response, reference, RougeMode::N2).value;
    rec.metrics["rougeL"] =
        rouge(rec.preprocessed_response, reference, RougeMode::L).value;

    try {
      if (options.semantic) {
        rec.metrics["semantic_similarity"] =
            semantic_similarity(rec.preprocessed_response, reference, *embedder);
      }
      if (options.judging) {
        const std::string question = question_text(ref);
        if (kind != TransformKind::Clean) {
          JudgeVerdict pattern =
              judge_pattern_adherence(question, rec.raw_response, kind, *judge);
          rec.verdict.pattern_match = pattern.pattern_match;
        }
        JudgeVerdict acc = judge_accuracy_grammar(
            question, reference, rec.preprocessed_response, *judge);
        rec.verdict.accuracy = acc.accuracy;
        rec.verdict.grammatical_correctness = acc.grammatical_correctness;
      }
    } catch (const ProviderError& e) {
      rec.failure = e.what();
      rec.metrics.clear();
      rec.verdict = {};
    }
    records.push_back(std::move(rec));
  }
  return records;
}

std::vector<PredictionRecord> load_predictions(
    const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open prediction file: " + path.string());
  std::vector<PredictionRecord> predictions;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      auto j = nlohmann::json::parse(line);
      predictions.push_back({j.at("id").get<std::string>(),
                             j.at("response").get<std::string>()});
    } catch (const nlohmann::json::exception& e) {
      throw DataError(path.string() + " line " + std::to_string(line_no) +
                      ": " + e.what());
    }
  }
  return predictions;
}

void save_predictions(const std::vector<PredictionRecord>& predictions,
                      const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write prediction file: " + path.string());
  for (const auto& pred : predictions) {
    ordered_json j;
    j["id"] = pred.id;
    j["response"] = pred.response;
    out << j.dump() << '\n';
  }
}

std::string eval_record_to_json_line(const EvalRecord& record) {
  ordered_json j;
  j["id"] = record.id;
  j["kind"] = kind_label(record.kind);
  j["raw_response"] = record.raw_response;
  j["preprocessed_response"] = record.preprocessed_response;
  j["metrics"] = ordered_json::object();
  for (const auto& [name, value] : record.metrics) j["metrics"][name] = value;
  auto put = [&j](const char* key, const std::optional<std::string>& value) {
    if (value) {
      j[key] = *value;
    } else {
      j[key] = nullptr;
    }
  };
  put("pattern_match", record.verdict.pattern_match);
  put("accuracy", record.verdict.accuracy);
  put("grammatical_correctness", record.verdict.grammatical_correctness);
  put("failure", record.failure);
  return j.dump();
}

EvalRecord eval_record_from_json_line(const std::string& line) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("invalid eval record: ") + e.what());
  }
  EvalRecord rec;
  rec.id = j.at("id").get<std::string>();
  rec.kind = kind_from_label(j.at("kind").get<std::string>());
  rec.raw_response = j.value("raw_response", std::string{});
  rec.preprocessed_response = j.value("preprocessed_response", std::string{});
  if (j.contains("metrics")) {
    for (const auto& [name, value] : j.at("metrics").items()) {
      rec.metrics[name] = value.get<double>();
    }
  }
  auto take = [&j](const char* key) -> std::optional<std::string> {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return j.at(key).get<std::string>();
  };
  rec.verdict.pattern_match = take("pattern_match");
  rec.verdict.accuracy = take("accuracy");
  rec.verdict.grammatical_correctness = take("grammatical_correctness");
  rec.failure = take("failure");
  return rec;
}

void save_eval_records(const std::vector<EvalRecord>& records,
                       const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write eval record file: " + path.string());
  for (const auto& rec : records) {
    out << eval_record_to_json_line(rec) << '\n';
  }
}

std::vector<EvalRecord> load_eval_records(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open eval record file: " + path.string());
  std::vector<EvalRecord> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      records.push_back(eval_record_from_json_line(line));
    } catch (const DataError& e) {
      throw DataError(path.string() + " line " + std::to_string(line_no) +
                      ": " + e.what());
    }
  }
  return records;
}

}  // namespace contamkit
