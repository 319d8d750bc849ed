#include "contamkit/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <set>

#include <json.hpp>

#include "contamkit/errors.hpp"

namespace contamkit {

namespace {

constexpr const char* kVerdictMetrics[] = {"pattern_adherence", "accuracy",
                                           "grammatical_correctness"};

bool is_verdict_metric(const std::string& name) {
  for (const char* v : kVerdictMetrics) {
    if (name == v) return true;
  }
  return false;
}

// Mean of one metric over a model's usable records; nullopt when no record
// carries it.
std::optional<double> model_mean(const std::vector<EvalRecord>& records,
                                 const std::string& metric) {
  double sum = 0.0;
  std::size_t count = 0;
  for (const auto& rec : records) {
    if (rec.failure) continue;
    if (is_verdict_metric(metric)) {
      const std::optional<std::string>* field = nullptr;
      const char* positive = "Yes";
      if (metric == "pattern_adherence") {
        field = &rec.verdict.pattern_match;
      } else if (metric == "accuracy") {
        field = &rec.verdict.accuracy;
        positive = "Correct";
      } else {
        field = &rec.verdict.grammatical_correctness;
        positive = "Correct";
      }
      if (!field->has_value()) continue;
      sum += (**field == positive) ? 1.0 : 0.0;
      ++count;
    } else {
      auto it = rec.metrics.find(metric);
      if (it == rec.metrics.end()) continue;
      sum += it->second;
      ++count;
    }
  }
  if (count == 0) return std::nullopt;
  return sum / static_cast<double>(count);
}

void check_id_coverage(
    const std::map<std::string, std::vector<EvalRecord>>& records_by_model) {
  if (records_by_model.empty()) {
    throw DataError("aggregation requires at least one model");
  }
  std::optional<std::set<std::string>> expected;
  for (const auto& [model, records] : records_by_model) {
    std::set<std::string> ids;
    for (const auto& rec : records) ids.insert(rec.id);
    if (!expected) {
      expected = std::move(ids);
    } else if (ids != *expected) {
      throw DataError("model \"" + model +
                      "\" covers a different id set than the others");
    }
  }
}

int kind_order(TransformKind kind) {
  const auto& kinds = corruption_kinds();
  for (std::size_t i = 0; i < kinds.size(); ++i) {
    if (kinds[i] == kind) return static_cast<int>(i);
  }
  return static_cast<int>(kinds.size());  // Clean sorts last
}

int metric_order(const std::string& metric) {
  const auto& names = report_metric_names();
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == metric) return static_cast<int>(i);
  }
  return static_cast<int>(names.size());
}

// Percentage with 2 decimals, the format used by both CSV and JSON mirrors.
double as_percent(double fraction) {
  return std::round(fraction * 10000.0) / 100.0;
}

std::string format_percent(double fraction) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", as_percent(fraction));
  return buf;
}

}  // namespace

const std::vector<std::string>& report_metric_names() {
  static const std::vector<std::string> names = {
      "bleu",
      "meteor",
      "rouge1",
      "rouge2",
      "rougeL",
      "semantic_similarity",
      "pattern_adherence",
      "accuracy",
      "grammatical_correctness",
  };
  return names;
}

std::vector<HeatmapCell> per_model_means(
    const std::map<std::string, std::vector<EvalRecord>>& records_by_model,
    TransformKind kind, int level) {
  check_id_coverage(records_by_model);
  std::vector<HeatmapCell> cells;
  for (const auto& [model, records] : records_by_model) {
    for (const auto& metric : report_metric_names()) {
      auto mean = model_mean(records, metric);
      if (!mean) continue;
      cells.push_back({model, kind, level, metric, *mean});
    }
  }
  return cells;
}

std::vector<AggregateRow> aggregate(
    const std::map<std::string, std::vector<EvalRecord>>& records_by_model,
    TransformKind kind, int level) {
  check_id_coverage(records_by_model);

  std::vector<AggregateRow> rows;
  for (const auto& metric : report_metric_names()) {
    std::vector<double> model_means;
    for (const auto& [model, records] : records_by_model) {
      auto mean = model_mean(records, metric);
      if (mean) model_means.push_back(*mean);
    }
    if (model_means.empty()) continue;

    const std::size_t n = model_means.size();
    double mean = 0.0;
    for (double v : model_means) mean += v;
    mean /= static_cast<double>(n);

    double sem = 0.0;
    if (n > 1) {
      double ss = 0.0;
      for (double v : model_means) ss += (v - mean) * (v - mean);
      sem = std::sqrt(ss / static_cast<double>(n - 1)) /
            std::sqrt(static_cast<double>(n));
    }
    rows.push_back({kind, level, metric, mean, sem, n});
  }
  return rows;
}

void export_report(const std::vector<AggregateRow>& rows,
                   const std::vector<HeatmapCell>& cells,
                   const std::filesystem::path& out_dir) {
  if (rows.empty()) throw DataError("refusing to export an empty report");
  std::filesystem::create_directories(out_dir);

  auto sorted_rows = rows;
  std::sort(sorted_rows.begin(), sorted_rows.end(),
            [](const AggregateRow& a, const AggregateRow& b) {
              return std::tuple(kind_order(a.kind), a.level,
                                metric_order(a.metric)) <
                     std::tuple(kind_order(b.kind), b.level,
                                metric_order(b.metric));
            });
  auto sorted_cells = cells;
  std::sort(sorted_cells.begin(), sorted_cells.end(),
            [](const HeatmapCell& a, const HeatmapCell& b) {
              return std::tuple(a.model, kind_order(a.kind), a.level,
                                metric_order(a.metric)) <
                     std::tuple(b.model, kind_order(b.kind), b.level,
                                metric_order(b.metric));
            });

  {
    std::ofstream out(out_dir / "lineplot.csv", std::ios::binary);
    if (!out) throw DataError("cannot write lineplot.csv");
    out << "kind,level,metric,mean,sem,n\n";
    for (const auto& row : sorted_rows) {
      out << kind_label(row.kind) << ',' << row.level << ',' << row.metric
          << ',' << format_percent(row.mean) << ',' << format_percent(row.sem)
          << ',' << row.n << '\n';
    }
  }
  {
    std::ofstream out(out_dir / "heatmap.csv", std::ios::binary);
    if (!out) throw DataError("cannot write heatmap.csv");
    out << "model,kind,level,metric,value\n";
    for (const auto& cell : sorted_cells) {
      out << cell.model << ',' << kind_label(cell.kind) << ',' << cell.level
          << ',' << cell.metric << ',' << format_percent(cell.value) << '\n';
    }
  }
  {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& row : sorted_rows) {
      j.push_back({{"kind", kind_label(row.kind)},
                   {"level", row.level},
                   {"metric", row.metric},
                   {"mean", as_percent(row.mean)},
                   {"sem", as_percent(row.sem)},
                   {"n", row.n}});
    }
    std::ofstream out(out_dir / "lineplot.json", std::ios::binary);
    if (!out) throw DataError("cannot write lineplot.json");
    out << j.dump(2) << '\n';
  }
  {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& cell : sorted_cells) {
      j.push_back({{"model", cell.model},
                   {"kind", kind_label(cell.kind)},
                   {"level", cell.level},
                   {"metric", cell.metric},
                   {"value", as_percent(cell.value)}});
    }
    std::ofstream out(out_dir / "heatmap.json", std::ios::binary);
    if (!out) throw DataError("cannot write heatmap.json");
    out << j.dump(2) << '\n';
  }
}

}  // namespace contamkit
