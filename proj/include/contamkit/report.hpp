#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "contamkit/evalharness.hpp"
#include "contamkit/types.hpp"

namespace contamkit {

// Cross-model summary for one (kind, level, metric) cell. Means are
// two-stage: each model's per-record mean first, then the mean and standard
// error (sample std / sqrt(n), n-1 denominator) across models. Values are
// fractions in [0,1]; exports scale them to percentages.
struct AggregateRow {
  TransformKind kind = TransformKind::Clean;
  int level = 0;
  std::string metric;
  double mean = 0.0;
  double sem = 0.0;
  std::size_t n = 0;  // contributing models
};

// One model's mean for one (kind, level, metric) cell; heatmap material.
struct HeatmapCell {
  std::string model;
  TransformKind kind = TransformKind::Clean;
  int level = 0;
  std::string metric;
  double value = 0.0;
};

// Metric column order used everywhere. Judge verdicts aggregate as the
// fraction of Yes / Correct per model before cross-model averaging.
const std::vector<std::string>& report_metric_names();

// Per-model means for one scenario group. Records flagged with a failure
// are excluded from every denominator; verdict fractions are computed over
// records whose verdict field is populated. Throws DataError on empty
// input or inconsistent id coverage across models.
std::vector<HeatmapCell> per_model_means(
    const std::map<std::string, std::vector<EvalRecord>>& records_by_model,
    TransformKind kind, int level);

std::vector<AggregateRow> aggregate(
    const std::map<std::string, std::vector<EvalRecord>>& records_by_model,
    TransformKind kind, int level);

// Writes lineplot.csv (kind,level,metric,mean,sem,n), heatmap.csv
// (model,kind,level,metric,value), and mirrored lineplot.json/heatmap.json.
// Metric values appear as percentages rounded to 2 decimals. Rows are
// sorted canonically so identical inputs produce identical bytes. Empty
// rows are an error.
void export_report(const std::vector<AggregateRow>& rows,
                   const std::vector<HeatmapCell>& cells,
                   const std::filesystem::path& out_dir);

}  // namespace contamkit
