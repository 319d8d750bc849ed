#include "contamkit/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "contamkit/agreement.hpp"
#include "contamkit/cleaning.hpp"
#include "contamkit/contamination.hpp"
#include "contamkit/dataset_io.hpp"
#include "contamkit/dedup.hpp"
#include "contamkit/errors.hpp"
#include "contamkit/evalharness.hpp"
#include "contamkit/report.hpp"
#include "contamkit/rng.hpp"
#include "contamkit/transforms.hpp"

namespace contamkit {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

namespace {

std::string file_fingerprint(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open input for hashing: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  char hex[17];
  std::snprintf(hex, sizeof(hex), "%016llx",
                static_cast<unsigned long long>(fnv1a64(buf.str())));
  return hex;
}

// Reproducibility sidecar: command, argv, hashed inputs, outputs, seeds.
// Deliberately carries no timestamps so identical runs are byte-identical.
struct Sidecar {
  Sidecar(std::string command_, std::vector<std::string> argv_,
          std::vector<fs::path> inputs_, std::vector<fs::path> outputs_)
      : command(std::move(command_)),
        argv(std::move(argv_)),
        inputs(std::move(inputs_)),
        outputs(std::move(outputs_)) {}

  std::string command;
  std::vector<std::string> argv;
  std::vector<fs::path> inputs;
  std::vector<fs::path> outputs;
  std::optional<uint64_t> seed;
  std::optional<fs::path> provider_config;

  void write(const fs::path& path) const {
    ordered_json j;
    j["tool"] = "contamkit";
    j["command"] = command;
    j["argv"] = argv;
    j["inputs"] = ordered_json::array();
    for (const auto& input : inputs) {
      j["inputs"].push_back(
          {{"path", input.string()}, {"fnv64", file_fingerprint(input)}});
    }
    j["outputs"] = ordered_json::array();
    for (const auto& output : outputs) j["outputs"].push_back(output.string());
    if (seed) j["seed"] = *seed;
    if (provider_config) {
      j["provider_config"] = {{"path", provider_config->string()},
                              {"fnv64", file_fingerprint(*provider_config)}};
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write sidecar: " + path.string());
    out << j.dump(2) << '\n';
  }
};

std::set<CleaningRule> parse_rules(const std::string& spec) {
  std::set<CleaningRule> rules;
  if (spec == "none") return rules;
  if (spec == "all") {
    rules.insert(all_cleaning_rules().begin(), all_cleaning_rules().end());
    return rules;
  }
  std::stringstream ss(spec);
  std::string name;
  while (std::getline(ss, name, ',')) {
    if (!name.empty()) rules.insert(rule_from_name(name));
  }
  return rules;
}

DedupField parse_dedup_field(const std::string& name) {
  if (name == "output") return DedupField::Output;
  if (name == "instruction") return DedupField::Instruction;
  if (name == "combined") return DedupField::Combined;
  throw UsageError("unknown dedup field: " + name);
}

struct CleanArgs {
  std::string in, out, rules = "all", report, providers, dedup_field = "output";
  double dedup_threshold = -1.0;  // <0 -> dedup off
};

int cmd_clean(const CleanArgs& a, const std::vector<std::string>& argv) {
  Dataset d = load_dataset(a.in);
  auto [cleaned, report] = clean_dataset(d, parse_rules(a.rules));

  std::vector<std::string> dedup_removed;
  if (a.dedup_threshold != -1.0) {
    if (a.dedup_threshold < -1.0 || a.dedup_threshold > 1.0) {
      throw UsageError("--dedup-threshold must lie in [-1, 1]");
    }
    if (a.providers.empty()) {
      throw UsageError("--dedup-threshold requires --providers with an "
                       "embedding section");
    }
    ProviderSet providers = load_provider_set(a.providers);
    if (!providers.embedding) {
      throw ProviderError("provider config has no embedding section");
    }
    auto [deduped, removed] =
        dedup_by_similarity(cleaned, *providers.embedding, a.dedup_threshold,
                            parse_dedup_field(a.dedup_field));
    cleaned = std::move(deduped);
    dedup_removed = std::move(removed);
  }

  save_dataset(cleaned, a.out);
  if (!a.report.empty()) {
    std::ofstream out(a.report, std::ios::binary);
    if (!out) throw DataError("cannot write cleaning report: " + a.report);
    out << cleaning_report_to_json(report) << '\n';
  }

  Sidecar sidecar("clean", argv, {a.in}, {a.out});
  if (!a.report.empty()) sidecar.outputs.push_back(a.report);
  if (!a.providers.empty()) sidecar.provider_config = fs::path(a.providers);
  sidecar.write(a.out + ".provenance.json");

  std::cerr << "clean: kept " << report.kept << ", removed " << report.removed;
  if (!dedup_removed.empty()) {
    std::cerr << ", dedup removed " << dedup_removed.size();
  }
  std::cerr << "\n";
  return 0;
}

struct TransformArgs {
  std::string kind, in, out, providers, failed_out;
  uint64_t seed = 0;
  int max_attempts = 5;
  bool derange = false;
};

int cmd_transform(const TransformArgs& a, const std::vector<std::string>& argv) {
  TransformKind kind = kind_from_label(a.kind);
  Dataset d = load_dataset(a.in);

  Dataset out;
  std::vector<CfactFailure> failures;
  if (kind == TransformKind::CounterFactual) {
    if (a.providers.empty()) {
      throw UsageError("counterfactual transform requires --providers");
    }
    ProviderSet providers = load_provider_set(a.providers);
    if (!providers.generator || !providers.scorer) {
      throw ProviderError(
          "provider config needs generator and scorer sections");
    }
    CfactProviders cfact{providers.generator.get(), providers.scorer.get(),
                         a.max_attempts};
    out = apply_transform(d, kind, a.seed, &cfact, &failures);
  } else if (kind == TransformKind::Irrelevant && a.derange) {
    out = make_irrelevant(d, a.seed, /*derange=*/true);
  } else {
    out = apply_transform(d, kind, a.seed);
  }

  save_dataset(out, a.out);

  Sidecar sidecar("transform", argv, {a.in}, {a.out});
  sidecar.seed = a.seed;
  if (!a.providers.empty()) sidecar.provider_config = fs::path(a.providers);

  if (!failures.empty()) {
    const std::string failed_path =
        a.failed_out.empty() ? a.out + ".failed.jsonl" : a.failed_out;
    std::ofstream fout(failed_path, std::ios::binary);
    if (!fout) throw DataError("cannot write side-channel: " + failed_path);
    for (const auto& failure : failures) {
      ordered_json j;
      j["id"] = failure.id;
      j["best_candidate"] = failure.result.candidate;
      j["best_score"] = failure.result.score;
      j["attempts"] = failure.result.attempts;
      j["transcript"] = ordered_json::array();
      for (const auto& [cand, score] : failure.result.transcript) {
        j["transcript"].push_back({{"candidate", cand}, {"score", score}});
      }
      fout << j.dump() << '\n';
    }
    sidecar.outputs.push_back(failed_path);
    std::cerr << "transform: " << failures.size()
              << " record(s) below the acceptance gate; see " << failed_path
              << "\n";
  }
  sidecar.write(a.out + ".provenance.json");
  return 0;
}

struct MixArgs {
  std::string clean, corrupted, kind, out, manifest;
  int level = 0;
  uint64_t seed = 0;
};

int cmd_mix(const MixArgs& a, const std::vector<std::string>& argv) {
  Dataset clean = load_dataset(a.clean);
  Dataset corrupted = load_dataset(a.corrupted);
  auto [mixed, scenario] = build_scenario(clean, corrupted, a.level, a.seed);
  scenario.kind = kind_from_label(a.kind);

  save_dataset(mixed, a.out);
  const std::string manifest_path =
      a.manifest.empty() ? a.out + ".manifest.json" : a.manifest;
  save_scenario(scenario, manifest_path);

  Sidecar sidecar("mix", argv, {a.clean, a.corrupted},
                  {a.out, manifest_path});
  sidecar.seed = a.seed;
  sidecar.write(a.out + ".provenance.json");
  return 0;
}

struct GridArgs {
  std::string clean, corrupted_dir, out_dir;
  uint64_t seed = 0;
};

int cmd_grid(const GridArgs& a, const std::vector<std::string>& argv) {
  Dataset clean = load_dataset(a.clean);
  std::map<TransformKind, Dataset> corrupted;
  std::vector<fs::path> inputs{a.clean};
  for (TransformKind kind : corruption_kinds()) {
    fs::path path = fs::path(a.corrupted_dir) / (kind_label(kind) + ".jsonl");
    corrupted.emplace(kind, load_dataset(path));
    inputs.push_back(path);
  }

  auto grid = build_full_grid(clean, corrupted, a.seed);

  fs::create_directories(a.out_dir);
  Sidecar sidecar("grid", argv, inputs, {});
  sidecar.seed = a.seed;
  for (const auto& [mixed, scenario] : grid) {
    const std::string stem =
        kind_label(scenario.kind) + "_" + std::to_string(scenario.level);
    fs::path data_path = fs::path(a.out_dir) / (stem + ".jsonl");
    fs::path manifest_path = fs::path(a.out_dir) / (stem + ".manifest.json");
    save_dataset(mixed, data_path);
    save_scenario(scenario, manifest_path);
    sidecar.outputs.push_back(data_path);
    sidecar.outputs.push_back(manifest_path);
  }
  sidecar.write(fs::path(a.out_dir) / "provenance.json");
  std::cerr << "grid: wrote " << grid.size() << " scenarios to " << a.out_dir
            << "\n";
  return 0;
}

struct EvaluateArgs {
  std::string refs, preds, kind, out, providers;
  bool offline = false;
};

int cmd_evaluate(const EvaluateArgs& a, const std::vector<std::string>& argv) {
  Dataset refs = load_dataset(a.refs);
  auto predictions = load_predictions(a.preds);
  TransformKind kind = kind_from_label(a.kind);

  EvalOptions options;
  ProviderSet providers;
  if (a.offline) {
    options.semantic = false;
    options.judging = false;
  } else {
    if (a.providers.empty()) {
      throw UsageError("evaluate needs --providers unless --offline is set");
    }
    providers = load_provider_set(a.providers);
    options.semantic = providers.embedding != nullptr;
    options.judging = providers.judge != nullptr;
  }

  auto records =
      evaluate_predictions(predictions, refs, kind, providers.embedding.get(),
                           providers.judge.get(), options);
  save_eval_records(records, a.out);

  std::size_t failed = 0;
  for (const auto& rec : records) {
    if (rec.failure) ++failed;
  }
  if (failed > 0) {
    std::cerr << "evaluate: " << failed
              << " record(s) flagged with provider failures\n";
  }

  Sidecar sidecar("evaluate", argv, {a.refs, a.preds}, {a.out});
  if (!a.providers.empty()) sidecar.provider_config = fs::path(a.providers);
  sidecar.write(a.out + ".provenance.json");
  return 0;
}

struct AgreeArgs {
  std::string pairs, criterion = "labels", out;
};

int cmd_agree(const AgreeArgs& a, const std::vector<std::string>& argv) {
  LabelPairSet pairs = load_label_pairs(a.pairs);
  const std::string result = agreement_to_json(a.criterion, pairs);
  if (a.out.empty()) {
    std::cout << result << "\n";
  } else {
    std::ofstream out(a.out, std::ios::binary);
    if (!out) throw DataError("cannot write agreement output: " + a.out);
    out << result << '\n';
    Sidecar sidecar("agree", argv, {a.pairs}, {a.out});
    sidecar.write(a.out + ".provenance.json");
  }
  return 0;
}

struct ReportArgs {
  std::string eval_dir, out_dir;
};

// Eval files are named <model>__<kind>__<level>.jsonl; the model part may
// itself contain double underscores.
struct EvalFileKey {
  std::string model;
  TransformKind kind;
  int level;
};

std::optional<EvalFileKey> parse_eval_filename(const fs::path& path) {
  if (path.extension() != ".jsonl") return std::nullopt;
  const std::string stem = path.stem().string();
  auto level_sep = stem.rfind("__");
  if (level_sep == std::string::npos) return std::nullopt;
  auto kind_sep = stem.rfind("__", level_sep - 1);
  if (kind_sep == std::string::npos) return std::nullopt;

  EvalFileKey key;
  key.model = stem.substr(0, kind_sep);
  try {
    key.kind = kind_from_label(stem.substr(kind_sep + 2, level_sep - kind_sep - 2));
    key.level = std::stoi(stem.substr(level_sep + 2));
  } catch (const std::exception&) {
    return std::nullopt;
  }
  if (key.model.empty()) return std::nullopt;
  return key;
}

int cmd_report(const ReportArgs& a, const std::vector<std::string>& argv) {
  std::map<std::pair<int, int>,
           std::map<std::string, std::vector<EvalRecord>>>
      groups;  // (kind, level) -> model -> records
  std::vector<fs::path> inputs;

  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(a.eval_dir)) {
    if (entry.is_regular_file()) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  for (const auto& path : files) {
    auto key = parse_eval_filename(path);
    if (!key) continue;
    groups[{static_cast<int>(key->kind), key->level}][key->model] =
        load_eval_records(path);
    inputs.push_back(path);
  }
  if (groups.empty()) {
    throw DataError("no <model>__<kind>__<level>.jsonl files found in " +
                    a.eval_dir);
  }

  std::vector<AggregateRow> rows;
  std::vector<HeatmapCell> cells;
  for (const auto& [group_key, by_model] : groups) {
    const auto kind = static_cast<TransformKind>(group_key.first);
    const int level = group_key.second;
    auto group_rows = aggregate(by_model, kind, level);
    rows.insert(rows.end(), group_rows.begin(), group_rows.end());
    auto group_cells = per_model_means(by_model, kind, level);
    cells.insert(cells.end(), group_cells.begin(), group_cells.end());
  }
  export_report(rows, cells, a.out_dir);

  Sidecar sidecar("report", argv, inputs, {});
  for (const char* name :
       {"lineplot.csv", "heatmap.csv", "lineplot.json", "heatmap.json"}) {
    sidecar.outputs.push_back(fs::path(a.out_dir) / name);
  }
  sidecar.write(fs::path(a.out_dir) / "provenance.json");
  return 0;
}

}  // namespace

int run_command(const std::vector<std::string>& args) {
  CLI::App app{"contamination-robustness data pipeline"};
  app.require_subcommand(1);

  CleanArgs clean_args;
  auto* clean = app.add_subcommand(
      "clean", "filter a dataset with pattern rules and optional dedup");
  clean->add_option("--in", clean_args.in, "input dataset (jsonl)")->required();
  clean->add_option("--out", clean_args.out, "output dataset")->required();
  clean->add_option("--rules", clean_args.rules,
                    "comma list of rules, or all/none");
  clean->add_option("--report", clean_args.report, "cleaning report path");
  clean->add_option("--dedup-threshold", clean_args.dedup_threshold,
                    "cosine threshold for near-duplicate removal");
  clean->add_option("--dedup-field", clean_args.dedup_field,
                    "output | instruction | combined");
  clean->add_option("--providers", clean_args.providers,
                    "provider config (embedding section used)");

  TransformArgs transform_args;
  auto* transform =
      app.add_subcommand("transform", "apply one corruption operator");
  transform->add_option("--kind", transform_args.kind,
                        "word_reversal | char_reversal | irrelevant | "
                        "counterfactual | clean")
      ->required();
  transform->add_option("--in", transform_args.in, "input dataset")->required();
  transform->add_option("--out", transform_args.out, "output dataset")
      ->required();
  transform->add_option("--seed", transform_args.seed, "generator seed")
      ->required();
  transform->add_option("--providers", transform_args.providers,
                        "provider config (generator+scorer sections)");
  transform->add_option("--max-attempts", transform_args.max_attempts,
                        "counterfactual regeneration bound");
  transform->add_option("--failed-out", transform_args.failed_out,
                        "side-channel for below-gate records");
  transform->add_flag("--derange", transform_args.derange,
                      "irrelevant: draw a fixed-point-free permutation");

  MixArgs mix_args;
  auto* mix = app.add_subcommand(
      "mix", "mix clean and corrupted records at one contamination level");
  mix->add_option("--clean", mix_args.clean, "clean dataset")->required();
  mix->add_option("--corrupted", mix_args.corrupted, "corrupted dataset")
      ->required();
  mix->add_option("--kind", mix_args.kind, "corruption kind label")->required();
  mix->add_option("--level", mix_args.level, "contamination percent")
      ->required();
  mix->add_option("--seed", mix_args.seed, "shuffle seed")->required();
  mix->add_option("--out", mix_args.out, "mixed dataset")->required();
  mix->add_option("--manifest", mix_args.manifest, "manifest path");

  GridArgs grid_args;
  auto* grid = app.add_subcommand(
      "grid", "build the full 4-kind x 4-level contamination grid");
  grid->add_option("--clean", grid_args.clean, "clean dataset")->required();
  grid->add_option("--corrupted-dir", grid_args.corrupted_dir,
                   "directory with <kind>.jsonl for all four kinds")
      ->required();
  grid->add_option("--seed", grid_args.seed, "master seed")->required();
  grid->add_option("--out-dir", grid_args.out_dir, "output directory")
      ->required();

  EvaluateArgs evaluate_args;
  auto* evaluate =
      app.add_subcommand("evaluate", "score predictions against references");
  evaluate->add_option("--refs", evaluate_args.refs, "reference dataset")
      ->required();
  evaluate->add_option("--preds", evaluate_args.preds, "prediction file")
      ->required();
  evaluate->add_option("--kind", evaluate_args.kind, "scenario kind")
      ->required();
  evaluate->add_option("--out", evaluate_args.out, "eval record output")
      ->required();
  evaluate->add_option("--providers", evaluate_args.providers,
                       "provider config (judge+embedding sections)");
  evaluate->add_flag("--offline", evaluate_args.offline,
                     "lexical metrics only; no judge or embeddings");

  AgreeArgs agree_args;
  auto* agree =
      app.add_subcommand("agree", "agreement statistics for paired labels");
  agree->add_option("--pairs", agree_args.pairs, "paired label file")
      ->required();
  agree->add_option("--criterion", agree_args.criterion, "criterion name");
  agree->add_option("--out", agree_args.out, "output path (stdout if absent)");

  ReportArgs report_args;
  auto* report = app.add_subcommand(
      "report", "aggregate eval records into line-plot and heatmap tables");
  report->add_option("--eval-dir", report_args.eval_dir,
                     "directory of <model>__<kind>__<level>.jsonl files")
      ->required();
  report->add_option("--out-dir", report_args.out_dir, "report directory")
      ->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (clean->parsed()) return cmd_clean(clean_args, args);
    if (transform->parsed()) return cmd_transform(transform_args, args);
    if (mix->parsed()) return cmd_mix(mix_args, args);
    if (grid->parsed()) return cmd_grid(grid_args, args);
    if (evaluate->parsed()) return cmd_evaluate(evaluate_args, args);
    if (agree->parsed()) return cmd_agree(agree_args, args);
    if (report->parsed()) return cmd_report(report_args, args);
    std::cerr << "error: no subcommand selected\n";
    return 1;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const DataError& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return 2;
  } catch (const ProviderError& e) {
    std::cerr << "provider error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace contamkit
