// Copyright 2026 The Genshin Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <array>
#include <csignal>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <fmt/core.h>
#include <nlohmann/json.hpp>

#include "genshin/attack.hpp"
#include "genshin/classify.hpp"
#include "genshin/config.hpp"
#include "genshin/core.hpp"
#include "genshin/defend.hpp"
#include "genshin/error.hpp"
#include "genshin/harness.hpp"
#include "genshin/interpret.hpp"
#include "genshin/llm_client.hpp"
#include "genshin/parallel.hpp"
#include "genshin/report.hpp"

namespace {

using genshin::ConfigError;
using genshin::Error;
using nlohmann::json;

extern "C" void handle_sigint(int) {
  genshin::interrupt_flag().store(true);
}

// One slot per overridable config field; count() on the owning subcommand
// decides whether the flag was passed, so precedence stays flags > env >
// file.
struct Flags {
  std::string config_path;
  std::string name;
  std::uint64_t seed = 42;
  int threads = 0;
  std::string output_dir;
  std::string dataset;
  std::uint64_t generated_n = 64;
  std::uint64_t generated_max_len = 120;
  std::string remote_url;
  std::string model_path;
  std::string script_path;
  std::string llm_base_url;
  std::string llm_api_key;
  std::string llm_model;
  std::string llm_mock;
  std::string llm_cache;
  std::string attacker_kind;
  double ratio = 0.15;
  int max_attempts = 128;
  std::string attacker_model;
  double attacker_temperature = 1.0;
  std::string defender_kind;
  std::string variant;
  std::string defender_model;
  double defender_temperature = 0.0;
  int max_tokens = 1024;
  std::uint64_t groups = 5;
  double completeness_threshold = 0.95;
  std::uint64_t subset_per_class = 0;
  std::uint64_t subset_min_len = 50;
  std::uint64_t subset_max_len = 150;
};

void add_common_options(CLI::App* cmd, Flags& flags) {
  cmd->add_option("--config", flags.config_path, "JSON config file");
  cmd->add_option("--name", flags.name, "experiment name");
  cmd->add_option("--seed", flags.seed, "global RNG seed (default 42)");
  cmd->add_option("--threads", flags.threads,
                  "parallelism bound (0 = all hardware threads)");
  cmd->add_option("--output-dir", flags.output_dir, "artifact directory");
  cmd->add_option("--dataset", flags.dataset, "dataset file (JSONL or CSV)");
  cmd->add_option("--generated-n", flags.generated_n,
                  "synthetic dataset size");
  cmd->add_option("--generated-max-len", flags.generated_max_len,
                  "synthetic sentence length bound (scalars)");
  cmd->add_option("--remote-url", flags.remote_url,
                  "remote classifier base URL");
  cmd->add_option("--model-path", flags.model_path,
                  "stored naive Bayes model");
  cmd->add_option("--script-path", flags.script_path,
                  "scripted mock classifier rules");
  cmd->add_option("--llm-base-url", flags.llm_base_url, "chat API base URL");
  cmd->add_option("--llm-api-key", flags.llm_api_key, "chat API key");
  cmd->add_option("--llm-model", flags.llm_model, "chat model name");
  cmd->add_option("--llm-mock", flags.llm_mock, "mock chat script (JSONL)");
  cmd->add_option("--llm-cache", flags.llm_cache,
                  "response cache directory (temperature-0 only)");
  cmd->add_option("--attacker", flags.attacker_kind,
                  "attacker kind: char, word or llm");
  cmd->add_option("--ratio", flags.ratio, "disturbance ratio");
  cmd->add_option("--max-attempts", flags.max_attempts,
                  "attack attempt cap");
  cmd->add_option("--attacker-model", flags.attacker_model,
                  "attacker chat model");
  cmd->add_option("--attacker-temperature", flags.attacker_temperature,
                  "attacker sampling temperature");
  cmd->add_option("--defender", flags.defender_kind,
                  "defender kind: llm, identity or oracle");
  cmd->add_option("--variant", flags.variant,
                  "prompt variant: bare, fewshot, jsonparser or full");
  cmd->add_option("--defender-model", flags.defender_model,
                  "defender chat model");
  cmd->add_option("--defender-temperature", flags.defender_temperature,
                  "defender sampling temperature");
  cmd->add_option("--max-tokens", flags.max_tokens,
                  "defender completion token cap");
  cmd->add_option("--groups", flags.groups, "sweep group count");
  cmd->add_option("--completeness-threshold", flags.completeness_threshold,
                  "minimum completed fraction");
  cmd->add_option("--subset-per-class", flags.subset_per_class,
                  "balanced subset quota per class (0 = whole dataset)");
  cmd->add_option("--subset-min-len", flags.subset_min_len,
                  "subset minimum scalar length");
  cmd->add_option("--subset-max-len", flags.subset_max_len,
                  "subset maximum scalar length (0 = unbounded)");
}

genshin::config::RunConfig build_config(const CLI::App* cmd,
                                        const Flags& flags) {
  genshin::config::RunConfig config;
  if (!flags.config_path.empty()) {
    config = genshin::config::load_run_config(flags.config_path);
  }
  genshin::config::apply_env(config);

  const auto passed = [cmd](const std::string& option) {
    return cmd->count(option) > 0;
  };
  if (passed("--name")) config.name = flags.name;
  if (passed("--seed")) config.seed = flags.seed;
  if (passed("--threads")) config.threads = flags.threads;
  if (passed("--output-dir")) config.output_dir = flags.output_dir;
  if (passed("--dataset")) {
    config.dataset.path = flags.dataset;
    config.dataset.generated.reset();
  }
  if (passed("--generated-n") || passed("--generated-max-len")) {
    genshin::config::GeneratedDataset synthetic;
    if (config.dataset.generated) synthetic = *config.dataset.generated;
    if (passed("--generated-n")) synthetic.n = flags.generated_n;
    if (passed("--generated-max-len"))
      synthetic.max_len = flags.generated_max_len;
    config.dataset.generated = synthetic;
    config.dataset.path.clear();
  }
  if (passed("--remote-url")) {
    config.classifier = {};
    config.classifier.remote_url = flags.remote_url;
  }
  if (passed("--model-path")) {
    config.classifier = {};
    config.classifier.model_path = flags.model_path;
  }
  if (passed("--script-path")) {
    config.classifier = {};
    config.classifier.script_path = flags.script_path;
  }
  if (passed("--llm-base-url")) config.llm.base_url = flags.llm_base_url;
  if (passed("--llm-api-key")) config.llm.api_key = flags.llm_api_key;
  if (passed("--llm-model")) config.llm.model = flags.llm_model;
  if (passed("--llm-mock")) config.llm.mock_script = flags.llm_mock;
  if (passed("--llm-cache")) config.cache_dir = flags.llm_cache;
  if (passed("--attacker")) config.attacker.kind = flags.attacker_kind;
  if (passed("--ratio")) config.attacker.ratio = flags.ratio;
  if (passed("--max-attempts"))
    config.attacker.max_attempts = flags.max_attempts;
  if (passed("--attacker-model")) config.attacker.model = flags.attacker_model;
  if (passed("--attacker-temperature"))
    config.attacker.temperature = flags.attacker_temperature;
  if (passed("--defender")) config.defender.kind = flags.defender_kind;
  if (passed("--variant")) config.defender.variant = flags.variant;
  if (passed("--defender-model")) config.defender.model = flags.defender_model;
  if (passed("--defender-temperature"))
    config.defender.temperature = flags.defender_temperature;
  if (passed("--max-tokens")) config.defender.max_tokens = flags.max_tokens;
  if (passed("--groups")) config.groups = flags.groups;
  if (passed("--completeness-threshold"))
    config.completeness_threshold = flags.completeness_threshold;
  if (passed("--subset-per-class") || passed("--subset-min-len") ||
      passed("--subset-max-len")) {
    genshin::harness::SubsetParams params;
    if (config.subset) params = *config.subset;
    if (passed("--subset-per-class")) params.per_class = flags.subset_per_class;
    if (passed("--subset-min-len")) params.min_len = flags.subset_min_len;
    if (passed("--subset-max-len")) params.max_len = flags.subset_max_len;
    if (params.per_class == 0) {
      config.subset.reset();
    } else {
      config.subset = params;
    }
  }
  return config;
}

void emit(const json& summary) { std::cout << summary.dump(2) << std::endl; }

void write_text_file(const std::filesystem::path& path,
                     const std::string& text) {
  if (!path.parent_path().empty()) {
    std::filesystem::create_directories(path.parent_path());
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
}

json load_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& error) {
    throw Error(path.string() + ": " + error.what());
  }
}

// Classifier construction for subcommands that may not need a dataset:
// remote classifiers take their label set from the dataset, the stored
// kinds carry their own.
std::unique_ptr<genshin::classify::Classifier> standalone_classifier(
    const genshin::config::RunConfig& config) {
  genshin::core::LabeledDataset empty;
  if (!config.classifier.remote_url.empty()) {
    if (config.dataset.path.empty() && !config.dataset.generated) {
      throw ConfigError(
          "config field \"dataset\": required so the remote classifier "
          "knows the label set");
    }
    const genshin::core::LabeledDataset dataset =
        genshin::config::make_dataset(config);
    return genshin::config::make_classifier(config, dataset);
  }
  return genshin::config::make_classifier(config, empty);
}

std::vector<double> default_sweep_grid() {
  std::vector<double> grid;
  for (int i = 1; i <= 10; ++i) grid.push_back(0.05 * i);
  return grid;
}

int cmd_run(const genshin::config::RunConfig& config) {
  auto experiment = genshin::config::materialize(config);
  fmt::print(stderr, "run: {} instances, attacker={}, defender={}\n",
             experiment->dataset.size(), config.attacker.kind,
             config.defender.kind);
  const genshin::harness::ExperimentRow row =
      genshin::harness::run_main_experiment(experiment->spec);
  emit(row.to_json());
  return 0;
}

int cmd_sweep(const genshin::config::RunConfig& config) {
  auto experiment = genshin::config::materialize(config);
  const std::vector<double> ratios =
      config.ratios.empty() ? default_sweep_grid() : config.ratios;
  fmt::print(stderr, "sweep: {} ratios over {} instances\n", ratios.size(),
             experiment->dataset.size());
  const std::vector<genshin::harness::SweepPoint> points =
      genshin::harness::run_ratio_sweep(experiment->spec, ratios);
  json array = json::array();
  for (const auto& point : points) array.push_back(point.to_json());
  emit(json{{"points", array}});
  return 0;
}

int cmd_prompts(const genshin::config::RunConfig& config,
                const std::vector<std::string>& variant_names,
                const std::string& format_name, const std::string& out) {
  auto experiment = genshin::config::materialize(config);
  std::vector<genshin::defend::PromptVariant> variants;
  if (variant_names.empty()) {
    variants = {genshin::defend::PromptVariant::kBare,
                genshin::defend::PromptVariant::kFewShot,
                genshin::defend::PromptVariant::kJsonParser,
                genshin::defend::PromptVariant::kFull};
  } else {
    for (const std::string& name : variant_names) {
      variants.push_back(genshin::defend::parse_prompt_variant(name));
    }
  }
  const genshin::harness::AblationResult result =
      genshin::harness::run_prompt_ablation({experiment->spec}, variants);
  json rows = json::array();
  for (const auto& row : result.rows) rows.push_back(row.to_json());
  json summary{{"variants", result.variants},
               {"datasets", result.datasets},
               {"rows", rows}};
  if (!out.empty()) {
    write_text_file(out, genshin::report::render_ablation_table(
                             result, genshin::report::parse_table_format(
                                         format_name)));
    summary["out"] = out;
  }
  emit(summary);
  return 0;
}

int cmd_attack(const genshin::config::RunConfig& config,
               const std::string& out) {
  genshin::config::validate(config);
  genshin::core::LabeledDataset dataset =
      genshin::config::make_dataset(config);
  if (config.subset) {
    dataset = genshin::core::sample_balanced_subset(
        dataset, config.subset->per_class, config.subset->min_len,
        config.subset->max_len, config.seed);
  }
  auto classifier = genshin::config::make_classifier(config, dataset);
  genshin::attack::AttackConfig attacker;
  attacker.kind = genshin::attack::parse_attacker_kind(config.attacker.kind);
  attacker.ratio = config.attacker.ratio;
  attacker.max_attempts = config.attacker.max_attempts;
  attacker.seed = config.seed;
  attacker.temperature = config.attacker.temperature;
  attacker.model = config.attacker.model.empty() ? config.llm.model
                                                 : config.attacker.model;
  std::unique_ptr<genshin::llm::ChatClient> client;
  if (attacker.kind == genshin::attack::AttackerKind::kLlm) {
    client = genshin::config::make_client(config);
    attacker.client = client.get();
  }
  fmt::print(stderr, "attack: {} over {} instances\n", config.attacker.kind,
             dataset.size());
  const genshin::attack::AttackBatchResult result = genshin::attack::
      attack_dataset(dataset, attacker, *classifier, config.threads);
  const std::vector<genshin::attack::AttackOutcome> completed =
      result.completed();
  for (const auto& error : result.errors) {
    fmt::print(stderr, "attack: instance {} failed: {}\n", error.instance_id,
               error.message);
  }
  std::size_t successes = 0;
  double edr_sum = 0.0;
  for (const auto& outcome : completed) {
    if (outcome.success) ++successes;
    edr_sum += outcome.edr;
  }
  json summary{
      {"instances", dataset.size()},
      {"completed", completed.size()},
      {"successes", successes},
      {"errors", result.errors.size()},
      {"mat", genshin::attack::median_attack_time(completed,
                                                  attacker.max_attempts)},
      {"add", completed.empty() ? 0.0 : edr_sum / completed.size()},
  };
  std::filesystem::path out_path = out;
  if (out_path.empty() && !config.output_dir.empty()) {
    out_path = config.output_dir / "attacked.jsonl";
  }
  if (!out_path.empty()) {
    if (!out_path.parent_path().empty()) {
      std::filesystem::create_directories(out_path.parent_path());
    }
    genshin::attack::save_outcomes_jsonl(completed, out_path);
    summary["out"] = out_path.string();
  }
  emit(summary);
  return 0;
}

int cmd_recover(const genshin::config::RunConfig& config,
                const std::string& attacked, const std::string& out) {
  if (attacked.empty()) {
    throw ConfigError("config field \"attacked\": required (JSONL of "
                      "attack outcomes)");
  }
  const std::vector<genshin::attack::AttackOutcome> outcomes =
      genshin::attack::load_outcomes_jsonl(attacked);
  genshin::defend::DefenderOptions options;
  options.variant =
      genshin::defend::parse_prompt_variant(config.defender.variant);
  options.temperature = config.defender.temperature;
  options.max_tokens = config.defender.max_tokens;
  options.model = config.defender.model.empty() ? config.llm.model
                                                : config.defender.model;
  auto client = genshin::config::make_client(config);
  fmt::print(stderr, "recover: {} instances, variant={}\n", outcomes.size(),
             config.defender.variant);
  const std::vector<genshin::defend::RecoveryResult> recoveries =
      genshin::defend::recover_dataset(outcomes, options, *client,
                                       config.threads);
  std::size_t fallbacks = 0;
  for (const auto& recovery : recoveries) {
    if (recovery.fallback_used) ++fallbacks;
  }
  json summary{{"count", recoveries.size()}, {"fallbacks", fallbacks}};
  std::filesystem::path out_path = out;
  if (out_path.empty() && !config.output_dir.empty()) {
    out_path = config.output_dir / "recovered.jsonl";
  }
  if (!out_path.empty()) {
    if (!out_path.parent_path().empty()) {
      std::filesystem::create_directories(out_path.parent_path());
    }
    genshin::defend::save_recoveries_jsonl(recoveries, out_path);
    summary["out"] = out_path.string();
  }
  emit(summary);
  return 0;
}

int cmd_classify(const genshin::config::RunConfig& config,
                 const std::string& text, bool has_text) {
  if (has_text) {
    auto classifier = standalone_classifier(config);
    const genshin::classify::Prediction prediction =
        classifier->predict(text);
    emit(json{{"label", prediction.label.name},
              {"index", prediction.label.index},
              {"probs", prediction.probs}});
    return 0;
  }
  genshin::core::LabeledDataset dataset =
      genshin::config::make_dataset(config);
  if (config.subset) {
    dataset = genshin::core::sample_balanced_subset(
        dataset, config.subset->per_class, config.subset->min_len,
        config.subset->max_len, config.seed);
  }
  auto classifier = genshin::config::make_classifier(config, dataset);
  fmt::print(stderr, "classify: {} instances\n", dataset.size());
  const double acc =
      genshin::classify::accuracy(*classifier, dataset, config.threads);
  emit(json{{"instances", dataset.size()}, {"accuracy", acc}});
  return 0;
}

int cmd_explain(const genshin::config::RunConfig& config,
                const std::string& text, int max_exact,
                std::uint64_t samples, const std::string& masking,
                const std::string& placeholder, const std::string& target) {
  auto classifier = standalone_classifier(config);
  genshin::interpret::InterpreterConfig interpreter;
  interpreter.exact_limit = max_exact;
  interpreter.samples = samples;
  interpreter.seed = config.seed;
  interpreter.threads = config.threads;
  if (masking == "deletion") {
    interpreter.masking = genshin::interpret::Masking::kDeletion;
  } else if (masking == "placeholder") {
    interpreter.masking = genshin::interpret::Masking::kPlaceholder;
  } else {
    throw ConfigError("config field \"masking\": expected deletion or "
                      "placeholder");
  }
  interpreter.placeholder = placeholder;
  std::optional<genshin::core::ClassLabel> target_class;
  if (!target.empty()) {
    for (const auto& label : classifier->labels()) {
      if (label.name == target) target_class = label;
    }
    if (!target_class) {
      throw ConfigError("config field \"target\": unknown label \"" + target +
                        "\"");
    }
  }
  const genshin::interpret::Attribution attribution = genshin::interpret::
      attribute(text, *classifier, interpreter, target_class);
  emit(attribution.to_json());
  return 0;
}

int cmd_report(const genshin::config::RunConfig& config,
               const std::vector<std::string>& row_paths,
               const std::string& sweep_path, const std::string& run_dir,
               std::uint64_t highlights, const std::string& format_name,
               const std::string& out) {
  const genshin::report::TableFormat format =
      genshin::report::parse_table_format(format_name);
  const int modes = (row_paths.empty() ? 0 : 1) +
                    (sweep_path.empty() ? 0 : 1) + (run_dir.empty() ? 0 : 1);
  if (modes != 1) {
    throw ConfigError("config field \"report\": exactly one of --row, "
                      "--sweep or --run-dir must be given");
  }

  if (!row_paths.empty()) {
    std::vector<genshin::harness::ExperimentRow> rows;
    for (const std::string& path : row_paths) {
      rows.push_back(
          genshin::harness::ExperimentRow::from_json(load_json_file(path)));
    }
    const std::string table = genshin::report::render_table(rows, format);
    json summary{{"rows", rows.size()}, {"format", format_name}};
    if (out.empty()) {
      summary["table"] = table;
    } else {
      write_text_file(out, table);
      summary["out"] = out;
    }
    emit(summary);
    return 0;
  }

  if (!sweep_path.empty()) {
    const json array = load_json_file(sweep_path);
    if (!array.is_array()) throw Error(sweep_path + ": expected an array");
    std::vector<genshin::harness::SweepPoint> points;
    for (const json& object : array) {
      genshin::harness::SweepPoint point;
      point.ratio = object.at("ratio").get<double>();
      point.samples = object.at("samples").get<std::size_t>();
      point.groups = object.at("groups").get<std::size_t>();
      point.add_mean = object.at("add_mean").get<double>();
      point.add_std = object.at("add_std").get<double>();
      point.ard_mean = object.at("ard_mean").get<double>();
      point.ard_std = object.at("ard_std").get<double>();
      points.push_back(point);
    }
    const std::string table =
        genshin::report::render_sweep_table(points, format);
    json summary{{"points", points.size()}, {"format", format_name}};
    if (out.empty()) {
      summary["table"] = table;
    } else {
      write_text_file(out, table);
      summary["out"] = out;
    }
    emit(summary);
    return 0;
  }

  // Highlights page from a persisted run directory.
  const std::filesystem::path dir = run_dir;
  const genshin::core::LabeledDataset originals =
      genshin::core::load_dataset(dir / "original.jsonl");
  const std::vector<genshin::attack::AttackOutcome> outcomes =
      genshin::attack::load_outcomes_jsonl(dir / "attacked.jsonl");
  const std::vector<genshin::defend::RecoveryResult> recoveries =
      genshin::defend::load_recoveries_jsonl(dir / "recovered.jsonl");
  auto classifier = standalone_classifier(config);

  std::map<std::string, const genshin::attack::AttackOutcome*> attacked_by_id;
  for (const auto& outcome : outcomes) {
    attacked_by_id[outcome.instance_id] = &outcome;
  }
  std::map<std::string, const genshin::defend::RecoveryResult*>
      recovered_by_id;
  for (const auto& recovery : recoveries) {
    recovered_by_id[recovery.instance_id] = &recovery;
  }

  genshin::interpret::InterpreterConfig interpreter;
  interpreter.seed = config.seed;
  interpreter.threads = config.threads;

  std::vector<genshin::report::HighlightCase> cases;
  for (const auto& instance : originals.instances()) {
    if (cases.size() >= highlights) break;
    const auto attacked = attacked_by_id.find(instance.id);
    const auto recovered = recovered_by_id.find(instance.id);
    if (attacked == attacked_by_id.end() ||
        recovered == recovered_by_id.end()) {
      continue;
    }
    genshin::report::HighlightCase highlight;
    highlight.instance_id = instance.id;
    highlight.gold_label = instance.label.name;
    const std::array<std::pair<genshin::core::PipelineState, std::string>, 3>
        states = {{{genshin::core::PipelineState::kOriginal, instance.text},
                   {genshin::core::PipelineState::kAttacked,
                    attacked->second->attacked},
                   {genshin::core::PipelineState::kRecovered,
                    recovered->second->recovered}}};
    for (std::size_t i = 0; i < states.size(); ++i) {
      highlight.rows[i].state = states[i].first;
      highlight.rows[i].prediction = classifier->predict(states[i].second);
      highlight.rows[i].attribution = genshin::interpret::attribute(
          states[i].second, *classifier, interpreter);
    }
    cases.push_back(std::move(highlight));
  }

  const std::filesystem::path out_path =
      out.empty() ? dir / "highlights.html" : std::filesystem::path(out);
  if (!out_path.parent_path().empty()) {
    std::filesystem::create_directories(out_path.parent_path());
  }
  genshin::report::render_highlights(cases, out_path);
  emit(json{{"highlights", cases.size()}, {"out", out_path.string()}});
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  std::signal(SIGINT, handle_sigint);

  CLI::App app{"genshin: adversarial text attack, LLM recovery and Shapley "
               "attribution pipeline"};
  app.require_subcommand(1);
  Flags flags;

  CLI::App* run = app.add_subcommand("run", "main attack/recover experiment");
  add_common_options(run, flags);

  CLI::App* sweep = app.add_subcommand("sweep", "disturbance-ratio sweep");
  add_common_options(sweep, flags);
  std::vector<double> sweep_ratios;
  sweep->add_option("--ratios", sweep_ratios, "ratio grid");

  CLI::App* prompts =
      app.add_subcommand("prompts", "prompt-variant ablation");
  add_common_options(prompts, flags);
  std::vector<std::string> prompt_variants;
  std::string prompts_format = "markdown";
  std::string prompts_out;
  prompts->add_option("--variants", prompt_variants,
                      "variants to ablate (default: all)");
  prompts->add_option("--format", prompts_format, "table format");
  prompts->add_option("--out", prompts_out, "table file");

  CLI::App* attack = app.add_subcommand("attack", "adversarial attack only");
  add_common_options(attack, flags);
  std::string attack_out;
  attack->add_option("--out", attack_out, "attacked outcomes file (JSONL)");

  CLI::App* recover = app.add_subcommand("recover", "LLM recovery only");
  add_common_options(recover, flags);
  std::string recover_attacked;
  std::string recover_out;
  recover->add_option("--attacked", recover_attacked,
                      "attack outcomes file (JSONL)");
  recover->add_option("--out", recover_out, "recoveries file (JSONL)");

  CLI::App* classify = app.add_subcommand("classify", "classifier scoring");
  add_common_options(classify, flags);
  std::string classify_text;
  classify->add_option("--text", classify_text, "single text to classify");

  CLI::App* explain =
      app.add_subcommand("explain", "Shapley token attribution");
  add_common_options(explain, flags);
  std::string explain_text;
  int explain_max_exact = 12;
  std::uint64_t explain_samples = 200;
  std::string explain_masking = "deletion";
  std::string explain_placeholder = "<mask>";
  std::string explain_target;
  explain->add_option("--text", explain_text, "text to attribute")
      ->required();
  explain->add_option("--max-exact", explain_max_exact,
                      "exact-solution token bound");
  explain->add_option("--samples", explain_samples, "permutation samples");
  explain->add_option("--masking", explain_masking,
                      "deletion or placeholder");
  explain->add_option("--placeholder", explain_placeholder,
                      "placeholder token");
  explain->add_option("--target", explain_target, "target class label");

  CLI::App* report = app.add_subcommand("report", "tables and highlights");
  add_common_options(report, flags);
  std::vector<std::string> report_rows;
  std::string report_sweep;
  std::string report_run_dir;
  std::uint64_t report_highlights = 3;
  std::string report_format = "markdown";
  std::string report_out;
  report->add_option("--row", report_rows, "row.json files");
  report->add_option("--sweep", report_sweep, "sweep.json file");
  report->add_option("--run-dir", report_run_dir,
                     "persisted run directory (highlights mode)");
  report->add_option("--highlights", report_highlights,
                     "number of highlight cases");
  report->add_option("--format", report_format, "table format");
  report->add_option("--out", report_out, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& help) {
    return app.exit(help);
  } catch (const CLI::CallForAllHelp& help) {
    return app.exit(help);
  } catch (const CLI::ParseError& error) {
    fmt::print(stderr, "{}\n\n{}", error.what(), app.help());
    return 2;
  }

  try {
    if (app.got_subcommand(run)) {
      return cmd_run(build_config(run, flags));
    }
    if (app.got_subcommand(sweep)) {
      auto config = build_config(sweep, flags);
      if (!sweep_ratios.empty()) config.ratios = sweep_ratios;
      return cmd_sweep(config);
    }
    if (app.got_subcommand(prompts)) {
      return cmd_prompts(build_config(prompts, flags), prompt_variants,
                         prompts_format, prompts_out);
    }
    if (app.got_subcommand(attack)) {
      return cmd_attack(build_config(attack, flags), attack_out);
    }
    if (app.got_subcommand(recover)) {
      return cmd_recover(build_config(recover, flags), recover_attacked,
                         recover_out);
    }
    if (app.got_subcommand(classify)) {
      return cmd_classify(build_config(classify, flags), classify_text,
                          classify->count("--text") > 0);
    }
    if (app.got_subcommand(explain)) {
      return cmd_explain(build_config(explain, flags), explain_text,
                         explain_max_exact, explain_samples, explain_masking,
                         explain_placeholder, explain_target);
    }
    if (app.got_subcommand(report)) {
      return cmd_report(build_config(report, flags), report_rows,
                        report_sweep, report_run_dir, report_highlights,
                        report_format, report_out);
    }
    fmt::print(stderr, "no subcommand selected\n");
    return 2;
  } catch (const ConfigError& error) {
    fmt::print(stderr, "config error: {}\n", error.what());
    return 2;
  } catch (const std::exception& error) {
    fmt::print(stderr, "error: {}\n", error.what());
    return 1;
  }
}
