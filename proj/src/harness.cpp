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

#include "genshin/harness.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>

#include <nlohmann/json.hpp>

#include "genshin/parallel.hpp"
#include "genshin/rng.hpp"
#include "genshin/textops.hpp"

namespace genshin::harness {
namespace {

using nlohmann::json;

void write_text_file(const std::filesystem::path& path,
                     const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  out << content;
}

void validate(const ExperimentSpec& spec) {
  if (spec.dataset == nullptr) throw ConfigError("experiment needs a dataset");
  if (spec.classifier == nullptr) {
    throw ConfigError("experiment needs a classifier");
  }
  if (spec.dataset->empty()) throw ConfigError("experiment dataset is empty");
  if (spec.completeness_threshold < 0.0 ||
      spec.completeness_threshold > 1.0) {
    throw ConfigError("completeness threshold must lie in [0, 1]");
  }
  if (spec.groups == 0) throw ConfigError("group count must be positive");
  if (spec.defender.kind == DefenderKind::kLlm && spec.client == nullptr) {
    throw ConfigError("llm defender requires a chat client");
  }
  if (spec.attacker.kind == attack::AttackerKind::kLlm &&
      spec.attacker.client == nullptr) {
    throw ConfigError("llm attacker requires a chat client");
  }
}

core::LabeledDataset working_set(const ExperimentSpec& spec) {
  if (spec.subset) {
    return core::sample_balanced_subset(*spec.dataset, spec.subset->per_class,
                                        spec.subset->min_len,
                                        spec.subset->max_len, spec.seed);
  }
  return *spec.dataset;
}

struct StagePredictions {
  std::vector<std::optional<classify::Prediction>> predictions;
  std::vector<std::string> errors;  // aligned; empty string = ok
};

StagePredictions predict_stage(const std::vector<std::string>& texts,
                               const classify::Classifier& classifier,
                               int threads) {
  StagePredictions stage;
  stage.predictions.resize(texts.size());
  stage.errors.resize(texts.size());
  const int nthreads =
      effective_threads(threads, classifier.concurrency_limit());
  const auto n = static_cast<std::int64_t>(texts.size());
#pragma omp parallel for schedule(dynamic, 4) num_threads(nthreads)
  for (std::int64_t i = 0; i < n; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    try {
      stage.predictions[idx] = classifier.predict(texts[idx]);
    } catch (const std::exception& e) {
      stage.errors[idx] = e.what();
    }
  }
  return stage;
}

json prediction_to_json(const classify::Prediction& prediction) {
  return json{{"label", prediction.label.name}, {"probs", prediction.probs}};
}

json spec_to_json(const ExperimentSpec& spec,
                  const core::LabeledDataset& working) {
  json subset = nullptr;
  if (spec.subset) {
    subset = json{{"per_class", spec.subset->per_class},
                  {"min_len", spec.subset->min_len},
                  {"max_len", spec.subset->max_len}};
  }
  json attacker{{"kind", std::string(attacker_kind_name(spec.attacker.kind))},
                {"ratio", spec.attacker.ratio},
                {"max_attempts", spec.attacker.max_attempts}};
  if (spec.attacker.kind == attack::AttackerKind::kLlm) {
    attacker["model"] = spec.attacker.model;
    attacker["temperature"] = spec.attacker.temperature;
  }
  json defender{
      {"kind", std::string(defender_kind_name(spec.defender.kind))}};
  if (spec.defender.kind == DefenderKind::kLlm) {
    defender["variant"] = std::string(
        defend::prompt_variant_name(spec.defender.options.variant));
    defender["model"] = spec.defender.options.model;
    defender["temperature"] = spec.defender.options.temperature;
  }
  return json{{"name", spec.name},
              {"dataset", working.name()},
              {"instances", working.size()},
              {"classifier", spec.classifier->name()},
              {"attacker", attacker},
              {"defender", defender},
              {"subset", subset},
              {"seed", spec.seed},
              {"groups", spec.groups},
              {"completeness_threshold", spec.completeness_threshold}};
}

std::vector<defend::RecoveryResult> run_defender(
    const ExperimentSpec& spec,
    const std::vector<attack::AttackOutcome>& outcomes) {
  switch (spec.defender.kind) {
    case DefenderKind::kLlm:
      return defend::recover_dataset(outcomes, spec.defender.options,
                                     *spec.client, spec.threads);
    case DefenderKind::kIdentity:
    case DefenderKind::kOracle: {
      std::vector<defend::RecoveryResult> results;
      results.reserve(outcomes.size());
      for (const attack::AttackOutcome& outcome : outcomes) {
        defend::RecoveryResult result;
        result.instance_id = outcome.instance_id;
        result.label = outcome.label;
        result.attacked = outcome.attacked;
        result.recovered = spec.defender.kind == DefenderKind::kIdentity
                               ? outcome.attacked
                               : outcome.original;
        result.parse_ok = true;
        result.fallback_used = false;
        results.push_back(std::move(result));
      }
      return results;
    }
  }
  throw Error("unreachable defender kind");
}

// Splits [0, size) deterministically into at most k non-empty groups.
std::vector<std::vector<std::size_t>> index_groups(std::size_t size,
                                                   std::size_t k,
                                                   std::uint64_t seed,
                                                   const std::string& tag) {
  std::vector<std::size_t> order(size);
  std::iota(order.begin(), order.end(), std::size_t{0});
  Rng rng = Rng::for_instance(seed, "groups-" + tag);
  rng.shuffle(order);
  const std::size_t buckets = std::min(k, size);
  std::vector<std::vector<std::size_t>> groups(buckets);
  for (std::size_t i = 0; i < order.size(); ++i) {
    groups[i % buckets].push_back(order[i]);
  }
  return groups;
}

SweepPoint sweep_point_from(const std::vector<std::string>& originals,
                            const std::vector<std::string>& attacked,
                            const std::vector<std::string>& recovered,
                            double ratio, std::size_t k, std::uint64_t seed,
                            int threads) {
  SweepPoint point;
  point.ratio = ratio;
  point.samples = originals.size();
  const std::vector<double> attack_edr =
      textops::batch_edr(originals, attacked, threads);
  const std::vector<double> recovery_edr =
      textops::batch_edr(originals, recovered, threads);
  const auto groups = index_groups(originals.size(), k, seed,
                                   "ratio-" + std::to_string(ratio));
  std::vector<double> add_per_group;
  std::vector<double> ard_per_group;
  for (const auto& group : groups) {
    double add_sum = 0.0;
    double ard_sum = 0.0;
    for (std::size_t index : group) {
      add_sum += attack_edr[index];
      ard_sum += recovery_edr[index];
    }
    add_per_group.push_back(add_sum / static_cast<double>(group.size()));
    ard_per_group.push_back(ard_sum / static_cast<double>(group.size()));
  }
  point.groups = groups.size();
  point.add_mean = textops::mean(add_per_group);
  point.add_std = textops::sample_std_dev(add_per_group);
  point.ard_mean = textops::mean(ard_per_group);
  point.ard_std = textops::sample_std_dev(ard_per_group);
  return point;
}

}  // namespace

std::string_view defender_kind_name(DefenderKind kind) {
  switch (kind) {
    case DefenderKind::kLlm:
      return "llm";
    case DefenderKind::kIdentity:
      return "identity";
    case DefenderKind::kOracle:
      return "oracle";
  }
  return "unknown";
}

DefenderKind parse_defender_kind(const std::string& name) {
  if (name == "llm") return DefenderKind::kLlm;
  if (name == "identity") return DefenderKind::kIdentity;
  if (name == "oracle") return DefenderKind::kOracle;
  throw ConfigError("unknown defender kind \"" + name +
                    "\" (expected llm, identity or oracle)");
}

std::optional<double> compute_rratio(double oacc, double aacc, double racc,
                                     std::string* note) {
  if (oacc == aacc) {
    if (note != nullptr) {
      *note = "undefined: OAcc == AAcc leaves no headroom to recover";
    }
    return std::nullopt;
  }
  if (note != nullptr) note->clear();
  return (racc - aacc) / (oacc - aacc);
}

json ExperimentRow::to_json() const {
  return json{{"name", name},
              {"dataset", dataset},
              {"classifier", classifier_name},
              {"attacker", attacker},
              {"defender", defender},
              {"variant", variant},
              {"instances", instances},
              {"completed", completed},
              {"completeness", completeness},
              {"oacc", oacc},
              {"aacc", aacc},
              {"racc", racc},
              {"rratio", rratio ? json(*rratio) : json(nullptr)},
              {"rratio_note", rratio_note},
              {"mat", mat},
              {"add", add},
              {"ard", ard}};
}

ExperimentRow ExperimentRow::from_json(const json& object) {
  ExperimentRow row;
  row.name = object.at("name").get<std::string>();
  row.dataset = object.at("dataset").get<std::string>();
  row.classifier_name = object.at("classifier").get<std::string>();
  row.attacker = object.at("attacker").get<std::string>();
  row.defender = object.at("defender").get<std::string>();
  row.variant = object.at("variant").get<std::string>();
  row.instances = object.at("instances").get<std::size_t>();
  row.completed = object.at("completed").get<std::size_t>();
  row.completeness = object.at("completeness").get<double>();
  row.oacc = object.at("oacc").get<double>();
  row.aacc = object.at("aacc").get<double>();
  row.racc = object.at("racc").get<double>();
  if (!object.at("rratio").is_null()) {
    row.rratio = object.at("rratio").get<double>();
  }
  row.rratio_note = object.at("rratio_note").get<std::string>();
  row.mat = object.at("mat").get<double>();
  row.add = object.at("add").get<double>();
  row.ard = object.at("ard").get<double>();
  return row;
}

ExperimentRow run_main_experiment(const ExperimentSpec& spec) {
  validate(spec);
  const core::LabeledDataset working = working_set(spec);
  const bool persist = !spec.output_dir.empty();
  if (persist) std::filesystem::create_directories(spec.output_dir);
  if (persist) {
    write_text_file(spec.output_dir / "spec.json",
                    spec_to_json(spec, working).dump(2) + "\n");
    core::save_jsonl(working, spec.output_dir / "original.jsonl");
  }

  // Stage 1: score the classifier on the pristine texts.
  std::vector<std::string> original_texts;
  original_texts.reserve(working.size());
  for (const core::TextInstance& instance : working.instances()) {
    original_texts.push_back(instance.text);
  }
  const StagePredictions original_stage =
      predict_stage(original_texts, *spec.classifier, spec.threads);

  // Stage 2: adversarial attack.
  attack::AttackConfig attacker = spec.attacker;
  attacker.seed = spec.seed;
  const attack::AttackBatchResult attack_batch =
      attack::attack_dataset(working, attacker, *spec.classifier,
                             spec.threads);

  // Stage 3: defense over every attacked instance that exists.
  std::vector<attack::AttackOutcome> attacked_rows;
  std::vector<std::size_t> attacked_origin;  // index into working set
  for (std::size_t i = 0; i < working.size(); ++i) {
    if (attack_batch.outcomes[i]) {
      attacked_rows.push_back(*attack_batch.outcomes[i]);
      attacked_origin.push_back(i);
    }
  }
  const std::vector<defend::RecoveryResult> recoveries =
      run_defender(spec, attacked_rows);

  // Stage 4: score attacked and recovered texts.
  std::vector<std::string> attacked_texts;
  std::vector<std::string> recovered_texts;
  attacked_texts.reserve(attacked_rows.size());
  recovered_texts.reserve(attacked_rows.size());
  for (std::size_t i = 0; i < attacked_rows.size(); ++i) {
    attacked_texts.push_back(attacked_rows[i].attacked);
    recovered_texts.push_back(recoveries[i].recovered);
  }
  const StagePredictions attacked_stage =
      predict_stage(attacked_texts, *spec.classifier, spec.threads);
  const StagePredictions recovered_stage =
      predict_stage(recovered_texts, *spec.classifier, spec.threads);

  // An instance is complete when every stage produced a result for it.
  std::vector<bool> complete(working.size(), false);
  std::vector<std::string> first_error(working.size());
  for (std::size_t i = 0; i < working.size(); ++i) {
    if (!original_stage.errors[i].empty()) {
      first_error[i] = "original: " + original_stage.errors[i];
    }
  }
  for (const attack::InstanceError& error : attack_batch.errors) {
    for (std::size_t i = 0; i < working.size(); ++i) {
      if (working[i].id == error.instance_id && first_error[i].empty()) {
        first_error[i] = "attack: " + error.message;
      }
    }
  }
  for (std::size_t row = 0; row < attacked_rows.size(); ++row) {
    const std::size_t i = attacked_origin[row];
    if (first_error[i].empty() && !attacked_stage.errors[row].empty()) {
      first_error[i] = "attacked: " + attacked_stage.errors[row];
    }
    if (first_error[i].empty() && !recovered_stage.errors[row].empty()) {
      first_error[i] = "recovered: " + recovered_stage.errors[row];
    }
  }
  for (std::size_t i = 0; i < working.size(); ++i) {
    complete[i] = first_error[i].empty();
  }

  // Persist per-state datasets and predictions before any metric math, so
  // artifacts survive even a completeness abort.
  if (persist) {
    attack::save_outcomes_jsonl(attacked_rows,
                                spec.output_dir / "attacked.jsonl");
    defend::save_recoveries_jsonl(recoveries,
                                  spec.output_dir / "recovered.jsonl");
    std::ofstream out(spec.output_dir / "predictions.jsonl",
                      std::ios::binary | std::ios::trunc);
    if (!out) {
      throw Error("cannot write " +
                  (spec.output_dir / "predictions.jsonl").string());
    }
    std::vector<std::optional<std::size_t>> row_of(working.size());
    for (std::size_t row = 0; row < attacked_origin.size(); ++row) {
      row_of[attacked_origin[row]] = row;
    }
    for (std::size_t i = 0; i < working.size(); ++i) {
      json record{{"id", working[i].id}, {"gold", working[i].label.name}};
      if (original_stage.predictions[i]) {
        record["original"] = prediction_to_json(*original_stage.predictions[i]);
      }
      if (row_of[i]) {
        const std::size_t row = *row_of[i];
        if (attacked_stage.predictions[row]) {
          record["attacked"] =
              prediction_to_json(*attacked_stage.predictions[row]);
        }
        if (recovered_stage.predictions[row]) {
          record["recovered"] =
              prediction_to_json(*recovered_stage.predictions[row]);
        }
      }
      if (!first_error[i].empty()) record["error"] = first_error[i];
      out << record.dump() << '\n';
    }
  }

  ExperimentRow row;
  row.name = spec.name;
  row.dataset = working.name();
  row.classifier_name = spec.classifier->name();
  row.attacker = std::string(attacker_kind_name(spec.attacker.kind));
  row.defender = std::string(defender_kind_name(spec.defender.kind));
  row.variant =
      spec.defender.kind == DefenderKind::kLlm
          ? std::string(defend::prompt_variant_name(
                spec.defender.options.variant))
          : "";
  row.instances = working.size();
  row.completed =
      static_cast<std::size_t>(std::count(complete.begin(), complete.end(),
                                          true));
  row.completeness = working.empty()
                         ? 0.0
                         : static_cast<double>(row.completed) /
                               static_cast<double>(working.size());

  if (row.completed > 0) {
    std::size_t oacc_hits = 0;
    std::size_t aacc_hits = 0;
    std::size_t racc_hits = 0;
    std::vector<attack::AttackOutcome> completed_outcomes;
    std::vector<std::string> originals;
    std::vector<std::string> attacked_list;
    std::vector<std::string> recovered_list;
    for (std::size_t rown = 0; rown < attacked_rows.size(); ++rown) {
      const std::size_t i = attacked_origin[rown];
      if (!complete[i]) continue;
      const int gold = working[i].label.index;
      oacc_hits += original_stage.predictions[i]->label.index == gold;
      aacc_hits += attacked_stage.predictions[rown]->label.index == gold;
      racc_hits += recovered_stage.predictions[rown]->label.index == gold;
      completed_outcomes.push_back(attacked_rows[rown]);
      originals.push_back(attacked_rows[rown].original);
      attacked_list.push_back(attacked_rows[rown].attacked);
      recovered_list.push_back(recoveries[rown].recovered);
    }
    const auto denom = static_cast<double>(row.completed);
    row.oacc = static_cast<double>(oacc_hits) / denom;
    row.aacc = static_cast<double>(aacc_hits) / denom;
    row.racc = static_cast<double>(racc_hits) / denom;
    row.rratio = compute_rratio(row.oacc, row.aacc, row.racc,
                                &row.rratio_note);
    row.mat = attack::median_attack_time(completed_outcomes,
                                         spec.attacker.max_attempts);
    row.add = textops::add_metric(originals, attacked_list);
    row.ard = textops::ard_metric(originals, recovered_list);
  }

  if (persist) {
    write_text_file(spec.output_dir / "row.json",
                    row.to_json().dump(2) + "\n");
  }
  if (row.completeness < spec.completeness_threshold) {
    throw CompletenessError(
        "completeness " + std::to_string(row.completeness) +
        " below threshold " + std::to_string(spec.completeness_threshold) +
        " (" + std::to_string(row.completed) + "/" +
        std::to_string(row.instances) + " instances completed)");
  }
  return row;
}

json SweepPoint::to_json() const {
  return json{{"ratio", ratio},         {"samples", samples},
              {"groups", groups},       {"add_mean", add_mean},
              {"add_std", add_std},     {"ard_mean", ard_mean},
              {"ard_std", ard_std}};
}

std::vector<SweepPoint> run_ratio_sweep(const ExperimentSpec& spec,
                                        const std::vector<double>& ratios) {
  validate(spec);
  if (ratios.empty()) throw ConfigError("ratio sweep needs at least one ratio");
  for (double ratio : ratios) {
    if (ratio < 0.0 || ratio > 1.0) {
      throw ConfigError("sweep ratio must lie in [0, 1]");
    }
  }
  const core::LabeledDataset working = working_set(spec);
  const bool persist = !spec.output_dir.empty();
  if (persist) std::filesystem::create_directories(spec.output_dir);
  if (persist) {
    write_text_file(spec.output_dir / "spec.json",
                    spec_to_json(spec, working).dump(2) + "\n");
  }

  std::vector<double> grid = ratios;
  std::sort(grid.begin(), grid.end());
  std::vector<SweepPoint> points;

  auto recover_texts =
      [&](const std::vector<attack::AttackOutcome>& outcomes) {
        std::vector<std::string> texts;
        texts.reserve(outcomes.size());
        for (const defend::RecoveryResult& result :
             run_defender(spec, outcomes)) {
          texts.push_back(result.recovered);
        }
        return texts;
      };

  if (spec.attacker.kind == attack::AttackerKind::kLlm) {
    // Single pass of LLM perturbations, then bucket by measured EDR.
    std::vector<attack::AttackOutcome> outcomes;
    for (const core::TextInstance& instance : working.instances()) {
      attack::AttackOutcome outcome;
      outcome.instance_id = instance.id;
      outcome.label = instance.label.name;
      outcome.original = instance.text;
      try {
        outcome.attacked =
            attack::llm_disturb(instance.text, *spec.attacker.client,
                                spec.attacker.model,
                                spec.attacker.temperature);
      } catch (const Error&) {
        continue;  // skip instances the attacker could not perturb
      }
      outcome.attempts_used = 1;
      outcome.success = true;
      outcome.edr = textops::edr(outcome.original, outcome.attacked);
      outcomes.push_back(std::move(outcome));
    }
    const auto buckets = attack::bucket_by_edr(outcomes, grid);
    for (const auto& [ratio, bucket] : buckets) {
      if (bucket.empty()) continue;
      std::vector<std::string> originals;
      std::vector<std::string> attacked;
      for (const attack::AttackOutcome& outcome : bucket) {
        originals.push_back(outcome.original);
        attacked.push_back(outcome.attacked);
      }
      points.push_back(sweep_point_from(originals, attacked,
                                        recover_texts(bucket), ratio,
                                        spec.groups, spec.seed,
                                        spec.threads));
    }
  } else {
    for (std::size_t r = 0; r < grid.size(); ++r) {
      const double ratio = grid[r];
      const std::uint64_t ratio_seed = Rng::derive_seed(spec.seed, r);
      attack::ReplacementVocab vocab;
      if (spec.attacker.kind == attack::AttackerKind::kWord) {
        vocab = spec.attacker.vocab.empty()
                    ? attack::ReplacementVocab::from_dataset(working)
                    : attack::ReplacementVocab::from_words(
                          spec.attacker.vocab);
      }
      std::vector<attack::AttackOutcome> outcomes;
      std::vector<std::string> originals;
      std::vector<std::string> attacked;
      for (const core::TextInstance& instance : working.instances()) {
        Rng rng = Rng::for_instance(ratio_seed, instance.id);
        attack::AttackOutcome outcome;
        outcome.instance_id = instance.id;
        outcome.label = instance.label.name;
        outcome.original = instance.text;
        outcome.attacked =
            spec.attacker.kind == attack::AttackerKind::kChar
                ? attack::char_disturb(instance.text, ratio, rng)
                : attack::word_disturb(instance.text, ratio, vocab, rng);
        outcome.attempts_used = 1;
        outcome.success = true;
        outcome.edr = textops::edr(outcome.original, outcome.attacked);
        originals.push_back(outcome.original);
        attacked.push_back(outcome.attacked);
        outcomes.push_back(std::move(outcome));
      }
      points.push_back(sweep_point_from(originals, attacked,
                                        recover_texts(outcomes), ratio,
                                        spec.groups, spec.seed,
                                        spec.threads));
    }
  }

  if (persist) {
    json sweep = json::array();
    for (const SweepPoint& point : points) sweep.push_back(point.to_json());
    write_text_file(spec.output_dir / "sweep.json", sweep.dump(2) + "\n");
  }
  return points;
}

AblationResult run_prompt_ablation(
    const std::vector<ExperimentSpec>& dataset_specs,
    const std::vector<defend::PromptVariant>& variants) {
  if (dataset_specs.empty()) {
    throw ConfigError("prompt ablation needs at least one dataset spec");
  }
  if (variants.empty()) {
    throw ConfigError("prompt ablation needs at least one variant");
  }
  AblationResult result;
  for (const defend::PromptVariant variant : variants) {
    result.variants.emplace_back(defend::prompt_variant_name(variant));
  }
  for (const ExperimentSpec& spec : dataset_specs) {
    result.datasets.push_back(spec.dataset != nullptr ? spec.dataset->name()
                                                      : spec.name);
  }
  for (const defend::PromptVariant variant : variants) {
    for (const ExperimentSpec& base : dataset_specs) {
      ExperimentSpec spec = base;
      spec.defender.kind = DefenderKind::kLlm;
      spec.defender.options.variant = variant;
      spec.name = base.name + "-" +
                  std::string(defend::prompt_variant_name(variant));
      if (!base.output_dir.empty()) {
        spec.output_dir =
            base.output_dir /
            std::string(defend::prompt_variant_name(variant)) /
            (spec.dataset != nullptr ? spec.dataset->name() : base.name);
      }
      result.rows.push_back(run_main_experiment(spec));
    }
  }
  return result;
}

}  // namespace genshin::harness
