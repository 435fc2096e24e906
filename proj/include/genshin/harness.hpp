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

#ifndef GENSHIN_HARNESS_HPP_
#define GENSHIN_HARNESS_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "genshin/attack.hpp"
#include "genshin/classify.hpp"
#include "genshin/core.hpp"
#include "genshin/defend.hpp"
#include "genshin/error.hpp"
#include "genshin/llm_client.hpp"

namespace genshin::harness {

// Raised when too few instances complete all pipeline stages. Artifacts
// are persisted before this is thrown.
class CompletenessError : public Error {
 public:
  using Error::Error;
};

struct SubsetParams {
  std::size_t per_class = 128;
  std::size_t min_len = 50;
  std::size_t max_len = 150;  // 0 = unbounded
};

// What plays the defender slot: the LLM recovery prompt, the identity map
// (lower bound: recovered = attacked) or the oracle (upper bound:
// recovered = original).
enum class DefenderKind { kLlm, kIdentity, kOracle };

std::string_view defender_kind_name(DefenderKind kind);
DefenderKind parse_defender_kind(const std::string& name);

struct DefenderSpec {
  DefenderKind kind = DefenderKind::kLlm;
  defend::DefenderOptions options;
};

struct ExperimentSpec {
  std::string name = "experiment";
  const core::LabeledDataset* dataset = nullptr;
  const classify::Classifier* classifier = nullptr;
  attack::AttackConfig attacker;
  DefenderSpec defender;
  // Chat backend for the LLM defender (the attacker carries its own client
  // pointer in attacker.client).
  llm::ChatClient* client = nullptr;
  std::optional<SubsetParams> subset;
  std::uint64_t seed = 42;
  std::size_t groups = 5;  // sweep group count for std-dev estimates
  std::filesystem::path output_dir;  // empty = keep everything in memory
  int threads = 0;
  double completeness_threshold = 0.95;
};

struct ExperimentRow {
  std::string name;
  std::string dataset;
  std::string classifier_name;
  std::string attacker;
  std::string defender;
  std::string variant;
  std::size_t instances = 0;  // working-set size
  std::size_t completed = 0;  // instances that finished every stage
  double completeness = 1.0;
  double oacc = 0.0;
  double aacc = 0.0;
  double racc = 0.0;
  std::optional<double> rratio;
  std::string rratio_note;  // set when rratio is undefined
  double mat = 0.0;
  double add = 0.0;
  double ard = 0.0;

  nlohmann::json to_json() const;
  static ExperimentRow from_json(const nlohmann::json& object);
};

// Recovery ratio (RAcc - AAcc) / (OAcc - AAcc), deliberately unclamped so
// over-recovery (> 1) and harmful recovery (< 0) stay visible. Undefined
// when OAcc == AAcc; the optional is empty and `note` explains why.
std::optional<double> compute_rratio(double oacc, double aacc, double racc,
                                     std::string* note = nullptr);

// Runs the original -> attacked -> recovered cascade as sequential
// barriers, scoring the classifier on the same instance set in each state.
// Per-instance failures are recorded, not fatal; the row covers instances
// that completed every stage. When output_dir is set, persists spec.json,
// original/attacked/recovered.jsonl, predictions.jsonl and row.json.
// Throws CompletenessError (after persisting) when the completed fraction
// falls below the threshold.
ExperimentRow run_main_experiment(const ExperimentSpec& spec);

struct SweepPoint {
  double ratio = 0.0;
  std::size_t samples = 0;
  std::size_t groups = 0;
  double add_mean = 0.0;
  double add_std = 0.0;
  double ard_mean = 0.0;
  double ard_std = 0.0;

  nlohmann::json to_json() const;
};

// Disturbance-ratio sweep without adversarial search: each instance is
// perturbed once per ratio and recovered, and ADD/ARD are averaged over
// `groups` disjoint instance groups (std dev across groups). The LLM
// attacker ignores the requested ratios' strengths; instead its outcomes
// are bucketed to the nearest grid ratio by measured EDR (at most 500 per
// bucket) and empty buckets are dropped. Persists sweep.json when
// output_dir is set.
std::vector<SweepPoint> run_ratio_sweep(const ExperimentSpec& spec,
                                        const std::vector<double>& ratios);

struct AblationResult {
  std::vector<std::string> variants;  // row order
  std::vector<std::string> datasets;  // column order
  // variant-major: rows[v * datasets.size() + d]
  std::vector<ExperimentRow> rows;
};

// Repeats the main experiment for every (variant, dataset) pair. Each
// dataset spec supplies dataset, classifier, attacker and defender model;
// the defender variant is overridden per row.
AblationResult run_prompt_ablation(
    const std::vector<ExperimentSpec>& dataset_specs,
    const std::vector<defend::PromptVariant>& variants);

}  // namespace genshin::harness

#endif  // GENSHIN_HARNESS_HPP_
