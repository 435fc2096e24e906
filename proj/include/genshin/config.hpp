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

#ifndef GENSHIN_CONFIG_HPP_
#define GENSHIN_CONFIG_HPP_

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "genshin/classify.hpp"
#include "genshin/core.hpp"
#include "genshin/harness.hpp"
#include "genshin/llm_client.hpp"

namespace genshin::config {

struct GeneratedDataset {
  std::size_t n = 64;
  std::size_t max_len = 120;
};

// Either a file on disk or a synthetic dataset; exactly one is set.
struct DatasetRef {
  std::filesystem::path path;
  std::optional<GeneratedDataset> generated;
};

// Exactly one of the three must be set.
struct ClassifierChoice {
  std::string remote_url;                // remote HTTP service
  std::filesystem::path model_path;      // stored naive Bayes model
  std::filesystem::path script_path;     // scripted mock rules
};

struct AttackerSettings {
  std::string kind = "char";  // char | word | llm
  double ratio = 0.15;
  int max_attempts = 128;
  double temperature = 1.0;
  std::string model;  // empty = llm.model
};

struct DefenderSettings {
  std::string kind = "llm";  // llm | identity | oracle
  std::string variant = "full";
  double temperature = 0.0;
  int max_tokens = 1024;
  std::string model;  // empty = llm.model
};

struct RunConfig {
  std::string name = "experiment";
  DatasetRef dataset;
  ClassifierChoice classifier;
  llm::LlmEnvConfig llm;
  std::optional<std::filesystem::path> cache_dir;
  AttackerSettings attacker;
  DefenderSettings defender;
  std::optional<harness::SubsetParams> subset;
  std::uint64_t seed = 42;
  std::size_t groups = 5;
  std::filesystem::path output_dir;
  int threads = 0;
  double completeness_threshold = 0.95;
  std::vector<double> ratios;  // sweep grid
};

// Parses the JSON object; a bad or missing field raises ConfigError naming
// it ("config field \"attacker.ratio\": ...").
RunConfig parse_run_config(const nlohmann::json& object);
RunConfig load_run_config(const std::filesystem::path& path);

// Overlays GENSHIN_LLM_* variables on the file values. Flags are applied
// by the caller afterwards, so precedence is flags > environment > file.
void apply_env(RunConfig& config);

// Structural checks: exactly one dataset source, exactly one classifier
// choice, known attacker/defender names, ranges. Raises ConfigError naming
// the offending field.
void validate(const RunConfig& config);

core::LabeledDataset make_dataset(const RunConfig& config);
std::unique_ptr<classify::Classifier> make_classifier(
    const RunConfig& config, const core::LabeledDataset& dataset);
std::unique_ptr<llm::ChatClient> make_client(const RunConfig& config);

// Owns every object an experiment run needs; spec points into the bundle.
struct Experiment {
  core::LabeledDataset dataset;
  std::unique_ptr<classify::Classifier> classifier;
  std::unique_ptr<llm::ChatClient> client;
  harness::ExperimentSpec spec;
};

std::unique_ptr<Experiment> materialize(const RunConfig& config);

}  // namespace genshin::config

#endif  // GENSHIN_CONFIG_HPP_
