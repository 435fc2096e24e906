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

#include "genshin/config.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

#include "genshin/attack.hpp"
#include "genshin/defend.hpp"
#include "genshin/error.hpp"

namespace genshin::config {
namespace {

using nlohmann::json;

[[noreturn]] void bad_field(const std::string& field,
                            const std::string& reason) {
  throw ConfigError("config field \"" + field + "\": " + reason);
}

const json* find(const json& object, const std::string& key) {
  auto it = object.find(key);
  return it == object.end() ? nullptr : &*it;
}

std::string get_string(const json& object, const std::string& key,
                       const std::string& field, std::string fallback) {
  const json* value = find(object, key);
  if (!value) return fallback;
  if (!value->is_string()) bad_field(field, "expected a string");
  return value->get<std::string>();
}

double get_number(const json& object, const std::string& key,
                  const std::string& field, double fallback) {
  const json* value = find(object, key);
  if (!value) return fallback;
  if (!value->is_number()) bad_field(field, "expected a number");
  return value->get<double>();
}

std::int64_t get_integer(const json& object, const std::string& key,
                         const std::string& field, std::int64_t fallback) {
  const json* value = find(object, key);
  if (!value) return fallback;
  if (!value->is_number_integer()) bad_field(field, "expected an integer");
  return value->get<std::int64_t>();
}

// For fields that land in unsigned types; a negative value would otherwise
// wrap around silently.
std::int64_t get_count(const json& object, const std::string& key,
                       const std::string& field, std::int64_t fallback) {
  const std::int64_t value = get_integer(object, key, field, fallback);
  if (value < 0) bad_field(field, "must be non-negative");
  return value;
}

void parse_dataset(const json& object, RunConfig& config) {
  const json* dataset = find(object, "dataset");
  if (!dataset) return;
  if (!dataset->is_object()) bad_field("dataset", "expected an object");
  config.dataset.path = get_string(*dataset, "path", "dataset.path", "");
  if (const json* generated = find(*dataset, "generated")) {
    if (!generated->is_object())
      bad_field("dataset.generated", "expected an object");
    GeneratedDataset synthetic;
    synthetic.n = static_cast<std::size_t>(get_count(
        *generated, "n", "dataset.generated.n",
        static_cast<std::int64_t>(synthetic.n)));
    synthetic.max_len = static_cast<std::size_t>(get_count(
        *generated, "max_len", "dataset.generated.max_len",
        static_cast<std::int64_t>(synthetic.max_len)));
    config.dataset.generated = synthetic;
  }
}

void parse_classifier(const json& object, RunConfig& config) {
  const json* classifier = find(object, "classifier");
  if (!classifier) return;
  if (!classifier->is_object()) bad_field("classifier", "expected an object");
  config.classifier.remote_url =
      get_string(*classifier, "remote_url", "classifier.remote_url", "");
  config.classifier.model_path =
      get_string(*classifier, "model_path", "classifier.model_path", "");
  config.classifier.script_path =
      get_string(*classifier, "script_path", "classifier.script_path", "");
}

void parse_llm(const json& object, RunConfig& config) {
  const json* llm = find(object, "llm");
  if (!llm) return;
  if (!llm->is_object()) bad_field("llm", "expected an object");
  config.llm.base_url = get_string(*llm, "base_url", "llm.base_url", "");
  config.llm.api_key = get_string(*llm, "api_key", "llm.api_key", "");
  config.llm.model = get_string(*llm, "model", "llm.model", "");
  config.llm.mock_script =
      get_string(*llm, "mock_script", "llm.mock_script", "");
  const std::string cache = get_string(*llm, "cache_dir", "llm.cache_dir", "");
  if (!cache.empty()) config.cache_dir = cache;
}

void parse_attacker(const json& object, RunConfig& config) {
  const json* attacker = find(object, "attacker");
  if (!attacker) return;
  if (!attacker->is_object()) bad_field("attacker", "expected an object");
  AttackerSettings& out = config.attacker;
  out.kind = get_string(*attacker, "kind", "attacker.kind", out.kind);
  out.ratio = get_number(*attacker, "ratio", "attacker.ratio", out.ratio);
  out.max_attempts = static_cast<int>(get_integer(
      *attacker, "max_attempts", "attacker.max_attempts", out.max_attempts));
  out.temperature = get_number(*attacker, "temperature",
                               "attacker.temperature", out.temperature);
  out.model = get_string(*attacker, "model", "attacker.model", out.model);
}

void parse_defender(const json& object, RunConfig& config) {
  const json* defender = find(object, "defender");
  if (!defender) return;
  if (!defender->is_object()) bad_field("defender", "expected an object");
  DefenderSettings& out = config.defender;
  out.kind = get_string(*defender, "kind", "defender.kind", out.kind);
  out.variant =
      get_string(*defender, "variant", "defender.variant", out.variant);
  out.temperature = get_number(*defender, "temperature",
                               "defender.temperature", out.temperature);
  out.max_tokens = static_cast<int>(get_integer(
      *defender, "max_tokens", "defender.max_tokens", out.max_tokens));
  out.model = get_string(*defender, "model", "defender.model", out.model);
}

void parse_subset(const json& object, RunConfig& config) {
  const json* subset = find(object, "subset");
  if (!subset) return;
  if (!subset->is_object()) bad_field("subset", "expected an object");
  harness::SubsetParams params;
  params.per_class = static_cast<std::size_t>(
      get_count(*subset, "per_class", "subset.per_class",
                  static_cast<std::int64_t>(params.per_class)));
  params.min_len = static_cast<std::size_t>(
      get_count(*subset, "min_len", "subset.min_len",
                  static_cast<std::int64_t>(params.min_len)));
  params.max_len = static_cast<std::size_t>(
      get_count(*subset, "max_len", "subset.max_len",
                  static_cast<std::int64_t>(params.max_len)));
  config.subset = params;
}

}  // namespace

RunConfig parse_run_config(const json& object) {
  if (!object.is_object()) throw ConfigError("config root must be an object");
  RunConfig config;
  config.name = get_string(object, "name", "name", config.name);
  config.seed = static_cast<std::uint64_t>(get_count(
      object, "seed", "seed", static_cast<std::int64_t>(config.seed)));
  config.groups = static_cast<std::size_t>(get_count(
      object, "groups", "groups", static_cast<std::int64_t>(config.groups)));
  config.threads = static_cast<int>(
      get_integer(object, "threads", "threads", config.threads));
  config.output_dir = get_string(object, "output_dir", "output_dir", "");
  config.completeness_threshold =
      get_number(object, "completeness_threshold", "completeness_threshold",
                 config.completeness_threshold);
  parse_dataset(object, config);
  parse_classifier(object, config);
  parse_llm(object, config);
  parse_attacker(object, config);
  parse_defender(object, config);
  parse_subset(object, config);
  if (const json* ratios = find(object, "ratios")) {
    if (!ratios->is_array()) bad_field("ratios", "expected an array");
    for (const json& value : *ratios) {
      if (!value.is_number()) bad_field("ratios", "expected numbers");
      config.ratios.push_back(value.get<double>());
    }
  }
  return config;
}

RunConfig load_run_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read config file " + path.string());
  json object;
  try {
    object = json::parse(in);
  } catch (const json::exception& error) {
    throw ConfigError("config file " + path.string() + ": " + error.what());
  }
  return parse_run_config(object);
}

void apply_env(RunConfig& config) {
  const llm::LlmEnvConfig env = llm::read_llm_env();
  if (!env.base_url.empty()) config.llm.base_url = env.base_url;
  if (!env.api_key.empty()) config.llm.api_key = env.api_key;
  if (!env.model.empty()) config.llm.model = env.model;
  if (!env.mock_script.empty()) config.llm.mock_script = env.mock_script;
}

void validate(const RunConfig& config) {
  const int sources = (config.dataset.path.empty() ? 0 : 1) +
                      (config.dataset.generated ? 1 : 0);
  if (sources != 1)
    bad_field("dataset", "exactly one of path or generated must be set");
  const int choices = (config.classifier.remote_url.empty() ? 0 : 1) +
                      (config.classifier.model_path.empty() ? 0 : 1) +
                      (config.classifier.script_path.empty() ? 0 : 1);
  if (choices != 1)
    bad_field("classifier",
              "exactly one of remote_url, model_path or script_path "
              "must be set");
  try {
    attack::parse_attacker_kind(config.attacker.kind);
  } catch (const Error& error) {
    bad_field("attacker.kind", error.what());
  }
  try {
    harness::parse_defender_kind(config.defender.kind);
  } catch (const Error& error) {
    bad_field("defender.kind", error.what());
  }
  try {
    defend::parse_prompt_variant(config.defender.variant);
  } catch (const Error& error) {
    bad_field("defender.variant", error.what());
  }
  if (config.attacker.ratio < 0.0 || config.attacker.ratio > 1.0)
    bad_field("attacker.ratio", "must lie in [0, 1]");
  if (config.attacker.max_attempts < 1)
    bad_field("attacker.max_attempts", "must be at least 1");
  if (config.groups < 1) bad_field("groups", "must be at least 1");
  if (config.threads < 0) bad_field("threads", "must be non-negative");
  if (config.completeness_threshold < 0.0 ||
      config.completeness_threshold > 1.0)
    bad_field("completeness_threshold", "must lie in [0, 1]");
  for (double ratio : config.ratios) {
    if (ratio < 0.0 || ratio > 1.0) bad_field("ratios", "must lie in [0, 1]");
  }
}

core::LabeledDataset make_dataset(const RunConfig& config) {
  if (config.dataset.generated) {
    return core::generate_random_dataset(config.dataset.generated->n,
                                         config.dataset.generated->max_len,
                                         core::common_words(), config.seed);
  }
  return core::load_dataset(config.dataset.path);
}

std::unique_ptr<classify::Classifier> make_classifier(
    const RunConfig& config, const core::LabeledDataset& dataset) {
  if (!config.classifier.remote_url.empty()) {
    return std::make_unique<classify::RemoteClassifier>(
        config.classifier.remote_url, dataset.labels());
  }
  if (!config.classifier.model_path.empty()) {
    return std::make_unique<classify::NaiveBayesClassifier>(
        classify::NaiveBayesClassifier::load(config.classifier.model_path));
  }
  return std::make_unique<classify::ScriptedClassifier>(
      classify::ScriptedClassifier::load(config.classifier.script_path));
}

std::unique_ptr<llm::ChatClient> make_client(const RunConfig& config) {
  return llm::make_chat_client(config.llm, config.cache_dir);
}

std::unique_ptr<Experiment> materialize(const RunConfig& config) {
  validate(config);
  auto experiment = std::make_unique<Experiment>();
  experiment->dataset = make_dataset(config);
  experiment->classifier = make_classifier(config, experiment->dataset);

  harness::ExperimentSpec& spec = experiment->spec;
  spec.name = config.name;
  spec.dataset = &experiment->dataset;
  spec.classifier = experiment->classifier.get();
  spec.seed = config.seed;
  spec.groups = config.groups;
  spec.output_dir = config.output_dir;
  spec.threads = config.threads;
  spec.completeness_threshold = config.completeness_threshold;
  spec.subset = config.subset;

  spec.attacker.kind = attack::parse_attacker_kind(config.attacker.kind);
  spec.attacker.ratio = config.attacker.ratio;
  spec.attacker.max_attempts = config.attacker.max_attempts;
  spec.attacker.seed = config.seed;
  spec.attacker.temperature = config.attacker.temperature;
  spec.attacker.model =
      config.attacker.model.empty() ? config.llm.model : config.attacker.model;

  spec.defender.kind = harness::parse_defender_kind(config.defender.kind);
  spec.defender.options.variant =
      defend::parse_prompt_variant(config.defender.variant);
  spec.defender.options.temperature = config.defender.temperature;
  spec.defender.options.max_tokens = config.defender.max_tokens;
  spec.defender.options.model =
      config.defender.model.empty() ? config.llm.model : config.defender.model;

  const bool needs_client =
      spec.attacker.kind == attack::AttackerKind::kLlm ||
      spec.defender.kind == harness::DefenderKind::kLlm;
  if (needs_client) {
    experiment->client = make_client(config);
    spec.client = experiment->client.get();
    spec.attacker.client = experiment->client.get();
  }
  return experiment;
}

}  // namespace genshin::config
