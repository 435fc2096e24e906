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

#include "genshin/attack.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "genshin/error.hpp"
#include "genshin/parallel.hpp"
#include "genshin/textops.hpp"
#include "genshin/utf8.hpp"

namespace genshin::attack {
namespace {

using nlohmann::json;

constexpr char32_t kPrintableLo = 0x21;
constexpr char32_t kPrintableHi = 0x7E;

const char kAttackerPromptTemplate[] =
    R"(You are stress-testing a text classifier. Rewrite the text below with small perturbations: typos, character substitutions (letters to visually similar symbols or digits), or replacing a few words with near-synonyms. Keep it human-readable and keep its meaning.
Reply with a JSON object only, no other output: {"attacked_text": "..."}
The text is:
---
<<text>>
---)";

void validate(const AttackConfig& config) {
  if (config.ratio < 0.0 || config.ratio > 1.0) {
    throw ConfigError("attack ratio must lie in [0, 1]");
  }
  if (config.max_attempts < 1) {
    throw ConfigError("attack max_attempts must be at least 1");
  }
  if (config.kind == AttackerKind::kLlm && config.client == nullptr) {
    throw ConfigError("llm attacker requires a chat client");
  }
}

}  // namespace

std::string_view attacker_kind_name(AttackerKind kind) {
  switch (kind) {
    case AttackerKind::kChar:
      return "char";
    case AttackerKind::kWord:
      return "word";
    case AttackerKind::kLlm:
      return "llm";
  }
  return "unknown";
}

AttackerKind parse_attacker_kind(const std::string& name) {
  if (name == "char") return AttackerKind::kChar;
  if (name == "word") return AttackerKind::kWord;
  if (name == "llm") return AttackerKind::kLlm;
  throw ConfigError("unknown attacker kind \"" + name +
                    "\" (expected char, word or llm)");
}

ReplacementVocab ReplacementVocab::from_words(std::vector<std::string> words) {
  ReplacementVocab vocab;
  std::unordered_map<std::string, std::size_t> seen;
  for (std::string& word : words) {
    if (word.empty()) continue;
    if (seen.emplace(word, vocab.words.size()).second) {
      vocab.words.push_back(std::move(word));
    }
  }
  return vocab;
}

ReplacementVocab ReplacementVocab::from_dataset(
    const core::LabeledDataset& dataset) {
  return from_words(dataset.word_vocabulary());
}

std::optional<std::string> ReplacementVocab::draw_excluding(
    const std::string& original, Rng& rng) const {
  const auto it = std::find(words.begin(), words.end(), original);
  const bool contains =
      it != words.end();
  const std::size_t pool = words.size() - (contains ? 1 : 0);
  if (pool == 0) return std::nullopt;
  std::size_t pick = rng.index(pool);
  if (contains &&
      pick >= static_cast<std::size_t>(std::distance(words.begin(), it))) {
    ++pick;  // skip the original's slot
  }
  return words[pick];
}

std::string char_disturb(std::string_view text, double ratio, Rng& rng) {
  std::u32string scalars = utf8::decode(text);
  for (char32_t& scalar : scalars) {
    if (textops::is_whitespace(scalar) || textops::is_punctuation(scalar)) {
      continue;
    }
    if (!rng.bernoulli(ratio)) continue;
    const bool in_pool = scalar >= kPrintableLo && scalar <= kPrintableHi;
    const std::uint64_t pool_size =
        kPrintableHi - kPrintableLo + 1 - (in_pool ? 1 : 0);
    char32_t pick =
        kPrintableLo + static_cast<char32_t>(rng.below(pool_size));
    if (in_pool && pick >= scalar) ++pick;  // skip the original
    scalar = pick;
  }
  return utf8::encode(scalars);
}

std::string word_disturb(std::string_view text, double ratio,
                         const ReplacementVocab& vocab, Rng& rng) {
  auto tokens = textops::tokenize(text, textops::Granularity::kWord).tokens;
  std::string result;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    std::string word = tokens[i];
    if (rng.bernoulli(ratio)) {
      if (auto replacement = vocab.draw_excluding(word, rng)) {
        word = *replacement;
      }
    }
    if (i > 0) result.push_back(' ');
    result += word;
  }
  return result;
}

std::string build_attacker_prompt(const std::string& text) {
  std::string prompt = kAttackerPromptTemplate;
  const auto slot = prompt.find("<<text>>");
  prompt.replace(slot, 8, text);
  return prompt;
}

std::string llm_disturb(const std::string& text, llm::ChatClient& client,
                        const std::string& model, double temperature) {
  llm::ChatRequest request;
  request.model = model;
  request.user_prompt = build_attacker_prompt(text);
  request.temperature = temperature;
  const llm::ChatResponse response = client.complete(request);
  json object;
  try {
    object = llm::extract_json_object(response.text);
  } catch (const Error& e) {
    throw Error("unparsable attacker reply: " + std::string(e.what()));
  }
  if (!object.contains("attacked_text") ||
      !object["attacked_text"].is_string()) {
    throw Error("unparsable attacker reply: missing string \"attacked_text\""
                " in: " + response.text.substr(0, 200));
  }
  return object["attacked_text"].get<std::string>();
}

AttackOutcome adversarial_search(const core::TextInstance& instance,
                                 const AttackConfig& config,
                                 const classify::Classifier& classifier) {
  validate(config);
  AttackOutcome outcome;
  outcome.instance_id = instance.id;
  outcome.label = instance.label.name;
  outcome.original = instance.text;
  outcome.attacked = instance.text;

  const ReplacementVocab vocab =
      config.kind == AttackerKind::kWord
          ? ReplacementVocab::from_words(config.vocab)
          : ReplacementVocab{};

  int base_label = 0;
  try {
    base_label = classifier.predict(instance.text).label.index;
  } catch (const std::exception& e) {
    throw Error("instance \"" + instance.id + "\": " + e.what());
  }

  Rng rng = Rng::for_instance(config.seed, instance.id);
  std::string last_attempt = instance.text;
  for (int attempt = 1; attempt <= config.max_attempts; ++attempt) {
    if (interrupted()) break;
    outcome.attempts_used = attempt;
    std::string perturbed;
    try {
      switch (config.kind) {
        case AttackerKind::kChar:
          perturbed = char_disturb(instance.text, config.ratio, rng);
          break;
        case AttackerKind::kWord:
          perturbed = word_disturb(instance.text, config.ratio, vocab, rng);
          break;
        case AttackerKind::kLlm:
          perturbed = llm_disturb(instance.text, *config.client, config.model,
                                  config.temperature);
          break;
      }
    } catch (const Error&) {
      // A failed perturbation (for example an unparsable attacker reply)
      // burns an attempt but does not abort the search.
      continue;
    }
    last_attempt = perturbed;
    int label = 0;
    try {
      label = classifier.predict(perturbed).label.index;
    } catch (const std::exception& e) {
      throw Error("instance \"" + instance.id + "\": " + e.what());
    }
    if (label != base_label) {
      outcome.success = true;
      outcome.attacked = std::move(perturbed);
      outcome.edr = textops::edr(outcome.original, outcome.attacked);
      return outcome;
    }
  }
  outcome.attempts_used = config.max_attempts;
  outcome.success = false;
  outcome.attacked = std::move(last_attempt);
  outcome.edr = textops::edr(outcome.original, outcome.attacked);
  return outcome;
}

std::vector<AttackOutcome> AttackBatchResult::completed() const {
  std::vector<AttackOutcome> done;
  done.reserve(outcomes.size());
  for (const auto& outcome : outcomes) {
    if (outcome) done.push_back(*outcome);
  }
  return done;
}

namespace {

AttackBatchResult attack_dataset_impl(const core::LabeledDataset& dataset,
                                      const AttackConfig& config,
                                      const classify::Classifier& classifier,
                                      int threads, bool use_parallel) {
  validate(config);
  AttackConfig resolved = config;
  if (config.kind == AttackerKind::kWord && config.vocab.empty()) {
    resolved.vocab = dataset.word_vocabulary();
  }

  AttackBatchResult result;
  result.outcomes.resize(dataset.size());
  std::vector<std::string> errors(dataset.size());
  const auto n = static_cast<std::int64_t>(dataset.size());
  // Combine backend bounds where 0 means unbounded.
  auto combine = [](int a, int b) {
    if (a == 0) return b;
    if (b == 0) return a;
    return std::min(a, b);
  };
  const int backend_limit =
      config.kind == AttackerKind::kLlm
          ? combine(classifier.concurrency_limit(),
                    config.client->max_inflight())
          : classifier.concurrency_limit();
  const int nthreads =
      use_parallel ? effective_threads(threads, backend_limit) : 1;
#pragma omp parallel for schedule(dynamic) num_threads(nthreads) if (use_parallel)
  for (std::int64_t i = 0; i < n; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    try {
      result.outcomes[idx] =
          adversarial_search(dataset[idx], resolved, classifier);
    } catch (const std::exception& e) {
      errors[idx] = e.what();
    }
  }
  for (std::size_t i = 0; i < errors.size(); ++i) {
    if (!errors[i].empty()) {
      result.errors.push_back({dataset[i].id, errors[i]});
    }
  }
  return result;
}

}  // namespace

AttackBatchResult attack_dataset(const core::LabeledDataset& dataset,
                                 const AttackConfig& config,
                                 const classify::Classifier& classifier,
                                 int threads) {
  return attack_dataset_impl(dataset, config, classifier, threads, true);
}

AttackBatchResult attack_dataset_serial(const core::LabeledDataset& dataset,
                                        const AttackConfig& config,
                                        const classify::Classifier& classifier) {
  return attack_dataset_impl(dataset, config, classifier, 1, false);
}

double median_attack_time(const std::vector<AttackOutcome>& outcomes,
                          int max_attempts) {
  if (outcomes.empty()) {
    throw Error("median_attack_time: no outcomes");
  }
  std::vector<double> attempts;
  attempts.reserve(outcomes.size());
  for (const AttackOutcome& outcome : outcomes) {
    attempts.push_back(outcome.success
                           ? static_cast<double>(outcome.attempts_used)
                           : static_cast<double>(max_attempts));
  }
  std::sort(attempts.begin(), attempts.end());
  const std::size_t mid = attempts.size() / 2;
  if (attempts.size() % 2 == 1) return attempts[mid];
  return (attempts[mid - 1] + attempts[mid]) / 2.0;
}

std::map<double, std::vector<AttackOutcome>> bucket_by_edr(
    const std::vector<AttackOutcome>& outcomes,
    const std::vector<double>& grid, std::size_t cap) {
  if (grid.empty()) throw Error("bucket_by_edr: empty grid");
  std::vector<double> sorted_grid = grid;
  std::sort(sorted_grid.begin(), sorted_grid.end());
  std::map<double, std::vector<AttackOutcome>> buckets;
  for (double ratio : sorted_grid) buckets[ratio];
  for (const AttackOutcome& outcome : outcomes) {
    double best = sorted_grid.front();
    double best_distance = std::abs(outcome.edr - best);
    for (double ratio : sorted_grid) {
      const double distance = std::abs(outcome.edr - ratio);
      if (distance < best_distance) {  // ties keep the lower ratio
        best = ratio;
        best_distance = distance;
      }
    }
    auto& bucket = buckets[best];
    if (bucket.size() < cap) bucket.push_back(outcome);
  }
  return buckets;
}

void save_outcomes_jsonl(const std::vector<AttackOutcome>& outcomes,
                         const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  for (const AttackOutcome& outcome : outcomes) {
    const json record{{"id", outcome.instance_id},
                      {"label", outcome.label},
                      {"text", outcome.attacked},
                      {"original", outcome.original},
                      {"attempts", outcome.attempts_used},
                      {"success", outcome.success},
                      {"edr", outcome.edr}};
    out << record.dump() << '\n';
  }
}

std::vector<AttackOutcome> load_outcomes_jsonl(
    const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::vector<AttackOutcome> outcomes;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json record;
    try {
      record = json::parse(line);
      AttackOutcome outcome;
      outcome.instance_id = record.at("id").get<std::string>();
      outcome.label = record.at("label").get<std::string>();
      outcome.attacked = record.at("text").get<std::string>();
      outcome.original = record.at("original").get<std::string>();
      outcome.attempts_used = record.at("attempts").get<int>();
      outcome.success = record.at("success").get<bool>();
      outcome.edr = record.at("edr").get<double>();
      outcomes.push_back(std::move(outcome));
    } catch (const json::exception& e) {
      throw Error(path.string() + ":" + std::to_string(line_number) + ": " +
                  e.what());
    }
  }
  return outcomes;
}

}  // namespace genshin::attack
