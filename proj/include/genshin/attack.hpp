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

#ifndef GENSHIN_ATTACK_HPP_
#define GENSHIN_ATTACK_HPP_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "genshin/classify.hpp"
#include "genshin/core.hpp"
#include "genshin/llm_client.hpp"
#include "genshin/rng.hpp"

namespace genshin::attack {

enum class AttackerKind { kChar, kWord, kLlm };

std::string_view attacker_kind_name(AttackerKind kind);
AttackerKind parse_attacker_kind(const std::string& name);

// Replacement vocabulary for the word-level attacker.
struct ReplacementVocab {
  std::vector<std::string> words;

  static ReplacementVocab from_words(std::vector<std::string> words);
  static ReplacementVocab from_dataset(const core::LabeledDataset& dataset);

  // Uniform draw excluding `original`; returns nullopt when no distinct
  // word exists.
  std::optional<std::string> draw_excluding(const std::string& original,
                                            Rng& rng) const;
};

struct AttackConfig {
  AttackerKind kind = AttackerKind::kChar;
  double ratio = 0.15;
  int max_attempts = 128;
  std::uint64_t seed = 42;
  // Word attacker: replacement pool; empty = word union of the dataset
  // under attack.
  std::vector<std::string> vocab;
  // LLM attacker.
  llm::ChatClient* client = nullptr;
  std::string model;
  double temperature = 1.0;
};

struct AttackOutcome {
  std::string instance_id;
  std::string label;  // gold label name, carried through the pipeline
  std::string original;
  std::string attacked;
  int attempts_used = 0;
  bool success = false;
  double edr = 0.0;  // edr(original, attacked)
};

// Perturbs each eligible character (not whitespace, not punctuation)
// independently with probability `ratio`, substituting a uniformly random
// printable ASCII character (0x21..0x7E) different from the original.
// Whitespace and punctuation positions survive byte for byte and the
// scalar count is preserved.
std::string char_disturb(std::string_view text, double ratio, Rng& rng);

// Replaces each word independently with probability `ratio` by a
// vocabulary word different from the original. Words are joined with
// single spaces, so inter-word whitespace is normalized.
std::string word_disturb(std::string_view text, double ratio,
                         const ReplacementVocab& vocab, Rng& rng);

// Asks a chat model for a perturbed rewrite. The reply must be a JSON
// object with key "attacked_text"; anything else raises an Error carrying
// the raw reply.
std::string llm_disturb(const std::string& text, llm::ChatClient& client,
                        const std::string& model, double temperature = 1.0);

// Prompt sent by llm_disturb, with <<text>> substituted.
std::string build_attacker_prompt(const std::string& text);

// Repeatedly perturbs the original text (each attempt starts from the
// original, not the previous attempt) until the classifier's label differs
// from its prediction on the original, up to max_attempts. On failure the
// outcome keeps the last attempt's text with success=false.
AttackOutcome adversarial_search(const core::TextInstance& instance,
                                 const AttackConfig& config,
                                 const classify::Classifier& classifier);

struct InstanceError {
  std::string instance_id;
  std::string message;
};

struct AttackBatchResult {
  // Aligned with the dataset; nullopt where the instance errored.
  std::vector<std::optional<AttackOutcome>> outcomes;
  std::vector<InstanceError> errors;

  std::vector<AttackOutcome> completed() const;
};

// Runs adversarial_search over a dataset. The parallel kernel assigns one
// result slot per instance and seeds per-instance generators from
// (config.seed, instance id), so its output matches the serial reference
// exactly.
AttackBatchResult attack_dataset(const core::LabeledDataset& dataset,
                                 const AttackConfig& config,
                                 const classify::Classifier& classifier,
                                 int threads = 0);
AttackBatchResult attack_dataset_serial(const core::LabeledDataset& dataset,
                                        const AttackConfig& config,
                                        const classify::Classifier& classifier);

// Median attack time (MAT): median number of attempts, counting failures
// at the attempt cap. An even count averages the central pair.
double median_attack_time(const std::vector<AttackOutcome>& outcomes,
                          int max_attempts = 128);

// Groups outcomes by the nearest grid ratio to their measured EDR (ties go
// to the lower ratio), keeping at most `cap` outcomes per bucket in input
// order.
std::map<double, std::vector<AttackOutcome>> bucket_by_edr(
    const std::vector<AttackOutcome>& outcomes,
    const std::vector<double>& grid, std::size_t cap = 500);

void save_outcomes_jsonl(const std::vector<AttackOutcome>& outcomes,
                         const std::filesystem::path& path);
std::vector<AttackOutcome> load_outcomes_jsonl(
    const std::filesystem::path& path);

}  // namespace genshin::attack

#endif  // GENSHIN_ATTACK_HPP_
