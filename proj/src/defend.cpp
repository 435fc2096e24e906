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

#include "genshin/defend.hpp"

#include <algorithm>
#include <fstream>

#include <nlohmann/json.hpp>

#include "genshin/error.hpp"
#include "genshin/parallel.hpp"

namespace genshin::defend {
namespace {

using nlohmann::json;

// The recovery instruction is a fixed protocol shared with the services
// this tool is pointed at; its wording (including the "distrubances",
// "intacted" and "orginal_text" quirks) is load-bearing and must not be
// "fixed".
const char kTaskOpening[] =
    "Try to recover the following text to its original state.\n"
    "The text might have encountered distrubances on its tokens (chars, "
    "words or sentences).\n";

const char kDisturbanceExamples[] =
    "For example, there could be adding, deleting, swapping or replacing "
    "characters/words (If it's Chinese then distrubances may replace Chinese "
    "words to spells like: \"\xE5\xBC\x80\xE5\xBF\x83\"->\"\xE5\xBC\x80"
    "xin\"), and synonym replacement.\n";

const char kTaskRules[] =
    "These behaviors can be done by potential malicious attackers, where "
    "they change the text a little (still human-readable), just enough to "
    "bypass discriminative language models like BERT, as their OOD (out of "
    "domain) problem.\n"
    "During the recover process, please keep the meaning of the text "
    "intacted.\n"
    "Don't write any explanations, only the recovered text. No extra "
    "output.\n"
    "If you think nothing is modified in the text (no trace of attackers), "
    "just output the input text.\n";

const char kDemonstrations[] =
    "Here are examples of attacked texts and their recovered states:\n"
    "attacked: \"i feel pr@tty restle$s t0day\" -> recovered: \"i feel "
    "pretty restless today\"\n"
    "attacked: \"plz c0nfirm y0ur acc0unt detauls now\" -> recovered: "
    "\"please confirm your account details now\"\n";

const char kInputSection[] =
    "------\n"
    "The input text I am providing you is:\n"
    "---\n"
    "<<text>>\n"
    "------\n";

const char kJsonInstruction[] =
    "Output your recovered output text as JSON format, a dictionary "
    "containing two elements.\n"
    "like this:\n"
    "{\n"
    "    \"orginal_text\": \".....(xxx)\",\n"
    "    \"recovered_text: \"......(yyy)\"\n"
    "}\n"
    "---\n";

const char kOutputLine[] = "Your output is:";

constexpr char kPlaceholder[] = "<<text>>";

std::string trim(const std::string& text) {
  const auto begin = text.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = text.find_last_not_of(" \t\r\n");
  return text.substr(begin, end - begin + 1);
}

std::string normalize_key(std::string key) {
  key = trim(key);
  while (!key.empty() && key.back() == ':') key.pop_back();
  key = trim(key);
  std::transform(key.begin(), key.end(), key.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return key;
}

bool wants_json(PromptVariant variant) {
  return variant == PromptVariant::kJsonParser ||
         variant == PromptVariant::kFull;
}

// Pulls "recovered_text" out of a JSON-framed reply; nullopt on any
// structural problem.
std::optional<std::string> parse_json_recovery(const std::string& reply) {
  json object;
  try {
    object = llm::extract_json_object(reply);
  } catch (const Error&) {
    return std::nullopt;
  }
  if (!object.is_object()) return std::nullopt;
  for (const auto& [key, value] : object.items()) {
    if (normalize_key(key) == "recovered_text" && value.is_string()) {
      return value.get<std::string>();
    }
  }
  return std::nullopt;
}

}  // namespace

std::string_view prompt_variant_name(PromptVariant variant) {
  switch (variant) {
    case PromptVariant::kBare:
      return "bare";
    case PromptVariant::kFewShot:
      return "fewshot";
    case PromptVariant::kJsonParser:
      return "jsonparser";
    case PromptVariant::kFull:
      return "full";
  }
  return "unknown";
}

PromptVariant parse_prompt_variant(const std::string& name) {
  if (name == "bare") return PromptVariant::kBare;
  if (name == "fewshot") return PromptVariant::kFewShot;
  if (name == "jsonparser") return PromptVariant::kJsonParser;
  if (name == "full") return PromptVariant::kFull;
  throw ConfigError("unknown prompt variant \"" + name +
                    "\" (expected bare, fewshot, jsonparser or full)");
}

std::vector<PromptVariant> all_prompt_variants() {
  return {PromptVariant::kBare, PromptVariant::kFewShot,
          PromptVariant::kJsonParser, PromptVariant::kFull};
}

std::string build_defender_prompt(PromptVariant variant,
                                  const std::string& text) {
  const bool examples =
      variant == PromptVariant::kFewShot || variant == PromptVariant::kFull;
  std::string prompt = kTaskOpening;
  if (examples) prompt += kDisturbanceExamples;
  prompt += kTaskRules;
  if (examples) prompt += kDemonstrations;
  prompt += kInputSection;
  if (wants_json(variant)) prompt += kJsonInstruction;
  prompt += kOutputLine;

  // Fill the single input slot positionally; occurrences of the
  // placeholder inside `text` itself must survive untouched.
  const auto slot = prompt.find(kPlaceholder);
  prompt.replace(slot, sizeof(kPlaceholder) - 1, text);
  return prompt;
}

RecoveryResult recover_text(const std::string& instance_id,
                            const std::string& label,
                            const std::string& attacked,
                            const DefenderOptions& options,
                            llm::ChatClient& client) {
  RecoveryResult result;
  result.instance_id = instance_id;
  result.label = label;
  result.attacked = attacked;

  llm::ChatRequest request;
  request.model = options.model;
  request.user_prompt = build_defender_prompt(options.variant, attacked);
  request.temperature = options.temperature;
  request.max_tokens = options.max_tokens;

  std::string reply;
  bool transport_ok = true;
  try {
    reply = client.complete(request).text;
  } catch (const std::exception&) {
    transport_ok = false;
  }

  std::optional<std::string> recovered;
  if (transport_ok) {
    if (wants_json(options.variant)) {
      recovered = parse_json_recovery(reply);
    } else {
      std::string trimmed = trim(reply);
      if (!trimmed.empty()) recovered = std::move(trimmed);
    }
  }
  if (recovered) {
    result.recovered = std::move(*recovered);
    result.parse_ok = true;
    result.fallback_used = false;
  } else {
    // Defenders must never abort the pipeline: hand back the attacked text.
    result.recovered = attacked;
    result.parse_ok = false;
    result.fallback_used = true;
  }
  return result;
}

namespace {

std::vector<RecoveryResult> recover_impl(
    const std::vector<attack::AttackOutcome>& outcomes,
    const DefenderOptions& options, llm::ChatClient& client, int threads,
    bool use_parallel) {
  std::vector<RecoveryResult> results(outcomes.size());
  const auto n = static_cast<std::int64_t>(outcomes.size());
  const int nthreads =
      use_parallel ? effective_threads(threads, client.max_inflight()) : 1;
#pragma omp parallel for schedule(dynamic) num_threads(nthreads) if (use_parallel)
  for (std::int64_t i = 0; i < n; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    results[idx] =
        recover_text(outcomes[idx].instance_id, outcomes[idx].label,
                     outcomes[idx].attacked, options, client);
  }
  return results;
}

}  // namespace

std::vector<RecoveryResult> recover_dataset(
    const std::vector<attack::AttackOutcome>& outcomes,
    const DefenderOptions& options, llm::ChatClient& client, int threads) {
  return recover_impl(outcomes, options, client, threads, true);
}

std::vector<RecoveryResult> recover_dataset_serial(
    const std::vector<attack::AttackOutcome>& outcomes,
    const DefenderOptions& options, llm::ChatClient& client) {
  return recover_impl(outcomes, options, client, 1, false);
}

void save_recoveries_jsonl(const std::vector<RecoveryResult>& results,
                           const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  for (const RecoveryResult& result : results) {
    const json record{{"id", result.instance_id},
                      {"label", result.label},
                      {"text", result.recovered},
                      {"attacked", result.attacked},
                      {"parse_ok", result.parse_ok},
                      {"fallback_used", result.fallback_used}};
    out << record.dump() << '\n';
  }
}

std::vector<RecoveryResult> load_recoveries_jsonl(
    const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::vector<RecoveryResult> results;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      const json record = json::parse(line);
      RecoveryResult result;
      result.instance_id = record.at("id").get<std::string>();
      result.label = record.at("label").get<std::string>();
      result.recovered = record.at("text").get<std::string>();
      result.attacked = record.at("attacked").get<std::string>();
      result.parse_ok = record.at("parse_ok").get<bool>();
      result.fallback_used = record.at("fallback_used").get<bool>();
      results.push_back(std::move(result));
    } catch (const json::exception& e) {
      throw Error(path.string() + ":" + std::to_string(line_number) + ": " +
                  e.what());
    }
  }
  return results;
}

}  // namespace genshin::defend
