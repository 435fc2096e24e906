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

#ifndef GENSHIN_DEFEND_HPP_
#define GENSHIN_DEFEND_HPP_

#include <filesystem>
#include <string>
#include <vector>

#include "genshin/attack.hpp"
#include "genshin/llm_client.hpp"

namespace genshin::defend {

// Recovery prompt variants. Bare carries just the task description and the
// input; FewShot adds the disturbance explanation and two demonstration
// pairs; JsonParser asks for a JSON-framed answer; Full combines both.
enum class PromptVariant { kBare, kFewShot, kJsonParser, kFull };

std::string_view prompt_variant_name(PromptVariant variant);
PromptVariant parse_prompt_variant(const std::string& name);
std::vector<PromptVariant> all_prompt_variants();

// Renders the recovery prompt. The template holds exactly one "<<text>>"
// slot which is filled positionally; a literal "<<text>>" inside the input
// text is left alone.
std::string build_defender_prompt(PromptVariant variant,
                                  const std::string& text);

struct DefenderOptions {
  PromptVariant variant = PromptVariant::kFull;
  std::string model;
  double temperature = 0.0;
  int max_tokens = 1024;
};

struct RecoveryResult {
  std::string instance_id;
  std::string label;  // gold label name, carried through the pipeline
  std::string attacked;
  std::string recovered;
  bool parse_ok = true;
  bool fallback_used = false;
};

// Sends one recovery request and parses the reply. Bare/FewShot treat the
// trimmed reply as the recovery; JsonParser/Full extract "recovered_text"
// from the first JSON object (keys matched case-insensitively, tolerating
// trailing colons as in the schema's "recovered_text:" quirk). Any
// parse or transport failure falls back to the attacked text with
// parse_ok=false and fallback_used=true; the pipeline never aborts here.
RecoveryResult recover_text(const std::string& instance_id,
                            const std::string& label,
                            const std::string& attacked,
                            const DefenderOptions& options,
                            llm::ChatClient& client);

// Maps attack outcomes to recoveries. Parallel kernel with one slot per
// outcome; bounded by the client's max_inflight().
std::vector<RecoveryResult> recover_dataset(
    const std::vector<attack::AttackOutcome>& outcomes,
    const DefenderOptions& options, llm::ChatClient& client, int threads = 0);
std::vector<RecoveryResult> recover_dataset_serial(
    const std::vector<attack::AttackOutcome>& outcomes,
    const DefenderOptions& options, llm::ChatClient& client);

void save_recoveries_jsonl(const std::vector<RecoveryResult>& results,
                           const std::filesystem::path& path);
std::vector<RecoveryResult> load_recoveries_jsonl(
    const std::filesystem::path& path);

}  // namespace genshin::defend

#endif  // GENSHIN_DEFEND_HPP_
