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

#include <doctest.h>

#include <string>
#include <vector>

#include "genshin/attack.hpp"
#include "genshin/defend.hpp"
#include "genshin/error.hpp"
#include "genshin/llm_client.hpp"
#include "test_helpers.hpp"

namespace {

using genshin::ConfigError;
using genshin::llm::MockChatClient;
using namespace genshin::defend;

std::size_t count_occurrences(const std::string& haystack,
                              const std::string& needle) {
  std::size_t count = 0;
  for (auto at = haystack.find(needle); at != std::string::npos;
       at = haystack.find(needle, at + needle.size())) {
    ++count;
  }
  return count;
}

TEST_CASE("variant names round-trip") {
  CHECK(prompt_variant_name(PromptVariant::kBare) == "bare");
  CHECK(prompt_variant_name(PromptVariant::kFewShot) == "fewshot");
  CHECK(prompt_variant_name(PromptVariant::kJsonParser) == "jsonparser");
  CHECK(prompt_variant_name(PromptVariant::kFull) == "full");
  for (PromptVariant variant : all_prompt_variants()) {
    CHECK(parse_prompt_variant(std::string(prompt_variant_name(variant))) ==
          variant);
  }
  CHECK(all_prompt_variants().size() == 4);
  CHECK_THROWS_AS(parse_prompt_variant("terse"), ConfigError);
}

TEST_CASE("the full prompt carries the whole protocol text") {
  const std::string prompt =
      build_defender_prompt(PromptVariant::kFull, "n0isy 1nput");
  CHECK(prompt.find("Try to recover the following text to its original "
                    "state") != std::string::npos);
  // The protocol spells these words exactly this way; they are load-bearing
  // for byte-stable prompts.
  CHECK(prompt.find("distrubances") != std::string::npos);
  CHECK(prompt.find("intacted") != std::string::npos);
  CHECK(prompt.find("\"orginal_text\": \".....(xxx)\"") != std::string::npos);
  CHECK(prompt.find("\"recovered_text: \"......(yyy)\"") !=
        std::string::npos);
  CHECK(prompt.find("i feel pr@tty restle$s t0day") != std::string::npos);
  CHECK(prompt.find("i feel pretty restless today") != std::string::npos);
  CHECK(prompt.find("The input text I am providing you is:") !=
        std::string::npos);
  CHECK(prompt.find("n0isy 1nput") != std::string::npos);
  CHECK(prompt.find("Your output is:") != std::string::npos);
}

TEST_CASE("variants add and drop sections as advertised") {
  const std::string bare =
      build_defender_prompt(PromptVariant::kBare, "probe");
  CHECK(bare.find("Try to recover") != std::string::npos);
  CHECK(bare.find("probe") != std::string::npos);
  CHECK(bare.find("orginal_text") == std::string::npos);
  CHECK(bare.find("pr@tty") == std::string::npos);

  const std::string fewshot =
      build_defender_prompt(PromptVariant::kFewShot, "probe");
  CHECK(fewshot.find("pr@tty") != std::string::npos);
  CHECK(fewshot.find("orginal_text") == std::string::npos);

  const std::string jsonparser =
      build_defender_prompt(PromptVariant::kJsonParser, "probe");
  CHECK(jsonparser.find("orginal_text") != std::string::npos);
  CHECK(jsonparser.find("pr@tty") == std::string::npos);
}

TEST_CASE("the template has exactly one input slot") {
  for (PromptVariant variant : all_prompt_variants()) {
    const std::string rendered =
        build_defender_prompt(variant, "DISTINCTIVE-PROBE");
    CHECK(count_occurrences(rendered, "DISTINCTIVE-PROBE") == 1);
    CHECK(rendered.find("<<text>>") == std::string::npos);

    // A literal "<<text>>" in the input is data, not a second slot.
    const std::string hostile =
        build_defender_prompt(variant, "payload <<text>> payload");
    CHECK(count_occurrences(hostile, "<<text>>") == 1);
    CHECK(count_occurrences(hostile, "payload <<text>> payload") == 1);
  }
}

TEST_CASE("recover_text parses JSON-framed replies") {
  MockChatClient mock(
      {{"pr@tty", "{\"orginal_text\": \"i feel pr@tty restle$s t0day\", "
                  "\"recovered_text\": \"i feel pretty restless today\"}",
        "", ""}});
  DefenderOptions options;
  options.model = "m";
  const RecoveryResult result = recover_text(
      "id-1", "POS", "i feel pr@tty restle$s t0day", options, mock);
  CHECK(result.recovered == "i feel pretty restless today");
  CHECK(result.parse_ok);
  CHECK_FALSE(result.fallback_used);
  CHECK(result.instance_id == "id-1");
  CHECK(result.label == "POS");
  CHECK(result.attacked == "i feel pr@tty restle$s t0day");
}

TEST_CASE("the parser tolerates the schema's key quirks") {
  // Trailing colon inside the key, as printed in the schema, plus odd case.
  MockChatClient mock(
      {{"", "{\"Recovered_Text: \": \"fixed text\"}", "", ""}});
  DefenderOptions options;
  const RecoveryResult result =
      recover_text("id", "A", "br0ken text", options, mock);
  CHECK(result.recovered == "fixed text");
  CHECK(result.parse_ok);
}

TEST_CASE("bare and fewshot replies are taken verbatim, trimmed") {
  MockChatClient mock({{"", "  recovered line \n", "", ""}});
  DefenderOptions options;
  options.variant = PromptVariant::kBare;
  CHECK(recover_text("id", "A", "x", options, mock).recovered ==
        "recovered line");
  options.variant = PromptVariant::kFewShot;
  CHECK(recover_text("id", "A", "x", options, mock).recovered ==
        "recovered line");
}

TEST_CASE("parse failures fall back to the attacked text") {
  MockChatClient mock({{"", "I cannot help with that.", "", ""}});
  DefenderOptions options;  // Full wants JSON
  const RecoveryResult result =
      recover_text("id", "A", "att@cked", options, mock);
  CHECK(result.recovered == "att@cked");
  CHECK_FALSE(result.parse_ok);
  CHECK(result.fallback_used);
}

TEST_CASE("transport failures fall back instead of aborting") {
  MockChatClient mock({{"never-matches", "unused", "", ""}});
  DefenderOptions options;
  const RecoveryResult result =
      recover_text("id", "A", "att@cked", options, mock);
  CHECK(result.recovered == "att@cked");
  CHECK_FALSE(result.parse_ok);
  CHECK(result.fallback_used);
}

std::vector<genshin::attack::AttackOutcome> sample_outcomes(int n) {
  std::vector<genshin::attack::AttackOutcome> outcomes;
  for (int i = 0; i < n; ++i) {
    genshin::attack::AttackOutcome outcome;
    outcome.instance_id = "o" + std::to_string(i);
    outcome.label = i % 2 == 0 ? "POS" : "NEG";
    outcome.original = "original " + std::to_string(i);
    outcome.attacked = "att@cked " + std::to_string(i);
    outcome.success = true;
    outcomes.push_back(outcome);
  }
  return outcomes;
}

// Echo rule returning the prompt's input section as the recovery, which
// makes the mock an identity defender.
MockChatClient echo_defender() {
  return MockChatClient(
      {{"", "{\"recovered_text\": \"<<echo_json>>\"}",
        "The input text I am providing you is:\n---\n", "\n------"}});
}

TEST_CASE("recover_dataset issues exactly one call per text") {
  const auto outcomes = sample_outcomes(6);
  MockChatClient mock = echo_defender();
  DefenderOptions options;
  const std::vector<RecoveryResult> results =
      recover_dataset(outcomes, options, mock);
  REQUIRE(results.size() == 6);
  CHECK(mock.calls() == 6);
  for (std::size_t i = 0; i < results.size(); ++i) {
    CHECK(results[i].instance_id == outcomes[i].instance_id);
    CHECK(results[i].label == outcomes[i].label);
    CHECK(results[i].recovered == outcomes[i].attacked);  // identity echo
    CHECK(results[i].parse_ok);
  }
}

TEST_CASE("recover_dataset matches its serial reference") {
  const auto outcomes = sample_outcomes(10);
  MockChatClient serial_mock = echo_defender();
  MockChatClient parallel_mock = echo_defender();
  DefenderOptions options;
  const auto serial = recover_dataset_serial(outcomes, options, serial_mock);
  const auto parallel = recover_dataset(outcomes, options, parallel_mock, 4);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].instance_id == parallel[i].instance_id);
    CHECK(serial[i].recovered == parallel[i].recovered);
    CHECK(serial[i].parse_ok == parallel[i].parse_ok);
  }
}

TEST_CASE("recover_dataset accepts an empty batch") {
  MockChatClient mock = echo_defender();
  DefenderOptions options;
  CHECK(recover_dataset({}, options, mock).empty());
  CHECK(mock.calls() == 0);
}

TEST_CASE("recovery results round-trip through JSONL") {
  std::vector<RecoveryResult> results;
  RecoveryResult r;
  r.instance_id = "r1";
  r.label = "POS";
  r.attacked = "att@cked \"quoted\"";
  r.recovered = "attacked \"quoted\"";
  r.parse_ok = true;
  r.fallback_used = false;
  results.push_back(r);
  r.instance_id = "r2";
  r.parse_ok = false;
  r.fallback_used = true;
  r.recovered = r.attacked;
  results.push_back(r);

  testutil::TempDir dir;
  const auto path = dir.file("recovered.jsonl");
  save_recoveries_jsonl(results, path);
  const std::vector<RecoveryResult> loaded = load_recoveries_jsonl(path);
  REQUIRE(loaded.size() == 2);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(loaded[i].instance_id == results[i].instance_id);
    CHECK(loaded[i].label == results[i].label);
    CHECK(loaded[i].attacked == results[i].attacked);
    CHECK(loaded[i].recovered == results[i].recovered);
    CHECK(loaded[i].parse_ok == results[i].parse_ok);
    CHECK(loaded[i].fallback_used == results[i].fallback_used);
  }
}

}  // namespace
