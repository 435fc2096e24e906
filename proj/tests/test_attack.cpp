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

#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "genshin/attack.hpp"
#include "genshin/classify.hpp"
#include "genshin/core.hpp"
#include "genshin/error.hpp"
#include "genshin/llm_client.hpp"
#include "genshin/rng.hpp"
#include "genshin/textops.hpp"
#include "genshin/utf8.hpp"
#include "test_helpers.hpp"

namespace {

using genshin::Error;
using genshin::Rng;
using namespace genshin::attack;
using namespace genshin::classify;
using namespace genshin::core;

bool printable_ascii(char32_t scalar) {
  return scalar >= 0x21 && scalar <= 0x7E;
}

TEST_CASE("char_disturb at ratio 0 is the identity") {
  Rng rng(1);
  CHECK(char_disturb("leave me alone!", 0.0, rng) == "leave me alone!");
}

TEST_CASE("char_disturb at ratio 1 replaces every eligible character") {
  Rng rng(2);
  const std::string out = char_disturb("ab c", 1.0, rng);
  const std::u32string scalars = genshin::utf8::decode(out);
  REQUIRE(scalars.size() == 4);
  CHECK(scalars[2] == U' ');  // whitespace survives
  CHECK(scalars[0] != U'a');
  CHECK(scalars[1] != U'b');
  CHECK(scalars[3] != U'c');
  for (char32_t scalar : {scalars[0], scalars[1], scalars[3]}) {
    CHECK(printable_ascii(scalar));
  }
}

TEST_CASE("whitespace and punctuation positions survive byte for byte") {
  const std::string text = "a.b c!\td,e";
  Rng rng(3);
  for (int round = 0; round < 50; ++round) {
    const std::string out = char_disturb(text, 1.0, rng);
    const std::u32string scalars = genshin::utf8::decode(out);
    REQUIRE(scalars.size() == genshin::utf8::scalar_count(text));
    CHECK(scalars[1] == U'.');
    CHECK(scalars[3] == U' ');
    CHECK(scalars[5] == U'!');
    CHECK(scalars[6] == U'\t');
    CHECK(scalars[8] == U',');
  }
}

TEST_CASE("char_disturb replaces non-ASCII eligible scalars too") {
  Rng rng(4);
  const std::string out =
      char_disturb("\xE5\xBC\x80\xE5\xBF\x83", 1.0, rng);  // two CJK scalars
  const std::u32string scalars = genshin::utf8::decode(out);
  REQUIRE(scalars.size() == 2);
  CHECK(printable_ascii(scalars[0]));
  CHECK(printable_ascii(scalars[1]));
}

TEST_CASE("char_disturb empirical rate tracks the ratio") {
  const std::string text(100000, 'a');
  auto measure = [&](double ratio, std::uint64_t seed) {
    Rng rng(seed);
    const std::string out = char_disturb(text, ratio, rng);
    std::size_t changed = 0;
    for (char c : out) changed += c != 'a';
    return static_cast<double>(changed) / 100000.0;
  };
  const double at15 = measure(0.15, 5);
  CHECK(at15 >= 0.14);
  CHECK(at15 <= 0.16);
  const double at30 = measure(0.30, 6);
  CHECK(at30 >= 0.28);
  CHECK(at30 <= 0.32);
}

TEST_CASE("char_disturb is deterministic per seed") {
  Rng a(7);
  Rng b(7);
  CHECK(char_disturb("some sample text", 0.5, a) ==
        char_disturb("some sample text", 0.5, b));
}

TEST_CASE("word_disturb swaps words and normalizes whitespace") {
  const ReplacementVocab vocab = ReplacementVocab::from_words({"x"});
  Rng rng(8);
  CHECK(word_disturb("a b", 1.0, vocab, rng) == "x x");
  CHECK(word_disturb("a  b", 0.0, vocab, rng) == "a b");

  // The only vocabulary word equals the original: nothing to swap to.
  const ReplacementVocab self = ReplacementVocab::from_words({"a"});
  CHECK(word_disturb("a a", 1.0, self, rng) == "a a");
}

TEST_CASE("word_disturb never replaces a word with itself") {
  const ReplacementVocab vocab =
      ReplacementVocab::from_words({"aa", "bb", "cc"});
  Rng rng(9);
  for (int round = 0; round < 200; ++round) {
    const std::string out = word_disturb("aa bb", 1.0, vocab, rng);
    const auto words =
        genshin::textops::tokenize(out, genshin::textops::Granularity::kWord);
    REQUIRE(words.tokens.size() == 2);
    CHECK(words.tokens[0] != "aa");
    CHECK(words.tokens[1] != "bb");
  }
}

TEST_CASE("replacement vocab draws uniformly, excluding the original") {
  const ReplacementVocab vocab =
      ReplacementVocab::from_words({"aa", "bb", "cc"});
  Rng rng(10);
  std::map<std::string, int> counts;
  for (int round = 0; round < 3000; ++round) {
    ++counts[*vocab.draw_excluding("aa", rng)];
  }
  CHECK(counts.count("aa") == 0);
  CHECK(counts["bb"] > 1200);
  CHECK(counts["cc"] > 1200);
  CHECK(vocab.draw_excluding("zz", rng).has_value());

  const ReplacementVocab single = ReplacementVocab::from_words({"aa"});
  CHECK_FALSE(single.draw_excluding("aa", rng).has_value());
}

TEST_CASE("llm_disturb parses the attacker reply") {
  genshin::llm::MockChatClient mock(
      {{"", "{\"attacked_text\": \"pa*skey now\"}", "", ""}});
  CHECK(llm_disturb("passkey now", mock, "m") == "pa*skey now");

  genshin::llm::MockChatClient chatty(
      {{"", "Sure! {\"attacked_text\": \"ok\"} done", "", ""}});
  CHECK(llm_disturb("text", chatty, "m") == "ok");

  genshin::llm::MockChatClient broken({{"", "no json here", "", ""}});
  CHECK_THROWS_WITH_AS(llm_disturb("text", broken, "m"),
                       doctest::Contains("unparsable attacker reply"), Error);

  genshin::llm::MockChatClient wrong_key({{"", "{\"text\": \"x\"}", "", ""}});
  CHECK_THROWS_WITH_AS(llm_disturb("text", wrong_key, "m"),
                       doctest::Contains("unparsable attacker reply"), Error);
}

TEST_CASE("the attacker prompt embeds the text between markers") {
  const std::string prompt = build_attacker_prompt("UNIQUE-SNIPPET");
  const auto start = prompt.find("The text is:\n---\n");
  REQUIRE(start != std::string::npos);
  const auto text_at = prompt.find("UNIQUE-SNIPPET");
  REQUIRE(text_at != std::string::npos);
  CHECK(text_at == start + std::string("The text is:\n---\n").size());
  CHECK(prompt.find("\n---", text_at) != std::string::npos);
}

FunctionClassifier flip_on_change(const std::string& original) {
  return FunctionClassifier(
      {{"SAME", 0}, {"DIFF", 1}}, [original](const std::string& text) {
        const bool same = text == original;
        return make_prediction({{"SAME", 0}, {"DIFF", 1}},
                               {same ? 1.0 : 0.0, same ? 0.0 : 1.0});
      });
}

TEST_CASE("adversarial_search succeeds on the first flip") {
  const TextInstance instance{"i1", "hello world", {"SAME", 0}};
  AttackConfig config;
  config.ratio = 1.0;
  config.seed = 11;
  const AttackOutcome outcome =
      adversarial_search(instance, config, flip_on_change(instance.text));
  CHECK(outcome.success);
  CHECK(outcome.attempts_used == 1);
  CHECK(outcome.attacked != instance.text);
  CHECK(outcome.edr > 0.0);
  CHECK(outcome.edr ==
        doctest::Approx(genshin::textops::edr(instance.text,
                                              outcome.attacked)));
  CHECK(outcome.instance_id == "i1");
  CHECK(outcome.label == "SAME");
}

TEST_CASE("adversarial_search fails at the attempt cap") {
  const TextInstance instance{"i1", "hello world", {"A", 0}};
  const FunctionClassifier constant(
      {{"A", 0}, {"B", 1}}, [](const std::string&) {
        return make_prediction({{"A", 0}, {"B", 1}}, {1.0, 0.0});
      });
  AttackConfig config;
  config.ratio = 0.5;
  config.max_attempts = 9;
  const AttackOutcome outcome =
      adversarial_search(instance, config, constant);
  CHECK_FALSE(outcome.success);
  CHECK(outcome.attempts_used == 9);
  CHECK(outcome.attacked != instance.text);  // keeps the last attempt
}

TEST_CASE("a zero ratio can never flip the prediction") {
  const TextInstance instance{"i1", "hello world", {"SAME", 0}};
  AttackConfig config;
  config.ratio = 0.0;
  config.max_attempts = 5;
  const AttackOutcome outcome =
      adversarial_search(instance, config, flip_on_change(instance.text));
  CHECK_FALSE(outcome.success);
  CHECK(outcome.attacked == instance.text);
  CHECK(outcome.edr == 0.0);
}

TEST_CASE("attack_dataset matches its serial reference") {
  LabeledDataset dataset("batch");
  for (int i = 0; i < 40; ++i) {
    dataset.add("i" + std::to_string(i),
                "sample sentence number " + std::to_string(i), "A");
  }
  const FunctionClassifier classifier(
      {{"A", 0}, {"B", 1}}, [](const std::string& text) {
        const bool has_digit_pair =
            text.find("1") != std::string::npos &&
            text.find("e") == std::string::npos;
        return make_prediction({{"A", 0}, {"B", 1}},
                               {has_digit_pair ? 0.2 : 0.8,
                                has_digit_pair ? 0.8 : 0.2});
      });
  AttackConfig config;
  config.ratio = 0.3;
  config.max_attempts = 16;
  config.seed = 12;

  const AttackBatchResult serial =
      attack_dataset_serial(dataset, config, classifier);
  const AttackBatchResult parallel =
      attack_dataset(dataset, config, classifier, 4);
  CHECK(serial.errors.empty());
  CHECK(parallel.errors.empty());
  REQUIRE(serial.outcomes.size() == dataset.size());
  REQUIRE(parallel.outcomes.size() == dataset.size());
  for (std::size_t i = 0; i < dataset.size(); ++i) {
    REQUIRE(serial.outcomes[i].has_value());
    REQUIRE(parallel.outcomes[i].has_value());
    CHECK(serial.outcomes[i]->instance_id == dataset[i].id);
    CHECK(parallel.outcomes[i]->attacked == serial.outcomes[i]->attacked);
    CHECK(parallel.outcomes[i]->attempts_used ==
          serial.outcomes[i]->attempts_used);
    CHECK(parallel.outcomes[i]->success == serial.outcomes[i]->success);
    CHECK(parallel.outcomes[i]->edr == serial.outcomes[i]->edr);
  }
}

TEST_CASE("attack_dataset records per-instance errors and keeps going") {
  LabeledDataset dataset("errs");
  dataset.add("ok", "fine text", "A");
  dataset.add("boom", "poison text", "A");
  const FunctionClassifier classifier(
      {{"A", 0}, {"B", 1}}, [](const std::string& text) {
        if (text.find("poison") != std::string::npos) {
          throw Error("refusing poison");
        }
        return make_prediction({{"A", 0}, {"B", 1}}, {1.0, 0.0});
      });
  AttackConfig config;
  config.max_attempts = 3;
  const AttackBatchResult result =
      attack_dataset(dataset, config, classifier);
  REQUIRE(result.outcomes.size() == 2);
  CHECK(result.outcomes[0].has_value());
  CHECK_FALSE(result.outcomes[1].has_value());
  REQUIRE(result.errors.size() == 1);
  CHECK(result.errors[0].instance_id == "boom");
  CHECK(result.errors[0].message.find("refusing poison") !=
        std::string::npos);
  CHECK(result.completed().size() == 1);
}

TEST_CASE("word attacker falls back to the dataset vocabulary") {
  LabeledDataset dataset("vocabless");
  dataset.add("1", "alpha beta", "A");
  dataset.add("2", "gamma delta", "A");
  AttackConfig config;
  config.kind = AttackerKind::kWord;
  config.ratio = 1.0;
  config.max_attempts = 1;
  const AttackBatchResult result =
      attack_dataset(dataset, config, flip_on_change("alpha beta"));
  REQUIRE(result.outcomes[0].has_value());
  for (const std::string& word : genshin::textops::tokenize(
           result.outcomes[0]->attacked,
           genshin::textops::Granularity::kWord).tokens) {
    const std::vector<std::string> vocab = dataset.word_vocabulary();
    CHECK(std::find(vocab.begin(), vocab.end(), word) != vocab.end());
  }
}

AttackOutcome outcome_with(int attempts, bool success, double edr = 0.0) {
  AttackOutcome outcome;
  outcome.attempts_used = attempts;
  outcome.success = success;
  outcome.edr = edr;
  return outcome;
}

TEST_CASE("median_attack_time counts failures at the cap") {
  CHECK(median_attack_time({outcome_with(5, true), outcome_with(3, true),
                            outcome_with(8, true)}) == 5.0);
  // {2, 4, fail, fail} at cap 128 sorts to {2, 4, 128, 128}: median 66.
  CHECK(median_attack_time({outcome_with(2, true), outcome_with(4, true),
                            outcome_with(100, false),
                            outcome_with(7, false)}) == 66.0);
  CHECK(median_attack_time({outcome_with(1, false), outcome_with(2, false)}) ==
        128.0);
  CHECK(median_attack_time({outcome_with(9, false)}, 16) == 16.0);
  CHECK_THROWS_AS(median_attack_time({}), Error);
}

TEST_CASE("bucket_by_edr snaps to the nearest grid ratio, ties low") {
  const std::vector<double> grid = {0.05, 0.10, 0.15, 0.20};
  std::vector<AttackOutcome> outcomes = {
      outcome_with(1, true, 0.13),   // nearest 0.15
      outcome_with(1, true, 0.125),  // tie between 0.10 and 0.15: low wins
      outcome_with(1, true, 0.04),   // nearest 0.05
      outcome_with(1, true, 0.9),    // clamps to the top bucket
  };
  const auto buckets = bucket_by_edr(outcomes, grid);
  REQUIRE(buckets.count(0.15) == 1);
  CHECK(buckets.at(0.15).size() == 1);
  CHECK(buckets.at(0.15)[0].edr == doctest::Approx(0.13));
  REQUIRE(buckets.count(0.10) == 1);
  CHECK(buckets.at(0.10)[0].edr == doctest::Approx(0.125));
  CHECK(buckets.at(0.05).size() == 1);
  CHECK(buckets.at(0.20).size() == 1);
  CHECK(buckets.count(0.0) == 0);  // no empty buckets

  // The per-bucket cap keeps the first arrivals.
  std::vector<AttackOutcome> many;
  for (int i = 0; i < 30; ++i) many.push_back(outcome_with(i, true, 0.05));
  const auto capped = bucket_by_edr(many, grid, 10);
  CHECK(capped.at(0.05).size() == 10);
  CHECK(capped.at(0.05)[0].attempts_used == 0);

  CHECK_THROWS_AS(bucket_by_edr(outcomes, {}), Error);
}

TEST_CASE("attack outcomes round-trip through JSONL") {
  std::vector<AttackOutcome> outcomes;
  AttackOutcome a;
  a.instance_id = "x1";
  a.label = "POS";
  a.original = "clean \"text\"";
  a.attacked = "cl3an \"t3xt\"";
  a.attempts_used = 4;
  a.success = true;
  a.edr = 0.25;
  outcomes.push_back(a);
  AttackOutcome b;
  b.instance_id = "x2";
  b.label = "NEG";
  b.original = "unicode \xE5\xBC\x80";
  b.attacked = "unicode Q";
  b.attempts_used = 128;
  b.success = false;
  b.edr = 0.5;
  outcomes.push_back(b);

  testutil::TempDir dir;
  const auto path = dir.file("outcomes.jsonl");
  save_outcomes_jsonl(outcomes, path);
  const std::vector<AttackOutcome> loaded = load_outcomes_jsonl(path);
  REQUIRE(loaded.size() == 2);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(loaded[i].instance_id == outcomes[i].instance_id);
    CHECK(loaded[i].label == outcomes[i].label);
    CHECK(loaded[i].original == outcomes[i].original);
    CHECK(loaded[i].attacked == outcomes[i].attacked);
    CHECK(loaded[i].attempts_used == outcomes[i].attempts_used);
    CHECK(loaded[i].success == outcomes[i].success);
    CHECK(loaded[i].edr == doctest::Approx(outcomes[i].edr));
  }
}

TEST_CASE("attacker kind names round-trip") {
  CHECK(attacker_kind_name(AttackerKind::kChar) == "char");
  CHECK(attacker_kind_name(AttackerKind::kWord) == "word");
  CHECK(attacker_kind_name(AttackerKind::kLlm) == "llm");
  CHECK(parse_attacker_kind("char") == AttackerKind::kChar);
  CHECK(parse_attacker_kind("word") == AttackerKind::kWord);
  CHECK(parse_attacker_kind("llm") == AttackerKind::kLlm);
  CHECK_THROWS_AS(parse_attacker_kind("quantum"), genshin::ConfigError);
}

}  // namespace
