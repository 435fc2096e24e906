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

// Release gate. Each numbered criterion prints one [PASS]/[FAIL] line; the
// process exits non-zero when any criterion fails. Oracles here are
// independent reimplementations, not calls back into the library.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "genshin/attack.hpp"
#include "genshin/classify.hpp"
#include "genshin/core.hpp"
#include "genshin/defend.hpp"
#include "genshin/harness.hpp"
#include "genshin/interpret.hpp"
#include "genshin/llm_client.hpp"
#include "genshin/report.hpp"
#include "genshin/rng.hpp"
#include "genshin/textops.hpp"
#include "genshin/utf8.hpp"
#include "test_helpers.hpp"

namespace {

using nlohmann::json;

// Pinned tolerances; loosening any of these is a release decision.
constexpr double kRRatioTolerance = 0.00005;  // 4-decimal published rounding
constexpr double kShapleyTolerance = 1e-9;
constexpr double kPipelineTolerance = 1e-9;
constexpr double kRateLow = 0.14;
constexpr double kRateHigh = 0.16;
constexpr double kAddCeiling = 0.15;  // strict
constexpr double kMinOriginalAccuracy = 0.95;
constexpr double kMaxAttackedAccuracy = 0.5;  // strict
constexpr double kMetricBudgetSeconds = 5.0;
constexpr double kAttackerBudgetSeconds = 10.0;
constexpr double kPipelineBudgetSeconds = 60.0;

class Failure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void expect(bool condition, const std::string& message) {
  if (!condition) throw Failure(message);
}

std::string fmt_double(double value) {
  std::ostringstream out;
  out.precision(10);
  out << value;
  return out.str();
}

void expect_near(double actual, double wanted, double tolerance,
                 const std::string& what) {
  if (!(std::abs(actual - wanted) <= tolerance)) {
    throw Failure(what + ": got " + fmt_double(actual) + ", wanted " +
                  fmt_double(wanted) + " within " + fmt_double(tolerance));
  }
}

// Direct-formula Shapley oracle: phi_i = sum over coalitions S not
// containing i of |S|!(n-|S|-1)!/n! * (f(S+i) - f(S)).
std::vector<double> oracle_shapley(
    int n, const std::function<double(std::uint64_t)>& value_of_mask) {
  std::vector<long double> factorial(static_cast<std::size_t>(n) + 1, 1.0L);
  for (std::size_t i = 1; i < factorial.size(); ++i) {
    factorial[i] = factorial[i - 1] * static_cast<long double>(i);
  }
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  std::vector<double> phi(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    const std::uint64_t bit = std::uint64_t{1} << i;
    long double total = 0.0L;
    for (std::uint64_t mask = 0; mask <= full; ++mask) {
      if ((mask & bit) != 0) continue;
      const int size = __builtin_popcountll(mask);
      const long double weight =
          factorial[static_cast<std::size_t>(size)] *
          factorial[static_cast<std::size_t>(n - size - 1)] /
          factorial[static_cast<std::size_t>(n)];
      total += weight * (value_of_mask(mask | bit) - value_of_mask(mask));
    }
    phi[static_cast<std::size_t>(i)] = static_cast<double>(total);
  }
  return phi;
}

genshin::llm::MockChatClient echo_client() {
  genshin::llm::MockChatClient::Rule rule;
  rule.match = "";
  rule.response = "{\"recovered_text\": \"<<echo_json>>\"}";
  rule.echo_start = "The input text I am providing you is:\n---\n";
  rule.echo_end = "\n------";
  return genshin::llm::MockChatClient({rule});
}

genshin::classify::ScriptedClassifier spam_classifier() {
  std::vector<genshin::core::ClassLabel> labels = {{"HAM", 0}, {"SPAM", 1}};
  std::vector<genshin::classify::ScriptedClassifier::Rule> rules;
  rules.push_back({"win$", "SPAM", {0.1, 0.9}});
  rules.push_back({"win", "SPAM", {0.3, 0.7}});
  return genshin::classify::ScriptedClassifier(std::move(labels),
                                               std::move(rules), "HAM");
}

void check_efficiency(const genshin::interpret::Attribution& attribution,
                      const std::string& what) {
  double total = 0.0;
  for (double share : attribution.phi) total += share;
  expect_near(total, attribution.full_value - attribution.base_value,
              kShapleyTolerance, what + ": efficiency");
}

genshin::attack::AttackOutcome scripted_outcome(int attempts, bool success) {
  genshin::attack::AttackOutcome outcome;
  outcome.attempts_used = attempts;
  outcome.success = success;
  return outcome;
}

// Two-class corpus over disjoint vocabularies, with a caller-chosen class
// skew; the first instance fixes class index 0.
genshin::core::LabeledDataset skewed_separable(std::size_t pos_count,
                                               std::size_t neg_count,
                                               std::uint64_t seed) {
  static const std::vector<std::string> kPos = {
      "bright", "cheerful", "delight", "glowing", "happy",
      "joyful", "lovely",   "merry",   "sunny",   "warm"};
  static const std::vector<std::string> kNeg = {
      "bleak", "dismal", "dreary", "gloomy", "grim",
      "murky", "sad",    "sour",   "stormy", "weary"};
  genshin::core::LabeledDataset dataset("skewed");
  std::mt19937_64 engine(seed);
  const auto sentence = [&](const std::vector<std::string>& vocab) {
    std::string text;
    for (int w = 0; w < 8; ++w) {
      if (w > 0) text += ' ';
      text += vocab[engine() % vocab.size()];
    }
    return text;
  };
  for (std::size_t i = 0; i < pos_count; ++i) {
    dataset.add("p" + std::to_string(i), sentence(kPos), "POS");
  }
  for (std::size_t i = 0; i < neg_count; ++i) {
    dataset.add("n" + std::to_string(i), sentence(kNeg), "NEG");
  }
  return dataset;
}

// ---------------------------------------------------------------------------
// Criteria

void criterion_metric_oracles() {
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 engine(20260814);
  const std::u32string alphabet = U"aabbccdde é中";
  const auto random_text = [&]() {
    std::uniform_int_distribution<std::size_t> length(0, 20);
    std::u32string scalars;
    const std::size_t n = length(engine);
    for (std::size_t i = 0; i < n; ++i) {
      scalars += alphabet[engine() % alphabet.size()];
    }
    return genshin::utf8::encode(scalars);
  };
  for (int round = 0; round < 1000; ++round) {
    const std::string a = random_text();
    const std::string b = random_text();
    const std::size_t got = genshin::textops::levenshtein(a, b);
    const std::size_t wanted = testutil::oracle_levenshtein(a, b);
    if (got != wanted) {
      throw Failure("levenshtein(\"" + a + "\", \"" + b + "\") = " +
                    std::to_string(got) + ", oracle says " +
                    std::to_string(wanted));
    }
    const double forward = genshin::textops::edr(a, b);
    const double backward = genshin::textops::edr(b, a);
    expect(forward >= 0.0 && forward <= 1.0,
           "edr out of [0,1]: " + fmt_double(forward));
    expect(forward == backward, "edr not symmetric");
  }
  const std::chrono::duration<double> elapsed =
      std::chrono::steady_clock::now() - start;
  expect(elapsed.count() < kMetricBudgetSeconds,
         "metric oracle run took " + fmt_double(elapsed.count()) + "s");
}

void criterion_rratio_published_rows() {
  const auto first = genshin::harness::compute_rratio(0.9766, 0.1484, 0.9258);
  expect(first.has_value(), "first row: rratio undefined");
  expect_near(*first, 0.9387, kRRatioTolerance, "first row");
  const auto second = genshin::harness::compute_rratio(0.8789, 0.0820, 0.8750);
  expect(second.has_value(), "second row: rratio undefined");
  expect_near(*second, 0.9951, kRRatioTolerance, "second row");
}

void criterion_shapley_exactness() {
  for (int n = 1; n <= 8; ++n) {
    std::mt19937_64 engine(500 + static_cast<std::uint64_t>(n));
    std::uniform_real_distribution<double> value(0.0, 1.0);
    std::vector<double> table(std::size_t{1} << n);
    for (double& entry : table) entry = value(engine);
    const auto value_of_mask = [&table](std::uint64_t mask) {
      return table[mask];
    };
    const std::vector<double> got =
        genshin::interpret::shapley_exact_values(n, value_of_mask);
    const std::vector<double> wanted = oracle_shapley(n, value_of_mask);
    for (int i = 0; i < n; ++i) {
      expect_near(got[static_cast<std::size_t>(i)],
                  wanted[static_cast<std::size_t>(i)], kShapleyTolerance,
                  "exact n=" + std::to_string(n) + " phi_" +
                      std::to_string(i));
    }
    if (n <= 6) {
      const auto value_of_subset = [&table](const std::vector<bool>& member) {
        std::uint64_t mask = 0;
        for (std::size_t i = 0; i < member.size(); ++i) {
          if (member[i]) mask |= std::uint64_t{1} << i;
        }
        return table[mask];
      };
      std::uint64_t used = 0;
      const std::vector<double> sampled =
          genshin::interpret::shapley_sampled_values(n, value_of_subset, 720,
                                                     3, 0, &used);
      for (int i = 0; i < n; ++i) {
        expect_near(sampled[static_cast<std::size_t>(i)],
                    got[static_cast<std::size_t>(i)], kShapleyTolerance,
                    "dense sampling n=" + std::to_string(n) + " phi_" +
                        std::to_string(i));
      }
    }
  }

  // Every attribution the pipeline produces must telescope, on both the
  // exact and the sampled code paths.
  const genshin::classify::ScriptedClassifier scripted = spam_classifier();
  genshin::interpret::InterpreterConfig config;
  config.seed = 7;
  for (const std::string text :
       {std::string("you win$ now"), std::string("free win$ offer today"),
        std::string("one two three four five six seven eight nine ten "
                    "eleven twelve thirteen win$")}) {
    const genshin::interpret::Attribution attribution =
        genshin::interpret::attribute(text, scripted, config);
    check_efficiency(attribution, "scripted attribution");
  }
  const genshin::core::LabeledDataset corpus = testutil::separable_dataset(30);
  const genshin::classify::NaiveBayesClassifier bayes =
      genshin::classify::NaiveBayesClassifier::train(corpus);
  check_efficiency(
      genshin::interpret::attribute("warm sunny happy gloomy", bayes, config),
      "naive Bayes attribution");
}

void criterion_attacker_statistics() {
  const auto start = std::chrono::steady_clock::now();

  genshin::Rng rate_rng(99);
  const std::string eligible(100000, 'a');
  const std::string disturbed =
      genshin::attack::char_disturb(eligible, 0.15, rate_rng);
  const std::u32string before = genshin::utf8::decode(eligible);
  const std::u32string after = genshin::utf8::decode(disturbed);
  expect(before.size() == after.size(), "char_disturb changed scalar count");
  std::size_t replaced = 0;
  for (std::size_t i = 0; i < before.size(); ++i) {
    if (before[i] != after[i]) ++replaced;
  }
  const double rate =
      static_cast<double>(replaced) / static_cast<double>(before.size());
  expect(rate >= kRateLow && rate <= kRateHigh,
         "replacement rate " + fmt_double(rate) + " outside [" +
             fmt_double(kRateLow) + ", " + fmt_double(kRateHigh) + "]");

  genshin::Rng survive_rng(5);
  const std::string mixed = "ab, cd. ef! gh?\t(ij)\nkl «中»";
  const std::string attacked =
      genshin::attack::char_disturb(mixed, 1.0, survive_rng);
  const std::u32string mixed_scalars = genshin::utf8::decode(mixed);
  const std::u32string attacked_scalars = genshin::utf8::decode(attacked);
  expect(mixed_scalars.size() == attacked_scalars.size(),
         "alpha=1 changed scalar count");
  for (std::size_t i = 0; i < mixed_scalars.size(); ++i) {
    const bool protected_position =
        genshin::textops::is_whitespace(mixed_scalars[i]) ||
        genshin::textops::is_punctuation(mixed_scalars[i]);
    if (protected_position) {
      expect(mixed_scalars[i] == attacked_scalars[i],
             "whitespace/punctuation position " + std::to_string(i) +
                 " was rewritten");
    } else {
      expect(mixed_scalars[i] != attacked_scalars[i],
             "eligible position " + std::to_string(i) +
                 " survived at alpha=1");
    }
  }

  const genshin::core::LabeledDataset corpus =
      genshin::core::generate_random_dataset(500, 100,
                                             genshin::core::common_words(),
                                             11);
  double edr_sum = 0.0;
  for (const genshin::core::TextInstance& instance : corpus.instances()) {
    genshin::Rng rng = genshin::Rng::for_instance(11, instance.id);
    const std::string noisy =
        genshin::attack::char_disturb(instance.text, 0.15, rng);
    edr_sum += genshin::textops::edr(instance.text, noisy);
  }
  const double add = edr_sum / static_cast<double>(corpus.size());
  expect(add < kAddCeiling, "ADD at alpha=0.15 is " + fmt_double(add) +
                                ", expected strictly below " +
                                fmt_double(kAddCeiling));

  const std::chrono::duration<double> elapsed =
      std::chrono::steady_clock::now() - start;
  expect(elapsed.count() < kAttackerBudgetSeconds,
         "attacker statistics took " + fmt_double(elapsed.count()) + "s");
}

void criterion_mat_semantics() {
  const std::vector<genshin::attack::AttackOutcome> mixed = {
      scripted_outcome(2, true), scripted_outcome(4, true),
      scripted_outcome(70, false), scripted_outcome(9, false)};
  const double mat = genshin::attack::median_attack_time(mixed, 128);
  expect(mat == 66.0, "median of {2,4,128,128} = " + fmt_double(mat) +
                          ", wanted 66.0");
  const std::vector<genshin::attack::AttackOutcome> hopeless = {
      scripted_outcome(3, false), scripted_outcome(128, false),
      scripted_outcome(60, false)};
  const double capped = genshin::attack::median_attack_time(hopeless, 128);
  expect(capped == 128.0,
         "all-fail MAT = " + fmt_double(capped) + ", wanted 128.0");
}

void criterion_pipeline_bounds() {
  const auto start = std::chrono::steady_clock::now();
  const genshin::core::LabeledDataset dataset =
      testutil::separable_dataset(100);  // 200 instances
  const genshin::classify::NaiveBayesClassifier bayes =
      genshin::classify::NaiveBayesClassifier::train(dataset);

  genshin::harness::ExperimentSpec spec;
  spec.name = "acceptance";
  spec.dataset = &dataset;
  spec.classifier = &bayes;
  spec.attacker.kind = genshin::attack::AttackerKind::kChar;
  spec.attacker.ratio = 0.3;
  spec.attacker.max_attempts = 8;
  spec.seed = 4242;
  spec.groups = 1;
  spec.threads = 1;

  genshin::harness::ExperimentSpec oracle = spec;
  oracle.defender.kind = genshin::harness::DefenderKind::kOracle;
  const genshin::harness::ExperimentRow oracle_row =
      genshin::harness::run_main_experiment(oracle);
  expect(oracle_row.rratio.has_value(), "oracle run: rratio undefined");
  expect_near(*oracle_row.rratio, 1.0, kPipelineTolerance, "oracle rratio");
  expect(oracle_row.ard == 0.0,
         "oracle ARD = " + fmt_double(oracle_row.ard) + ", wanted 0");

  genshin::harness::ExperimentSpec identity = spec;
  identity.defender.kind = genshin::harness::DefenderKind::kIdentity;
  const genshin::harness::ExperimentRow identity_row =
      genshin::harness::run_main_experiment(identity);
  expect(identity_row.rratio.has_value(), "identity run: rratio undefined");
  expect_near(*identity_row.rratio, 0.0, kPipelineTolerance,
              "identity rratio");
  expect(identity_row.ard == identity_row.add,
         "identity ARD " + fmt_double(identity_row.ard) + " != ADD " +
             fmt_double(identity_row.add));
  expect(identity_row.aacc < identity_row.oacc,
         "attack left accuracy untouched; bounds are degenerate");

  genshin::llm::MockChatClient echo = echo_client();
  genshin::harness::ExperimentSpec llm = spec;
  llm.defender.kind = genshin::harness::DefenderKind::kLlm;
  llm.defender.options.variant = genshin::defend::PromptVariant::kFull;
  llm.defender.options.model = "mock-model";
  llm.client = &echo;
  const genshin::harness::ExperimentRow llm_row =
      genshin::harness::run_main_experiment(llm);
  expect(llm_row.racc == llm_row.aacc,
         "echo LLM defender moved accuracy: racc " +
             fmt_double(llm_row.racc) + " vs aacc " +
             fmt_double(llm_row.aacc));
  expect(echo.calls() == dataset.size(),
         "expected one defender call per instance, saw " +
             std::to_string(echo.calls()));

  genshin::harness::ExperimentSpec calm = spec;
  calm.defender.kind = genshin::harness::DefenderKind::kIdentity;
  calm.attacker.ratio = 0.0;
  const genshin::harness::ExperimentRow calm_row =
      genshin::harness::run_main_experiment(calm);
  expect(calm_row.aacc == calm_row.oacc,
         "alpha=0 shifted accuracy: aacc " + fmt_double(calm_row.aacc) +
             " vs oacc " + fmt_double(calm_row.oacc));
  expect(calm_row.add == 0.0, "alpha=0 produced nonzero ADD");

  const std::chrono::duration<double> elapsed =
      std::chrono::steady_clock::now() - start;
  expect(elapsed.count() < kPipelineBudgetSeconds,
         "pipeline bounds took " + fmt_double(elapsed.count()) + "s");
}

void criterion_offline_robustness() {
  // Train on a balanced corpus; evaluate on a skewed one whose majority
  // class loses its evidence under heavy character noise.
  const genshin::core::LabeledDataset training =
      testutil::separable_dataset(100);
  const genshin::classify::NaiveBayesClassifier bayes =
      genshin::classify::NaiveBayesClassifier::train(training);
  const genshin::core::LabeledDataset evaluation =
      skewed_separable(40, 160, 21);

  genshin::harness::ExperimentSpec spec;
  spec.name = "robustness";
  spec.dataset = &evaluation;
  spec.classifier = &bayes;
  spec.attacker.kind = genshin::attack::AttackerKind::kChar;
  spec.attacker.ratio = 0.3;
  spec.attacker.max_attempts = 16;
  spec.defender.kind = genshin::harness::DefenderKind::kOracle;
  spec.seed = 77;
  spec.groups = 1;
  spec.threads = 1;

  const genshin::harness::ExperimentRow row =
      genshin::harness::run_main_experiment(spec);
  expect(row.oacc >= kMinOriginalAccuracy,
         "OAcc " + fmt_double(row.oacc) + " below " +
             fmt_double(kMinOriginalAccuracy));
  expect(row.aacc < kMaxAttackedAccuracy,
         "AAcc " + fmt_double(row.aacc) + " not driven below " +
             fmt_double(kMaxAttackedAccuracy));
  expect(row.racc == row.oacc, "oracle defender failed to restore RAcc: " +
                                   fmt_double(row.racc) + " vs " +
                                   fmt_double(row.oacc));
}

void criterion_determinism() {
  testutil::TempDir dir;

  std::string dataset;
  const std::vector<std::pair<std::string, std::string>> rows = {
      {"the meeting moved to thursday afternoon", "HAM"},
      {"please review the quarterly draft tonight", "HAM"},
      {"lunch at the corner cafe sounds good", "HAM"},
      {"you win$ a brand new phone today", "SPAM"},
      {"claim your win$ prize before midnight", "SPAM"},
      {"exclusive win$ offer just for you", "SPAM"},
  };
  for (std::size_t i = 0; i < rows.size(); ++i) {
    dataset += json{{"id", "i" + std::to_string(i)},
                    {"text", rows[i].first},
                    {"label", rows[i].second}}
                   .dump() +
               "\n";
  }
  const std::string dataset_path = dir.file("dataset.jsonl").string();
  testutil::write_file(dataset_path, dataset);

  std::string rules;
  rules += json{{"default", "HAM"}, {"labels", {"HAM", "SPAM"}}}.dump() + "\n";
  rules +=
      json{{"contains", "win$"}, {"label", "SPAM"}, {"probs", {0.1, 0.9}}}
          .dump() +
      "\n";
  const std::string rules_path = dir.file("rules.jsonl").string();
  testutil::write_file(rules_path, rules);

  const json echo{{"match", ""},
                  {"response", "{\"recovered_text\": \"<<echo_json>>\"}"},
                  {"echo_start",
                   "The input text I am providing you is:\n---\n"},
                  {"echo_end", "\n------"}};
  const std::string mock_path = dir.file("mock.jsonl").string();
  testutil::write_file(mock_path, echo.dump() + "\n");

  const json config{
      {"name", "determinism"},
      {"seed", 13},
      {"threads", 1},
      {"groups", 1},
      {"dataset", {{"path", dataset_path}}},
      {"classifier", {{"script_path", rules_path}}},
      {"llm", {{"model", "mock-model"}, {"mock_script", mock_path}}},
      {"attacker", {{"kind", "char"}, {"ratio", 0.3}, {"max_attempts", 4}}},
      {"defender", {{"kind", "llm"}, {"variant", "full"}}},
  };
  const std::string config_path = dir.file("config.json").string();
  testutil::write_file(config_path, config.dump(2) + "\n");

  const std::string first_dir = dir.file("first").string();
  const std::string second_dir = dir.file("second").string();
  for (const std::string& out_dir : {first_dir, second_dir}) {
    const testutil::CommandResult result = testutil::run_command(
        testutil::shell_quote(GENSHIN_CLI_PATH) + " run --config " +
        testutil::shell_quote(config_path) + " --output-dir " +
        testutil::shell_quote(out_dir) + " >/dev/null 2>/dev/null");
    expect(result.status == 0,
           "run exited " + std::to_string(result.status));
  }
  for (const char* name : {"row.json", "original.jsonl", "attacked.jsonl",
                           "recovered.jsonl", "predictions.jsonl"}) {
    const std::string first = testutil::read_file(first_dir + "/" + name);
    const std::string second = testutil::read_file(second_dir + "/" + name);
    expect(!first.empty(), std::string(name) + " is empty");
    expect(first == second,
           std::string(name) + " differs between identical runs");
  }
}

void criterion_report_safety() {
  const std::vector<std::string> hostile = {
      "<script>alert(1)</script>",
      "<img src=x onerror=alert(1)>",
      "\" onmouseover=\"evil()",
      "'single' & <b>bold</b>",
      "\xE2\x80\xAE"
      "desrever",  // right-to-left override
      "\xE2\x80\x8F"
      "rtl-mark",
  };

  genshin::report::HighlightCase sample;
  sample.instance_id = hostile[0];
  sample.gold_label = hostile[1];
  const std::vector<genshin::core::PipelineState> states = {
      genshin::core::PipelineState::kOriginal,
      genshin::core::PipelineState::kAttacked,
      genshin::core::PipelineState::kRecovered};
  for (std::size_t i = 0; i < states.size(); ++i) {
    genshin::report::HighlightRow& row = sample.rows[i];
    row.state = states[i];
    row.prediction.label = {hostile[2], 0};
    row.prediction.probs = {0.75, 0.25};
    row.attribution.tokens = hostile;
    row.attribution.phi = {0.4, -0.2, 0.1, 0.0, 0.3, -0.1};
    row.attribution.base_value = 0.5;
    row.attribution.full_value = 0.75;
    row.attribution.target_class = {hostile[2], 0};
  }
  const std::string html = genshin::report::render_highlights_html({sample});

  for (const std::string& marker : hostile) {
    if (html.find(marker) != std::string::npos) {
      throw Failure("raw hostile marker passed through: " + marker);
    }
  }
  expect(html.find("&lt;script&gt;") != std::string::npos,
         "escaped script tag missing from output");
  expect(html.find("\\u202E") != std::string::npos,
         "bidi override not surfaced as visible escape");
  expect(html.find("\xE2\x80\xAE") == std::string::npos,
         "raw bidi override byte sequence present");
  expect(html.rfind("<!DOCTYPE html>", 0) == 0,
         "output is not a standalone HTML page");
}

struct Criterion {
  int number;
  std::string name;
  std::function<void()> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "levenshtein matches an independent DP oracle; EDR bounded and "
          "symmetric",
       criterion_metric_oracles},
      {2, "RRatio reproduces the published rows within 5e-5",
       criterion_rratio_published_rows},
      {3, "Shapley exact matches brute force; attributions telescope; dense "
          "sampling is exact",
       criterion_shapley_exactness},
      {4, "char attacker hits the target rate, spares protected positions, "
          "ADD < alpha",
       criterion_attacker_statistics},
      {5, "MAT counts failures at the cap", criterion_mat_semantics},
      {6, "pipeline bounds: oracle restores, identity preserves, zero ratio "
          "is inert",
       criterion_pipeline_bounds},
      {7, "naive Bayes collapses under char noise and the oracle defender "
          "restores it",
       criterion_offline_robustness},
      {8, "repeated runs are byte-identical", criterion_determinism},
      {9, "HTML report escapes hostile strings", criterion_report_safety},
  };

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      criterion.body();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const std::chrono::duration<double> elapsed =
        std::chrono::steady_clock::now() - start;
    std::ostringstream line;
    if (error.empty()) {
      line << "[PASS] " << criterion.number << ". " << criterion.name;
    } else {
      ++failures;
      line << "[FAIL] " << criterion.number << ". " << criterion.name << ": "
           << error;
    }
    line.precision(2);
    line << std::fixed << " (" << elapsed.count() << "s)";
    std::cout << line.str() << std::endl;
  }
  if (failures > 0) {
    std::cout << failures << " of " << criteria.size()
              << " acceptance criteria failed" << std::endl;
    return 1;
  }
  std::cout << "all " << criteria.size() << " acceptance criteria passed"
            << std::endl;
  return 0;
}
