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

// End-to-end subcommand tests against the installed binary. Each case spawns
// the real executable, so exit codes and stream separation are tested exactly
// as a shell user sees them.

#include <cstddef>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>
#include <nlohmann/json.hpp>

#include "test_helpers.hpp"

namespace {

using nlohmann::json;
using testutil::CommandResult;
using testutil::read_file;
using testutil::run_command;
using testutil::shell_quote;
using testutil::TempDir;
using testutil::write_file;

std::string cli_path() { return GENSHIN_CLI_PATH; }

// Captures stdout only; the caller appends redirections when stderr matters.
CommandResult run_cli(const std::string& args) {
  return run_command(shell_quote(cli_path()) + " " + args);
}

std::size_t count_lines(const std::string& text) {
  std::size_t lines = 0;
  for (char c : text) {
    if (c == '\n') ++lines;
  }
  return lines;
}

// A dataset the scripted classifier gets fully right: SPAM texts carry the
// "win$" marker, HAM texts do not.
struct CliFixture {
  TempDir dir;
  std::string dataset_path;
  std::string rules_path;
  std::string mock_path;

  CliFixture() {
    std::string dataset;
    const std::vector<std::string> ham = {
        "the meeting moved to thursday afternoon",
        "please review the quarterly draft tonight",
        "lunch at the corner cafe sounds good",
        "the train departs from platform nine",
    };
    const std::vector<std::string> spam = {
        "you win$ a brand new phone today",
        "claim your win$ prize before midnight",
        "exclusive win$ offer just for you",
        "final notice about your win$ reward",
    };
    int next_id = 0;
    for (const std::string& text : ham) {
      json record{{"id", "h" + std::to_string(next_id++)},
                  {"text", text},
                  {"label", "HAM"}};
      dataset += record.dump() + "\n";
    }
    for (const std::string& text : spam) {
      json record{{"id", "s" + std::to_string(next_id++)},
                  {"text", text},
                  {"label", "SPAM"}};
      dataset += record.dump() + "\n";
    }
    dataset_path = dir.file("dataset.jsonl").string();
    write_file(dataset_path, dataset);

    std::string rules;
    rules += json{{"default", "HAM"}, {"labels", {"HAM", "SPAM"}}}.dump();
    rules += "\n";
    rules += json{{"contains", "win$"},
                  {"label", "SPAM"},
                  {"probs", {0.1, 0.9}}}
                 .dump();
    rules += "\n";
    rules_path = dir.file("rules.jsonl").string();
    write_file(rules_path, rules);

    // Echoes the attacked text back as the recovery, wrapped in the JSON
    // shape the full variant parses.
    json echo{{"match", ""},
              {"response", "{\"recovered_text\": \"<<echo_json>>\"}"},
              {"echo_start", "The input text I am providing you is:\n---\n"},
              {"echo_end", "\n------"}};
    mock_path = dir.file("mock.jsonl").string();
    write_file(mock_path, echo.dump() + "\n");
  }

  json base_config() const {
    return json{
        {"name", "cli"},
        {"seed", 7},
        {"threads", 1},
        {"groups", 2},
        {"dataset", {{"path", dataset_path}}},
        {"classifier", {{"script_path", rules_path}}},
        {"attacker", {{"kind", "char"}, {"ratio", 0.3}, {"max_attempts", 6}}},
        {"defender", {{"kind", "identity"}}},
    };
  }

  std::string write_config(const json& config, const std::string& name) {
    const std::string path = dir.file(name).string();
    write_file(path, config.dump(2) + "\n");
    return path;
  }
};

}  // namespace

TEST_CASE("run prints the row and persists artifacts") {
  CliFixture fixture;
  json config = fixture.base_config();
  const std::string out_dir = fixture.dir.file("run-out").string();
  config["output_dir"] = out_dir;
  const std::string config_path = fixture.write_config(config, "run.json");

  const CommandResult result =
      run_cli("run --config " + shell_quote(config_path) + " 2>/dev/null");
  REQUIRE(result.status == 0);

  const json row = json::parse(result.out);
  CHECK(row.at("name") == "cli");
  CHECK(row.at("dataset") == "dataset");
  CHECK(row.at("classifier") == "scripted");
  CHECK(row.at("attacker") == "char");
  CHECK(row.at("defender") == "identity");
  CHECK(row.at("instances") == 8);
  CHECK(row.at("completed") == 8);
  CHECK(row.at("oacc").get<double>() == doctest::Approx(1.0));
  CHECK(row.at("racc").get<double>() ==
        doctest::Approx(row.at("aacc").get<double>()));

  // The persisted row is the same serialization that went to stdout.
  CHECK(read_file(out_dir + "/row.json") == result.out);
  for (const char* name : {"spec.json", "original.jsonl", "attacked.jsonl",
                           "recovered.jsonl", "predictions.jsonl"}) {
    CAPTURE(name);
    CHECK(std::filesystem::exists(std::filesystem::path(out_dir) / name));
  }
}

TEST_CASE("run honors flag overrides on top of the config file") {
  CliFixture fixture;
  const std::string config_path =
      fixture.write_config(fixture.base_config(), "base.json");

  const CommandResult result =
      run_cli("run --config " + shell_quote(config_path) +
              " --defender oracle --name override 2>/dev/null");
  REQUIRE(result.status == 0);

  const json row = json::parse(result.out);
  CHECK(row.at("name") == "override");
  CHECK(row.at("defender") == "oracle");
  CHECK(row.at("racc").get<double>() ==
        doctest::Approx(row.at("oacc").get<double>()));
  CHECK(row.at("ard").get<double>() == doctest::Approx(0.0));
}

TEST_CASE("run with the mock LLM defender stays at the identity bound") {
  CliFixture fixture;
  json config = fixture.base_config();
  config["defender"] = {{"kind", "llm"}, {"variant", "full"}};
  config["llm"] = {{"model", "mock-model"}, {"mock_script", fixture.mock_path}};
  const std::string config_path = fixture.write_config(config, "llm.json");

  const CommandResult result =
      run_cli("run --config " + shell_quote(config_path) + " 2>/dev/null");
  REQUIRE(result.status == 0);

  const json row = json::parse(result.out);
  CHECK(row.at("defender") == "llm");
  CHECK(row.at("variant") == "full");
  CHECK(row.at("racc").get<double>() ==
        doctest::Approx(row.at("aacc").get<double>()));
  CHECK(row.at("ard").get<double>() ==
        doctest::Approx(row.at("add").get<double>()));
}

TEST_CASE("stdout stays machine readable while logs go to stderr") {
  CliFixture fixture;
  const std::string config_path =
      fixture.write_config(fixture.base_config(), "quiet.json");

  // Without redirection stdout must still parse: the run log lives on
  // stderr.
  const CommandResult mixed =
      run_cli("run --config " + shell_quote(config_path) + " 2>/dev/null");
  REQUIRE(mixed.status == 0);
  CHECK_NOTHROW(json::parse(mixed.out));

  const CommandResult logs =
      run_cli("run --config " + shell_quote(config_path) +
              " 2>&1 1>/dev/null");
  REQUIRE(logs.status == 0);
  CHECK(logs.out.find("run: 8 instances") != std::string::npos);
}

TEST_CASE("classify scores a single text or a dataset") {
  CliFixture fixture;
  const std::string config_path =
      fixture.write_config(fixture.base_config(), "classify.json");

  const CommandResult single =
      run_cli("classify --config " + shell_quote(config_path) +
              " --text 'you win$ now' 2>/dev/null");
  REQUIRE(single.status == 0);
  const json prediction = json::parse(single.out);
  CHECK(prediction.at("label") == "SPAM");
  CHECK(prediction.at("index") == 1);
  CHECK(prediction.at("probs")[1].get<double>() == doctest::Approx(0.9));

  const CommandResult scored =
      run_cli("classify --config " + shell_quote(config_path) +
              " 2>/dev/null");
  REQUIRE(scored.status == 0);
  const json summary = json::parse(scored.out);
  CHECK(summary.at("instances") == 8);
  CHECK(summary.at("accuracy").get<double>() == doctest::Approx(1.0));
}

TEST_CASE("explain emits an attribution whose shares telescope") {
  CliFixture fixture;
  const std::string config_path =
      fixture.write_config(fixture.base_config(), "explain.json");

  const CommandResult result =
      run_cli("explain --config " + shell_quote(config_path) +
              " --text 'free win$ offer' 2>/dev/null");
  REQUIRE(result.status == 0);

  const json attribution = json::parse(result.out);
  const auto tokens = attribution.at("tokens").get<std::vector<std::string>>();
  const auto phi = attribution.at("phi").get<std::vector<double>>();
  REQUIRE(tokens == std::vector<std::string>{"free", "win$", "offer"});
  REQUIRE(phi.size() == tokens.size());
  double total = 0.0;
  for (double share : phi) total += share;
  CHECK(total == doctest::Approx(attribution.at("full_value").get<double>() -
                                 attribution.at("base_value").get<double>())
                     .epsilon(1e-9));
  CHECK(attribution.at("method") == "exact");
}

TEST_CASE("attack and recover chain through JSONL artifacts") {
  CliFixture fixture;
  json config = fixture.base_config();
  config["defender"] = {{"kind", "llm"}, {"variant", "full"}};
  config["llm"] = {{"model", "mock-model"}, {"mock_script", fixture.mock_path}};
  const std::string config_path = fixture.write_config(config, "chain.json");
  const std::string attacked_path = fixture.dir.file("att.jsonl").string();
  const std::string recovered_path = fixture.dir.file("rec.jsonl").string();

  const CommandResult attack =
      run_cli("attack --config " + shell_quote(config_path) + " --out " +
              shell_quote(attacked_path) + " 2>/dev/null");
  REQUIRE(attack.status == 0);
  const json attack_summary = json::parse(attack.out);
  CHECK(attack_summary.at("instances") == 8);
  CHECK(attack_summary.at("completed") == 8);
  CHECK(attack_summary.at("errors") == 0);
  CHECK(attack_summary.at("out") == attacked_path);
  CHECK(count_lines(read_file(attacked_path)) == 8);

  const CommandResult recover =
      run_cli("recover --config " + shell_quote(config_path) + " --attacked " +
              shell_quote(attacked_path) + " --out " +
              shell_quote(recovered_path) + " 2>/dev/null");
  REQUIRE(recover.status == 0);
  const json recover_summary = json::parse(recover.out);
  CHECK(recover_summary.at("count") == 8);
  CHECK(recover_summary.at("fallbacks") == 0);
  CHECK(count_lines(read_file(recovered_path)) == 8);

  // The echo defender hands the attacked text straight back.
  std::istringstream attacked_in(read_file(attacked_path));
  std::istringstream recovered_in(read_file(recovered_path));
  std::string attacked_line;
  std::string recovered_line;
  while (std::getline(attacked_in, attacked_line) &&
         std::getline(recovered_in, recovered_line)) {
    const json outcome = json::parse(attacked_line);
    const json recovery = json::parse(recovered_line);
    CHECK(recovery.at("id") == outcome.at("id"));
    // Outcome "text" is the attacked string, recovery "text" the recovered
    // one; the echo defender maps one to the other unchanged.
    CHECK(recovery.at("text") == outcome.at("text"));
    CHECK(recovery.at("attacked") == outcome.at("text"));
  }

  const CommandResult missing =
      run_cli("recover --config " + shell_quote(config_path) +
              " 2>&1 1>/dev/null");
  CHECK(missing.status == 2);
  CHECK(missing.out.find("config error:") != std::string::npos);
}

TEST_CASE("report renders row tables in both formats") {
  CliFixture fixture;
  json config = fixture.base_config();
  const std::string out_dir = fixture.dir.file("report-run").string();
  config["output_dir"] = out_dir;
  const std::string config_path = fixture.write_config(config, "row.json");

  REQUIRE(run_cli("run --config " + shell_quote(config_path) +
                  " >/dev/null 2>/dev/null")
              .status == 0);
  const std::string row_path = out_dir + "/row.json";

  const CommandResult markdown =
      run_cli("report --row " + shell_quote(row_path) + " 2>/dev/null");
  REQUIRE(markdown.status == 0);
  const json summary = json::parse(markdown.out);
  CHECK(summary.at("rows") == 1);
  const std::string table = summary.at("table").get<std::string>();
  CHECK(table.find("| Attacker | Model | Dataset |") != std::string::npos);
  CHECK(table.find("| char | scripted | dataset |") != std::string::npos);

  const CommandResult csv =
      run_cli("report --row " + shell_quote(row_path) +
              " --format csv 2>/dev/null");
  REQUIRE(csv.status == 0);
  const std::string csv_table =
      json::parse(csv.out).at("table").get<std::string>();
  CHECK(csv_table.rfind("Attacker,Model,Dataset,", 0) == 0);

  const CommandResult conflicted =
      run_cli("report --row " + shell_quote(row_path) + " --sweep " +
              shell_quote(row_path) + " 2>&1 1>/dev/null");
  CHECK(conflicted.status == 2);
  CHECK(conflicted.out.find("config error:") != std::string::npos);
}

TEST_CASE("sweep emits one point per requested ratio") {
  CliFixture fixture;
  const std::string config_path =
      fixture.write_config(fixture.base_config(), "sweep.json");

  const CommandResult result =
      run_cli("sweep --config " + shell_quote(config_path) +
              " --ratios 0.1 0.3 2>/dev/null");
  REQUIRE(result.status == 0);
  const json summary = json::parse(result.out);
  const json& points = summary.at("points");
  REQUIRE(points.size() == 2);
  CHECK(points[0].at("ratio").get<double>() == doctest::Approx(0.1));
  CHECK(points[1].at("ratio").get<double>() == doctest::Approx(0.3));
  CHECK(points[0].at("samples") == 8);
  CHECK(points[0].at("groups") == 2);
}

TEST_CASE("prompts ablates the requested variants") {
  CliFixture fixture;
  json config = fixture.base_config();
  config["defender"] = {{"kind", "llm"}, {"variant", "full"}};
  config["llm"] = {{"model", "mock-model"}, {"mock_script", fixture.mock_path}};
  const std::string config_path = fixture.write_config(config, "prompts.json");
  const std::string table_path = fixture.dir.file("ablation.md").string();

  const CommandResult result =
      run_cli("prompts --config " + shell_quote(config_path) +
              " --variants bare full --out " + shell_quote(table_path) +
              " 2>/dev/null");
  REQUIRE(result.status == 0);
  const json summary = json::parse(result.out);
  CHECK(summary.at("variants") == json({"bare", "full"}));
  CHECK(summary.at("rows").size() == 2);
  const std::string table = read_file(table_path);
  CHECK(table.find("| Variant |") != std::string::npos);
  CHECK(table.find("| bare |") != std::string::npos);
  CHECK(table.find("| full |") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CliFixture fixture;

  const CommandResult unknown_subcommand =
      run_cli("frobnicate 2>&1 1>/dev/null");
  CHECK(unknown_subcommand.status == 2);

  const CommandResult unknown_flag = run_cli("run --nope 2>&1 1>/dev/null");
  CHECK(unknown_flag.status == 2);
  CHECK(unknown_flag.out.find("Usage") != std::string::npos);

  const CommandResult no_subcommand = run_cli("2>&1 1>/dev/null");
  CHECK(no_subcommand.status == 2);

  const std::string broken = fixture.dir.file("broken.json").string();
  write_file(broken, "{nope");
  const CommandResult bad_config =
      run_cli("run --config " + shell_quote(broken) + " 2>&1 1>/dev/null");
  CHECK(bad_config.status == 2);
  CHECK(bad_config.out.find("config error:") != std::string::npos);

  const CommandResult missing_config =
      run_cli("run --config " +
              shell_quote(fixture.dir.file("absent.json").string()) +
              " 2>&1 1>/dev/null");
  CHECK(missing_config.status == 2);
  CHECK(missing_config.out.find("config error:") != std::string::npos);

  json incomplete = fixture.base_config();
  incomplete.erase("classifier");
  const std::string incomplete_path =
      fixture.write_config(incomplete, "incomplete.json");
  const CommandResult invalid =
      run_cli("run --config " + shell_quote(incomplete_path) +
              " 2>&1 1>/dev/null");
  CHECK(invalid.status == 2);
  CHECK(invalid.out.find("classifier") != std::string::npos);
}

TEST_CASE("runtime failures exit 1") {
  CliFixture fixture;
  json config = fixture.base_config();
  config["dataset"] = {{"path", fixture.dir.file("absent.jsonl").string()}};
  const std::string config_path = fixture.write_config(config, "gone.json");

  const CommandResult result =
      run_cli("run --config " + shell_quote(config_path) +
              " 2>&1 1>/dev/null");
  CHECK(result.status == 1);
  CHECK(result.out.find("error:") != std::string::npos);
}

TEST_CASE("help exits 0 and prints usage") {
  const CommandResult help = run_cli("--help 2>/dev/null");
  CHECK(help.status == 0);
  CHECK(help.out.find("Usage") != std::string::npos);
  CHECK(help.out.find("run") != std::string::npos);

  const CommandResult sub_help = run_cli("explain --help 2>/dev/null");
  CHECK(sub_help.status == 0);
  CHECK(sub_help.out.find("--max-exact") != std::string::npos);
}
