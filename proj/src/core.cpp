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

#include "genshin/core.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "genshin/error.hpp"
#include "genshin/rng.hpp"
#include "genshin/textops.hpp"
#include "genshin/utf8.hpp"

namespace genshin::core {
namespace {

using nlohmann::json;

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

bool is_blank(std::string_view line) {
  return line.find_first_not_of(" \t\r") == std::string_view::npos;
}

LabeledDataset load_jsonl(const std::filesystem::path& path) {
  LabeledDataset dataset(path.stem().string());
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (is_blank(line)) continue;
    json record;
    try {
      record = json::parse(line);
    } catch (const json::exception& e) {
      throw Error(path.string() + ":" + std::to_string(line_number) +
                  ": invalid JSON: " + e.what());
    }
    if (!record.is_object() || !record.contains("text") ||
        !record["text"].is_string() || !record.contains("label") ||
        !record["label"].is_string()) {
      throw Error(path.string() + ":" + std::to_string(line_number) +
                  ": record must be an object with string \"text\" and "
                  "\"label\"");
    }
    std::string id;
    if (record.contains("id")) {
      if (record["id"].is_string()) {
        id = record["id"].get<std::string>();
      } else if (record["id"].is_number_integer()) {
        id = std::to_string(record["id"].get<long long>());
      } else {
        throw Error(path.string() + ":" + std::to_string(line_number) +
                    ": \"id\" must be a string or integer");
      }
    } else {
      id = dataset.name() + "-" + std::to_string(line_number);
    }
    try {
      dataset.add(std::move(id), record["text"].get<std::string>(),
                  record["label"].get<std::string>());
    } catch (const Error& e) {
      throw Error(path.string() + ":" + std::to_string(line_number) + ": " +
                  e.what());
    }
  }
  return dataset;
}

// RFC 4180 parser: quoted fields may contain commas, escaped quotes ("")
// and newlines.
std::vector<std::vector<std::string>> parse_csv(const std::string& content,
                                                const std::string& origin) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool in_quotes = false;
  bool field_was_quoted = false;
  std::size_t i = 0;
  auto end_field = [&] {
    row.push_back(std::move(field));
    field.clear();
    field_was_quoted = false;
  };
  auto end_row = [&] {
    end_field();
    rows.push_back(std::move(row));
    row.clear();
  };
  while (i < content.size()) {
    const char c = content[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < content.size() && content[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        field.push_back(c);
      }
    } else if (c == '"') {
      if (!field.empty()) {
        throw Error(origin + ": stray quote in unquoted field (row " +
                    std::to_string(rows.size() + 1) + ")");
      }
      in_quotes = true;
      field_was_quoted = true;
    } else if (c == ',') {
      end_field();
    } else if (c == '\r' && i + 1 < content.size() && content[i + 1] == '\n') {
      end_row();
      ++i;
    } else if (c == '\n') {
      end_row();
    } else {
      field.push_back(c);
    }
    ++i;
  }
  if (in_quotes) {
    throw Error(origin + ": unterminated quoted field");
  }
  if (!field.empty() || field_was_quoted || !row.empty()) end_row();
  return rows;
}

LabeledDataset load_csv(const std::filesystem::path& path) {
  LabeledDataset dataset(path.stem().string());
  const auto rows = parse_csv(read_file(path), path.string());
  if (rows.empty()) return dataset;
  const auto& header = rows.front();
  std::unordered_map<std::string, std::size_t> columns;
  for (std::size_t j = 0; j < header.size(); ++j) columns[header[j]] = j;
  if (!columns.count("text") || !columns.count("label")) {
    throw Error(path.string() + ": header must name columns text,label[,id]");
  }
  const std::size_t text_col = columns["text"];
  const std::size_t label_col = columns["label"];
  const bool has_id = columns.count("id") != 0;
  const std::size_t id_col = has_id ? columns["id"] : 0;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& fields = rows[r];
    if (fields.size() == 1 && fields[0].empty()) continue;  // trailing newline
    const std::size_t needed =
        std::max({text_col, label_col, has_id ? id_col : std::size_t{0}});
    if (fields.size() <= needed || fields[label_col].empty()) {
      throw Error(path.string() + ": row " + std::to_string(r + 1) +
                  ": missing label column");
    }
    std::string id = has_id && !fields[id_col].empty()
                         ? fields[id_col]
                         : dataset.name() + "-" + std::to_string(r + 1);
    try {
      dataset.add(std::move(id), fields[text_col], fields[label_col]);
    } catch (const Error& e) {
      throw Error(path.string() + ": row " + std::to_string(r + 1) + ": " +
                  e.what());
    }
  }
  return dataset;
}

}  // namespace

std::string_view pipeline_state_name(PipelineState state) {
  switch (state) {
    case PipelineState::kOriginal:
      return "original";
    case PipelineState::kAttacked:
      return "attacked";
    case PipelineState::kRecovered:
      return "recovered";
  }
  return "unknown";
}

void LabeledDataset::add(std::string id, std::string text,
                         const std::string& label_name) {
  if (text.empty()) {
    throw Error("instance \"" + id + "\": empty text");
  }
  if (label_name.empty()) {
    throw Error("instance \"" + id + "\": empty label");
  }
  for (const TextInstance& existing : instances_) {
    if (existing.id == id) {
      throw Error("duplicate instance id \"" + id + "\"");
    }
  }
  const ClassLabel* label = find_label(label_name);
  if (label == nullptr) {
    labels_.push_back({label_name, static_cast<int>(labels_.size())});
    label = &labels_.back();
  }
  instances_.push_back({std::move(id), std::move(text), *label});
}

void LabeledDataset::add(TextInstance instance) {
  add(std::move(instance.id), std::move(instance.text), instance.label.name);
}

const ClassLabel* LabeledDataset::find_label(std::string_view label_name) const {
  for (const ClassLabel& label : labels_) {
    if (label.name == label_name) return &label;
  }
  return nullptr;
}

std::vector<std::string> LabeledDataset::word_vocabulary() const {
  std::vector<std::string> words;
  std::unordered_set<std::string> seen;
  for (const TextInstance& instance : instances_) {
    for (std::string& token :
         textops::tokenize(instance.text, textops::Granularity::kWord)
             .tokens) {
      if (seen.insert(token).second) words.push_back(std::move(token));
    }
  }
  return words;
}

FileFormat infer_format(const std::filesystem::path& path) {
  const std::string ext = path.extension().string();
  if (ext == ".csv") return FileFormat::kCsv;
  if (ext == ".jsonl" || ext == ".ndjson" || ext == ".json") {
    return FileFormat::kJsonl;
  }
  throw ConfigError("cannot infer dataset format from \"" + path.string() +
                    "\" (expected .jsonl or .csv)");
}

LabeledDataset load_dataset(const std::filesystem::path& path,
                            FileFormat format) {
  LabeledDataset dataset =
      format == FileFormat::kJsonl ? load_jsonl(path) : load_csv(path);
  if (dataset.empty()) throw Error("empty dataset: " + path.string());
  return dataset;
}

LabeledDataset load_dataset(const std::filesystem::path& path) {
  return load_dataset(path, infer_format(path));
}

void save_jsonl(const LabeledDataset& dataset,
                const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  for (const TextInstance& instance : dataset.instances()) {
    json record{{"id", instance.id},
                {"label", instance.label.name},
                {"text", instance.text}};
    out << record.dump() << '\n';
  }
}

LabeledDataset sample_balanced_subset(const LabeledDataset& dataset,
                                      std::size_t per_class,
                                      std::size_t min_len, std::size_t max_len,
                                      std::uint64_t seed) {
  std::map<int, std::vector<std::size_t>> eligible;
  for (const ClassLabel& label : dataset.labels()) eligible[label.index];
  for (std::size_t i = 0; i < dataset.size(); ++i) {
    const std::size_t len = utf8::scalar_count(dataset[i].text);
    if (len < min_len) continue;
    if (max_len != 0 && len > max_len) continue;
    eligible[dataset[i].label.index].push_back(i);
  }
  std::vector<std::size_t> chosen;
  for (auto& [label_index, indices] : eligible) {
    if (indices.size() < per_class) {
      throw Error("sample_balanced_subset: class \"" +
                  dataset.labels()[label_index].name + "\" has " +
                  std::to_string(indices.size()) +
                  " eligible instances, need " + std::to_string(per_class));
    }
    Rng rng = Rng::for_instance(seed, "subset-" +
                                          dataset.labels()[label_index].name);
    rng.shuffle(indices);
    chosen.insert(chosen.end(), indices.begin(), indices.begin() + per_class);
  }
  std::sort(chosen.begin(), chosen.end());
  LabeledDataset subset(dataset.name());
  for (std::size_t i : chosen) subset.add(dataset[i]);
  return subset;
}

std::vector<LabeledDataset> split_groups(const LabeledDataset& dataset,
                                         std::size_t k, std::uint64_t seed) {
  if (k == 0) throw Error("split_groups: k must be positive");
  if (k > dataset.size()) {
    throw Error("split_groups: k=" + std::to_string(k) +
                " exceeds dataset size " + std::to_string(dataset.size()));
  }
  std::vector<std::size_t> order(dataset.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  Rng rng = Rng::for_instance(seed, "split-" + dataset.name());
  rng.shuffle(order);
  std::vector<std::vector<std::size_t>> buckets(k);
  for (std::size_t i = 0; i < order.size(); ++i) {
    buckets[i % k].push_back(order[i]);
  }
  std::vector<LabeledDataset> groups;
  groups.reserve(k);
  for (std::size_t g = 0; g < k; ++g) {
    std::sort(buckets[g].begin(), buckets[g].end());
    LabeledDataset group(dataset.name() + "-g" + std::to_string(g));
    for (std::size_t i : buckets[g]) group.add(dataset[i]);
    groups.push_back(std::move(group));
  }
  return groups;
}

LabeledDataset generate_random_dataset(std::size_t n, std::size_t max_len,
                                       const std::vector<std::string>& vocab,
                                       std::uint64_t seed) {
  if (vocab.empty()) {
    throw Error("generate_random_dataset: empty vocabulary");
  }
  std::vector<std::pair<std::string, std::size_t>> words;
  std::size_t shortest = 0;
  for (const std::string& word : vocab) {
    const std::size_t len = utf8::scalar_count(word);
    if (len == 0 || (max_len != 0 && len > max_len)) continue;
    if (shortest == 0 || len < shortest) shortest = len;
    words.emplace_back(word, len);
  }
  if (words.empty()) {
    throw Error("generate_random_dataset: no vocabulary word fits max_len " +
                std::to_string(max_len));
  }
  LabeledDataset dataset("random");
  Rng rng = Rng::for_instance(seed, "generate");
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t target =
        shortest + rng.below(max_len - shortest + 1);
    std::string sentence;
    std::size_t used = 0;
    while (true) {
      const auto& [word, len] = words[rng.index(words.size())];
      const std::size_t cost = sentence.empty() ? len : len + 1;
      if (used + cost > target) {
        if (sentence.empty()) continue;  // first word must fit
        break;
      }
      if (!sentence.empty()) sentence.push_back(' ');
      sentence += word;
      used += cost;
    }
    dataset.add("random-" + std::to_string(i + 1), std::move(sentence),
                rng.below(2) == 0 ? "A" : "B");
  }
  return dataset;
}

}  // namespace genshin::core
