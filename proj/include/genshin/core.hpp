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

#ifndef GENSHIN_CORE_HPP_
#define GENSHIN_CORE_HPP_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace genshin::core {

struct ClassLabel {
  std::string name;
  int index = 0;

  friend bool operator==(const ClassLabel& a, const ClassLabel& b) {
    return a.index == b.index && a.name == b.name;
  }
};

struct TextInstance {
  std::string id;
  std::string text;
  ClassLabel label;
};

enum class PipelineState { kOriginal, kAttacked, kRecovered };

std::string_view pipeline_state_name(PipelineState state);

// An ordered collection of labeled texts. Labels are registered in order of
// first appearance; instance ids are unique and texts non-empty.
class LabeledDataset {
 public:
  LabeledDataset() = default;
  explicit LabeledDataset(std::string name) : name_(std::move(name)) {}

  // Registers the label on first use and appends the instance. Throws on a
  // duplicate id or empty text.
  void add(std::string id, std::string text, const std::string& label_name);
  void add(TextInstance instance);

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }
  const std::vector<TextInstance>& instances() const { return instances_; }
  const TextInstance& operator[](std::size_t i) const { return instances_[i]; }
  std::size_t size() const { return instances_.size(); }
  bool empty() const { return instances_.empty(); }

  const std::vector<ClassLabel>& labels() const { return labels_; }
  const ClassLabel* find_label(std::string_view label_name) const;

  // Union of word tokens across all texts, in first-seen order.
  std::vector<std::string> word_vocabulary() const;

 private:
  std::string name_;
  std::vector<TextInstance> instances_;
  std::vector<ClassLabel> labels_;
};

enum class FileFormat { kJsonl, kCsv };

// Infers the format from the extension (.jsonl/.ndjson vs .csv).
FileFormat infer_format(const std::filesystem::path& path);

// JSONL: one object per line with keys "text", "label" and optional "id"
// (missing ids become "<dataset>-<line>"). CSV: RFC 4180 with a header row
// naming columns text, label and optionally id. Malformed records raise an
// Error naming the line.
LabeledDataset load_dataset(const std::filesystem::path& path,
                            FileFormat format);
LabeledDataset load_dataset(const std::filesystem::path& path);

void save_jsonl(const LabeledDataset& dataset,
                const std::filesystem::path& path);

// Draws per_class instances per label, restricted to texts whose scalar
// count lies in [min_len, max_len]. Throws when a class cannot fill its
// quota. Order follows the original dataset order. A max_len of 0 means no
// upper bound.
LabeledDataset sample_balanced_subset(const LabeledDataset& dataset,
                                      std::size_t per_class,
                                      std::size_t min_len, std::size_t max_len,
                                      std::uint64_t seed);

// Shuffles and splits into k near-equal groups (sizes differ by at most
// one). Every instance lands in exactly one group.
std::vector<LabeledDataset> split_groups(const LabeledDataset& dataset,
                                         std::size_t k, std::uint64_t seed);

// Synthetic unlabeled-content dataset: n sentences built from the given
// vocabulary, each at most max_len scalars long, labels drawn uniformly
// over {"A", "B"}. Used by smoke tests and the sweep harness.
LabeledDataset generate_random_dataset(std::size_t n, std::size_t max_len,
                                       const std::vector<std::string>& vocab,
                                       std::uint64_t seed);

// Bundled list of common English words (lowercase, sorted, deduplicated).
const std::vector<std::string>& common_words();

}  // namespace genshin::core

#endif  // GENSHIN_CORE_HPP_
