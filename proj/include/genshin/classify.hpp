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

#ifndef GENSHIN_CLASSIFY_HPP_
#define GENSHIN_CLASSIFY_HPP_

#include <filesystem>
#include <functional>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "genshin/core.hpp"

namespace genshin::classify {

struct Prediction {
  core::ClassLabel label;
  std::vector<double> probs;  // indexed by ClassLabel::index, sums to 1
};

// Validates the distribution and picks the argmax label (ties go to the
// lowest class index).
Prediction make_prediction(const std::vector<core::ClassLabel>& labels,
                           std::vector<double> probs);

// A text classifier. predict() must be safe to call from several threads at
// once; backends with limited capacity advertise it via concurrency_limit().
class Classifier {
 public:
  virtual ~Classifier() = default;
  virtual Prediction predict(const std::string& text) const = 0;
  virtual const std::vector<core::ClassLabel>& labels() const = 0;
  virtual std::string name() const = 0;

  // Maximum number of concurrent predict() calls the backend tolerates;
  // 0 means unbounded, 1 means strictly serial.
  virtual int concurrency_limit() const { return 0; }
};

// Word-level multinomial naive Bayes over case-folded word tokens.
// Smoothing shrinks token frequencies toward the uniform distribution with
// weight s/(1+s): P(t|c) = (freq(t|c) + s/|V|) / (1 + s). Parameters
// therefore depend only on frequencies, so scaling every count by a
// constant leaves the model unchanged. Unknown tokens are skipped at
// prediction time; a text with no known tokens falls back to the priors.
class NaiveBayesClassifier final : public Classifier {
 public:
  static NaiveBayesClassifier train(const core::LabeledDataset& dataset,
                                    double smoothing = 1.0);
  static NaiveBayesClassifier load(const std::filesystem::path& path);
  static NaiveBayesClassifier from_json(const nlohmann::json& model);

  void save(const std::filesystem::path& path) const;
  nlohmann::json to_json() const;

  Prediction predict(const std::string& text) const override;
  const std::vector<core::ClassLabel>& labels() const override {
    return labels_;
  }
  std::string name() const override { return "naive-bayes"; }

  const std::vector<double>& log_priors() const { return log_priors_; }
  // Log-likelihood rows per class, aligned with vocabulary().
  const std::vector<std::vector<double>>& log_likelihoods() const {
    return log_likelihoods_;
  }
  const std::vector<std::string>& vocabulary() const { return vocabulary_; }

 private:
  NaiveBayesClassifier() = default;

  std::vector<core::ClassLabel> labels_;
  std::vector<double> log_priors_;
  std::vector<std::string> vocabulary_;
  std::unordered_map<std::string, std::size_t> vocab_index_;
  std::vector<std::vector<double>> log_likelihoods_;
};

// Client for a remote classification service speaking
// POST <base>/classify {"text": ...} -> {"label": ..., "probs": ...}.
// probs may be an array indexed by class or an object keyed by label name.
class RemoteClassifier final : public Classifier {
 public:
  struct Options {
    int max_retries = 3;
    int backoff_ms = 250;
    int timeout_s = 30;
    int concurrency = 4;
  };

  RemoteClassifier(std::string base_url, std::vector<core::ClassLabel> labels);
  RemoteClassifier(std::string base_url, std::vector<core::ClassLabel> labels,
                   Options options);
  ~RemoteClassifier() override;

  Prediction predict(const std::string& text) const override;
  const std::vector<core::ClassLabel>& labels() const override {
    return labels_;
  }
  std::string name() const override { return "remote"; }
  int concurrency_limit() const override { return options_.concurrency; }

 private:
  std::string base_url_;
  std::vector<core::ClassLabel> labels_;
  Options options_;
};

// Deterministic mock driven by substring rules; used by tests and offline
// runs. Script format (JSONL): {"contains": ..., "label": ...,
// "probs": [...](optional)} plus one {"default": ..., "labels": [...]}
// record. First matching rule wins.
class ScriptedClassifier final : public Classifier {
 public:
  struct Rule {
    std::string contains;
    std::string label;
    std::vector<double> probs;  // empty = 0.9 on the rule's label
  };

  ScriptedClassifier(std::vector<core::ClassLabel> labels,
                     std::vector<Rule> rules, std::string default_label);
  static ScriptedClassifier load(const std::filesystem::path& path);

  Prediction predict(const std::string& text) const override;
  const std::vector<core::ClassLabel>& labels() const override {
    return labels_;
  }
  std::string name() const override { return "scripted"; }

 private:
  std::vector<core::ClassLabel> labels_;
  std::vector<Rule> rules_;
  std::string default_label_;
};

// Adapts an arbitrary function; test helper.
class FunctionClassifier final : public Classifier {
 public:
  using Fn = std::function<Prediction(const std::string&)>;

  FunctionClassifier(std::vector<core::ClassLabel> labels, Fn fn,
                     int concurrency = 0)
      : labels_(std::move(labels)),
        fn_(std::move(fn)),
        concurrency_(concurrency) {}

  Prediction predict(const std::string& text) const override {
    return fn_(text);
  }
  const std::vector<core::ClassLabel>& labels() const override {
    return labels_;
  }
  std::string name() const override { return "function"; }
  int concurrency_limit() const override { return concurrency_; }

 private:
  std::vector<core::ClassLabel> labels_;
  Fn fn_;
  int concurrency_;
};

// Fraction of instances whose predicted label matches the gold label.
double accuracy(const Classifier& classifier,
                const core::LabeledDataset& dataset, int threads = 0);

}  // namespace genshin::classify

#endif  // GENSHIN_CLASSIFY_HPP_
