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

#include "genshin/classify.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "genshin/error.hpp"
#include "genshin/parallel.hpp"
#include "genshin/textops.hpp"
#include "http_util.hpp"

namespace genshin::classify {
namespace {

using nlohmann::json;

std::string ascii_lower(std::string_view text) {
  std::string out(text);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::vector<std::string> case_folded_words(const std::string& text) {
  auto tokens = textops::tokenize(text, textops::Granularity::kWord).tokens;
  for (std::string& token : tokens) token = ascii_lower(token);
  return tokens;
}

std::vector<double> posteriors_from_scores(std::vector<double> scores) {
  const double top = *std::max_element(scores.begin(), scores.end());
  double total = 0.0;
  for (double& s : scores) {
    s = std::exp(s - top);
    total += s;
  }
  for (double& s : scores) s /= total;
  return scores;
}

}  // namespace

Prediction make_prediction(const std::vector<core::ClassLabel>& labels,
                           std::vector<double> probs) {
  if (labels.empty() || probs.size() != labels.size()) {
    throw Error("make_prediction: probs must align with labels");
  }
  double total = 0.0;
  for (double p : probs) {
    if (!(p >= 0.0) || p > 1.0 + 1e-9) {
      throw Error("make_prediction: probability out of range");
    }
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-6) {
    throw Error("make_prediction: probabilities sum to " +
                std::to_string(total) + ", expected 1");
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < probs.size(); ++i) {
    if (probs[i] > probs[best]) best = i;
  }
  Prediction prediction;
  prediction.probs = std::move(probs);
  for (const core::ClassLabel& label : labels) {
    if (static_cast<std::size_t>(label.index) == best) {
      prediction.label = label;
      break;
    }
  }
  return prediction;
}

NaiveBayesClassifier NaiveBayesClassifier::train(
    const core::LabeledDataset& dataset, double smoothing) {
  if (dataset.empty()) throw Error("naive bayes: empty training set");
  if (!(smoothing > 0.0)) {
    throw ConfigError("naive bayes: smoothing must be positive");
  }
  NaiveBayesClassifier model;
  model.labels_ = dataset.labels();
  const std::size_t num_classes = model.labels_.size();
  if (num_classes < 2) {
    throw Error("naive bayes: need at least two classes");
  }

  std::vector<std::unordered_map<std::string, std::uint64_t>> counts(
      num_classes);
  std::vector<std::uint64_t> token_totals(num_classes, 0);
  std::vector<std::uint64_t> doc_counts(num_classes, 0);
  for (const core::TextInstance& instance : dataset.instances()) {
    const auto c = static_cast<std::size_t>(instance.label.index);
    ++doc_counts[c];
    for (const std::string& token : case_folded_words(instance.text)) {
      ++counts[c][token];
      ++token_totals[c];
    }
  }

  std::vector<std::string> vocabulary;
  for (const auto& class_counts : counts) {
    for (const auto& [token, _] : class_counts) vocabulary.push_back(token);
  }
  std::sort(vocabulary.begin(), vocabulary.end());
  vocabulary.erase(std::unique(vocabulary.begin(), vocabulary.end()),
                   vocabulary.end());
  if (vocabulary.empty()) throw Error("naive bayes: empty vocabulary");
  model.vocabulary_ = std::move(vocabulary);
  for (std::size_t t = 0; t < model.vocabulary_.size(); ++t) {
    model.vocab_index_[model.vocabulary_[t]] = t;
  }

  const double vocab_size = static_cast<double>(model.vocabulary_.size());
  model.log_priors_.resize(num_classes);
  model.log_likelihoods_.assign(
      num_classes, std::vector<double>(model.vocabulary_.size(), 0.0));
  for (std::size_t c = 0; c < num_classes; ++c) {
    model.log_priors_[c] = std::log(static_cast<double>(doc_counts[c]) /
                                    static_cast<double>(dataset.size()));
    // Shrink frequencies toward uniform: (f + s/V) / (1 + s). The row then
    // sums to one and is invariant under count scaling.
    for (std::size_t t = 0; t < model.vocabulary_.size(); ++t) {
      double freq = 0.0;
      if (token_totals[c] > 0) {
        const auto it = counts[c].find(model.vocabulary_[t]);
        const double count =
            it == counts[c].end() ? 0.0 : static_cast<double>(it->second);
        freq = count / static_cast<double>(token_totals[c]);
      } else {
        freq = 1.0 / vocab_size;  // degenerate class: uniform
      }
      model.log_likelihoods_[c][t] =
          token_totals[c] > 0
              ? std::log((freq + smoothing / vocab_size) / (1.0 + smoothing))
              : std::log(freq);
    }
  }
  return model;
}

Prediction NaiveBayesClassifier::predict(const std::string& text) const {
  std::vector<double> scores = log_priors_;
  for (const std::string& token : case_folded_words(text)) {
    const auto it = vocab_index_.find(token);
    if (it == vocab_index_.end()) continue;  // out of vocabulary
    for (std::size_t c = 0; c < scores.size(); ++c) {
      scores[c] += log_likelihoods_[c][it->second];
    }
  }
  return make_prediction(labels_, posteriors_from_scores(std::move(scores)));
}

json NaiveBayesClassifier::to_json() const {
  json labels = json::array();
  for (const core::ClassLabel& label : labels_) labels.push_back(label.name);
  return json{{"type", "naive-bayes"},
              {"labels", labels},
              {"log_priors", log_priors_},
              {"vocabulary", vocabulary_},
              {"log_likelihoods", log_likelihoods_}};
}

NaiveBayesClassifier NaiveBayesClassifier::from_json(const json& model_json) {
  if (!model_json.is_object() ||
      model_json.value("type", "") != "naive-bayes") {
    throw Error("naive bayes: model file must have type \"naive-bayes\"");
  }
  NaiveBayesClassifier model;
  int index = 0;
  for (const auto& name : model_json.at("labels")) {
    model.labels_.push_back({name.get<std::string>(), index++});
  }
  model.log_priors_ = model_json.at("log_priors").get<std::vector<double>>();
  model.vocabulary_ =
      model_json.at("vocabulary").get<std::vector<std::string>>();
  model.log_likelihoods_ =
      model_json.at("log_likelihoods")
          .get<std::vector<std::vector<double>>>();
  if (model.log_priors_.size() != model.labels_.size() ||
      model.log_likelihoods_.size() != model.labels_.size()) {
    throw Error("naive bayes: model arrays misaligned with labels");
  }
  for (const auto& row : model.log_likelihoods_) {
    if (row.size() != model.vocabulary_.size()) {
      throw Error("naive bayes: likelihood row misaligned with vocabulary");
    }
  }
  for (std::size_t t = 0; t < model.vocabulary_.size(); ++t) {
    model.vocab_index_[model.vocabulary_[t]] = t;
  }
  return model;
}

void NaiveBayesClassifier::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  out << to_json().dump(2) << '\n';
}

NaiveBayesClassifier NaiveBayesClassifier::load(
    const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  json model_json;
  try {
    in >> model_json;
  } catch (const json::exception& e) {
    throw Error(path.string() + ": invalid JSON: " + e.what());
  }
  return from_json(model_json);
}

RemoteClassifier::RemoteClassifier(std::string base_url,
                                   std::vector<core::ClassLabel> labels)
    : RemoteClassifier(std::move(base_url), std::move(labels), Options()) {}

RemoteClassifier::RemoteClassifier(std::string base_url,
                                   std::vector<core::ClassLabel> labels,
                                   Options options)
    : base_url_(std::move(base_url)),
      labels_(std::move(labels)),
      options_(options) {
  if (labels_.empty()) {
    throw ConfigError("remote classifier: label set must be configured");
  }
  internal::split_url(base_url_);  // validate eagerly
}

RemoteClassifier::~RemoteClassifier() = default;

Prediction RemoteClassifier::predict(const std::string& text) const {
  const internal::UrlParts url = internal::split_url(base_url_);
  const json body{{"text", text}};
  std::string last_failure;
  for (int attempt = 0; attempt <= options_.max_retries; ++attempt) {
    if (attempt > 0) internal::backoff_sleep(options_.backoff_ms, attempt - 1);
    httplib::Client client(url.origin);
    client.set_connection_timeout(options_.timeout_s);
    client.set_read_timeout(options_.timeout_s);
    auto result = client.Post(url.path_prefix + "/classify", body.dump(),
                              "application/json");
    if (!result) {
      last_failure = "transport: " + httplib::to_string(result.error());
      continue;
    }
    if (result->status == 401 || result->status == 403) {
      throw AuthError("remote classifier: HTTP " +
                      std::to_string(result->status));
    }
    if (internal::retryable_status(result->status)) {
      last_failure = "HTTP " + std::to_string(result->status);
      continue;
    }
    if (result->status != 200) {
      throw Error("remote classifier: HTTP " + std::to_string(result->status));
    }
    json reply;
    try {
      reply = json::parse(result->body);
    } catch (const json::exception& e) {
      throw Error(std::string("remote classifier: invalid JSON reply: ") +
                  e.what());
    }
    if (!reply.is_object() || !reply.contains("probs")) {
      throw Error("remote classifier: reply must contain \"probs\"");
    }
    std::vector<double> probs(labels_.size(), 0.0);
    const json& raw = reply["probs"];
    if (raw.is_array()) {
      if (raw.size() != labels_.size()) {
        throw Error("remote classifier: probs array has " +
                    std::to_string(raw.size()) + " entries, expected " +
                    std::to_string(labels_.size()));
      }
      for (std::size_t i = 0; i < probs.size(); ++i) {
        probs[i] = raw[i].get<double>();
      }
    } else if (raw.is_object()) {
      for (const core::ClassLabel& label : labels_) {
        if (!raw.contains(label.name)) {
          throw Error("remote classifier: probs object missing label \"" +
                      label.name + "\"");
        }
        probs[static_cast<std::size_t>(label.index)] =
            raw[label.name].get<double>();
      }
    } else {
      throw Error("remote classifier: probs must be an array or object");
    }
    return make_prediction(labels_, std::move(probs));
  }
  throw TransportError("remote classifier: retries exhausted (" +
                       last_failure + ")");
}

ScriptedClassifier::ScriptedClassifier(std::vector<core::ClassLabel> labels,
                                       std::vector<Rule> rules,
                                       std::string default_label)
    : labels_(std::move(labels)),
      rules_(std::move(rules)),
      default_label_(std::move(default_label)) {
  if (labels_.empty()) throw ConfigError("scripted classifier: no labels");
  auto known = [&](const std::string& name) {
    return std::any_of(labels_.begin(), labels_.end(),
                       [&](const auto& l) { return l.name == name; });
  };
  if (!known(default_label_)) {
    throw ConfigError("scripted classifier: unknown default label \"" +
                      default_label_ + "\"");
  }
  for (const Rule& rule : rules_) {
    if (!known(rule.label)) {
      throw ConfigError("scripted classifier: unknown rule label \"" +
                        rule.label + "\"");
    }
    if (!rule.probs.empty() && rule.probs.size() != labels_.size()) {
      throw ConfigError("scripted classifier: rule probs misaligned");
    }
  }
}

ScriptedClassifier ScriptedClassifier::load(
    const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::vector<core::ClassLabel> labels;
  std::vector<Rule> rules;
  std::string default_label;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json record;
    try {
      record = json::parse(line);
    } catch (const json::exception& e) {
      throw Error(path.string() + ":" + std::to_string(line_number) +
                  ": invalid JSON: " + e.what());
    }
    if (record.contains("default")) {
      default_label = record["default"].get<std::string>();
      int index = 0;
      for (const auto& name : record.at("labels")) {
        labels.push_back({name.get<std::string>(), index++});
      }
    } else {
      Rule rule;
      rule.contains = record.at("contains").get<std::string>();
      rule.label = record.at("label").get<std::string>();
      if (record.contains("probs")) {
        rule.probs = record["probs"].get<std::vector<double>>();
      }
      rules.push_back(std::move(rule));
    }
  }
  if (labels.empty()) {
    throw Error(path.string() +
                ": script must contain a {\"default\", \"labels\"} record");
  }
  return ScriptedClassifier(std::move(labels), std::move(rules),
                            std::move(default_label));
}

Prediction ScriptedClassifier::predict(const std::string& text) const {
  auto predict_label = [&](const std::string& name,
                           const std::vector<double>& probs) {
    if (!probs.empty()) return make_prediction(labels_, probs);
    std::vector<double> filled(labels_.size());
    const double rest =
        labels_.size() > 1 ? 0.1 / static_cast<double>(labels_.size() - 1)
                           : 0.0;
    for (const core::ClassLabel& label : labels_) {
      filled[static_cast<std::size_t>(label.index)] =
          label.name == name ? (labels_.size() > 1 ? 0.9 : 1.0) : rest;
    }
    return make_prediction(labels_, std::move(filled));
  };
  for (const Rule& rule : rules_) {
    if (text.find(rule.contains) != std::string::npos) {
      return predict_label(rule.label, rule.probs);
    }
  }
  return predict_label(default_label_, {});
}

double accuracy(const Classifier& classifier,
                const core::LabeledDataset& dataset, int threads) {
  if (dataset.empty()) throw Error("accuracy: empty dataset");
  const int nthreads =
      effective_threads(threads, classifier.concurrency_limit());
  const auto n = static_cast<std::int64_t>(dataset.size());
  std::vector<char> hits(dataset.size(), 0);
  std::vector<std::string> errors(dataset.size());
#pragma omp parallel for schedule(dynamic, 4) num_threads(nthreads)
  for (std::int64_t i = 0; i < n; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    try {
      const Prediction prediction = classifier.predict(dataset[idx].text);
      hits[idx] = prediction.label.index == dataset[idx].label.index ? 1 : 0;
    } catch (const std::exception& e) {
      errors[idx] = e.what();
    }
  }
  for (std::size_t i = 0; i < errors.size(); ++i) {
    if (!errors[i].empty()) {
      throw Error("accuracy: instance \"" + dataset[i].id +
                  "\": " + errors[i]);
    }
  }
  std::size_t correct = 0;
  for (char h : hits) correct += h;
  return static_cast<double>(correct) / static_cast<double>(dataset.size());
}

}  // namespace genshin::classify
