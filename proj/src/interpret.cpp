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

#include "genshin/interpret.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "genshin/error.hpp"
#include "genshin/parallel.hpp"
#include "genshin/rng.hpp"

namespace genshin::interpret {
namespace {

using nlohmann::json;

constexpr int kHardExactLimit = 20;  // 2^20 coalition values, 8 MiB

double binomial(int n, int k) {
  double result = 1.0;
  for (int i = 1; i <= k; ++i) {
    result = result * static_cast<double>(n - k + i) / static_cast<double>(i);
  }
  return result;
}

std::uint64_t factorial_capped(int n, std::uint64_t cap) {
  std::uint64_t result = 1;
  for (int i = 2; i <= n; ++i) {
    if (result > cap / static_cast<std::uint64_t>(i)) return cap;
    result *= static_cast<std::uint64_t>(i);
  }
  return result;
}

}  // namespace

struct CoalitionValue::Memo {
  mutable std::shared_mutex mutex;
  mutable std::unordered_map<std::string, double> values;
  mutable std::uint64_t evaluations = 0;
};

CoalitionValue::CoalitionValue(std::vector<std::string> tokens,
                               const classify::Classifier& classifier,
                               core::ClassLabel target_class, Masking masking,
                               std::string placeholder)
    : tokens_(std::move(tokens)),
      classifier_(classifier),
      target_class_(std::move(target_class)),
      masking_(masking),
      placeholder_(std::move(placeholder)),
      memo_(std::make_unique<Memo>()) {}

CoalitionValue::~CoalitionValue() = default;

std::string CoalitionValue::render(const std::vector<bool>& members) const {
  if (members.size() != tokens_.size()) {
    throw Error("coalition membership misaligned with tokens");
  }
  std::string text;
  bool first = true;
  for (std::size_t i = 0; i < tokens_.size(); ++i) {
    const std::string* piece = nullptr;
    if (members[i]) {
      piece = &tokens_[i];
    } else if (masking_ == Masking::kPlaceholder) {
      piece = &placeholder_;
    } else {
      continue;  // deletion masking drops the token
    }
    if (!first) text.push_back(' ');
    text += *piece;
    first = false;
  }
  return text;
}

double CoalitionValue::operator()(const std::vector<bool>& members) const {
  const std::string text = render(members);
  {
    std::shared_lock lock(memo_->mutex);
    const auto it = memo_->values.find(text);
    if (it != memo_->values.end()) return it->second;
  }
  const classify::Prediction prediction = classifier_.predict(text);
  const auto index = static_cast<std::size_t>(target_class_.index);
  if (index >= prediction.probs.size()) {
    throw Error("target class index " + std::to_string(target_class_.index) +
                " outside classifier output");
  }
  const double value = prediction.probs[index];
  {
    std::unique_lock lock(memo_->mutex);
    if (memo_->values.emplace(text, value).second) ++memo_->evaluations;
  }
  return value;
}

std::uint64_t CoalitionValue::evaluations() const {
  std::shared_lock lock(memo_->mutex);
  return memo_->evaluations;
}

double value_function(const std::vector<std::string>& tokens,
                      const std::vector<bool>& members,
                      const classify::Classifier& classifier,
                      const core::ClassLabel& target_class, Masking masking,
                      const std::string& placeholder) {
  const CoalitionValue value(tokens, classifier, target_class, masking,
                             placeholder);
  return value(members);
}

namespace {

std::vector<double> shapley_exact_impl(
    int n, const std::function<double(std::uint64_t)>& value_of_mask,
    int threads, bool use_parallel) {
  if (n < 0 || n > kHardExactLimit) {
    throw Error("exact Shapley limited to " +
                std::to_string(kHardExactLimit) + " tokens, got " +
                std::to_string(n));
  }
  if (n == 0) return {};
  const std::uint64_t total = std::uint64_t{1} << n;
  std::vector<double> table(total);
  const int nthreads = use_parallel ? effective_threads(threads) : 1;
  const auto total_signed = static_cast<std::int64_t>(total);
#pragma omp parallel for schedule(dynamic, 64) num_threads(nthreads) \
    if (use_parallel)
  for (std::int64_t mask = 0; mask < total_signed; ++mask) {
    table[static_cast<std::uint64_t>(mask)] =
        value_of_mask(static_cast<std::uint64_t>(mask));
  }

  // weight(s) = s! (n-s-1)! / n! = 1 / (n * C(n-1, s))
  std::vector<double> weight(static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s) {
    weight[static_cast<std::size_t>(s)] =
        1.0 / (static_cast<double>(n) * binomial(n - 1, s));
  }

  std::vector<double> phi(static_cast<std::size_t>(n), 0.0);
#pragma omp parallel for schedule(static) num_threads(nthreads) if (use_parallel)
  for (std::int64_t i = 0; i < n; ++i) {
    const std::uint64_t bit = std::uint64_t{1} << i;
    double sum = 0.0;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      if (mask & bit) continue;
      sum += weight[static_cast<std::size_t>(std::popcount(mask))] *
             (table[mask | bit] - table[mask]);
    }
    phi[static_cast<std::size_t>(i)] = sum;
  }
  return phi;
}

}  // namespace

std::vector<double> shapley_exact_values(
    int n, const std::function<double(std::uint64_t)>& value_of_mask,
    int threads) {
  return shapley_exact_impl(n, value_of_mask, threads, true);
}

std::vector<double> shapley_exact_values_serial(
    int n, const std::function<double(std::uint64_t)>& value_of_mask) {
  return shapley_exact_impl(n, value_of_mask, 1, false);
}

std::vector<double> shapley_sampled_values(
    int n, const std::function<double(const std::vector<bool>&)>& value_of,
    std::uint64_t samples, std::uint64_t seed, int threads,
    std::uint64_t* samples_used) {
  if (n < 0) throw Error("negative token count");
  if (n == 0) {
    if (samples_used != nullptr) *samples_used = 0;
    return {};
  }
  if (samples == 0) throw Error("sample count must be positive");

  const auto size = static_cast<std::size_t>(n);
  const std::uint64_t permutations = factorial_capped(n, samples);
  const bool dense = permutations <= samples;
  const std::uint64_t effective = dense ? permutations : samples;
  if (samples_used != nullptr) *samples_used = effective;

  // One permutation per sample. Dense mode walks all n! permutations in
  // lexicographic order; otherwise each sample draws its own permutation
  // from a per-sample substream, keeping results independent of the thread
  // count.
  auto permutation_for = [&](std::uint64_t sample) {
    std::vector<int> order(size);
    std::iota(order.begin(), order.end(), 0);
    if (dense) {
      for (std::uint64_t step = 0; step < sample; ++step) {
        std::next_permutation(order.begin(), order.end());
      }
    } else {
      Rng rng(Rng::derive_seed(seed, sample));
      for (std::size_t i = size; i > 1; --i) {
        std::swap(order[i - 1], order[rng.index(i)]);
      }
    }
    return order;
  };

  const int nthreads = effective_threads(threads);
  std::vector<double> phi(size, 0.0);
  constexpr std::uint64_t kBlock = 2048;
  std::vector<std::vector<double>> marginals(
      static_cast<std::size_t>(std::min(kBlock, effective)));
  for (std::uint64_t begin = 0; begin < effective; begin += kBlock) {
    const std::uint64_t end = std::min(begin + kBlock, effective);
    const auto count = static_cast<std::int64_t>(end - begin);
#pragma omp parallel for schedule(dynamic) num_threads(nthreads)
    for (std::int64_t row = 0; row < count; ++row) {
      const std::uint64_t sample = begin + static_cast<std::uint64_t>(row);
      const std::vector<int> order = permutation_for(sample);
      std::vector<double> gains(size);
      std::vector<bool> members(size, false);
      double previous = value_of(members);
      for (int token : order) {
        members[static_cast<std::size_t>(token)] = true;
        const double current = value_of(members);
        gains[static_cast<std::size_t>(token)] = current - previous;
        previous = current;
      }
      marginals[static_cast<std::size_t>(row)] = std::move(gains);
    }
    // Serial reduction in sample order keeps sums deterministic.
    for (std::int64_t row = 0; row < count; ++row) {
      const auto& gains = marginals[static_cast<std::size_t>(row)];
      for (std::size_t i = 0; i < size; ++i) phi[i] += gains[i];
    }
  }
  for (double& value : phi) value /= static_cast<double>(effective);
  return phi;
}

Attribution attribute(const std::string& text,
                      const classify::Classifier& classifier,
                      const InterpreterConfig& config,
                      std::optional<core::ClassLabel> target_class) {
  if (config.exact_limit < 0 || config.exact_limit > kHardExactLimit) {
    throw ConfigError("interpreter exact_limit must lie in [0, " +
                      std::to_string(kHardExactLimit) + "]");
  }
  Attribution attribution;
  attribution.tokens =
      textops::tokenize(text, textops::Granularity::kWord).tokens;
  attribution.target_class =
      target_class ? *target_class : classifier.predict(text).label;
  attribution.seed = config.seed;

  const CoalitionValue value(attribution.tokens, classifier,
                             attribution.target_class, config.masking,
                             config.placeholder);
  const auto n = static_cast<int>(attribution.tokens.size());
  attribution.base_value = value(std::vector<bool>(attribution.tokens.size(),
                                                   false));
  attribution.full_value = value(std::vector<bool>(attribution.tokens.size(),
                                                   true));
  if (n == 0) {
    attribution.exact = true;
    return attribution;
  }
  if (n <= config.exact_limit) {
    auto value_of_mask = [&](std::uint64_t mask) {
      std::vector<bool> members(attribution.tokens.size(), false);
      for (int i = 0; i < n; ++i) {
        if (mask & (std::uint64_t{1} << i)) {
          members[static_cast<std::size_t>(i)] = true;
        }
      }
      return value(members);
    };
    attribution.phi = shapley_exact_values(n, value_of_mask, config.threads);
    attribution.exact = true;
  } else {
    std::uint64_t used = 0;
    attribution.phi = shapley_sampled_values(
        n, std::cref(value), config.samples, config.seed, config.threads,
        &used);
    attribution.exact = false;
    attribution.samples = used;
  }
  return attribution;
}

std::vector<double> normalize_importance(const std::vector<double>& phi) {
  double peak = 0.0;
  for (double value : phi) peak = std::max(peak, std::abs(value));
  std::vector<double> normalized(phi.size(), 0.0);
  if (peak == 0.0) return normalized;
  for (std::size_t i = 0; i < phi.size(); ++i) {
    normalized[i] = std::abs(phi[i]) / peak;
  }
  return normalized;
}

json Attribution::to_json() const {
  return json{{"tokens", tokens},
              {"phi", phi},
              {"base_value", base_value},
              {"full_value", full_value},
              {"target_class",
               json{{"name", target_class.name}, {"index", target_class.index}}},
              {"method", exact ? "exact" : "sampled"},
              {"samples", samples},
              {"seed", seed}};
}

Attribution Attribution::from_json(const json& object) {
  Attribution attribution;
  attribution.tokens = object.at("tokens").get<std::vector<std::string>>();
  attribution.phi = object.at("phi").get<std::vector<double>>();
  attribution.base_value = object.at("base_value").get<double>();
  attribution.full_value = object.at("full_value").get<double>();
  attribution.target_class.name =
      object.at("target_class").at("name").get<std::string>();
  attribution.target_class.index =
      object.at("target_class").at("index").get<int>();
  attribution.exact = object.at("method").get<std::string>() == "exact";
  attribution.samples = object.at("samples").get<std::uint64_t>();
  attribution.seed = object.at("seed").get<std::uint64_t>();
  if (attribution.phi.size() != attribution.tokens.size()) {
    throw Error("attribution phi misaligned with tokens");
  }
  return attribution;
}

}  // namespace genshin::interpret
