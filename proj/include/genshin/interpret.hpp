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

#ifndef GENSHIN_INTERPRET_HPP_
#define GENSHIN_INTERPRET_HPP_

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "genshin/classify.hpp"
#include "genshin/core.hpp"
#include "genshin/textops.hpp"

namespace genshin::interpret {

// How absent tokens are rendered when a coalition's text is built.
enum class Masking { kDeletion, kPlaceholder };

struct InterpreterConfig {
  Masking masking = Masking::kDeletion;
  std::string placeholder = "<mask>";
  // Token counts up to this bound are solved exactly (2^n coalitions).
  int exact_limit = 12;
  // Permutation samples for the estimator above the bound.
  std::uint64_t samples = 200;
  std::uint64_t seed = 42;
  int threads = 0;
};

struct Attribution {
  std::vector<std::string> tokens;  // word granularity
  std::vector<double> phi;          // one value per token
  double base_value = 0.0;          // value of the empty coalition
  double full_value = 0.0;          // value of the full token set
  core::ClassLabel target_class;
  bool exact = true;
  std::uint64_t samples = 0;  // estimator only; n! when enumeration is dense
  std::uint64_t seed = 0;

  nlohmann::json to_json() const;
  static Attribution from_json(const nlohmann::json& object);
};

// Coalition value: the classifier's probability for target_class on the
// text built from the member tokens (order preserved, joined by single
// spaces; deletion masking drops absent tokens, placeholder masking writes
// the placeholder instead). Values are memoized by rendered text, so each
// distinct coalition text hits the classifier once.
class CoalitionValue {
 public:
  CoalitionValue(std::vector<std::string> tokens,
                 const classify::Classifier& classifier,
                 core::ClassLabel target_class, Masking masking,
                 std::string placeholder);
  ~CoalitionValue();
  CoalitionValue(const CoalitionValue&) = delete;
  CoalitionValue& operator=(const CoalitionValue&) = delete;

  double operator()(const std::vector<bool>& members) const;
  std::string render(const std::vector<bool>& members) const;

  std::size_t size() const { return tokens_.size(); }
  // Distinct classifier calls so far.
  std::uint64_t evaluations() const;

 private:
  struct Memo;
  std::vector<std::string> tokens_;
  const classify::Classifier& classifier_;
  core::ClassLabel target_class_;
  Masking masking_;
  std::string placeholder_;
  std::unique_ptr<Memo> memo_;
};

// Convenience wrapper matching the definition above, for ad-hoc queries.
double value_function(const std::vector<std::string>& tokens,
                      const std::vector<bool>& members,
                      const classify::Classifier& classifier,
                      const core::ClassLabel& target_class,
                      Masking masking = Masking::kDeletion,
                      const std::string& placeholder = "<mask>");

// Exact Shapley values by full subset enumeration (n <= 20 enforced).
// phi_i = sum over S not containing i of
//         |S|! (n-|S|-1)! / n! * (f(S+{i}) - f(S)).
// The parallel kernel fills the 2^n value table and per-token sums in
// fixed slots, so it matches the serial reference bitwise.
std::vector<double> shapley_exact_values(
    int n, const std::function<double(std::uint64_t)>& value_of_mask,
    int threads = 0);
std::vector<double> shapley_exact_values_serial(
    int n, const std::function<double(std::uint64_t)>& value_of_mask);

// Permutation-sampling estimator. Each sample walks one permutation and
// accumulates marginal gains. When samples >= n!, every permutation is
// enumerated once instead (dense mode), making the estimate exact.
std::vector<double> shapley_sampled_values(
    int n, const std::function<double(const std::vector<bool>&)>& value_of,
    std::uint64_t samples, std::uint64_t seed, int threads = 0,
    std::uint64_t* samples_used = nullptr);

// Attribution over the word tokens of `text`. target_class defaults to the
// classifier's prediction on the full text. Dispatches to the exact solver
// when the token count is within exact_limit, else to the estimator.
Attribution attribute(const std::string& text,
                      const classify::Classifier& classifier,
                      const InterpreterConfig& config = {},
                      std::optional<core::ClassLabel> target_class =
                          std::nullopt);

// Unsigned importance scaled to max 1: |phi_i| / max_j |phi_j| (all zeros
// stay zero).
std::vector<double> normalize_importance(const std::vector<double>& phi);

}  // namespace genshin::interpret

#endif  // GENSHIN_INTERPRET_HPP_
