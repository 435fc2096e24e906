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

// Compares the OpenMP kernels against their serial references: batch EDR,
// adversarial attack search and exact Shapley enumeration. Each kernel's
// output must match the serial result bitwise; the benchmark aborts
// otherwise.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <fmt/core.h>

#include "genshin/attack.hpp"
#include "genshin/classify.hpp"
#include "genshin/core.hpp"
#include "genshin/interpret.hpp"
#include "genshin/parallel.hpp"
#include "genshin/rng.hpp"
#include "genshin/textops.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_of(const std::function<void()>& body) {
  const auto start = Clock::now();
  body();
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void report(const char* kernel, double serial_s, double parallel_s,
            bool identical) {
  fmt::print("{:<16} serial {:8.3f}s  parallel {:8.3f}s  speedup {:5.2f}x  "
             "bitwise-identical {}\n",
             kernel, serial_s, parallel_s,
             parallel_s > 0 ? serial_s / parallel_s : 0.0,
             identical ? "yes" : "NO");
  if (!identical) {
    fmt::print(stderr, "{}: parallel kernel diverged from the serial "
               "reference\n", kernel);
    std::exit(1);
  }
}

void bench_batch_edr(genshin::Rng& rng) {
  const std::vector<std::string>& words = genshin::core::common_words();
  std::vector<std::string> as;
  std::vector<std::string> bs;
  for (int i = 0; i < 1500; ++i) {
    std::string a;
    std::string b;
    for (int w = 0; w < 60; ++w) {
      const std::string& word = words[rng.index(words.size())];
      a += word;
      a.push_back(' ');
      b += rng.bernoulli(0.3) ? words[rng.index(words.size())] : word;
      b.push_back(' ');
    }
    as.push_back(std::move(a));
    bs.push_back(std::move(b));
  }
  std::vector<double> serial;
  std::vector<double> parallel;
  const double serial_s =
      seconds_of([&] { serial = genshin::textops::batch_edr_serial(as, bs); });
  const double parallel_s =
      seconds_of([&] { parallel = genshin::textops::batch_edr(as, bs); });
  report("batch_edr", serial_s, parallel_s, serial == parallel);
}

void bench_attack_search(genshin::Rng& rng) {
  genshin::core::LabeledDataset dataset = genshin::core::
      generate_random_dataset(128, 140, genshin::core::common_words(),
                              rng.next());
  // Hash-flavored classifier: the label flips with text content at a low
  // rate, so searches run many attempts; the spin stands in for real
  // inference cost.
  const std::vector<genshin::core::ClassLabel> labels = {{"A", 0}, {"B", 1}};
  genshin::classify::FunctionClassifier classifier(
      labels,
      [labels](const std::string& text) {
        std::uint64_t hash = 1469598103934665603ULL;
        for (unsigned char byte : text) {
          hash ^= byte;
          hash *= 1099511628211ULL;
        }
        double spin = 0.0;
        for (int i = 0; i < 2000; ++i) {
          spin += std::sin(static_cast<double>(hash + i));
        }
        const double frac = ((hash >> 16) % 1000) / 999.0 * 0.5 +
                            std::abs(spin) * 1e-12;
        const double p = frac < 0.03 ? 0.4 : 0.55 + frac / 2.0;
        return genshin::classify::make_prediction(labels, {p, 1.0 - p});
      });
  genshin::attack::AttackConfig config;
  config.kind = genshin::attack::AttackerKind::kChar;
  config.ratio = 0.05;
  config.max_attempts = 128;
  config.seed = 42;
  genshin::attack::AttackBatchResult serial;
  genshin::attack::AttackBatchResult parallel;
  const double serial_s = seconds_of([&] {
    serial = genshin::attack::attack_dataset_serial(dataset, config,
                                                    classifier);
  });
  const double parallel_s = seconds_of([&] {
    parallel = genshin::attack::attack_dataset(dataset, config, classifier);
  });
  bool identical = serial.outcomes.size() == parallel.outcomes.size();
  for (std::size_t i = 0; identical && i < serial.outcomes.size(); ++i) {
    const auto& a = serial.outcomes[i];
    const auto& b = parallel.outcomes[i];
    identical = a.has_value() == b.has_value() &&
                (!a || (a->attacked == b->attacked &&
                        a->attempts_used == b->attempts_used &&
                        a->success == b->success && a->edr == b->edr));
  }
  report("attack_search", serial_s, parallel_s, identical);
}

void bench_shapley() {
  // A value function heavy enough to measure: popcount mixing plus a spin.
  const int n = 16;
  const auto value_of_mask = [](std::uint64_t mask) {
    double acc = 0.0;
    for (int spin = 0; spin < 200; ++spin) {
      acc += std::sin(static_cast<double>(mask * 2654435761ULL + spin));
    }
    return acc / 200.0;
  };
  std::vector<double> serial;
  std::vector<double> parallel;
  const double serial_s = seconds_of([&] {
    serial = genshin::interpret::shapley_exact_values_serial(n, value_of_mask);
  });
  const double parallel_s = seconds_of([&] {
    parallel = genshin::interpret::shapley_exact_values(n, value_of_mask);
  });
  report("shapley_exact", serial_s, parallel_s, serial == parallel);
}

}  // namespace

int main() {
  fmt::print("threads available: {}\n", genshin::effective_threads(0));
  genshin::Rng rng(42);
  bench_batch_edr(rng);
  bench_attack_search(rng);
  bench_shapley();
  return 0;
}
