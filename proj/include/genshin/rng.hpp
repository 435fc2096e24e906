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

#ifndef GENSHIN_RNG_HPP_
#define GENSHIN_RNG_HPP_

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace genshin {

// Deterministic random source. Raw mt19937_64 output is fully specified by
// the standard; the bounded draws below are hand-rolled so that results are
// identical across platforms and standard libraries (std::uniform_int_
// distribution makes no such promise).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Derives an independent stream for one named unit of work (for example a
  // dataset instance). The same (seed, id) pair always yields the same
  // stream, regardless of processing order or thread count.
  static Rng for_instance(std::uint64_t global_seed, std::string_view id);

  // Mixes a global seed with an ordinal, for per-index substreams.
  static std::uint64_t derive_seed(std::uint64_t global_seed,
                                   std::uint64_t ordinal);

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, bound); bound must be positive. Rejection sampling, so
  // the result is exactly uniform.
  std::uint64_t below(std::uint64_t bound);

  std::size_t index(std::size_t size) {
    return static_cast<std::size_t>(below(size));
  }

  // Uniform in [0, 1) with 53 bits of precision.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return unit() < p; }

  template <typename T>
  void shuffle(std::vector<T>& values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      std::swap(values[i - 1], values[index(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace genshin

#endif  // GENSHIN_RNG_HPP_
