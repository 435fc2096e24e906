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

#ifndef GENSHIN_TEXTOPS_HPP_
#define GENSHIN_TEXTOPS_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace genshin::textops {

enum class Granularity { kChar, kWord };

struct TokenSequence {
  std::vector<std::string> tokens;
  Granularity granularity = Granularity::kWord;

  std::size_t size() const { return tokens.size(); }
};

// Character classes, over Unicode scalar values. Punctuation covers the
// Unicode general categories Pc, Pd, Ps, Pe, Pi, Pf and Po; whitespace
// covers the usual ASCII controls plus every scalar with the White_Space
// property.
bool is_punctuation(char32_t scalar);
bool is_whitespace(char32_t scalar);

// kChar: one token per Unicode scalar (invalid bytes round-trip thanks to
// the utf8 surrogate-escape convention), so concatenating the tokens
// reproduces the input byte for byte. kWord: maximal runs of
// non-whitespace; whitespace separates and is dropped, punctuation stays
// attached to its word.
TokenSequence tokenize(std::string_view text, Granularity granularity);

// Levenshtein distance with unit costs, measured in Unicode scalars.
std::size_t levenshtein(std::string_view a, std::string_view b);

// Edit distance ratio: levenshtein(a, b) / max(|a|, |b|) with lengths in
// scalars. Defined as 0 when both strings are empty. Always in [0, 1] and
// symmetric.
double edr(std::string_view a, std::string_view b);

// Mean EDR between aligned pairs. Both metrics reject empty or
// length-mismatched inputs.
double add_metric(const std::vector<std::string>& originals,
                  const std::vector<std::string>& attacked);
double ard_metric(const std::vector<std::string>& originals,
                  const std::vector<std::string>& recovered);

// Pairwise EDR over aligned lists. The parallel kernel writes one slot per
// pair, so its output is bitwise identical to the serial reference.
std::vector<double> batch_edr(const std::vector<std::string>& as,
                              const std::vector<std::string>& bs,
                              int threads = 0);
std::vector<double> batch_edr_serial(const std::vector<std::string>& as,
                                     const std::vector<std::string>& bs);

// Distance summary for one (original, attacked, recovered) dataset triple.
struct DistanceStats {
  double add = 0.0;
  double ard = 0.0;
  std::vector<double> attack_edr;
  std::vector<double> recovery_edr;
};

DistanceStats compute_distance_stats(const std::vector<std::string>& originals,
                                     const std::vector<std::string>& attacked,
                                     const std::vector<std::string>& recovered,
                                     int threads = 0);

double mean(const std::vector<double>& values);

// Sample standard deviation (n - 1 denominator); 0 for fewer than two
// values.
double sample_std_dev(const std::vector<double>& values);

}  // namespace genshin::textops

#endif  // GENSHIN_TEXTOPS_HPP_
