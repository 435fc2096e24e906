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

#ifndef GENSHIN_REPORT_HPP_
#define GENSHIN_REPORT_HPP_

#include <array>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "genshin/classify.hpp"
#include "genshin/harness.hpp"
#include "genshin/interpret.hpp"

namespace genshin::report {

enum class TableFormat { kMarkdown, kCsv };

TableFormat parse_table_format(const std::string& name);

// Main-results table: one line per experiment row plus an Average line
// over the defined RRatio values. All metrics are printed with four
// decimals; an undefined RRatio prints as "n/a".
std::string render_table(const std::vector<harness::ExperimentRow>& rows,
                         TableFormat format);

// Prompt-ablation table: one line per variant, RRatio and ARD columns per
// dataset, plus the Average-over-datasets RRatio column.
std::string render_ablation_table(const harness::AblationResult& result,
                                  TableFormat format);

// Sweep table: one line per ratio point.
std::string render_sweep_table(const std::vector<harness::SweepPoint>& points,
                               TableFormat format);

// Escapes text for safe embedding in HTML. Besides & < > " ', Unicode
// bidirectional and invisible format controls are replaced by visible
// "‮"-style escapes so hostile text cannot reorder or hide parts
// of the report.
std::string escape_html(std::string_view text);

struct HighlightRow {
  core::PipelineState state = core::PipelineState::kOriginal;
  classify::Prediction prediction;
  interpret::Attribution attribution;
};

struct HighlightCase {
  std::string instance_id;
  std::string gold_label;
  std::array<HighlightRow, 3> rows;  // original, attacked, recovered
};

// CSS color for a class label: blue for POSITIVE/HAM-flavored labels,
// orange for NEGATIVE/SPAM, alternating fallback otherwise.
std::string label_color(const std::string& label_name, int index);

// Self-contained deterministic HTML page: per case three rows, each with
// the prediction, a probability bar (width proportional to the predicted
// probability) and the tokens shaded by normalized |phi|.
std::string render_highlights_html(const std::vector<HighlightCase>& cases);
void render_highlights(const std::vector<HighlightCase>& cases,
                       const std::filesystem::path& path);

}  // namespace genshin::report

#endif  // GENSHIN_REPORT_HPP_
