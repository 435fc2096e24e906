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

#include "genshin/report.hpp"

#include <algorithm>
#include <fstream>

#include <fmt/core.h>

#include "genshin/error.hpp"
#include "genshin/utf8.hpp"

namespace genshin::report {
namespace {

std::string f4(double value) { return fmt::format("{:.4f}", value); }

std::string rratio_cell(const harness::ExperimentRow& row) {
  return row.rratio ? f4(*row.rratio) : std::string("n/a");
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string quoted = "\"";
  for (char c : field) {
    if (c == '"') quoted += "\"\"";
    else quoted.push_back(c);
  }
  quoted.push_back('"');
  return quoted;
}

std::string join_row(const std::vector<std::string>& cells,
                     TableFormat format) {
  std::string line;
  if (format == TableFormat::kMarkdown) {
    line = "|";
    for (const std::string& cell : cells) {
      line += " " + cell + " |";
    }
  } else {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i > 0) line.push_back(',');
      line += csv_escape(cells[i]);
    }
  }
  return line + "\n";
}

std::string markdown_divider(std::size_t columns) {
  std::string line = "|";
  for (std::size_t i = 0; i < columns; ++i) line += " --- |";
  return line + "\n";
}

std::string render_rows(const std::vector<std::string>& header,
                        const std::vector<std::vector<std::string>>& body,
                        TableFormat format) {
  std::string out = join_row(header, format);
  if (format == TableFormat::kMarkdown) out += markdown_divider(header.size());
  for (const auto& row : body) out += join_row(row, format);
  return out;
}

// Average over the rows whose RRatio is defined; empty when none is.
std::string average_rratio(const std::vector<harness::ExperimentRow>& rows) {
  double sum = 0.0;
  std::size_t count = 0;
  for (const harness::ExperimentRow& row : rows) {
    if (row.rratio) {
      sum += *row.rratio;
      ++count;
    }
  }
  return count == 0 ? std::string("n/a")
                    : f4(sum / static_cast<double>(count));
}

bool is_bidi_or_format_control(char32_t scalar) {
  return scalar == 0x061C || scalar == 0x200E || scalar == 0x200F ||
         (scalar >= 0x202A && scalar <= 0x202E) ||
         (scalar >= 0x2066 && scalar <= 0x2069) || scalar == 0x2028 ||
         scalar == 0x2029 || scalar == 0xFEFF;
}

}  // namespace

TableFormat parse_table_format(const std::string& name) {
  if (name == "markdown" || name == "md") return TableFormat::kMarkdown;
  if (name == "csv") return TableFormat::kCsv;
  throw ConfigError("unknown table format \"" + name +
                    "\" (expected markdown or csv)");
}

std::string render_table(const std::vector<harness::ExperimentRow>& rows,
                         TableFormat format) {
  if (rows.empty()) throw Error("render_table: no rows");
  const std::vector<std::string> header = {
      "Attacker", "Model", "Dataset", "OAcc", "AAcc",
      "RAcc",     "RRatio", "MAT",    "ADD",  "ARD"};
  std::vector<std::vector<std::string>> body;
  for (const harness::ExperimentRow& row : rows) {
    body.push_back({row.attacker, row.classifier_name, row.dataset,
                    f4(row.oacc), f4(row.aacc), f4(row.racc),
                    rratio_cell(row), fmt::format("{:.1f}", row.mat),
                    f4(row.add), f4(row.ard)});
  }
  std::vector<std::string> average(header.size(), "");
  average[0] = "Average";
  average[6] = average_rratio(rows);
  body.push_back(average);
  return render_rows(header, body, format);
}

std::string render_ablation_table(const harness::AblationResult& result,
                                  TableFormat format) {
  std::vector<std::string> header = {"Variant"};
  for (const std::string& dataset : result.datasets) {
    header.push_back(dataset + " RRatio");
    header.push_back(dataset + " ARD");
  }
  header.push_back("Average RRatio");
  std::vector<std::vector<std::string>> body;
  for (std::size_t v = 0; v < result.variants.size(); ++v) {
    std::vector<std::string> cells = {result.variants[v]};
    std::vector<harness::ExperimentRow> variant_rows;
    for (std::size_t d = 0; d < result.datasets.size(); ++d) {
      const harness::ExperimentRow& row =
          result.rows[v * result.datasets.size() + d];
      cells.push_back(rratio_cell(row));
      cells.push_back(f4(row.ard));
      variant_rows.push_back(row);
    }
    cells.push_back(average_rratio(variant_rows));
    body.push_back(std::move(cells));
  }
  return render_rows(header, body, format);
}

std::string render_sweep_table(const std::vector<harness::SweepPoint>& points,
                               TableFormat format) {
  const std::vector<std::string> header = {
      "Ratio", "Samples", "Groups", "ADD mean", "ADD std", "ARD mean",
      "ARD std"};
  std::vector<std::vector<std::string>> body;
  for (const harness::SweepPoint& point : points) {
    body.push_back({f4(point.ratio), std::to_string(point.samples),
                    std::to_string(point.groups), f4(point.add_mean),
                    f4(point.add_std), f4(point.ard_mean),
                    f4(point.ard_std)});
  }
  return render_rows(header, body, format);
}

std::string escape_html(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t scalar : utf8::decode(text)) {
    switch (scalar) {
      case U'&':
        out += "&amp;";
        continue;
      case U'<':
        out += "&lt;";
        continue;
      case U'>':
        out += "&gt;";
        continue;
      case U'"':
        out += "&quot;";
        continue;
      case U'\'':
        out += "&#39;";
        continue;
      default:
        break;
    }
    if (is_bidi_or_format_control(scalar)) {
      // Visible literal escape; a numeric character reference would still
      // smuggle the control into the DOM.
      out += fmt::format("\\u{:04X}", static_cast<std::uint32_t>(scalar));
      continue;
    }
    out += utf8::encode_scalar(scalar);
  }
  return out;
}

std::string label_color(const std::string& label_name, int index) {
  std::string upper = label_name;
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) {
                   return static_cast<char>(std::toupper(c));
                 });
  if (upper == "POSITIVE" || upper == "HAM" || upper == "POS") {
    return "37,99,235";  // blue
  }
  if (upper == "NEGATIVE" || upper == "SPAM" || upper == "NEG") {
    return "234,88,12";  // orange
  }
  return index % 2 == 0 ? "37,99,235" : "234,88,12";
}

std::string render_highlights_html(const std::vector<HighlightCase>& cases) {
  std::string html;
  html +=
      "<!DOCTYPE html>\n"
      "<html lang=\"en\">\n"
      "<head>\n"
      "<meta charset=\"utf-8\">\n"
      "<title>Token attribution highlights</title>\n"
      "<style>\n"
      "body { font-family: sans-serif; margin: 2em; color: #1f2937; }\n"
      ".case { border: 1px solid #d1d5db; border-radius: 6px; padding: 1em;"
      " margin-bottom: 1.5em; }\n"
      ".case h2 { font-size: 1em; margin: 0 0 0.75em 0; }\n"
      ".state { margin: 0.6em 0; }\n"
      ".state-name { display: inline-block; width: 6.5em; font-weight: bold;"
      " }\n"
      ".pred { display: inline-block; width: 10em; }\n"
      ".bar { display: inline-block; width: 120px; height: 0.7em;"
      " background: #e5e7eb; vertical-align: middle; margin-right: 1em; }\n"
      ".bar > div { height: 100%; }\n"
      ".tokens span { padding: 0.1em 0.15em; border-radius: 3px; }\n"
      "</style>\n"
      "</head>\n"
      "<body>\n"
      "<h1>Token attribution highlights</h1>\n";
  for (const HighlightCase& highlight : cases) {
    html += "<div class=\"case\">\n";
    html += fmt::format("<h2>Instance {} (gold: {})</h2>\n",
                        escape_html(highlight.instance_id),
                        escape_html(highlight.gold_label));
    for (const HighlightRow& row : highlight.rows) {
      const classify::Prediction& prediction = row.prediction;
      const auto predicted_index =
          static_cast<std::size_t>(prediction.label.index);
      const double prob = predicted_index < prediction.probs.size()
                              ? prediction.probs[predicted_index]
                              : 0.0;
      const std::string color =
          label_color(prediction.label.name, prediction.label.index);
      html += "<div class=\"state\">";
      html += fmt::format("<span class=\"state-name\">{}</span>",
                          core::pipeline_state_name(row.state));
      html += fmt::format(
          "<span class=\"pred\">{} ({})</span>",
          escape_html(prediction.label.name), f4(prob));
      html += fmt::format(
          "<span class=\"bar\"><div style=\"width: {:.1f}%; background:"
          " rgb({});\"></div></span>",
          prob * 100.0, color);
      html += "<span class=\"tokens\">";
      const std::vector<double> importance =
          interpret::normalize_importance(row.attribution.phi);
      for (std::size_t t = 0; t < row.attribution.tokens.size(); ++t) {
        if (t > 0) html += " ";
        html += fmt::format(
            "<span style=\"background: rgba({},{:.2f});\">{}</span>", color,
            importance[t], escape_html(row.attribution.tokens[t]));
      }
      html += "</span></div>\n";
    }
    html += "</div>\n";
  }
  html += "</body>\n</html>\n";
  return html;
}

void render_highlights(const std::vector<HighlightCase>& cases,
                       const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  out << render_highlights_html(cases);
}

}  // namespace genshin::report
