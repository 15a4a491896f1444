// Copyright 2026 The Scribe Authors
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

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "scribe/bench/bench.hpp"
#include "scribe/qcm/qcm.hpp"
#include "scribe/qsm/relax.hpp"
#include "scribe/util/errors.hpp"

namespace scribe::bench {

std::vector<HitRatioRow> hitRatioSweep(const init::CacheSnapshot& snapshot, const std::vector<std::size_t>& counts,
                                       const std::vector<std::string>& workload) {
  std::vector<HitRatioRow> rows;
  for (auto K : counts) {
    auto index = index::buildIndex(snapshot, K);
    std::size_t hits = 0;
    for (const auto& t : workload) hits += !index.treeLookup(t, 1).empty();
    rows.push_back({K, workload.empty() ? 0.0 : static_cast<double>(hits) / static_cast<double>(workload.size())});
  }
  return rows;
}

std::vector<ScanRow> scanScalingSweep(const index::LiteralIndex& index, const std::vector<std::string>& workload,
                                      const std::vector<std::size_t>& Ps, const ScanOptions& options) {
  if (Ps.empty() || Ps.front() != 1) throw InvalidQuery("scan sweep must start at P = 1");
  std::vector<ScanRow> rows;
  for (auto P : Ps) {
    if (P == 0) throw InvalidQuery("P must be positive");
    WorkerPool pool(P);
    std::size_t runs = 0;
    auto start = std::chrono::steady_clock::now();
    for (std::size_t r = 0; r < options.repetitions; ++r) {
      for (const auto& t : workload) {
        qcm::CompletionRequest req{t, qcm::Slot::Object, options.k, options.gamma};
        qcm::complete(index, req, P, pool);
        ++runs;
      }
    }
    double total = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    double mean = runs ? total / static_cast<double>(runs) : 0.0;
    double base = rows.empty() ? mean : rows.front().meanLatencyMs;
    rows.push_back({P, mean, base / static_cast<double>(P)});
  }
  return rows;
}

std::vector<QsmRow> qsmTimingBreakdown(const std::vector<QsmCase>& cases, const qsm::QsmContext& ctx) {
  std::vector<QsmRow> rows;
  for (const auto& c : cases) {
    QsmRow row{c.name, {}, 0};
    row.suggestions += qsm::suggestTermQueries(c.query, ctx, ctx.config.k, &row.timings).size();
    row.suggestions += qsm::suggestRelaxations(c.query, ctx, {}, nullptr, &row.timings).size();
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

std::string csvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

void writeCsv(std::ostream& out, const std::vector<HitRatioRow>& rows) {
  out << "K,hitRatio\n" << std::setprecision(6) << std::fixed;
  for (const auto& r : rows) out << r.K << ',' << r.hitRatio << '\n';
}

void writeCsv(std::ostream& out, const std::vector<ScanRow>& rows) {
  out << "P,meanLatencyMs,idealLatencyMs\n" << std::setprecision(6) << std::fixed;
  for (const auto& r : rows) out << r.P << ',' << r.meanLatencyMs << ',' << r.idealLatencyMs << '\n';
}

void writeCsv(std::ostream& out, const std::vector<QsmRow>& rows) {
  out << "query,alternativePredicatesMs,alternativeLiteralsMs,relaxationMs,candidateExecutionMs,suggestions\n"
      << std::setprecision(3) << std::fixed;
  for (const auto& r : rows) {
    out << csvField(r.name) << ',' << r.timings.alternativePredicatesMs << ',' << r.timings.alternativeLiteralsMs
        << ',' << r.timings.relaxationMs << ',' << r.timings.candidateExecutionMs << ',' << r.suggestions << '\n';
  }
}

namespace {

constexpr double kWidth = 640, kHeight = 400, kLeft = 70, kRight = 150, kTop = 40, kBottom = 60;
const char* const kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b"};

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '&':
        out += "&amp;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

std::string num(double v) {
  std::ostringstream s;
  s << std::setprecision(4) << v;
  return s.str();
}

void frame(std::ostringstream& svg, const std::string& title, const std::string& xLabel, const std::string& yLabel) {
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<text x=\"" << kWidth / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">" << escape(title)
      << "</text>\n"
      << "<text x=\"" << kLeft + (kWidth - kLeft - kRight) / 2 << "\" y=\"" << kHeight - 15
      << "\" text-anchor=\"middle\">" << escape(xLabel) << "</text>\n"
      << "<text x=\"18\" y=\"" << kTop + (kHeight - kTop - kBottom) / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
      << kTop + (kHeight - kTop - kBottom) / 2 << ")\">" << escape(yLabel) << "</text>\n"
      << "<line x1=\"" << kLeft << "\" y1=\"" << kHeight - kBottom << "\" x2=\"" << kWidth - kRight << "\" y2=\""
      << kHeight - kBottom << "\" stroke=\"black\"/>\n"
      << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft << "\" y2=\"" << kHeight - kBottom
      << "\" stroke=\"black\"/>\n";
}

void legend(std::ostringstream& svg, const std::vector<std::string>& names) {
  for (std::size_t i = 0; i < names.size(); ++i) {
    double y = kTop + 10 + 18 * static_cast<double>(i);
    svg << "<rect x=\"" << kWidth - kRight + 12 << "\" y=\"" << y - 9 << "\" width=\"10\" height=\"10\" fill=\""
        << kColors[i % 6] << "\"/>\n<text x=\"" << kWidth - kRight + 27 << "\" y=\"" << y << "\">" << escape(names[i])
        << "</text>\n";
  }
}

void yTicks(std::ostringstream& svg, double yMax) {
  for (int i = 0; i <= 4; ++i) {
    double v = yMax * i / 4;
    double y = kHeight - kBottom - (kHeight - kTop - kBottom) * i / 4;
    svg << "<text x=\"" << kLeft - 6 << "\" y=\"" << y + 4 << "\" text-anchor=\"end\">" << num(v) << "</text>\n";
  }
}

}  // namespace

std::string svgLineChart(const std::string& title, const std::string& xLabel, const std::string& yLabel,
                         const std::vector<Series>& series) {
  double xMin = 0, xMax = 1, yMax = 0;
  bool first = true;
  for (const auto& s : series) {
    for (auto [x, y] : s.points) {
      xMin = first ? x : std::min(xMin, x);
      xMax = first ? x : std::max(xMax, x);
      yMax = std::max(yMax, y);
      first = false;
    }
  }
  if (xMax <= xMin) xMax = xMin + 1;
  if (yMax <= 0) yMax = 1;
  auto px = [&](double x) { return kLeft + (x - xMin) / (xMax - xMin) * (kWidth - kLeft - kRight); };
  auto py = [&](double y) { return kHeight - kBottom - y / yMax * (kHeight - kTop - kBottom); };

  std::ostringstream svg;
  frame(svg, title, xLabel, yLabel);
  yTicks(svg, yMax);
  for (int i = 0; i <= 4; ++i) {
    double v = xMin + (xMax - xMin) * i / 4;
    svg << "<text x=\"" << px(v) << "\" y=\"" << kHeight - kBottom + 16 << "\" text-anchor=\"middle\">" << num(v)
        << "</text>\n";
  }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < series.size(); ++i) {
    names.push_back(series[i].name);
    svg << "<polyline fill=\"none\" stroke=\"" << kColors[i % 6] << "\" stroke-width=\"2\" points=\"";
    for (auto [x, y] : series[i].points) svg << px(x) << ',' << py(y) << ' ';
    svg << "\"/>\n";
    for (auto [x, y] : series[i].points) {
      svg << "<circle cx=\"" << px(x) << "\" cy=\"" << py(y) << "\" r=\"3\" fill=\"" << kColors[i % 6] << "\"/>\n";
    }
  }
  legend(svg, names);
  svg << "</svg>\n";
  return svg.str();
}

std::string svgBarChart(const std::string& title, const std::string& yLabel, const std::vector<std::string>& groups,
                        const std::vector<std::string>& columns, const std::vector<std::vector<double>>& values) {
  double yMax = 0;
  for (const auto& row : values) {
    for (double v : row) yMax = std::max(yMax, v);
  }
  if (yMax <= 0) yMax = 1;
  std::ostringstream svg;
  frame(svg, title, "", yLabel);
  yTicks(svg, yMax);
  const double plotW = kWidth - kLeft - kRight;
  const double groupW = groups.empty() ? plotW : plotW / static_cast<double>(groups.size());
  const double barW = columns.empty() ? 0 : groupW * 0.8 / static_cast<double>(columns.size());
  for (std::size_t g = 0; g < groups.size(); ++g) {
    double x0 = kLeft + groupW * static_cast<double>(g) + groupW * 0.1;
    for (std::size_t c = 0; c < columns.size() && g < values.size() && c < values[g].size(); ++c) {
      double h = values[g][c] / yMax * (kHeight - kTop - kBottom);
      svg << "<rect x=\"" << x0 + barW * static_cast<double>(c) << "\" y=\"" << kHeight - kBottom - h
          << "\" width=\"" << barW << "\" height=\"" << h << "\" fill=\"" << kColors[c % 6] << "\"/>\n";
    }
    svg << "<text x=\"" << x0 + groupW * 0.4 << "\" y=\"" << kHeight - kBottom + 16 << "\" text-anchor=\"middle\">"
        << escape(groups[g]) << "</text>\n";
  }
  legend(svg, columns);
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace scribe::bench
