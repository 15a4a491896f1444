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

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "scribe/index/literal_index.hpp"
#include "scribe/init/snapshot.hpp"
#include "scribe/qsm/terms.hpp"
#include "scribe/rdf/triple_store.hpp"

namespace scribe::bench {

struct SyntheticConfig {
  std::uint64_t seed = 42;
  /// Entities; each carries a label and one further literal.
  std::size_t entities = 25000;
  /// Terms planted as entity labels (every other one).
  std::vector<std::string> plantedTerms;
};

/// Deterministic store for a seed: typed entities under a small class
/// hierarchy, English labels, titles and nicknames, and entity links.
rdf::TripleStore generateSynthetic(const SyntheticConfig& config);

/// Non-empty, non-comment lines.
std::vector<std::string> loadTerms(const std::filesystem::path& path);
/// Every prefix of every term, in typing order.
std::vector<std::string> typedPrefixes(const std::vector<std::string>& terms);

struct HitRatioRow {
  std::size_t K = 0;
  double hitRatio = 0;
};

/// Fraction of workload terms with at least one suffix-tree match for an
/// index holding the K most significant literals.
std::vector<HitRatioRow> hitRatioSweep(const init::CacheSnapshot& snapshot, const std::vector<std::size_t>& counts,
                                       const std::vector<std::string>& workload);

struct ScanRow {
  std::size_t P = 0;
  double meanLatencyMs = 0;
  double idealLatencyMs = 0;
};

struct ScanOptions {
  std::size_t k = 10;
  std::size_t gamma = 10;
  std::size_t repetitions = 3;
};

/// Mean completion latency per term with P scan tasks on a P-thread pool.
/// The first entry of `Ps` must be 1; ideal latency is latency(1)/P.
std::vector<ScanRow> scanScalingSweep(const index::LiteralIndex& index, const std::vector<std::string>& workload,
                                      const std::vector<std::size_t>& Ps, const ScanOptions& options = {});

struct QsmCase {
  std::string name;
  rdf::StructuredQuery query;
};

struct QsmRow {
  std::string name;
  qsm::QsmTimings timings;
  std::size_t suggestions = 0;
};

/// Runs term suggestion and relaxation for each case, sequentially.
std::vector<QsmRow> qsmTimingBreakdown(const std::vector<QsmCase>& cases, const qsm::QsmContext& ctx);

void writeCsv(std::ostream& out, const std::vector<HitRatioRow>& rows);
void writeCsv(std::ostream& out, const std::vector<ScanRow>& rows);
void writeCsv(std::ostream& out, const std::vector<QsmRow>& rows);

struct Series {
  std::string name;
  std::vector<std::pair<double, double>> points;
};

/// Line chart with linear axes.
std::string svgLineChart(const std::string& title, const std::string& xLabel, const std::string& yLabel,
                         const std::vector<Series>& series);
/// Grouped bar chart: one group per row label, one bar per column.
std::string svgBarChart(const std::string& title, const std::string& yLabel, const std::vector<std::string>& groups,
                        const std::vector<std::string>& columns, const std::vector<std::vector<double>>& values);

}  // namespace scribe::bench
