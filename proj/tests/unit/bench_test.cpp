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

#include <doctest.h>

#include <sstream>

#include "engine_support.hpp"
#include "scribe/bench/bench.hpp"
#include "scribe/rdf/sparql.hpp"
#include "scribe/util/errors.hpp"
#include "scribe/util/text.hpp"

using namespace scribe;

namespace {

init::CacheSnapshot warehouseSnapshot(std::shared_ptr<const rdf::TripleStore> store) {
  rdf::LocalEndpoint ep("synthetic", std::move(store));
  init::InitConfig config;
  config.warehouseMode = true;
  return init::initialize(ep, config);
}

/// Share of terms contained, case-insensitively, in some string.
double bruteHitRatio(const std::vector<std::string>& strings, const std::vector<std::string>& workload) {
  std::vector<std::string> folded;
  for (const auto& s : strings) folded.push_back(text::foldCaseUtf8(s));
  std::size_t hits = 0;
  for (const auto& t : workload) {
    auto ft = text::foldCaseUtf8(t);
    hits += std::any_of(folded.begin(), folded.end(), [&](const std::string& s) { return s.find(ft) != s.npos; });
  }
  return static_cast<double>(hits) / static_cast<double>(workload.size());
}

std::vector<std::string> predicateStrings(const init::CacheSnapshot& snap) {
  std::vector<std::string> out;
  for (const auto& p : snap.predicates) {
    auto local = std::string(text::localName(p.uri));
    out.push_back(local);
    out.push_back(text::splitCamelCase(local));
  }
  return out;
}

std::vector<std::vector<std::string>> parseCsv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    std::vector<std::string> cells;
    std::istringstream cs(line);
    for (std::string cell; std::getline(cs, cell, ',');) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST_CASE("synthetic store") {
  bench::SyntheticConfig config;
  config.entities = 2000;
  config.plantedTerms = {"Ganges", "Tom Hanks", "Czech Republic"};
  auto a = bench::generateSynthetic(config);
  auto b = bench::generateSynthetic(config);
  CHECK(a.triples() == b.triples());
  config.seed = 7;
  CHECK(bench::generateSynthetic(config).triples() != a.triples());

  // Two distinct English literals per entity.
  CHECK(testing::filteredLiterals(a, "en", 80).size() == 2 * 2000);
  CHECK(a.lookup(testing::en("Ganges")));
  CHECK(a.lookup(testing::en("Czech Republic")));
  CHECK(!a.lookup(testing::en("Tom Hanks")));

  config.entities = 5;
  CHECK_THROWS_AS(bench::generateSynthetic(config), InvalidQuery);
}

TEST_CASE("workload terms") {
  auto terms = bench::loadTerms(testing::dataPath("workload/query_terms.txt"));
  CHECK(terms.size() == 26);
  CHECK(terms.front() == "Ganges");
  auto prefixes = bench::typedPrefixes({"Ab", "Zoë"});
  CHECK(prefixes == std::vector<std::string>{"A", "Ab", "Z", "Zo", "Zoë"});
}

TEST_CASE("hit ratio sweep") {
  auto terms = bench::loadTerms(testing::dataPath("workload/query_terms.txt"));
  bench::SyntheticConfig config;
  config.entities = 3000;
  config.plantedTerms = terms;
  auto store = std::make_shared<const rdf::TripleStore>(bench::generateSynthetic(config));
  auto snap = warehouseSnapshot(store);
  const auto workload = bench::typedPrefixes(terms);
  const std::size_t total = snap.literals.size();

  auto rows = bench::hitRatioSweep(snap, {0, 100, 500, 1000, 2000, 4000, total}, workload);
  REQUIRE(rows.size() == 7);
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].hitRatio >= rows[i - 1].hitRatio);

  SUBCASE("all literals indexed matches a substring scan") {
    auto strings = predicateStrings(snap);
    for (const auto& l : snap.literals) strings.push_back(l.lexical);
    CHECK(rows.back().hitRatio == doctest::Approx(bruteHitRatio(strings, workload)).epsilon(1e-12));
  }
  SUBCASE("K = 0 uses predicates only") {
    CHECK(rows.front().hitRatio == doctest::Approx(bruteHitRatio(predicateStrings(snap), workload)).epsilon(1e-12));
  }
  SUBCASE("csv") {
    std::ostringstream out;
    bench::writeCsv(out, rows);
    auto csv = parseCsv(out.str());
    REQUIRE(csv.size() == rows.size() + 1);
    CHECK(csv[0] == std::vector<std::string>{"K", "hitRatio"});
    CHECK(std::stoul(csv.back()[0]) == total);
    CHECK(std::stod(csv.back()[1]) == doctest::Approx(rows.back().hitRatio).epsilon(1e-6));
  }
  SUBCASE("empty workload") { CHECK(bench::hitRatioSweep(snap, {0}, {})[0].hitRatio == 0.0); }
}

TEST_CASE("scan scaling sweep") {
  bench::SyntheticConfig config;
  config.entities = 2000;
  auto store = std::make_shared<const rdf::TripleStore>(bench::generateSynthetic(config));
  auto index = index::buildIndex(warehouseSnapshot(store), 100);
  auto workload = bench::typedPrefixes({"Kalo", "The Vashi", "Always Dor"});
  auto rows = bench::scanScalingSweep(index, workload, {1, 2, 4}, {10, 10, 1});
  REQUIRE(rows.size() == 3);
  for (const auto& r : rows) {
    CHECK(r.meanLatencyMs >= 0);
    CHECK(r.idealLatencyMs == doctest::Approx(rows[0].meanLatencyMs / static_cast<double>(r.P)));
  }
  std::ostringstream out;
  bench::writeCsv(out, rows);
  auto csv = parseCsv(out.str());
  REQUIRE(csv.size() == 4);
  CHECK(csv[0] == std::vector<std::string>{"P", "meanLatencyMs", "idealLatencyMs"});
  for (std::size_t i = 1; i < csv.size(); ++i) CHECK(csv[i].size() == 3);

  CHECK_THROWS_AS(bench::scanScalingSweep(index, workload, {2, 4}), InvalidQuery);
  CHECK_THROWS_AS(bench::scanScalingSweep(index, workload, {}), InvalidQuery);
}

TEST_CASE("qsm timing breakdown") {
  const std::vector<bench::QsmCase> cases = {
      {"kennedys", rdf::parseSparql("SELECT ?person WHERE { ?person foaf:surname \"Kennedys\"@en }")},
      {"wife", rdf::parseSparql("SELECT ?w WHERE { res:John_F._Kennedy dbo:wife ?w }")}};
  const std::string header =
      "query,alternativePredicatesMs,alternativeLiteralsMs,relaxationMs,candidateExecutionMs,suggestions";

  SUBCASE("local endpoint") {
    auto engine = testing::makeEngine("kennedy.nt");
    WorkerPool pool(2);
    auto rows = bench::qsmTimingBreakdown(cases, engine.context(pool));
    REQUIRE(rows.size() == 2);
    for (const auto& r : rows) {
      CHECK(r.timings.alternativePredicatesMs >= 0);
      CHECK(r.timings.alternativeLiteralsMs >= 0);
      CHECK(r.timings.relaxationMs >= 0);
      CHECK(r.timings.candidateExecutionMs >= 0);
      CHECK(r.suggestions > 0);
    }
    std::ostringstream out;
    bench::writeCsv(out, rows);
    auto csv = parseCsv(out.str());
    REQUIRE(csv.size() == 3);
    for (const auto& row : csv) CHECK(row.size() == 6);
  }
  SUBCASE("injected latency makes execution dominate") {
    auto engine = testing::makeEngine("kennedy.nt");
    auto slow = std::make_shared<rdf::LocalEndpoint>("slow", engine.store,
                                                     rdf::LocalEndpointOptions{std::chrono::milliseconds(30000),
                                                                               std::chrono::milliseconds(100)});
    WorkerPool pool(2);
    qsm::QsmContext ctx{engine.index, engine.lexicon, {slow}, pool, {}};
    auto rows = bench::qsmTimingBreakdown(cases, ctx);
    for (const auto& r : rows) {
      const auto& t = r.timings;
      CHECK(t.candidateExecutionMs >= 100);
      CHECK(t.candidateExecutionMs > t.alternativePredicatesMs);
      CHECK(t.candidateExecutionMs > t.alternativeLiteralsMs);
      CHECK(t.candidateExecutionMs > t.relaxationMs);
    }
  }
  SUBCASE("no cases") {
    auto engine = testing::makeEngine("kennedy.nt");
    WorkerPool pool(1);
    auto rows = bench::qsmTimingBreakdown({}, engine.context(pool));
    std::ostringstream out;
    bench::writeCsv(out, rows);
    CHECK(out.str() == header + "\n");
  }
}

TEST_CASE("svg charts") {
  auto line = bench::svgLineChart("a<b", "x", "y", {{"s1", {{0, 1}, {1, 2}}}, {"s2", {{0, 0.5}}}});
  CHECK(line.rfind("<svg", 0) == 0);
  CHECK(line.find("a&lt;b") != std::string::npos);
  CHECK(line.find("<polyline") != std::string::npos);
  CHECK(line.find("</svg>") != std::string::npos);
  auto bars = bench::svgBarChart("t", "ms", {"q1", "q2"}, {"a", "b"}, {{1, 2}, {3, 4}});
  std::size_t rects = 0;
  for (auto pos = bars.find("<rect"); pos != std::string::npos; pos = bars.find("<rect", pos + 1)) ++rects;
  CHECK(rects == 1 + 4 + 2);  // background, bars, legend
  CHECK(!bench::svgLineChart("empty", "x", "y", {}).empty());
}
