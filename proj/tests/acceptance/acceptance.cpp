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

// Acceptance run: one PASS/FAIL/SKIP line per primary criterion. Exits
// non-zero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "assignment_oracle.hpp"
#include "engine_support.hpp"
#include "graph_oracles.hpp"
#include "jw_oracle.hpp"
#include "scribe/bench/bench.hpp"
#include "scribe/index/suffix_tree.hpp"
#include "scribe/qsm/graph_search.hpp"
#include "scribe/qsm/relax.hpp"
#include "scribe/qsm/steiner.hpp"
#include "scribe/rdf/sparql.hpp"
#include "scribe/service/service.hpp"
#include "scribe/similarity/jaro_winkler.hpp"
#include "scribe/util/errors.hpp"
#include "scribe/util/logging.hpp"
#include "scribe/util/text.hpp"
#include "support.hpp"

using namespace scribe;
using nlohmann::json;

namespace {

// Pinned tolerances.
constexpr double kKerouacMaxSeconds = 5.0;
constexpr std::size_t kKennedyCount = 12;
constexpr std::size_t kAssignmentInstances = 500;
constexpr std::size_t kSuffixCases = 1000;
constexpr std::size_t kVisitFactor = 4;
constexpr std::size_t kJwPairs = 1000;
constexpr double kJwTolerance = 1e-12;
constexpr std::size_t kDijkstraGraphs = 200;
constexpr std::size_t kMaxGraphVertices = 200;
constexpr std::size_t kSteinerInstances = 100;
constexpr double kSteinerSlack = 1e-9;
constexpr std::size_t kRelaxBudget = 100;
constexpr std::size_t kScalingWorkers = 8;
constexpr double kScalingRatio = 0.5;
constexpr std::size_t kSyntheticLiterals = 50000;

enum class Status { Pass, Fail, Skip };

struct Outcome {
  Status status;
  std::string detail;
};

Outcome pass(std::string d) { return {Status::Pass, std::move(d)}; }
Outcome fail(std::string d) { return {Status::Fail, std::move(d)}; }

const std::vector<std::string> kFixtures = {"init_hierarchy.nt", "init_flat.nt", "init_timeouts.nt", "kerouac.nt",
                                            "kennedy.nt"};

std::shared_ptr<service::Service> makeService(std::shared_ptr<rdf::MeteredEndpoint>* meter = nullptr) {
  service::ServiceOptions options;
  options.lexicon = similarity::Lexicon::load(testing::dataPath("lexicon/sample.json"));
  options.qcmThreads = 2;
  options.qsmThreads = 2;
  if (meter) {
    options.wrapEndpoint = [meter](rdf::EndpointPtr inner) {
      *meter = std::make_shared<rdf::MeteredEndpoint>(std::move(inner));
      return *meter;
    };
  }
  return std::make_shared<service::Service>(std::move(options));
}

void registerFixture(service::Service& svc, const std::string& name) {
  auto r = svc.registerEndpoint({{"id", name}, {"localFile", testing::dataPath("fixtures/" + name).string()}});
  if (r.status != 200) throw Error("cannot register " + name + ": " + r.body.dump());
}

Outcome kerouacRelaxation() {
  const auto start = std::chrono::steady_clock::now();
  auto svc = makeService();
  registerFixture(*svc, "kerouac.nt");
  auto r = svc->execute({{"endpointId", "kerouac.nt"},
                         {"query",
                          "SELECT ?book WHERE { ?book dbo:writer \"Jack Kerouac\"@en . ?book dbo:publisher \"Viking "
                          "Press\"@en . }"}});
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (r.status != 200) return fail("execute returned " + std::to_string(r.status));
  const auto rows = r.body["result"]["results"]["bindings"].size();
  if (rows != 0) return fail("original query returned " + std::to_string(rows) + " rows");

  // Evaluate each structural suggestion independently of the prefetch.
  auto store = std::make_shared<const rdf::TripleStore>(testing::fixture("kerouac.nt"));
  rdf::LocalEndpoint oracle("oracle", store);
  const std::set<rdf::Term> expected = {testing::res("On_the_Road"), testing::res("Door_Wide_Open")};
  std::size_t structural = 0, exact = 0;
  for (const auto& s : r.body["suggestions"]) {
    if (s["kind"] != "structure") continue;
    ++structural;
    auto outcome = oracle.execute(s["query"].get<std::string>());
    if (outcome.timedOut()) continue;
    const auto& rs = outcome.rows();
    int col = rs.columnIndex("book");
    if (col < 0) continue;
    std::set<rdf::Term> got;
    for (const auto& row : rs.rows) got.insert(row[static_cast<std::size_t>(col)]);
    exact += got == expected;
  }
  std::ostringstream d;
  d << structural << " structural suggestions, " << exact << " with exactly {On_the_Road, Door_Wide_Open}, "
    << seconds << " s";
  if (exact == 0) return fail(d.str());
  if (seconds >= kKerouacMaxSeconds) return fail(d.str() + " (limit " + std::to_string(kKerouacMaxSeconds) + " s)");
  return pass(d.str());
}

Outcome kennedys() {
  auto store = testing::fixture("kennedy.nt");
  std::set<rdf::Term> people;
  for (const auto& t : store.triples()) {
    if (t.predicate == testing::foaf("surname") && t.object == testing::en("Kennedy")) people.insert(t.subject);
  }
  if (people.size() != kKennedyCount) return fail("fixture holds " + std::to_string(people.size()) + " Kennedys");

  auto svc = makeService();
  registerFixture(*svc, "kennedy.nt");
  auto r = svc->execute(
      {{"endpointId", "kennedy.nt"}, {"query", "SELECT ?person WHERE { ?person foaf:surname \"Kennedys\"@en }"}});
  if (r.status != 200) return fail("execute returned " + std::to_string(r.status));
  if (!r.body["result"]["results"]["bindings"].empty()) return fail("original query has answers");
  for (const auto& s : r.body["suggestions"]) {
    if (s["kind"] == "literal" && s["alternative"]["replacement"]["value"] == "Kennedy") {
      const auto n = s["answerCount"].get<std::size_t>();
      if (n != people.size()) return fail("answerCount " + std::to_string(n));
      return pass("substitution Kennedys -> Kennedy with answerCount " + std::to_string(n));
    }
  }
  return fail("no Kennedy substitution among " + std::to_string(r.body["suggestions"].size()) + " suggestions");
}

Outcome taskAssignment() {
  std::mt19937 rng(4711);
  for (std::size_t i = 0; i < kAssignmentInstances; ++i) {
    std::vector<std::size_t> sizes(rng() % 16);
    for (auto& s : sizes) s = rng() % (i % 4 == 0 ? 3 : 80);
    const std::size_t P = 1 + rng() % 12;
    auto got = qcm::assignTasks(sizes, P);
    if (got != testing::traceAssignment(sizes, P)) return fail("instance " + std::to_string(i) + " differs from trace");
    // Every literal position exactly once.
    std::vector<std::vector<int>> seen(sizes.size());
    for (std::size_t b = 0; b < sizes.size(); ++b) seen[b].assign(sizes[b], 0);
    for (const auto& ranges : got) {
      for (const auto& r : ranges) {
        if (r.bin >= sizes.size() || r.end >= sizes[r.bin] || r.start > r.end) return fail("range out of bounds");
        for (auto p = r.start; p <= r.end; ++p) ++seen[r.bin][p];
      }
    }
    for (const auto& bin : seen) {
      if (std::any_of(bin.begin(), bin.end(), [](int c) { return c != 1; })) return fail("coverage or overlap");
    }
  }
  return pass(std::to_string(kAssignmentInstances) + " instances equal the trace; coverage and disjointness exact");
}

Outcome suffixTree() {
  std::mt19937 rng(8088);
  std::size_t worst = 0;
  double worstRatio = 0;
  for (std::size_t c = 0; c < kSuffixCases; ++c) {
    const int alpha = 2 + static_cast<int>(c % 6);
    std::vector<std::u32string> strings(rng() % 30);
    for (auto& s : strings) {
      auto n = rng() % 14;
      for (std::size_t i = 0; i < n; ++i) s.push_back(U'a' + static_cast<char32_t>(rng() % alpha));
    }
    index::SuffixTree tree(strings);
    std::u32string t;
    if (!strings.empty() && c % 2 == 0) {
      const auto& src = strings[rng() % strings.size()];
      if (!src.empty()) {
        auto a = rng() % src.size();
        t = src.substr(a, 1 + rng() % (src.size() - a));
      }
    }
    if (t.empty()) {
      auto n = 1 + rng() % 4;
      for (std::size_t i = 0; i < n; ++i) t.push_back(U'a' + static_cast<char32_t>(rng() % alpha));
    }
    std::vector<std::uint32_t> brute;
    std::size_t z = 0;
    for (std::size_t i = 0; i < strings.size(); ++i) {
      if (strings[i].find(t) != std::u32string::npos) brute.push_back(static_cast<std::uint32_t>(i));
      for (auto pos = strings[i].find(t); pos != std::u32string::npos; pos = strings[i].find(t, pos + 1)) ++z;
    }
    std::size_t visits = 0;
    if (tree.find(t, &visits) != brute) return fail("case " + std::to_string(c) + " differs from brute force");
    const std::size_t bound = kVisitFactor * (t.size() + z);
    if (visits > bound) return fail("case " + std::to_string(c) + ": " + std::to_string(visits) + " visits");
    double ratio = static_cast<double>(visits) / static_cast<double>(t.size() + z);
    if (ratio > worstRatio) {
      worstRatio = ratio;
      worst = c;
    }
  }
  std::ostringstream d;
  d << kSuffixCases << " cases equal brute force; max visits/(|t|+z) = " << worstRatio << " (case " << worst << ")";
  return pass(d.str());
}

Outcome jaroWinkler() {
  std::mt19937 rng(31337);
  const std::string alphabet = "abcdefABCDEF xyz-";
  auto draw = [&] {
    std::string s;
    auto n = rng() % 16;
    for (std::size_t i = 0; i < n; ++i) s += alphabet[rng() % alphabet.size()];
    return s;
  };
  double maxError = 0;
  for (std::size_t i = 0; i < kJwPairs; ++i) {
    auto a = draw();
    auto b = i % 3 == 0 ? a.substr(0, a.size() / 2) + draw() : draw();
    const double ab = similarity::jaroWinkler(a, b);
    const double ba = similarity::jaroWinkler(b, a);
    maxError = std::max(maxError, std::abs(ab - testing::textbookJaroWinkler(a, b)));
    if (ab != ba) return fail("asymmetric on pair " + std::to_string(i));
    if (ab < 0.0 || ab > 1.0) return fail("out of range on pair " + std::to_string(i));
  }
  std::ostringstream d;
  d << kJwPairs << " pairs, max |jw - oracle| = " << maxError;
  return maxError <= kJwTolerance ? pass(d.str()) : fail(d.str());
}

Outcome dijkstra() {
  std::mt19937 rng(2718);
  double bi = 0, uni = 0;
  std::size_t branchy = 0;
  for (std::size_t i = 0; i < kDijkstraGraphs; ++i) {
    const std::size_t n = 2 + rng() % (kMaxGraphVertices - 1);
    const std::size_t branching = 1 + rng() % 5;
    auto g = testing::randomGraph(rng, n, branching, 1 + rng() % 10);
    std::vector<qsm::Vertex> s{static_cast<qsm::Vertex>(rng() % n)}, t{static_cast<qsm::Vertex>(rng() % n)};
    auto dist = testing::allDistances(g, s);
    auto b = qsm::bidirectionalSearch(s, t, g.expander());
    auto u = qsm::dijkstraSearch(s, t, g.expander());
    if (dist[t[0]] == qsm::kInfinity) {
      if (b.distance) return fail("graph " + std::to_string(i) + ": path found between disconnected vertices");
      continue;
    }
    if (!b.distance || *b.distance != dist[t[0]]) return fail("graph " + std::to_string(i) + ": wrong distance");
    for (const auto& p : b.paths) {
      qsm::Weight w = 0;
      for (auto e : p.edges) w += g.edges[e].weight;
      if (w != dist[t[0]]) return fail("graph " + std::to_string(i) + ": path weight differs");
    }
    if (branching >= 3) {
      ++branchy;
      bi += static_cast<double>(b.expanded);
      uni += static_cast<double>(u.expanded);
    }
  }
  if (branchy == 0) return fail("no graph with branching >= 3");
  std::ostringstream d;
  d << "distances exact on " << kDijkstraGraphs << " graphs; mean expanded (branching >= 3, " << branchy
    << " graphs): bidirectional " << bi / branchy << " vs unidirectional " << uni / branchy;
  return bi < uni ? pass(d.str()) : fail(d.str());
}

Outcome steiner() {
  std::mt19937 rng(1618);
  std::size_t solved = 0;
  double worst = 0;
  while (solved < kSteinerInstances) {
    const std::size_t n = 4 + rng() % 7;
    auto g = testing::randomGraph(rng, n, 2 + rng() % 2, 1 + rng() % 6);
    const std::size_t s = 3 + rng() % 2;
    std::vector<qsm::Vertex> all(n);
    std::iota(all.begin(), all.end(), 0);
    std::shuffle(all.begin(), all.end(), rng);
    std::vector<qsm::Vertex> terminals(all.begin(), all.begin() + static_cast<long>(s));
    const auto opt = testing::exactSteiner(g, terminals);
    if (opt == std::numeric_limits<std::uint64_t>::max()) continue;
    ++solved;
    std::vector<std::vector<qsm::Vertex>> groups;
    for (auto t : terminals) groups.push_back({t});
    auto trees = qsm::buildTrees(qsm::connectGroups(groups, g.expander()).graphs, g.edges);
    if (trees.empty()) return fail("instance " + std::to_string(solved) + ": no tree");
    const double bound = 2.0 - 2.0 / static_cast<double>(s);
    for (const auto& t : trees) {
      const double ratio = static_cast<double>(t.weight) / static_cast<double>(opt);
      worst = std::max(worst, ratio);
      if (static_cast<double>(t.weight) > bound * static_cast<double>(opt) + kSteinerSlack) {
        return fail("instance " + std::to_string(solved) + ": weight " + std::to_string(t.weight) + ", optimum " +
                    std::to_string(opt));
      }
    }
  }
  std::ostringstream d;
  d << kSteinerInstances << " instances, worst weight/optimum = " << worst;
  return pass(d.str());
}

Outcome budget() {
  WorkerPool pool(2);
  std::size_t runs = 0, maxUsed = 0, memoChecked = 0;
  for (const auto& name : kFixtures) {
    auto engine = testing::makeEngine(name);
    auto ctx = engine.context(pool);
    auto literals = engine.index.treeLiterals();
    for (std::size_t i = 0; i + 2 < literals.size() && i < 15; i += 3) {
      rdf::StructuredQuery q;
      q.patterns = {{rdf::Term::variable("a"), testing::foaf("name"), testing::en(literals[i])},
                    {rdf::Term::variable("a"), testing::ont("related"), testing::en(literals[i + 1])},
                    {rdf::Term::variable("b"), testing::ont("other"), testing::en(literals[i + 2])}};
      auto groups = qsm::buildSeedGroups(q, ctx);
      engine.metered->reset();
      auto r = qsm::relaxStructure(groups, *engine.metered, {}, {kRelaxBudget});
      const auto used = engine.metered->count();
      ++runs;
      maxUsed = std::max(maxUsed, used);
      if (used > kRelaxBudget) return fail(name + ": " + std::to_string(used) + " queries");
      if (used != r.queriesIssued) return fail(name + ": meter and relaxation disagree");
    }

    // Expand everything reachable, then re-expand from the memo.
    engine.metered->reset();
    qsm::ExpansionGraph g(*engine.metered, kRelaxBudget, {});
    std::vector<qsm::Vertex> frontier;
    for (const auto& l : literals) frontier.push_back(g.intern(testing::en(l)));
    std::vector<qsm::Vertex> expanded;
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      const auto* arcs = g.expand(frontier[i]);
      if (!arcs) break;
      expanded.push_back(frontier[i]);
      for (const auto& a : *arcs) {
        if (!g.expanded(a.to)) frontier.push_back(a.to);
      }
    }
    if (engine.metered->count() > kRelaxBudget) return fail(name + ": expansion exceeded the budget");
    engine.metered->reset();
    for (auto v : expanded) g.expand(v);
    if (engine.metered->count() != 0) return fail(name + ": memo re-expansion issued queries");
    memoChecked += expanded.size();
  }
  std::ostringstream d;
  d << runs << " relaxations on " << kFixtures.size() << " fixtures, max " << maxUsed << " queries; " << memoChecked
    << " memo re-expansions issued 0";
  return pass(d.str());
}

std::set<std::string> literalSet(const init::CacheSnapshot& s) {
  std::set<std::string> out;
  for (const auto& l : s.literals) out.insert(l.lexical);
  return out;
}

Outcome initializer() {
  struct Case {
    std::string fixture;
    std::size_t timeoutThreshold;  // 0 = no scripted timeouts
  };
  const std::vector<Case> cases = {{"init_hierarchy.nt", 0}, {"init_flat.nt", 0}, {"init_timeouts.nt", 5}};
  std::size_t budgetRuns = 0;
  for (const auto& c : cases) {
    auto store = std::make_shared<const rdf::TripleStore>(testing::fixture(c.fixture));
    const auto oracle = testing::filteredLiterals(*store, "en", 80);
    rdf::EndpointPtr ep = c.timeoutThreshold ? testing::sizeLimitedEndpoint(store, c.timeoutThreshold)
                                             : std::make_shared<rdf::LocalEndpoint>("t", store);
    auto fed = init::initialize(*ep, {});
    if (literalSet(fed) != oracle) return fail(c.fixture + ": harvested literals differ from the filtered scan");
    rdf::LocalEndpoint local("t", store);
    init::InitConfig wh;
    wh.warehouseMode = true;
    auto warehouse = init::initialize(local, wh);
    if (warehouse.literals != init::initialize(local, {}).literals || literalSet(warehouse) != oracle) {
      return fail(c.fixture + ": warehouse and federated paths disagree");
    }
    for (std::size_t b = 0; b <= 25; ++b) {
      init::InitConfig cfg;
      cfg.queryBudget = b;
      init::Initializer init(*ep, cfg);
      init.run();
      ++budgetRuns;
      if (init.meter().used() > b) return fail(c.fixture + ": budget " + std::to_string(b) + " exceeded");
    }
  }
  return pass("3 fixtures sound (one with scripted timeouts); warehouse == federated; " + std::to_string(budgetRuns) +
              " budgeted runs within budget");
}

Outcome hitRatioAndScaling() {
  auto terms = bench::loadTerms(testing::dataPath("workload/query_terms.txt"));
  bench::SyntheticConfig config;
  config.plantedTerms = terms;
  auto store = std::make_shared<const rdf::TripleStore>(bench::generateSynthetic(config));
  rdf::LocalEndpoint local("synthetic", store);
  init::InitConfig ic;
  ic.warehouseMode = true;
  auto snapshot = init::initialize(local, ic);
  if (snapshot.literals.size() != kSyntheticLiterals) {
    return fail("synthetic fixture has " + std::to_string(snapshot.literals.size()) + " literals");
  }
  const auto workload = bench::typedPrefixes(terms);
  auto rows = bench::hitRatioSweep(snapshot, {0, 1000, 2000, 5000, 10000, 20000, 30000, 40000, 50000}, workload);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].hitRatio < rows[i - 1].hitRatio) return fail("hit ratio drops at K = " + std::to_string(rows[i].K));
  }
  std::ostringstream d;
  d << "hit ratio non-decreasing (" << rows.front().hitRatio << " at K=0 to " << rows.back().hitRatio
    << " at K=50000); ";

  auto index = index::buildIndex(snapshot, 1000);
  auto scan = bench::scanScalingSweep(index, workload, {1, kScalingWorkers}, {10, 10, 3});
  const double ratio = scan[1].meanLatencyMs / scan[0].meanLatencyMs;
  const auto cores = std::thread::hardware_concurrency();
  d << "latency(" << kScalingWorkers << ")/latency(1) = " << ratio << " on " << cores << " cores";
  if (cores < kScalingWorkers) {
    return {Status::Skip, d.str() + "; scan scaling needs " + std::to_string(kScalingWorkers) + " cores"};
  }
  return ratio <= kScalingRatio ? pass(d.str()) : fail(d.str());
}

Outcome prefetchContract() {
  std::shared_ptr<rdf::MeteredEndpoint> meter;
  const std::vector<std::pair<std::string, std::string>> cases = {
      {"kennedy.nt", "SELECT ?person WHERE { ?person foaf:surname \"Kennedys\"@en }"},
      {"kennedy.nt", "SELECT ?w WHERE { res:John_F._Kennedy dbo:wife ?w }"},
      {"kerouac.nt",
       "SELECT ?book WHERE { ?book dbo:writer \"Jack Kerouac\"@en . ?book dbo:publisher \"Viking Press\"@en . }"}};
  std::size_t accepted = 0;
  for (const auto& [fixture, query] : cases) {
    auto svc = makeService(&meter);
    registerFixture(*svc, fixture);
    auto first = svc->execute({{"endpointId", fixture}, {"query", query}});
    if (first.status != 200) return fail("execute returned " + std::to_string(first.status));
    const std::size_t n = first.body["suggestions"].size();
    const std::string session = first.body["sessionId"];
    for (std::size_t i = 0; i < n; ++i) {
      auto again = svc->execute({{"endpointId", fixture}, {"query", query}, {"sessionId", session}});
      const auto& s = again.body["suggestions"][i];
      const auto before = meter->count();
      auto r = svc->accept({{"sessionId", session}, {"suggestionIndex", i}});
      if (r.status != 200) return fail("accept returned " + std::to_string(r.status));
      if (meter->count() != before) return fail("accept issued " + std::to_string(meter->count() - before) + " queries");
      if (r.body["result"]["results"]["bindings"].size() != std::min<std::size_t>(s["answerCount"].get<std::size_t>(), 1000)) {
        return fail("accepted rows differ from answerCount");
      }
      ++accepted;
    }
  }
  if (accepted == 0) return fail("no suggestions to accept");
  return pass(std::to_string(accepted) + " accepts, 0 endpoint queries");
}

}  // namespace

int main() {
  logging::configureFromEnv("warn");
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"kerouac-end-to-end", kerouacRelaxation},
      {"kennedys-substitution", kennedys},
      {"task-assignment-oracle", taskAssignment},
      {"suffix-tree-completeness", suffixTree},
      {"jaro-winkler-reference", jaroWinkler},
      {"bidirectional-dijkstra", dijkstra},
      {"steiner-bound", steiner},
      {"relaxation-budget", budget},
      {"initializer-soundness", initializer},
      {"hit-ratio-and-scan-scaling", hitRatioAndScaling},
      {"prefetch-contract", prefetchContract},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    const char* tag = o.status == Status::Pass ? "PASS" : o.status == Status::Fail ? "FAIL" : "SKIP";
    failures += o.status == Status::Fail;
    std::printf("%s %2zu %-28s %s\n", tag, i + 1, criteria[i].first.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
