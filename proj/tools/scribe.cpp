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

#include <csignal>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <spdlog/spdlog.h>

#include "scribe/bench/bench.hpp"
#include "scribe/fed/federation.hpp"
#include "scribe/init/initializer.hpp"
#include "scribe/qsm/relax.hpp"
#include "scribe/rdf/ntriples.hpp"
#include "scribe/rdf/sparql.hpp"
#include "scribe/rdf/sparql_server.hpp"
#include "scribe/service/http_server.hpp"
#include "scribe/util/errors.hpp"
#include "scribe/util/logging.hpp"

using namespace scribe;
namespace fs = std::filesystem;

namespace {

const fs::path kDataDir = SCRIBE_DATA_DIR;

struct EndpointArgs {
  std::string id = "default";
  std::string url;
  std::string localFile;
  long timeoutMs = 30000;
};

struct InitArgs {
  init::InitConfig config;
  long budget = -1;
};

void addEndpointOptions(CLI::App* cmd, EndpointArgs& e) {
  cmd->add_option("--id", e.id, "Endpoint id");
  auto* url = cmd->add_option("--url", e.url, "SPARQL endpoint URL");
  auto* file = cmd->add_option("--local-file", e.localFile, "N-Triples file served in memory")->check(CLI::ExistingFile);
  url->excludes(file);
  cmd->add_option("--timeout-ms", e.timeoutMs, "Per-query timeout");
}

void addInitOptions(CLI::App* cmd, InitArgs& a) {
  cmd->add_option("--language", a.config.language, "Literal language tag; empty keeps all");
  cmd->add_option("--max-literal-length", a.config.maxLiteralLength);
  cmd->add_option("--page-size", a.config.pageSize);
  cmd->add_option("--significant", a.config.significantLiteralCount, "Literals kept in the suffix tree");
  cmd->add_option("--budget", a.budget, "Cap on harvest queries");
  cmd->add_flag("--warehouse", a.config.warehouseMode, "Single-pass harvest for local data");
}

rdf::EndpointPtr endpointFrom(const EndpointArgs& e) {
  rdf::EndpointSpec spec;
  spec.id = e.id;
  spec.url = e.url;
  spec.localFile = e.localFile;
  spec.timeout = std::chrono::milliseconds(e.timeoutMs);
  return rdf::makeEndpoint(spec);
}

init::InitConfig initConfig(const InitArgs& a) {
  auto c = a.config;
  if (a.budget >= 0) c.queryBudget = static_cast<std::size_t>(a.budget);
  c.validate();
  return c;
}

similarity::Lexicon loadLexicon(const std::string& path) {
  if (!path.empty()) return similarity::Lexicon::load(path);
  auto fallback = kDataDir / "lexicon/sample.json";
  if (fs::exists(fallback)) return similarity::Lexicon::load(fallback);
  return {};
}

void writeFile(const fs::path& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << content;
}

std::vector<std::size_t> parseList(const std::string& s) {
  std::vector<std::size_t> out;
  std::stringstream in(s);
  for (std::string part; std::getline(in, part, ',');) {
    if (!part.empty()) out.push_back(std::stoul(part));
  }
  return out;
}

service::HttpServer* gServer = nullptr;

void onSignal(int) {
  if (gServer) gServer->stop();
}

struct BenchArgs {
  std::string kind;
  fs::path out = "bench-out";
  std::size_t entities = 25000;
  std::uint64_t seed = 42;
  std::string workload;
  std::string counts = "0,1000,2000,5000,10000,20000,30000,40000,50000";
  std::string threads = "1,2,4,8";
  std::size_t indexK = 1000;
  std::size_t repetitions = 3;
  long delayMs = 0;
};

int runBench(const BenchArgs& a) {
  fs::create_directories(a.out);
  auto terms = bench::loadTerms(a.workload.empty() ? kDataDir / "workload/query_terms.txt" : fs::path(a.workload));
  auto workload = bench::typedPrefixes(terms);

  if (a.kind == "qsm") {
    std::vector<std::pair<std::string, std::string>> specs = {
        {"kennedy.nt", "SELECT ?person WHERE { ?person foaf:surname \"Kennedys\"@en }"},
        {"kennedy.nt", "SELECT ?w WHERE { res:John_F._Kennedy dbo:wife ?w }"},
        {"kerouac.nt",
         "SELECT ?book WHERE { ?book dbo:writer \"Jack Kerouac\"@en . ?book dbo:publisher \"Viking Press\"@en . }"}};
    std::vector<bench::QsmRow> rows;
    auto lexicon = loadLexicon("");
    WorkerPool pool(4);
    for (std::size_t i = 0; i < specs.size(); ++i) {
      auto store = std::make_shared<const rdf::TripleStore>(rdf::loadNTriples(kDataDir / "fixtures" / specs[i].first));
      auto local = std::make_shared<rdf::LocalEndpoint>(
          "fixture", store, rdf::LocalEndpointOptions{std::chrono::milliseconds(30000), std::chrono::milliseconds(a.delayMs)});
      auto fast = std::make_shared<rdf::LocalEndpoint>("fixture", store);
      auto index = index::buildIndex(init::initialize(*fast, {}), 40000);
      qsm::QsmContext ctx{index, lexicon, {local}, pool, {}};
      auto caseRows = bench::qsmTimingBreakdown({{"q" + std::to_string(i + 1), rdf::parseSparql(specs[i].second)}}, ctx);
      rows.insert(rows.end(), caseRows.begin(), caseRows.end());
    }
    std::ofstream csv(a.out / "qsm_timing.csv");
    bench::writeCsv(csv, rows);
    std::vector<std::string> groups;
    std::vector<std::vector<double>> values;
    for (const auto& r : rows) {
      groups.push_back(r.name);
      values.push_back({r.timings.alternativePredicatesMs, r.timings.alternativeLiteralsMs, r.timings.relaxationMs,
                        r.timings.candidateExecutionMs});
    }
    writeFile(a.out / "qsm_timing.svg",
              bench::svgBarChart("QSM task time", "ms", groups,
                                 {"alt. predicates", "alt. literals", "relaxation", "candidate exec."}, values));
    bench::writeCsv(std::cout, rows);
    return 0;
  }

  bench::SyntheticConfig config{a.seed, a.entities, terms};
  auto store = std::make_shared<const rdf::TripleStore>(bench::generateSynthetic(config));
  rdf::LocalEndpoint local("synthetic", store);
  init::InitConfig ic;
  ic.warehouseMode = true;
  auto snapshot = init::initialize(local, ic);
  spdlog::info("synthetic store: {} triples, {} literals", store->size(), snapshot.literals.size());

  if (a.kind == "hit-ratio") {
    auto rows = bench::hitRatioSweep(snapshot, parseList(a.counts), workload);
    std::ofstream csv(a.out / "hit_ratio.csv");
    bench::writeCsv(csv, rows);
    bench::Series s{"hit ratio", {}};
    for (const auto& r : rows) s.points.emplace_back(static_cast<double>(r.K), r.hitRatio);
    writeFile(a.out / "hit_ratio.svg", bench::svgLineChart("Suffix-tree hit ratio", "indexed literals", "hit ratio", {s}));
    bench::writeCsv(std::cout, rows);
    return 0;
  }
  if (a.kind == "scan-scaling") {
    auto index = index::buildIndex(snapshot, a.indexK);
    auto rows = bench::scanScalingSweep(index, workload, parseList(a.threads), {10, 10, a.repetitions});
    std::ofstream csv(a.out / "scan_scaling.csv");
    bench::writeCsv(csv, rows);
    bench::Series measured{"measured", {}}, ideal{"ideal", {}};
    for (const auto& r : rows) {
      measured.points.emplace_back(static_cast<double>(r.P), r.meanLatencyMs);
      ideal.points.emplace_back(static_cast<double>(r.P), r.idealLatencyMs);
    }
    writeFile(a.out / "scan_scaling.svg",
              bench::svgLineChart("Bin scan latency", "scan tasks", "mean latency (ms)", {measured, ideal}));
    bench::writeCsv(std::cout, rows);
    return 0;
  }
  throw InvalidQuery("unknown benchmark '" + a.kind + "'");
}

}  // namespace

int main(int argc, char** argv) {
  logging::configureFromEnv();
  CLI::App app{"SPARQL query completion and suggestion engine"};
  app.require_subcommand(1);

  EndpointArgs endpoint;
  InitArgs initArgs;

  auto* initCmd = app.add_subcommand("init", "Initialize the cache of an endpoint and write a snapshot");
  std::string snapshotOut;
  addEndpointOptions(initCmd, endpoint);
  addInitOptions(initCmd, initArgs);
  initCmd->add_option("--out", snapshotOut, "Snapshot file")->required();

  auto* indexCmd = app.add_subcommand("index", "Build the literal index from a snapshot");
  std::string snapshotIn, indexOut;
  std::size_t K = 40000;
  indexCmd->add_option("--snapshot", snapshotIn)->required()->check(CLI::ExistingFile);
  indexCmd->add_option("--out", indexOut)->required();
  indexCmd->add_option("--K", K, "Literals kept in the suffix tree");

  auto* serveCmd = app.add_subcommand("serve", "Run the HTTP service");
  std::string host = "127.0.0.1", snapshotDir, lexiconPath, uiDir;
  int port = 8080;
  std::vector<std::string> preload;
  serveCmd->add_option("--host", host);
  serveCmd->add_option("--port", port);
  serveCmd->add_option("--snapshot-dir", snapshotDir, "Where caches of registered endpoints are written");
  serveCmd->add_option("--lexicon", lexiconPath, "Lexicon JSON");
  serveCmd->add_option("--ui", uiDir, "Static UI directory")->check(CLI::ExistingDirectory);
  serveCmd->add_option("--register", preload, "N-Triples files registered at startup")->check(CLI::ExistingFile);

  auto* queryCmd = app.add_subcommand("query", "Execute a query and print suggestions");
  std::string queryText, queryFile, tracePath;
  std::size_t k = 10, budget = 100;
  bool asJson = false;
  addEndpointOptions(queryCmd, endpoint);
  addInitOptions(queryCmd, initArgs);
  auto* qopt = queryCmd->add_option("--query", queryText, "SPARQL text");
  auto* fopt = queryCmd->add_option("--file", queryFile, "File holding the query")->check(CLI::ExistingFile);
  qopt->excludes(fopt);
  queryCmd->add_option("--lexicon", lexiconPath);
  queryCmd->add_option("--k", k, "Suggestions per list");
  queryCmd->add_option("--relax-budget", budget, "Relaxation query budget");
  queryCmd->add_option("--trace-relaxation", tracePath, "Write the relaxation trace as JSON");
  queryCmd->add_flag("--json", asJson, "Print JSON");

  auto* benchCmd = app.add_subcommand("bench", "Run a benchmark");
  BenchArgs benchArgs;
  benchCmd->add_option("kind", benchArgs.kind, "hit-ratio | scan-scaling | qsm")
      ->required()
      ->check(CLI::IsMember({"hit-ratio", "scan-scaling", "qsm"}));
  benchCmd->add_option("--out", benchArgs.out, "Output directory");
  benchCmd->add_option("--entities", benchArgs.entities);
  benchCmd->add_option("--seed", benchArgs.seed);
  benchCmd->add_option("--workload", benchArgs.workload, "Term list")->check(CLI::ExistingFile);
  benchCmd->add_option("--counts", benchArgs.counts, "Comma-separated K values");
  benchCmd->add_option("--threads", benchArgs.threads, "Comma-separated P values starting at 1");
  benchCmd->add_option("--index-K", benchArgs.indexK, "Tree literals for the scan benchmark");
  benchCmd->add_option("--repetitions", benchArgs.repetitions);
  benchCmd->add_option("--delay-ms", benchArgs.delayMs, "Latency added to each endpoint query (qsm)");

  auto* sparqlCmd = app.add_subcommand("sparql-serve", "Serve an N-Triples file as a SPARQL endpoint");
  std::string sparqlFile;
  long delayMs = 0;
  sparqlCmd->add_option("--local-file", sparqlFile)->required()->check(CLI::ExistingFile);
  sparqlCmd->add_option("--host", host);
  sparqlCmd->add_option("--port", port);
  sparqlCmd->add_option("--delay-ms", delayMs);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*initCmd) {
      auto ep = endpointFrom(endpoint);
      auto snapshot = init::initialize(*ep, initConfig(initArgs));
      init::writeSnapshot(snapshot, snapshotOut);
      std::cout << service::initStatsToJson(snapshot.stats).dump(2) << "\n";
    } else if (*indexCmd) {
      auto index = index::buildIndex(init::readSnapshot(snapshotIn), K);
      index.save(indexOut);
      std::cout << "tree entries: " << index.entries().size() << ", residual literals: " << index.bins().totalCount()
                << "\n";
    } else if (*serveCmd) {
      service::ServiceOptions options;
      options.lexicon = loadLexicon(lexiconPath);
      if (!snapshotDir.empty()) options.snapshotDir = snapshotDir;
      auto svc = std::make_shared<service::Service>(std::move(options));
      for (const auto& file : preload) {
        auto reply = svc->registerEndpoint({{"id", fs::path(file).stem().string()}, {"localFile", file}});
        if (reply.status != 200) throw Error(reply.body.dump());
      }
      service::HttpServer server(svc);
      if (!uiDir.empty() && !server.mountStatic(uiDir)) throw Error("cannot serve " + uiDir);
      gServer = &server;
      std::signal(SIGINT, onSignal);
      std::signal(SIGTERM, onSignal);
      server.listen(host, port);
    } else if (*queryCmd) {
      if (queryText.empty()) {
        if (queryFile.empty()) throw InvalidQuery("give --query or --file");
        std::ifstream in(queryFile);
        queryText.assign(std::istreambuf_iterator<char>(in), {});
      }
      auto query = rdf::parseSparql(queryText);
      rdf::validate(query);
      auto ep = endpointFrom(endpoint);
      auto snapshot = init::initialize(*ep, initConfig(initArgs));
      auto index = index::buildIndex(snapshot, initArgs.config.significantLiteralCount);
      auto lexicon = loadLexicon(lexiconPath);
      WorkerPool pool(4);
      qsm::QsmContext ctx{index, lexicon, {ep}, pool, {}};
      auto outcome = fed::executeFederated(ctx.endpoints, query);
      auto suggestions = qsm::suggestTermQueries(query, ctx, k);
      qsm::RelaxationResult details;
      qsm::RelaxOptions relax;
      relax.budget = budget;
      for (auto& s : qsm::suggestRelaxations(query, ctx, relax, &details)) suggestions.push_back(std::move(s));
      if (!tracePath.empty()) writeFile(tracePath, details.trace.dump(2) + "\n");

      if (asJson) {
        nlohmann::json out{{"timedOut", outcome.timedOut()}, {"suggestions", nlohmann::json::array()}};
        out["result"] = outcome.timedOut() ? nlohmann::json(nullptr) : rdf::toSparqlJson(outcome.rows());
        for (std::size_t i = 0; i < suggestions.size(); ++i) {
          out["suggestions"].push_back(service::suggestionToJson(suggestions[i], i));
        }
        std::cout << out.dump(2) << "\n";
      } else {
        if (outcome.timedOut()) {
          std::cout << "query timed out\n";
        } else {
          const auto& rs = outcome.rows();
          for (std::size_t c = 0; c < rs.columns.size(); ++c) std::cout << (c ? "\t" : "") << "?" << rs.columns[c];
          std::cout << "\n";
          for (const auto& row : rs.rows) {
            for (std::size_t c = 0; c < row.size(); ++c) std::cout << (c ? "\t" : "") << row[c].toString();
            std::cout << "\n";
          }
          std::cout << rs.size() << " rows\n";
        }
        for (std::size_t i = 0; i < suggestions.size(); ++i) {
          std::cout << "[" << i << "] " << suggestions[i].message << "\n    " << rdf::serializeSparql(suggestions[i].query)
                    << "\n";
        }
      }
    } else if (*benchCmd) {
      return runBench(benchArgs);
    } else if (*sparqlCmd) {
      auto store = std::make_shared<const rdf::TripleStore>(rdf::loadNTriples(sparqlFile));
      auto ep = std::make_shared<rdf::LocalEndpoint>(
          fs::path(sparqlFile).stem().string(), store,
          rdf::LocalEndpointOptions{std::chrono::milliseconds(30000), std::chrono::milliseconds(delayMs)});
      rdf::SparqlHttpServer server(ep);
      server.listen(host, port);
    }
  } catch (const std::exception& e) {
    spdlog::error("{}", e.what());
    return 1;
  }
  return 0;
}
