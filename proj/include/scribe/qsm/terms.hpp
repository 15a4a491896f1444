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
#include <string>
#include <vector>

#include "scribe/index/literal_index.hpp"
#include "scribe/qsm/suggestion.hpp"
#include "scribe/rdf/endpoint.hpp"
#include "scribe/similarity/jaro_winkler.hpp"
#include "scribe/similarity/lexicon.hpp"
#include "scribe/util/worker_pool.hpp"

namespace scribe::qsm {

struct WindowParams {
  std::size_t alpha = 2;
  std::size_t beta = 3;
};

struct QsmConfig {
  similarity::JwParams jw;
  WindowParams window;
  /// Suggestions per query; also the seed-group size for relaxation.
  std::size_t k = 10;
  std::size_t maxCandidateExecutions = 20;
  std::size_t fanOut = 4;
  /// Tasks for alternative finding.
  std::size_t parallelism = 1;
  std::size_t prefetchRowCap = 1000;
};

/// Shared inputs of the suggestion module.
struct QsmContext {
  const index::LiteralIndex& index;
  const similarity::Lexicon& lexicon;
  std::vector<rdf::EndpointPtr> endpoints;
  WorkerPool& pool;
  QsmConfig config;
};

/// Predicates scoring at least the threshold against any lexicalization of
/// the predicate's local name; highest score first, ties by URI.
std::vector<TermAlternative> findPredicateAlternatives(const rdf::Term& predicate,
                                                       const std::vector<std::string>& predicateSet,
                                                       const similarity::Lexicon& lexicon,
                                                       const similarity::JwParams& jw, std::size_t P,
                                                       WorkerPool& pool);

/// Tree literals plus residual literals of length |l|-alpha..|l|+beta that
/// score at least the threshold; highest score first, ties by lexical form.
/// A URI is compared through its display name.
std::vector<TermAlternative> findLiteralAlternatives(const rdf::Term& literal, const index::LiteralIndex& index,
                                                     const WindowParams& window, const similarity::JwParams& jw,
                                                     std::size_t P, WorkerPool& pool);

/// One-term substitutions that have answers: up to ceil(k/2) predicate
/// changes followed by up to floor(k/2) literal changes, each prefetched.
std::vector<SuggestedQuery> suggestTermQueries(const rdf::StructuredQuery& query, const QsmContext& ctx,
                                               std::size_t k, QsmTimings* timings = nullptr);

/// "In the triple (...), did you mean X instead of Y? There are N answers available."
std::string substitutionMessage(const rdf::TriplePattern& pattern, const TermAlternative& alt, std::size_t answers);

/// Short human rendering of a term: local name for IRIs, lexical form for literals.
std::string shortTerm(const rdf::Term& t);

}  // namespace scribe::qsm
